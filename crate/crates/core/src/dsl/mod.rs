//! Text syntax for space expressions.
//!
//! ```text
//! expr    := smash (('v' | '#') smash)*      -- v and # never mixed at one level
//! smash   := product ('^' product)*
//! product := unary ('*' unary)*
//! unary   := 'Sigma' unary | primary
//! primary := 'S(' n ')' | 'CP(' n ')' | 'M(' n ',' k ')' | 'SS(' r ')'
//!          | 'punct(' expr ')' | 'halfsmash(' expr ',' expr ')' | '(' expr ')'
//! ```
//!
//! Binary operators are left-associative. `Σ`, `×`, `∧` and `∨` are accepted
//! as input aliases for `Sigma`, `*`, `^` and `v`.

mod lexer;
mod parser;
mod printer;

use std::fmt;

use thiserror::Error;

pub use parser::parse;
pub use printer::print;

/// Byte range `start..end` into the parsed text.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
}

impl SourceSpan {
    pub fn new(start: usize, end: usize) -> Self {
        debug_assert!(start <= end);
        SourceSpan { start, end }
    }

    pub fn join(self, other: SourceSpan) -> Self {
        SourceSpan::new(self.start.min(other.start), self.end.max(other.end))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Lexical,
    UnexpectedToken,
    Arity,
    Domain,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParseErrorKind::Lexical => "lexical error",
            ParseErrorKind::UnexpectedToken => "unexpected token",
            ParseErrorKind::Arity => "arity error",
            ParseErrorKind::Domain => "domain error",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{kind} at {}..{}: {message}", span.start, span.end)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub span: SourceSpan,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(kind: ParseErrorKind, span: SourceSpan, message: String) -> Self {
        ParseError {
            kind,
            span,
            message,
        }
    }

    /// The error message followed by the source line with the span underlined.
    pub fn render(&self, text: &str) -> String {
        let start = text[..self.span.start.min(text.len())].chars().count();
        let width = text
            .get(self.span.start..self.span.end)
            .map_or(0, |s| s.chars().count())
            .max(1);
        format!(
            "{self}\n  {text}\n  {}{}",
            " ".repeat(start),
            "^".repeat(width)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::SpaceExpr;

    fn s(n: u32) -> SpaceExpr {
        SpaceExpr::sphere(n)
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse("CP(2) # S(4)").unwrap(),
            SpaceExpr::connected_sum(SpaceExpr::cp(2), s(4))
        );
        assert_eq!(
            parse("S(3) * S(4)").unwrap(),
            SpaceExpr::product(s(3), s(4))
        );
        assert_eq!(
            parse("halfsmash(punct(CP(2)), S(7))").unwrap(),
            SpaceExpr::half_smash(SpaceExpr::punctured(SpaceExpr::cp(2)), s(7))
        );
        assert_eq!(parse("M(4,3)").unwrap(), SpaceExpr::moore(4, 3));
        assert_eq!(parse("SS(0)").unwrap(), SpaceExpr::sigma_sigma(0));
    }

    #[test]
    fn negative_dimension_is_a_domain_error() {
        let err = parse("S(-1)").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Domain);
        assert_eq!(err.span, SourceSpan::new(2, 4));
        assert_eq!(&"S(-1)"[err.span.start..err.span.end], "-1");
        let err = parse("M(2,0)").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Domain);
        assert_eq!(err.span, SourceSpan::new(2, 3));
        let err = parse("M(3,0)").unwrap_err();
        assert_eq!(err.span, SourceSpan::new(4, 5));
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            parse("S(1) * S(2) ^ S(3)").unwrap(),
            SpaceExpr::smash(SpaceExpr::product(s(1), s(2)), s(3))
        );
        assert_eq!(
            parse("S(1) v S(2) v S(3)").unwrap(),
            SpaceExpr::wedge(SpaceExpr::wedge(s(1), s(2)), s(3))
        );
        assert_eq!(
            parse("Sigma S(1) * S(2)").unwrap(),
            SpaceExpr::product(SpaceExpr::suspension(s(1)), s(2))
        );
        assert_eq!(
            parse("ΣS(1)×S(2)").unwrap(),
            parse("Sigma S(1) * S(2)").unwrap()
        );
        assert_eq!(parse("  ( S(2) )  ").unwrap(), s(2));
    }

    #[test]
    fn mixing_wedge_and_connected_sum_is_rejected() {
        let err = parse("S(4) # S(4) v S(2)").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnexpectedToken);
        assert_eq!(err.span, SourceSpan::new(12, 13));
        assert!(parse("(S(4) # S(4)) v S(2)").is_ok());
    }

    #[test]
    fn arity_and_token_errors() {
        assert_eq!(parse("M(3)").unwrap_err().kind, ParseErrorKind::Arity);
        assert_eq!(parse("S(1,2)").unwrap_err().kind, ParseErrorKind::Arity);
        assert_eq!(
            parse("halfsmash(S(2))").unwrap_err().kind,
            ParseErrorKind::Arity
        );
        assert_eq!(
            parse("S(").unwrap_err().kind,
            ParseErrorKind::UnexpectedToken
        );
        assert_eq!(
            parse("S(2) S(3)").unwrap_err().kind,
            ParseErrorKind::UnexpectedToken
        );
        assert_eq!(
            parse("foo(2)").unwrap_err().kind,
            ParseErrorKind::UnexpectedToken
        );
        assert_eq!(parse("").unwrap_err().kind, ParseErrorKind::UnexpectedToken);
        assert_eq!(
            parse("S(x)").unwrap_err().kind,
            ParseErrorKind::UnexpectedToken
        );
    }

    #[test]
    fn structural_domain_errors() {
        let err = parse("CP(2) # S(3)").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Domain);
        assert_eq!(err.span, SourceSpan::new(0, 12));
        assert_eq!(
            parse("punct(S(2) v S(2))").unwrap_err().kind,
            ParseErrorKind::Domain
        );
        assert_eq!(
            parse("S(1) # S(1)").unwrap_err().kind,
            ParseErrorKind::Domain
        );
    }

    #[test]
    fn print_examples() {
        assert_eq!(print(&SpaceExpr::product(s(3), s(4))), "S(3) * S(4)");
        let e = SpaceExpr::smash(SpaceExpr::wedge(s(1), s(2)), s(3));
        assert_eq!(print(&e), "(S(1) v S(2)) ^ S(3)");
        assert_eq!(parse(&print(&e)).unwrap(), e);
        let right = SpaceExpr::product(s(1), SpaceExpr::product(s(2), s(3)));
        assert_eq!(print(&right), "S(1) * (S(2) * S(3))");
        assert_eq!(
            print(&SpaceExpr::suspension(SpaceExpr::product(s(1), s(2)))),
            "Sigma (S(1) * S(2))"
        );
    }

    #[test]
    fn render_underlines_span() {
        let text = "S(-1)";
        let r = parse(text).unwrap_err().render(text);
        assert!(r.ends_with("  S(-1)\n    ^^"), "{r}");
    }
}
