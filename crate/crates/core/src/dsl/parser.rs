use num_bigint::BigInt;

use super::lexer::{tokenize, Tok, Token};
use super::{ParseError, ParseErrorKind, SourceSpan};
use crate::spaces::{check_connected_sum, SpaceError, SpaceExpr};

pub fn parse(text: &str) -> Result<SpaceExpr, ParseError> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0 };
    let (e, _) = p.expr()?;
    let t = p.peek();
    if t.tok != Tok::Eof {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(e)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

type Spanned = (SpaceExpr, SourceSpan);

#[derive(Clone, Copy, PartialEq, Eq)]
enum LowOp {
    Wedge,
    ConnectedSum,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        let t = self.peek();
        ParseError::new(
            ParseErrorKind::UnexpectedToken,
            t.span,
            format!("expected {wanted}, found {}", t.tok.describe()),
        )
    }

    fn expect(&mut self, tok: Tok) -> Result<Token, ParseError> {
        if self.peek().tok == tok {
            Ok(self.bump())
        } else {
            Err(self.unexpected(&tok.describe()))
        }
    }

    // `v` and `#` share the lowest level and may not be mixed
    fn expr(&mut self) -> Result<Spanned, ParseError> {
        let (mut lhs, mut span) = self.smash_level()?;
        let mut level_op: Option<LowOp> = None;
        loop {
            let op = match self.peek().tok {
                Tok::Vee => LowOp::Wedge,
                Tok::Hash => LowOp::ConnectedSum,
                _ => break,
            };
            if level_op.is_some_and(|prev| prev != op) {
                let t = self.peek();
                return Err(ParseError::new(
                    ParseErrorKind::UnexpectedToken,
                    t.span,
                    "`v` and `#` cannot be mixed without parentheses".to_string(),
                ));
            }
            level_op = Some(op);
            self.bump();
            let (rhs, rspan) = self.smash_level()?;
            span = span.join(rspan);
            lhs = match op {
                LowOp::Wedge => SpaceExpr::wedge(lhs, rhs),
                LowOp::ConnectedSum => {
                    check_connected_sum(&lhs, &rhs).map_err(|e| domain(span, e))?;
                    SpaceExpr::connected_sum(lhs, rhs)
                }
            };
        }
        Ok((lhs, span))
    }

    fn smash_level(&mut self) -> Result<Spanned, ParseError> {
        let (mut lhs, mut span) = self.product_level()?;
        while self.peek().tok == Tok::Caret {
            self.bump();
            let (rhs, rspan) = self.product_level()?;
            span = span.join(rspan);
            lhs = SpaceExpr::smash(lhs, rhs);
        }
        Ok((lhs, span))
    }

    fn product_level(&mut self) -> Result<Spanned, ParseError> {
        let (mut lhs, mut span) = self.unary()?;
        while self.peek().tok == Tok::Star {
            self.bump();
            let (rhs, rspan) = self.unary()?;
            span = span.join(rspan);
            lhs = SpaceExpr::product(lhs, rhs);
        }
        Ok((lhs, span))
    }

    fn unary(&mut self) -> Result<Spanned, ParseError> {
        if self.peek().tok == Tok::Sigma {
            let start = self.bump().span;
            let (inner, span) = self.unary()?;
            return Ok((SpaceExpr::suspension(inner), start.join(span)));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Spanned, ParseError> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::LParen => {
                self.bump();
                let (e, _) = self.expr()?;
                let close = self.expect(Tok::RParen)?;
                Ok((e, t.span.join(close.span)))
            }
            Tok::Ident(name) => {
                self.bump();
                self.call(name, t.span)
            }
            _ => Err(self.unexpected("a space")),
        }
    }

    fn call(&mut self, name: &str, name_span: SourceSpan) -> Result<Spanned, ParseError> {
        match name {
            "S" | "CP" | "M" | "SS" => {
                let (args, span) = self.int_args(name_span)?;
                let arity = if name == "M" { 2 } else { 1 };
                if args.len() != arity {
                    return Err(ParseError::new(
                        ParseErrorKind::Arity,
                        span,
                        format!("`{name}` takes {arity} argument(s), got {}", args.len()),
                    ));
                }
                let e = match name {
                    "S" => SpaceExpr::Sphere(bounded(&args[0], 1, "sphere dimension")?),
                    "CP" => {
                        SpaceExpr::ComplexProjective(bounded(&args[0], 1, "projective dimension")?)
                    }
                    "SS" => SpaceExpr::SigmaSigma(bounded(&args[0], 0, "summand count")?),
                    _ => SpaceExpr::Moore {
                        n: bounded(&args[0], 3, "Moore dimension")?,
                        k: bounded(&args[1], 1, "Moore order")?,
                    },
                };
                Ok((e, span))
            }
            "punct" | "halfsmash" => {
                let (args, span) = self.expr_args(name_span)?;
                let arity = if name == "punct" { 1 } else { 2 };
                if args.len() != arity {
                    return Err(ParseError::new(
                        ParseErrorKind::Arity,
                        span,
                        format!("`{name}` takes {arity} argument(s), got {}", args.len()),
                    ));
                }
                let mut it = args.into_iter().map(|(e, _)| e);
                let first = it.next().unwrap();
                let e = if name == "punct" {
                    if !first.is_closed_manifold() {
                        return Err(domain(span, SpaceError::NotManifold(first.to_string())));
                    }
                    SpaceExpr::punctured(first)
                } else {
                    SpaceExpr::half_smash(first, it.next().unwrap())
                };
                Ok((e, span))
            }
            _ => Err(ParseError::new(
                ParseErrorKind::UnexpectedToken,
                name_span,
                format!("unknown name `{name}`"),
            )),
        }
    }

    fn int_args(
        &mut self,
        name_span: SourceSpan,
    ) -> Result<(Vec<(BigInt, SourceSpan)>, SourceSpan), ParseError> {
        self.expect(Tok::LParen)?;
        let mut args = Vec::new();
        if self.peek().tok != Tok::RParen {
            loop {
                let t = self.peek().clone();
                match t.tok {
                    Tok::Int(v) => {
                        self.bump();
                        args.push((v, t.span));
                    }
                    _ => return Err(self.unexpected("an integer")),
                }
                if self.peek().tok != Tok::Comma {
                    break;
                }
                self.bump();
            }
        }
        let close = self.expect(Tok::RParen)?;
        Ok((args, name_span.join(close.span)))
    }

    fn expr_args(
        &mut self,
        name_span: SourceSpan,
    ) -> Result<(Vec<Spanned>, SourceSpan), ParseError> {
        self.expect(Tok::LParen)?;
        let mut args = Vec::new();
        if self.peek().tok != Tok::RParen {
            loop {
                args.push(self.expr()?);
                if self.peek().tok != Tok::Comma {
                    break;
                }
                self.bump();
            }
        }
        let close = self.expect(Tok::RParen)?;
        Ok((args, name_span.join(close.span)))
    }
}

fn bounded<T: TryFrom<BigInt>>(
    (value, span): &(BigInt, SourceSpan),
    min: u32,
    what: &str,
) -> Result<T, ParseError> {
    if *value < BigInt::from(min) {
        return Err(ParseError::new(
            ParseErrorKind::Domain,
            *span,
            format!("{what} must be at least {min}, got {value}"),
        ));
    }
    T::try_from(value.clone()).map_err(|_| {
        ParseError::new(
            ParseErrorKind::Domain,
            *span,
            format!("{what} {value} is too large"),
        )
    })
}

fn domain(span: SourceSpan, e: SpaceError) -> ParseError {
    ParseError::new(ParseErrorKind::Domain, span, e.to_string())
}
