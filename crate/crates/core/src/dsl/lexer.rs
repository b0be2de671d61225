use num_bigint::BigInt;

use super::{ParseError, ParseErrorKind, SourceSpan};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Int(BigInt),
    Ident(String),
    Sigma,
    Star,
    Caret,
    Vee,
    Hash,
    LParen,
    RParen,
    Comma,
    Eof,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer {n}"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Sigma => "`Sigma`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Vee => "`v`".into(),
            Tok::Hash => "`#`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub span: SourceSpan,
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(start, c)) = chars.peek() {
        let single = |tok| Token {
            tok,
            span: SourceSpan::new(start, start + c.len_utf8()),
        };
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '(' | ')' | ',' | '*' | '×' | '^' | '∧' | '#' | '∨' | 'Σ' | 'v' => {
                chars.next();
                out.push(single(match c {
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ',' => Tok::Comma,
                    '*' | '×' => Tok::Star,
                    '^' | '∧' => Tok::Caret,
                    '#' => Tok::Hash,
                    'Σ' => Tok::Sigma,
                    _ => Tok::Vee,
                }));
            }
            '-' | '0'..='9' => {
                chars.next();
                let mut end = start + 1;
                while let Some(&(i, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = i + 1;
                    chars.next();
                }
                let span = SourceSpan::new(start, end);
                let lit = &text[start..end];
                let value = lit.parse::<BigInt>().map_err(|_| {
                    ParseError::new(
                        ParseErrorKind::Lexical,
                        span,
                        format!("malformed integer `{lit}`"),
                    )
                })?;
                out.push(Token {
                    tok: Tok::Int(value),
                    span,
                });
            }
            // `v` is always the wedge operator, so it never appears inside a word
            c if c.is_ascii_alphabetic() => {
                let mut end = start;
                while let Some(&(i, d)) = chars.peek() {
                    if !d.is_ascii_alphabetic() || d == 'v' {
                        break;
                    }
                    end = i + 1;
                    chars.next();
                }
                let word = &text[start..end];
                let tok = if word == "Sigma" {
                    Tok::Sigma
                } else {
                    Tok::Ident(word.to_string())
                };
                out.push(Token {
                    tok,
                    span: SourceSpan::new(start, end),
                });
            }
            other => {
                return Err(ParseError::new(
                    ParseErrorKind::Lexical,
                    SourceSpan::new(start, start + other.len_utf8()),
                    format!("unexpected character {other:?}"),
                ));
            }
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        span: SourceSpan::new(text.len(), text.len()),
    });
    Ok(out)
}
