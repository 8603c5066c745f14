//! Text formats: polynomial expressions and ideal files.
//!
//! Polynomial grammar (whitespace-insensitive):
//!
//! ```text
//! poly   := [ '+' | '-' ] term ( ('+' | '-') term )*
//! term   := factor ( '*' factor )*
//! factor := number | ident [ '^' uint ]
//! number := uint [ '/' uint ]
//! ```
//!
//! Ideal files are plain text: `#` starts a comment, a required `vars:` line
//! names the variables in order (separated by spaces or commas), an optional
//! `weights:` line assigns positive integer weights (unit weights if absent),
//! and every remaining nonempty line is one generator. The coefficient field
//! is not part of the file; callers choose it when parsing.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::{Ring, VarTable};
use num::BigInt;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(input: &str, line: usize) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        match c {
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' | '\u{2212}' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '/' => {
                out.push(Token::Slash);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let n = text.parse::<BigInt>().map_err(|e| Error::Parse {
                    line,
                    msg: format!("bad integer `{text}`: {e}"),
                })?;
                out.push(Token::Int(n));
            }
            _ if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_')
                {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    msg: format!("unexpected character `{c}`"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    ring: &'a Ring,
    line: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            msg: msg.into(),
        }
    }

    fn parse_poly(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ring);
        let mut sign_neg = match self.peek() {
            Some(Token::Plus) => {
                self.bump();
                false
            }
            Some(Token::Minus) => {
                self.bump();
                true
            }
            _ => false,
        };
        loop {
            let term = self.parse_term()?;
            acc = if sign_neg { acc.sub(&term) } else { acc.add(&term) };
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    sign_neg = false;
                }
                Some(Token::Minus) => {
                    self.bump();
                    sign_neg = true;
                }
                None => break,
                Some(t) => return Err(self.err(format!("expected `+` or `-`, found {t:?}"))),
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<Polynomial> {
        let field = self.ring.field();
        let mut coeff = field.one();
        let mut mono = Monomial::one(self.ring.arity());
        loop {
            match self.bump() {
                Some(Token::Int(n)) => {
                    let value = if matches!(self.peek(), Some(Token::Slash)) {
                        self.bump();
                        match self.bump() {
                            Some(Token::Int(d)) => field.from_ratio(&n, &d).map_err(|e| {
                                self.err(format!("bad rational {n}/{d}: {e}"))
                            })?,
                            other => {
                                return Err(self.err(format!(
                                    "expected denominator after `/`, found {other:?}"
                                )))
                            }
                        }
                    } else {
                        field
                            .from_ratio(&n, &BigInt::from(1))
                            .map_err(|e| self.err(format!("bad integer {n}: {e}")))?
                    };
                    coeff = field.mul(&coeff, &value);
                }
                Some(Token::Ident(name)) => {
                    let idx = self
                        .ring
                        .index_of(&name)
                        .ok_or_else(|| self.err(format!("unknown variable `{name}`")))?;
                    let exp: u32 = if matches!(self.peek(), Some(Token::Caret)) {
                        self.bump();
                        match self.bump() {
                            Some(Token::Int(n)) => u32::try_from(&n).map_err(|_| {
                                self.err(format!("exponent {n} out of range"))
                            })?,
                            other => {
                                return Err(self.err(format!(
                                    "expected exponent after `^`, found {other:?}"
                                )))
                            }
                        }
                    } else {
                        1
                    };
                    mono.0[idx] += exp;
                }
                other => return Err(self.err(format!("expected a factor, found {other:?}"))),
            }
            if matches!(self.peek(), Some(Token::Star)) {
                self.bump();
                continue;
            }
            break;
        }
        Ok(Polynomial::term(self.ring, mono, coeff))
    }
}

/// Parse one polynomial expression in the given ring.
pub fn parse_polynomial(ring: &Ring, input: &str) -> Result<Polynomial> {
    parse_polynomial_at(ring, input, 1)
}

fn parse_polynomial_at(ring: &Ring, input: &str, line: usize) -> Result<Polynomial> {
    let tokens = tokenize(input, line)?;
    if tokens.is_empty() {
        return Err(Error::Parse {
            line,
            msg: "empty polynomial".into(),
        });
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        ring,
        line,
    };
    let poly = p.parse_poly()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse {
            line,
            msg: "trailing tokens after polynomial".into(),
        });
    }
    Ok(poly)
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Parse an ideal file into a ring and generator list over the chosen field.
pub fn parse_ideal_file(input: &str, field: FieldSpec) -> Result<(Ring, Vec<Polynomial>)> {
    let mut ring: Option<Ring> = None;
    let mut names: Option<Vec<String>> = None;
    let mut weights: Option<Vec<u64>> = None;
    let mut gens: Vec<Polynomial> = Vec::new();

    for (idx, raw) in input.lines().enumerate() {
        let lineno = idx + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vars:") {
            if names.is_some() {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "duplicate vars: line".into(),
                });
            }
            let ns: Vec<String> = rest
                .split(|c: char| c == ',' || c.is_whitespace())
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect();
            if ns.is_empty() {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "vars: line names no variables".into(),
                });
            }
            names = Some(ns);
            continue;
        }
        if let Some(rest) = line.strip_prefix("weights:") {
            if weights.is_some() {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "duplicate weights: line".into(),
                });
            }
            if ring.is_some() {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "weights: line must precede generators".into(),
                });
            }
            let ws: Result<Vec<u64>> = rest
                .split(|c: char| c == ',' || c.is_whitespace())
                .map(|s| s.trim())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<u64>().map_err(|e| Error::Parse {
                        line: lineno,
                        msg: format!("bad weight `{s}`: {e}"),
                    })
                })
                .collect();
            weights = Some(ws?);
            continue;
        }
        // first generator line: freeze the ring
        if ring.is_none() {
            let ns = names.clone().ok_or(Error::Parse {
                line: lineno,
                msg: "generator before vars: line".into(),
            })?;
            let r = match &weights {
                Some(ws) => {
                    if ws.len() != ns.len() {
                        return Err(Error::Parse {
                            line: lineno,
                            msg: format!(
                                "{} weights for {} variables",
                                ws.len(),
                                ns.len()
                            ),
                        });
                    }
                    VarTable::with_weights(ns, ws.clone(), field)?
                }
                None => VarTable::new(ns, field)?,
            };
            ring = Some(r);
        }
        let r = ring.as_ref().unwrap();
        gens.push(parse_polynomial_at(r, line, lineno)?);
    }

    let ring = match ring {
        Some(r) => r,
        None => {
            // a file may define a ring with no generators (the zero ideal)
            let ns = names.ok_or(Error::Parse {
                line: 0,
                msg: "file contains no vars: line".into(),
            })?;
            match weights {
                Some(ws) => {
                    if ws.len() != ns.len() {
                        return Err(Error::Parse {
                            line: 0,
                            msg: format!("{} weights for {} variables", ws.len(), ns.len()),
                        });
                    }
                    VarTable::with_weights(ns, ws, field)?
                }
                None => VarTable::new(ns, field)?,
            }
        }
    };
    Ok((ring, gens))
}

/// Emit an ideal file; `weights:` appears only when some weight differs from 1.
pub fn emit_ideal_file(ring: &Ring, gens: &[Polynomial]) -> String {
    let mut out = String::new();
    out.push_str("vars: ");
    out.push_str(&ring.names().join(" "));
    out.push('\n');
    if ring.weights().iter().any(|&w| w != 1) {
        out.push_str("weights: ");
        out.push_str(
            &ring
                .weights()
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        );
        out.push('\n');
    }
    for g in gens {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat_ring(names: &[&str]) -> Ring {
        VarTable::new(
            names.iter().map(|s| s.to_string()).collect(),
            FieldSpec::Rat,
        )
        .unwrap()
    }

    #[test]
    fn parses_basic_expressions() {
        let r = rat_ring(&["x", "y", "z"]);
        let p = parse_polynomial(&r, "3/2*x^2*y - z + 1").unwrap();
        assert_eq!(p.to_string(), "3/2*x^2*y - z + 1");
        let q = parse_polynomial(&r, "-x + x").unwrap();
        assert!(q.is_zero());
        // repeated variables in one term multiply
        let c = parse_polynomial(&r, "x*x*y").unwrap();
        assert_eq!(c.to_string(), "x^2*y");
    }

    #[test]
    fn parse_display_round_trip() {
        let r = rat_ring(&["x", "y", "z"]);
        for text in [
            "x^2 - y",
            "x^3 - z",
            "x*y - z",
            "-2*x + 5/3*y^4 - 1",
            "x^2*y + x*z^3 - 7",
        ] {
            let p = parse_polynomial(&r, text).unwrap();
            let q = parse_polynomial(&r, &p.to_string()).unwrap();
            assert_eq!(p, q, "round trip for {text}");
        }
    }

    #[test]
    fn rejects_malformed_input() {
        let r = rat_ring(&["x", "y"]);
        assert!(parse_polynomial(&r, "x +").is_err());
        assert!(parse_polynomial(&r, "w + 1").is_err());
        assert!(parse_polynomial(&r, "x ^ y").is_err());
        assert!(parse_polynomial(&r, "x @ y").is_err());
        assert!(parse_polynomial(&r, "").is_err());
        assert!(parse_polynomial(&r, "3/").is_err());
    }

    #[test]
    fn fp_coefficients_reduce() {
        let r = VarTable::new(vec!["x".into()], FieldSpec::fp(7).unwrap()).unwrap();
        let p = parse_polynomial(&r, "10*x - 1/2").unwrap();
        // 10 = 3 and -1/2 = -4 = 3 mod 7
        assert_eq!(p.to_string(), "3*x + 3");
    }

    #[test]
    fn ideal_file_round_trip() {
        let text = "# sample\nvars: x, y, s\nweights: 1, 1, 2\nx*y - s\nx^2 - y # inline comment\n";
        let (ring, gens) = parse_ideal_file(text, FieldSpec::Rat).unwrap();
        assert_eq!(ring.names(), &["x", "y", "s"]);
        assert_eq!(ring.weights(), &[1, 1, 2]);
        assert_eq!(gens.len(), 2);
        let emitted = emit_ideal_file(&ring, &gens);
        let (ring2, gens2) = parse_ideal_file(&emitted, FieldSpec::Rat).unwrap();
        assert_eq!(ring, ring2);
        assert_eq!(gens, gens2);
    }

    #[test]
    fn ideal_file_unit_weights_omitted() {
        let r = rat_ring(&["x", "y"]);
        let g = parse_polynomial(&r, "x - y").unwrap();
        let emitted = emit_ideal_file(&r, &[g]);
        assert!(!emitted.contains("weights:"));
        assert!(emitted.starts_with("vars: x y\n"));
    }

    #[test]
    fn ideal_file_errors_carry_line_numbers() {
        let text = "vars: x, y\nx - y\nx + w\n";
        let err = parse_ideal_file(text, FieldSpec::Rat).unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected error {other:?}"),
        }
    }
}
