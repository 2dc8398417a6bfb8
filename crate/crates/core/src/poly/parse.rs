//! Text form of polynomials.
//!
//! ```text
//! poly  := ['+'|'-'] term (('+'|'-') term)*
//! term  := coef ('*' var)* | var ('*' var)*
//! coef  := integer | integer '/' integer
//! var   := 'x' index ['^' exponent]        (index is 1-based)
//! ```
//!
//! Whitespace is ignored. Output lists terms in descending graded-lex order.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, Poly};
use crate::error::{DunklError, Result};
use crate::rational::{fmt_rational, Rational};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(DunklError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn small(&mut self) -> Result<usize> {
        let start = self.pos;
        let n = self.integer()?;
        usize::try_from(n).map_err(|_| {
            DunklError::Parse {
                pos: start,
                msg: "integer too large".into(),
            }
        })
    }
}

pub fn parse_poly(text: &str, dim: usize) -> Result<Poly> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut out = Poly::zero(dim);
    let mut first = true;
    loop {
        let mut sign = Rational::one();
        if cur.eat(b'-') {
            sign = -sign;
        } else if !cur.eat(b'+') && !first {
            break;
        }
        let (m, c) = parse_term(&mut cur, dim)?;
        out.add_term(m, c * sign);
        first = false;
    }
    if cur.peek().is_some() {
        return cur.err(format!("unexpected character `{}`", cur.src[cur.pos] as char));
    }
    if first {
        return cur.err("empty polynomial");
    }
    Ok(out)
}

fn parse_term(cur: &mut Cursor<'_>, dim: usize) -> Result<(Monomial, Rational)> {
    let mut coeff = Rational::one();
    let mut exps = vec![0u32; dim];
    let mut need_var;
    match cur.peek() {
        Some(c) if c.is_ascii_digit() => {
            let n = cur.integer()?;
            coeff = if cur.eat(b'/') {
                let at = cur.pos;
                let d = cur.integer()?;
                if d.is_zero() {
                    return Err(DunklError::Parse {
                        pos: at,
                        msg: "zero denominator".into(),
                    });
                }
                Rational::new(n, d)
            } else {
                Rational::from_integer(n)
            };
            if !cur.eat(b'*') {
                return Ok((Monomial(exps), coeff));
            }
            need_var = true;
        }
        Some(b'x') => need_var = true,
        _ => return cur.err("expected coefficient or variable"),
    }
    while need_var {
        if !cur.eat(b'x') {
            return cur.err("expected variable `x<index>`");
        }
        let index = cur.small()?;
        if index == 0 || index > dim {
            return Err(DunklError::VariableOutOfRange { index, dim });
        }
        let e = if cur.eat(b'^') { cur.small()? as u32 } else { 1 };
        exps[index - 1] += e;
        need_var = cur.eat(b'*');
    }
    Ok((Monomial(exps), coeff))
}

pub(super) fn format_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let vars: Vec<String> = m
            .exps()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(j, &e)| {
                if e == 1 {
                    format!("x{}", j + 1)
                } else {
                    format!("x{}^{}", j + 1, e)
                }
            })
            .collect();
        if vars.is_empty() {
            out.push_str(&fmt_rational(&abs));
        } else if abs.is_one() {
            out.push_str(&vars.join("*"));
        } else {
            out.push_str(&fmt_rational(&abs));
            out.push('*');
            out.push_str(&vars.join("*"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn parses_examples() {
        let p = parse_poly("3/2*x1^2*x2 - x3", 3).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.coeff(&Monomial(vec![2, 1, 0])), frac(3, 2));
        assert_eq!(p.coeff(&Monomial(vec![0, 0, 1])), frac(-1, 1));

        let q = parse_poly("x1 + x1", 1).unwrap();
        assert_eq!(q.to_string(), "2*x1");

        assert_eq!(
            parse_poly("x0", 2),
            Err(DunklError::VariableOutOfRange { index: 0, dim: 2 })
        );
        assert!(matches!(parse_poly("x3", 2), Err(DunklError::VariableOutOfRange { .. })));
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse_poly("x1 + * x2", 2) {
            Err(DunklError::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_poly("", 2).is_err());
        assert!(parse_poly("1/0", 2).is_err());
        assert!(parse_poly("x1 x2", 2).is_err());
    }

    #[test]
    fn canonical_output() {
        let p = parse_poly(" - x2^2 + 1/3 + x1*x2 - 2*x1^2 ", 2).unwrap();
        assert_eq!(p.to_string(), "-2*x1^2 + x1*x2 - x2^2 + 1/3");
        assert_eq!(Poly::zero(3).to_string(), "0");
        assert_eq!(parse_poly("-x1^0", 1).unwrap().to_string(), "-1");
    }
}
