use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{BiPoly, PolyError, Rat, UniPoly};

/// Parses a polynomial in `x`, `y` with rational coefficients.
///
/// Accepts `+ - * / ^`, parentheses and juxtaposition (`2x`, `x(y+1)`).
/// Division is only allowed by nonzero constants.
pub fn parse_poly(s: &str) -> Result<BiPoly, PolyError> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

/// Parses `n` or `n/d` with an optional sign.
pub fn parse_rat(s: &str) -> Result<Rat, PolyError> {
    let p = parse_poly(s)?;
    p.constant_value().ok_or(PolyError::Parse {
        pos: 0,
        msg: "expected a rational constant".into(),
    })
}

/// Parses a polynomial in the single variable `var` (`'x'` or `'y'`).
pub fn parse_uni(s: &str, var: char) -> Result<UniPoly, PolyError> {
    let p = parse_poly(s)?;
    let u = if var == 'y' { p.as_uni_y() } else { p.as_uni_x() };
    u.ok_or(PolyError::Parse {
        pos: 0,
        msg: format!("expected a polynomial in {var} only"),
    })
}

pub fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> PolyError {
        PolyError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<BiPoly, PolyError> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                b'-' => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<BiPoly, PolyError> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                b'/' => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.unary()?;
                    match d.constant_value() {
                        Some(v) if !v.is_zero() => acc = acc.scale(&v.recip()),
                        _ => {
                            return Err(PolyError::Parse {
                                pos: at,
                                msg: "division by a non-constant or zero".into(),
                            })
                        }
                    }
                }
                b'x' | b'y' | b'(' | b'0'..=b'9' => {
                    acc = &acc * &self.power()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<BiPoly, PolyError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<BiPoly, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<BiPoly, PolyError> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(BiPoly::x())
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(BiPoly::y())
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(BiPoly::constant(Rat::from_integer(n)))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

fn fmt_monomial(i: u32, j: u32) -> String {
    let mut parts = Vec::new();
    match i {
        0 => {}
        1 => parts.push("x".to_string()),
        _ => parts.push(format!("x^{i}")),
    }
    match j {
        0 => {}
        1 => parts.push("y".to_string()),
        _ => parts.push(format!("y^{j}")),
    }
    parts.join("*")
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mono = fmt_monomial(m.x, m.y);
            if mono.is_empty() {
                write!(f, "{}", format_rat(&a))?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", format_rat(&a))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for BiPoly {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    #[test]
    fn round_trip_display() {
        let f = parse_poly("1 - 3/2 x + x^2 y").unwrap();
        assert_eq!(f.to_string(), "x^2*y - 3/2*x + 1");
        assert_eq!(parse_poly(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn precedence_and_parens() {
        assert_eq!(
            parse_poly("-(x+y)^2").unwrap(),
            parse_poly("-x^2 - 2*x*y - y^2").unwrap()
        );
        assert_eq!(parse_poly("2x(y+1)").unwrap(), parse_poly("2*x*y+2*x").unwrap());
        assert_eq!(parse_poly("x/2").unwrap(), parse_poly("1/2*x").unwrap());
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rat("-3/4").unwrap(), ratio(-3, 4));
        assert_eq!(parse_rat("7").unwrap(), rat(7));
        assert_eq!(format_rat(&ratio(6, -4)), "-3/2");
    }

    #[test]
    fn errors_carry_position() {
        assert!(matches!(parse_poly("x + z"), Err(PolyError::Parse { pos: 4, .. })));
        assert!(parse_poly("x/y").is_err());
        assert!(parse_poly("(x").is_err());
        assert!(parse_uni("x + y", 'x').is_err());
    }
}
