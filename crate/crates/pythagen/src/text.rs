//! Textual surd grammar used by the CLI.
//!
//! ```text
//! value    := rational | [rational "*"] "sqrt(" rational ")"
//! rational := integer ["/" positive-integer]
//! ```
//!
//! Rendering is canonical ("p/q*sqrt(r)" with r squarefree, never
//! "sqrt(p/q)") and round-trips through [`parse_value`] to an identical
//! [`Surd`].

use num::{BigInt, BigUint, One, Signed};

use crate::exact::Surd;
use crate::{Error, Rational};

pub fn rational_str(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Canonical rendering of a surd.
pub fn render(s: &Surd) -> String {
    if s.radicand().is_one() {
        return rational_str(s.coeff());
    }
    if s.coeff().is_one() {
        return format!("sqrt({})", s.radicand());
    }
    format!("{}*sqrt({})", rational_str(s.coeff()), s.radicand())
}

/// Parses the grammar above and canonicalizes the result.
pub fn parse_value(input: &str) -> Result<Surd, Error> {
    let mut p = Parser {
        s: input.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    let v = p.value()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.s.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn at_keyword_sqrt(&self) -> bool {
        self.s[self.pos..].starts_with(b"sqrt")
    }

    fn value(&mut self) -> Result<Surd, Error> {
        if self.at_keyword_sqrt() {
            return self.sqrt_term(Rational::one());
        }
        let coeff = self.rational()?;
        self.skip_ws();
        if self.eat(b'*') {
            self.skip_ws();
            if !self.at_keyword_sqrt() {
                return Err(self.error("expected sqrt(...) after '*'"));
            }
            self.sqrt_term(coeff)
        } else {
            Ok(Surd::from_rational(coeff))
        }
    }

    fn sqrt_term(&mut self, coeff: Rational) -> Result<Surd, Error> {
        self.pos += 4; // "sqrt"
        self.skip_ws();
        if !self.eat(b'(') {
            return Err(self.error("expected '(' after sqrt"));
        }
        self.skip_ws();
        let radicand = self.rational()?;
        self.skip_ws();
        if !self.eat(b')') {
            return Err(self.error("expected ')'"));
        }
        if radicand.is_negative() {
            return Err(self.error("negative radicand"));
        }
        let root = Surd::sqrt_rational(&radicand).expect("nonnegative radicand");
        Ok(root.scale(&coeff))
    }

    fn rational(&mut self) -> Result<Rational, Error> {
        let numer = self.integer()?;
        if self.eat(b'/') {
            let start = self.pos;
            let denom = self.integer()?;
            if !denom.is_positive() {
                return Err(Error::Parse {
                    pos: start,
                    msg: "denominator must be a positive integer".to_string(),
                });
            }
            Ok(Rational::new(numer, denom))
        } else {
            Ok(Rational::from(numer))
        }
    }

    fn integer(&mut self) -> Result<BigInt, Error> {
        let negative = self.eat(b'-');
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected digits"));
        }
        let digits = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        let mag: BigUint = digits.parse().unwrap();
        let n = BigInt::from(mag);
        Ok(if negative { -n } else { n })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigUint;

    fn surd(n: i64, d: i64, r: u64) -> Surd {
        Surd::new(
            Rational::new(BigInt::from(n), BigInt::from(d)),
            BigUint::from(r),
        )
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_value("7").unwrap(), Surd::from_integer(7));
        assert_eq!(parse_value("3/2*sqrt(2)").unwrap(), surd(3, 2, 2));
        assert_eq!(parse_value("sqrt(12)").unwrap(), surd(2, 1, 3));
        assert_eq!(parse_value("sqrt(1/2)").unwrap(), surd(1, 2, 2));
        assert_eq!(parse_value("-1/2*sqrt(2)").unwrap(), surd(-1, 2, 2));
        assert_eq!(parse_value("0").unwrap(), Surd::zero());
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse_value("3/2*sqrt(-2)") {
            Err(Error::Parse { pos, msg }) => {
                assert!(msg.contains("negative radicand"), "{msg}");
                assert!(pos > 0);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_value("").is_err());
        assert!(parse_value("sqrt(2").is_err());
        assert!(parse_value("2*").is_err());
        assert!(parse_value("1/0").is_err());
        assert!(parse_value("2 3").is_err());
    }

    #[test]
    fn render_is_canonical() {
        assert_eq!(render(&surd(3, 2, 2)), "3/2*sqrt(2)");
        assert_eq!(render(&surd(1, 1, 2)), "sqrt(2)");
        assert_eq!(render(&surd(-1, 1, 2)), "-1*sqrt(2)");
        assert_eq!(render(&surd(5, 1, 1)), "5");
        assert_eq!(render(&Surd::zero()), "0");
    }

    #[test]
    fn render_parse_round_trip() {
        for (n, d, r) in [(1, 2, 2), (3, 2, 2), (7, 1, 1), (-4, 3, 6), (1, 1, 5)] {
            let s = surd(n, d, r);
            assert_eq!(parse_value(&render(&s)).unwrap(), s);
        }
    }
}
