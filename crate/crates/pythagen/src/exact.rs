//! Canonical exact arithmetic over rationals and quadratic surds.
//!
//! A [`Surd`] is the value `coeff · √radicand` with a rational coefficient
//! and a squarefree positive integer radicand. Values like 1/√2 are always
//! rationalized to this form ((1/2)√2), so structural equality is value
//! equality. Arithmetic stays inside a single radicand class; adding surds
//! over distinct radicands is rejected rather than approximated.

use std::cmp::Ordering;
use std::fmt;

use num::traits::Pow;
use num::{BigInt, BigUint, Integer, One, Signed, ToPrimitive, Zero};

use crate::{rational_from_uint, Error, Rational};

/// Splits `n` into `(square_part, squarefree_part)` with
/// `n = square_part² · squarefree_part`.
///
/// Trial division by 2 and odd d up to ⌊n^(1/3)⌋; the remaining cofactor has
/// at most two prime factors, so it is either a perfect square or already
/// squarefree.
pub fn squarefree_decompose(n: &BigUint) -> (BigUint, BigUint) {
    assert!(!n.is_zero(), "squarefree_decompose requires n >= 1");
    if let Some(n) = n.to_u64() {
        let (s, f) = squarefree_decompose_u64(n);
        return (BigUint::from(s), BigUint::from(f));
    }
    let mut rem = n.clone();
    let mut square = BigUint::one();
    let mut free = BigUint::one();
    let mut d = BigUint::from(2u32);
    while &d * &d * &d <= rem {
        if (&rem % &d).is_zero() {
            let mut exp = 0u32;
            while (&rem % &d).is_zero() {
                rem /= &d;
                exp += 1;
            }
            square *= Pow::pow(&d, exp / 2);
            if exp % 2 == 1 {
                free *= &d;
            }
        }
        d += if d == BigUint::from(2u32) { 1u32 } else { 2u32 };
    }
    let root = rem.sqrt();
    if &root * &root == rem {
        square *= root;
    } else {
        free *= rem;
    }
    (square, free)
}

fn squarefree_decompose_u64(mut n: u64) -> (u64, u64) {
    let mut square = 1u64;
    let mut free = 1u64;
    let mut d = 2u64;
    while d.saturating_mul(d).saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut exp = 0u32;
            while n.is_multiple_of(d) {
                n /= d;
                exp += 1;
            }
            square *= d.pow(exp / 2);
            if exp % 2 == 1 {
                free *= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let root = n.isqrt();
    if root * root == n {
        square *= root;
    } else {
        free *= n;
    }
    (square, free)
}

/// Classification of an exact value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueKind {
    Integer,
    RationalNonInteger,
    Irrational,
}

/// Exact value `coeff · √radicand`, canonical.
///
/// Invariants: the radicand is squarefree and positive, and a zero
/// coefficient forces radicand 1. All constructors and operations preserve
/// them.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Surd {
    coeff: Rational,
    radicand: BigUint,
}

impl Surd {
    /// Canonicalizes `coeff · √radicand` (the radicand need not be
    /// squarefree on entry).
    pub fn new(coeff: Rational, radicand: BigUint) -> Self {
        assert!(!radicand.is_zero(), "radicand must be positive");
        if coeff.is_zero() {
            return Surd {
                coeff,
                radicand: BigUint::one(),
            };
        }
        let (square, free) = squarefree_decompose(&radicand);
        Surd {
            coeff: coeff * rational_from_uint(&square),
            radicand: free,
        }
    }

    pub fn zero() -> Self {
        Surd {
            coeff: Rational::zero(),
            radicand: BigUint::one(),
        }
    }

    pub fn from_rational(q: Rational) -> Self {
        if q.is_zero() {
            return Surd::zero();
        }
        Surd {
            coeff: q,
            radicand: BigUint::one(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Surd::from_rational(Rational::from(BigInt::from(n)))
    }

    /// Exact square root of a nonnegative rational: √(n/d) = √(nd)/d, with
    /// the square part of nd pulled into the coefficient.
    pub fn sqrt_rational(q: &Rational) -> Result<Self, Error> {
        if q.is_negative() {
            return Err(Error::NegativeSqrt(q.clone()));
        }
        if q.is_zero() {
            return Ok(Surd::zero());
        }
        let numer = q.numer().to_biguint().expect("nonnegative numerator");
        let denom = q.denom().to_biguint().expect("positive denominator");
        let (square, free) = squarefree_decompose(&(&numer * &denom));
        Ok(Surd {
            coeff: Rational::new(BigInt::from(square), BigInt::from(denom)),
            radicand: free,
        })
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn radicand(&self) -> &BigUint {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.coeff.is_positive()
    }

    /// The value as a rational, if the radicand is 1.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.radicand.is_one() {
            Some(&self.coeff)
        } else {
            None
        }
    }

    /// The value as an integer, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    pub fn mul(&self, other: &Surd) -> Surd {
        if self.is_zero() || other.is_zero() {
            return Surd::zero();
        }
        // gcd trick: √r₁·√r₂ = g·√((r₁/g)(r₂/g)) with g = gcd(r₁, r₂); the
        // remaining factors are coprime and squarefree, so no re-decomposition.
        let g = self.radicand.gcd(&other.radicand);
        let radicand = (&self.radicand / &g) * (&other.radicand / &g);
        Surd {
            coeff: &self.coeff * &other.coeff * rational_from_uint(&g),
            radicand,
        }
    }

    pub fn scale(&self, q: &Rational) -> Surd {
        if q.is_zero() || self.is_zero() {
            return Surd::zero();
        }
        Surd {
            coeff: &self.coeff * q,
            radicand: self.radicand.clone(),
        }
    }

    pub fn neg(&self) -> Surd {
        Surd {
            coeff: -self.coeff.clone(),
            radicand: self.radicand.clone(),
        }
    }

    /// Exact square, always rational: (q√r)² = q²r.
    pub fn square(&self) -> Rational {
        &self.coeff * &self.coeff * rational_from_uint(&self.radicand)
    }

    /// Exact fourth power.
    pub fn pow4(&self) -> Rational {
        let s = self.square();
        &s * &s
    }

    /// Exact sum; defined only when the radicands agree or one operand is
    /// zero (otherwise the result leaves the representable set).
    pub fn add(&self, other: &Surd) -> Result<Surd, Error> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.radicand != other.radicand {
            return Err(Error::IncompatibleRadicands(
                self.radicand.clone(),
                other.radicand.clone(),
            ));
        }
        let coeff = &self.coeff + &other.coeff;
        if coeff.is_zero() {
            return Ok(Surd::zero());
        }
        Ok(Surd {
            coeff,
            radicand: self.radicand.clone(),
        })
    }

    pub fn sub(&self, other: &Surd) -> Result<Surd, Error> {
        self.add(&other.neg())
    }

    pub fn classify(&self) -> ValueKind {
        if !self.radicand.is_one() {
            ValueKind::Irrational
        } else if self.coeff.is_integer() {
            ValueKind::Integer
        } else {
            ValueKind::RationalNonInteger
        }
    }
}

impl Ord for Surd {
    /// Total order matching the real values, decided by sign and exact
    /// comparison of squares.
    fn cmp(&self, other: &Self) -> Ordering {
        let sa = sign(self);
        let sb = sign(other);
        match sa.cmp(&sb) {
            Ordering::Equal => {}
            ord => return ord,
        }
        match sa {
            0 => Ordering::Equal,
            1 => self.square().cmp(&other.square()),
            _ => other.square().cmp(&self.square()),
        }
    }
}

impl PartialOrd for Surd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn sign(s: &Surd) -> i8 {
    if s.coeff.is_positive() {
        1
    } else if s.coeff.is_negative() {
        -1
    } else {
        0
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::render(self))
    }
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Surd({})", crate::text::render(self))
    }
}
