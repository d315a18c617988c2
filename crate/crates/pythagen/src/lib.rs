//! Exact generator-pair analysis of Pythagorean triples.
//!
//! Every Pythagorean triple (a, b, c) is generated by two pairs of numbers:
//! for each leg L, the pair (√((c−L)/2), √((c+L)/2)). One pair is always
//! found from the odd leg, one from the even leg; the members are integers,
//! rationals, or quadratic surds, never anything wilder. This crate recovers
//! both pairs in exact arithmetic (no floating point anywhere on the main
//! path), classifies them, and verifies the algebraic relations that tie the
//! two pairs and the hypotenuse together.

pub mod exact;
pub mod identity;
pub mod oracle;
pub mod pairs;
pub mod report;
pub mod text;
pub mod triple;

use num::{BigInt, BigUint};

/// Exact fraction of arbitrary-precision integers, always reduced with a
/// positive denominator.
pub type Rational = num::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("square root of negative value {0}")]
    NegativeSqrt(Rational),
    #[error("cannot combine surds with radicands {0} and {1}")]
    IncompatibleRadicands(BigUint, BigUint),
    #[error("{a}^2 + {b}^2 != {c}^2")]
    NotATriple { a: BigUint, b: BigUint, c: BigUint },
    #[error("all sides must be positive integers")]
    NonPositiveSide,
    #[error("pair member must be positive, got {0}")]
    NonPositivePairMember(String),
    #[error("pair generates non-integer side {0}")]
    NonIntegerSide(String),
    #[error("pair squares sum to {actual}, expected hypotenuse {expected}")]
    PairMismatch { expected: BigUint, actual: Rational },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub(crate) fn rational_from_uint(n: &BigUint) -> Rational {
    Rational::from(BigInt::from(n.clone()))
}
