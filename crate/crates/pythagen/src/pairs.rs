//! Generator pairs of a triple.
//!
//! For each leg L of a triple with hypotenuse c, the pair
//! (√((c−L)/2), √((c+L)/2)) generates the triple back through
//! a = 2xy, b = y²−x², c = x²+y². Both members always share one radicand
//! (their product is half the other leg, hence rational), so the whole
//! module stays inside single-radicand surd arithmetic.

use num::{BigInt, BigUint, Integer, One, Zero};

use crate::exact::{Surd, ValueKind};
use crate::identity::{self, IdentityReport};
use crate::triple::{PythTriple, TripleDecomposition};
use crate::{rational_from_uint, text, Error, Rational};

/// Which leg of a triple sits in the formula's ± slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Leg {
    A,
    B,
}

/// A pair (x, y) with 0 < x ≤ y and a shared radicand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorPair {
    x: Surd,
    y: Surd,
    source_leg: Option<BigUint>,
}

/// Classification of a pair by its members.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    IntegerPair,
    RationalPair,
    IrrationalPair,
}

impl PairKind {
    pub fn as_str(self) -> &'static str {
        match self {
            PairKind::IntegerPair => "integer",
            PairKind::RationalPair => "rational",
            PairKind::IrrationalPair => "irrational",
        }
    }
}

impl GeneratorPair {
    /// Builds a pair from two values. Both must be positive and share a
    /// radicand; they are ordered x ≤ y.
    pub fn new(a: Surd, b: Surd) -> Result<Self, Error> {
        for v in [&a, &b] {
            if !v.is_positive() {
                return Err(Error::NonPositivePairMember(text::render(v)));
            }
        }
        if a.radicand() != b.radicand() {
            return Err(Error::IncompatibleRadicands(
                a.radicand().clone(),
                b.radicand().clone(),
            ));
        }
        let (x, y) = if a <= b { (a, b) } else { (b, a) };
        Ok(GeneratorPair {
            x,
            y,
            source_leg: None,
        })
    }

    pub(crate) fn from_parts(x: Surd, y: Surd, source_leg: Option<BigUint>) -> Self {
        debug_assert!(x.is_positive() && x <= y);
        debug_assert_eq!(x.radicand(), y.radicand());
        GeneratorPair { x, y, source_leg }
    }

    /// Unchecked constructor for tests and falsifiability probes.
    #[doc(hidden)]
    pub fn raw(x: Surd, y: Surd, source_leg: Option<BigUint>) -> Self {
        GeneratorPair { x, y, source_leg }
    }

    pub fn x(&self) -> &Surd {
        &self.x
    }

    pub fn y(&self) -> &Surd {
        &self.y
    }

    pub fn source_leg(&self) -> Option<&BigUint> {
        self.source_leg.as_ref()
    }

    /// The shared radicand of both members.
    pub fn radicand(&self) -> &BigUint {
        self.x.radicand()
    }

    pub fn is_rational(&self) -> bool {
        self.radicand().is_one()
    }

    pub fn classify(&self) -> PairKind {
        match (self.x.classify(), self.y.classify()) {
            (ValueKind::Irrational, _) | (_, ValueKind::Irrational) => PairKind::IrrationalPair,
            (ValueKind::Integer, ValueKind::Integer) => PairKind::IntegerPair,
            _ => PairKind::RationalPair,
        }
    }
}

/// Recovers the generator pair of `t` seeded by the given leg:
/// x = √((c−L)/2), y = √((c+L)/2).
pub fn pair_from_leg(t: &PythTriple, leg: Leg) -> GeneratorPair {
    let l = match leg {
        Leg::A => t.leg_a(),
        Leg::B => t.leg_b(),
    };
    let c = t.hyp();
    let half = |n: BigUint| Rational::new(BigInt::from(n), BigInt::from(2));
    let x = Surd::sqrt_rational(&half(c - l)).expect("c > leg");
    let y = Surd::sqrt_rational(&half(c + l)).expect("nonnegative");
    GeneratorPair::from_parts(x, y, Some(l.clone()))
}

/// Both leg pairs, ordered by leg value ascending.
pub fn leg_pairs(t: &PythTriple) -> (GeneratorPair, GeneratorPair) {
    let pa = pair_from_leg(t, Leg::A);
    let pb = pair_from_leg(t, Leg::B);
    if t.leg_a() <= t.leg_b() {
        (pa, pb)
    } else {
        (pb, pa)
    }
}

/// Maps a pair back to the triple (2xy, y²−x², x²+y²).
pub fn triple_from_pair(p: &GeneratorPair) -> Result<PythTriple, Error> {
    let xy = p.x().mul(p.y());
    let two = Rational::from(BigInt::from(2));
    let side_a = match xy.as_rational() {
        Some(q) => q * &two,
        None => return Err(Error::NonIntegerSide(text::render(&xy.scale(&two)))),
    };
    let side_b = p.y().square() - p.x().square();
    let side_c = p.x().square() + p.y().square();
    let as_positive_int = |q: &Rational| -> Result<BigUint, Error> {
        if q.is_integer() {
            if let Some(n) = q.to_integer().to_biguint() {
                if !n.is_zero() {
                    return Ok(n);
                }
            }
        }
        Err(Error::NonIntegerSide(text::rational_str(q)))
    };
    PythTriple::validate(
        as_positive_int(&side_a)?,
        as_positive_int(&side_b)?,
        as_positive_int(&side_c)?,
    )
}

/// The two scaled pairs of a decomposed triple, derived from the primitive
/// part's odd-leg pair (x₁, y₁) and the common divisor β:
/// pair3 = ((y₁−x₁)√(β/2), (x₁+y₁)√(β/2)) and pair4 = (x₁√β, y₁√β).
///
/// Both regenerate the full triple; with β = 1 they degenerate to the two
/// leg pairs of the primitive itself.
pub fn scaled_pairs(d: &TripleDecomposition) -> (GeneratorPair, GeneratorPair) {
    let prim = d.primitive();
    let (odd_leg, even_leg) = if prim.leg_a().is_odd() {
        (Leg::A, Leg::B)
    } else {
        (Leg::B, Leg::A)
    };
    let p1 = pair_from_leg(&prim, odd_leg);
    let odd_val = match odd_leg {
        Leg::A => prim.leg_a().clone(),
        Leg::B => prim.leg_b().clone(),
    };
    let even_val = match even_leg {
        Leg::A => prim.leg_a().clone(),
        Leg::B => prim.leg_b().clone(),
    };

    let sqrt_beta = Surd::sqrt_rational(&rational_from_uint(&d.beta)).expect("beta >= 1");
    let beta_half = Rational::new(BigInt::from(d.beta.clone()), BigInt::from(2));
    let sqrt_beta_half = Surd::sqrt_rational(&beta_half).expect("beta >= 1");

    let x4 = p1.x().mul(&sqrt_beta);
    let y4 = p1.y().mul(&sqrt_beta);
    let pair4 = GeneratorPair::from_parts(x4, y4, Some(&d.beta * odd_val));

    let diff = p1.y().sub(p1.x()).expect("integer pair members");
    let sum = p1.x().add(p1.y()).expect("integer pair members");
    let x3 = diff.mul(&sqrt_beta_half);
    let y3 = sum.mul(&sqrt_beta_half);
    let pair3 = GeneratorPair::from_parts(x3, y3, Some(&d.beta * even_val));

    (pair3, pair4)
}

/// Full per-triple result: decomposition, both leg pairs with their kinds,
/// scaled pairs when β > 1, and the identity suite.
#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub triple: PythTriple,
    pub decomposition: TripleDecomposition,
    /// Leg pairs with kinds, ordered by leg value ascending.
    pub pairs: [(GeneratorPair, PairKind); 2],
    /// (pair3, pair4) when β > 1.
    pub scaled: Option<(GeneratorPair, GeneratorPair)>,
    pub identities: IdentityReport,
}

/// Computes everything this crate knows about one triple. Both pairs are
/// evaluated and classified; no parity is assumed up front.
pub fn analyze(t: &PythTriple) -> AnalysisReport {
    let decomposition = t.decompose();
    let (p1, p2) = leg_pairs(t);
    let identities =
        identity::check_relations(&p1, &p2, t.hyp()).expect("leg pairs always match the hypotenuse");
    let scaled = (!decomposition.beta.is_one()).then(|| scaled_pairs(&decomposition));
    let k1 = p1.classify();
    let k2 = p2.classify();
    AnalysisReport {
        triple: t.clone(),
        decomposition,
        pairs: [(p1, k1), (p2, k2)],
        scaled,
        identities,
    }
}
