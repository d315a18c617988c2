//! Validated Pythagorean triples, gcd decomposition, and bounded
//! enumeration.

use std::fmt;

use num::{BigUint, Integer, One, Zero};

use crate::Error;

/// A validated Pythagorean triple: positive sides with a² + b² = c².
///
/// Leg order is preserved as given by the caller; nothing here assumes
/// "even leg first".
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PythTriple {
    leg_a: BigUint,
    leg_b: BigUint,
    hyp: BigUint,
}

impl PythTriple {
    pub fn validate(a: BigUint, b: BigUint, c: BigUint) -> Result<Self, Error> {
        if a.is_zero() || b.is_zero() || c.is_zero() {
            return Err(Error::NonPositiveSide);
        }
        if &a * &a + &b * &b != &c * &c {
            return Err(Error::NotATriple { a, b, c });
        }
        // both legs odd would force c² ≡ 2 (mod 4)
        debug_assert!(!(a.is_odd() && b.is_odd()));
        Ok(PythTriple {
            leg_a: a,
            leg_b: b,
            hyp: c,
        })
    }

    /// Accepts the three sides in any order; the largest is the hypotenuse
    /// and the legs come out ascending.
    pub fn from_sides_any_order(x: BigUint, y: BigUint, z: BigUint) -> Result<Self, Error> {
        let mut sides = [x, y, z];
        sides.sort();
        let [a, b, c] = sides;
        PythTriple::validate(a, b, c)
    }

    pub fn leg_a(&self) -> &BigUint {
        &self.leg_a
    }

    pub fn leg_b(&self) -> &BigUint {
        &self.leg_b
    }

    pub fn hyp(&self) -> &BigUint {
        &self.hyp
    }

    pub fn is_primitive(&self) -> bool {
        self.leg_a.gcd(&self.leg_b).gcd(&self.hyp).is_one()
    }

    /// Extracts β = gcd(a, b, c) and the primitive part (m, n, k).
    pub fn decompose(&self) -> TripleDecomposition {
        let beta = self.leg_a.gcd(&self.leg_b).gcd(&self.hyp);
        TripleDecomposition {
            m: &self.leg_a / &beta,
            n: &self.leg_b / &beta,
            k: &self.hyp / &beta,
            beta,
        }
    }
}

impl fmt::Display for PythTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.leg_a, self.leg_b, self.hyp)
    }
}

impl fmt::Debug for PythTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PythTriple({} {} {})", self.leg_a, self.leg_b, self.hyp)
    }
}

/// β and primitive part per a = βm, b = βn, c = βk with gcd(m, n) = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleDecomposition {
    pub beta: BigUint,
    pub m: BigUint,
    pub n: BigUint,
    pub k: BigUint,
}

impl TripleDecomposition {
    pub fn primitive(&self) -> PythTriple {
        PythTriple {
            leg_a: self.m.clone(),
            leg_b: self.n.clone(),
            hyp: self.k.clone(),
        }
    }

    /// Scales the primitive part back up by β.
    pub fn recompose(&self) -> PythTriple {
        PythTriple {
            leg_a: &self.beta * &self.m,
            leg_b: &self.beta * &self.n,
            hyp: &self.beta * &self.k,
        }
    }
}

/// Every Pythagorean triple with hypotenuse ≤ `max_hyp`, each exactly once,
/// ordered by (hypotenuse, smaller leg). Legs come out ascending.
///
/// Primitives come from the coprime opposite-parity generator scan
/// (a = u²−v², b = 2uv, c = u²+v²); multiples by scaling each primitive,
/// unless `primitive_only`.
pub fn enumerate(max_hyp: u64, primitive_only: bool) -> Vec<PythTriple> {
    assert!(max_hyp >= 5, "max_hyp must be at least 5");
    let mut triples: Vec<(u64, u64, u64)> = Vec::new();
    let mut u = 2u64;
    while u * u < max_hyp {
        for v in 1..u {
            if (u - v) % 2 == 1 && u.gcd(&v) == 1 {
                let k = u * u + v * v;
                if k > max_hyp {
                    continue;
                }
                let (m, n) = (u * u - v * v, 2 * u * v);
                let (m, n) = (m.min(n), m.max(n));
                if primitive_only {
                    triples.push((k, m, n));
                } else {
                    for beta in 1..=max_hyp / k {
                        triples.push((beta * k, beta * m, beta * n));
                    }
                }
            }
        }
        u += 1;
    }
    triples.sort_unstable();
    triples
        .into_iter()
        .map(|(c, a, b)| PythTriple {
            leg_a: BigUint::from(a),
            leg_b: BigUint::from(b),
            hyp: BigUint::from(c),
        })
        .collect()
}
