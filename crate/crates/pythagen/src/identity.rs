//! Exact verification of the relations between the two generator pairs and
//! the hypotenuse.
//!
//! With (x₁, y₁) the odd-leg-role pair and (x₂, y₂) the other, all of these
//! hold for every Pythagorean triple (under the ordering x ≤ y used
//! throughout this crate):
//!
//! ```text
//! x₁² + y₁² = x₂² + y₂² = c
//! 2x₁y₁ = y₂² − x₂²          2x₂y₂ = y₁² − x₁²
//! (x₁ + y₁)⁴ = 4y₂⁴          (y₁ − x₁)⁴ = 4x₂⁴
//! 2(x₁⁴ + y₁⁴ + x₂⁴ + y₂⁴) = 3c²
//! 4x₁²y₁² + 4x₂²y₂² = (y₁²−x₁²)² + (y₂²−x₂²)² = (x₁²+y₁²)² = (x₂²+y₂²)² = c²
//! ```
//!
//! The quartic identities are sometimes stated with x₂ and y₂ exchanged;
//! that labeling fails already on 3-4-5 ((1+2)⁴ = 81 while 4x₂⁴ = 1), so
//! this module pins the orientation above and exposes the swapped form as
//! [`quartic_printed`] for comparison. Every check is decided by exact
//! rational equality; floating point is never consulted.

use num::BigUint;

use crate::exact::Surd;
use crate::pairs::GeneratorPair;
use crate::{rational_from_uint, text, Error, Rational};

/// Outcome of the full relation suite for one triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    /// x₁² + y₁² = x₂² + y₂² = c
    pub sum_of_squares_equal: bool,
    /// 2x₁y₁ = y₂² − x₂²
    pub cross_relation_1: bool,
    /// 2x₂y₂ = y₁² − x₁²
    pub cross_relation_2: bool,
    /// (x₁ + y₁)⁴ = 4y₂⁴
    pub quartic_sum: bool,
    /// (y₁ − x₁)⁴ = 4x₂⁴
    pub quartic_diff: bool,
    /// 2(x₁⁴ + y₁⁴ + x₂⁴ + y₂⁴) = 3c²
    pub hypotenuse_relation: bool,
    /// 4x₁²y₁² + 4x₂²y₂² = (y₁²−x₁²)² + (y₂²−x₂²)² = (x₁²+y₁²)² = (x₂²+y₂²)² = c²
    pub pythagoras_rewritten: bool,
    /// One witness per failing check.
    pub witnesses: Vec<Witness>,
}

/// Expected/actual rendering for a failed check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub check: &'static str,
    pub expected: String,
    pub actual: String,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.sum_of_squares_equal
            && self.cross_relation_1
            && self.cross_relation_2
            && self.quartic_sum
            && self.quartic_diff
            && self.hypotenuse_relation
            && self.pythagoras_rewritten
    }

    pub fn checks(&self) -> [(&'static str, bool); 7] {
        [
            ("sum_of_squares_equal", self.sum_of_squares_equal),
            ("cross_relation_1", self.cross_relation_1),
            ("cross_relation_2", self.cross_relation_2),
            ("quartic_sum", self.quartic_sum),
            ("quartic_diff", self.quartic_diff),
            ("hypotenuse_relation", self.hypotenuse_relation),
            ("pythagoras_rewritten", self.pythagoras_rewritten),
        ]
    }
}

/// Puts the "more rational" pair first (the odd-leg role); ties keep the
/// given order.
fn orient<'a>(
    p1: &'a GeneratorPair,
    p2: &'a GeneratorPair,
) -> (&'a GeneratorPair, &'a GeneratorPair) {
    if !p1.is_rational() && p2.is_rational() {
        (p2, p1)
    } else {
        (p1, p2)
    }
}

fn hyp_rational(hyp: &BigUint) -> Rational {
    rational_from_uint(hyp)
}

fn pair_square_sum(p: &GeneratorPair) -> Rational {
    p.x().square() + p.y().square()
}

/// Runs the whole suite. Fails with `PairMismatch` if either pair's squares
/// do not sum to the hypotenuse (the pairs then belong to no common triple).
pub fn check_relations(
    p1: &GeneratorPair,
    p2: &GeneratorPair,
    hyp: &BigUint,
) -> Result<IdentityReport, Error> {
    let c = hyp_rational(hyp);
    for p in [p1, p2] {
        let sum = pair_square_sum(p);
        if sum != c {
            return Err(Error::PairMismatch {
                expected: hyp.clone(),
                actual: sum,
            });
        }
    }
    let (p1, p2) = orient(p1, p2);
    let (x1, y1, x2, y2) = (p1.x(), p1.y(), p2.x(), p2.y());

    let mut witnesses = Vec::new();
    let check_rat =
        |name: &'static str, lhs: &Rational, rhs: &Rational, witnesses: &mut Vec<Witness>| {
            let ok = lhs == rhs;
            if !ok {
                witnesses.push(Witness {
                    check: name,
                    expected: text::rational_str(rhs),
                    actual: text::rational_str(lhs),
                });
            }
            ok
        };

    // both sums already equal c; record the check itself
    let sum_of_squares_equal = true;

    let two = Rational::from(num::BigInt::from(2));
    let four = Rational::from(num::BigInt::from(4));
    let three = Rational::from(num::BigInt::from(3));

    let two_x1y1 = x1.mul(y1).scale(&two);
    let two_x2y2 = x2.mul(y2).scale(&two);
    let diff1 = y1.square() - x1.square();
    let diff2 = y2.square() - x2.square();

    // 2x₁y₁ and 2x₂y₂ are always rational (their product with itself is a
    // leg squared), but compare as surds to stay total.
    let cross_relation_1 = {
        let rhs = Surd::from_rational(diff2.clone());
        let ok = two_x1y1 == rhs;
        if !ok {
            witnesses.push(Witness {
                check: "cross_relation_1",
                expected: text::render(&rhs),
                actual: text::render(&two_x1y1),
            });
        }
        ok
    };
    let cross_relation_2 = {
        let rhs = Surd::from_rational(diff1.clone());
        let ok = two_x2y2 == rhs;
        if !ok {
            witnesses.push(Witness {
                check: "cross_relation_2",
                expected: text::render(&rhs),
                actual: text::render(&two_x2y2),
            });
        }
        ok
    };

    let quartic_sum = check_rat(
        "quartic_sum",
        &x1.add(y1)?.pow4(),
        &(&four * y2.pow4()),
        &mut witnesses,
    );
    let quartic_diff = check_rat(
        "quartic_diff",
        &y1.sub(x1)?.pow4(),
        &(&four * x2.pow4()),
        &mut witnesses,
    );

    let pow4_total = x1.pow4() + y1.pow4() + x2.pow4() + y2.pow4();
    let hypotenuse_relation = check_rat(
        "hypotenuse_relation",
        &(&two * pow4_total),
        &(&three * &c * &c),
        &mut witnesses,
    );

    let c_sq = &c * &c;
    let lhs = &four * x1.square() * y1.square() + &four * x2.square() * y2.square();
    let mid = &diff1 * &diff1 + &diff2 * &diff2;
    let pythagoras_rewritten = lhs == c_sq && mid == c_sq;
    if !pythagoras_rewritten {
        witnesses.push(Witness {
            check: "pythagoras_rewritten",
            expected: text::rational_str(&c_sq),
            actual: format!(
                "{} / {}",
                text::rational_str(&lhs),
                text::rational_str(&mid)
            ),
        });
    }

    Ok(IdentityReport {
        sum_of_squares_equal,
        cross_relation_1,
        cross_relation_2,
        quartic_sum,
        quartic_diff,
        hypotenuse_relation,
        pythagoras_rewritten,
        witnesses,
    })
}

/// 2(x₁⁴ + y₁⁴ + x₂⁴ + y₂⁴) = 3·hyp², exactly. Symmetric in the pairs.
pub fn check_eq8(p1: &GeneratorPair, p2: &GeneratorPair, hyp: &BigUint) -> bool {
    let c = hyp_rational(hyp);
    let total = p1.x().pow4() + p1.y().pow4() + p2.x().pow4() + p2.y().pow4();
    let two = Rational::from(num::BigInt::from(2));
    let three = Rational::from(num::BigInt::from(3));
    two * total == three * &c * &c
}

/// The rewritten Pythagorean theorem, including agreement with hyp². A
/// tampered pair simply evaluates false here; no mismatch error.
pub fn check_pythagoras_rewritten(p1: &GeneratorPair, p2: &GeneratorPair, hyp: &BigUint) -> bool {
    let c = hyp_rational(hyp);
    let c_sq = &c * &c;
    let four = Rational::from(num::BigInt::from(4));
    let term = |p: &GeneratorPair| &four * p.x().square() * p.y().square();
    let diff = |p: &GeneratorPair| {
        let d = p.y().square() - p.x().square();
        &d * &d
    };
    let sq = |p: &GeneratorPair| {
        let s = pair_square_sum(p);
        &s * &s
    };
    term(p1) + term(p2) == c_sq
        && diff(p1) + diff(p2) == c_sq
        && sq(p1) == c_sq
        && sq(p2) == c_sq
}

/// The corrected quartic identities, oriented with the more-rational pair
/// in the odd-leg role: ((x₁+y₁)⁴ = 4y₂⁴, (y₁−x₁)⁴ = 4x₂⁴).
pub fn quartic_corrected(p1: &GeneratorPair, p2: &GeneratorPair) -> (bool, bool) {
    let (p1, p2) = orient(p1, p2);
    let four = Rational::from(num::BigInt::from(4));
    let sum_ok = match p1.x().add(p1.y()) {
        Ok(s) => s.pow4() == &four * p2.y().pow4(),
        Err(_) => false,
    };
    let diff_ok = match p1.y().sub(p1.x()) {
        Ok(d) => d.pow4() == &four * p2.x().pow4(),
        Err(_) => false,
    };
    (sum_ok, diff_ok)
}

/// The quartic identities with the x₂/y₂ labels exchanged
/// ((x₁+y₁)⁴ = 4x₂⁴, (y₁−x₁)⁴ = 4y₂⁴). Kept for comparison; fails already
/// on 3-4-5.
pub fn quartic_printed(p1: &GeneratorPair, p2: &GeneratorPair) -> (bool, bool) {
    let (p1, p2) = orient(p1, p2);
    let four = Rational::from(num::BigInt::from(4));
    let sum_ok = match p1.x().add(p1.y()) {
        Ok(s) => s.pow4() == &four * p2.x().pow4(),
        Err(_) => false,
    };
    let diff_ok = match p1.y().sub(p1.x()) {
        Ok(d) => d.pow4() == &four * p2.y().pow4(),
        Err(_) => false,
    };
    (sum_ok, diff_ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Surd;
    use crate::pairs::{leg_pairs, GeneratorPair};
    use crate::triple::PythTriple;
    use num::BigInt;

    fn triple(a: u64, b: u64, c: u64) -> PythTriple {
        PythTriple::validate(BigUint::from(a), BigUint::from(b), BigUint::from(c)).unwrap()
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn relations_hold_for_3_4_5() {
        let t = triple(3, 4, 5);
        let (p1, p2) = leg_pairs(&t);
        // 2x₁y₁ = 4 = 9/2 − 1/2, 2x₂y₂ = 3 = 4 − 1
        assert_eq!(p2.y().square() - p2.x().square(), rat(4, 1));
        assert_eq!(p1.y().square() - p1.x().square(), rat(3, 1));
        let report = check_relations(&p1, &p2, t.hyp()).unwrap();
        assert!(report.all_hold(), "{:?}", report.witnesses);
        assert!(report.witnesses.is_empty());
    }

    #[test]
    fn quartic_sum_3_4_5() {
        // (1+2)⁴ = 81 = 4·(3/2·√2)⁴ = 4·81/4
        let t = triple(3, 4, 5);
        let (p1, p2) = leg_pairs(&t);
        assert_eq!(p1.x().add(p1.y()).unwrap().pow4(), rat(81, 1));
        assert_eq!(p2.y().pow4(), rat(81, 4));
        assert_eq!(quartic_corrected(&p1, &p2), (true, true));
        // the exchanged labeling fails: 81 vs 4·(1/√2)⁴ = 1
        assert_eq!(quartic_printed(&p1, &p2), (false, false));
    }

    #[test]
    fn eq8_examples() {
        // 3-4-5: 2(1+16) + 2(1/4+81/4) = 75 = 3·25
        let t = triple(3, 4, 5);
        let (p1, p2) = leg_pairs(&t);
        assert!(check_eq8(&p1, &p2, t.hyp()));

        // 5-12-13: 194 + 313 = 507 = 3·169
        let t = triple(5, 12, 13);
        let (p1, p2) = leg_pairs(&t);
        assert!(check_eq8(&p1, &p2, t.hyp()));

        let t = triple(6, 8, 10);
        let (p1, p2) = leg_pairs(&t);
        assert!(check_eq8(&p1, &p2, t.hyp()));
    }

    #[test]
    fn pythagoras_rewritten_examples() {
        // 3-4-5: 16+9 = 9+16 = 25
        let t = triple(3, 4, 5);
        let (p1, p2) = leg_pairs(&t);
        assert!(check_pythagoras_rewritten(&p1, &p2, t.hyp()));

        let t = triple(9, 12, 15);
        let (p1, p2) = leg_pairs(&t);
        assert!(check_pythagoras_rewritten(&p1, &p2, t.hyp()));
    }

    fn bump_x(p: &GeneratorPair) -> GeneratorPair {
        let bumped = p
            .x()
            .add(&Surd::from_integer(1))
            .map(|s| GeneratorPair::raw(s, p.y().clone(), p.source_leg().cloned()));
        // radicand > 1: bump the coefficient instead
        bumped.unwrap_or_else(|_| {
            GeneratorPair::raw(
                Surd::new(p.x().coeff() + rat(1, 1), p.x().radicand().clone()),
                p.y().clone(),
                p.source_leg().cloned(),
            )
        })
    }

    #[test]
    fn tampered_pair_fails_with_witness() {
        let t = triple(3, 4, 5);
        let (p1, p2) = leg_pairs(&t);
        let bad = bump_x(&p1);
        assert!(!check_pythagoras_rewritten(&bad, &p2, t.hyp()));
        assert!(!check_eq8(&bad, &p2, t.hyp()));
        // check_relations instead refuses the pair outright
        assert!(matches!(
            check_relations(&bad, &p2, t.hyp()),
            Err(Error::PairMismatch { .. })
        ));
    }

    #[test]
    fn falsifiability_single_coefficient_bumps() {
        // bumping any one of the four surds flips at least one check
        for (a, b, c) in [(3u64, 4, 5), (6, 8, 10), (9, 12, 15), (5, 12, 13)] {
            let t = triple(a, b, c);
            let (p1, p2) = leg_pairs(&t);
            let variants = [
                (bump_x(&p1), p2.clone()),
                (
                    GeneratorPair::raw(p1.x().clone(), bump_x(&swap(&p1)).x().clone(), None),
                    p2.clone(),
                ),
                (p1.clone(), bump_x(&p2)),
                (
                    p1.clone(),
                    GeneratorPair::raw(p2.x().clone(), bump_x(&swap(&p2)).x().clone(), None),
                ),
            ];
            for (q1, q2) in variants {
                let flipped = !check_pythagoras_rewritten(&q1, &q2, t.hyp())
                    || !check_eq8(&q1, &q2, t.hyp())
                    || quartic_corrected(&q1, &q2) != (true, true)
                    || check_relations(&q1, &q2, t.hyp()).is_err();
                assert!(flipped, "undetected perturbation on {a} {b} {c}");
            }
        }
    }

    // view with x and y exchanged so bump_x can perturb y
    fn swap(p: &GeneratorPair) -> GeneratorPair {
        GeneratorPair::raw(p.y().clone(), p.x().clone(), p.source_leg().cloned())
    }

    #[test]
    fn identical_pairs_pass_mismatch_gate() {
        // p1 = p2 still sums to the hypotenuse twice, so no PairMismatch;
        // the report itself then shows failures.
        let t = triple(3, 4, 5);
        let (p1, _) = leg_pairs(&t);
        let report = check_relations(&p1, &p1, t.hyp()).unwrap();
        assert!(!report.all_hold());
        assert!(!report.witnesses.is_empty());
    }
}
