//! Independent cross-checks guarding the exact core: floating-point
//! evaluation of surds, the literal exhaustive search for integer pairs,
//! and the bulk sweep over all triples up to a hypotenuse bound.
//!
//! The exact checks stay authoritative; the float tolerance (1e-9 relative)
//! sits far above double-precision noise at these magnitudes and exists to
//! catch canonicalization bugs, not to decide identities.

use num::ToPrimitive;
use rayon::prelude::*;

use crate::exact::Surd;
use crate::pairs::{analyze, AnalysisReport, PairKind};
use crate::triple::{enumerate, PythTriple};

pub const FLOAT_TOLERANCE: f64 = 1e-9;

/// Check names counted by the sweep: the seven exact identity checks plus
/// the two oracle cross-checks.
pub const CHECK_NAMES: [&str; 9] = [
    "sum_of_squares_equal",
    "cross_relation_1",
    "cross_relation_2",
    "quartic_sum",
    "quartic_diff",
    "hypotenuse_relation",
    "pythagoras_rewritten",
    "integer_pair_oracle",
    "float_oracle",
];

/// A single disagreement found by the sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ViolationRecord {
    pub triple: PythTriple,
    pub check: String,
    pub expected: String,
    pub actual: String,
}

/// Floating-point evaluation of a surd.
pub fn approx_value(s: &Surd) -> f64 {
    let coeff = s.coeff().to_f64().expect("coefficient within f64 range");
    let radicand = s.radicand().to_f64().expect("radicand within f64 range");
    coeff * radicand.sqrt()
}

/// Literal exhaustion: scans 1 ≤ x < y for x² + y² = c with
/// {2xy, y² − x²} = {a, b}. Returns the first (smallest-x) match.
pub fn brute_force_integer_pair(t: &PythTriple) -> Option<(u64, u64)> {
    brute_force_integer_pairs(t).into_iter().next()
}

fn brute_force_integer_pairs(t: &PythTriple) -> Vec<(u64, u64)> {
    let a = t.leg_a().to_u64().expect("oracle is desk-scale only");
    let b = t.leg_b().to_u64().expect("oracle is desk-scale only");
    let c = t.hyp().to_u64().expect("oracle is desk-scale only");
    let legs = |p: u64, q: u64| (p.min(q), p.max(q));
    let want = legs(a, b);
    let mut found = Vec::new();
    for x in 1..=c.isqrt() {
        let rest = c - x * x;
        let y = rest.isqrt();
        if y > x && y * y == rest && legs(2 * x * y, y * y - x * x) == want {
            found.push((x, y));
        }
    }
    found
}

/// Violations recorded by an analysis report's own exact checks.
pub fn report_violations(r: &AnalysisReport) -> Vec<ViolationRecord> {
    r.identities
        .witnesses
        .iter()
        .map(|w| ViolationRecord {
            triple: r.triple.clone(),
            check: w.check.to_string(),
            expected: w.expected.clone(),
            actual: w.actual.clone(),
        })
        .collect()
}

fn rel_err(actual: f64, expected: f64) -> f64 {
    if expected == 0.0 {
        actual.abs()
    } else {
        ((actual - expected) / expected).abs()
    }
}

/// All violations for one triple: exact identity failures, integer-pair
/// disagreement with the exhaustive scan, and float disagreement beyond
/// tolerance.
pub fn triple_violations(t: &PythTriple) -> Vec<ViolationRecord> {
    let report = analyze(t);
    let mut violations = report_violations(&report);

    let exhaustive = brute_force_integer_pairs(t);
    let mut claimed_integer = false;
    for (pair, kind) in &report.pairs {
        if *kind == PairKind::IntegerPair {
            claimed_integer = true;
            let x = pair.x().as_integer().and_then(|n| n.to_u64());
            let y = pair.y().as_integer().and_then(|n| n.to_u64());
            let found = match (x, y) {
                (Some(x), Some(y)) => exhaustive.contains(&(x, y)),
                _ => false,
            };
            if !found {
                violations.push(ViolationRecord {
                    triple: t.clone(),
                    check: "integer_pair_oracle".to_string(),
                    expected: format!("{exhaustive:?}"),
                    actual: format!("({}, {})", pair.x(), pair.y()),
                });
            }
        }
    }
    if !claimed_integer && !exhaustive.is_empty() {
        violations.push(ViolationRecord {
            triple: t.clone(),
            check: "integer_pair_oracle".to_string(),
            expected: format!("{exhaustive:?}"),
            actual: "no IntegerPair classified".to_string(),
        });
    }

    // recompute each member straight from the raw sides in floating point
    let c = t.hyp().to_f64().expect("desk-scale hypotenuse");
    for (pair, _) in &report.pairs {
        let leg = pair
            .source_leg()
            .expect("leg pairs carry their source leg")
            .to_f64()
            .expect("desk-scale leg");
        for (member, direct) in [
            (pair.x(), ((c - leg) / 2.0).sqrt()),
            (pair.y(), ((c + leg) / 2.0).sqrt()),
        ] {
            let err = rel_err(approx_value(member), direct);
            if err > FLOAT_TOLERANCE {
                violations.push(ViolationRecord {
                    triple: t.clone(),
                    check: "float_oracle".to_string(),
                    expected: format!("{direct}"),
                    actual: format!("{} (rel err {err:e})", approx_value(member)),
                });
            }
        }
    }

    violations
}

/// Result of a bulk sweep.
#[derive(Clone, Debug)]
pub struct SweepSummary {
    pub max_hyp: u64,
    pub triples: usize,
    pub violations: Vec<ViolationRecord>,
}

impl SweepSummary {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    /// Pass count for one named check.
    pub fn passed(&self, check: &str) -> usize {
        self.triples
            - self
                .violations
                .iter()
                .filter(|v| v.check == check)
                .count()
    }
}

/// Runs the full analysis and every cross-check on each triple with
/// hypotenuse ≤ `max_hyp`. Empty violation list means a clean sweep.
pub fn sweep_verify(max_hyp: u64) -> SweepSummary {
    sweep_verify_with_jobs(max_hyp, 1)
}

/// Parallel sweep. The triple range is partitioned across `jobs` workers
/// and the violation lists merge back in enumeration order, so the result
/// does not depend on `jobs`.
pub fn sweep_verify_with_jobs(max_hyp: u64, jobs: usize) -> SweepSummary {
    assert!(jobs >= 1);
    let triples = enumerate(max_hyp, false);
    let count = triples.len();
    let violations: Vec<ViolationRecord> = if jobs == 1 {
        triples.iter().flat_map(triple_violations).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            triples
                .par_iter()
                .map(triple_violations)
                .collect::<Vec<_>>()
                .into_iter()
                .flatten()
                .collect()
        })
    };
    SweepSummary {
        max_hyp,
        triples: count,
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pairs::GeneratorPair;
    use crate::{rational_from_uint, Rational};
    use num::{BigInt, BigUint, One};

    fn triple(a: u64, b: u64, c: u64) -> PythTriple {
        PythTriple::validate(BigUint::from(a), BigUint::from(b), BigUint::from(c)).unwrap()
    }

    #[test]
    fn approx_examples() {
        let half_root2 = Surd::new(
            Rational::new(BigInt::from(1), BigInt::from(2)),
            BigUint::from(2u32),
        );
        assert!((approx_value(&half_root2) - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        assert_eq!(approx_value(&Surd::from_integer(2)), 2.0);
        let three_half_root2 = Surd::new(
            Rational::new(BigInt::from(3), BigInt::from(2)),
            BigUint::from(2u32),
        );
        assert!((approx_value(&three_half_root2) - 2.1213203435596424).abs() < 1e-12);
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_integer_pair(&triple(3, 4, 5)), Some((1, 2)));
        assert_eq!(brute_force_integer_pair(&triple(6, 8, 10)), Some((1, 3)));
        assert_eq!(brute_force_integer_pair(&triple(9, 12, 15)), None);
    }

    #[test]
    fn small_sweep_is_clean() {
        let summary = sweep_verify(100);
        assert!(summary.is_clean(), "{:?}", summary.violations);
        assert!(summary.triples > 16);
        for name in CHECK_NAMES {
            assert_eq!(summary.passed(name), summary.triples);
        }
    }

    #[test]
    fn sabotaged_report_is_caught() {
        // harness self-test: a report with a planted witness yields a violation
        let t = triple(3, 4, 5);
        let mut report = crate::pairs::analyze(&t);
        report.identities.quartic_sum = false;
        report.identities.witnesses.push(crate::identity::Witness {
            check: "quartic_sum",
            expected: "81".to_string(),
            actual: "1".to_string(),
        });
        let v = report_violations(&report);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].check, "quartic_sum");
    }

    #[test]
    fn tampered_pair_shows_up_in_triple_checks() {
        // a pair that misclassifies would disagree with the exhaustive scan;
        // simulate by checking the scan itself finds exactly the exact pair
        let t = triple(6, 8, 10);
        let report = crate::pairs::analyze(&t);
        let integer_pair: Vec<&GeneratorPair> = report
            .pairs
            .iter()
            .filter(|(_, k)| *k == PairKind::IntegerPair)
            .map(|(p, _)| p)
            .collect();
        assert_eq!(integer_pair.len(), 1);
        assert_eq!(
            integer_pair[0].x().as_integer().unwrap(),
            BigInt::from(brute_force_integer_pair(&t).unwrap().0)
        );
        assert!(triple_violations(&t).is_empty());
    }

    #[test]
    fn parallel_sweep_matches_serial() {
        let serial = sweep_verify_with_jobs(300, 1);
        let parallel = sweep_verify_with_jobs(300, 4);
        assert_eq!(serial.triples, parallel.triples);
        assert_eq!(serial.violations, parallel.violations);
    }

    #[test]
    fn float_tolerance_catches_planted_error() {
        let one = rational_from_uint(&BigUint::one());
        let s = Surd::from_rational(one);
        assert!(rel_err(approx_value(&s), 1.0 + 1e-6) > FLOAT_TOLERANCE);
    }
}
