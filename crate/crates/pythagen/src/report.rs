//! Machine-readable output. All integers are emitted as strings so big
//! hypotenuses survive any JSON consumer losslessly.

use serde_json::{json, Value};

use crate::oracle::{SweepSummary, ViolationRecord, CHECK_NAMES};
use crate::pairs::{AnalysisReport, GeneratorPair, PairKind};
use crate::text;
use crate::triple::PythTriple;

fn triple_json(t: &PythTriple) -> Value {
    json!({
        "a": t.leg_a().to_string(),
        "b": t.leg_b().to_string(),
        "c": t.hyp().to_string(),
    })
}

fn pair_json(p: &GeneratorPair, kind: PairKind) -> Value {
    json!({
        "x": text::render(p.x()),
        "y": text::render(p.y()),
        "kind": kind.as_str(),
        "source_leg": p.source_leg().map(|l| l.to_string()),
    })
}

pub fn violation_json(v: &ViolationRecord) -> Value {
    json!({
        "triple": triple_json(&v.triple),
        "check": v.check,
        "expected": v.expected,
        "actual": v.actual,
    })
}

pub fn analysis_json(r: &AnalysisReport) -> Value {
    let identities: serde_json::Map<String, Value> = r
        .identities
        .checks()
        .iter()
        .map(|(name, ok)| (name.to_string(), Value::Bool(*ok)))
        .collect();
    let violations: Vec<Value> = r
        .identities
        .witnesses
        .iter()
        .map(|w| {
            json!({
                "check": w.check,
                "expected": w.expected,
                "actual": w.actual,
            })
        })
        .collect();
    json!({
        "triple": triple_json(&r.triple),
        "beta": r.decomposition.beta.to_string(),
        "primitive_part": {
            "m": r.decomposition.m.to_string(),
            "n": r.decomposition.n.to_string(),
            "k": r.decomposition.k.to_string(),
        },
        "pairs": [
            pair_json(&r.pairs[0].0, r.pairs[0].1),
            pair_json(&r.pairs[1].0, r.pairs[1].1),
        ],
        "identities": identities,
        "violations": violations,
    })
}

/// One line of `generate --json` output.
pub fn generate_line_json(t: &PythTriple, kinds: [PairKind; 2]) -> Value {
    json!({
        "a": t.leg_a().to_string(),
        "b": t.leg_b().to_string(),
        "c": t.hyp().to_string(),
        "kinds": [kinds[0].as_str(), kinds[1].as_str()],
    })
}

pub fn sweep_json(s: &SweepSummary) -> Value {
    let checks: serde_json::Map<String, Value> = CHECK_NAMES
        .iter()
        .map(|name| (name.to_string(), Value::from(s.passed(name))))
        .collect();
    json!({
        "max_c": s.max_hyp.to_string(),
        "triples": s.triples,
        "checks": checks,
        "violations": s.violations.iter().map(violation_json).collect::<Vec<_>>(),
    })
}
