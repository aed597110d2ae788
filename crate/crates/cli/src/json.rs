//! JSON shapes for specs, Betti tables and reports.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sqfree_core::{BettiTable, CornerReport, CornerSpec, FeasibilityReport, MonomialIdeal, SquarefreeMonomial};

/// `{"n": 11, "corners": [[8,3],[4,5]], "values": [7,5]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecJson {
    pub n: usize,
    pub corners: Vec<(usize, usize)>,
    pub values: Vec<usize>,
}

impl SpecJson {
    pub fn into_spec(self) -> sqfree_core::Result<CornerSpec> {
        CornerSpec::new(self.n, self.corners, self.values)
    }
}

/// Counts as JSON numbers when they fit in `u64`, decimal strings otherwise.
pub fn big(v: &BigUint) -> Value {
    match u64::try_from(v) {
        Ok(small) => json!(small),
        Err(_) => json!(v.to_string()),
    }
}

pub fn monomial(u: &SquarefreeMonomial) -> Value {
    json!(u.to_string())
}

pub fn generators(ideal: &MonomialIdeal) -> Value {
    Value::Array(ideal.generators().iter().map(monomial).collect())
}

/// `[[i, j, beta_ij], ...]` for the nonzero entries.
pub fn betti(table: &BettiTable) -> Value {
    Value::Array(table.iter().map(|(i, j, v)| json!([i, j, big(v)])).collect())
}

pub fn corners(report: &CornerReport) -> Value {
    json!({
        "corners": report.positions(),
        "values": report.values().iter().map(big).collect::<Vec<_>>(),
    })
}

pub fn feasibility(report: &FeasibilityReport) -> Value {
    let opt_mono = |u: &Option<SquarefreeMonomial>| u.as_ref().map_or(Value::Null, monomial);
    let opt_big = |v: &Option<BigUint>| v.as_ref().map_or(Value::Null, big);
    let per_corner: Vec<Value> = report
        .per_corner
        .iter()
        .map(|b| {
            json!({
                "corner": [b.k, b.l],
                "value": b.value,
                "v": opt_mono(&b.v),
                "upper": opt_big(&b.upper),
                "head": opt_mono(&b.head),
                "above": opt_big(&b.above),
                "admissible": opt_big(&b.admissible),
            })
        })
        .collect();
    json!({
        "feasible": report.feasible,
        "failing_corner": report.failing_corner,
        "reason": report.reason,
        "witness": opt_mono(&report.witness),
        "bounds": per_corner,
    })
}
