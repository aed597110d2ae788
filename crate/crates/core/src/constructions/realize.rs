//! Realizing prescribed corners and corner values by a squarefree strongly
//! stable ideal.
//!
//! The bounds come from a backward pass: the last corner reserves the bottom
//! segment of its A-set, and each earlier corner `i` may only use monomials
//! slex-above `v_i`, the last monomial of `A^s(k_i, l_i)` whose restricted
//! shadow misses the top of the segment reserved for corner `i + 1`. A
//! forward pass then picks, for every corner, the slex-greatest monomials of
//! its A-set that the ideal built so far does not contain yet.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::aset::{a_max, a_min, enumerate_a, prev_in_a, ASet};
use crate::betti::extremal_betti;
use crate::counting::count_upto;
use crate::error::{contract, Error, Result};
use crate::monomial::SquarefreeMonomial;
use crate::stable::{borel_shadow_contains, minimal_generators, strongly_stable_closure, MonomialIdeal};

/// Corners `(k_i, l_i)` with target values `a_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerSpec {
    pub n: usize,
    pub corners: Vec<(usize, usize)>,
    pub values: Vec<usize>,
}

impl CornerSpec {
    /// Checks `r >= 1`, `k` strictly decreasing and positive, `l` strictly
    /// increasing and positive, `k + l <= n` and `a_i >= 1`.
    pub fn new(n: usize, corners: Vec<(usize, usize)>, values: Vec<usize>) -> Result<Self> {
        let spec = Self { n, corners, values };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        if n == 0 || n > crate::monomial::MAX_VARS {
            return contract(format!("n = {n} outside 1..={}", crate::monomial::MAX_VARS));
        }
        if self.corners.is_empty() {
            return contract("at least one corner is required");
        }
        if self.corners.len() != self.values.len() {
            return contract(format!(
                "{} corners but {} values",
                self.corners.len(),
                self.values.len()
            ));
        }
        for (i, (&(k, l), &a)) in self.corners.iter().zip(&self.values).enumerate() {
            if k == 0 || l == 0 {
                return contract(format!("corner {} = ({k}, {l}) must have positive entries", i + 1));
            }
            if k + l > n {
                return contract(format!("corner {} = ({k}, {l}) has k + l > n = {n}", i + 1));
            }
            if a == 0 {
                return contract(format!("corner {} has value 0", i + 1));
            }
        }
        for (i, w) in self.corners.windows(2).enumerate() {
            if w[0].0 <= w[1].0 || w[0].1 >= w[1].1 {
                return contract(format!(
                    "corners {} and {} must have k decreasing and l increasing",
                    i + 1,
                    i + 2
                ));
            }
        }
        Ok(())
    }

    pub fn r(&self) -> usize {
        self.corners.len()
    }
}

/// Bounds for one corner. Fields stay `None` when the computation stopped
/// before reaching them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerBound {
    pub k: usize,
    pub l: usize,
    pub value: usize,
    /// `v_i`: the slex-smallest monomial corner `i` may use.
    pub v: Option<SquarefreeMonomial>,
    /// `n_i = |[max A, v_i]|`.
    pub upper: Option<BigUint>,
    /// The slex-greatest monomial of the A-set not yet in the ideal.
    pub head: Option<SquarefreeMonomial>,
    /// `p_i = |[max A, head)|`.
    pub above: Option<BigUint>,
    /// `n_i - p_i`, clamped at 0.
    pub admissible: Option<BigUint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub per_corner: Vec<CornerBound>,
    pub feasible: bool,
    /// 1-based.
    pub failing_corner: Option<usize>,
    pub reason: Option<String>,
    /// The monomial that blocks the failing corner, when there is one.
    pub witness: Option<SquarefreeMonomial>,
}

impl FeasibilityReport {
    fn fail(&mut self, corner: usize, reason: String, witness: Option<SquarefreeMonomial>) {
        self.feasible = false;
        self.failing_corner = Some(corner);
        self.reason = Some(reason);
        self.witness = witness;
    }

    fn into_error(self) -> Error {
        Error::Infeasible {
            corner: self.failing_corner.unwrap_or(0),
            reason: self.reason.clone().unwrap_or_default(),
            report: Some(Box::new(self)),
        }
    }
}

/// Basic monomials per corner, each list slex-descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicMonomialSet {
    pub per_corner: Vec<Vec<SquarefreeMonomial>>,
}

impl BasicMonomialSet {
    pub fn all(&self) -> impl Iterator<Item = &SquarefreeMonomial> {
        self.per_corner.iter().flatten()
    }
}

/// Position in the A-set; `A^s(k, 1) = {x_{k+1}}` is a singleton.
fn position(u: &SquarefreeMonomial) -> Result<BigUint> {
    Ok(count_upto(u)?.0)
}

/// Membership in the ideal generated by the strongly stable closures of
/// `basics`.
fn covered(basics: &[SquarefreeMonomial], z: &SquarefreeMonomial) -> bool {
    basics.iter().any(|b| borel_shadow_contains(b, z))
}

fn to_big(a: usize) -> BigUint {
    BigUint::from(a)
}

/// Runs the backward and forward passes. On success also returns the basic
/// monomials chosen by the forward pass.
fn analyze(spec: &CornerSpec) -> Result<(FeasibilityReport, Vec<Vec<SquarefreeMonomial>>)> {
    spec.validate()?;
    let n = spec.n;
    let r = spec.r();
    let mut report = FeasibilityReport {
        per_corner: spec
            .corners
            .iter()
            .zip(&spec.values)
            .map(|(&(k, l), &a)| CornerBound {
                k,
                l,
                value: a,
                v: None,
                upper: None,
                head: None,
                above: None,
                admissible: None,
            })
            .collect(),
        feasible: true,
        failing_corner: None,
        reason: None,
        witness: None,
    };
    let sets: Vec<ASet> = spec
        .corners
        .iter()
        .map(|&(k, l)| enumerate_a(n, k, l))
        .collect::<Result<_>>()?;

    // Backward pass: v_i and n_i.
    let mut reserved_top: Option<SquarefreeMonomial> = None;
    for i in (0..r).rev() {
        let (k, l) = spec.corners[i];
        let a = spec.values[i];
        let set = &sets[i];
        let v = match reserved_top {
            None => a_min(n, k, l)?,
            Some(z) => match set.members.iter().position(|y| borel_shadow_contains(y, &z)) {
                None => a_min(n, k, l)?,
                Some(0) => {
                    report.fail(
                        i + 1,
                        format!(
                            "every monomial of A({k},{l}) reaches {z}, which corner {} needs",
                            i + 2
                        ),
                        Some(z),
                    );
                    return Ok((report, Vec::new()));
                }
                Some(p) => prev_in_a(&set.members[p])?.expect("not the maximum"),
            },
        };
        let upper = set.position(&v).expect("v lies in its A-set");
        let upper_count = position(&v)?;
        let bound = &mut report.per_corner[i];
        bound.v = Some(v);
        bound.upper = Some(upper_count.clone());
        if i == 0 {
            bound.head = Some(a_max(n, k, l)?);
            bound.above = Some(BigUint::from(0u32));
            bound.admissible = Some(upper_count);
        }
        if a > upper {
            let reason = format!("value {a} exceeds the {upper} monomials of A({k},{l}) available down to {v}");
            report.fail(i + 1, reason, Some(v));
            return Ok((report, Vec::new()));
        }
        reserved_top = Some(set.members[upper - a]);
    }

    // Forward pass: greedy choice of basic monomials.
    let mut basics: Vec<SquarefreeMonomial> = Vec::new();
    let mut per_corner = Vec::with_capacity(r);
    for i in 0..r {
        let (k, l) = spec.corners[i];
        let a = spec.values[i];
        let free: Vec<(usize, SquarefreeMonomial)> = sets[i]
            .members
            .iter()
            .copied()
            .enumerate()
            .filter(|(_, y)| !covered(&basics, y))
            .collect();
        let bound = &mut report.per_corner[i];
        let upper = bound.upper.clone().expect("set by the backward pass");
        let Some(&(head_pos, head)) = free.first() else {
            let reason = format!("A({k},{l}) is already contained in the ideal");
            report.fail(i + 1, reason, None);
            return Ok((report, Vec::new()));
        };
        let above = position(&head)? - 1u32;
        debug_assert_eq!(above, to_big(head_pos));
        let admissible = if above > upper { BigUint::from(0u32) } else { &upper - &above };
        bound.head = Some(head);
        bound.above = Some(above);
        bound.admissible = Some(admissible.clone());
        if to_big(a) > admissible {
            let reason = format!("value {a} exceeds the admissible maximum {admissible}");
            report.fail(i + 1, reason, Some(head));
            return Ok((report, Vec::new()));
        }
        if free.len() < a {
            let reason = format!("only {} monomials of A({k},{l}) are free", free.len());
            report.fail(i + 1, reason, Some(head));
            return Ok((report, Vec::new()));
        }
        let chosen: Vec<SquarefreeMonomial> = free[..a].iter().map(|&(_, y)| y).collect();
        basics.extend(&chosen);
        per_corner.push(chosen);
    }
    Ok((report, per_corner))
}

/// Per-corner bounds `n_i`, `p_i` and `n_i - p_i` for the data in `spec`,
/// with the first corner that cannot be met.
pub fn feasibility_bounds(spec: &CornerSpec) -> Result<FeasibilityReport> {
    analyze(spec).map(|(report, _)| report)
}

/// The basic monomials of the smallest realizing ideal, or an
/// [`Error::Infeasible`] naming the failing corner.
pub fn basic_monomials(spec: &CornerSpec) -> Result<BasicMonomialSet> {
    let (report, per_corner) = analyze(spec)?;
    if !report.feasible {
        return Err(report.into_error());
    }
    Ok(BasicMonomialSet { per_corner })
}

/// The squarefree strongly stable ideal generated by the strongly stable
/// closures of the basic monomials, checked against `spec` through its
/// Betti table.
pub fn construct_ideal(spec: &CornerSpec) -> Result<MonomialIdeal> {
    let basics = basic_monomials(spec)?;
    let mut raw = Vec::new();
    for corner in &basics.per_corner {
        raw.extend(strongly_stable_closure(corner)?);
    }
    let ideal = minimal_generators(spec.n, raw)?;
    let report = extremal_betti(&ideal)?;
    let expected: Vec<u64> = spec.values.iter().map(|&a| a as u64).collect();
    if report.positions() != spec.corners || report.small_values() != expected {
        return Err(Error::Inconsistent(format!(
            "constructed ideal has corners {:?} with values {:?}",
            report.positions(),
            report.small_values()
        )));
    }
    Ok(ideal)
}
