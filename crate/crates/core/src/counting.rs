//! Positions inside `A^s(k, l)` via nested binomial decompositions.
//!
//! Write `u = x_{i_1} ... x_{i_{l-1}} x_m`. Stepping over the support of
//! `u~ = x_{i_1} ... x_{i_{l-1}}`, level `s` expands
//! `C(m - 1 - i_{s-1}, l - s)` as a Pascal row and keeps its first
//! `i_s - i_{s-1} - 1` terms; these count the members of the A-set that agree
//! with `u` before position `s` and are slex-greater at position `s`.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::aset::enumerate_a;
use crate::binom::binomial;
use crate::error::{contract, Result};
use crate::monomial::SquarefreeMonomial;

/// A symbolic binomial coefficient `C(n, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Binomial {
    pub n: usize,
    pub k: usize,
}

impl Binomial {
    pub fn new(n: usize, k: usize) -> Self {
        Self { n, k }
    }

    pub fn value(&self) -> BigUint {
        binomial(self.n, self.k)
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({},{})", self.n, self.k)
    }
}

/// `C(n, q) = C(n-1, q-1) + C(n-2, q-1) + ... + C(q-1, q-1)`.
pub fn pascal_row(n: usize, q: usize) -> Result<Vec<Binomial>> {
    if q == 0 || n < q {
        return contract(alloc::format!("Pascal row needs n >= q >= 1, got C({n},{q})"));
    }
    Ok((q - 1..n).rev().map(|a| Binomial::new(a, q - 1)).collect())
}

/// One level of the nested decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionStep {
    /// 1-based support position of `u~` handled at this level.
    pub level: usize,
    /// The binomial being expanded.
    pub identity: Binomial,
    /// Its full Pascal row.
    pub terms: Vec<Binomial>,
    /// How many leading terms are kept.
    pub selected: usize,
    /// Sum of the kept terms.
    pub contributed: BigUint,
}

impl DecompositionStep {
    pub fn selected_terms(&self) -> &[Binomial] {
        &self.terms[..self.selected]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionTrace {
    pub monomial: SquarefreeMonomial,
    pub steps: Vec<DecompositionStep>,
    /// Number of binomials summed, counting the final `C(0,0)` for `u`.
    pub term_count: usize,
    pub total: BigUint,
}

impl DecompositionTrace {
    /// All summands in order, ending with `C(0,0)`.
    pub fn summands(&self) -> Vec<Binomial> {
        let mut out: Vec<Binomial> =
            self.steps.iter().flat_map(|s| s.selected_terms().iter().copied()).collect();
        out.push(Binomial::new(0, 0));
        out
    }
}

fn check_countable(u: &SquarefreeMonomial) -> Result<()> {
    if u.degree() == 0 {
        return contract(alloc::format!("{u} has no A-set"));
    }
    Ok(())
}

/// `|[x_1 ... x_{l-1} x_{k+l}, u]|`, the 1-based position of `u` in its
/// A-set, with the decomposition that produced it.
pub fn count_upto(u: &SquarefreeMonomial) -> Result<(BigUint, DecompositionTrace)> {
    check_countable(u)?;
    let supp = u.support_vec();
    let l = supp.len();
    let m = u.max_index();
    let mut steps = Vec::with_capacity(l - 1);
    let mut total = BigUint::from(1u32);
    let mut term_count = 1;
    let mut prev = 0;
    for s in 1..l {
        let i_s = supp[s - 1];
        let identity = Binomial::new(m - 1 - prev, l - s);
        let terms = pascal_row(identity.n, identity.k)?;
        let selected = i_s - prev - 1;
        let contributed: BigUint = terms[..selected].iter().map(Binomial::value).sum();
        total += &contributed;
        term_count += selected;
        steps.push(DecompositionStep { level: s, identity, terms, selected, contributed });
        prev = i_s;
    }
    let trace = DecompositionTrace { monomial: *u, steps, term_count, total: total.clone() };
    Ok((total, trace))
}

/// `|[max A, u)|`.
pub fn count_strictly_above(u: &SquarefreeMonomial) -> Result<BigUint> {
    let (count, _) = count_upto(u)?;
    Ok(count - 1u32)
}

/// Position of `u` by scanning the enumerated A-set.
pub fn oracle_position(u: &SquarefreeMonomial) -> Result<usize> {
    check_countable(u)?;
    let l = u.degree();
    let a = enumerate_a(u.n(), u.max_index() - l, l)?;
    match a.position(u) {
        Some(p) => Ok(p),
        None => contract(alloc::format!("{u} not found in its A-set")),
    }
}
