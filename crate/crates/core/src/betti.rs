//! Graded Betti numbers of squarefree stable ideals and their corners.
//!
//! For a squarefree stable ideal `I`,
//! `beta_{k, k+l}(I) = sum over u in G(I)_l of C(m(u) - l, k)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::binom::binomial;
use crate::error::{Error, Result};
use crate::stable::{stable_violation, MonomialIdeal};

/// Nonzero graded Betti numbers `beta_{i,j}` of an ideal, keyed by `(i, j)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), BigUint>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `value` to `beta_{i,j}`; zero values are ignored.
    pub fn add(&mut self, i: usize, j: usize, value: BigUint) {
        if value.is_zero() {
            return;
        }
        *self.entries.entry((i, j)).or_default() += value;
    }

    pub fn get(&self, i: usize, j: usize) -> BigUint {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Entry at diagram column `i`, row `r = j - i`.
    pub fn at(&self, column: usize, row: usize) -> BigUint {
        self.get(column, column + row)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(i, j, beta_{i,j})`, all values positive.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &BigUint)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    /// Projective dimension: the last nonzero column.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Regularity: the last nonzero row `j - i`.
    pub fn regularity(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, j)| j - i).max()
    }

    /// First nonzero row `j - i`.
    pub fn first_row(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, j)| j - i).min()
    }

    /// Diagram row `r` as columns `0..=pd`.
    pub fn row(&self, r: usize) -> Vec<BigUint> {
        let pd = self.projective_dimension().unwrap_or(0);
        (0..=pd).map(|i| self.at(i, r)).collect()
    }

    /// Corners read off the table: nonzero `beta_{k,k+l}` with every other
    /// `beta_{i,i+j}`, `i >= k`, `j >= l`, equal to zero.
    pub fn extremal_entries(&self) -> Vec<Corner> {
        let mut out: Vec<Corner> = self
            .entries
            .iter()
            .filter(|(&(k, kl), _)| {
                let l = kl - k;
                !self
                    .entries
                    .keys()
                    .any(|&(i, j)| (i, j) != (k, kl) && i >= k && j - i >= l)
            })
            .map(|(&(k, kl), v)| Corner { k, l: kl - k, value: v.clone() })
            .collect();
        out.sort_by_key(|c| core::cmp::Reverse(c.k));
        out
    }
}

/// A corner `(k, l)` with its value `beta_{k, k+l}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corner {
    pub k: usize,
    pub l: usize,
    pub value: BigUint,
}

/// Corners with `k` strictly decreasing and `l` strictly increasing.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CornerReport {
    pub corners: Vec<Corner>,
}

impl CornerReport {
    pub fn len(&self) -> usize {
        self.corners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }

    pub fn positions(&self) -> Vec<(usize, usize)> {
        self.corners.iter().map(|c| (c.k, c.l)).collect()
    }

    pub fn values(&self) -> Vec<BigUint> {
        self.corners.iter().map(|c| c.value.clone()).collect()
    }

    /// Values as machine integers; corner values never exceed the size of
    /// an A-set, which fits for `n <= 64`.
    pub fn small_values(&self) -> Vec<u64> {
        self.corners
            .iter()
            .map(|c| u64::try_from(&c.value).unwrap_or(u64::MAX))
            .collect()
    }
}

fn require_stable(ideal: &MonomialIdeal) -> Result<()> {
    match stable_violation(ideal) {
        Some(w) => Err(Error::NotStable(w)),
        None => Ok(()),
    }
}

/// The full Betti table of a squarefree stable ideal.
pub fn graded_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    require_stable(ideal)?;
    Ok(betti_unchecked(ideal))
}

fn betti_unchecked(ideal: &MonomialIdeal) -> BettiTable {
    let mut table = BettiTable::new();
    for (&l, gens) in ideal.generators_by_degree() {
        // Group by m(u) - l first; each group contributes a binomial row.
        let mut multiplicity: BTreeMap<usize, u64> = BTreeMap::new();
        for u in gens {
            *multiplicity.entry(u.max_index() - l).or_default() += 1;
        }
        for (&d, &count) in &multiplicity {
            for k in 0..=d {
                table.add(k, k + l, binomial(d, k) * count);
            }
        }
    }
    table
}

/// Corners from the generators alone: `(k, l)` with `k + l = m_l` and
/// `m_j - j < k` for every generator degree `j > l`; the value counts the
/// generators of degree `l` with `m(u) = k + l`.
pub fn corners_by_characterization(ideal: &MonomialIdeal) -> Result<Vec<Corner>> {
    require_stable(ideal)?;
    Ok(corners_from_generators(ideal))
}

fn corners_from_generators(ideal: &MonomialIdeal) -> Vec<Corner> {
    let mut out = Vec::new();
    // Walk degrees from the top, tracking max(m_j - j) over higher degrees.
    let mut best_above: Option<usize> = None;
    let by_degree: Vec<_> = ideal.generators_by_degree().iter().collect();
    for &(&l, gens) in by_degree.iter().rev() {
        let m_l = gens.iter().map(|u| u.max_index()).max().expect("nonempty degree");
        let k = m_l - l;
        if best_above.is_none_or(|b| b < k) {
            let value = gens.iter().filter(|u| u.max_index() == m_l).count();
            out.push(Corner { k, l, value: BigUint::from(value) });
        }
        best_above = Some(best_above.map_or(k, |b| b.max(k)));
    }
    out.sort_by_key(|c| core::cmp::Reverse(c.k));
    out
}

/// Corners and corner values, detected both from the table and from the
/// generators; the two must agree.
pub fn extremal_betti(ideal: &MonomialIdeal) -> Result<CornerReport> {
    let table = graded_betti(ideal)?;
    let scanned = table.extremal_entries();
    let direct = corners_from_generators(ideal);
    if scanned != direct {
        return Err(Error::Inconsistent(format!(
            "corner scan {:?} differs from generator characterization {:?}",
            scanned, direct
        )));
    }
    Ok(CornerReport { corners: direct })
}

/// Degree-sequence data of a stable ideal.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DegreeSequence {
    /// Generator degrees `l_1 < ... < l_t`.
    pub generator_degrees: Vec<usize>,
    /// `m_{l_j} - l_j` per generator degree.
    pub deltas: Vec<usize>,
    /// Indices into the lists above of the degrees carrying a corner.
    pub extremal_subsequence: Vec<usize>,
    pub degree_length: usize,
}

impl DegreeSequence {
    /// The deltas along the extremal subsequence.
    pub fn extremal_deltas(&self) -> Vec<usize> {
        self.extremal_subsequence.iter().map(|&i| self.deltas[i]).collect()
    }
}

pub fn degree_sequence(ideal: &MonomialIdeal) -> Result<DegreeSequence> {
    require_stable(ideal)?;
    let mut seq = DegreeSequence::default();
    for l in ideal.degrees() {
        let m = ideal.max_index_in_degree(l).expect("generator degree");
        seq.generator_degrees.push(l);
        seq.deltas.push(m - l);
    }
    let corners = corners_from_generators(ideal);
    seq.extremal_subsequence = seq
        .generator_degrees
        .iter()
        .enumerate()
        .filter(|(_, &l)| corners.iter().any(|c| c.l == l))
        .map(|(i, _)| i)
        .collect();
    seq.degree_length = seq.extremal_subsequence.len();
    Ok(seq)
}
