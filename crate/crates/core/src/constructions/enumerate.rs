use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::betti::{extremal_betti, CornerReport};
use crate::error::{contract, Result};
use crate::monomial::{shadow, MonomialSet, SquarefreeMonomial, MAX_VARS};
use crate::stable::{minimal_generators, MonomialIdeal};

pub const DEFAULT_ENUMERATION_BOUND: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Ideals with generators below this degree are skipped.
    pub min_initial_degree: usize,
    /// Largest `n` accepted.
    pub max_n: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        Self { min_initial_degree: 1, max_n: DEFAULT_ENUMERATION_BOUND }
    }
}

/// A realized corner configuration with its smallest realizing ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerConfig {
    pub report: CornerReport,
    pub witness: MonomialIdeal,
    /// Number of squarefree strongly stable ideals realizing the data.
    pub realizers: usize,
}

/// Degree-`d` monomials slex-descending, with the indices of their
/// immediate Borel predecessors (`x_{i-1} u / x_i`).
struct Layer {
    members: Vec<SquarefreeMonomial>,
    preds: Vec<Vec<usize>>,
}

fn layer(n: usize, d: usize) -> Layer {
    let mut members = Vec::new();
    let mut cur = SquarefreeMonomial::first_of_degree(n, d).ok();
    while let Some(u) = cur {
        members.push(u);
        cur = u.next_in_degree();
    }
    let index: BTreeMap<SquarefreeMonomial, usize> =
        members.iter().enumerate().map(|(p, &u)| (u, p)).collect();
    let preds = members
        .iter()
        .map(|u| {
            u.support()
                .filter_map(|i| if i > 1 { u.exchange(i, i - 1) } else { None })
                .map(|w| index[&w])
                .collect()
        })
        .collect();
    Layer { members, preds }
}

struct Walker<'a> {
    n: usize,
    min_degree: usize,
    layers: Vec<Layer>,
    visit: &'a mut dyn FnMut(&MonomialIdeal, usize),
}

impl Walker<'_> {
    fn degree(&mut self, d: usize, prev: &MonomialSet, gens: &mut Vec<SquarefreeMonomial>, total: usize) {
        if d > self.n {
            if !gens.is_empty() {
                let ideal = minimal_generators(self.n, gens.iter().copied()).expect("common ambient");
                (self.visit)(&ideal, total);
            }
            return;
        }
        let forced = shadow(prev).expect("equal degrees");
        if d < self.min_degree {
            self.degree(d + 1, &forced, gens, total);
            return;
        }
        let size = self.layers[d].members.len();
        let mut chosen = alloc::vec![false; size];
        self.subsets(d, 0, &forced, &mut chosen, gens, total);
    }

    /// Strongly stable sets of degree `d` containing `forced`, built by
    /// deciding members in slex-descending order.
    fn subsets(
        &mut self,
        d: usize,
        idx: usize,
        forced: &MonomialSet,
        chosen: &mut Vec<bool>,
        gens: &mut Vec<SquarefreeMonomial>,
        total: usize,
    ) {
        let size = chosen.len();
        if idx == size {
            let part: MonomialSet = (0..size)
                .filter(|&p| chosen[p])
                .map(|p| self.layers[d].members[p])
                .collect();
            let before = gens.len();
            gens.extend(part.iter().filter(|u| !forced.contains(u)));
            self.degree(d + 1, &part, gens, total + part.len());
            gens.truncate(before);
            return;
        }
        let u = self.layers[d].members[idx];
        let is_forced = forced.contains(&u);
        let allowed = self.layers[d].preds[idx].iter().all(|&p| chosen[p]);
        if allowed {
            chosen[idx] = true;
            self.subsets(d, idx + 1, forced, chosen, gens, total);
            chosen[idx] = false;
        }
        if !is_forced {
            self.subsets(d, idx + 1, forced, chosen, gens, total);
        }
    }
}

/// Calls `visit` once for every nonzero squarefree strongly stable ideal of
/// `K[x_1, ..., x_n]` generated in degrees at least `min_initial_degree`,
/// together with the number of squarefree monomials the ideal contains.
pub fn strongly_stable_towers(
    n: usize,
    min_initial_degree: usize,
    visit: &mut dyn FnMut(&MonomialIdeal, usize),
) -> Result<()> {
    if n == 0 || n > MAX_VARS {
        return contract(format!("n = {n} outside 1..={MAX_VARS}"));
    }
    let layers = (0..=n).map(|d| layer(n, d)).collect();
    let mut walker = Walker { n, min_degree: min_initial_degree.max(1), layers, visit };
    walker.degree(1, &MonomialSet::new(), &mut Vec::new(), 0);
    Ok(())
}

type Rank = (usize, usize, core::cmp::Reverse<Vec<SquarefreeMonomial>>);

/// Every corner configuration (corners with positive `k` and their values)
/// realized by a squarefree strongly stable ideal of `K[x_1, ..., x_n]`,
/// each with the realizer containing the fewest squarefree monomials (then
/// fewest generators, then slex-greatest generators).
pub fn enumerate_corner_configs(n: usize, options: EnumerateOptions) -> Result<Vec<CornerConfig>> {
    if n < 2 || n > options.max_n {
        return contract(format!(
            "enumeration is exhaustive and only runs for 2 <= n <= {}; raise the bound to go further",
            options.max_n
        ));
    }
    let mut best: BTreeMap<(Vec<(usize, usize)>, Vec<u64>), (Rank, MonomialIdeal, CornerReport, usize)> =
        BTreeMap::new();
    let mut failure = None;
    strongly_stable_towers(n, options.min_initial_degree, &mut |ideal, total| {
        let report = match extremal_betti(ideal) {
            Ok(r) => r,
            Err(e) => {
                failure.get_or_insert(e);
                return;
            }
        };
        if report.corners.iter().any(|c| c.k == 0) {
            return;
        }
        let key = (report.positions(), report.small_values());
        let rank: Rank = (total, ideal.generator_count(), core::cmp::Reverse(ideal.generators()));
        match best.get_mut(&key) {
            Some(entry) => {
                entry.3 += 1;
                if rank < entry.0 {
                    entry.0 = rank;
                    entry.1 = ideal.clone();
                    entry.2 = report;
                }
            }
            None => {
                best.insert(key, (rank, ideal.clone(), report, 1));
            }
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(best
        .into_values()
        .map(|(_, witness, report, realizers)| CornerConfig { report, witness, realizers })
        .collect())
}
