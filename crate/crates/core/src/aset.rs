//! The sets `A^s(k, l)`: squarefree monomials of degree `l` whose largest
//! variable is `x_{k+l}`, listed in descending squarefree-lex order.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{contract, Result};
use crate::monomial::{slex_cmp, SquarefreeMonomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ASet {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    /// Slex-descending.
    pub members: Vec<SquarefreeMonomial>,
}

impl ASet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn first(&self) -> Option<&SquarefreeMonomial> {
        self.members.first()
    }

    pub fn last(&self) -> Option<&SquarefreeMonomial> {
        self.members.last()
    }

    /// 1-based position of `u` in the list.
    pub fn position(&self, u: &SquarefreeMonomial) -> Option<usize> {
        self.members.iter().position(|v| v == u).map(|p| p + 1)
    }
}

pub(crate) fn check_cell(n: usize, k: usize, l: usize) -> Result<()> {
    if l == 0 {
        return contract("A-set degree must be at least 1");
    }
    if k + l > n {
        return contract(alloc::format!("k + l = {} exceeds n = {n}", k + l));
    }
    Ok(())
}

/// `max A^s(k, l) = x_1 ... x_{l-1} x_{k+l}`.
pub fn a_max(n: usize, k: usize, l: usize) -> Result<SquarefreeMonomial> {
    check_cell(n, k, l)?;
    SquarefreeMonomial::interval(n, 1, l - 1)?.joint(&[k + l])
}

/// `min A^s(k, l) = x_{k+1} ... x_{k+l}`.
pub fn a_min(n: usize, k: usize, l: usize) -> Result<SquarefreeMonomial> {
    check_cell(n, k, l)?;
    SquarefreeMonomial::interval(n, k + 1, k + l)
}

/// Enumerates `A^s(k, l)` slex-descending, i.e. the `(l-1)`-subsets of
/// `{1, ..., k+l-1}` in lexicographic order of their sorted tuples, each
/// completed with `k + l`.
pub fn enumerate_a(n: usize, k: usize, l: usize) -> Result<ASet> {
    check_cell(n, k, l)?;
    let top = k + l;
    let r = l - 1;
    let mut members = Vec::new();
    let mut combo: Vec<usize> = (1..=r).collect();
    loop {
        let mut idx = combo.clone();
        idx.push(top);
        members.push(SquarefreeMonomial::new(n, &idx)?);
        // Advance to the next r-subset of [top - 1] in lexicographic order.
        let Some(s) = (0..r).rev().find(|&s| combo[s] < top - 1 - (r - 1 - s)) else {
            break;
        };
        combo[s] += 1;
        for t in s + 1..r {
            combo[t] = combo[t - 1] + 1;
        }
    }
    Ok(ASet { n, k, l, members })
}

fn check_member(u: &SquarefreeMonomial) -> Result<()> {
    if u.degree() == 0 {
        return contract("the constant monomial belongs to no A-set");
    }
    Ok(())
}

/// The slex-greatest element of `A^s(k, l)` strictly below `u`, where
/// `l = deg u` and `k = m(u) - l`. `None` when `u` is gap-free, i.e. the
/// minimum of its set.
pub fn next_in_a(u: &SquarefreeMonomial) -> Result<Option<SquarefreeMonomial>> {
    check_member(u)?;
    let Some(t) = u.gap_profile()?.last_position() else {
        return Ok(None);
    };
    let supp = u.support_vec();
    let l = supp.len();
    let mut next: Vec<usize> = supp[..t - 1].to_vec();
    let mut j = supp[t - 1];
    for _ in 0..=(l - 1 - t) {
        j += 1;
        next.push(j);
    }
    next.push(u.max_index());
    SquarefreeMonomial::new(u.n(), &next).map(Some)
}

/// The slex-smallest element of `A^s(k, l)` strictly above `u`; `None` for
/// `x_1 ... x_{l-1} x_{k+l}`.
///
/// Lowers the support entry at the last position `s <= l - 1` that has room
/// below it by one, and packs the positions after it against `m(u)`.
pub fn prev_in_a(u: &SquarefreeMonomial) -> Result<Option<SquarefreeMonomial>> {
    check_member(u)?;
    let supp = u.support_vec();
    let l = supp.len();
    let m = u.max_index();
    let lower = |s: usize| if s == 0 { 0 } else { supp[s - 1] };
    let Some(s) = (0..l - 1).rev().find(|&s| supp[s] - 1 > lower(s)) else {
        return Ok(None);
    };
    let mut prev: Vec<usize> = supp[..s].to_vec();
    prev.push(supp[s] - 1);
    // Positions s+2 .. l (1-based) take m - l + s + 2 .. m.
    prev.extend(m + s + 2 - l..=m);
    SquarefreeMonomial::new(u.n(), &prev).map(Some)
}

/// The segment `[u, v]` (or the left segment `[u, v)`) of the A-set holding
/// both, slex-descending. `[u, u] = {u}` and `[u, u)` is empty.
pub fn segment(
    u: &SquarefreeMonomial,
    v: &SquarefreeMonomial,
    closed_right: bool,
) -> Result<Vec<SquarefreeMonomial>> {
    check_member(u)?;
    if u.max_index() != v.max_index() {
        return contract(alloc::format!("{u} and {v} lie in different A-sets"));
    }
    if slex_cmp(u, v)? == Ordering::Less {
        return contract(alloc::format!("segment start {u} is slex-smaller than its end {v}"));
    }
    let mut out = Vec::new();
    let mut cur = *u;
    loop {
        if cur == *v {
            if closed_right {
                out.push(cur);
            }
            return Ok(out);
        }
        out.push(cur);
        cur = match next_in_a(&cur)? {
            Some(next) => next,
            None => return contract(alloc::format!("{v} not reached from {u}")),
        };
    }
}
