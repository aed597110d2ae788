//! Monomial ideals, stability predicates, strongly stable closures and the
//! restricted shadows `BShad`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::binom::binomial_u128;
use crate::error::{contract, Error, Result};
use crate::monomial::{shadow, MonomialSet, SquarefreeMonomial};

/// A squarefree monomial ideal stored through its minimal generators,
/// grouped by degree. The zero ideal has no generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    n: usize,
    generators: BTreeMap<usize, MonomialSet>,
}

impl MonomialIdeal {
    pub fn zero(n: usize) -> Self {
        Self { n, generators: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// `G(I)` by degree.
    pub fn generators_by_degree(&self) -> &BTreeMap<usize, MonomialSet> {
        &self.generators
    }

    /// `G(I)_l`; empty when no generator has degree `l`.
    pub fn generators_in_degree(&self, l: usize) -> impl Iterator<Item = &SquarefreeMonomial> {
        self.generators.get(&l).into_iter().flatten()
    }

    /// All minimal generators, by degree and then slex-descending.
    pub fn generators(&self) -> Vec<SquarefreeMonomial> {
        self.generators.values().flat_map(|g| g.iter().rev().copied()).collect()
    }

    pub fn generator_count(&self) -> usize {
        self.generators.values().map(|g| g.len()).sum()
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.generators.keys().copied()
    }

    /// `indeg I`; `None` for the zero ideal.
    pub fn initial_degree(&self) -> Option<usize> {
        self.generators.keys().next().copied()
    }

    /// `m_l = max { m(u) : u in G(I)_l }`.
    pub fn max_index_in_degree(&self, l: usize) -> Option<usize> {
        self.generators_in_degree(l).map(|u| u.max_index()).max()
    }

    /// A squarefree monomial lies in `I` iff some generator divides it.
    pub fn contains(&self, w: &SquarefreeMonomial) -> bool {
        self.generators
            .range(..=w.degree())
            .any(|(_, g)| g.iter().any(|u| u.divides(w)))
    }

    /// The squarefree monomials of degree `d` in `I`.
    pub fn degree_part(&self, d: usize) -> MonomialSet {
        let mut part = MonomialSet::new();
        for (&e, g) in self.generators.range(..=d) {
            let mut layer: MonomialSet = g.clone();
            for _ in e..d {
                layer = shadow(&layer).expect("equal degrees");
            }
            part.extend(layer);
        }
        part
    }
}

/// Minimal generating set of the ideal spanned by `raw`.
pub fn minimal_generators<I>(n: usize, raw: I) -> Result<MonomialIdeal>
where
    I: IntoIterator<Item = SquarefreeMonomial>,
{
    let mut all: Vec<SquarefreeMonomial> = Vec::new();
    for u in raw {
        if u.n() != n {
            return Err(Error::AmbientMismatch { expected: n, found: u.n() });
        }
        all.push(u);
    }
    all.sort_by_key(|u| (u.degree(), u.bits()));
    all.dedup();
    let mut kept: Vec<SquarefreeMonomial> = Vec::new();
    for u in all {
        if !kept.iter().any(|g| g.divides(&u)) {
            kept.push(u);
        }
    }
    let mut generators: BTreeMap<usize, MonomialSet> = BTreeMap::new();
    for u in kept {
        generators.entry(u.degree()).or_default().insert(u);
    }
    Ok(MonomialIdeal { n, generators })
}

/// An exchange `x_j u / x_i` leaving the ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExchangeWitness {
    pub generator: SquarefreeMonomial,
    /// The variable removed.
    pub removed: usize,
    /// The variable added.
    pub added: usize,
    pub result: SquarefreeMonomial,
}

impl fmt::Display for ExchangeWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "x{} * ({}) / x{} = {} is not in the ideal",
            self.added, self.generator, self.removed, self.result
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StabilityClass {
    pub is_stable: bool,
    pub is_strongly_stable: bool,
    pub is_lex: bool,
}

fn exchange_witness(
    ideal: &MonomialIdeal,
    u: &SquarefreeMonomial,
    i: usize,
) -> Option<ExchangeWitness> {
    (1..i).filter(|&j| !u.contains(j)).find_map(|j| {
        let w = u.exchange(i, j).expect("i in support, j outside");
        (!ideal.contains(&w)).then_some(ExchangeWitness {
            generator: *u,
            removed: i,
            added: j,
            result: w,
        })
    })
}

/// First failing exchange `x_j u / x_{m(u)}` over the generators.
pub fn stable_violation(ideal: &MonomialIdeal) -> Option<ExchangeWitness> {
    ideal
        .generators_by_degree()
        .values()
        .flatten()
        .find_map(|u| exchange_witness(ideal, u, u.max_index()))
}

/// First failing exchange `x_j u / x_i`, `i` anywhere in the support.
pub fn strongly_stable_violation(ideal: &MonomialIdeal) -> Option<ExchangeWitness> {
    ideal
        .generators_by_degree()
        .values()
        .flatten()
        .find_map(|u| u.support().find_map(|i| exchange_witness(ideal, u, i)))
}

/// Number of degree-`d` squarefree monomials over `n` variables that are
/// slex-greater than or equal to `w`.
fn rank_in_degree(n: usize, w: &SquarefreeMonomial) -> u128 {
    let supp = w.support_vec();
    let d = supp.len();
    let mut above = 0u128;
    let mut prev = 0;
    for (s, &i) in supp.iter().enumerate() {
        for v in prev + 1..i {
            above += binomial_u128(n - v, d - s - 1);
        }
        prev = i;
    }
    above + 1
}

fn is_lex(ideal: &MonomialIdeal) -> bool {
    let Some(start) = ideal.initial_degree() else {
        return true;
    };
    let n = ideal.n();
    let mut part = MonomialSet::new();
    for d in start..=n {
        if d > start {
            part = shadow(&part).expect("equal degrees");
        }
        part.extend(ideal.generators_in_degree(d).copied());
        let Some(lowest) = part.first() else {
            continue;
        };
        if rank_in_degree(n, lowest) != part.len() as u128 {
            return false;
        }
    }
    true
}

/// Stability flags; the zero ideal is vacuously lex.
pub fn classify(ideal: &MonomialIdeal) -> StabilityClass {
    StabilityClass {
        is_stable: stable_violation(ideal).is_none(),
        is_strongly_stable: strongly_stable_violation(ideal).is_none(),
        is_lex: is_lex(ideal),
    }
}

fn common_degree<'a, I>(set: I) -> Result<Option<(usize, usize)>>
where
    I: IntoIterator<Item = &'a SquarefreeMonomial>,
{
    let mut shape = None;
    for u in set {
        match shape {
            None => shape = Some((u.n(), u.degree())),
            Some((n, d)) => {
                if u.n() != n {
                    return Err(Error::AmbientMismatch { expected: n, found: u.n() });
                }
                if u.degree() != d {
                    return Err(Error::DegreeMismatch { expected: d, found: u.degree() });
                }
            }
        }
    }
    Ok(shape)
}

/// `B(U)`: the smallest squarefree strongly stable set containing `U`.
pub fn strongly_stable_closure<'a, I>(set: I) -> Result<MonomialSet>
where
    I: IntoIterator<Item = &'a SquarefreeMonomial>,
{
    let seeds: Vec<SquarefreeMonomial> = set.into_iter().copied().collect();
    common_degree(&seeds)?;
    let mut closed: MonomialSet = seeds.iter().copied().collect();
    let mut work = seeds;
    while let Some(u) = work.pop() {
        for i in u.support() {
            for j in (1..i).filter(|&j| !u.contains(j)) {
                let w = u.exchange(i, j).expect("valid exchange");
                if closed.insert(w) {
                    work.push(w);
                }
            }
        }
    }
    Ok(closed)
}

/// `Shad^i(T)`; the empty set once the degree would pass `n`.
pub fn shad_power<'a, I>(set: I, i: usize) -> Result<MonomialSet>
where
    I: IntoIterator<Item = &'a SquarefreeMonomial>,
{
    let mut layer: MonomialSet = set.into_iter().copied().collect();
    common_degree(&layer)?;
    for _ in 0..i {
        if layer.is_empty() {
            break;
        }
        layer = shadow(&layer)?;
    }
    Ok(layer)
}

/// `BShad(U)_{(k2, l2)}`: the degree-`l2` part of `Shad(B(U))` with maximal
/// index at most `k2 + l2`.
///
/// `U` must be equal-degree of degree `l1 < l2`, and every member satisfies
/// `m(u) - l1 > k2`.
pub fn bshad<'a, I>(set: I, k2: usize, l2: usize) -> Result<MonomialSet>
where
    I: IntoIterator<Item = &'a SquarefreeMonomial>,
{
    let seeds: Vec<SquarefreeMonomial> = set.into_iter().copied().collect();
    let Some((n, l1)) = common_degree(&seeds)? else {
        return Ok(MonomialSet::new());
    };
    if l1 >= l2 {
        return contract(alloc::format!("BShad needs l1 < l2, got l1 = {l1}, l2 = {l2}"));
    }
    if k2 + l2 > n {
        return contract(alloc::format!("k2 + l2 = {} exceeds n = {n}", k2 + l2));
    }
    if let Some(u) = seeds.iter().find(|u| u.max_index() < l1 + k2 + 1) {
        return contract(alloc::format!("BShad needs k1 > k2, but m({u}) - {l1} <= {k2}"));
    }
    let bound = k2 + l2;
    // Only members with small max can have multiples under the bound.
    let closure = strongly_stable_closure(&seeds)?;
    let mut layer: MonomialSet = closure.into_iter().filter(|u| u.max_index() <= bound).collect();
    for _ in l1..l2 {
        layer = shadow(&layer)?.into_iter().filter(|u| u.max_index() <= bound).collect();
    }
    Ok(layer)
}

/// Whether `z` (degree at least `deg u`) is a multiple of some element of
/// `B(u)`: true iff the first `deg u` variables of `z` are Borel-below `u`.
pub fn borel_shadow_contains(u: &SquarefreeMonomial, z: &SquarefreeMonomial) -> bool {
    z.degree() >= u.degree() && z.prefix(u.degree()).borel_le(u)
}

/// `min BShad(u)_{(k, l)}` without enumerating the shadow.
///
/// Keeps the variables of `u` below `k + l` and fills up with the largest
/// free indices of `[k + l]`.
pub fn min_bshad(u: &SquarefreeMonomial, k: usize, l: usize) -> Result<SquarefreeMonomial> {
    let l1 = u.degree();
    if l1 == 0 || l1 >= l {
        return contract(alloc::format!("min BShad needs 1 <= deg u < l, got {l1} and {l}"));
    }
    if k + l > u.n() {
        return contract(alloc::format!("k + l = {} exceeds n = {}", k + l, u.n()));
    }
    if u.max_index() < l1 + k + 1 {
        return contract(alloc::format!("min BShad needs k1 > k, but m({u}) - {l1} <= {k}"));
    }
    let mut j = k + l;
    let t = u.support().filter(|&i| i < j).count();
    let mut v = u.prefix(t);
    let mut q = l - t;
    while q > 0 {
        if !v.contains(j) {
            if j == 0 {
                return Err(Error::EmptyRestrictedShadow { u: *u, k, l });
            }
            v = v.times_var(j)?;
            q -= 1;
        }
        j -= 1;
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: usize, s: &[usize]) -> SquarefreeMonomial {
        SquarefreeMonomial::new(n, s).unwrap()
    }

    fn ideal(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
        minimal_generators(n, gens.iter().map(|g| m(n, g))).unwrap()
    }

    #[test]
    fn minimalization() {
        let i = ideal(3, &[&[1, 2], &[1, 2, 3]]);
        assert_eq!(i.generators(), alloc::vec![m(3, &[1, 2])]);
        let i = ideal(3, &[&[1, 2], &[1, 3]]);
        assert_eq!(i.generator_count(), 2);
        assert!(minimal_generators(3, core::iter::empty()).unwrap().is_zero());
    }

    #[test]
    fn classification() {
        let lex = ideal(5, &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5], &[1, 3, 4], &[2, 3, 4, 5]]);
        let c = classify(&lex);
        assert!(c.is_lex && c.is_strongly_stable && c.is_stable);

        let bad = ideal(3, &[&[2, 3]]);
        assert!(!classify(&bad).is_stable);
        let w = stable_violation(&bad).unwrap();
        assert_eq!(w.result, m(3, &[1, 2]));

        let zero = MonomialIdeal::zero(4);
        let c = classify(&zero);
        assert!(c.is_lex && c.is_strongly_stable && c.is_stable);
    }

    #[test]
    fn stable_but_not_strongly_stable() {
        let i = ideal(4, &[&[1, 2], &[2, 3, 4]]);
        let c = classify(&i);
        assert!(c.is_stable && !c.is_strongly_stable && !c.is_lex);
        let w = strongly_stable_violation(&i).unwrap();
        assert_eq!((w.removed, w.added, w.result), (2, 1, m(4, &[1, 3, 4])));
    }

    #[test]
    fn closures() {
        let b = strongly_stable_closure(&[m(3, &[2, 3])]).unwrap();
        let expect: MonomialSet = [m(3, &[1, 2]), m(3, &[1, 3]), m(3, &[2, 3])].into_iter().collect();
        assert_eq!(b, expect);
        let b = strongly_stable_closure(&[m(3, &[1, 2])]).unwrap();
        assert_eq!(b.len(), 1);
        assert!(strongly_stable_closure(&[m(3, &[1]), m(3, &[1, 2])]).is_err());

        let seeds: Vec<_> = (2..=8).map(|i| m(11, &[1, i, 11])).collect();
        assert_eq!(strongly_stable_closure(&seeds).unwrap().len(), 42);
    }

    #[test]
    fn closure_matches_borel_order() {
        let n = 7;
        for bits in 1u64..1 << n {
            let u = SquarefreeMonomial::from_bits(n, bits).unwrap();
            let b = strongly_stable_closure(&[u]).unwrap();
            let expect = (1u64..1 << n)
                .map(|b| SquarefreeMonomial::from_bits(n, b).unwrap())
                .filter(|y| y.borel_le(&u))
                .count();
            assert_eq!(b.len(), expect, "{u}");
            assert!(b.iter().all(|y| y.borel_le(&u)));
        }
    }

    #[test]
    fn shadow_powers() {
        let t = [m(4, &[1, 2])];
        assert_eq!(shad_power(&t, 0).unwrap().len(), 1);
        let t3 = [m(3, &[1, 2])];
        assert_eq!(shad_power(&t3, 1).unwrap().into_iter().collect::<Vec<_>>(), alloc::vec![m(3, &[1, 2, 3])]);
        assert_eq!(shad_power(&t, 2).unwrap().into_iter().collect::<Vec<_>>(), alloc::vec![m(4, &[1, 2, 3, 4])]);
        assert!(shad_power(&t, 3).unwrap().is_empty());
    }

    #[test]
    fn min_bshad_anchors() {
        assert_eq!(min_bshad(&m(11, &[1, 8, 11]), 4, 5).unwrap(), m(11, &[1, 6, 7, 8, 9]));
        assert_eq!(
            min_bshad(&m(11, &[2, 3, 5, 6, 9]), 3, 6).unwrap(),
            m(11, &[2, 3, 5, 6, 8, 9])
        );
        assert_eq!(
            min_bshad(&m(11, &[2, 3, 6, 7, 8, 9]), 2, 9).unwrap(),
            m(11, &[2, 3, 5, 6, 7, 8, 9, 10, 11])
        );
        assert!(min_bshad(&m(11, &[1, 8, 11]), 9, 2).is_err());
    }

    #[test]
    fn bshad_contract() {
        assert!(bshad(core::iter::empty(), 2, 3).unwrap().is_empty());
        assert!(bshad(&[m(6, &[1, 6])], 2, 2).is_err());
        assert!(bshad(&[m(6, &[1, 3])], 2, 3).is_err());
    }

    #[test]
    fn lex_detection() {
        assert!(!classify(&ideal(4, &[&[1, 2], &[1, 3], &[2, 3]])).is_lex);
        assert!(classify(&ideal(4, &[&[1, 2], &[1, 3], &[1, 4]])).is_lex);
    }
}
