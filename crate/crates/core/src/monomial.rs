//! Squarefree monomials as bit sets over `x_1, ..., x_n`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{contract, Error, Result};

/// Largest supported number of variables.
pub const MAX_VARS: usize = 64;

/// A squarefree monomial `x_{i_1} ... x_{i_d}` over `n` variables.
///
/// Bit `i - 1` of the support word is set iff `x_i` divides the monomial.
/// The degree-0 monomial is the constant `1`, with `max = min = 0`.
///
/// `Ord` sorts by ambient size, then degree, then squarefree-lex order with
/// the slex-greater monomial comparing as `Greater`. Iterating a
/// [`MonomialSet`] therefore goes from the slex-smallest element upward.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SquarefreeMonomial {
    n: u8,
    bits: u64,
}

/// Monomials sorted slex-ascending (see the `Ord` impl).
pub type MonomialSet = BTreeSet<SquarefreeMonomial>;

fn mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VARS {
        return contract(alloc::format!("ambient size n = {n} outside 1..={MAX_VARS}"));
    }
    Ok(())
}

impl SquarefreeMonomial {
    /// Builds a monomial from 1-based variable indices (any order).
    pub fn new(n: usize, indices: &[usize]) -> Result<Self> {
        check_n(n)?;
        let mut bits = 0u64;
        for &i in indices {
            if i == 0 || i > n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            let b = 1u64 << (i - 1);
            if bits & b != 0 {
                return Err(Error::NotSquarefree { index: i });
            }
            bits |= b;
        }
        Ok(Self { n: n as u8, bits })
    }

    pub fn from_bits(n: usize, bits: u64) -> Result<Self> {
        check_n(n)?;
        if bits & !mask(n) != 0 {
            let index = 64 - (bits & !mask(n)).leading_zeros() as usize;
            return Err(Error::IndexOutOfRange { index, n });
        }
        Ok(Self { n: n as u8, bits })
    }

    /// The constant monomial `1`.
    pub fn one(n: usize) -> Result<Self> {
        Self::from_bits(n, 0)
    }

    /// `x_a x_{a+1} ... x_b`; empty when `a > b`.
    pub fn interval(n: usize, a: usize, b: usize) -> Result<Self> {
        check_n(n)?;
        if a > b {
            return Self::one(n);
        }
        if a == 0 || b > n {
            return Err(Error::IndexOutOfRange { index: if a == 0 { 0 } else { b }, n });
        }
        Ok(Self { n: n as u8, bits: mask(b) & !mask(a - 1) })
    }

    pub(crate) fn from_bits_unchecked(n: usize, bits: u64) -> Self {
        debug_assert!(bits & !mask(n) == 0);
        Self { n: n as u8, bits }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// `m(u)`, the largest index in the support; 0 for the constant.
    #[inline]
    pub fn max_index(&self) -> usize {
        64 - self.bits.leading_zeros() as usize
    }

    /// `min(u)`; 0 for the constant.
    #[inline]
    pub fn min_index(&self) -> usize {
        if self.bits == 0 {
            0
        } else {
            self.bits.trailing_zeros() as usize + 1
        }
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        (1..=64).contains(&i) && self.bits & (1u64 << (i - 1)) != 0
    }

    #[inline]
    pub fn divides(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    /// Ascending support indices.
    pub fn support(&self) -> Support {
        Support { bits: self.bits }
    }

    pub fn support_vec(&self) -> Vec<usize> {
        self.support().collect()
    }

    /// Index at 1-based position `pos` of the support.
    pub fn index_at(&self, pos: usize) -> Option<usize> {
        if pos == 0 {
            return None;
        }
        self.support().nth(pos - 1)
    }

    /// The first `t` variables of the monomial.
    pub fn prefix(&self, t: usize) -> Self {
        let mut bits = self.bits;
        let mut out = 0u64;
        for _ in 0..t {
            if bits == 0 {
                break;
            }
            let low = bits & bits.wrapping_neg();
            out |= low;
            bits ^= low;
        }
        Self { n: self.n, bits: out }
    }

    /// `x_i u`, failing if `x_i` already divides `u`.
    pub fn times_var(&self, i: usize) -> Result<Self> {
        if i == 0 || i > self.n() {
            return Err(Error::IndexOutOfRange { index: i, n: self.n() });
        }
        if self.contains(i) {
            return Err(Error::NotSquarefree { index: i });
        }
        Ok(Self { n: self.n, bits: self.bits | (1u64 << (i - 1)) })
    }

    /// `x_j u / x_i` for `i` in the support and `j` outside it.
    pub fn exchange(&self, i: usize, j: usize) -> Option<Self> {
        if !self.contains(i) || j == 0 || j > self.n() || self.contains(j) {
            return None;
        }
        Some(Self { n: self.n, bits: (self.bits & !(1u64 << (i - 1))) | (1u64 << (j - 1)) })
    }

    /// The joint of `u` with the variables in `extra`.
    pub fn joint(&self, extra: &[usize]) -> Result<Self> {
        let mut out = *self;
        for &j in extra {
            out = out.times_var(j)?;
        }
        Ok(out)
    }

    /// Positions `j` (1-based) with `i_{j+1} - i_j > 1`, with their widths.
    pub fn gap_profile(&self) -> Result<GapProfile> {
        if self.degree() == 0 {
            return contract("gap profile of the constant monomial");
        }
        let supp = self.support_vec();
        let entries = supp
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[1] - w[0] > 1)
            .map(|(j, w)| (j + 1, w[1] - w[0] - 1))
            .collect();
        Ok(GapProfile { entries })
    }

    pub fn is_gap_free(&self) -> bool {
        let low = self.bits.trailing_zeros();
        let shifted = self.bits >> low;
        shifted & shifted.wrapping_add(1) == 0
    }

    /// Componentwise comparison of sorted supports: `self <= other` iff both
    /// have the same degree and `i_s <= j_s` at every position. This is the
    /// Borel order; `y` lies in the strongly stable closure of `u` iff
    /// `y.borel_le(&u)`.
    pub fn borel_le(&self, other: &Self) -> bool {
        self.degree() == other.degree()
            && self.support().zip(other.support()).all(|(a, b)| a <= b)
    }

    /// The slex-next monomial of the same degree among all of
    /// `Mon^s_d(S)`, or `None` for `x_{n-d+1} ... x_n`.
    pub fn next_in_degree(&self) -> Option<Self> {
        let n = self.n();
        let supp = self.support_vec();
        let d = supp.len();
        if d == 0 {
            return None;
        }
        // Rightmost position that can still move up.
        let s = (0..d).rev().find(|&s| supp[s] < n - (d - 1 - s))?;
        let mut next = supp[..s].to_vec();
        let start = supp[s] + 1;
        next.extend(start..start + (d - s));
        Some(Self::new(n, &next).expect("valid successor"))
    }

    /// The slex-greatest monomial of degree `d` over `n` variables.
    pub fn first_of_degree(n: usize, d: usize) -> Result<Self> {
        if d > n {
            return contract(alloc::format!("degree {d} exceeds n = {n}"));
        }
        Self::interval(n, 1, d)
    }
}

/// Ascending iterator over a support.
#[derive(Clone)]
pub struct Support {
    bits: u64,
}

impl Iterator for Support {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let i = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(i + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.bits.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Support {}

impl Ord for SquarefreeMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.degree().cmp(&other.degree()))
            .then_with(|| slex_bits(self.bits, other.bits))
    }
}

impl PartialOrd for SquarefreeMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// For equal popcounts, the lowest differing bit decides: whoever owns it has
// the smaller index at the first differing position.
fn slex_bits(a: u64, b: u64) -> Ordering {
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    let low = diff & diff.wrapping_neg();
    if a & low != 0 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// Squarefree lexicographic comparison of two monomials of equal degree.
pub fn slex_cmp(u: &SquarefreeMonomial, v: &SquarefreeMonomial) -> Result<Ordering> {
    if u.n != v.n {
        return Err(Error::AmbientMismatch { expected: u.n(), found: v.n() });
    }
    if u.degree() != v.degree() {
        return Err(Error::DegreeMismatch { expected: u.degree(), found: v.degree() });
    }
    Ok(slex_bits(u.bits, v.bits))
}

/// All `x_i u` with `u` in `set` and `x_i` not dividing `u`.
pub fn shadow<'a, I>(set: I) -> Result<MonomialSet>
where
    I: IntoIterator<Item = &'a SquarefreeMonomial>,
{
    let mut out = MonomialSet::new();
    let mut shape: Option<(usize, usize)> = None;
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
        let free = !u.bits & mask(u.n());
        let mut rest = free;
        while rest != 0 {
            let low = rest & rest.wrapping_neg();
            rest ^= low;
            out.insert(SquarefreeMonomial::from_bits_unchecked(u.n(), u.bits | low));
        }
    }
    Ok(out)
}

/// The gaps of a monomial as `(position, width)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GapProfile {
    pub entries: Vec<(usize, usize)>,
}

impl GapProfile {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `max Gap(u)`.
    pub fn last_position(&self) -> Option<usize> {
        self.entries.last().map(|&(j, _)| j)
    }

    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|&(j, _)| j)
    }

    pub fn total_width(&self) -> usize {
        self.entries.iter().map(|&(_, w)| w).sum()
    }
}

impl fmt::Display for SquarefreeMonomial {
    /// Canonical `x`-form with ascending indices, `1` for the constant.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits == 0 {
            return f.write_str("1");
        }
        for (pos, i) in self.support().enumerate() {
            if pos > 0 {
                f.write_str("*")?;
            }
            write!(f, "x{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SquarefreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl SquarefreeMonomial {
    /// Parses `x3*x4*x7`, `x3x4x7` or `{3,4,7}` over `n` variables.
    /// `1` and `{}` give the constant.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "1" {
            return Self::one(n);
        }
        let mut indices = Vec::new();
        if let Some(inner) = text.strip_prefix('{') {
            let inner = match inner.strip_suffix('}') {
                Some(s) => s,
                None => return contract(alloc::format!("unterminated bracket form `{text}`")),
            };
            for tok in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                match tok.parse::<usize>() {
                    Ok(i) => indices.push(i),
                    Err(_) => return contract(alloc::format!("bad index `{tok}` in `{text}`")),
                }
            }
        } else {
            let mut rest = text;
            if rest.is_empty() {
                return contract("empty monomial");
            }
            while !rest.is_empty() {
                rest = rest.trim_start_matches(|c: char| c == '*' || c.is_whitespace());
                if rest.is_empty() {
                    break;
                }
                let Some(after) = rest.strip_prefix('x') else {
                    return contract(alloc::format!("expected `x<index>` in `{text}`"));
                };
                let digits = after.bytes().take_while(u8::is_ascii_digit).count();
                if digits == 0 {
                    return contract(alloc::format!("missing index after `x` in `{text}`"));
                }
                let i = after[..digits]
                    .parse::<usize>()
                    .map_err(|_| Error::Contract(alloc::format!("index too large in `{text}`")))?;
                indices.push(i);
                rest = &after[digits..];
            }
        }
        Self::new(n, &indices)
    }
}
