use alloc::format;
use alloc::vec::Vec;

use crate::aset::next_in_a;
use crate::error::{contract, Error, Result};
use crate::monomial::SquarefreeMonomial;

/// One row of a basic-monomial chain: `v_i` is a multiple of `w_{i-1}` and
/// `w_i` the next monomial after `v_i` in its A-set. The first row has no
/// `v`, and the last may have no `w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainRow {
    pub v: Option<SquarefreeMonomial>,
    pub w: Option<SquarefreeMonomial>,
}

/// The chain starting at `w_1 = x_1 ... x_{l-1} x_n`.
///
/// While `w` has a gap, let `t` be its last gap: `v` joins `w` with the
/// variable just below `i_{t+1}`, and the next `w` follows `v` in
/// `A^s(n - l', l')`. The chain stops at the first gap-free `w`, or when `v`
/// itself is gap-free.
pub fn chain_basic_monomials(n: usize, l: usize) -> Result<Vec<ChainRow>> {
    if n < 5 || l < 2 || (l >= 3 && l > n - 2) {
        return contract(format!("chains need n >= 5 and 2 <= l <= n - 2, got n = {n}, l = {l}"));
    }
    let mut w = SquarefreeMonomial::interval(n, 1, l - 1)?.joint(&[n])?;
    let mut rows = alloc::vec![ChainRow { v: None, w: Some(w) }];
    while let Some(t) = w.gap_profile()?.last_position() {
        let below_next = w.index_at(t + 1).expect("gap position") - 1;
        let v = w.joint(&[below_next])?;
        let next = next_in_a(&v)?;
        if let Some(next) = next {
            if w.divides(&next) {
                return Err(Error::Inconsistent(format!("{w} divides its successor {next}")));
            }
        }
        rows.push(ChainRow { v: Some(v), w: next });
        match next {
            Some(next) => w = next,
            None => break,
        }
    }
    Ok(rows)
}
