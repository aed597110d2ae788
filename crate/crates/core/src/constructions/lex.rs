use alloc::format;
use alloc::vec::Vec;

use crate::error::{contract, Error, Result};
use crate::monomial::{shadow, MonomialSet, SquarefreeMonomial};
use crate::stable::{minimal_generators, MonomialIdeal};

fn check(n: usize, l1: usize) -> Result<()> {
    if n < 5 || l1 < 3 || l1 > n - 2 {
        return contract(format!("lex corner ideals need n >= 5 and 3 <= l1 <= n - 2, got n = {n}, l1 = {l1}"));
    }
    Ok(())
}

/// The smallest squarefree lex ideal of initial degree `l1` with corners
/// `(n - l, l)` for `l = l1, ..., n - 1`, all of value 1.
///
/// Built degree by degree: after the shadow of the previous degree, the
/// next generators continue the lex segment down to the first monomial whose
/// maximal variable is `x_n`.
pub fn lex_corner_ideal(n: usize, l1: usize) -> Result<MonomialIdeal> {
    check(n, l1)?;
    let mut part = MonomialSet::new();
    let mut gens = Vec::new();
    for d in l1..n {
        part = shadow(&part)?;
        let mut next = match part.first() {
            Some(lowest) => lowest.next_in_degree(),
            None => Some(SquarefreeMonomial::first_of_degree(n, d)?),
        };
        loop {
            let Some(u) = next else {
                return Err(Error::Inconsistent(format!(
                    "degree {d} ran out of monomials before reaching x{n}"
                )));
            };
            part.insert(u);
            gens.push(u);
            if u.max_index() == n {
                break;
            }
            next = u.next_in_degree();
        }
    }
    minimal_generators(n, gens)
}

/// The segments `L(u_i, v_i)` generating the first degrees of
/// [`lex_corner_ideal`]; with `s = max { i : l1 + 2i - 3 <= n - 2 }`,
///
/// `u_i = x_1 ... x_{l1-2} * x_{l1} x_{l1+2} ... x_{l1+2i-4} * x_{l1+2i-3} x_{l1+2i-2}`
///
/// and `v_i` is `u_i` with its last variable replaced by `x_n`.
pub fn lex_step_one_segments(n: usize, l1: usize) -> Result<Vec<(SquarefreeMonomial, SquarefreeMonomial)>> {
    check(n, l1)?;
    let s = (1..).take_while(|&i| l1 + 2 * i - 3 <= n - 2).last().unwrap_or(0);
    let mut out = Vec::with_capacity(s);
    for i in 1..=s {
        let mut idx: Vec<usize> = (1..=l1 - 2).collect();
        idx.extend((0..i - 1).map(|j| l1 + 2 * j));
        idx.push(l1 + 2 * i - 3);
        let mut v_idx = idx.clone();
        idx.push(l1 + 2 * i - 2);
        v_idx.push(n);
        out.push((SquarefreeMonomial::new(n, &idx)?, SquarefreeMonomial::new(n, &v_idx)?));
    }
    Ok(out)
}
