mod common;

use num_bigint::{BigInt, BigUint};
use sqfree_core::*;

use common::*;

fn towers(n: usize) -> Vec<MonomialIdeal> {
    let mut out = Vec::new();
    strongly_stable_towers(n, 1, &mut |ideal, _| out.push(ideal.clone())).unwrap();
    out
}

/// `dim_K I_d` by counting supports: a monomial lies in `I` iff its support
/// does, and `C(d - 1, |S| - 1)` monomials of degree `d` have support `S`.
fn hilbert_by_supports(ideal: &MonomialIdeal, d: usize) -> BigInt {
    let n = ideal.n();
    (1u64..1 << n)
        .map(|b| SquarefreeMonomial::from_bits(n, b).unwrap())
        .filter(|s| ideal.contains(s) && s.degree() <= d)
        .map(|s| BigInt::from(binomial(d - 1, s.degree() - 1)))
        .sum()
}

/// `dim_K I_d` from the Betti numbers: `sum (-1)^i beta_{i,j} C(d - j + n - 1, n - 1)`.
fn hilbert_by_betti(table: &BettiTable, n: usize, d: usize) -> BigInt {
    table
        .iter()
        .filter(|&(_, j, _)| j <= d)
        .map(|(i, j, v)| {
            let term = BigInt::from(v.clone()) * BigInt::from(binomial(d - j + n - 1, n - 1));
            if i % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

#[test]
fn betti_numbers_reproduce_the_hilbert_function() {
    for n in 1..=6 {
        for ideal in towers(n) {
            let table = graded_betti(&ideal).unwrap();
            for d in 1..=n + 2 {
                assert_eq!(
                    hilbert_by_betti(&table, n, d),
                    hilbert_by_supports(&ideal, d),
                    "{:?} in degree {d}",
                    ideal.generators()
                );
            }
        }
    }
}

#[test]
fn corners_determine_pd_and_regularity() {
    for n in 1..=6 {
        for ideal in towers(n) {
            let table = graded_betti(&ideal).unwrap();
            let report = extremal_betti(&ideal).unwrap();
            let pd = report.corners.iter().map(|c| c.k).max();
            let reg = report.corners.iter().map(|c| c.l).max();
            assert_eq!(table.projective_dimension(), pd);
            assert_eq!(table.regularity(), reg);
            assert_eq!(table.first_row(), ideal.initial_degree());
            for c in &report.corners {
                assert!(c.k + c.l <= n);
                assert!(c.value >= BigUint::from(1u32) && c.value <= binomial(c.k + c.l - 1, c.l - 1));
            }
            let positions = report.positions();
            assert!(positions.windows(2).all(|w| w[0].0 > w[1].0 && w[0].1 < w[1].1));
        }
    }
}

#[test]
fn a_linear_corner_is_the_only_corner() {
    for n in 2..=6 {
        for ideal in towers(n) {
            let report = extremal_betti(&ideal).unwrap();
            if let Some(c) = report.corners.iter().find(|c| c.l == 1) {
                assert_eq!(report.len(), 1);
                let gens: Vec<Vec<usize>> = ideal.generators().iter().map(|u| u.support_vec()).collect();
                let want: Vec<Vec<usize>> = (1..=c.k + 1).map(|i| vec![i]).collect();
                assert_eq!(gens, want);
            }
        }
    }
}

#[test]
fn degree_sequences_of_the_maximal_corner_examples() {
    let two = degree_sequence(&n8_degree2_example()).unwrap();
    assert_eq!(two.generator_degrees, [2, 3, 4, 5, 6]);
    assert_eq!(two.deltas, [6, 5, 4, 3, 2]);
    assert_eq!(two.degree_length, 5);
    let three = degree_sequence(&n8_degree3_example()).unwrap();
    assert_eq!(three.deltas, [5, 4, 3, 2, 1]);
    assert_eq!(three.extremal_deltas(), [5, 4, 3, 2, 1]);
    for (ideal, ls) in [(n8_degree2_example(), 2..=6), (n8_degree3_example(), 3..=7)] {
        let report = extremal_betti(&ideal).unwrap();
        let want: Vec<(usize, usize)> = ls.map(|l| (8 - l, l)).collect();
        assert_eq!(report.positions(), want);
        assert!(report.small_values().iter().all(|&a| a == 1));
    }
}

#[test]
fn no_corner_in_the_initial_degree() {
    let i = ideal(5, &[&[1, 2], &[1, 3, 4], &[1, 3, 5], &[2, 3, 4, 5]]);
    let report = extremal_betti(&i).unwrap();
    assert_eq!(report.positions(), [(2, 3), (1, 4)]);
    let t = graded_betti(&i).unwrap();
    let rows: Vec<Vec<BigUint>> = (2..=4).map(|r| t.row(r)).collect();
    let want: [[u32; 3]; 3] = [[1, 0, 0], [2, 3, 1], [1, 1, 0]];
    for (got, want) in rows.iter().zip(want) {
        assert_eq!(*got, want.map(BigUint::from));
    }
    let j = ideal(5, &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5], &[1, 3, 4, 5]]);
    assert_eq!(extremal_betti(&j).unwrap().positions(), [(2, 3), (1, 4)]);
    let d = degree_sequence(&i).unwrap();
    assert_eq!(d.extremal_subsequence, [1, 2]);
}
