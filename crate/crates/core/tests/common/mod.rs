//! Ideals, tables and chains printed as worked examples, shared by the
//! integration suites.
#![allow(dead_code)]

use sqfree_core::{minimal_generators, strongly_stable_closure, MonomialIdeal, SquarefreeMonomial};

pub fn mono(n: usize, support: &[usize]) -> SquarefreeMonomial {
    SquarefreeMonomial::new(n, support).unwrap()
}

pub fn ideal(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
    minimal_generators(n, gens.iter().map(|g| mono(n, g))).unwrap()
}

pub fn supports(ideal: &MonomialIdeal) -> Vec<Vec<usize>> {
    ideal.generators().iter().map(|u| u.support_vec()).collect()
}

pub fn n6_example() -> MonomialIdeal {
    ideal(
        6,
        &[
            &[1, 2],
            &[1, 3],
            &[1, 4],
            &[1, 5],
            &[2, 3, 4],
            &[2, 3, 5],
            &[2, 3, 6],
            &[2, 4, 5],
            &[2, 4, 6],
            &[3, 4, 5, 6],
        ],
    )
}

pub const N6_TABLE: &[(usize, &[u64])] = &[(2, &[4, 6, 4, 1]), (3, &[5, 11, 8, 2]), (4, &[1, 2, 1, 0])];

pub fn n8_degree2_example() -> MonomialIdeal {
    ideal(
        8,
        &[
            &[1, 2],
            &[1, 3],
            &[1, 4],
            &[1, 5],
            &[1, 6],
            &[1, 7],
            &[1, 8],
            &[2, 3, 4],
            &[2, 3, 5],
            &[2, 3, 6],
            &[2, 3, 7],
            &[2, 3, 8],
            &[2, 4, 5, 6],
            &[2, 4, 5, 7],
            &[2, 4, 5, 8],
            &[2, 4, 6, 7, 8],
            &[3, 4, 5, 6, 7, 8],
        ],
    )
}

pub const N8_DEGREE2_TABLE: &[(usize, &[u64])] = &[
    (2, &[7, 21, 35, 35, 21, 7, 1]),
    (3, &[5, 15, 20, 15, 6, 1, 0]),
    (4, &[3, 9, 10, 5, 1, 0, 0]),
    (5, &[1, 3, 3, 1, 0, 0, 0]),
    (6, &[1, 2, 1, 0, 0, 0, 0]),
];

pub const N8_DEGREE3_GENERATORS: &[&[usize]] = &[
    &[1, 2, 3],
    &[1, 2, 4],
    &[1, 2, 5],
    &[1, 2, 6],
    &[1, 2, 7],
    &[1, 2, 8],
    &[1, 3, 4, 5],
    &[1, 3, 4, 6],
    &[1, 3, 4, 7],
    &[1, 3, 4, 8],
    &[1, 3, 5, 6, 7],
    &[1, 3, 5, 6, 8],
    &[1, 4, 5, 6, 7, 8],
    &[2, 3, 4, 5, 6, 7, 8],
];

pub fn n8_degree3_example() -> MonomialIdeal {
    ideal(8, N8_DEGREE3_GENERATORS)
}

pub const N8_DEGREE3_TABLE: &[(usize, &[u64])] = &[
    (3, &[6, 15, 20, 15, 6, 1]),
    (4, &[4, 10, 10, 5, 1, 0]),
    (5, &[2, 5, 4, 1, 0, 0]),
    (6, &[1, 2, 1, 0, 0, 0]),
    (7, &[1, 1, 0, 0, 0, 0]),
];

/// Basic monomials of the realized `n = 11` example, per corner.
pub const N11_BASICS: &[&[&[usize]]] = &[
    &[&[1, 2, 11], &[1, 3, 11], &[1, 4, 11], &[1, 5, 11], &[1, 6, 11], &[1, 7, 11], &[1, 8, 11]],
    &[&[2, 3, 4, 5, 9], &[2, 3, 4, 6, 9], &[2, 3, 4, 7, 9], &[2, 3, 4, 8, 9], &[2, 3, 5, 6, 9]],
    &[&[2, 3, 5, 7, 8, 9], &[2, 3, 6, 7, 8, 9]],
    &[&[2, 4, 5, 6, 7, 8, 9, 10, 11], &[3, 4, 5, 6, 7, 8, 9, 10, 11]],
];

pub const N11_CORNERS: &[(usize, usize)] = &[(8, 3), (4, 5), (3, 6), (2, 9)];
pub const N11_VALUES: &[usize] = &[7, 5, 2, 2];

/// The printed ideal: the strongly stable closures of the basic monomials.
pub fn n11_printed_ideal() -> MonomialIdeal {
    let mut raw = Vec::new();
    for corner in N11_BASICS {
        let basics: Vec<_> = corner.iter().map(|s| mono(11, s)).collect();
        raw.extend(strongly_stable_closure(&basics).unwrap());
    }
    minimal_generators(11, raw).unwrap()
}

pub const N11_TABLE: &[(usize, &[u64])] = &[
    (3, &[42, 217, 553, 861, 875, 587, 252, 63, 7]),
    (4, &[0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (5, &[13, 39, 45, 24, 5, 0, 0, 0, 0]),
    (6, &[2, 6, 6, 2, 0, 0, 0, 0, 0]),
    (7, &[0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (8, &[0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (9, &[2, 4, 2, 0, 0, 0, 0, 0, 0]),
];

/// `(v_i, w_i)` rows of the basic-monomial chains, `None` for a blank cell.
pub type ChainTable = &'static [(Option<&'static [usize]>, Option<&'static [usize]>)];

pub const CHAINS: &[(usize, usize, ChainTable)] = &[
    (5, 2, &[(None, Some(&[1, 5])), (Some(&[1, 4, 5]), Some(&[2, 3, 5])), (Some(&[2, 3, 4, 5]), None)]),
    (
        6,
        2,
        &[
            (None, Some(&[1, 6])),
            (Some(&[1, 5, 6]), Some(&[2, 3, 6])),
            (Some(&[2, 3, 5, 6]), Some(&[2, 4, 5, 6])),
            (Some(&[2, 3, 4, 5, 6]), None),
        ],
    ),
    (
        7,
        2,
        &[
            (None, Some(&[1, 7])),
            (Some(&[1, 6, 7]), Some(&[2, 3, 7])),
            (Some(&[2, 3, 6, 7]), Some(&[2, 4, 5, 7])),
            (Some(&[2, 4, 5, 6, 7]), Some(&[3, 4, 5, 6, 7])),
        ],
    ),
    (
        8,
        2,
        &[
            (None, Some(&[1, 8])),
            (Some(&[1, 7, 8]), Some(&[2, 3, 8])),
            (Some(&[2, 3, 7, 8]), Some(&[2, 4, 5, 8])),
            (Some(&[2, 4, 5, 7, 8]), Some(&[2, 4, 6, 7, 8])),
            (Some(&[2, 4, 5, 6, 7, 8]), Some(&[3, 4, 5, 6, 7, 8])),
        ],
    ),
    (
        9,
        2,
        &[
            (None, Some(&[1, 9])),
            (Some(&[1, 8, 9]), Some(&[2, 3, 9])),
            (Some(&[2, 3, 8, 9]), Some(&[2, 4, 5, 9])),
            (Some(&[2, 4, 5, 8, 9]), Some(&[2, 4, 6, 7, 9])),
            (Some(&[2, 4, 6, 7, 8, 9]), Some(&[2, 5, 6, 7, 8, 9])),
            (Some(&[2, 4, 5, 6, 7, 8, 9]), Some(&[3, 4, 5, 6, 7, 8, 9])),
        ],
    ),
    (5, 3, &[(None, Some(&[1, 2, 5])), (Some(&[1, 2, 4, 5]), Some(&[1, 3, 4, 5])), (Some(&[1, 2, 3, 4, 5]), None)]),
    (
        6,
        3,
        &[
            (None, Some(&[1, 2, 6])),
            (Some(&[1, 2, 5, 6]), Some(&[1, 3, 4, 6])),
            (Some(&[1, 3, 4, 5, 6]), Some(&[2, 3, 4, 5, 6])),
            (Some(&[1, 2, 3, 4, 5, 6]), None),
        ],
    ),
    (
        7,
        3,
        &[
            (None, Some(&[1, 2, 7])),
            (Some(&[1, 2, 6, 7]), Some(&[1, 3, 4, 7])),
            (Some(&[1, 3, 4, 6, 7]), Some(&[1, 3, 5, 6, 7])),
            (Some(&[1, 3, 4, 5, 6, 7]), Some(&[2, 3, 4, 5, 6, 7])),
        ],
    ),
    (
        8,
        3,
        &[
            (None, Some(&[1, 2, 8])),
            (Some(&[1, 2, 7, 8]), Some(&[1, 3, 4, 8])),
            (Some(&[1, 3, 4, 7, 8]), Some(&[1, 3, 5, 6, 8])),
            (Some(&[1, 3, 5, 6, 7, 8]), Some(&[1, 4, 5, 6, 7, 8])),
            (Some(&[1, 3, 4, 5, 6, 7, 8]), Some(&[2, 3, 4, 5, 6, 7, 8])),
        ],
    ),
];

/// `(corners, values, generators)` rows of the small-`n` classification.
pub type ConfigRow = (&'static [(usize, usize)], &'static [u64], &'static [&'static [usize]]);

pub const TABLE_N3: &[ConfigRow] = &[
    (&[(2, 1)], &[1], &[&[1], &[2], &[3]]),
    (&[(1, 1)], &[1], &[&[1], &[2]]),
    (&[(1, 2)], &[1], &[&[1, 2], &[1, 3]]),
    (&[(1, 2)], &[2], &[&[1, 2], &[1, 3], &[2, 3]]),
];

pub const TABLE_N4: &[ConfigRow] = &[
    (&[(2, 2), (1, 3)], &[1, 1], &[&[1, 2], &[1, 3], &[1, 4], &[2, 3, 4]]),
    (&[(1, 2)], &[1], &[&[1, 2], &[1, 3]]),
    (&[(1, 2)], &[2], &[&[1, 2], &[1, 3], &[2, 3]]),
    (&[(2, 2)], &[1], &[&[1, 2], &[1, 3], &[1, 4]]),
    (&[(2, 2)], &[2], &[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4]]),
    (&[(2, 2)], &[3], &[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4], &[3, 4]]),
    (&[(1, 3)], &[1], &[&[1, 2, 3], &[1, 2, 4]]),
    (&[(1, 3)], &[2], &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4]]),
    (&[(1, 3)], &[3], &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]),
];
