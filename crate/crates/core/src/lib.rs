//! Extremal Betti numbers of squarefree strongly stable ideals.
//!
//! The crate works entirely with squarefree monomials in `K[x_1, ..., x_n]`
//! (`n <= 64`), identified with their supports. It provides
//!
//! * squarefree-lex arithmetic, gaps, shadows and the sets `A^s(k, l)` of
//!   degree-`l` monomials with maximal variable `x_{k+l}` ([`monomial`], [`aset`]);
//! * stability predicates, strongly stable closures and restricted shadows
//!   ([`stable`]);
//! * graded Betti numbers of squarefree stable ideals through the closed
//!   binomial formula, together with corner (extremal Betti number) detection
//!   ([`betti`]);
//! * positions inside `A^s(k, l)` through nested binomial decompositions
//!   ([`counting`]);
//! * the constructive side: basic-monomial chains, lex ideals with the maximal
//!   number of corners, feasibility bounds and the smallest strongly stable
//!   ideal with prescribed corners and corner values ([`constructions`]).
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod aset;
pub mod betti;
mod binom;
pub mod constructions;
pub mod counting;
mod error;
pub mod monomial;
pub mod stable;

pub use aset::{a_max, a_min, enumerate_a, next_in_a, prev_in_a, segment, ASet};
pub use betti::{
    corners_by_characterization, degree_sequence, extremal_betti, graded_betti, BettiTable, Corner, CornerReport,
    DegreeSequence,
};
pub use binom::binomial;
pub use constructions::{
    basic_monomials, chain_basic_monomials, construct_ideal, enumerate_corner_configs,
    feasibility_bounds, lex_corner_ideal, lex_step_one_segments, strongly_stable_towers,
    BasicMonomialSet, ChainRow, CornerBound, CornerConfig, CornerSpec, EnumerateOptions,
    FeasibilityReport, DEFAULT_ENUMERATION_BOUND,
};
pub use counting::{
    count_strictly_above, count_upto, oracle_position, pascal_row, Binomial, DecompositionStep,
    DecompositionTrace,
};
pub use error::{Error, Result};
pub use monomial::{shadow, slex_cmp, GapProfile, MonomialSet, SquarefreeMonomial, MAX_VARS};
pub use stable::{
    borel_shadow_contains, bshad, classify, min_bshad, minimal_generators, shad_power,
    stable_violation, strongly_stable_closure, strongly_stable_violation, ExchangeWitness,
    MonomialIdeal, StabilityClass,
};
