//! Constructive results: basic-monomial chains, lex ideals with the maximal
//! number of corners, feasibility bounds for prescribed corners, the
//! realizing ideal itself, and exhaustive enumeration for small `n`.

mod chain;
mod enumerate;
mod lex;
mod realize;

pub use chain::{chain_basic_monomials, ChainRow};
pub use enumerate::{
    enumerate_corner_configs, strongly_stable_towers, CornerConfig, EnumerateOptions,
    DEFAULT_ENUMERATION_BOUND,
};
pub use lex::{lex_corner_ideal, lex_step_one_segments};
pub use realize::{
    basic_monomials, construct_ideal, feasibility_bounds, BasicMonomialSet, CornerBound,
    CornerSpec, FeasibilityReport,
};
