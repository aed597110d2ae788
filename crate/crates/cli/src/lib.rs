//! Text formats, Betti diagrams and the `sqfree` command line on top of
//! `sqfree-core`.

pub mod app;
pub mod json;
pub mod render;
pub mod text;

pub use app::{run, Cli, CliError, Command, Format, ENUMERATE_MAX_N_VAR};
pub use render::render_betti;
pub use text::{emit_ideal, parse_ideal, parse_monomials, MonomialList, ParseError};
