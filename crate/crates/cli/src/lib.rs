//! Command-line front end for `slant-lab`: symbol and word parsing,
//! verification campaigns and report export.

pub mod cli;
pub mod commands;
pub mod parse;

pub use cli::Cli;
pub use commands::{run, write_output, Outcome, UsageError};
pub use parse::{format_symbol, parse_poly, parse_symbol, parse_word, ParseError};
