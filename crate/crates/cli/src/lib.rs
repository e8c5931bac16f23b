//! Library side of the `sfcontact` command: input grammars, JSON reports and
//! the subcommands.

pub mod commands;
pub mod parse;
pub mod report;

pub use commands::{CliError, Outcome};
pub use parse::{parse_gammas, parse_seifert, ParseError};
