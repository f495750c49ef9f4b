//! Command line front end for `qforms-core`: a parser for polynomial
//! expressions, JSON records for class field descriptions, and the `qforms`
//! command.

pub mod cli;
pub mod error;
pub mod parse;
pub mod specfile;

pub use error::InputError;
pub use parse::{parse_poly, ParseError};
pub use specfile::{load_spec, spec_from_json, spec_to_json, SpecRecord};
