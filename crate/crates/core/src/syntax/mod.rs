//! Formulas, structures, sequents and proof scripts: types, parsers, printers.

mod ast;
mod parse;
mod print;
mod script;
pub(crate) mod term;

use thiserror::Error;

pub use ast::*;
pub use parse::{
    parse_flat_formula, parse_flat_structure, parse_general_formula, parse_general_structure, parse_inql,
    parse_sequent, parse_sequent_parts,
};
pub(crate) use parse::term_sort;
pub use script::{parse_occ_path, parse_script, print_script};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("{0}")]
    Sort(String),
    #[error("sequent is not type-uniform: {0}")]
    TypeUniformity(String),
    #[error("script: {0}")]
    Script(String),
}

#[cfg(test)]
mod tests;
