//! Counting homomorphisms from surface groups and free-group word maps into
//! finite permutation groups, with exact character-theoretic formulas and
//! brute-force cross-checks.

pub mod chartable;
pub mod cli;
pub mod classfun;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod oracle;
pub mod surface;
pub mod symfunc;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
