//! Centers of quantized nilpotent algebras, computed exactly through
//! Weyl-group lattice data and cross-checked against a twisted Laurent
//! algebra engine.

pub mod bigjson;
pub mod cartan;
pub mod centers;
pub mod cli;
pub mod diophantine;
pub mod error;
pub mod lattice_forms;
pub mod linalg;
pub mod root_of_unity;
pub mod twisted_laurent;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
