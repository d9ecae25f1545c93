//! Simplex-splitting two-map continued fraction algorithms in exact arithmetic.

pub mod certify;
pub mod cli;
pub mod error;
pub mod ifs;
pub mod linalg;
pub mod render;
pub(crate) mod ser;
pub mod symmetry;

pub use error::{Error, Result};
