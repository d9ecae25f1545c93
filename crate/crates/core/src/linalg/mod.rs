//! Exact integer and rational linear algebra over the monoid of nonnegative
//! unimodular matrices.

mod matrix;
mod point;
mod poly;
mod scc;

pub use matrix::{mat_mul, IntMatrix};
pub use point::{cylinder_diameter, cylinder_measure, cylinder_vertices, parse_rational, project, SimplexPoint};
pub use poly::{char_poly, IntPolynomial};
pub use scc::{expanding_component, scc, spectral_radius_gt_one, Component, SccDecomposition};

use num_bigint::BigInt;

pub fn det(a: &IntMatrix) -> BigInt {
    a.det()
}

pub fn inverse_unimodular(a: &IntMatrix) -> crate::Result<IntMatrix> {
    a.inverse_unimodular()
}

pub fn fixed_vertices(a: &IntMatrix) -> std::collections::BTreeSet<usize> {
    a.fixed_vertices()
}

pub fn is_graph_disconnected(a: &IntMatrix) -> bool {
    a.is_graph_disconnected()
}
