//! Exact integer linear algebra and the K-group formulae for pairs of
//! commuting matrices.

mod group;
mod int_matrix;
mod k_theory;
mod lattice;
mod snf;

use thiserror::Error;

pub use group::{FgAbelianGroup, ParseGroupError};
pub use int_matrix::IntMatrix;
pub use k_theory::{
    cyclic_subgroup_oracle, k0_of_pair, k1_of_pair, k_groups_textile, ExtensionReport, Split,
    TextileKGroups,
};
pub use lattice::{cokernel, column_basis, kernel_basis, solve_in_basis};
pub use snf::{smith_normal_form, SnfResult};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AbelianError {
    #[error("matrices must be square and of equal size ({0}x{1} vs {2}x{3})")]
    Shape(usize, usize, usize, usize),
    #[error("matrices do not commute at ({}, {})", .row + 1, .col + 1)]
    NotCommuting { row: usize, col: usize },
    #[error("the textile system does not form square")]
    NotSquare,
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}
