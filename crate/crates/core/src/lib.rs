//! Exact computations for textile dynamical systems built from pairs of
//! symbolic matrices over `ℂ^n`: symbolic matrices and specifications, the
//! induced tile sets and their paving, and K-groups through integer Smith
//! normal form.

pub mod abelian;
pub mod bool_matrix;
pub mod csds;
pub mod symbolic_matrix;
pub mod textile;

pub use abelian::{FgAbelianGroup, IntMatrix};
pub use bool_matrix::BoolMatrix;
pub use csds::{tensor_pair, CsdsSystem, Word};
pub use symbolic_matrix::{Specification, Symbol, SymbolicMatrix};
pub use textile::{SpecChoice, TextileSystem, Tile};
