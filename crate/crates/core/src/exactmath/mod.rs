//! Exact scalar, polynomial and dense matrix kernel.

pub mod eigen;
pub mod field;
pub mod invertibility;
pub mod matrix;
pub mod poly;
pub mod rational;

pub use eigen::{
    char_poly, generalized_eigenspace, primary_component, rational_eigenvalues,
    split_spectrum, square_zero_block_form, square_zero_standard_basis, SquareZeroForm,
};
pub use field::{ExactField, Field};
pub use invertibility::generic_invertibility;
pub use matrix::{dot, echelon_basis, is_zero_vec, Matrix};
pub use poly::{Polynomial, RootSplit};
pub use rational::{parse_rational, ratio, rational};
