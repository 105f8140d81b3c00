//! Finite-dimensional modules over the super Jordan plane.

mod decompose;
mod hom;
mod matalg;
mod rep;
mod structure;
mod subspace;

pub use decompose::{
    composition_series, end_semisimple_dim, endomorphism_algebra, full_decompose,
    is_direct_summand, is_indecomposable, CompositionSeries, Summand,
};
pub use hom::{end_space, hom_space, is_isomorphic, HomBasis};
pub use matalg::{algebra_radical, generated_matrix_algebra, MatrixAlgebra, RadicalReport};
pub use rep::{check_representation, RelationCheck, Representation, X1_SQUARED, X2X2X1};
pub use structure::{
    decompose_by_t, is_submodule, lemma24_subspaces, submodule_generated, v0_basis,
    Lemma24Report, TSummand,
};
pub use subspace::Subspace;
