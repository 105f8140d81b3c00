//! Exact computer algebra for the super Jordan plane.
//!
//! The super Jordan plane is the algebra on `x1`, `x2` with relations
//! `x1^2 = 0` and `x2 x21 - x21 x2 - x1 x21 = 0`, where `x21 = x1 x2 + x2 x1`.
//! This crate provides
//!
//! * [`exactmath`]: exact rational scalars, polynomials and matrices;
//! * [`algebra`]: PBW normal forms in the super Jordan plane and the Jordan
//!   plane, and exhaustive checks of their structural identities;
//! * [`modtheory`]: finite-dimensional representations, intertwiners,
//!   endomorphism algebras and their radicals, decompositions;
//! * [`classify`]: canonical labels for indecomposable modules of dimension
//!   at most three and for the two unbounded families.
//!
//! Every algorithm is generic over the scalar [`Field`]; the aliases below
//! fix it to arbitrary-precision rationals.

pub mod algebra;
pub mod classify;
pub mod error;
pub mod exactmath;
pub mod modtheory;

pub use error::{Error, Result};
pub use exactmath::{ExactField, Field};

pub use exactmath::rational::Rational;
pub type Mat = exactmath::Matrix<Rational>;
pub type Poly = exactmath::Polynomial<Rational>;
pub type Element = algebra::PbwElement<Rational>;
pub type JordanElem = algebra::JordanElement<Rational>;
pub type Rep = modtheory::Representation<Rational>;
pub type Label = classify::CanonicalLabel<Rational>;
