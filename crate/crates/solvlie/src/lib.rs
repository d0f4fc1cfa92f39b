//! Exact-arithmetic toolkit for finite-dimensional solvable Lie algebras of
//! the form `n ⋊ ℝD` and the classification of their group C*-algebras.
//!
//! The crate is organized in layers:
//!
//! * [`scalar`], [`poly`], [`matrix`], [`subspace`], [`multipoly`]: exact
//!   rational arithmetic: polynomials, Sturm chains and Cauchy indices,
//!   fraction-free determinants, canonical echelon subspaces, and sparse
//!   multivariate polynomials for symbolic skew matrices.
//! * [`lie`]: structure-constant Lie algebras with validation, subalgebra /
//!   ideal / quotient machinery, semidirect products, central extensions.
//! * [`spectral`]: exact root-location decisions for derivation spectra:
//!   half-plane counts, imaginary-axis detection, restrictions and induced
//!   quotient maps, diagonalizability.
//! * [`coadjoint`]: orbit matrices, isotropy subalgebras, generic and
//!   constant orbit dimensions (randomized lower bounds plus exact
//!   certification), open-orbit and exact-symplectic detection.
//! * [`families`] and [`deform`]: generators for the built-in example
//!   families and Lie-bracket contractions.
//! * [`classify`]: the tri-state rule engine with citation traces.
//!
//! Everything decision-relevant is exact; floating point appears only in the
//! clearly-marked diagnostic eigensolver. With the default `parallel`
//! feature, batch classification and symbolic rank certification fan out on
//! rayon; disabling the feature swaps in sequential fallbacks with identical
//! results.

pub mod classify;
pub mod coadjoint;
pub mod deform;
pub mod exec;
pub mod families;
pub mod lie;
pub mod matrix;
pub mod multipoly;
pub mod poly;
pub mod scalar;
pub mod spectral;
pub mod subspace;

pub use classify::{
    batch_classify, classify, classify_axb, classify_division, GroupModel, KTheorySummary,
    Provenance, TriState, Verdict,
};
pub use coadjoint::{Covector, RankMode};
pub use lie::{Bilinear2Cocycle, LieAlgebra, ValidationReport};
pub use matrix::Matrix;
pub use poly::RatPoly;
pub use scalar::Rational;
pub use subspace::Subspace;
