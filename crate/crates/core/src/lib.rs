//! Exact-arithmetic toolkit for post-Lie algebra structures on pairs of
//! finite-dimensional Lie algebras over the rationals.
//!
//! The crate is organized in layers: [`exact`] provides arbitrary-precision
//! rational linear algebra, [`poly`] a multivariate polynomial engine with a
//! budgeted Buchberger Gröbner-basis implementation and case-split
//! decomposition, [`liealg`] Lie algebras as structure constants together
//! with a catalog of built-in algebras, [`derivcoh`] derivation and
//! low-degree cohomology computations, [`postlie`] verification of candidate
//! post-Lie products, and [`solver`] the polynomial-system solver that
//! produces existence witnesses, nonexistence certificates and
//! classifications up to isomorphism. [`suite`] bundles the built-in
//! end-to-end verification checks exposed by the `paper-suite` CLI command.

// structure-constant arithmetic is index math throughout; indexed loops
// over several tensors at once read better than iterator chains here
#![allow(clippy::needless_range_loop)]

pub mod derivcoh;
pub mod error;
pub mod exact;
pub mod io;
pub mod liealg;
pub mod poly;
pub mod postlie;
pub mod report;
pub mod solver;
pub mod suite;

pub use error::Error;
pub use exact::{Matrix, Rat, Subspace};
