//! Exact-arithmetic toolkit for the n-species totally asymmetric zero range
//! process (n-TAZRP) and the three-dimensional integrable structure behind its
//! matrix-product steady state.
//!
//! Everything is computed over exact scalars: big-integer polynomials and
//! reduced rational functions in the deformation parameter `q`, and
//! multivariate Laurent polynomials in named spectral variables over those.
//! No floating point is used anywhere.
//!
//! The crate is organized in layers:
//!
//! - [`qscalar`] — the scalar rings: `QPoly`, `QRat`, `LaurentScalar`, and the
//!   q-special functions (q-factorial, q-Pochhammer, q-binomial, chi weights).
//! - [`fock`] — truncated Fock spaces, q- and 0-oscillator generator matrices,
//!   sparse tensor-product operators with safe-window bookkeeping, and an
//!   exact normal-form engine for the 0-oscillator algebra.
//! - [`r3d`] — the 3D R-operator: coefficient formula, operator-valued
//!   vertices, algebraic properties, the tetrahedron equation with spectral
//!   parameters, and the eigenvector identities.
//! - [`layer`] — layer-to-layer transfer matrices on the m×n lattice, their
//!   intertwining and bilinear relations, and the `f_{r,s,t}` identities.
//! - [`tazrp`] — the n-TAZRP Markov model, an exact kernel-based steady-state
//!   oracle, the corner-transfer-matrix operators `X_alpha(z)`, the hat
//!   relation, and the embedding into the q=0 layer transfer matrix.
//! - [`report`] — the check-report type shared by all verification routines.

pub mod fock;
pub mod layer;
pub mod qscalar;
pub mod r3d;
pub mod report;
pub mod tazrp;

pub use qscalar::{LaurentScalar, QPoly, QRat};
pub use report::{CheckFailure, CheckReport};
