//! Coherent-state families for the oscillator (Heisenberg-Weyl), spin
//! (SU(2)) and squeeze (SU(1,1)) groups on truncated Hilbert spaces, with
//! quadrature machinery that verifies their completeness identities
//! numerically.
//!
//! The crate builds displaced families `D(z)|f>` for an arbitrary fiducial
//! state `|f>`, assembles the group-averaged operators
//! `const * \int dmu(z) D(z) W D(z)^dag` on deterministic quadrature grids
//! for the three invariant measures, and reports how far the result is from
//! the identity on an interior block where truncation error is under
//! control. A generalized Q-function and a Jacobi-polynomial integral
//! identity round out the toolkit.
//!
//! All numerical kernels are generic over the scalar type via [`Real`];
//! the concrete aliases below fix `f64`, which is what every quoted
//! tolerance assumes.

pub mod chart;
pub mod error;
pub mod hw;
pub mod matrix;
pub mod qdist;
pub mod quadrature;
pub mod scalar;
pub mod special;
pub mod states;
pub mod su11;
pub mod su2;
pub mod verify;

pub use chart::{Chart, GroupPoint};
pub use error::{Error, Result};
pub use matrix::{CMatrix, CVector};
pub use scalar::Real;

/// Double-precision complex matrix, the working type of the CLI and tests.
pub type Matrix64 = CMatrix<f64>;
/// Double-precision complex vector.
pub type Vector64 = CVector<f64>;
/// Single-precision variants, usable where tolerances permit.
pub type Matrix32 = CMatrix<f32>;
pub type Vector32 = CVector<f32>;
/// Double-precision group point.
pub type Point64 = GroupPoint<f64>;
