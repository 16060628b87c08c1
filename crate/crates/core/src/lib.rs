//! Pseudo-spectral simulator and numerical-verification suite for the 3D
//! incompressible MHD system with horizontal velocity dissipation and
//! vertical magnetic diffusion, posed on the periodic box.
//!
//! The crate is organized around five pieces:
//!
//! * [`grid`], [`fft`], [`field`], [`projection`]: periodic-box fields,
//!   spectral differentiation, dealiased products, Leray projection.
//! * [`norms`], [`ledger`], [`diagnostics`]: directional Sobolev norms, the
//!   energy functionals `E0`/`E1`, and exact-identity diagnostics.
//! * [`inequality`]: numerical verification of the anisotropic triple- and
//!   quadruple-product inequalities, the 1D Agmon inequality, and the
//!   mixed-norm Minkowski inequality, with empirical constant estimation.
//! * [`solver`]: integrating-factor RK4 time integration of the perturbation
//!   system, pressure recovery, CFL suggestion, manufactured solutions.
//! * [`harness`], [`checkpoint`]: initial-data generation, stability
//!   experiments, epsilon sweeps, bootstrap monitoring, plot/CSV/checkpoint
//!   output.

pub mod checkpoint;
pub mod diagnostics;
pub mod error;
pub mod fft;
pub mod field;
pub mod grid;
pub mod harness;
pub mod inequality;
pub mod ledger;
pub mod norms;
pub mod projection;
pub mod solver;
pub mod synth;

pub use error::{Error, Result};
pub use fft::Fft3;
pub use field::{Space, SpectralField, VectorField};
pub use grid::Grid;
