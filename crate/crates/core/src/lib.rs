//! Numerical laboratory for boundary Harnack experiments.
//!
//! The crate solves non-divergence parabolic equations on lattice
//! discretizations of parabolic Lipschitz and slit domains with a monotone
//! implicit scheme, constructs the regularized distance, barriers, special
//! near-homogeneous solutions, and Ornstein-Uhlenbeck cone eigenfunctions,
//! and measures growth exponents, doubling ratios, Hölder seminorms of
//! quotients, expansion coefficients, Hopf constants, and free-boundary
//! regularity on the resulting fields.

pub mod error;
pub mod numerics;

pub mod geometry;
pub mod solver;

pub mod barriers;
pub mod harnack;
pub mod hopf;
pub mod obstacle;
pub mod ou;
pub mod rhs;

pub use error::{Error, Result};
