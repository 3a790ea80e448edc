//! Random walks on Fibonacci-structured lattices and heat-kernel path measures.
//!
//! The crate is organized around a handful of closely related objects:
//!
//! - [`quasiperiodic`] builds the Fibonacci step-length sequence, the
//!   Fibonacci substitution word, the signal x(τ) = cos(2πτ) + cos(2πατ),
//!   and time partitions of `[0, t]` (uniform or driven by the word).
//! - [`walk`] computes n-step lattice distributions four independent ways:
//!   the binomial closed form, characteristic-function inversion, exact
//!   convolution (the oracle), and seeded Monte Carlo.
//! - [`heat`] evaluates the Gaussian heat kernel, its Chapman-Kolmogorov
//!   composition over arbitrary partitions, discrete path actions, and the
//!   random-walk (Brownian-bridge) representation of K_t and of
//!   generalized kernels H_t^N.
//! - [`thermo`] derives (Z, E, S) for piecewise paths under the length
//!   action and for the Fibonacci chain, with finite-difference checks.
//! - [`btz`] evaluates BTZ black-hole thermodynamics in closed form and
//!   verifies the identities tying action, energy, and entropy together.
//! - [`numerics`] is the shared substrate: Gauss-Legendre and periodic
//!   trapezoid quadrature, central differences, and counter-indexed
//!   reproducible random streams.
//!
//! Everything randomized takes an explicit [`numerics::RandomStream`];
//! identical `(master_seed, stream_index)` pairs reproduce results
//! bit-for-bit, independent of thread count.

pub mod btz;
pub mod cli;
pub mod error;
pub mod heat;
pub mod numerics;
pub mod quasiperiodic;
pub mod report;
pub mod thermo;
pub mod walk;

pub use error::{Error, Result};
