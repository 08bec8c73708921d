//! Spectra of two- and three-dimensional Schrödinger operators with finitely
//! many point interactions, computed through boundary-triplet Weyl-function
//! matrices, together with a radial positive definite function toolkit that
//! certifies the positivity mechanism behind the spectral results.
//!
//! Modules
//! - [`specfun`] — square-root branch, Bessel/Hankel functions, radial kernels;
//! - [`linalg`] — dense Hermitian eigenproblems, null spaces, solves;
//! - [`radialpd`] — Gram matrices, strict positive definiteness, the function
//!   catalog and Schoenberg mixtures;
//! - [`config`] — interaction-center configurations, extension parameters,
//!   boundary maps and the E0/E1 interaction matrices;
//! - [`weyl`] — the Weyl matrix M(z), boundary values, imaginary parts and
//!   the γ-field;
//! - [`spectral`] — negative-eigenvalue solver, counting via M(0),
//!   non-negativity classification and the a.c.-band certification.
//!
//! With the default `parallel` feature the grid sweeps and randomized
//! searches run on rayon; without it the same code paths run sequentially
//! and produce identical results.

mod dd;
mod exec;
#[cfg(test)]
mod testutil;

pub mod config;
pub mod error;
pub mod linalg;
pub mod radialpd;
pub mod spectral;
pub mod specfun;
pub mod weyl;

pub use error::{Error, Result};
