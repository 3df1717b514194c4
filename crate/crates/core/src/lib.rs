//! Barnes multiple zeta functions, bilateral zeta functions, multiple
//! Bernoulli polynomials and multiple q-shifted factorials.
//!
//! Every complex parameter whose power is taken carries an explicit argument
//! ([`DirectedComplex`]), so branch choices such as `e^{πi}ω` versus
//! `e^{-πi}ω` stay visible in the API.

pub mod barnes;
pub mod bernoulli;
pub mod bilateral;
pub mod cli;
pub mod dcx;
pub mod error;
pub mod params;
pub mod qprod;
mod qseries;
pub mod verify;

pub use dcx::{cpow, gamma, rgamma, DirectedComplex};
pub use error::{Error, Result};
pub use params::{NormalizedParams, ParameterVector, Turn};
