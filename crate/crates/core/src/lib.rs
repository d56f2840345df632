//! Strong tractability analysis for linear problems on Hilbert spaces.
//!
//! The crate computes information complexity from eigenvalue sequences,
//! counts multivariate tensor-product spectra exactly, approximates
//! Sobolev-space approximation numbers, evaluates integration cost bounds,
//! and classifies problems by `(s, t)` tractability with numerical evidence.

pub mod budget;
pub mod classify;
pub mod cli;
pub mod error;
pub mod hilbert;
pub mod integration;
pub mod num;
pub mod schema;
pub mod sobolev;
pub mod spectra;
pub mod tensor;
pub mod trend;
pub mod verify;

pub use error::{Error, Result};
