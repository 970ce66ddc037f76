//! Spin density matrices of two particles drawn from a thermal ideal quantum
//! gas, and their separability.
//!
//! The pipeline runs in three layers:
//!
//! * [`statmech`]: the exchange amplitude `f` of photon, massive Bose and
//!   zero-temperature Fermi gases as a function of reduced separation;
//! * [`spinstate`]: the normalized two-spin density matrix built from `f`;
//! * [`separability`]: partial transposition, the PPT test and negativity,
//!   and the explicit separable decomposition of the two-qutrit state.
//!
//! [`cli`] wraps these for the `thermal-spin` binary.

pub mod cli;
pub mod error;
pub mod matrix;
pub mod separability;
pub mod spinstate;
pub mod statmech;

pub use error::{Error, Result};
pub use matrix::RealMatrix;
