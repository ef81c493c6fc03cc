//! Exact Clifford/Kähler algebra kernel.

pub mod clifford;
pub mod error;
pub mod format;
pub mod idempotent;
pub mod operators;
pub mod parse;
pub mod report;
pub mod rotor;
pub mod sample;
pub mod scalar;
pub mod suite;
pub mod tensor;

pub use error::{Error, Result};
