//! Exact rational solutions of the A4(1) Painleve system.

pub mod arith;
pub mod backlund;
pub mod classifier;
pub mod cli;
pub mod constructor;
pub mod error;
pub mod hamiltonian;
pub mod laurent_analysis;
pub mod limits;
pub mod system;

pub use arith::{Polynomial, Rational, RationalFunction};
pub use error::{Error, Result};
pub use system::{ParamVec, SolutionTuple};
