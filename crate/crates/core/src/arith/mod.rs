//! Exact arithmetic over ℚ: scalars, polynomials, rational functions,
//! truncated Laurent series and residues.

pub mod laurent;
pub mod parse;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod residue;

pub use laurent::{LaurentSeries, Point};
pub use parse::parse_rf;
pub use poly::Polynomial;
pub use ratfunc::{RationalFunction, RfOp, DEFAULT_DEGREE_CAP};
pub use rational::{fmt_rational, int, parse_rational, rat, Rational};
pub use residue::{denominator_factors, residue_at_infinity, residue_sum_over_factor};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("degree {degree} exceeds cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("coefficient of exponent {exponent} lies beyond the truncation bound {bound}")]
    Truncation { exponent: i64, bound: i64 },
    #[error("{0} does not divide the denominator")]
    NotAFactor(String),
    #[error("pole of order {order} at a root of {factor}")]
    HigherOrderPole { factor: String, order: usize },
}
