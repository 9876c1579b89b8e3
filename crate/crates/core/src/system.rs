//! The system itself: parameters, solution tuples, residuals.
//!
//! ```text
//! f_i' = f_i (f_{i+1} - f_{i+2} + f_{i+3} - f_{i+4}) + α_i,   i mod 5
//! f_0 + ... + f_4 = t,   α_0 + ... + α_4 = 1
//! ```

use std::fmt;
use std::ops::Index;

use num_traits::One;
use serde::Serialize;

use crate::arith::{fmt_rational, parse_rational, parse_rf, Rational, RationalFunction};
use crate::error::{Error, Result};

/// Parameter point `(α_0, ..., α_4)` with `Σα = 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamVec([Rational; 5]);

impl ParamVec {
    pub fn new(alpha: [Rational; 5]) -> Result<Self> {
        let s: Rational = alpha.iter().sum();
        if !s.is_one() {
            return Err(Error::Contract(format!("parameters sum to {}, expected 1", fmt_rational(&s))));
        }
        Ok(ParamVec(alpha))
    }

    /// Internal constructor for values that sum to 1 by construction.
    pub(crate) fn from_array_unchecked(alpha: [Rational; 5]) -> Self {
        debug_assert!(alpha.iter().sum::<Rational>().is_one());
        ParamVec(alpha)
    }

    /// From `(numerator, denominator)` pairs.
    pub fn from_pairs(p: [(i64, i64); 5]) -> Result<Self> {
        Self::new(p.map(|(n, d)| crate::arith::rat(n, d)))
    }

    pub fn from_ints(p: [i64; 5]) -> Result<Self> {
        Self::new(p.map(crate::arith::int))
    }

    /// Parses `"a0,a1,a2,a3,a4"` with each entry `p` or `p/q`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 5 {
            return Err(Error::Contract(format!("expected 5 comma-separated rationals, got {}", parts.len())));
        }
        let mut v = Vec::with_capacity(5);
        for p in parts {
            v.push(parse_rational(p)?);
        }
        Self::new(v.try_into().unwrap())
    }

    pub fn as_array(&self) -> &[Rational; 5] {
        &self.0
    }

    /// `α_i` with the index read mod 5.
    pub fn get(&self, i: usize) -> &Rational {
        &self.0[i % 5]
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|a| a.is_integer())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(fmt_rational).collect()
    }
}

impl Index<usize> for ParamVec {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        self.get(i)
    }
}

impl fmt::Display for ParamVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

impl fmt::Debug for ParamVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamVec{self}")
    }
}

impl Serialize for ParamVec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

/// Candidate solution `(f_0, ..., f_4)` with `Σf = t`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SolutionTuple([RationalFunction; 5]);

impl SolutionTuple {
    pub fn new(f: [RationalFunction; 5]) -> Result<Self> {
        let s = f.iter().fold(RationalFunction::zero(), |acc, x| &acc + x);
        if s != RationalFunction::t() {
            return Err(Error::Contract(format!("components sum to {s}, expected t")));
        }
        Ok(SolutionTuple(f))
    }

    pub(crate) fn from_array_unchecked(f: [RationalFunction; 5]) -> Self {
        SolutionTuple(f)
    }

    /// Parses five component strings.
    pub fn parse(parts: &[&str]) -> Result<Self> {
        if parts.len() != 5 {
            return Err(Error::Contract(format!("expected 5 components, got {}", parts.len())));
        }
        let mut v = Vec::with_capacity(5);
        for p in parts {
            v.push(parse_rf(p)?);
        }
        Self::new(v.try_into().unwrap())
    }

    /// `(c_0 t, ..., c_4 t)`
    pub fn linear(c: [Rational; 5]) -> Result<Self> {
        Self::new(c.map(RationalFunction::linear))
    }

    pub fn as_array(&self) -> &[RationalFunction; 5] {
        &self.0
    }

    pub fn get(&self, i: usize) -> &RationalFunction {
        &self.0[i % 5]
    }

    pub fn max_degree(&self) -> usize {
        self.0.iter().map(RationalFunction::max_degree).max().unwrap_or(0)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(ToString::to_string).collect()
    }
}

impl Index<usize> for SolutionTuple {
    type Output = RationalFunction;
    fn index(&self, i: usize) -> &RationalFunction {
        self.get(i)
    }
}

impl fmt::Display for SolutionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().enumerate().map(|(i, x)| format!("f{i} = {x}")).collect();
        write!(f, "{}", parts.join("; "))
    }
}

impl fmt::Debug for SolutionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SolutionTuple({self})")
    }
}

impl Serialize for SolutionTuple {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

/// `f_{i+1} - f_{i+2} + f_{i+3} - f_{i+4}`
pub fn alternating_tail(sol: &SolutionTuple, i: usize) -> RationalFunction {
    let a = sol.get(i + 1) - sol.get(i + 2);
    let b = sol.get(i + 3) - sol.get(i + 4);
    &a + &b
}

/// `f_i' - f_i (f_{i+1} - f_{i+2} + f_{i+3} - f_{i+4}) - α_i`
pub fn residual(i: usize, sol: &SolutionTuple, params: &ParamVec) -> RationalFunction {
    let rhs = &(sol.get(i) * &alternating_tail(sol, i)) + &RationalFunction::constant(params.get(i).clone());
    &sol.get(i).derivative() - &rhs
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub ok: bool,
    pub residuals: Vec<RationalFunction>,
    pub sum_defect: RationalFunction,
    pub failures: Vec<String>,
}

/// Checks the five equations and `Σf = t`.
pub fn verify_solution(sol: &SolutionTuple, params: &ParamVec) -> VerifyReport {
    let residuals: Vec<RationalFunction> = (0..5).map(|i| residual(i, sol, params)).collect();
    let total = sol.0.iter().fold(RationalFunction::zero(), |acc, x| &acc + x);
    let sum_defect = &total - &RationalFunction::t();
    let mut failures = Vec::new();
    for (i, r) in residuals.iter().enumerate() {
        if !r.is_zero() {
            failures.push(format!("equation {i}: residual {r}"));
        }
    }
    if !sum_defect.is_zero() {
        failures.push(format!("sum constraint: f0+...+f4 - t = {sum_defect}"));
    }
    VerifyReport { ok: failures.is_empty(), residuals, sum_defect, failures }
}

/// `(f_0, ..., f_4) ↦ (-f_0(-t), ..., -f_4(-t))`
pub fn negate_t(sol: &SolutionTuple) -> SolutionTuple {
    SolutionTuple(sol.0.clone().map(|f| -f.reflect()))
}

pub fn is_odd(sol: &SolutionTuple) -> bool {
    negate_t(sol) == *sol
}

/// With `f_3 ≡ f_4 ≡ 0`, checks `f_j' = f_j (f_{j+1} - f_{j+2}) + α_j` for
/// `j mod 3`.
pub fn a2_embedding_check(sol: &SolutionTuple, params: &ParamVec) -> Result<bool> {
    if !sol[3].is_zero() || !sol[4].is_zero() {
        return Err(Error::Precondition("a2 embedding needs f3 = f4 = 0".into()));
    }
    Ok((0..3).all(|j| {
        let tail = sol.get((j + 1) % 3) - sol.get((j + 2) % 3);
        let rhs = &(sol.get(j) * &tail) + &RationalFunction::constant(params[j].clone());
        (&sol.get(j).derivative() - &rhs).is_zero()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_rf;

    fn sol(parts: [&str; 5]) -> SolutionTuple {
        SolutionTuple::parse(&parts).unwrap()
    }

    fn pv(s: &str) -> ParamVec {
        ParamVec::parse(s).unwrap()
    }

    #[test]
    fn residual_examples() {
        let a = sol(["t", "0", "0", "0", "0"]);
        assert!(residual(0, &a, &pv("1,0,0,0,0")).is_zero());
        let c = sol(["t/5"; 5]);
        assert!(residual(0, &c, &pv("1/5,1/5,1/5,1/5,1/5")).is_zero());
        assert_eq!(residual(0, &a, &pv("0,1,0,0,0")), RationalFunction::one());
    }

    #[test]
    fn verify_examples() {
        assert!(verify_solution(&sol(["t/3", "t/3", "t/3", "0", "0"]), &pv("1/3,1/3,1/3,0,0")).ok);
        assert!(verify_solution(&sol(["t", "0", "0", "0", "0"]), &pv("1,0,0,0,0")).ok);
        let s0 = sol(["t", "1/t", "0", "0", "-1/t"]);
        assert!(verify_solution(&s0, &pv("-1,1,0,0,1")).ok);
        let bad = verify_solution(&s0, &pv("1,0,0,0,0"));
        assert!(!bad.ok && bad.failures.len() == 3);
    }

    #[test]
    fn oddness_examples() {
        let a = sol(["t", "0", "0", "0", "0"]);
        assert_eq!(negate_t(&a), a);
        let s0 = sol(["t", "1/t", "0", "0", "-1/t"]);
        assert!(is_odd(&s0));
        assert!(is_odd(&sol(["t/5"; 5])));
        let synthetic = sol(["t + 1", "-1", "0", "0", "0"]);
        assert_eq!(negate_t(&synthetic)[0], parse_rf("t - 1").unwrap());
        assert!(!is_odd(&synthetic));
    }

    #[test]
    fn constructors_reject_bad_sums() {
        assert!(ParamVec::parse("1,1,0,0,0").is_err());
        assert!(ParamVec::parse("1,0,0,0").is_err());
        assert!(ParamVec::parse("0.5,0.5,0,0,0").is_err());
        assert!(SolutionTuple::parse(&["t", "1", "0", "0", "0"]).is_err());
    }

    #[test]
    fn a2_embedding_examples() {
        assert!(a2_embedding_check(&sol(["t/3", "t/3", "t/3", "0", "0"]), &pv("1/3,1/3,1/3,0,0")).unwrap());
        assert!(a2_embedding_check(&sol(["t", "0", "0", "0", "0"]), &pv("1,0,0,0,0")).unwrap());
        assert!(a2_embedding_check(&sol(["t/5"; 5]), &pv("1/5,1/5,1/5,1/5,1/5")).is_err());
    }
}
