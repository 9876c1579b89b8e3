//! Truncated Laurent expansions of rational functions at `∞` or at a
//! rational point.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::poly::Polynomial;
use super::ratfunc::RationalFunction;
use super::rational::{fmt_rational, Rational};
use super::ArithError;

/// Default number of terms kept below the top exponent.
pub const DEFAULT_TERMS: i64 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Point {
    Infinity,
    Finite(Rational),
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Infinity => write!(f, "inf"),
            Point::Finite(c) => write!(f, "{}", fmt_rational(c)),
        }
    }
}

/// Exact coefficients of a Laurent series on the window `[lo, hi]` of
/// exponents.
///
/// At `∞` the series is in powers of `t`, `hi` is the top exponent and `lo`
/// the truncation floor; above `hi` all coefficients vanish. At a finite
/// point `c` the series is in powers of `(t - c)`, `lo` is the leading
/// exponent and `hi` the truncation bound. Queries on the truncated side
/// are errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    point: Point,
    lo: i64,
    hi: i64,
    coeffs: Vec<Rational>,
    lead: Option<i64>,
}

impl LaurentSeries {
    /// Builds a series at `∞` from coefficients listed downward from `top`.
    pub fn at_infinity(top: i64, downward: Vec<Rational>) -> Self {
        let n = downward.len() as i64;
        let mut coeffs = downward;
        coeffs.reverse();
        let lo = top - n + 1;
        let lead = (0..coeffs.len()).rev().find(|&k| !coeffs[k].is_zero()).map(|k| lo + k as i64);
        LaurentSeries { point: Point::Infinity, lo, hi: top, coeffs, lead }
    }

    pub fn point(&self) -> &Point {
        &self.point
    }

    /// `true` when the expanded function is identically zero.
    pub fn is_zero_function(&self) -> bool {
        self.lead.is_none()
    }

    /// Leading exponent: highest nonzero at `∞`, lowest at a finite point.
    /// `None` for the zero function.
    pub fn top_exponent(&self) -> Option<i64> {
        self.lead
    }

    /// The truncation bound: lowest exact exponent at `∞`, highest at `c`.
    pub fn bound(&self) -> i64 {
        match self.point {
            Point::Infinity => self.lo,
            Point::Finite(_) => self.hi,
        }
    }

    fn at(&self, k: i64) -> &Rational {
        &self.coeffs[(k - self.lo) as usize]
    }

    pub fn coeff(&self, k: i64) -> Result<Rational, ArithError> {
        let truncated = match self.point {
            Point::Infinity => k < self.lo,
            Point::Finite(_) => k > self.hi,
        };
        if truncated && self.lead.is_some() {
            return Err(ArithError::Truncation { exponent: k, bound: self.bound() });
        }
        if k < self.lo || k > self.hi {
            Ok(Rational::zero())
        } else {
            Ok(self.at(k).clone())
        }
    }

    /// `(exponent, coefficient)` for every stored exponent, leading end first.
    pub fn terms(&self) -> Vec<(i64, Rational)> {
        let mut v: Vec<_> = (self.lo..=self.hi).map(|k| (k, self.at(k).clone())).collect();
        if self.point == Point::Infinity {
            v.reverse();
        }
        v
    }

    /// The truncated sum as a rational function.
    pub fn partial_sum(&self) -> RationalFunction {
        let var = match &self.point {
            Point::Infinity => RationalFunction::t(),
            Point::Finite(c) => RationalFunction::from_poly(Polynomial::linear_root(c)),
        };
        let mut acc = RationalFunction::zero();
        for (k, c) in self.terms() {
            if c.is_zero() {
                continue;
            }
            let mut m = RationalFunction::constant(c);
            let base = if k < 0 { var.recip().expect("nonzero variable") } else { var.clone() };
            for _ in 0..k.unsigned_abs() {
                m = &m * &base;
            }
            acc = &acc + &m;
        }
        acc
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = match &self.point {
            Point::Infinity => "t".to_string(),
            Point::Finite(c) if c.is_zero() => "t".to_string(),
            Point::Finite(c) if c.is_negative() => format!("(t + {})", fmt_rational(&-c)),
            Point::Finite(c) => format!("(t - {})", fmt_rational(c)),
        };
        let power = |k: i64| match k {
            0 => String::new(),
            1 => var.clone(),
            _ => format!("{var}^{k}"),
        };
        let mut out = String::new();
        for (k, c) in self.terms().into_iter().filter(|(_, c)| !c.is_zero()) {
            let (neg, mag) = (c.is_negative(), c.abs());
            let body = match (k, mag.is_one()) {
                (0, _) => fmt_rational(&mag),
                (_, true) => power(k),
                _ => format!("{}*{}", fmt_rational(&mag), power(k)),
            };
            match (out.is_empty(), neg) {
                (true, false) => out.push_str(&body),
                (true, true) => out.push_str(&format!("-{body}")),
                (false, false) => out.push_str(&format!(" + {body}")),
                (false, true) => out.push_str(&format!(" - {body}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        // first exponent not shown
        let next = match self.point {
            Point::Infinity => self.bound() - 1,
            Point::Finite(_) => self.bound() + 1,
        };
        write!(f, "{out} + O({var}^{next})")
    }
}

#[derive(Serialize)]
struct SeriesDoc {
    point: String,
    bound: i64,
    terms: Vec<(i64, String)>,
}

impl Serialize for LaurentSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SeriesDoc {
            point: self.point.to_string(),
            bound: self.bound(),
            terms: self
                .terms()
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, fmt_rational(&c)))
                .collect(),
        }
        .serialize(s)
    }
}

/// Power-series quotient `a/b` in one variable, `b(0) ≠ 0`, first `n` terms.
fn series_div(a: &[Rational], b: &[Rational], n: usize) -> Vec<Rational> {
    let b0_inv = b[0].recip();
    let mut out: Vec<Rational> = Vec::with_capacity(n);
    for j in 0..n {
        let mut acc = a.get(j).cloned().unwrap_or_else(Rational::zero);
        for i in 1..=j.min(b.len().saturating_sub(1)) {
            if !b[i].is_zero() {
                acc -= &b[i] * &out[j - i];
            }
        }
        out.push(acc * &b0_inv);
    }
    out
}

fn reversed(p: &Polynomial) -> Vec<Rational> {
    p.coeffs().iter().rev().cloned().collect()
}

/// Expands `f` at `point`. At `∞`, `bound` is the lowest exponent kept; at a
/// finite point it is the highest.
pub fn expand(f: &RationalFunction, point: &Point, bound: i64) -> LaurentSeries {
    match point {
        Point::Infinity => expand_infinity(f, bound),
        Point::Finite(c) => expand_finite(f, c, bound),
    }
}

fn expand_infinity(f: &RationalFunction, floor: i64) -> LaurentSeries {
    let Some(top) = f.order_at_infinity() else {
        return LaurentSeries { point: Point::Infinity, lo: floor, hi: floor - 1, coeffs: vec![], lead: None };
    };
    let floor = floor.min(top);
    // f = t^top · Ñ(u)/D̃(u) with u = 1/t
    let n = (top - floor + 1) as usize;
    let down = series_div(&reversed(f.num()), &reversed(f.den()), n);
    LaurentSeries::at_infinity(top, down)
}

fn expand_finite(f: &RationalFunction, c: &Rational, ceiling: i64) -> LaurentSeries {
    let point = Point::Finite(c.clone());
    if f.is_zero() {
        return LaurentSeries { point, lo: ceiling + 1, hi: ceiling, coeffs: vec![], lead: None };
    }
    let ns = f.num().shift(c);
    let ds = f.den().shift(c);
    let m = ns.trailing_zeros().unwrap() as i64;
    let v = ds.trailing_zeros().unwrap() as i64;
    let lead = m - v;
    let ceiling = ceiling.max(lead);
    let n = (ceiling - lead + 1) as usize;
    let coeffs = series_div(ns.shr(m as usize).coeffs(), ds.shr(v as usize).coeffs(), n);
    LaurentSeries { point, lo: lead, hi: ceiling, coeffs, lead: Some(lead) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;

    fn t() -> RationalFunction {
        RationalFunction::t()
    }

    #[test]
    fn expand_at_infinity_examples() {
        let f = &t() + &t().recip().unwrap();
        let s = expand(&f, &Point::Infinity, -3);
        assert_eq!(s.top_exponent(), Some(1));
        let got: Vec<_> = (-3..=1).rev().map(|k| s.coeff(k).unwrap()).collect();
        assert_eq!(got, vec![int(1), int(0), int(1), int(0), int(0)]);
        assert!(s.coeff(-4).is_err());
        assert_eq!(s.coeff(5).unwrap(), int(0));

        let s = expand(&t(), &Point::Infinity, -1);
        assert_eq!(s.coeff(0).unwrap(), int(0));
        assert_eq!(s.coeff(-1).unwrap(), int(0));
    }

    #[test]
    fn expand_at_finite_point() {
        let f = t().recip().unwrap();
        let s = expand(&f, &Point::Finite(int(0)), 2);
        assert_eq!(s.top_exponent(), Some(-1));
        assert_eq!(s.coeff(-1).unwrap(), int(1));
        for k in 0..=2 {
            assert_eq!(s.coeff(k).unwrap(), int(0));
        }
        assert!(s.coeff(3).is_err());
        assert_eq!(s.coeff(-2).unwrap(), int(0));
    }

    #[test]
    fn geometric_series() {
        // 1/(1 - t) at 0 = 1 + t + t^2 + ...
        let f = RationalFunction::new(Polynomial::one(), Polynomial::from_i64(&[1, -1])).unwrap();
        let s = expand(&f, &Point::Finite(int(0)), 5);
        assert!((0..=5).all(|k| s.coeff(k).unwrap() == int(1)));
        // at t = 1 it is -(t-1)^-1 exactly
        let s = expand(&f, &Point::Finite(int(1)), 3);
        assert_eq!(s.coeff(-1).unwrap(), int(-1));
        assert!((0..=3).all(|k| s.coeff(k).unwrap().is_zero()));
    }

    #[test]
    fn partial_sum_recovers_polynomials() {
        let f = RationalFunction::from_poly(Polynomial::from_i64(&[1, 2, 3]));
        assert_eq!(expand(&f, &Point::Infinity, 0).partial_sum(), f);
    }
}
