use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::poly::Polynomial;
use super::rational::Rational;
use super::ArithError;

/// Default cap on numerator/denominator degree for guarded operations.
pub const DEFAULT_DEGREE_CAP: usize = 512;

/// A reduced fraction `num/den` of polynomials in `t`.
///
/// Canonical form: `den` is monic and `gcd(num, den) = 1`; zero is `0/1`.
/// Two rational functions are equal exactly when their fields are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RfOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
}

impl RationalFunction {
    /// Builds and normalizes `num/den`.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let inv = den.leading().recip();
            return RationalFunction { num: num.scale(&inv), den: Polynomial::one() };
        }
        let g = Polynomial::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let lc = den.leading();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.recip();
            RationalFunction { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn zero() -> Self {
        RationalFunction { num: Polynomial::zero(), den: Polynomial::one() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Polynomial::one() }
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::from_poly(Polynomial::t())
    }

    /// `c·t`
    pub fn linear(c: Rational) -> Self {
        Self::from_poly(Polynomial::monomial(c, 1))
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// `deg num - deg den`; `None` for zero.
    pub fn order_at_infinity(&self) -> Option<i64> {
        let n = self.num.degree()? as i64;
        Some(n - self.den.degree().unwrap() as i64)
    }

    pub fn max_degree(&self) -> usize {
        self.num.size_degree().max(self.den.size_degree())
    }

    pub fn check_degree(&self, cap: usize) -> Result<(), ArithError> {
        let d = self.max_degree();
        if d > cap {
            Err(ArithError::DegreeCap { degree: d, cap })
        } else {
            Ok(())
        }
    }

    pub fn recip(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let lc = self.num.leading().recip();
        Ok(RationalFunction { num: self.den.scale(&lc), den: self.num.scale(&lc) })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Quotient-rule derivative with respect to `t`.
    pub fn derivative(&self) -> Self {
        if self.den.is_one() {
            return Self::from_poly(self.num.derivative());
        }
        // (n/d)' = (n' d - n d') / d^2 ; reduce by g = gcd(d, d') first
        let dp = self.den.derivative();
        let g = Polynomial::gcd(&self.den, &dp);
        let d_over_g = self.den.exact_div(&g);
        let dp_over_g = dp.exact_div(&g);
        let num = &(&self.num.derivative() * &d_over_g) - &(&self.num * &dp_over_g);
        Self::normalized(num, &self.den * &d_over_g)
    }

    /// `f(-t)`
    pub fn reflect(&self) -> Self {
        Self::normalized(self.num.reflect(), self.den.reflect())
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational, ArithError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self.num.eval(x) / d)
    }

    /// Applies `op` with the degree guard on inputs and result.
    pub fn apply_op(op: RfOp, a: &Self, b: &Self, cap: usize) -> Result<Self, ArithError> {
        a.check_degree(cap)?;
        b.check_degree(cap)?;
        let out = match op {
            RfOp::Add => a + b,
            RfOp::Sub => a - b,
            RfOp::Mul => a * b,
            RfOp::Div => a.checked_div(b)?,
            RfOp::Neg => -a,
        };
        out.check_degree(cap)?;
        Ok(out)
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::normalized(&self.num + &rhs.num, self.den.clone());
        }
        let g = Polynomial::gcd(&self.den, &rhs.den);
        let a = self.den.exact_div(&g);
        let b = rhs.den.exact_div(&g);
        let num = &(&self.num * &b) + &(&rhs.num * &a);
        RationalFunction::normalized(num, &(&a * &b) * &g)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -self.num, den: self.den }
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        // cross-cancel before multiplying
        let g1 = Polynomial::gcd(&self.num, &rhs.den);
        let g2 = Polynomial::gcd(&rhs.num, &self.den);
        let n1 = self.num.exact_div(&g1);
        let d2 = rhs.den.exact_div(&g1);
        let n2 = rhs.num.exact_div(&g2);
        let d1 = self.den.exact_div(&g2);
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let lc = den.leading();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.recip();
            RationalFunction { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction { (&self).$m(&rhs) }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

/// Parseable rendering. Polynomials print with rational coefficients
/// (`t/3`); proper fractions print as integer polynomials, e.g.
/// `(t^2 + 1)/t` or `-1/t`.
impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let (sn, pn) = self.num.primitive_part();
        let (sd, pd) = self.den.primitive_part();
        let s = sn / sd;
        let num = Polynomial::new(
            pn.into_iter()
                .map(|c| Rational::from_integer(c) * Rational::from_integer(s.numer().clone()))
                .collect(),
        );
        let den = Polynomial::new(
            pd.into_iter()
                .map(|c| Rational::from_integer(c) * Rational::from_integer(s.denom().clone()))
                .collect(),
        );
        let n_terms = num.coeffs().iter().filter(|c| !c.is_zero()).count();
        let d_terms = den.coeffs().iter().filter(|c| !c.is_zero()).count();
        let num_s = num.to_string();
        let den_s = den.to_string();
        let bare_den = d_terms == 1 && den.leading().is_one();
        let neg_single = n_terms == 1 && num.leading().is_negative();
        match (n_terms > 1, bare_den) {
            (true, true) => write!(f, "({num_s})/{den_s}"),
            (true, false) => write!(f, "({num_s})/({den_s})"),
            (false, true) => write!(f, "{num_s}/{den_s}"),
            (false, false) if neg_single => write!(f, "{num_s}/({den_s})"),
            (false, false) => write!(f, "{num_s}/({den_s})"),
        }
    }
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
