//! Dense univariate polynomials over ℚ in the variable `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{denominator_lcm, simplest_between, Rational};

/// `coeffs[k]` is the coefficient of `t^k`. No trailing zeros; the zero
/// polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `t`
    pub fn t() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `t - r`
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; handy for size guards.
    pub fn size_degree(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                Polynomial { coeffs: self.coeffs.iter().map(|c| c * &inv).collect() }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// `p(-t)`
    pub fn reflect(&self) -> Self {
        Polynomial {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// `p(t + c)`, by repeated synthetic division.
    pub fn shift(&self, c: &Rational) -> Self {
        let mut a = self.coeffs.clone();
        let n = a.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let add = &a[j + 1] * c;
                a[j] += add;
            }
        }
        Self::new(a)
    }

    /// Multiplicity of `t` as a factor; `None` for zero.
    pub fn trailing_zeros(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Divides by `t^k`; the low coefficients must be zero.
    pub fn shr(&self, k: usize) -> Self {
        Polynomial { coeffs: self.coeffs.iter().skip(k).cloned().collect() }
    }

    pub fn div_rem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = d.degree().expect("polynomial division by zero");
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let inv = d.leading().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, d: &Polynomial) -> Polynomial {
        self.div_rem(d).1
    }

    /// Exact quotient; panics in debug builds if the division leaves a remainder.
    pub fn exact_div(&self, d: &Polynomial) -> Polynomial {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
        let mut a = a.monic();
        let mut b = b.monic();
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a
    }

    /// Returns `(g, s, u)` with `s·a + u·b = g`, `g` monic.
    pub fn ext_gcd(a: &Polynomial, b: &Polynomial) -> (Polynomial, Polynomial, Polynomial) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut u0, mut u1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = &s0 - &(&q * &s1);
            let u2 = &u0 - &(&q * &u1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            u0 = std::mem::replace(&mut u1, u2);
        }
        if r0.is_zero() {
            return (r0, s0, u0);
        }
        let inv = r0.leading().recip();
        (r0.scale(&inv), s0.scale(&inv), u0.scale(&inv))
    }

    /// Inverse of `self` modulo `m`, if `gcd(self, m) = 1`.
    pub fn inverse_mod(&self, m: &Polynomial) -> Option<Polynomial> {
        let (g, s, _) = Self::ext_gcd(&self.rem(m), m);
        g.is_one().then(|| s.rem(m))
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer primitive associate: integer coefficients with content 1 and a
    /// positive leading coefficient. Returns `(scale, primitive)` with
    /// `self = scale · primitive`.
    pub fn primitive_part(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let l = denominator_lcm(&self.coeffs);
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let mut content = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if ints.last().is_some_and(Signed::is_negative) {
            content = -content;
        }
        for c in &mut ints {
            *c = &*c / &content;
        }
        (Rational::new(content, l), ints)
    }

    /// Squarefree decomposition (Yun): monic, pairwise coprime factors with
    /// multiplicities, in increasing multiplicity. Constants give `[]`.
    pub fn squarefree_decomposition(&self) -> Vec<(Polynomial, usize)> {
        let f = self.monic();
        if f.is_constant() {
            return Vec::new();
        }
        let fp = f.derivative();
        let a0 = Self::gcd(&f, &fp);
        let mut b = f.exact_div(&a0);
        let mut c = fp.exact_div(&a0);
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        let mut i = 1;
        loop {
            let a = Self::gcd(&b, &d);
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a);
            if b.is_constant() {
                break;
            }
            c = d.exact_div(&a);
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Number of sign variations of a Sturm sequence evaluated at `x`.
    fn sturm_variations(seq: &[Polynomial], x: &Rational) -> usize {
        let signs: Vec<i8> = seq
            .iter()
            .map(|p| {
                let v = p.eval(x);
                if v.is_positive() {
                    1
                } else if v.is_negative() {
                    -1
                } else {
                    0
                }
            })
            .filter(|&s| s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    fn sturm_sequence(&self) -> Vec<Polynomial> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(-r);
        }
        seq
    }

    /// All rational roots of a polynomial, each listed once, ascending.
    ///
    /// Works on the squarefree part: real roots are isolated with a Sturm
    /// sequence, each isolating interval is narrowed below `1/(2 a_n^2)` where
    /// `a_n` is the leading coefficient of the primitive integer associate,
    /// and the simplest rational inside is tested exactly. Two distinct
    /// rationals with denominators dividing `a_n` are at least `1/a_n^2`
    /// apart, so no rational root can be missed.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.is_constant() {
            return Vec::new();
        }
        let f = self.monic();
        let sf = f.exact_div(&Self::gcd(&f, &f.derivative()));
        let mut roots = Vec::new();
        let mut g = sf;
        if let Some(k) = g.trailing_zeros() {
            if k > 0 {
                roots.push(Rational::zero());
                g = g.shr(k);
            }
        }
        if g.is_constant() {
            return roots;
        }
        let (_, prim) = g.primitive_part();
        let an = prim.last().cloned().unwrap().abs();
        let width = Rational::new(BigInt::one(), BigInt::from(2) * &an * &an);
        // Cauchy bound on |roots|
        let lc = g.leading();
        let bound = Rational::one()
            + g.coeffs[..g.coeffs.len() - 1]
                .iter()
                .map(|c| (c / &lc).abs())
                .fold(Rational::zero(), |m, x| if x > m { x } else { m });
        let seq = g.sturm_sequence();
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            let count = Self::sturm_variations(&seq, &lo) - Self::sturm_variations(&seq, &hi);
            if count == 0 {
                continue;
            }
            if count > 1 {
                let mid = (&lo + &hi) / Rational::from_integer(2.into());
                if g.eval(&mid).is_zero() {
                    roots.push(mid.clone());
                }
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
                continue;
            }
            // exactly one root in (lo, hi]
            let (mut lo, mut hi) = (lo, hi);
            if g.eval(&hi).is_zero() {
                roots.push(hi);
                continue;
            }
            while &hi - &lo > width {
                let mid = (&lo + &hi) / Rational::from_integer(2.into());
                let v = g.eval(&mid);
                if v.is_zero() {
                    lo = mid.clone();
                    hi = mid;
                    break;
                }
                if Self::sturm_variations(&seq, &lo) - Self::sturm_variations(&seq, &mid) == 1 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            let cand = simplest_between(&lo, &hi);
            if g.eval(&cand).is_zero() && !roots.contains(&cand) {
                roots.push(cand);
            }
        }
        roots.sort();
        roots.dedup();
        roots
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Renders with integer-or-fraction coefficients in descending degree,
/// e.g. `t^2 - 2`, `t/3`. The output is accepted by the expression parser.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let a = c.abs();
            let mono = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            let num = a.numer();
            let den = a.denom();
            match (k, num.is_one()) {
                (0, _) => write!(f, "{num}")?,
                (_, true) => write!(f, "{mono}")?,
                (_, false) => write!(f, "{num}*{mono}")?,
            }
            if !den.is_one() {
                write!(f, "/{den}")?;
            }
        }
        Ok(())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -(self.clone())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);
