//! Pole structure of solutions: types at `∞`, closed forms for the first
//! coefficients there, the order-by-order expansion, and the audit of
//! finite poles.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::arith::laurent::{expand, LaurentSeries, Point};
use crate::arith::residue::{residue_at_infinity, residue_polynomial, residue_sum_general};
use crate::arith::{fmt_rational, int, rat, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::system::{ParamVec, SolutionTuple};

/// Which components carry a simple pole at `∞`, by base index `i`:
/// `A1`: `f_i`; `A2`: `f_i, f_{i+1}, f_{i+3}`; `B`: `f_i, f_{i+1}, f_{i+2}`;
/// `C`: all five.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InfinityType {
    A1(usize),
    A2(usize),
    B(usize),
    C,
}

impl InfinityType {
    pub fn base(self) -> Option<usize> {
        match self {
            InfinityType::A1(i) | InfinityType::A2(i) | InfinityType::B(i) => Some(i),
            InfinityType::C => None,
        }
    }

    /// Every type, in a fixed order.
    pub fn all() -> Vec<InfinityType> {
        let mut v = Vec::new();
        for i in 0..5 {
            v.push(InfinityType::A1(i));
        }
        for i in 0..5 {
            v.push(InfinityType::A2(i));
        }
        for i in 0..5 {
            v.push(InfinityType::B(i));
        }
        v.push(InfinityType::C);
        v
    }

    /// Coefficients of `t` in each component.
    pub fn leading(self) -> [Rational; 5] {
        let mut c: [Rational; 5] = Default::default();
        match self {
            InfinityType::A1(i) => c[i] = int(1),
            InfinityType::A2(i) => {
                c[i] = int(1);
                c[(i + 1) % 5] = int(1);
                c[(i + 3) % 5] = int(-1);
            }
            InfinityType::B(i) => {
                for k in 0..3 {
                    c[(i + k) % 5] = rat(1, 3);
                }
            }
            InfinityType::C => c = std::array::from_fn(|_| rat(1, 5)),
        }
        c
    }

    /// Indices of the components with a pole at `∞`.
    pub fn pole_set(self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..5).filter(|&j| !self.leading()[j].is_zero()).collect();
        v.sort();
        v
    }
}

impl fmt::Display for InfinityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InfinityType::A1(i) => write!(f, "A1({i})"),
            InfinityType::A2(i) => write!(f, "A2({i})"),
            InfinityType::B(i) => write!(f, "B({i})"),
            InfinityType::C => write!(f, "C"),
        }
    }
}

impl FromStr for InfinityType {
    type Err = Error;
    /// Accepts `C`, `A1(2)`, `A1:2`, `B3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("c") {
            return Ok(InfinityType::C);
        }
        let bad = || Error::Contract(format!("unknown pole type {s:?}; use A1(i), A2(i), B(i) or C"));
        let (kind, rest) = if let Some(r) = s.strip_prefix("A1") {
            ("A1", r)
        } else if let Some(r) = s.strip_prefix("A2") {
            ("A2", r)
        } else if let Some(r) = s.strip_prefix('B') {
            ("B", r)
        } else {
            return Err(bad());
        };
        let digits = rest.trim_matches(|c: char| c == '(' || c == ')' || c == ':' || c.is_whitespace());
        let i: usize = digits.parse().map_err(|_| bad())?;
        if i > 4 {
            return Err(bad());
        }
        Ok(match kind {
            "A1" => InfinityType::A1(i),
            "A2" => InfinityType::A2(i),
            _ => InfinityType::B(i),
        })
    }
}

impl Serialize for InfinityType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Coefficients of `t` and `t⁻¹` at `∞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfinityProfile {
    pub leading: [Rational; 5],
    pub subleading: [Rational; 5],
}

impl Serialize for InfinityProfile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Doc {
            leading: Vec<String>,
            subleading: Vec<String>,
        }
        Doc {
            leading: self.leading.iter().map(fmt_rational).collect(),
            subleading: self.subleading.iter().map(fmt_rational).collect(),
        }
        .serialize(s)
    }
}

/// Reads off which components have a pole at `∞` and names the type.
pub fn classify_infinity(sol: &SolutionTuple) -> Result<InfinityType> {
    let mut poles = Vec::new();
    for j in 0..5 {
        match sol[j].order_at_infinity() {
            Some(o) if o > 1 => {
                return Err(Error::UnknownPattern(format!("f{j} has a pole of order {o} at infinity")))
            }
            Some(1) => poles.push(j),
            _ => {}
        }
    }
    InfinityType::all()
        .into_iter()
        .find(|ty| ty.pole_set() == poles)
        .ok_or_else(|| Error::UnknownPattern(format!("poles at infinity in components {poles:?}")))
}

/// Closed forms for the `t` and `t⁻¹` coefficients of each type.
pub fn predicted_profile(ty: InfinityType, params: &ParamVec) -> InfinityProfile {
    let a = |k: usize| params[k].clone();
    let mut sub: [Rational; 5] = Default::default();
    match ty {
        InfinityType::A1(i) => {
            sub[i] = -a(i + 1) + a(i + 2) - a(i + 3) + a(i + 4);
            sub[(i + 1) % 5] = a(i + 1);
            sub[(i + 2) % 5] = -a(i + 2);
            sub[(i + 3) % 5] = a(i + 3);
            sub[(i + 4) % 5] = -a(i + 4);
        }
        InfinityType::A2(i) => {
            let two = int(2);
            let three = int(3);
            sub[i] = int(-1) + a(i) - &two * a(i + 2) + &two * a(i + 4);
            sub[(i + 1) % 5] = int(1) - a(i + 1) - &two * a(i + 2) + &two * a(i + 4);
            sub[(i + 2) % 5] = a(i + 2);
            sub[(i + 3) % 5] = -a(i) + a(i + 1) + &three * a(i + 2) - &three * a(i + 4);
            sub[(i + 4) % 5] = -a(i + 4);
        }
        InfinityType::B(i) => {
            let three = int(3);
            sub[i] = a(i + 1) - a(i + 2) - &three * a(i + 3) - a(i + 4);
            sub[(i + 1) % 5] = a(i + 2) - a(i) - a(i + 3) + a(i + 4);
            sub[(i + 2) % 5] = a(i) - a(i + 1) + a(i + 3) + &three * a(i + 4);
            sub[(i + 3) % 5] = &three * a(i + 3);
            sub[(i + 4) % 5] = -&three * a(i + 4);
        }
        InfinityType::C => {
            for (j, s) in sub.iter_mut().enumerate() {
                *s = int(3) * a(j + 1) + a(j + 2) - a(j + 3) - int(3) * a(j + 4);
            }
        }
    }
    InfinityProfile { leading: ty.leading(), subleading: sub }
}

/// Unique solution of an overdetermined exact linear system, if any.
fn solve_unique(mut m: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let rows = m.len();
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&k| !m[k][c].is_zero()) else {
            return None;
        };
        m.swap(r, p);
        b.swap(r, p);
        let inv = m[r][c].recip();
        for k in 0..rows {
            if k != r && !m[k][c].is_zero() {
                let factor = &m[k][c] * &inv;
                for cc in c..cols {
                    let d = &factor * &m[r][cc];
                    m[k][cc] -= d;
                }
                let d = &factor * &b[r];
                b[k] -= d;
            }
        }
        r += 1;
    }
    if b[r..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    Some((0..cols).map(|c| &b[c] / &m[c][c]).collect())
}

/// Sign of `f_l` in `f_{j+1} - f_{j+2} + f_{j+3} - f_{j+4}`.
fn tail_sign(j: usize, l: usize) -> i64 {
    match (l + 5 - j) % 5 {
        1 | 3 => 1,
        2 | 4 => -1,
        _ => 0,
    }
}

/// Formal expansion at `∞` of the unique solution germ of type `ty`, down to
/// exponent `floor`, obtained by equating coefficients in the system.
///
/// Level `n` (the `t^n` coefficients) is fixed by the `t^{n+1}` coefficient
/// of every equation together with `Σ c_j[n] = 0`; the linear part is the same
/// at every level. The `t⁻¹` level is compared with [`predicted_profile`].
pub fn recurrence_expand(ty: InfinityType, params: &ParamVec, floor: i64) -> Result<[LaurentSeries; 5]> {
    if floor > -1 {
        return Err(Error::Precondition(format!("floor {floor} must be at most -1")));
    }
    let depth = (1 - floor) as usize + 1;
    // c[j][1 - k] is the coefficient of t^k in f_j
    let mut c: Vec<Vec<Rational>> = vec![vec![Rational::zero(); depth]; 5];
    let lead = ty.leading();
    for j in 0..5 {
        c[j][0] = lead[j].clone();
    }
    let tail = |c: &Vec<Vec<Rational>>, j: usize, idx: usize| -> Rational {
        let mut s = Rational::zero();
        for l in 0..5 {
            match tail_sign(j, l) {
                1 => s += &c[l][idx],
                -1 => s -= &c[l][idx],
                _ => {}
            }
        }
        s
    };
    let mut matrix: Vec<Vec<Rational>> = Vec::with_capacity(6);
    for j in 0..5 {
        let lj1 = tail(&c, j, 0);
        let row: Vec<Rational> = (0..5)
            .map(|l| {
                let mut v = &lead[j] * int(tail_sign(j, l));
                if l == j {
                    v += &lj1;
                }
                v
            })
            .collect();
        matrix.push(row);
    }
    matrix.push(vec![int(1); 5]);

    for n in (floor..=0).rev() {
        let m = n + 1;
        let mut rhs = Vec::with_capacity(6);
        for j in 0..5 {
            // (m+1) c_j[m+1] - α_j δ_{m0} - Σ_{p+q=m, p,q>n} c_j[p] L_j[q]
            let mut v = if m < 1 { int(m + 1) * &c[j][(1 - (m + 1)) as usize] } else { Rational::zero() };
            if m == 0 {
                v -= &params[j];
            }
            for p in (n + 1)..=1 {
                let q = m - p;
                if q <= n || q > 1 {
                    continue;
                }
                let cp = &c[j][(1 - p) as usize];
                if cp.is_zero() {
                    continue;
                }
                v -= cp * tail(&c, j, (1 - q) as usize);
            }
            rhs.push(v);
        }
        rhs.push(Rational::zero());
        let sol = solve_unique(matrix.clone(), rhs)
            .ok_or_else(|| Error::Audit(format!("no unique formal expansion of type {ty} at level t^{n}")))?;
        for j in 0..5 {
            c[j][(1 - n) as usize] = sol[j].clone();
        }
    }

    let predicted = predicted_profile(ty, params);
    for j in 0..5 {
        if c[j][2] != predicted.subleading[j] {
            return Err(Error::Audit(format!(
                "type {ty}: t^-1 coefficient of f{j} is {} by recurrence, {} by closed form",
                fmt_rational(&c[j][2]),
                fmt_rational(&predicted.subleading[j])
            )));
        }
    }
    Ok(std::array::from_fn(|j| LaurentSeries::at_infinity(1, c[j].clone())))
}

/// Residue vectors at a finite pole that the solution structure allows,
/// as `(pattern, base index, residues)`.
pub fn residue_patterns() -> Vec<(u8, usize, [i64; 5])> {
    let mut out = Vec::new();
    for i in 0..5 {
        let mut v = [0; 5];
        v[i] = 1;
        v[(i + 1) % 5] = -1;
        out.push((1, i, v));
    }
    for i in 0..5 {
        let mut v = [0; 5];
        v[i] = -1;
        v[(i + 2) % 5] = 1;
        out.push((2, i, v));
    }
    for i in 0..5 {
        let mut v = [0; 5];
        v[(i + 1) % 5] = 3;
        v[(i + 2) % 5] = 1;
        v[(i + 3) % 5] = -1;
        v[(i + 4) % 5] = -3;
        out.push((3, i, v));
    }
    out
}

pub fn match_pattern(res: &[Rational; 5]) -> Option<(u8, usize)> {
    residue_patterns()
        .into_iter()
        .find(|(_, _, v)| (0..5).all(|j| res[j] == int(v[j])))
        .map(|(k, i, _)| (k, i))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PoleLocation {
    Infinity,
    Point(Rational),
    /// All roots of a squarefree polynomial with no rational roots.
    Factor(Polynomial),
}

impl fmt::Display for PoleLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PoleLocation::Infinity => write!(f, "t = inf"),
            PoleLocation::Point(c) => write!(f, "t = {}", fmt_rational(c)),
            PoleLocation::Factor(p) => write!(f, "roots of {p}"),
        }
    }
}

/// Residues of the five components at one location. For a `Factor`
/// location these are residue sums over its roots.
#[derive(Debug, Clone)]
pub struct PoleProfile {
    pub location: PoleLocation,
    pub residues: [Rational; 5],
    /// Constant terms of the expansions at a rational pole.
    pub constant_terms: Option<[Rational; 5]>,
    /// `(pattern, base index)` for a rational pole.
    pub pattern: Option<(u8, usize)>,
}

impl Serialize for PoleProfile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Doc {
            location: String,
            residues: Vec<String>,
            constant_terms: Option<Vec<String>>,
            pattern: Option<(u8, usize)>,
        }
        Doc {
            location: self.location.to_string(),
            residues: self.residues.iter().map(fmt_rational).collect(),
            constant_terms: self.constant_terms.as_ref().map(|c| c.iter().map(fmt_rational).collect()),
            pattern: self.pattern,
        }
        .serialize(s)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PoleAudit {
    pub ok: bool,
    pub poles: Vec<PoleProfile>,
    pub failures: Vec<String>,
}

fn is_odd_integer(q: &Rational) -> bool {
    q.is_integer() && q.numer().bit(0)
}

fn mulmod(a: &Polynomial, b: &Polynomial, m: &Polynomial) -> Polynomial {
    (a * b).rem(m)
}

/// Checks finite poles against the allowed structure: simple poles,
/// residues in `{±1, ±3}`, one of the three residue patterns per pole,
/// equal residues at `±c`, and the parity rule (`t = 0` is a pole of `f_i`
/// iff `Res_∞ f_i` is odd).
///
/// Poles at irrational points are checked through residue polynomials
/// modulo the product of their minimal factors, so every check stays in ℚ.
pub fn finite_pole_audit(sol: &SolutionTuple, _params: &ParamVec) -> PoleAudit {
    let mut failures = Vec::new();
    let mut poles = Vec::new();

    let res_inf: [Rational; 5] = std::array::from_fn(|j| residue_at_infinity(&sol[j]));
    poles.push(PoleProfile { location: PoleLocation::Infinity, residues: res_inf.clone(), constant_terms: None, pattern: None });

    // rational poles
    let mut rational: BTreeMap<Rational, ([Rational; 5], [Rational; 5])> = BTreeMap::new();
    let mut roots: Vec<Rational> = Vec::new();
    for j in 0..5 {
        for r in sol[j].den().rational_roots() {
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
    }
    roots.sort();
    for c in &roots {
        let mut res: [Rational; 5] = Default::default();
        let mut cst: [Rational; 5] = Default::default();
        for j in 0..5 {
            let s = expand(&sol[j], &Point::Finite(c.clone()), 0);
            if let Some(o) = s.top_exponent() {
                if o < -1 {
                    failures.push(format!("f{j} has a pole of order {} at t = {}", -o, fmt_rational(c)));
                }
            }
            res[j] = s.coeff(-1).unwrap_or_default();
            cst[j] = s.coeff(0).unwrap_or_default();
            if !res[j].is_zero() && res[j].abs() != int(1) && res[j].abs() != int(3) {
                failures.push(format!("f{j} has residue {} at t = {}", fmt_rational(&res[j]), fmt_rational(c)));
            }
        }
        let pattern = match_pattern(&res);
        if pattern.is_none() {
            let r: Vec<String> = res.iter().map(fmt_rational).collect();
            failures.push(format!("residues ({}) at t = {} match no pattern", r.join(", "), fmt_rational(c)));
        }
        rational.insert(c.clone(), (res.clone(), cst.clone()));
        poles.push(PoleProfile {
            location: PoleLocation::Point(c.clone()),
            residues: res,
            constant_terms: Some(cst),
            pattern,
        });
    }
    for (c, (res, _)) in &rational {
        if c.is_zero() {
            continue;
        }
        match rational.get(&-c) {
            Some((other, _)) if other == res => {}
            Some(_) => failures.push(format!(
                "residues at t = {} and t = {} differ",
                fmt_rational(c),
                fmt_rational(&-c)
            )),
            None => failures.push(format!(
                "t = {} is a pole but t = {} is not",
                fmt_rational(c),
                fmt_rational(&-c)
            )),
        }
    }

    // irrational poles, all at once
    let mut s = Polynomial::one();
    for j in 0..5 {
        let d = sol[j].den();
        let mut rad = d.exact_div(&Polynomial::gcd(d, &d.derivative()));
        for r in rad.rational_roots() {
            rad = rad.exact_div(&Polynomial::linear_root(&r));
        }
        if !rad.is_constant() {
            let g = Polynomial::gcd(&s, &rad);
            s = &s * &rad.exact_div(&g);
        }
    }
    if !s.is_constant() {
        let s = s.monic();
        let mut sums: [Rational; 5] = Default::default();
        let mut rpolys: Vec<Polynomial> = Vec::with_capacity(5);
        for j in 0..5 {
            let g = Polynomial::gcd(&s, sol[j].den());
            if g.is_constant() {
                rpolys.push(Polynomial::zero());
                continue;
            }
            match residue_polynomial(&sol[j], &g) {
                Ok(r) => {
                    let h = s.exact_div(&g);
                    let hinv = h.inverse_mod(&g).expect("coprime");
                    rpolys.push(mulmod(&mulmod(&r, &hinv, &g), &h, &s));
                }
                Err(e) => {
                    failures.push(format!("f{j}: {e}"));
                    rpolys.push(Polynomial::zero());
                }
            }
            sums[j] = residue_sum_general(&sol[j], &g).expect("factor of the denominator");
            if !sums[j].is_integer() {
                failures.push(format!("f{j}: residue sum {} over roots of {g} is not an integer", fmt_rational(&sums[j])));
            }
        }
        // every residue lies in {0, ±1, ±3}
        for (j, r) in rpolys.iter().enumerate() {
            let mut prod = Polynomial::one();
            for e in [0, 1, -1, 3, -3] {
                prod = mulmod(&prod, &(r - &Polynomial::constant(int(e))), &s);
            }
            if !prod.is_zero() {
                failures.push(format!("f{j}: some residue at a root of {s} lies outside {{0, ±1, ±3}}"));
            }
        }
        // every root carries one of the patterns
        let mut prod = Polynomial::one();
        for (_, _, v) in residue_patterns() {
            let mut dist = Polynomial::zero();
            for j in 0..5 {
                let d = &rpolys[j] - &Polynomial::constant(int(v[j]));
                dist = &dist + &mulmod(&d, &d, &s);
            }
            prod = mulmod(&prod, &dist, &s);
        }
        if !prod.is_zero() {
            failures.push(format!("residues at some root of {s} match no pattern"));
        }
        // pairing θ ↔ -θ
        if s.reflect().monic() != s {
            failures.push(format!("roots of {s} are not symmetric under t -> -t"));
        } else {
            for (j, r) in rpolys.iter().enumerate() {
                if r.reflect().rem(&s) != *r {
                    failures.push(format!("f{j}: residues at roots of {s} differ between θ and -θ"));
                }
            }
        }
        poles.push(PoleProfile { location: PoleLocation::Factor(s), residues: sums, constant_terms: None, pattern: None });
    }

    // parity rule
    for j in 0..5 {
        let r = &res_inf[j];
        if !r.is_integer() {
            failures.push(format!("Res_inf f{j} = {} is not an integer", fmt_rational(r)));
            continue;
        }
        let pole_at_zero = sol[j].den().eval(&Rational::zero()).is_zero();
        if is_odd_integer(r) != pole_at_zero {
            failures.push(format!(
                "parity: Res_inf f{j} = {} but t = 0 {} a pole",
                fmt_rational(r),
                if pole_at_zero { "is" } else { "is not" }
            ));
        }
    }

    PoleAudit { ok: failures.is_empty(), poles, failures }
}
