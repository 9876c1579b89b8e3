//! The extended affine Weyl group acting on parameters and solutions.
//!
//! `s_i` acts on parameters by `α_i ↦ -α_i`, `α_{i±1} ↦ α_{i±1} + α_i` and on
//! solutions by `f_{i+1} ↦ f_{i+1} + α_i/f_i`, `f_{i-1} ↦ f_{i-1} - α_i/f_i`.
//! `π` rotates concrete tuples: `(a_0, ..., a_4) ↦ (a_4, a_0, a_1, a_2, a_3)`.
//! When `f_i ≡ 0`, `s_i` is the identity on the pair (parameters included).

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::arith::{Rational, RationalFunction};
use crate::error::{Error, Result};
use crate::laurent_analysis::InfinityType;
use crate::system::{ParamVec, SolutionTuple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    S0,
    S1,
    S2,
    S3,
    S4,
    Pi,
    PiInv,
}

use Generator::*;

impl Generator {
    /// All generators in the fixed search order.
    pub const ALL: [Generator; 7] = [S0, S1, S2, S3, S4, Pi, PiInv];

    pub fn s(i: usize) -> Generator {
        [S0, S1, S2, S3, S4][i % 5]
    }

    /// `Some(i)` for `s_i`.
    pub fn reflection_index(self) -> Option<usize> {
        match self {
            S0 => Some(0),
            S1 => Some(1),
            S2 => Some(2),
            S3 => Some(3),
            S4 => Some(4),
            Pi | PiInv => None,
        }
    }

    pub fn inverse(self) -> Generator {
        match self {
            Pi => PiInv,
            PiInv => Pi,
            s => s,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.reflection_index() {
            Some(i) => write!(f, "s{i}"),
            None if *self == Pi => write!(f, "pi"),
            None => write!(f, "pi^-1"),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "s0" => S0,
            "s1" => S1,
            "s2" => S2,
            "s3" => S3,
            "s4" => S4,
            "pi" => Pi,
            "pi^-1" => PiInv,
            _ => return Err(Error::Contract(format!("unknown generator {s:?}"))),
        })
    }
}

/// A word, applied left to right. Never reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Generator>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn gens(&self) -> &[Generator] {
        &self.0
    }

    pub fn push(&mut self, g: Generator) {
        self.0.push(g);
    }

    pub fn extend(&mut self, w: &Word) {
        self.0.extend_from_slice(&w.0);
    }

    pub fn concat(&self, w: &Word) -> Word {
        let mut out = self.clone();
        out.extend(w);
        out
    }

    /// The inverse word: reversed, each letter inverted.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|g| g.inverse()).collect())
    }

    pub fn repeat(&self, n: usize) -> Word {
        Word(self.0.repeat(n))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", s.join(" "))
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace().map(str::parse).collect::<Result<Vec<_>>>().map(Word)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn rotate<T: Clone>(a: &[T; 5], g: Generator) -> [T; 5] {
    match g {
        Pi => [a[4].clone(), a[0].clone(), a[1].clone(), a[2].clone(), a[3].clone()],
        PiInv => [a[1].clone(), a[2].clone(), a[3].clone(), a[4].clone(), a[0].clone()],
        _ => unreachable!(),
    }
}

/// Generic parameter action of one generator.
pub fn apply_gen_params(g: Generator, params: &ParamVec) -> ParamVec {
    let a = params.as_array();
    let out = match g.reflection_index() {
        Some(i) => {
            let mut b = a.clone();
            let ai = &a[i];
            b[i] = -ai.clone();
            b[(i + 1) % 5] += ai;
            b[(i + 4) % 5] += ai;
            b
        }
        None => rotate(a, g),
    };
    ParamVec::from_array_unchecked(out)
}

/// Result of one joint step.
#[derive(Debug, Clone)]
pub struct Step {
    pub params: ParamVec,
    pub sol: SolutionTuple,
    /// `true` when `f_i ≡ 0` made `s_i` act as the identity.
    pub degenerate: bool,
}

/// Joint action on a parameter/solution pair.
pub fn apply_gen(g: Generator, params: &ParamVec, sol: &SolutionTuple, degree_cap: usize) -> Result<Step> {
    let Some(i) = g.reflection_index() else {
        let f = rotate(sol.as_array(), g);
        return Ok(Step {
            params: apply_gen_params(g, params),
            sol: SolutionTuple::from_array_unchecked(f),
            degenerate: false,
        });
    };
    let fi = &sol[i];
    if fi.is_zero() {
        return Ok(Step { params: params.clone(), sol: sol.clone(), degenerate: true });
    }
    let q = RationalFunction::constant(params[i].clone()).checked_div(fi)?;
    let mut f = sol.as_array().clone();
    f[(i + 1) % 5] = &f[(i + 1) % 5] + &q;
    f[(i + 4) % 5] = &f[(i + 4) % 5] - &q;
    for c in &f {
        c.check_degree(degree_cap)?;
    }
    Ok(Step {
        params: apply_gen_params(g, params),
        sol: SolutionTuple::from_array_unchecked(f),
        degenerate: false,
    })
}

#[derive(Debug, Clone)]
pub struct WordOutcome {
    pub params: ParamVec,
    pub sol: Option<SolutionTuple>,
    /// Positions in the word where the degenerate identity fired.
    pub degenerate_at: Vec<usize>,
}

/// Left-to-right fold. Without a solution only the generic action is used.
pub fn apply_word(w: &Word, params: &ParamVec, sol: Option<&SolutionTuple>, degree_cap: usize) -> Result<WordOutcome> {
    let mut p = params.clone();
    let mut degenerate_at = Vec::new();
    let Some(sol) = sol else {
        for &g in w.gens() {
            p = apply_gen_params(g, &p);
        }
        return Ok(WordOutcome { params: p, sol: None, degenerate_at });
    };
    let mut f = sol.clone();
    for (k, &g) in w.gens().iter().enumerate() {
        let step = apply_gen(g, &p, &f, degree_cap)?;
        if step.degenerate {
            degenerate_at.push(k);
        }
        p = step.params;
        f = step.sol;
    }
    Ok(WordOutcome { params: p, sol: Some(f), degenerate_at })
}

/// Generic action of a whole word on parameters.
pub fn apply_word_params(w: &Word, params: &ParamVec) -> ParamVec {
    w.gens().iter().fold(params.clone(), |p, &g| apply_gen_params(g, &p))
}

/// `T_i`: translation `α_{i-1} ↦ α_{i-1} + 1`, `α_i ↦ α_i - 1`.
pub fn shift_operator(i: usize) -> Word {
    // T_1 = π⁻¹ s4 s3 s2 s1 in this crate's rotation convention; the other
    // T_i are its cyclic relabelings.
    let w = match i % 5 {
        1 => [PiInv, S4, S3, S2, S1],
        2 => [S1, PiInv, S4, S3, S2],
        3 => [S2, S1, PiInv, S4, S3],
        4 => [S3, S2, S1, PiInv, S4],
        _ => [S4, S3, S2, S1, PiInv],
    };
    Word(w.to_vec())
}

/// `T_i^k` for any integer `k`.
pub fn shift_power(i: usize, k: i64) -> Word {
    let t = shift_operator(i);
    let base = if k >= 0 { t } else { t.inverse() };
    base.repeat(k.unsigned_abs() as usize)
}

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub relation: String,
    pub sample: ParamVec,
    pub image: ParamVec,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationReport {
    pub samples: usize,
    pub relations_checked: usize,
    pub violations: Vec<Violation>,
}

impl RelationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Pairs of words that must act identically on parameters.
pub fn defining_relations() -> Vec<(String, Word, Word)> {
    let s = Generator::s;
    let mut rel = Vec::new();
    for i in 0..5 {
        rel.push((format!("s{i}^2"), Word(vec![s(i), s(i)]), Word::empty()));
    }
    for i in 0..5 {
        for j in [i + 2, i + 3] {
            if j % 5 > i {
                let w = Word(vec![s(i), s(j)]).repeat(2);
                rel.push((format!("(s{i} s{})^2", j % 5), w, Word::empty()));
            }
        }
    }
    for i in 0..5 {
        let w = Word(vec![s(i), s(i + 1)]).repeat(3);
        rel.push((format!("(s{i} s{})^3", (i + 1) % 5), w, Word::empty()));
    }
    rel.push(("pi^5".into(), Word(vec![Pi; 5]), Word::empty()));
    rel.push(("pi pi^-1".into(), Word(vec![Pi, PiInv]), Word::empty()));
    for i in 0..5 {
        // s_i then π equals π then s_{i+1}
        rel.push((
            format!("pi.s{i} = s{}.pi", (i + 1) % 5),
            Word(vec![s(i), Pi]),
            Word(vec![Pi, s(i + 1)]),
        ));
    }
    rel
}

/// Checks every defining relation on every sample under the generic action.
pub fn check_weyl_relations(samples: &[ParamVec]) -> Result<RelationReport> {
    if samples.is_empty() {
        return Err(Error::Precondition("no samples".into()));
    }
    let rels = defining_relations();
    let mut violations = Vec::new();
    for p in samples {
        for (name, lhs, rhs) in &rels {
            let a = apply_word_params(lhs, p);
            let b = apply_word_params(rhs, p);
            if a != b {
                violations.push(Violation { relation: name.clone(), sample: p.clone(), image: a });
            }
        }
    }
    Ok(RelationReport { samples: samples.len(), relations_checked: rels.len() * samples.len(), violations })
}

/// Predicted pole type at `∞` after applying `g`, assuming `s_i` does not
/// degenerate and `α_i ≠ 0` (otherwise `s_i` fixes the solution).
pub fn type_action(g: Generator, ty: InfinityType) -> InfinityType {
    use InfinityType::*;
    let Some(i) = g.reflection_index() else {
        let d = if g == Pi { 1 } else { 4 };
        return match ty {
            A1(j) => A1((j + d) % 5),
            A2(j) => A2((j + d) % 5),
            B(j) => B((j + d) % 5),
            C => C,
        };
    };
    match ty {
        A1(j) => match (i + 5 - j) % 5 {
            0 => A1(j),
            1 => A1((j + 2) % 5),
            4 => A1((j + 3) % 5),
            2 => A2(j),
            _ => A2((j + 4) % 5),
        },
        A2(k) => match (i + 5 - k) % 5 {
            2 => A1(k),
            4 => A1((k + 1) % 5),
            _ => A2(k),
        },
        B(k) => match (i + 5 - k) % 5 {
            3 => B((k + 4) % 5),
            4 => B((k + 1) % 5),
            _ => B(k),
        },
        C => C,
    }
}

/// Generic action on fractional parts, `α mod ℤ`, with entries in `[0, 1)`.
pub fn apply_gen_frac(g: Generator, a: &[Rational; 5]) -> [Rational; 5] {
    let out = match g.reflection_index() {
        Some(i) => {
            let mut b = a.clone();
            b[i] = -a[i].clone();
            b[(i + 1) % 5] += &a[i];
            b[(i + 4) % 5] += &a[i];
            b
        }
        None => rotate(a, g),
    };
    out.map(|x| crate::arith::rational::frac(&x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_rf;

    fn pv(s: &str) -> ParamVec {
        ParamVec::parse(s).unwrap()
    }

    fn sol(parts: [&str; 5]) -> SolutionTuple {
        SolutionTuple::parse(&parts).unwrap()
    }

    const CAP: usize = 512;

    #[test]
    fn generic_action_examples() {
        assert_eq!(apply_gen_params(S0, &pv("1,0,0,0,0")), pv("-1,1,0,0,1"));
        assert_eq!(apply_gen_params(S0, &pv("-1/3,1/3,0,2/3,1/3")), pv("1/3,0,0,2/3,0"));
        assert_eq!(apply_gen_params(Pi, &pv("1/3,1/3,0,0,1/3")), pv("1/3,1/3,1/3,0,0"));
    }

    #[test]
    fn joint_action_examples() {
        let a = pv("1,0,0,0,0");
        let seed = sol(["t", "0", "0", "0", "0"]);
        let st = apply_gen(S0, &a, &seed, CAP).unwrap();
        assert_eq!(st.params, pv("-1,1,0,0,1"));
        assert_eq!(st.sol, sol(["t", "1/t", "0", "0", "-1/t"]));
        let st = apply_gen(S1, &a, &seed, CAP).unwrap();
        assert!(st.degenerate);
        assert_eq!((st.params, st.sol), (a, seed));
        let st = apply_gen(Pi, &pv("1/3,1/3,1/3,0,0"), &sol(["t/3", "t/3", "t/3", "0", "0"]), CAP).unwrap();
        assert_eq!(st.params, pv("0,1/3,1/3,1/3,0"));
        assert_eq!(st.sol[1], parse_rf("t/3").unwrap());
        assert!(st.sol[0].is_zero());
    }

    #[test]
    fn word_examples() {
        let p = pv("1/7,2/7,1/7,2/7,1/7");
        assert_eq!(apply_word_params(&Word::empty(), &p), p);
        assert_eq!(apply_word_params(&"s0 s0".parse().unwrap(), &p), p);
        assert_eq!(apply_word_params(&shift_operator(1), &pv("1,0,0,0,0")), pv("2,-1,0,0,0"));
        assert_eq!(apply_word_params(&shift_operator(1), &pv("0,0,0,0,1")), pv("1,-1,0,0,1"));
        assert_eq!(apply_word_params(&shift_operator(0), &pv("1,0,0,0,0")), pv("0,0,0,0,1"));
        let p2 = apply_word_params(&shift_operator(2), &p);
        assert_eq!(p2, pv("1/7,9/7,-6/7,2/7,1/7"));
    }

    #[test]
    fn degenerate_firings_are_reported() {
        let out = apply_word(&"s1 s0 s1".parse().unwrap(), &pv("1,0,0,0,0"), Some(&sol(["t", "0", "0", "0", "0"])), CAP)
            .unwrap();
        assert_eq!(out.degenerate_at, vec![0]);
        assert_eq!(out.params, pv("0,-1,1,0,1"));
        assert_eq!(out.sol.unwrap(), sol(["0", "1/t", "t", "0", "-1/t"]));
    }

    #[test]
    fn word_round_trip() {
        let w: Word = "pi s4 s3 pi^-1 s0".parse().unwrap();
        assert_eq!(w.to_string(), "pi s4 s3 pi^-1 s0");
        assert!("s5".parse::<Word>().is_err());
        let p = pv("1/7,2/7,1/7,2/7,1/7");
        assert_eq!(apply_word_params(&w.concat(&w.inverse()), &p), p);
    }

    #[test]
    fn relations_hold() {
        let r = check_weyl_relations(&[pv("1/7,2/7,1/7,2/7,1/7"), pv("3,-2,1/2,1/3,-5/6")]).unwrap();
        assert!(r.ok(), "{:?}", r.violations);
        assert!(check_weyl_relations(&[]).is_err());
    }

    #[test]
    fn type_action_examples() {
        use InfinityType::*;
        assert_eq!(type_action(S2, A1(0)), A2(0));
        assert_eq!(type_action(S0, B(2)), B(1));
        assert_eq!(type_action(Pi, A1(0)), A1(1));
        assert_eq!(type_action(PiInv, A1(0)), A1(4));
    }

    #[test]
    fn type_action_tracks_classification() {
        use crate::laurent_analysis::classify_infinity;
        let seeds = [
            (pv("1,0,0,0,0"), ["t", "0", "0", "0", "0"]),
            (pv("1/3,1/3,1/3,0,0"), ["t/3", "t/3", "t/3", "0", "0"]),
        ];
        for (p0, s0) in seeds {
            let s0 = SolutionTuple::parse(&s0).unwrap();
            let mut frontier = vec![(p0, s0)];
            for _ in 0..3 {
                let mut next = Vec::new();
                for (p, s) in &frontier {
                    let ty = classify_infinity(s).unwrap();
                    for g in Generator::ALL {
                        if let Some(i) = g.reflection_index() {
                            if num_traits::Zero::is_zero(&p[i]) {
                                continue;
                            }
                        }
                        let st = apply_gen(g, p, s, 512).unwrap();
                        let got = classify_infinity(&st.sol).unwrap();
                        assert_eq!(type_action(g, ty), got, "{g} on {ty} at {p}");
                        next.push((st.params, st.sol));
                    }
                }
                frontier = next;
            }
        }
    }
}
