//! Existence decision and reduction to the fundamental set.
//!
//! The label comes from enumerating the three arithmetic conditions
//! directly. The reduction word comes from two stages: a breadth-first
//! table over fractional parts `α mod ℤ` (a finite set for denominators 3
//! and 5) gives a word `w` with `w(r) ≡ α mod ℤ` for a representative `r`;
//! the remaining integer offset is removed with shift operators, which act
//! as pure translations.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::rational::{denominator_lcm, frac};
use crate::arith::{int, rat, Rational};
use crate::backlund::{apply_word_params, shift_power, Generator, Word};
use crate::error::{Error, Result};
use crate::system::ParamVec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Label {
    Class1,
    Class2,
    Class3,
    #[serde(rename = "None")]
    NoSolution,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::NoSolution => write!(f, "None"),
            l => write!(f, "{l:?}"),
        }
    }
}

/// Which condition matched: base index, the sign (class 2) or `j` (class 3),
/// and the pattern vector before scaling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub base: usize,
    pub sign: Option<i8>,
    pub j: Option<u8>,
    pub vector: [i64; 5],
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationResult {
    pub label: Label,
    pub witness: Option<Witness>,
    pub canonical: Option<ParamVec>,
    pub word_from_canonical: Option<Word>,
}

/// `(α_i, α_{i+1}, ..., α_{i+4})`
fn shifted(params: &ParamVec, i: usize) -> [Rational; 5] {
    std::array::from_fn(|k| params[i + k].clone())
}

fn congruent(a: &[Rational; 5], b: &[Rational; 5]) -> bool {
    (0..5).all(|k| (&a[k] - &b[k]).is_integer())
}

/// The three conditions, tried in tie-break order: smallest `i`, `+`
/// before `-`, smallest `j`.
pub fn class_witness(params: &ParamVec) -> (Label, Option<Witness>) {
    if params.is_integral() {
        return (Label::Class1, None);
    }
    // Every pattern below has all denominators dividing 3, or all dividing 5.
    let den = denominator_lcm(params.as_array().iter());
    let (thirds, fifths) = (den == BigInt::from(3), den == BigInt::from(5));
    for i in (0..5).filter(|_| thirds) {
        let s = shifted(params, i);
        for v in [[1, 1, 1, 0, 0], [1, -1, -1, 1, 0]] {
            for sign in [1i8, -1] {
                let target = v.map(|x| rat(sign as i64 * x, 3));
                if congruent(&s, &target) {
                    return (Label::Class2, Some(Witness { base: i, sign: Some(sign), j: None, vector: v }));
                }
            }
        }
    }
    for i in (0..5).filter(|_| fifths) {
        let s = shifted(params, i);
        for j in 1..=4u8 {
            for v in [[1, 1, 1, 1, 1], [1, 2, 1, 3, 3]] {
                let target = v.map(|x| rat(j as i64 * x, 5));
                if congruent(&s, &target) {
                    return (Label::Class3, Some(Witness { base: i, sign: None, j: Some(j), vector: v }));
                }
            }
        }
    }
    (Label::NoSolution, None)
}

/// Matched arithmetic pattern of the necessary conditions by pole type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum NecessaryPattern {
    TypeA,
    TypeB { base: usize, n1: u8, n3: u8, n4: u8 },
    TypeC { base: usize, n1: u8, n2: u8, n3: u8 },
}

/// Integer parameters, or the 3- or 5-denominator families indexed by
/// `n`'s in `{0, 1, 2}` resp. `{0, ..., 4}`.
pub fn necessary_condition(params: &ParamVec) -> Option<NecessaryPattern> {
    if params.is_integral() {
        return Some(NecessaryPattern::TypeA);
    }
    for base in 0..5 {
        let s = shifted(params, base);
        for n1 in 0..3u8 {
            for n3 in 0..3u8 {
                for n4 in 0..3u8 {
                    let (a, c, d) = (n1 as i64, n3 as i64, n4 as i64);
                    let v = [a - c, a, a + d, c, -d].map(|x| rat(x, 3));
                    if congruent(&s, &v) {
                        return Some(NecessaryPattern::TypeB { base, n1, n3, n4 });
                    }
                }
            }
        }
    }
    for base in 0..5 {
        let s = shifted(params, base);
        for n1 in 0..5u8 {
            for n2 in 0..5u8 {
                for n3 in 0..5u8 {
                    let (a, b, c) = (n1 as i64, n2 as i64, n3 as i64);
                    let v = [a + 2 * b + 3 * c, a + 2 * b + c, a, a + b, a + c].map(|x| rat(x, 5));
                    if congruent(&s, &v) {
                        return Some(NecessaryPattern::TypeC { base, n1, n2, n3 });
                    }
                }
            }
        }
    }
    None
}

pub fn in_fundamental_set(params: &ParamVec) -> bool {
    params.as_array().iter().all(|a| !a.is_negative() && *a <= int(1))
}

pub fn canonical_params(label: Label) -> Option<ParamVec> {
    match label {
        Label::Class1 => Some(ParamVec::from_ints([1, 0, 0, 0, 0]).unwrap()),
        Label::Class2 => Some(ParamVec::from_pairs([(1, 3), (1, 3), (1, 3), (0, 1), (0, 1)]).unwrap()),
        Label::Class3 => Some(ParamVec::from_pairs([(1, 5); 5]).unwrap()),
        Label::NoSolution => None,
    }
}

/// Representatives in the fundamental set for the 3- and 5-denominator
/// families, canonical one first.
pub fn fundamental_representatives(den: u8) -> Vec<ParamVec> {
    let p = |v: [(i64, i64); 5]| ParamVec::from_pairs(v).unwrap();
    match den {
        3 => vec![
            p([(1, 3), (1, 3), (1, 3), (0, 1), (0, 1)]),
            p([(2, 3), (0, 1), (0, 1), (1, 3), (0, 1)]),
            p([(1, 3), (0, 1), (0, 1), (2, 3), (0, 1)]),
            p([(0, 1), (1, 3), (0, 1), (1, 3), (1, 3)]),
            p([(1, 1), (0, 1), (0, 1), (0, 1), (0, 1)]),
        ],
        5 => vec![
            p([(1, 5); 5]),
            p([(1, 1), (0, 1), (0, 1), (0, 1), (0, 1)]),
            p([(3, 5), (0, 1), (1, 5), (1, 5), (0, 1)]),
            p([(1, 5), (0, 1), (2, 5), (2, 5), (0, 1)]),
            p([(1, 5), (2, 5), (0, 1), (0, 1), (2, 5)]),
            p([(3, 5), (1, 5), (0, 1), (0, 1), (1, 5)]),
        ],
        _ => Vec::new(),
    }
}

type FracState = [u8; 5];

/// Breadth-first orbits of the representatives under the generic action
/// on `(ℤ/dℤ)^5`: for each reached state, the representative it came from
/// and a word carrying that representative to it.
struct OrbitTable {
    den: u8,
    reached: HashMap<FracState, (usize, Word)>,
}

fn frac_state(p: &ParamVec, den: u8) -> Option<FracState> {
    let mut out = [0u8; 5];
    for (k, a) in p.as_array().iter().enumerate() {
        let x = frac(a) * int(den as i64);
        if !x.is_integer() {
            return None;
        }
        out[k] = x.to_integer().to_u8()?;
    }
    Some(out)
}

fn frac_step(g: Generator, s: &FracState, den: u8) -> FracState {
    let mut b = *s;
    match g.reflection_index() {
        Some(i) => {
            let ai = s[i];
            b[i] = (den - ai) % den;
            b[(i + 1) % 5] = (s[(i + 1) % 5] + ai) % den;
            b[(i + 4) % 5] = (s[(i + 4) % 5] + ai) % den;
        }
        None if g == Generator::Pi => b = [s[4], s[0], s[1], s[2], s[3]],
        None => b = [s[1], s[2], s[3], s[4], s[0]],
    }
    b
}

impl OrbitTable {
    fn build(den: u8) -> Self {
        let mut reached: HashMap<FracState, (usize, Word)> = HashMap::new();
        let mut queue = VecDeque::new();
        for (k, r) in fundamental_representatives(den).iter().enumerate() {
            let s = frac_state(r, den).expect("representative has the right denominator");
            if let std::collections::hash_map::Entry::Vacant(e) = reached.entry(s) {
                e.insert((k, Word::empty()));
                queue.push_back(s);
            }
        }
        while let Some(s) = queue.pop_front() {
            let (src, w) = reached[&s].clone();
            for g in Generator::ALL {
                let n = frac_step(g, &s, den);
                if let std::collections::hash_map::Entry::Vacant(e) = reached.entry(n) {
                    let mut w2 = w.clone();
                    w2.push(g);
                    e.insert((src, w2));
                    queue.push_back(n);
                }
            }
        }
        OrbitTable { den, reached }
    }

    fn get(den: u8) -> &'static OrbitTable {
        static T3: OnceLock<OrbitTable> = OnceLock::new();
        static T5: OnceLock<OrbitTable> = OnceLock::new();
        match den {
            3 => T3.get_or_init(|| OrbitTable::build(3)),
            _ => T5.get_or_init(|| OrbitTable::build(5)),
        }
    }

    fn lookup(&self, p: &ParamVec) -> Option<(ParamVec, Word)> {
        let s = frac_state(p, self.den)?;
        let (k, w) = self.reached.get(&s)?;
        Some((fundamental_representatives(self.den)[*k].clone(), w.clone()))
    }
}

/// Size of the orbit table for denominator 3 or 5 (number of fractional
/// states reachable from the representatives).
pub fn orbit_table_size(den: u8) -> usize {
    OrbitTable::get(den).reached.len()
}

/// Shift-operator word removing the integer offset `p - q` (entries sum to 0).
fn translation_word(p: &ParamVec, q: &ParamVec) -> Word {
    let delta: Vec<BigInt> = (0..5).map(|k| (&p[k] - &q[k]).to_integer()).collect();
    // T_i adds e_{i-1} - e_i, so δ_j = k_{j+1} - k_j.
    let mut ks = vec![BigInt::zero(); 5];
    for j in 0..4 {
        ks[j + 1] = &ks[j] + &delta[j];
    }
    let mut sorted = ks.clone();
    sorted.sort();
    let median = sorted[2].clone();
    let mut w = Word::empty();
    for (i, k) in ks.iter().enumerate() {
        let k = (k - &median).to_i64().expect("offset fits in i64");
        w.extend(&shift_power(i, k));
    }
    w
}

/// Word `w` and representative `r` in the fundamental set with `w(r) = p`
/// under the generic action. `r` need not be canonical.
pub fn reduce_to_fundamental(params: &ParamVec, word_cap: usize) -> Result<(Word, ParamVec)> {
    let (rep, frac_word) = if params.is_integral() {
        (canonical_params(Label::Class1).unwrap(), Word::empty())
    } else {
        [3u8, 5]
            .iter()
            .find_map(|&d| OrbitTable::get(d).lookup(params))
            .ok_or_else(|| Error::Precondition(format!("{params} matches no family reducible to the fundamental set")))?
    };
    let q = apply_word_params(&frac_word, &rep);
    let w = frac_word.concat(&translation_word(params, &q));
    if w.len() > word_cap {
        return Err(Error::Inconclusive(format!("reduction word has length {} over the cap {word_cap}", w.len())));
    }
    let back = apply_word_params(&w, &rep);
    if back != *params {
        return Err(Error::Audit(format!("reduction word maps {rep} to {back}, not {params}")));
    }
    Ok((w, rep))
}

/// Like [`reduce_to_fundamental`] but only onto one of the three canonical
/// seeds' parameters.
pub fn reduce_to_canonical(params: &ParamVec, word_cap: usize) -> Result<(Word, ParamVec)> {
    let (label, _) = class_witness(params);
    let Some(canon) = canonical_params(label) else {
        return Err(Error::Precondition(format!("{params} satisfies none of the existence conditions")));
    };
    let (w, rep) = reduce_to_fundamental(params, word_cap)?;
    if rep != canon {
        return Err(Error::Audit(format!("{params} reduced to {rep}, expected {canon}")));
    }
    Ok((w, rep))
}

pub fn classify_with_cap(params: &ParamVec, word_cap: usize) -> Result<ClassificationResult> {
    let (label, witness) = class_witness(params);
    if label == Label::NoSolution {
        return Ok(ClassificationResult { label, witness, canonical: None, word_from_canonical: None });
    }
    let (w, c) = reduce_to_canonical(params, word_cap)?;
    Ok(ClassificationResult { label, witness, canonical: Some(c), word_from_canonical: Some(w) })
}

/// Decides existence and, when solvable, attaches the reduction word.
pub fn classify(params: &ParamVec) -> Result<ClassificationResult> {
    classify_with_cap(params, crate::limits::Limits::from_env().word_cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pv(s: &str) -> ParamVec {
        ParamVec::parse(s).unwrap()
    }

    #[test]
    fn necessary_condition_examples() {
        assert_eq!(necessary_condition(&pv("1,0,0,0,0")), Some(NecessaryPattern::TypeA));
        assert!(matches!(
            necessary_condition(&pv("1/3,1/3,1/3,0,0")),
            Some(NecessaryPattern::TypeB { n1: 1, n3: 0, n4: 0, .. })
        ));
        assert_eq!(necessary_condition(&pv("1/2,1/2,0,0,0")), None);
        assert!(matches!(necessary_condition(&pv("2/3,0,0,1/3,0")), Some(NecessaryPattern::TypeB { .. })));
    }

    #[test]
    fn classify_examples() {
        let r = classify(&pv("1,0,0,0,0")).unwrap();
        assert_eq!(r.label, Label::Class1);
        assert_eq!(r.canonical, Some(pv("1,0,0,0,0")));
        assert!(r.word_from_canonical.unwrap().is_empty());
        let r = classify(&pv("1/5,1/5,1/5,1/5,1/5")).unwrap();
        assert_eq!(r.label, Label::Class3);
        assert_eq!(r.witness.unwrap(), Witness { base: 0, sign: None, j: Some(1), vector: [1, 1, 1, 1, 1] });
        assert_eq!(classify(&pv("2/3,0,0,1/3,0")).unwrap().label, Label::NoSolution);
    }

    #[test]
    fn reduction_examples() {
        let (w, c) = reduce_to_canonical(&pv("1/3,1/3,0,0,1/3"), 64).unwrap();
        assert_eq!(c, pv("1/3,1/3,1/3,0,0"));
        assert!(w.gens().iter().any(|g| matches!(g, Generator::Pi | Generator::PiInv)));
        assert_eq!(apply_word_params(&w, &c), pv("1/3,1/3,0,0,1/3"));
        let (w, c) = reduce_to_canonical(&pv("4,-3,0,0,0"), 64).unwrap();
        assert_eq!(apply_word_params(&w, &c), pv("4,-3,0,0,0"));
        assert!(reduce_to_canonical(&pv("1/2,1/2,0,0,0"), 64).is_err());
        assert!(matches!(reduce_to_canonical(&pv("40,-39,0,0,0"), 64), Err(Error::Inconclusive(_))));
    }

    #[test]
    fn fundamental_set_membership() {
        assert!(in_fundamental_set(&pv("1/5,1/5,1/5,1/5,1/5")));
        assert!(!in_fundamental_set(&pv("-1,1,0,0,1")));
        assert!(in_fundamental_set(&pv("2/3,0,0,1/3,0")));
    }

    #[test]
    fn orbit_sizes() {
        // 20 + 10 + 10 + 30 + 1 and 24 + 1 + 30 + 30 + 20 + 20
        assert_eq!(orbit_table_size(3), 71);
        assert_eq!(orbit_table_size(5), 125);
    }
}
