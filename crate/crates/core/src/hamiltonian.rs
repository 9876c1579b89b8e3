//! The Hamiltonian `H`, its cubic part `Ĥ`, and the residue calculus on `Ĥ`.
//!
//! Convention: `h_{∞,-1}` is the `t⁻¹` coefficient of `Ĥ` at `∞`, so
//! `Res_{t=∞} Ĥ = -h_{∞,-1}` and `h_{∞,-1} = Σ_c Res_{t=c} Ĥ`.

use std::fmt::Write as _;

use num_traits::Zero;
use serde::Serialize;

use crate::arith::laurent::{expand, Point};
use crate::arith::residue::{denominator_factors, residue_at, residue_sum_general};
use crate::arith::{fmt_rational, int, rat, Rational, RationalFunction};
use crate::error::{Error, Result};
use crate::laurent_analysis::{finite_pole_audit, predicted_profile, InfinityType, PoleLocation};
use crate::system::{ParamVec, SolutionTuple};

/// `f0 f1 f2 + f1 f2 f3 + f2 f3 f4 + f3 f4 f0 + f4 f0 f1`
pub fn hhat(sol: &SolutionTuple) -> RationalFunction {
    (0..5).fold(RationalFunction::zero(), |acc, j| {
        &acc + &(&(sol.get(j) * sol.get(j + 1)) * sol.get(j + 2))
    })
}

/// Coefficients of the linear terms of `H` in `f_0..f_4`.
pub fn linear_coefficients(params: &ParamVec) -> [Rational; 5] {
    let a = |k: usize| params[k].clone();
    let c = |x: [i64; 4]| (int(x[0]) * a(1) + int(x[1]) * a(2) + int(x[2]) * a(3) + int(x[3]) * a(4)) * rat(1, 5);
    [
        c([2, -1, 1, -2]),
        c([2, 4, 1, 3]),
        -c([3, 1, -1, 2]),
        c([2, -1, 1, 3]),
        -c([3, 1, 4, 2]),
    ]
}

pub fn h_full(sol: &SolutionTuple, params: &ParamVec) -> RationalFunction {
    let lin = linear_coefficients(params);
    (0..5).fold(hhat(sol), |acc, j| &acc + &sol[j].scale(&lin[j]))
}

/// `h_{∞,3}`, `h_{∞,1}`, `h_{∞,-1}` read off the expansion of `Ĥ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonianExpansion {
    pub h3: Rational,
    pub h1: Rational,
    pub hm1: Rational,
    /// `false` if some even exponent down to `t⁻²` has a nonzero coefficient.
    pub odd: bool,
}

impl Serialize for HamiltonianExpansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Doc {
            h3: String,
            h1: String,
            hm1: String,
            odd: bool,
        }
        Doc { h3: fmt_rational(&self.h3), h1: fmt_rational(&self.h1), hm1: fmt_rational(&self.hm1), odd: self.odd }
            .serialize(s)
    }
}

pub fn hhat_expansion(sol: &SolutionTuple) -> Result<HamiltonianExpansion> {
    let h = hhat(sol);
    if h.order_at_infinity().is_some_and(|o| o > 3) {
        return Err(Error::Audit(format!("Ĥ has a pole of order above 3 at infinity: {h}")));
    }
    let s = expand(&h, &Point::Infinity, -2);
    let c = |k| s.coeff(k).expect("within floor");
    let odd = [2, 0, -2].iter().all(|&k| c(k).is_zero());
    Ok(HamiltonianExpansion { h3: c(3), h1: c(1), hm1: c(-1), odd })
}

/// Closed form of `h_{∞,-1}` in terms of the parameters, per type.
pub fn h_inf_minus1(ty: InfinityType, params: &ParamVec) -> Rational {
    let a = |k: usize| params[k].clone();
    match ty {
        InfinityType::A1(i) => -(a(i + 1) * a(i + 2)) - a(i + 3) * a(i + 4) - a(i + 4) * a(i + 1),
        InfinityType::A2(i) => {
            -(a(i + 2) * (a(i) + a(i + 3))) - a(i + 4) * (a(i + 1) + a(i + 3)) - int(3) * a(i + 2) * a(i + 4)
        }
        InfinityType::B(i) => {
            let x = a(i) - a(i + 1) + a(i + 3);
            let y = a(i + 2) - a(i) - a(i + 3) + a(i + 4);
            let z = a(i + 2) + a(i + 4) - a(i + 1);
            (-(&x * &x) - y * z - int(9) * a(i + 3) * a(i + 4)) * rat(1, 3)
        }
        InfinityType::C => {
            let s = predicted_profile(InfinityType::C, params).subleading;
            let [a, b, c, d, e] = s;
            (-(&a * &a) + &a * &e - &b * &b - &a * &c - &c * &c + &c * &d + int(2) * &d * &e) * rat(1, 5)
        }
    }
}

/// `Res_{t=c} Ĥ` at a finite pole with residue pattern `pattern` and base `i`.
///
/// Pattern 3 (residues `3, 1, -1, -3` on `f_{i+1}..f_{i+4}`) carries a
/// `3α_i` term that [`published_residue_row`] leaves out.
pub fn finite_residue_formula(pattern: u8, i: usize, params: &ParamVec) -> Result<Rational> {
    let a = |k: usize| params[k].clone();
    match pattern {
        3 => Ok(int(3) * a(i) + a(i + 1) + a(i + 4)),
        _ => published_residue_row(pattern, i, params),
    }
}

/// The row expressions of the two residue tables as usually quoted:
/// `α_{i+2}+α_{i+4}`, `α_{i+1}`, `α_{i+1}+α_{i+4}`.
pub fn published_residue_row(pattern: u8, i: usize, params: &ParamVec) -> Result<Rational> {
    let a = |k: usize| params[k].clone();
    match pattern {
        1 => Ok(a(i + 2) + a(i + 4)),
        2 => Ok(a(i + 1)),
        3 => Ok(a(i + 1) + a(i + 4)),
        _ => Err(Error::Contract(format!("pattern must be 1, 2 or 3, got {pattern}"))),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BalanceReport {
    pub ok: bool,
    /// `h_{∞,-1}` from the expansion of `Ĥ` at `∞`.
    pub h_inf_minus1: String,
    /// Sum of residues of `Ĥ` over all finite poles.
    pub finite_sum: String,
    /// `(factor, residue sum)` per squarefree factor of the denominator.
    pub contributions: Vec<(String, String)>,
}

/// `h_{∞,-1} = Σ_c Res_{t=c} Ĥ`, both sides computed independently.
pub fn residue_balance(sol: &SolutionTuple) -> Result<BalanceReport> {
    let h = hhat(sol);
    let hm1 = expand(&h, &Point::Infinity, -1).coeff(-1).expect("within floor");
    let mut total = Rational::zero();
    let mut contributions = Vec::new();
    for (p, _) in denominator_factors(&h) {
        let r = residue_sum_general(&h, &p)?;
        contributions.push((p.to_string(), fmt_rational(&r)));
        total += r;
    }
    Ok(BalanceReport {
        ok: total == hm1,
        h_inf_minus1: fmt_rational(&hm1),
        finite_sum: fmt_rational(&total),
        contributions,
    })
}

/// At every rational pole with a recognized residue pattern, compares
/// `Res_{t=c} Ĥ` with [`finite_residue_formula`]. Returns the mismatches.
pub fn finite_residue_check(sol: &SolutionTuple, params: &ParamVec) -> Result<Vec<String>> {
    let h = hhat(sol);
    let audit = finite_pole_audit(sol, params);
    let mut bad = Vec::new();
    for p in &audit.poles {
        if let (PoleLocation::Point(c), Some((k, i))) = (&p.location, p.pattern) {
            let got = residue_at(&h, c);
            let want = finite_residue_formula(k, i, params)?;
            if got != want {
                bad.push(format!(
                    "Res Ĥ at t = {} is {}, pattern ({k}, {i}) gives {}",
                    fmt_rational(c),
                    fmt_rational(&got),
                    fmt_rational(&want)
                ));
            }
        }
    }
    Ok(bad)
}

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub label: String,
    pub entries: Vec<String>,
}

/// Values of the three published row expressions for `i = 0..4`, plus the
/// recomputed pattern-3 row.
#[derive(Debug, Clone, Serialize)]
pub struct ResidueTable {
    pub title: String,
    pub params: ParamVec,
    pub rows: Vec<TableRow>,
    /// `3α_i+α_{i+1}+α_{i+4}`, the residue actually attained at a pattern-3 pole.
    pub pattern3_recomputed: TableRow,
}

fn table_row(label: &str, f: impl Fn(usize) -> Rational) -> TableRow {
    TableRow { label: label.to_string(), entries: (0..5).map(|i| fmt_rational(&f(i))).collect() }
}

impl ResidueTable {
    pub fn build(title: &str, params: &ParamVec) -> Self {
        let labels = ["alpha_{i+2}+alpha_{i+4}", "alpha_{i+1}", "alpha_{i+1}+alpha_{i+4}"];
        let rows = (1..=3u8)
            .zip(labels)
            .map(|(k, label)| table_row(label, |i| published_residue_row(k, i, params).unwrap()))
            .collect();
        let pattern3_recomputed =
            table_row("3alpha_i+alpha_{i+1}+alpha_{i+4}", |i| finite_residue_formula(3, i, params).unwrap());
        ResidueTable { title: title.to_string(), params: params.clone(), rows, pattern3_recomputed }
    }

    /// Exact values of row `r` (0-based).
    pub fn row_values(&self, r: usize) -> Vec<Rational> {
        self.rows[r].entries.iter().map(|e| crate::arith::parse_rational(e).unwrap()).collect()
    }

    pub fn render_text(&self) -> String {
        let all: Vec<&TableRow> = self.rows.iter().chain([&self.pattern3_recomputed]).collect();
        let w = all.iter().map(|r| r.label.len()).max().unwrap_or(0);
        let mut out = String::new();
        let _ = writeln!(out, "{} at {}", self.title, self.params);
        let _ = write!(out, "{:w$}", "", w = w);
        for i in 0..5 {
            let _ = write!(out, " {:>6}", format!("i={i}"));
        }
        out.push('\n');
        for (k, r) in all.iter().enumerate() {
            if k == self.rows.len() {
                let _ = writeln!(out, "recomputed residue at a pattern-3 pole:");
            }
            let _ = write!(out, "{:w$}", r.label, w = w);
            for e in &r.entries {
                let _ = write!(out, " {e:>6}");
            }
            out.push('\n');
        }
        out
    }
}

/// Residues of `Ĥ` at the two parameter points used in the uniqueness
/// arguments.
pub fn emit_tables() -> (ResidueTable, ResidueTable) {
    let p1 = ParamVec::from_pairs([(1, 3), (1, 3), (1, 3), (0, 1), (0, 1)]).unwrap();
    let p2 = ParamVec::from_ints([1, 0, 0, 0, 0]).unwrap();
    (ResidueTable::build("Table 1", &p1), ResidueTable::build("Table 2", &p2))
}
