//! Acceptance criteria 1 to 10. Prints one line per criterion and exits
//! nonzero if any criterion fails that is not a documented conflict.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use painleve_a4::arith::{fmt_rational, int, rat, Rational};
use painleve_a4::backlund::{apply_word_params, check_weyl_relations, shift_operator, Generator, Word};
use painleve_a4::classifier::{
    classify_with_cap, fundamental_representatives, reduce_to_canonical, reduce_to_fundamental, Label,
};
use painleve_a4::cli::random_params;
use painleve_a4::constructor::{audit_solution, construct_with, joint_orbit, SeedCatalog, AUDIT_FLOOR};
use painleve_a4::hamiltonian::{emit_tables, h_inf_minus1};
use painleve_a4::laurent_analysis::InfinityType;
use painleve_a4::limits::Limits;
use painleve_a4::system::{verify_solution, ParamVec, SolutionTuple};

mod common;
use common::{grid15, oracle};

struct Outcome {
    pass: bool,
    detail: String,
    budget: Duration,
    elapsed: Duration,
}

fn timed(budget_ms: u64, f: impl FnOnce() -> (bool, String)) -> Outcome {
    let t = Instant::now();
    let (pass, detail) = f();
    Outcome { pass, detail, budget: Duration::from_millis(budget_ms), elapsed: t.elapsed() }
}

fn pv(s: &str) -> ParamVec {
    ParamVec::parse(s).unwrap()
}

fn c1_seeds() -> (bool, String) {
    let mut ok = 0;
    for (_, p, s) in SeedCatalog::entries() {
        let r = verify_solution(&s, &p);
        if r.ok && r.residuals.iter().all(|x| x.is_zero()) && r.sum_defect.is_zero() {
            ok += 1;
        }
    }
    (ok == 3, format!("{ok}/3 seeds satisfy all six identities"))
}

fn c2_relations() -> (bool, String) {
    let pts = random_params(100, 30, 2024);
    let r = check_weyl_relations(&pts).unwrap();
    (r.ok() && r.samples == 100, format!("{} relation instances on {} points, {} violations", r.relations_checked, r.samples, r.violations.len()))
}

fn c3_shifts() -> (bool, String) {
    let pts = random_params(20, 30, 7);
    let mut bad = 0;
    for i in 0..5 {
        let w = shift_operator(i);
        for p in &pts {
            let q = apply_word_params(&w, p);
            for k in 0..5 {
                let expect = if k == (i + 4) % 5 {
                    &p[k] + int(1)
                } else if k == i {
                    &p[k] - int(1)
                } else {
                    p[k].clone()
                };
                if q[k] != expect {
                    bad += 1;
                }
            }
        }
    }
    (bad == 0, format!("100 applications, {bad} wrong coordinates"))
}

fn c4_oracle() -> (bool, String) {
    let grid = grid15(1);
    let mut disagree = Vec::new();
    let mut counts: HashMap<Label, usize> = HashMap::new();
    let mut unsound = 0;
    for n in &grid {
        let p = ParamVec::new(std::array::from_fn(|k| rat(n[k], 15))).unwrap();
        let c = match classify_with_cap(&p, Limits::default().word_cap) {
            Ok(c) => c,
            Err(e) => {
                disagree.push(format!("{p}: {e}"));
                continue;
            }
        };
        *counts.entry(c.label).or_default() += 1;
        if c.label != oracle(n) {
            disagree.push(format!("{p}: {} vs oracle {}", c.label, oracle(n)));
        }
        if let (Some(w), Some(cp)) = (&c.word_from_canonical, &c.canonical) {
            if apply_word_params(w, cp) != p {
                unsound += 1;
            }
        }
    }
    let detail = format!(
        "{} points (Class1 {}, Class2 {}, Class3 {}, None {}), {} disagreements, {} unsound words",
        grid.len(),
        counts.get(&Label::Class1).unwrap_or(&0),
        counts.get(&Label::Class2).unwrap_or(&0),
        counts.get(&Label::Class3).unwrap_or(&0),
        counts.get(&Label::NoSolution).unwrap_or(&0),
        disagree.len(),
        unsound
    );
    (disagree.is_empty() && unsound == 0, detail)
}

fn random_word(rng: &mut ChaCha8Rng, len: usize) -> Word {
    Word((0..len).map(|_| Generator::ALL[rng.gen_range(0..7)]).collect())
}

/// Returns (literal pass, attainable pass, detail).
fn c5_reduction() -> (bool, bool, String) {
    let cap = Limits::default().word_cap;
    let reps: Vec<ParamVec> = fundamental_representatives(3).into_iter().chain(fundamental_representatives(5)).collect();
    let mut literal = 0;
    let mut rejected = Vec::new();
    for r in &reps {
        match reduce_to_canonical(r, cap) {
            Ok((w, c)) if apply_word_params(&w, &c) == *r => literal += 1,
            Ok(_) => rejected.push(format!("{r}: word does not reproduce")),
            Err(_) => rejected.push(r.to_string()),
        }
    }
    // Every representative, and random points of its orbit, reduce back to it.
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut sound = 0;
    let mut total = 0;
    for r in &reps {
        for _ in 0..20 {
            let len = rng.gen_range(0..8);
            let target = apply_word_params(&random_word(&mut rng, len), r);
            total += 1;
            if let Ok((w, rep)) = reduce_to_fundamental(&target, cap) {
                if rep == *r && apply_word_params(&w, &rep) == target {
                    sound += 1;
                }
            }
        }
    }
    let detail = format!(
        "reduce_to_canonical reproduces {literal}/{} representatives; rejected as unsolvable: {}; orbit reductions sound {sound}/{total}",
        reps.len(),
        rejected.join(" ")
    );
    (literal == reps.len(), sound == total && literal + rejected.len() == reps.len(), detail)
}

struct State {
    params: ParamVec,
    sol: SolutionTuple,
}

fn orbit_states() -> (Vec<State>, usize) {
    let mut states = Vec::new();
    let mut mismatches = 0;
    let limits = Limits::default();
    for (_, p, s) in SeedCatalog::entries() {
        for (q, sol, _) in joint_orbit(&p, &s, 4, limits.degree_cap).unwrap() {
            match construct_with(&q, &limits) {
                Ok(Some(c)) if c.sol == sol => {}
                _ => mismatches += 1,
            }
            states.push(State { params: q, sol });
        }
    }
    (states, mismatches)
}

fn table_of(rows: [[(i64, i64); 5]; 3]) -> Vec<Vec<Rational>> {
    rows.iter().map(|r| r.iter().map(|&(a, b)| rat(a, b)).collect()).collect()
}

fn main() {
    let mut results: Vec<(u8, &str, Outcome, Option<&str>)> = Vec::new();

    results.push((1, "seed verification", timed(1_000, c1_seeds), None));
    results.push((2, "Weyl relations", timed(5_000, c2_relations), None));
    results.push((3, "shift operators", timed(2_000, c3_shifts), None));
    results.push((4, "classifier vs oracle", timed(30_000, c4_oracle), None));

    let t = Instant::now();
    let (lit5, att5, d5) = c5_reduction();
    results.push((
        5,
        "reduction soundness",
        Outcome { pass: lit5 && att5, detail: d5, budget: Duration::from_millis(5_000), elapsed: t.elapsed() },
        if att5 { Some("non-canonical representatives lie outside the solvable orbits (see criterion 9)") } else { None },
    ));

    // 6, 7, 10 and part of 8 share the transported states.
    let t = Instant::now();
    let (states, mismatches) = orbit_states();
    let t6 = t.elapsed();
    let t = Instant::now();
    let mut fails: HashMap<&str, usize> = HashMap::new();
    let mut in_c = 0;
    for s in &states {
        let checks = audit_solution(&s.params, &s.sol, AUDIT_FLOOR).unwrap();
        for c in checks {
            if !c.pass {
                *fails.entry(c.name).or_default() += 1;
            }
            if c.name == "h_nonnegative_in_C" {
                in_c += 1;
            }
        }
    }
    let t_audit = t.elapsed();
    let f = |names: &[&str]| names.iter().map(|n| fails.get(n).copied().unwrap_or(0)).sum::<usize>();
    results.push((
        6,
        "transport round-trip",
        Outcome {
            pass: mismatches == 0 && states.len() > 100,
            detail: format!("{} states from 3 seeds, {mismatches} constructions differ", states.len()),
            budget: Duration::from_millis(60_000),
            elapsed: t6 + t_audit,
        },
        None,
    ));
    let n7 = f(&["infinity_profile", "recurrence_agreement", "h_inf_minus1_closed_form"]);
    results.push((
        7,
        "Laurent agreement",
        Outcome {
            pass: n7 == 0,
            detail: format!("expansions to t^{AUDIT_FLOOR} and t^-1 closed forms on {} states, {n7} failures", states.len()),
            budget: Duration::from_millis(60_000),
            elapsed: t6 + t_audit,
        },
        None,
    ));

    let t = Instant::now();
    let b = pv("1/3,1/3,1/3,0,0");
    let hb2 = h_inf_minus1(InfinityType::B(2), &b);
    let hb3 = h_inf_minus1(InfinityType::B(3), &b);
    let (t1, t2) = emit_tables();
    let want1 = table_of([
        [(1, 3), (1, 3), (1, 3), (2, 3), (1, 3)],
        [(1, 3), (1, 3), (0, 1), (0, 1), (1, 3)],
        [(1, 3), (2, 3), (1, 3), (1, 3), (1, 3)],
    ]);
    let want2 = table_of([
        [(0, 1), (1, 1), (0, 1), (1, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (0, 1), (1, 1)],
        [(0, 1), (1, 1), (0, 1), (0, 1), (1, 1)],
    ]);
    let tables_ok = (0..3).all(|r| t1.row_values(r) == want1[r] && t2.row_values(r) == want2[r]);
    let n8 = f(&["residue_balance", "h_nonnegative_in_C", "finite_residue_formula"]);
    let attain8 = hb2 == rat(-4, 9) && tables_ok && n8 == 0;
    let literal8 = attain8 && hb3 == rat(-10, 27);
    results.push((
        8,
        "Hamiltonian numbers",
        Outcome {
            pass: literal8,
            detail: format!(
                "h(B(2)) = {} (published -4/9), h(B(3)) = {} (published -10/27), tables {}, balance/positivity failures {n8} over {} states ({in_c} in C)",
                fmt_rational(&hb2),
                fmt_rational(&hb3),
                if tables_ok { "match" } else { "differ" },
                states.len()
            ),
            budget: Duration::from_millis(10_000),
            elapsed: t.elapsed() + t_audit,
        },
        if attain8 { Some("published -10/27 disagrees with the closed form, which gives -4/9 at B(3)") } else { None },
    ));

    let negatives = [
        "1/2,1/2,0,0,0",
        "2/3,0,0,1/3,0",
        "1/3,0,0,2/3,0",
        "0,1/3,0,1/3,1/3",
        "3/5,0,1/5,1/5,0",
        "1/5,0,2/5,2/5,0",
        "1/5,2/5,0,0,2/5",
        "3/5,1/5,0,0,1/5",
    ];
    results.push((
        9,
        "negative cases",
        timed(2_000, || {
            let ok = negatives.iter().filter(|s| {
                let p = pv(s);
                classify_with_cap(&p, 64).map(|c| c.label == Label::NoSolution).unwrap_or(false)
                    && construct_with(&p, &Limits::default()).map(|c| c.is_none()).unwrap_or(false)
            });
            let n = ok.count();
            (n == negatives.len(), format!("{n}/{} rejected by classify and construct", negatives.len()))
        }),
        None,
    ));

    let n10 = f(&["is_odd", "finite_pole_audit", "hhat_odd"]);
    results.push((
        10,
        "oddness and pole structure",
        Outcome {
            pass: n10 == 0,
            detail: format!("{} states, {n10} failures", states.len()),
            budget: Duration::from_millis(60_000),
            elapsed: t6 + t_audit,
        },
        None,
    ));

    let mut hard = 0;
    let mut known = 0;
    for (n, name, o, conflict) in &results {
        let in_time = o.elapsed <= o.budget;
        let pass = o.pass && in_time;
        let tag = if pass { "PASS" } else { "FAIL" };
        println!("criterion {n:>2} {tag} {name}: {} [{:.2?}]", o.detail, o.elapsed);
        if !in_time {
            println!("             over budget of {:?}", o.budget);
        }
        if !pass {
            match conflict {
                Some(why) if in_time => {
                    known += 1;
                    println!("             documented conflict: {why}");
                }
                _ => hard += 1,
            }
        }
    }
    println!(
        "acceptance: {} passed, {} failed ({known} documented conflicts)",
        results.len() - hard - known,
        hard + known
    );
    if hard > 0 {
        std::process::exit(1);
    }
}
