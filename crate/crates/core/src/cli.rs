//! Command-line front end. Every invocation produces one [`OutputEnvelope`].

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::{fmt_rational, int, rat, Rational};
use crate::backlund::{apply_word, check_weyl_relations, Word};
use crate::classifier::{classify_with_cap, reduce_to_fundamental, Label};
use crate::constructor::{construct_with, render, transport_audit};
use crate::error::Error;
use crate::hamiltonian::{emit_tables, hhat, hhat_expansion, h_inf_minus1, residue_balance};
use crate::laurent_analysis::{classify_infinity, recurrence_expand, InfinityType};
use crate::limits::Limits;
use crate::system::{verify_solution, ParamVec, SolutionTuple};

#[derive(Debug, Parser)]
#[command(name = "a4", about = "Rational solutions of the A4(1) Painleve system, in exact arithmetic")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Structured, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Args)]
pub struct Alpha {
    /// Five comma-separated rationals summing to 1, e.g. "1/3,1/3,1/3,0,0".
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,
}

#[derive(Debug, Args)]
pub struct Components {
    #[arg(long, allow_hyphen_values = true)]
    pub f0: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub f1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub f2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub f3: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub f4: Option<String>,
}

impl Components {
    fn all(&self) -> [&Option<String>; 5] {
        [&self.f0, &self.f1, &self.f2, &self.f3, &self.f4]
    }

    fn any(&self) -> bool {
        self.all().iter().any(|f| f.is_some())
    }

    fn parse(&self) -> Result<SolutionTuple, Error> {
        let mut parts = Vec::new();
        for (i, f) in self.all().iter().enumerate() {
            match f {
                Some(s) => parts.push(s.as_str()),
                None => return Err(Error::Contract(format!("missing --f{i}"))),
            }
        }
        SolutionTuple::parse(&parts)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a rational solution exists.
    Classify(Alpha),
    /// Word taking a point of the fundamental set to the parameters.
    Reduce(Alpha),
    /// Build the rational solution.
    Construct(Alpha),
    /// Check a candidate solution against the system.
    Verify {
        #[command(flatten)]
        alpha: Alpha,
        #[command(flatten)]
        f: Components,
    },
    /// Construct and run every structural check.
    Audit(Alpha),
    /// Residues of the principal part at the two special parameter points.
    Tables,
    /// Check the defining relations of the group on random parameters.
    Relations {
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Expansion at infinity from the recurrence for a given pole type.
    Expand {
        #[command(flatten)]
        alpha: Alpha,
        /// A1(i), A2(i), B(i) or C.
        #[arg(long = "type")]
        ty: String,
        #[arg(long, default_value_t = -12, allow_hyphen_values = true)]
        floor: i64,
    },
    /// Principal part of the Hamiltonian and its residue balance.
    Hamiltonian(Alpha),
    /// Apply a word to parameters, and to a solution if one is given.
    Apply {
        #[arg(long)]
        word: String,
        #[command(flatten)]
        alpha: Alpha,
        #[command(flatten)]
        f: Components,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    NoSolution,
    Inconclusive,
    Error,
}

impl Status {
    /// Exit code for this status. A failed verification reports `Error`
    /// with exit 1, set where it is produced.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::NoSolution => 1,
            Status::Error => 2,
            Status::Inconclusive => 3,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OutputEnvelope {
    pub status: Status,
    pub payload: Value,
    pub diagnostics: Vec<String>,
    #[serde(skip)]
    pub text: String,
    #[serde(skip)]
    pub exit_code: i32,
}

impl OutputEnvelope {
    fn ok(payload: Value, text: String) -> Self {
        OutputEnvelope { status: Status::Ok, payload, diagnostics: vec![], text, exit_code: 0 }
    }

    /// A verification that ran but found a defect: status error, exit 1.
    fn failed(payload: Value, text: String, diagnostics: Vec<String>) -> Self {
        OutputEnvelope { status: Status::Error, payload, diagnostics, text, exit_code: 1 }
    }

    fn no_solution(payload: Value, text: String) -> Self {
        OutputEnvelope { status: Status::NoSolution, payload, diagnostics: vec![], text, exit_code: 1 }
    }

    fn from_error(e: Error) -> Self {
        let status = if matches!(e, Error::Inconclusive(_)) { Status::Inconclusive } else { Status::Error };
        let msg = e.to_string();
        OutputEnvelope { status, payload: Value::Null, diagnostics: vec![msg.clone()], text: msg, exit_code: status.exit_code() }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Structured => serde_json::to_string_pretty(self).expect("serializable"),
            Format::Text => {
                let mut out = self.text.trim_end().to_string();
                if self.status != Status::Ok || out.is_empty() {
                    out = format!("status: {}\n{out}", serde_json::to_value(self.status).unwrap().as_str().unwrap());
                }
                for d in &self.diagnostics {
                    if !self.text.contains(d.as_str()) {
                        out.push_str(&format!("\n{d}"));
                    }
                }
                out.trim().to_string()
            }
        }
    }
}

/// Runs one command. Never panics on bad input; errors become envelopes.
pub fn run(cli: &Cli) -> OutputEnvelope {
    dispatch(&cli.command).unwrap_or_else(OutputEnvelope::from_error)
}

/// Parses `args` (including the program name) and runs the command. Returns
/// the rendered document and the exit code.
pub fn run_args<I, T>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => {
            let env = run(&cli);
            (env.render(cli.format), env.exit_code)
        }
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            (e.to_string(), code)
        }
    }
}

fn dispatch(cmd: &Command) -> Result<OutputEnvelope, Error> {
    let limits = Limits::from_env();
    match cmd {
        Command::Classify(a) => {
            let p = ParamVec::parse(&a.alpha)?;
            let c = classify_with_cap(&p, limits.word_cap)?;
            let payload = serde_json::to_value(&c).unwrap();
            let mut text = format!("label: {}", c.label);
            if let Some(w) = &c.witness {
                text.push_str(&format!("\nwitness: base {} vector {:?}", w.base, w.vector));
                if let Some(s) = w.sign {
                    text.push_str(&format!(" sign {}", if s > 0 { "+" } else { "-" }));
                }
                if let Some(j) = w.j {
                    text.push_str(&format!(" j {j}"));
                }
            }
            if let (Some(cp), Some(w)) = (&c.canonical, &c.word_from_canonical) {
                text.push_str(&format!("\ncanonical: {cp}\nword: {w}"));
            }
            Ok(if c.label == Label::NoSolution {
                OutputEnvelope::no_solution(payload, text)
            } else {
                OutputEnvelope::ok(payload, text)
            })
        }
        Command::Reduce(a) => {
            let p = ParamVec::parse(&a.alpha)?;
            match reduce_to_fundamental(&p, limits.word_cap) {
                Ok((w, rep)) => Ok(OutputEnvelope::ok(
                    json!({ "representative": rep, "word": w }),
                    format!("representative: {rep}\nword: {w}"),
                )),
                Err(Error::Precondition(m)) => Ok(OutputEnvelope::no_solution(json!({ "reason": m }), m)),
                Err(e) => Err(e),
            }
        }
        Command::Construct(a) => {
            let p = ParamVec::parse(&a.alpha)?;
            match construct_with(&p, &limits)? {
                None => Ok(OutputEnvelope::no_solution(json!({ "params": p }), format!("{p} has no rational solution"))),
                Some(c) => {
                    let payload = json!({
                        "params": p,
                        "solution": c.sol.to_strings(),
                        "word": c.word,
                        "seed": c.seed,
                        "route": c.route,
                    });
                    let text = format!("{}\nword: {}", render(&c.sol).join("; "), c.word);
                    Ok(OutputEnvelope::ok(payload, text))
                }
            }
        }
        Command::Verify { alpha, f } => {
            let p = ParamVec::parse(&alpha.alpha)?;
            let sol = f.parse()?;
            let r = verify_solution(&sol, &p);
            let text = if r.ok {
                "all five equations and the sum constraint hold".to_string()
            } else {
                r.failures.join("\n")
            };
            let payload = serde_json::to_value(&r).unwrap();
            Ok(if r.ok { OutputEnvelope::ok(payload, text) } else { OutputEnvelope::failed(payload, text, r.failures.clone()) })
        }
        Command::Audit(a) => {
            let p = ParamVec::parse(&a.alpha)?;
            let r = match transport_audit(&p) {
                Err(Error::Precondition(m)) => return Ok(OutputEnvelope::no_solution(json!({ "params": p }), m)),
                other => other?,
            };
            let text = r
                .checks
                .iter()
                .map(|c| {
                    let mark = if c.pass { "ok  " } else { "FAIL" };
                    if c.detail.is_empty() { format!("{mark} {}", c.name) } else { format!("{mark} {}: {}", c.name, c.detail) }
                })
                .collect::<Vec<_>>()
                .join("\n");
            let failures: Vec<String> = r.checks.iter().filter(|c| !c.pass).map(|c| c.name.to_string()).collect();
            let payload = serde_json::to_value(&r).unwrap();
            Ok(if r.ok() { OutputEnvelope::ok(payload, text) } else { OutputEnvelope::failed(payload, text, failures) })
        }
        Command::Tables => {
            let (t1, t2) = emit_tables();
            let text = format!("{}\n{}", t1.render_text(), t2.render_text());
            Ok(OutputEnvelope::ok(json!([t1, t2]), text))
        }
        Command::Relations { samples, seed } => {
            let pts = random_params(*samples, 30, *seed);
            let r = check_weyl_relations(&pts)?;
            let text = format!(
                "{} samples, {} relation instances checked, {} violations",
                r.samples,
                r.relations_checked,
                r.violations.len()
            );
            let payload = serde_json::to_value(&r).unwrap();
            Ok(if r.ok() {
                OutputEnvelope::ok(payload, text)
            } else {
                let d = r.violations.iter().map(|v| format!("{v:?}")).collect();
                OutputEnvelope::failed(payload, text, d)
            })
        }
        Command::Expand { alpha, ty, floor } => {
            let p = ParamVec::parse(&alpha.alpha)?;
            let ty: InfinityType = ty.parse()?;
            let s = recurrence_expand(ty, &p, *floor)?;
            let text = s.iter().enumerate().map(|(i, x)| format!("f{i} = {x}")).collect::<Vec<_>>().join("\n");
            Ok(OutputEnvelope::ok(json!({ "type": ty, "floor": floor, "series": s }), text))
        }
        Command::Hamiltonian(a) => {
            let p = ParamVec::parse(&a.alpha)?;
            let Some(c) = construct_with(&p, &limits)? else {
                return Ok(OutputEnvelope::no_solution(json!({ "params": p }), format!("{p} has no rational solution")));
            };
            let h = hhat(&c.sol);
            let ex = hhat_expansion(&c.sol)?;
            let ty = classify_infinity(&c.sol)?;
            let closed = h_inf_minus1(ty, &p);
            let bal = residue_balance(&c.sol)?;
            let text = format!(
                "Hhat = {h}\ntype at infinity: {ty}\nh_inf_-1 = {} (closed form {})\nfinite residue sum = {}\nbalance: {}",
                fmt_rational(&ex.hm1),
                fmt_rational(&closed),
                bal.finite_sum,
                if bal.ok { "ok" } else { "FAILED" }
            );
            let payload = json!({
                "hhat": h,
                "type": ty,
                "expansion": ex,
                "h_inf_minus1_closed_form": fmt_rational(&closed),
                "balance": bal,
            });
            Ok(if bal.ok && closed == ex.hm1 {
                OutputEnvelope::ok(payload, text)
            } else {
                OutputEnvelope::failed(payload, text, vec!["residue balance or closed form mismatch".into()])
            })
        }
        Command::Apply { word, alpha, f } => {
            let w: Word = word.parse()?;
            let p = ParamVec::parse(&alpha.alpha)?;
            let sol = if f.any() { Some(f.parse()?) } else { None };
            let out = apply_word(&w, &p, sol.as_ref(), limits.degree_cap)?;
            let mut text = format!("params: {}", out.params);
            if let Some(s) = &out.sol {
                text.push('\n');
                text.push_str(&render(s).join("; "));
            }
            let mut env = OutputEnvelope::ok(
                json!({
                    "params": out.params,
                    "solution": out.sol.as_ref().map(SolutionTuple::to_strings),
                    "degenerate_at": out.degenerate_at,
                }),
                text,
            );
            for k in &out.degenerate_at {
                env.diagnostics.push(format!("letter {k} acted as the identity (vanishing component)"));
            }
            Ok(env)
        }
    }
}

/// Deterministic random parameter points with denominators at most `max_den`.
pub fn random_params(n: usize, max_den: i64, seed: u64) -> Vec<ParamVec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let mut a: [Rational; 5] = std::array::from_fn(|_| int(0));
            for x in a.iter_mut().take(4) {
                let d = rng.gen_range(1..=max_den);
                *x = rat(rng.gen_range(-3 * d..=3 * d), d);
            }
            let s: Rational = a[..4].iter().sum();
            a[4] = int(1) - s;
            ParamVec::new(a).expect("sums to 1")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> (Value, i32) {
        let mut v = vec!["a4"];
        v.extend_from_slice(args);
        let (out, code) = run_args(v);
        (serde_json::from_str(&out).unwrap_or(Value::String(out)), code)
    }

    #[test]
    fn classify_examples() {
        let (v, c) = go(&["classify", "--alpha", "1,0,0,0,0"]);
        assert_eq!((v["payload"]["label"].as_str(), c), (Some("Class1"), 0));
        let (v, c) = go(&["classify", "--alpha", "1/5,1/5,1/5,1/5,1/5"]);
        assert_eq!((v["payload"]["label"].as_str(), c), (Some("Class3"), 0));
        let (v, c) = go(&["classify", "--alpha", "1/2,1/2,0,0,0"]);
        assert_eq!((v["status"].as_str(), c), (Some("no_solution"), 1));
        assert_eq!(go(&["classify", "--alpha", "1/2,1/2,0,0"]).1, 2);
        assert_eq!(go(&["classify", "--alpha", "1,1,0,0,0"]).1, 2);
        assert_eq!(go(&["classify", "--alpha", "0.5,0.5,0,0,0"]).1, 2);
    }

    #[test]
    fn construct_then_verify_round_trips() {
        let (v, c) = go(&["construct", "--alpha", "-1,1,0,0,1"]);
        assert_eq!(c, 0);
        let f: Vec<String> = v["payload"]["solution"].as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect();
        assert_eq!(f, ["t", "1/t", "0", "0", "-1/t"]);
        let mut args = vec!["verify".to_string(), "--alpha".into(), "-1,1,0,0,1".into()];
        for (i, x) in f.iter().enumerate() {
            args.push(format!("--f{i}"));
            args.push(x.clone());
        }
        let a: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(go(&a).1, 0);
    }

    #[test]
    fn verify_failures() {
        let base = ["verify", "--alpha", "-1,1,0,0,1", "--f0", "t", "--f2", "0", "--f3", "0"];
        let mut a = base.to_vec();
        a.extend(["--f1", "1/t + 1", "--f4", "-1/t - 1"]);
        assert_eq!(go(&a).1, 1);
        let mut a = base.to_vec();
        a.extend(["--f1", "1/t + 1", "--f4", "-1/t"]);
        assert_eq!(go(&a).1, 2);
    }

    #[test]
    fn other_commands() {
        let (v, c) = go(&["tables"]);
        assert_eq!(c, 0);
        assert_eq!(v["payload"][0]["rows"][0]["entries"][0], "1/3");
        assert_eq!(go(&["relations", "--samples", "5"]).1, 0);
        let (v, c) = go(&["hamiltonian", "--alpha", "1/5,1/5,1/5,1/5,1/5"]);
        assert_eq!(c, 0);
        assert_eq!(v["payload"]["expansion"]["hm1"], "0");
        assert_eq!(go(&["expand", "--alpha", "1,0,0,0,0", "--type", "A1(0)", "--floor", "-4"]).1, 0);
        let (v, c) = go(&["apply", "--word", "pi s4 s3 s2 s1", "--alpha", "1,0,0,0,0"]);
        assert_eq!(c, 0);
        assert!(v["payload"]["params"].is_array());
        assert_eq!(go(&["audit", "--alpha", "1/3,1/3,1/3,0,0"]).1, 0);
        assert_eq!(go(&["construct", "--alpha", "1/2,1/2,0,0,0"]).1, 1);
    }
}
