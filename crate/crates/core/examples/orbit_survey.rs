//! Walk the joint orbit of each seed to a given depth and run the full
//! audit on every state.
//!
//! ```text
//! cargo run --release --example orbit_survey -- 3
//! ```

use std::collections::BTreeMap;

use painleve_a4::constructor::{audit_solution, joint_orbit, SeedCatalog, AUDIT_FLOOR};
use painleve_a4::laurent_analysis::classify_infinity;

fn main() {
    let depth: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    for (label, p, s) in SeedCatalog::entries() {
        let states = joint_orbit(&p, &s, depth, 512).unwrap();
        let mut types: BTreeMap<String, usize> = BTreeMap::new();
        let mut failed = 0;
        let mut max_deg = 0;
        for (q, sol, _) in &states {
            *types.entry(classify_infinity(sol).unwrap().to_string()).or_default() += 1;
            max_deg = max_deg.max(sol.max_degree());
            if !audit_solution(q, sol, AUDIT_FLOOR).unwrap().iter().all(|c| c.pass) {
                failed += 1;
            }
        }
        println!("{label}: {} states, max degree {max_deg}, {failed} failing audits", states.len());
        println!("  types at infinity: {types:?}");
    }
}
