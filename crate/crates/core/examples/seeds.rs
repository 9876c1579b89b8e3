//! The three seed solutions and what `verify_solution` reports for them and
//! for a perturbed tuple.

use painleve_a4::constructor::SeedCatalog;
use painleve_a4::system::{is_odd, verify_solution, ParamVec, SolutionTuple};

fn main() {
    for (label, p, s) in SeedCatalog::entries() {
        let r = verify_solution(&s, &p);
        println!("{label}: alpha = {p}\n  {s}\n  verified: {}, odd: {}", r.ok, is_odd(&s));
    }

    let p = ParamVec::parse("-1,1,0,0,1").unwrap();
    let bad = SolutionTuple::parse(&["t", "1/t + 1", "0", "-1", "-1/t"]).unwrap();
    let r = verify_solution(&bad, &p);
    println!("perturbed tuple at {p}:");
    for line in r.failures {
        println!("  {line}");
    }
}
