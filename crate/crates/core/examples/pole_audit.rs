//! Finite poles of a transported solution: residues, patterns and the
//! pairing `c <-> -c`, including poles at irrational points.

use painleve_a4::constructor::construct;
use painleve_a4::laurent_analysis::finite_pole_audit;
use painleve_a4::system::ParamVec;

fn main() {
    for a in ["2/3,-1/3,-2/3,1,1/3", "4/5,-2/5,4/5,2/5,-3/5"] {
        let p = ParamVec::parse(a).unwrap();
        let sol = construct(&p).unwrap().unwrap().sol;
        println!("{p}\n  {sol}");
        let audit = finite_pole_audit(&sol, &p);
        for pole in &audit.poles {
            let res: Vec<String> = pole.residues.iter().map(|r| r.to_string()).collect();
            println!("  at {}: residues [{}], pattern {:?}", pole.location, res.join(", "), pole.pattern);
        }
        println!("  audit ok: {}", audit.ok);
    }
}
