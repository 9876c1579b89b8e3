//! Principal part of the Hamiltonian: `h_{∞,-1}`, its closed form per pole
//! type, the residue balance and the two residue tables.

use painleve_a4::arith::fmt_rational;
use painleve_a4::constructor::construct;
use painleve_a4::hamiltonian::{emit_tables, h_inf_minus1, hhat, residue_balance};
use painleve_a4::laurent_analysis::{classify_infinity, InfinityType};
use painleve_a4::system::ParamVec;

fn main() {
    for a in ["1/5,1/5,1/5,1/5,1/5", "-1,1,0,0,1", "2/3,-1/3,-2/3,1,1/3"] {
        let p = ParamVec::parse(a).unwrap();
        let sol = construct(&p).unwrap().unwrap().sol;
        let ty = classify_infinity(&sol).unwrap();
        let b = residue_balance(&sol).unwrap();
        println!("{p}: Hhat = {}", hhat(&sol));
        println!("  h = {} (closed form for {ty}: {}), finite residues sum to {}", b.h_inf_minus1, fmt_rational(&h_inf_minus1(ty, &p)), b.finite_sum);
    }

    let third = ParamVec::parse("1/3,1/3,1/3,0,0").unwrap();
    for k in 0..5 {
        let ty = InfinityType::B(k);
        println!("{ty} at {third}: h = {}", fmt_rational(&h_inf_minus1(ty, &third)));
    }

    let (t1, t2) = emit_tables();
    print!("\n{}\n{}", t1.render_text(), t2.render_text());
}
