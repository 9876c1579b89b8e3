//! Exact arithmetic on rational functions of `t`: parsing, the field
//! operations, expansions and residues.

use painleve_a4::arith::laurent::{expand, Point};
use painleve_a4::arith::residue::{denominator_factors, residue_at, residue_at_infinity, residue_sum_general};
use painleve_a4::arith::{fmt_rational, int, parse_rf};

fn main() {
    let f = parse_rf("(t^4 + 10*t^2 + 75)/(5*t^3 + 25*t)").unwrap();
    let g = parse_rf("t/5 + 1/t").unwrap();
    println!("f = {f}");
    println!("g = {g}");
    println!("f - g = {}", &f - &g);
    println!("f * g = {}", &f * &g);
    println!("f' = {}", f.derivative());

    println!("at infinity: {}", expand(&f, &Point::Infinity, -7));
    println!("at t = 0:    {}", expand(&f, &Point::Finite(int(0)), 3));

    println!("Res_0 f = {}", fmt_rational(&residue_at(&f, &int(0))));
    for (p, mult) in denominator_factors(&f) {
        println!("factor {p} (multiplicity {mult}): residue sum {}", fmt_rational(&residue_sum_general(&f, &p).unwrap()));
    }
    println!("Res_inf f = {}", fmt_rational(&residue_at_infinity(&f)));

    // decimals are refused
    println!("{}", parse_rf("0.2*t").unwrap_err());
}
