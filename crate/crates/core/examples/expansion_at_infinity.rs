//! Pole type at infinity and the recurrence expansion compared with the
//! expansion of the actual solution.

use painleve_a4::arith::laurent::{expand, Point};
use painleve_a4::constructor::construct;
use painleve_a4::laurent_analysis::{classify_infinity, predicted_profile, recurrence_expand};
use painleve_a4::system::ParamVec;

fn main() {
    let floor = -9;
    for a in ["1,0,0,0,0", "-1,1,0,0,1", "2/3,-1,2/3,1/3,1/3", "2/5,-3/5,2/5,2/5,2/5"] {
        let p = ParamVec::parse(a).unwrap();
        let sol = construct(&p).unwrap().unwrap().sol;
        let ty = classify_infinity(&sol).unwrap();
        let prof = predicted_profile(ty, &p);
        println!("{p}: type {ty}");
        let rec = recurrence_expand(ty, &p, floor).unwrap();
        for j in 0..5 {
            let direct = expand(&sol[j], &Point::Infinity, floor);
            let same = (floor..=1).all(|k| direct.coeff(k).unwrap() == rec[j].coeff(k).unwrap());
            println!("  f{j} ~ {}   (t^-1 predicted {}, agrees: {same})", rec[j], prof.subleading[j]);
        }
    }
}
