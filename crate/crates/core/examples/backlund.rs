//! The group action on parameters and solutions, the shift operators and a
//! relation check.

use painleve_a4::backlund::{apply_word, apply_word_params, check_weyl_relations, shift_operator, Word};
use painleve_a4::cli::random_params;
use painleve_a4::system::{ParamVec, SolutionTuple};

fn main() {
    let p = ParamVec::parse("1,0,0,0,0").unwrap();
    let s = SolutionTuple::parse(&["t", "0", "0", "0", "0"]).unwrap();

    let w: Word = "s0 s2 s1".parse().unwrap();
    let out = apply_word(&w, &p, Some(&s), 512).unwrap();
    println!("{w} : {p} -> {}", out.params);
    println!("  {}", out.sol.unwrap());

    // s1 fixes the seed (f1 = 0), which the outcome records
    let w: Word = "s1 s0 s1".parse().unwrap();
    let out = apply_word(&w, &p, Some(&s), 512).unwrap();
    println!("{w}: degenerate at letters {:?}, params {}", out.degenerate_at, out.params);

    let q = ParamVec::parse("1/7,2/7,-3/7,1/2,1/2").unwrap();
    for i in 0..5 {
        let t = shift_operator(i);
        println!("T{i} = {t}: {q} -> {}", apply_word_params(&t, &q));
    }

    let r = check_weyl_relations(&random_params(20, 30, 1)).unwrap();
    println!("{} relation instances on {} points, {} violations", r.relations_checked, r.samples, r.violations.len());
}
