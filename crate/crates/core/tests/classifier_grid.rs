use painleve_a4::arith::rat;
use painleve_a4::backlund::apply_word_params;
use painleve_a4::classifier::{class_witness, classify, Label};
use painleve_a4::system::ParamVec;

mod common;
use common::{grid15, oracle};

#[test]
fn agrees_with_oracle_with_offsets_up_to_two() {
    let mut solvable = 0;
    for n in grid15(2) {
        let p = ParamVec::new(std::array::from_fn(|k| rat(n[k], 15))).unwrap();
        let (label, _) = class_witness(&p);
        assert_eq!(label, oracle(&n), "{p}");
        if label != Label::NoSolution {
            solvable += 1;
            let c = classify(&p).unwrap();
            assert_eq!(apply_word_params(&c.word_from_canonical.unwrap(), &c.canonical.unwrap()), p);
        }
    }
    assert!(solvable > 100);
}

#[test]
fn integer_tuples_never_match_fractional_patterns() {
    for n in grid15(2).into_iter().filter(|n| n.iter().all(|x| x % 15 == 0)) {
        let p = ParamVec::new(std::array::from_fn(|k| rat(n[k], 15))).unwrap();
        assert_eq!(class_witness(&p).0, Label::Class1);
    }
}

#[test]
fn tie_break_prefers_smallest_base() {
    let p = ParamVec::parse("1/5,1/5,1/5,1/5,1/5").unwrap();
    let (_, w) = class_witness(&p);
    let w = w.unwrap();
    assert_eq!((w.base, w.j, w.vector), (0, Some(1), [1, 1, 1, 1, 1]));
    let p = ParamVec::parse("1/3,1/3,0,0,1/3").unwrap();
    let (_, w) = class_witness(&p);
    assert_eq!(w.unwrap().base, 4);
}
