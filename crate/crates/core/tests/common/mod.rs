//! Independent oracle for the existence conditions, on numerators over 15.

use painleve_a4::classifier::Label;

/// Brute-force reading of the existence conditions on numerators over 15.
pub fn oracle(n: &[i64; 5]) -> Label {
    let m = |x: i64| x.rem_euclid(15);
    if n.iter().all(|&x| m(x) == 0) {
        return Label::Class1;
    }
    let matches = |scale: i64, v: [i64; 5]| (0..5).any(|i| (0..5).all(|k| m(n[(i + k) % 5]) == m(scale * v[k])));
    for s in [1, -1] {
        for v in [[1, 1, 1, 0, 0], [1, -1, -1, 1, 0]] {
            if matches(5 * s, v) {
                return Label::Class2;
            }
        }
    }
    for j in 1..=4 {
        for v in [[1, 1, 1, 1, 1], [1, 2, 1, 3, 3]] {
            if matches(3 * j, v) {
                return Label::Class3;
            }
        }
    }
    Label::NoSolution
}

/// Numerators over 15: fractional parts on the grid `k/15`, with the integer
/// correction making the sum 1 placed on one coordinate, when it lies in
/// `[-max_offset, max_offset]`.
pub fn grid15(max_offset: i64) -> Vec<[i64; 5]> {
    let mut out = std::collections::BTreeSet::new();
    for k0 in 0..15i64 {
        for k1 in 0..15 {
            for k2 in 0..15 {
                for k3 in 0..15 {
                    let s = k0 + k1 + k2 + k3;
                    let k4 = (15 - s % 15) % 15;
                    let d = 1 - (s + k4) / 15;
                    if d.abs() > max_offset {
                        continue;
                    }
                    for c in 0..5 {
                        let mut n = [k0, k1, k2, k3, k4];
                        n[c] += 15 * d;
                        out.insert(n);
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}
