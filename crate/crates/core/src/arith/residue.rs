//! Residues without leaving ℚ.
//!
//! Poles at irrational points are handled through whole factors of the
//! denominator: the sum of residues over all roots of a factor is rational,
//! and so is the residue map `root ↦ Res` written as a polynomial modulo the
//! factor.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use super::laurent::{expand, Point};
use super::poly::Polynomial;
use super::ratfunc::RationalFunction;
use super::rational::Rational;
use super::ArithError;

/// `Res_{t=∞} f`, the negated `t⁻¹` coefficient at `∞`.
pub fn residue_at_infinity(f: &RationalFunction) -> Rational {
    -expand(f, &Point::Infinity, -1).coeff(-1).expect("within floor")
}

/// Residue of `f` at the rational point `c`.
pub fn residue_at(f: &RationalFunction, c: &Rational) -> Rational {
    expand(f, &Point::Finite(c.clone()), -1).coeff(-1).expect("within bound")
}

/// Part of `den` supported on the roots of the squarefree `p`, i.e. the
/// largest divisor of `den` whose roots are all roots of `p`.
fn local_part(den: &Polynomial, p: &Polynomial) -> Polynomial {
    let mut local = Polynomial::one();
    let mut rest = den.clone();
    loop {
        let g = Polynomial::gcd(&rest, p);
        if g.is_constant() {
            return local;
        }
        local = &local * &g;
        rest = rest.exact_div(&g);
    }
}

fn check_factor(f: &RationalFunction, p: &Polynomial) -> Result<Polynomial, ArithError> {
    if p.is_constant() || !Polynomial::gcd(p, &p.derivative()).is_constant() {
        return Err(ArithError::NotAFactor(p.to_string()));
    }
    let p = p.monic();
    if !p.divides(f.den()) {
        return Err(ArithError::NotAFactor(p.to_string()));
    }
    Ok(p)
}

/// Sum of residues of `f` over the roots of `p`, for poles of any order.
///
/// With `den = P·Q`, `P` the part on the roots of `p`, the partial fraction
/// `B/P` with `B ≡ num·Q⁻¹ (mod P)` carries all those poles; its residue sum
/// is the `t^{deg P − 1}` coefficient of `B`.
pub fn residue_sum_general(f: &RationalFunction, p: &Polynomial) -> Result<Rational, ArithError> {
    let p = check_factor(f, p)?;
    let local = local_part(f.den(), &p);
    let q = f.den().exact_div(&local);
    let qinv = q.inverse_mod(&local).expect("coprime cofactor");
    let b = (f.num() * &qinv).rem(&local);
    Ok(b.coeff(local.degree().unwrap() - 1))
}

/// Sum of residues of `f` over the roots of the squarefree factor `p` of its
/// denominator. Requires simple poles there.
pub fn residue_sum_over_factor(f: &RationalFunction, p: &Polynomial) -> Result<Rational, ArithError> {
    let pm = check_factor(f, p)?;
    let local = local_part(f.den(), &pm);
    if local != pm {
        let order = local.degree().unwrap() / pm.degree().unwrap();
        return Err(ArithError::HigherOrderPole { factor: pm.to_string(), order: order.max(2) });
    }
    residue_sum_general(f, &pm)
}

/// The residue map at the roots of `p` as a polynomial `R` with
/// `Res_{t=θ} f = R(θ)` for every root `θ`. Requires simple poles.
pub fn residue_polynomial(f: &RationalFunction, p: &Polynomial) -> Result<Polynomial, ArithError> {
    let pm = check_factor(f, p)?;
    if local_part(f.den(), &pm) != pm {
        return Err(ArithError::HigherOrderPole { factor: pm.to_string(), order: 2 });
    }
    let dp = f.den().derivative().rem(&pm);
    let inv = dp.inverse_mod(&pm).expect("simple roots");
    Ok((f.num() * &inv).rem(&pm))
}

/// Squarefree factorization of the denominator with rational linear factors
/// split off. Linear factors come first, ordered by `|root|` with the
/// positive root before its negative; the remaining factors follow.
pub fn denominator_factors(f: &RationalFunction) -> Vec<(Polynomial, usize)> {
    let mut linear: Vec<(Rational, usize)> = Vec::new();
    let mut other = Vec::new();
    for (sf, mult) in f.den().squarefree_decomposition() {
        let mut rest = sf;
        for r in rest.rational_roots() {
            linear.push((r.clone(), mult));
            rest = rest.exact_div(&Polynomial::linear_root(&r));
        }
        if !rest.is_constant() {
            other.push((rest.monic(), mult));
        }
    }
    linear.sort_by(|(a, _), (b, _)| match a.abs().cmp(&b.abs()) {
        Ordering::Equal => b.cmp(a),
        o => o,
    });
    linear
        .into_iter()
        .map(|(r, m)| (Polynomial::linear_root(&r), m))
        .chain(other)
        .collect()
}

/// `Σ_p residue_sum_general(f, p) + Res_∞ f`; zero by the residue theorem.
pub fn residue_theorem_defect(f: &RationalFunction) -> Rational {
    let mut total = residue_at_infinity(f);
    for (p, _) in denominator_factors(f) {
        total += residue_sum_general(f, &p).expect("factor of the denominator");
    }
    total
}

pub fn is_zero_defect(f: &RationalFunction) -> bool {
    residue_theorem_defect(f).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn residue_at_infinity_examples() {
        assert_eq!(residue_at_infinity(&rf(&[1], &[0, 1])), int(-1));
        assert_eq!(residue_at_infinity(&RationalFunction::t()), int(0));
        assert_eq!(residue_at_infinity(&rf(&[3, 0, 1], &[0, 1])), int(-3));
    }

    #[test]
    fn residue_sum_examples() {
        let t2m2 = p(&[-2, 0, 1]);
        assert_eq!(residue_sum_over_factor(&rf(&[1], &[-2, 0, 1]), &t2m2).unwrap(), int(0));
        assert_eq!(residue_sum_over_factor(&rf(&[0, 1], &[-2, 0, 1]), &t2m2).unwrap(), int(1));
        assert_eq!(residue_sum_over_factor(&rf(&[1], &[0, 1]), &p(&[0, 1])).unwrap(), int(1));
        assert!(matches!(
            residue_sum_over_factor(&rf(&[1], &[0, 1]), &p(&[-1, 1])),
            Err(ArithError::NotAFactor(_))
        ));
        assert!(matches!(
            residue_sum_over_factor(&rf(&[1], &[0, 0, 1]), &p(&[0, 1])),
            Err(ArithError::HigherOrderPole { .. })
        ));
    }

    #[test]
    fn higher_order_residue_sum() {
        // (t + 1)/t^2 has residue 1 at 0
        assert_eq!(residue_sum_general(&rf(&[1, 1], &[0, 0, 1]), &p(&[0, 1])).unwrap(), int(1));
        // t^3/(t^2 - 2)^2: residue sum 1 by the residue theorem
        let f = rf(&[0, 0, 0, 1], &[4, 0, -4, 0, 1]);
        assert_eq!(residue_sum_general(&f, &p(&[-2, 0, 1])).unwrap(), int(1));
        assert!(is_zero_defect(&f));
    }

    #[test]
    fn residue_polynomial_matches_rational_case() {
        // 1/(t^2 - 1): residues 1/2 at 1, -1/2 at -1, R(θ) = θ/2
        let f = rf(&[1], &[-1, 0, 1]);
        let r = residue_polynomial(&f, &p(&[-1, 0, 1])).unwrap();
        assert_eq!(r, Polynomial::monomial(crate::arith::rat(1, 2), 1));
        assert_eq!(residue_at(&f, &int(1)), crate::arith::rat(1, 2));
    }

    #[test]
    fn denominator_factor_examples() {
        let f = rf(&[1], &[0, -1, 0, 1]);
        assert_eq!(denominator_factors(&f), vec![(p(&[0, 1]), 1), (p(&[-1, 1]), 1), (p(&[1, 1]), 1)]);
        assert!(denominator_factors(&RationalFunction::t()).is_empty());
        assert_eq!(denominator_factors(&rf(&[1], &[-2, 0, 1])), vec![(p(&[-2, 0, 1]), 1)]);
    }
}
