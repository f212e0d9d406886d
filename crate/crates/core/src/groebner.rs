//! Buchberger's algorithm over the rationals, graded-lexicographic order.
//!
//! Integer-coefficient quotients in this crate go through the principal or
//! monic strategies instead; a Groebner basis is only ever computed over Q.

use crate::coeff::Coeff;
use crate::monomial::Monomial;
use crate::poly::RatPolynomial;
use num_rational::BigRational;

fn leading(p: &RatPolynomial) -> (Monomial, BigRational) {
    let (m, c) = p.leading_term().expect("nonzero polynomial");
    (m.clone(), c.clone())
}

/// Full reduction of `p` by `basis`: every term is reduced, so the result is
/// the canonical normal form once `basis` is a reduced Groebner basis.
pub fn reduce_full(p: &RatPolynomial, basis: &[RatPolynomial]) -> RatPolynomial {
    let ambient = p.ambient().clone();
    let mut work = p.clone();
    let mut remainder = RatPolynomial::zero(&ambient);
    while !work.is_zero() {
        let (lm, lc) = leading(&work);
        let mut reduced = false;
        for g in basis {
            let (gm, gc) = leading(g);
            if let Some(qm) = lm.try_div(&gm) {
                let qc = lc.try_exact_div(&gc).expect("field division");
                work = work
                    .try_sub(&g.mul_term(&qm, &qc))
                    .expect("same ambient");
                reduced = true;
                break;
            }
        }
        if !reduced {
            let term = RatPolynomial::term(&ambient, lm.clone(), lc.clone());
            remainder = remainder.try_add(&term).expect("same ambient");
            work = work.try_sub(&term).expect("same ambient");
        }
    }
    remainder
}

fn s_polynomial(f: &RatPolynomial, g: &RatPolynomial) -> RatPolynomial {
    let (fm, fc) = leading(f);
    let (gm, gc) = leading(g);
    let lcm = fm.lcm(&gm);
    let left = f.mul_term(
        &lcm.try_div(&fm).expect("lcm divisible"),
        &BigRational::one().try_exact_div(&fc).expect("nonzero"),
    );
    let right = g.mul_term(
        &lcm.try_div(&gm).expect("lcm divisible"),
        &BigRational::one().try_exact_div(&gc).expect("nonzero"),
    );
    left.try_sub(&right).expect("same ambient")
}

fn make_monic(p: &RatPolynomial) -> RatPolynomial {
    let (_, lc) = leading(p);
    let inv = BigRational::one().try_exact_div(&lc).expect("nonzero");
    p.scale(&inv)
}

/// The reduced Groebner basis of the ideal generated by `gens`, under the
/// ambient graded-lex order. Canonical: monic generators, fully inter-reduced,
/// sorted by leading monomial.
pub fn reduced_groebner_basis(gens: &[RatPolynomial]) -> Vec<RatPolynomial> {
    let mut basis: Vec<RatPolynomial> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(make_monic)
        .collect();
    if basis.is_empty() {
        return basis;
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pairs.push((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let (mi, _) = leading(&basis[i]);
        let (mj, _) = leading(&basis[j]);
        // coprime leading monomials reduce to zero, skip
        if mi.is_coprime_with(&mj) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let remainder = reduce_full(&s, &basis);
        if remainder.is_zero() {
            continue;
        }
        let remainder = make_monic(&remainder);
        let new_index = basis.len();
        for k in 0..new_index {
            pairs.push((k, new_index));
        }
        basis.push(remainder);
    }
    inter_reduce(basis)
}

fn inter_reduce(mut basis: Vec<RatPolynomial>) -> Vec<RatPolynomial> {
    loop {
        let mut changed = false;
        let mut next: Vec<RatPolynomial> = Vec::with_capacity(basis.len());
        for i in 0..basis.len() {
            let others: Vec<RatPolynomial> = basis
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let reduced = reduce_full(&basis[i], &others);
            if reduced != basis[i] {
                changed = true;
            }
            if !reduced.is_zero() {
                next.push(make_monic(&reduced));
            } else {
                changed = true;
            }
        }
        next.sort_by(|a, b| {
            let ambient = a.ambient().clone();
            let (ma, _) = leading(a);
            let (mb, _) = leading(b);
            ambient.cmp_monomials(&ma, &mb)
        });
        next.dedup();
        basis = next;
        if !changed {
            return basis;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ambient::Ambient;
    use num_bigint::BigInt;
    use std::sync::Arc;

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn setup() -> (Arc<Ambient>, RatPolynomial, RatPolynomial) {
        let a = Ambient::degree_one(["t1", "t2"]).unwrap();
        let t1 = RatPolynomial::var(&a, "t1").unwrap();
        let t2 = RatPolynomial::var(&a, "t2").unwrap();
        (a, t1, t2)
    }

    #[test]
    fn variables_form_a_basis() {
        let (_, t1, t2) = setup();
        let gb = reduced_groebner_basis(&[t2.clone(), t1.clone()]);
        assert_eq!(gb, vec![t2.clone(), t1.clone()]);
        let product = t1.try_mul(&t2).unwrap();
        assert!(reduce_full(&product, &gb).is_zero());
    }

    #[test]
    fn s_polynomials_complete_the_basis() {
        // (t1^2 - t2^2, t1*t2) forces t2^3 into the basis
        let (_, t1, t2) = setup();
        let g1 = t1.pow(2).try_sub(&t2.pow(2)).unwrap();
        let g2 = t1.try_mul(&t2).unwrap();
        let gb = reduced_groebner_basis(&[g1, g2]);
        let t2_cubed = t2.pow(3);
        assert!(reduce_full(&t2_cubed, &gb).is_zero());
        // t2^2 is NOT in the ideal
        assert!(!reduce_full(&t2.pow(2), &gb).is_zero());
    }

    #[test]
    fn normal_form_is_idempotent() {
        let (_, t1, t2) = setup();
        let g = t1.pow(2).try_sub(&t2.pow(2)).unwrap();
        let gb = reduced_groebner_basis(&[g]);
        let p = t1
            .pow(3)
            .try_add(&t1.try_mul(&t2).unwrap().scale(&rat(5)))
            .unwrap();
        let once = reduce_full(&p, &gb);
        assert_eq!(reduce_full(&once, &gb), once);
    }

    #[test]
    fn scaled_generators_give_the_same_basis() {
        let (_, t1, t2) = setup();
        let g = t1.pow(2).try_sub(&t2.pow(2)).unwrap();
        let gb1 = reduced_groebner_basis(std::slice::from_ref(&g));
        let gb2 = reduced_groebner_basis(&[g.scale(&rat(-7))]);
        assert_eq!(gb1, gb2);
    }
}
