//! Symmetric polynomials: elementary symmetric functions, symmetry tests, and
//! the decomposition of a symmetric polynomial into elementary generators.

use crate::ambient::Ambient;
use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::GradedPolynomial;
use std::sync::Arc;

/// The `i`-th elementary symmetric polynomial of the listed variables: the sum
/// of all squarefree degree-`i` monomials. `e_0 = 1`.
pub fn elementary_symmetric<C: Coeff>(
    ambient: &Arc<Ambient>,
    i: usize,
    vars: &[usize],
) -> Result<GradedPolynomial<C>> {
    if i > vars.len() {
        return Err(Error::SymmetricIndexOutOfRange {
            index: i,
            vars: vars.len(),
        });
    }
    for &v in vars {
        if v >= ambient.len() {
            return Err(Error::IndexOutOfRange {
                index: v,
                limit: ambient.len(),
            });
        }
    }
    let mut terms: Vec<(Monomial, C)> = Vec::new();
    let mut subset: Vec<usize> = Vec::with_capacity(i);
    collect_subsets(vars, i, 0, &mut subset, &mut terms);
    GradedPolynomial::from_terms(ambient, terms)
}

fn collect_subsets<C: Coeff>(
    vars: &[usize],
    size: usize,
    start: usize,
    subset: &mut Vec<usize>,
    out: &mut Vec<(Monomial, C)>,
) {
    if subset.len() == size {
        let m = Monomial::from_pairs(subset.iter().map(|&v| (v, 1)));
        out.push((m, C::one()));
        return;
    }
    for k in start..vars.len() {
        subset.push(vars[k]);
        collect_subsets(vars, size, k + 1, subset, out);
        subset.pop();
    }
}

fn check_var_support<C: Coeff>(p: &GradedPolynomial<C>, vars: &[usize]) -> Result<()> {
    for (m, _) in p.terms() {
        for v in m.vars() {
            if !vars.contains(&v) {
                return Err(Error::VariableOutsideSet(p.ambient().name(v).to_string()));
            }
        }
    }
    Ok(())
}

fn swap_vars<C: Coeff>(p: &GradedPolynomial<C>, a: usize, b: usize) -> GradedPolynomial<C> {
    let terms = p.terms().map(|(m, c)| {
        let mapped = m.map_vars(|v| {
            if v == a {
                b
            } else if v == b {
                a
            } else {
                v
            }
        });
        (mapped, c.clone())
    });
    GradedPolynomial::from_terms(p.ambient(), terms.collect::<Vec<_>>()).expect("same ambient")
}

/// Whether `p` is invariant under every transposition of the listed variables.
/// `p` must use only those variables.
pub fn is_symmetric<C: Coeff>(p: &GradedPolynomial<C>, vars: &[usize]) -> Result<bool> {
    check_var_support(p, vars)?;
    for w in vars.windows(2) {
        if swap_vars(p, w[0], w[1]) != *p {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Pure lex comparison along the listed variable order (`vars[0]` largest).
fn cmp_lex_in(vars: &[usize], a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    for &v in vars {
        match a.exponent(v).cmp(&b.exponent(v)) {
            std::cmp::Ordering::Equal => continue,
            other => return other,
        }
    }
    std::cmp::Ordering::Equal
}

/// Rewrite a symmetric polynomial in terms of the elementary symmetric
/// generators of the listed variables. The result lives in a fresh ambient
/// `e1..ek` where `e_i` has degree `i`; substituting
/// `e_i -> elementary_symmetric(i, vars)` recovers the input exactly.
pub fn express_in_elementary<C: Coeff>(
    p: &GradedPolynomial<C>,
    vars: &[usize],
) -> Result<GradedPolynomial<C>> {
    if !is_symmetric(p, vars)? {
        return Err(Error::NotSymmetric);
    }
    for &v in vars {
        if p.ambient().var(v).degree != 1 {
            return Err(Error::VariableOutsideSet(format!(
                "{} must have degree 1",
                p.ambient().name(v)
            )));
        }
    }
    let k = vars.len();
    let e_ambient = Ambient::new((1..=k).map(|i| (format!("e{i}"), i as u32)))?;
    let elementary: Vec<GradedPolynomial<C>> = (1..=k)
        .map(|i| elementary_symmetric(p.ambient(), i, vars))
        .collect::<Result<_>>()?;

    let mut out = GradedPolynomial::zero(&e_ambient);
    // one homogeneous component at a time keeps the leading-term descent finite
    let mut degrees: Vec<u64> = p
        .terms()
        .map(|(m, _)| p.ambient().monomial_degree(m))
        .collect();
    degrees.sort_unstable();
    degrees.dedup();
    for d in degrees {
        let mut work = p.homogeneous_component(d);
        while !work.is_zero() {
            let (lead_m, lead_c) = {
                let (m, c) = work
                    .terms()
                    .max_by(|(a, _), (b, _)| cmp_lex_in(vars, a, b))
                    .expect("nonzero");
                (m.clone(), c.clone())
            };
            let lambda: Vec<u32> = vars.iter().map(|&v| lead_m.exponent(v)).collect();
            if lambda.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::NotSymmetric);
            }
            // exponents of e_i: consecutive differences of the partition
            let mut e_mono = Monomial::one();
            let mut subtract = GradedPolynomial::one(p.ambient());
            for i in 0..k {
                let next = if i + 1 < k { lambda[i + 1] } else { 0 };
                let mu = lambda[i] - next;
                if mu > 0 {
                    e_mono = e_mono.mul(&Monomial::var_pow(i, mu));
                    subtract = subtract.try_mul(&elementary[i].pow(mu))?;
                }
            }
            out = out.try_add(&GradedPolynomial::term(&e_ambient, e_mono, lead_c.clone()))?;
            work = work.try_sub(&subtract.scale(&lead_c))?;
        }
    }
    Ok(out)
}

/// Substitute `e_i -> elementary_symmetric(i, vars)`, undoing
/// [`express_in_elementary`].
pub fn expand_elementary<C: Coeff>(
    expression: &GradedPolynomial<C>,
    target: &Arc<Ambient>,
    vars: &[usize],
) -> Result<GradedPolynomial<C>> {
    let bindings: Vec<(String, GradedPolynomial<C>)> = (1..=expression.ambient().len())
        .map(|i| {
            elementary_symmetric(target, i, vars).map(|e| (format!("e{i}"), e))
        })
        .collect::<Result<_>>()?;
    let borrowed: Vec<(&str, GradedPolynomial<C>)> = bindings
        .iter()
        .map(|(n, p)| (n.as_str(), p.clone()))
        .collect();
    expression.substitute(target, &borrowed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type IntPoly = GradedPolynomial<BigInt>;

    fn torus(n: usize) -> Arc<Ambient> {
        Ambient::degree_one((1..=n).map(|i| format!("t{i}"))).unwrap()
    }

    fn var(a: &Arc<Ambient>, i: usize) -> IntPoly {
        IntPoly::var_index(a, i)
    }

    #[test]
    fn small_elementary_symmetrics() {
        let a = torus(3);
        let e0: IntPoly = elementary_symmetric(&a, 0, &[0, 1, 2]).unwrap();
        assert!(e0.is_one());
        let e1: IntPoly = elementary_symmetric(&a, 1, &[0, 1, 2]).unwrap();
        assert_eq!(e1.to_string(), "t1 + t2 + t3");
        let e2: IntPoly = elementary_symmetric(&a, 2, &[0, 1, 2]).unwrap();
        assert_eq!(e2.to_string(), "t1*t2 + t1*t3 + t2*t3");
        assert!(elementary_symmetric::<BigInt>(&a, 4, &[0, 1, 2]).is_err());
    }

    #[test]
    fn sum_of_first_two_elementaries() {
        // e1 + e2 in two variables expands to t1 + t2 + t1*t2
        let a = torus(2);
        let e1: IntPoly = elementary_symmetric(&a, 1, &[0, 1]).unwrap();
        let e2: IntPoly = elementary_symmetric(&a, 2, &[0, 1]).unwrap();
        let sum = e1.try_add(&e2).unwrap();
        let expected = var(&a, 0)
            .try_add(&var(&a, 1))
            .unwrap()
            .try_add(&var(&a, 0).try_mul(&var(&a, 1)).unwrap())
            .unwrap();
        assert_eq!(sum, expected);
    }

    #[test]
    fn symmetry_detection() {
        let a = torus(2);
        let sym = var(&a, 0).pow(2).try_add(&var(&a, 1).pow(2)).unwrap();
        assert!(is_symmetric(&sym, &[0, 1]).unwrap());
        let asym = var(&a, 0).try_sub(&var(&a, 1)).unwrap();
        assert!(!is_symmetric(&asym, &[0, 1]).unwrap());
        assert_eq!(express_in_elementary(&asym, &[0, 1]), Err(Error::NotSymmetric));
    }

    #[test]
    fn power_sum_decomposition() {
        // t1^2 + t2^2 = e1^2 - 2 e2, checked by expanding the right-hand side
        let a = torus(2);
        let p = var(&a, 0).pow(2).try_add(&var(&a, 1).pow(2)).unwrap();
        let expr = express_in_elementary(&p, &[0, 1]).unwrap();
        let e = expr.ambient().clone();
        let expected = IntPoly::var(&e, "e1")
            .unwrap()
            .pow(2)
            .try_sub(&IntPoly::var(&e, "e2").unwrap().scale(&BigInt::from(2)))
            .unwrap();
        assert_eq!(expr, expected);
        // round-trip
        let back = expand_elementary(&expr, &a, &[0, 1]).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn elementary_is_fixed_point() {
        let a = torus(3);
        let e3: IntPoly = elementary_symmetric(&a, 3, &[0, 1, 2]).unwrap();
        let expr = express_in_elementary(&e3, &[0, 1, 2]).unwrap();
        assert_eq!(expr.to_string(), "e3");
    }

    #[test]
    fn inhomogeneous_symmetric_input() {
        let a = torus(2);
        let p = var(&a, 0)
            .try_add(&var(&a, 1))
            .unwrap()
            .try_add(&IntPoly::one(&a))
            .unwrap();
        let expr = express_in_elementary(&p, &[0, 1]).unwrap();
        assert_eq!(expr.to_string(), "e1 + 1");
        assert_eq!(expand_elementary(&expr, &a, &[0, 1]).unwrap(), p);
    }
}
