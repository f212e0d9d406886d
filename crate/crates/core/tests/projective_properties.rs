//! Property suite for the projective-space machinery: fixed-point identities,
//! localization laws, and the quotient constructions they certify.

use equichow_core::quotient::{chi_class, RemovedLocus};
use equichow_core::{
    BigInt, Character, CharacterLattice, IntPolynomial, ProjectiveAction, Representation,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Distinct-weight tuples of the given length with entries in `lo..=hi`.
fn distinct_tuples(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len);
    fn rec(len: usize, lo: i64, hi: i64, current: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if current.len() == len {
            out.push(current.clone());
            return;
        }
        for w in lo..=hi {
            if !current.contains(&w) {
                current.push(w);
                rec(len, lo, hi, current, out);
                current.pop();
            }
        }
    }
    rec(len, lo, hi, &mut current, &mut out);
    out
}

#[test]
fn defining_relation_vanishes_at_every_fixed_point() {
    for weights in distinct_tuples(3, -2, 2) {
        let action = ProjectiveAction::diagonal(&weights).unwrap();
        let relation = action.relation();
        for r in 0..weights.len() {
            let restricted = action.restrict_to_fixed(&relation, r).unwrap();
            assert!(
                restricted.is_zero(),
                "relation of weights {weights:?} at fixed point {r}"
            );
        }
    }
}

#[test]
fn localization_is_additive_and_point_ring_linear() {
    let action = ProjectiveAction::diagonal(&[-1, 0, 2]).unwrap();
    let ambient = action.ambient().clone();
    let h = IntPolynomial::var(&ambient, "h").unwrap();
    let t = IntPolynomial::var(&ambient, "t").unwrap();
    let a = h.pow(2);
    let b = h.try_mul(&t).unwrap().scale(&BigInt::from(3));
    let sum = action
        .integrate(&a.try_add(&b).unwrap())
        .unwrap();
    let separate = action
        .integrate(&a)
        .unwrap()
        .try_add(&action.integrate(&b).unwrap())
        .unwrap();
    assert_eq!(sum, separate);

    // multiplication by a polynomial in the torus variables factors out
    let t_point = IntPolynomial::var(action.point_ambient(), "t").unwrap();
    let scalar_in = action
        .integrate(&a.try_mul(&t.pow(2).scale(&BigInt::from(5))).unwrap())
        .unwrap();
    let scalar_out = action
        .integrate(&a)
        .unwrap()
        .try_mul(&t_point.pow(2).scale(&BigInt::from(5)))
        .unwrap();
    assert_eq!(scalar_in, scalar_out);
}

#[test]
fn self_intersection_equals_euler_multiplication() {
    let mut rng = StdRng::seed_from_u64(21);
    for _ in 0..40 {
        let n = rng.gen_range(1..=2usize);
        let weights = loop {
            let candidate: Vec<i64> = (0..=n).map(|_| rng.gen_range(-3..=3)).collect();
            let mut dedup = candidate.clone();
            dedup.sort_unstable();
            dedup.dedup();
            if dedup.len() == candidate.len() {
                break candidate;
            }
        };
        let action = ProjectiveAction::diagonal(&weights).unwrap();
        let point = action.point_ambient().clone();
        let t = IntPolynomial::var(&point, "t").unwrap();
        let alpha = t
            .pow(rng.gen_range(0..=3))
            .scale(&BigInt::from(rng.gen_range(-3i64..=3)));
        let r = rng.gen_range(0..weights.len());
        let push = action.pushforward_from_fixed(&alpha, r).unwrap();
        let back = action.restrict_to_fixed(&push, r).unwrap();
        let euler = action.euler_class(r).unwrap();
        assert_eq!(
            back,
            alpha.try_mul(&euler).unwrap(),
            "weights {weights:?}, fixed point {r}"
        );
    }
}

#[test]
fn euler_classes_are_homogeneous_of_top_degree() {
    for weights in distinct_tuples(3, -2, 2) {
        let action = ProjectiveAction::diagonal(&weights).unwrap();
        for r in 0..weights.len() {
            let euler = action.euler_class(r).unwrap();
            assert!(!euler.is_zero());
            assert_eq!(
                euler.weighted_degree(),
                equichow_core::Homogeneity::Homogeneous(2),
                "weights {weights:?} point {r}"
            );
        }
    }
}

#[test]
fn rank_two_torus_actions_localize() {
    // P^1 with the full rank-2 torus: weights (1,0) and (0,1)
    let lattice = CharacterLattice::new(2).unwrap();
    let action = ProjectiveAction::new(
        lattice,
        vec![Character::new(vec![1, 0]), Character::new(vec![0, 1])],
    )
    .unwrap();
    let h = IntPolynomial::var(action.ambient(), "h").unwrap();
    assert!(action.integrate(&h).unwrap().is_one());
    assert!(action
        .integrate(&IntPolynomial::one(action.ambient()))
        .unwrap()
        .is_zero());
    // euler classes are the root differences t2 - t1 and t1 - t2
    let e0 = action.euler_class(0).unwrap();
    let e1 = action.euler_class(1).unwrap();
    assert_eq!(e0, e1.neg());
    assert_eq!(e0.to_string(), "-t1 + t2");
}

#[test]
fn module_basis_holds_for_random_actions_and_monomials() {
    let mut rng = StdRng::seed_from_u64(22);
    for _ in 0..10 {
        let n = rng.gen_range(1..=3usize);
        let weights: Vec<i64> = (0..=n).map(|_| rng.gen_range(-4..=4)).collect();
        let action = ProjectiveAction::diagonal(&weights).unwrap();
        let presentation = action.presentation();
        let ambient = action.ambient().clone();
        let h = IntPolynomial::var(&ambient, "h").unwrap();
        for _ in 0..60 {
            let exp_h = rng.gen_range(0..8u32);
            let exp_t = rng.gen_range(0..5u32);
            let t = IntPolynomial::var(&ambient, "t").unwrap();
            let monomial = h.pow(exp_h).try_mul(&t.pow(exp_t)).unwrap();
            let nf = presentation.normal_form(&monomial).unwrap();
            let h_index = ambient.index_of("h").unwrap();
            assert!(
                nf.degree_in_var(h_index) <= n as u32,
                "weights {weights:?}: normal form of h^{exp_h} t^{exp_t} has h-degree above {n}"
            );
        }
        // 1, h, .., h^n are pairwise distinct normal forms
        let mut seen = Vec::new();
        for k in 0..=n as u32 {
            let nf = presentation.normal_form(&h.pow(k)).unwrap();
            assert!(!seen.contains(&nf));
            seen.push(nf);
        }
    }
}

#[test]
fn quotient_classes_match_projective_euler_data() {
    // removing the origin from a two-line representation with distinct
    // weights gives the product of the two linear forms, which is the
    // relation of the corresponding projective line up to the h variable
    let v = Representation::diagonal(&[1, 3]).unwrap();
    let chi = chi_class(&RemovedLocus::origin(), &v).unwrap();
    let t = IntPolynomial::var(v.lattice().ambient(), "t").unwrap();
    assert_eq!(chi, t.pow(2).scale(&BigInt::from(3)));
}

#[test]
fn normal_rep_euler_product_agrees_with_action_euler() {
    // the product of the linear forms of the normal representation at r is
    // the Euler class computed by the projective machinery
    let lattice = CharacterLattice::new(1).unwrap();
    for weights in distinct_tuples(3, -2, 2) {
        let chars: Vec<Character> = weights.iter().map(|&w| Character::new(vec![w])).collect();
        let rep = Representation::new(lattice.clone(), chars.clone()).unwrap();
        let action = ProjectiveAction::new(lattice.clone(), chars).unwrap();
        for r in 0..weights.len() {
            let normal = rep.normal_rep_at_fixed_point(r).unwrap();
            let mut product = IntPolynomial::one(lattice.ambient());
            for chi in normal.characters() {
                product = product
                    .try_mul(&lattice.linear_form(chi).unwrap())
                    .unwrap();
            }
            assert_eq!(product, action.euler_class(r).unwrap());
        }
    }
}
