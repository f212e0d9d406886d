//! Benchmarks comparing the rayon kernels against the sequential fallbacks.
//!
//! With the default `parallel` feature both paths are measured side by side;
//! built with `--no-default-features` only the sequential path exists.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use equichow_core::{Ambient, BigInt, IntPolynomial, Monomial, ProjectiveAction};
use std::sync::Arc;

/// Dense polynomial with every monomial of total degree up to `degree` in
/// three variables.
fn dense_poly(ambient: &Arc<Ambient>, degree: u64) -> IntPolynomial {
    let mut terms: Vec<(Monomial, BigInt)> = Vec::new();
    let mut sign = 1i64;
    for d in 0..=degree {
        for m in equichow_core::monomials_of_degree(ambient, d) {
            terms.push((m, BigInt::from(sign * (d as i64 + 1))));
            sign = -sign;
        }
    }
    IntPolynomial::from_terms(ambient, terms).unwrap()
}

fn bench_poly_mul(c: &mut Criterion) {
    let ambient = Ambient::degree_one(["x", "y", "z"]).unwrap();
    let mut group = c.benchmark_group("poly_mul");
    for degree in [6u64, 10, 14] {
        let p = dense_poly(&ambient, degree);
        let q = dense_poly(&ambient, degree);
        let terms = p.num_terms();
        group.bench_with_input(BenchmarkId::new("sequential", terms), &degree, |b, _| {
            b.iter(|| p.mul_sequential(&q).unwrap())
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", terms), &degree, |b, _| {
            b.iter(|| p.mul_parallel(&q).unwrap())
        });
    }
    group.finish();
}

/// Distinct-weight tuples of the given length with entries in `lo..=hi`.
fn distinct_tuples(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
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
    rec(len, lo, hi, &mut Vec::new(), &mut out);
    out
}

fn integrate_tuple(weights: &[i64]) -> IntPolynomial {
    let action = ProjectiveAction::diagonal(weights).unwrap();
    let h = IntPolynomial::var(action.ambient(), "h").unwrap();
    action.integrate(&h.pow(weights.len() as u32 - 1)).unwrap()
}

fn bench_localization_sweep(c: &mut Criterion) {
    let tuples = distinct_tuples(4, -2, 2);
    let mut group = c.benchmark_group("localization_sweep");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| {
            tuples
                .iter()
                .map(|w| integrate_tuple(w))
                .filter(|v| v.is_one())
                .count()
        })
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        use rayon::prelude::*;
        b.iter(|| {
            tuples
                .par_iter()
                .map(|w| integrate_tuple(w))
                .filter(|v| v.is_one())
                .count()
        })
    });
    group.finish();
}

fn bench_graded_piece(c: &mut Criterion) {
    // quotient of a rank-3 torus ring: relation matrix assembly fans out
    let ambient = Ambient::degree_one(["t1", "t2", "t3"]).unwrap();
    let t1 = IntPolynomial::var(&ambient, "t1").unwrap();
    let t2 = IntPolynomial::var(&ambient, "t2").unwrap();
    let t3 = IntPolynomial::var(&ambient, "t3").unwrap();
    let relation = t1
        .try_mul(&t2)
        .unwrap()
        .try_mul(&t3)
        .unwrap()
        .scale(&BigInt::from(6));
    let presentation = equichow_core::RingPresentation::new(
        &ambient,
        vec![relation],
        equichow_core::Strategy::PrincipalUnivariate,
    )
    .unwrap();
    let mut group = c.benchmark_group("graded_piece");
    for degree in [6u64, 9] {
        group.bench_with_input(BenchmarkId::from_parameter(degree), &degree, |b, &d| {
            b.iter(|| presentation.graded_piece(d))
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_poly_mul,
    bench_localization_sweep,
    bench_graded_piece
);
criterion_main!(benches);
