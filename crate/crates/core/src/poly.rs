//! Sparse multivariate polynomials with exact coefficients and a grading.

use crate::ambient::Ambient;
use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use num_bigint::BigInt;
use num_rational::BigRational;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Weighted-degree classification of a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial carries no degree.
    Zero,
    /// All terms share this weighted degree.
    Homogeneous(u64),
    Inhomogeneous,
}

/// A sparse polynomial over an exact coefficient domain, graded by its ambient
/// variable set. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPolynomial<C: Coeff> {
    ambient: Arc<Ambient>,
    terms: BTreeMap<Monomial, C>,
}

pub type IntPolynomial = GradedPolynomial<BigInt>;
pub type RatPolynomial = GradedPolynomial<BigRational>;

/// Past this many term pairs, `try_mul` switches to the parallel kernel.
/// Below this the merge overhead outweighs the fan-out.
#[cfg(feature = "parallel")]
const PARALLEL_MUL_THRESHOLD: usize = 65_536;

impl<C: Coeff> GradedPolynomial<C> {
    pub fn zero(ambient: &Arc<Ambient>) -> Self {
        GradedPolynomial {
            ambient: Arc::clone(ambient),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ambient: &Arc<Ambient>, value: C) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(Monomial::one(), value);
        }
        GradedPolynomial {
            ambient: Arc::clone(ambient),
            terms,
        }
    }

    pub fn one(ambient: &Arc<Ambient>) -> Self {
        Self::constant(ambient, C::one())
    }

    pub fn from_i64(ambient: &Arc<Ambient>, value: i64) -> Self {
        Self::constant(ambient, C::from_i64(value))
    }

    /// The named variable as a polynomial.
    pub fn var(ambient: &Arc<Ambient>, name: &str) -> Result<Self> {
        let index = ambient
            .index_of(name)
            .ok_or_else(|| Error::UndeclaredVariable(name.to_string()))?;
        Ok(Self::var_index(ambient, index))
    }

    pub fn var_index(ambient: &Arc<Ambient>, index: usize) -> Self {
        Self::term(ambient, Monomial::var(index), C::one())
    }

    pub fn term(ambient: &Arc<Ambient>, monomial: Monomial, coeff: C) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(monomial, coeff);
        }
        GradedPolynomial {
            ambient: Arc::clone(ambient),
            terms,
        }
    }

    /// Build from raw terms, merging duplicates and dropping zeros. Every
    /// monomial must use declared variables.
    pub fn from_terms(
        ambient: &Arc<Ambient>,
        terms: impl IntoIterator<Item = (Monomial, C)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<Monomial, C> = BTreeMap::new();
        for (m, c) in terms {
            if let Some(bad) = m.vars().find(|&v| v >= ambient.len()) {
                return Err(Error::UndeclaredVariable(format!("#{bad}")));
            }
            merge_term(&mut map, m, c);
        }
        Ok(GradedPolynomial {
            ambient: Arc::clone(ambient),
            terms: map,
        })
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// The constant coefficient.
    pub fn constant_term(&self) -> C {
        self.coefficient(&Monomial::one())
    }

    /// True when the polynomial is the constant 1.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    /// Leading term under the ambient graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| self.ambient.cmp_monomials(a, b))
    }

    /// Terms sorted descending under the ambient graded-lex order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| self.ambient.cmp_monomials(b, a));
        v
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    /// Exact sum. Errors when the ambients differ.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            merge_term(&mut terms, m.clone(), c.clone());
        }
        Ok(GradedPolynomial {
            ambient: Arc::clone(&self.ambient),
            terms,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        GradedPolynomial {
            ambient: Arc::clone(&self.ambient),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, factor: &C) -> Self {
        if factor.is_zero() {
            return Self::zero(&self.ambient);
        }
        GradedPolynomial {
            ambient: Arc::clone(&self.ambient),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.mul(factor)))
                .collect(),
        }
    }

    /// Multiply by a single term.
    pub fn mul_term(&self, monomial: &Monomial, coeff: &C) -> Self {
        if coeff.is_zero() {
            return Self::zero(&self.ambient);
        }
        GradedPolynomial {
            ambient: Arc::clone(&self.ambient),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(monomial), c.mul(coeff)))
                .collect(),
        }
    }

    /// Exact product. Errors when the ambients differ. Dispatches to the
    /// parallel kernel for large inputs when the `parallel` feature is on.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        #[cfg(feature = "parallel")]
        if self.terms.len() * other.terms.len() >= PARALLEL_MUL_THRESHOLD {
            return Ok(self.mul_parallel_kernel(other));
        }
        Ok(self.mul_sequential_kernel(other))
    }

    /// Single-threaded product, exposed for benchmarking against the parallel
    /// kernel.
    pub fn mul_sequential(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(self.mul_sequential_kernel(other))
    }

    fn mul_sequential_kernel(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<Monomial, C> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                merge_term(&mut terms, ma.mul(mb), ca.mul(cb));
            }
        }
        GradedPolynomial {
            ambient: Arc::clone(&self.ambient),
            terms,
        }
    }

    /// Rayon product, exposed for benchmarking against the sequential kernel.
    #[cfg(feature = "parallel")]
    pub fn mul_parallel(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(self.mul_parallel_kernel(other))
    }

    #[cfg(feature = "parallel")]
    fn mul_parallel_kernel(&self, other: &Self) -> Self {
        use rayon::prelude::*;
        let lhs: Vec<(&Monomial, &C)> = self.terms.iter().collect();
        let rhs: Vec<(&Monomial, &C)> = other.terms.iter().collect();
        let chunk = (lhs.len() / (4 * rayon::current_num_threads().max(1))).max(1);
        let terms = lhs
            .par_chunks(chunk)
            .map(|part| {
                let mut local: BTreeMap<Monomial, C> = BTreeMap::new();
                for &(ma, ca) in part {
                    for &(mb, cb) in &rhs {
                        merge_term(&mut local, ma.mul(mb), ca.mul(cb));
                    }
                }
                local
            })
            .reduce(BTreeMap::new, |mut acc, partial| {
                for (m, c) in partial {
                    merge_term(&mut acc, m, c);
                }
                acc
            });
        GradedPolynomial {
            ambient: Arc::clone(&self.ambient),
            terms,
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one(&self.ambient);
        for _ in 0..exp {
            result = result.mul_sequential_kernel(self);
        }
        result
    }

    /// Replace variables by polynomials in `target`. Variables of `self` that
    /// are not bound must exist in `target` under the same name; otherwise the
    /// substitution signals an unbound variable. Binding values must live in
    /// `target`.
    pub fn substitute(
        &self,
        target: &Arc<Ambient>,
        bindings: &[(&str, GradedPolynomial<C>)],
    ) -> Result<Self> {
        for (_, value) in bindings {
            if value.ambient() != target {
                return Err(Error::AmbientMismatch);
            }
        }
        // index in self's ambient -> replacement polynomial in target
        let mut images: Vec<Option<GradedPolynomial<C>>> = vec![None; self.ambient.len()];
        let mut result = Self::zero(target);
        for (m, c) in &self.terms {
            let mut factor = Self::constant(target, c.clone());
            for &(var, exp) in m.pairs() {
                let index = var as usize;
                if images[index].is_none() {
                    let name = self.ambient.name(index);
                    let image = match bindings.iter().find(|(n, _)| *n == name) {
                        Some((_, value)) => value.clone(),
                        None => match target.index_of(name) {
                            Some(i) => Self::var_index(target, i),
                            None => return Err(Error::UnboundVariable(name.to_string())),
                        },
                    };
                    images[index] = Some(image);
                }
                let image = images[index].as_ref().unwrap();
                factor = factor.mul_sequential_kernel(&image.pow(exp));
            }
            result = result.try_add(&factor)?;
        }
        Ok(result)
    }

    /// Weighted degree under the grading, when defined.
    pub fn weighted_degree(&self) -> Homogeneity {
        let mut degrees = self.terms.keys().map(|m| self.ambient.monomial_degree(m));
        match degrees.next() {
            None => Homogeneity::Zero,
            Some(first) => {
                if degrees.all(|d| d == first) {
                    Homogeneity::Homogeneous(first)
                } else {
                    Homogeneity::Inhomogeneous
                }
            }
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        !matches!(self.weighted_degree(), Homogeneity::Inhomogeneous)
    }

    /// The part of weighted degree `d`.
    pub fn homogeneous_component(&self, d: u64) -> Self {
        GradedPolynomial {
            ambient: Arc::clone(&self.ambient),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| self.ambient.monomial_degree(m) == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Highest exponent of one variable across all terms.
    pub fn degree_in_var(&self, index: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(index)).max().unwrap_or(0)
    }

    /// Convert coefficients into another domain.
    pub fn map_coeff<D: Coeff>(&self, f: impl Fn(&C) -> D) -> GradedPolynomial<D> {
        GradedPolynomial {
            ambient: Arc::clone(&self.ambient),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), f(c))).collect(),
        }
    }

    /// Exact division by `divisor`; `None` when `self` is not a multiple.
    pub fn try_exact_div(&self, divisor: &Self) -> Option<Self> {
        if self.ambient != divisor.ambient || divisor.is_zero() {
            return None;
        }
        let (dm, dc) = divisor.leading_term()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rest = self.clone();
        let mut quotient = Self::zero(&self.ambient);
        while !rest.is_zero() {
            let (lm, lc) = rest.leading_term()?;
            let qm = lm.try_div(&dm)?;
            let qc = lc.try_exact_div(&dc)?;
            let qterm = Self::term(&self.ambient, qm, qc);
            rest = rest.try_sub(&qterm.mul_sequential_kernel(divisor)).ok()?;
            quotient = quotient.try_add(&qterm).ok()?;
        }
        Some(quotient)
    }
}

impl GradedPolynomial<BigInt> {
    /// View an integer polynomial over the rationals.
    pub fn to_rational(&self) -> GradedPolynomial<BigRational> {
        self.map_coeff(|c| BigRational::from_integer(c.clone()))
    }
}

fn merge_term<C: Coeff>(map: &mut BTreeMap<Monomial, C>, m: Monomial, c: C) {
    if c.is_zero() {
        return;
    }
    match map.entry(m) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = e.get().add(&c);
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

impl<C: Coeff> fmt::Display for GradedPolynomial<C> {
    /// Canonical text: terms in descending graded-lex order, explicit `*` and
    /// `^`, monomial variables in declared order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let magnitude = c.abs();
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}*")?;
                }
                let mut first = true;
                for &(var, exp) in m.pairs() {
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    write!(f, "{}", self.ambient.name(var as usize))?;
                    if exp > 1 {
                        write!(f, "^{exp}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
