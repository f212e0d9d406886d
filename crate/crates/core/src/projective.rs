//! The equivariant Chow ring of projective space under a diagonal torus
//! action: presentation, fixed-point restriction and pushforward, Euler
//! classes, and integration by localization.

use crate::ambient::Ambient;
use crate::chars::{Character, CharacterLattice};
use crate::error::{Error, Result};
use crate::par;
use crate::poly::IntPolynomial;
use crate::presentation::{RingPresentation, Strategy};
use num_bigint::BigInt;
use std::sync::Arc;

/// A diagonal torus action on projective space of dimension `weights.len()-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveAction {
    lattice: CharacterLattice,
    weights: Vec<Character>,
    ambient: Arc<Ambient>,
}

/// Restriction and Euler data at one fixed point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointDatum {
    pub index: usize,
    /// The image of the hyperplane generator under restriction: `-l(chi_r)`.
    pub restriction: IntPolynomial,
    /// Product of the relative normal weights `l(chi_s) - l(chi_r)`.
    pub euler: IntPolynomial,
}

impl ProjectiveAction {
    pub fn new(lattice: CharacterLattice, weights: Vec<Character>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidScenario(
                "a projective action needs at least one weight".into(),
            ));
        }
        for chi in &weights {
            if chi.rank() != lattice.rank() {
                return Err(Error::LatticeMismatch);
            }
        }
        // the hyperplane generator comes first, then the torus variables
        let mut vars: Vec<(String, u32)> = vec![("h".into(), 1)];
        vars.extend(
            lattice
                .ambient()
                .vars()
                .iter()
                .map(|v| (v.name.clone(), v.degree)),
        );
        let ambient = Ambient::new(vars)?;
        Ok(ProjectiveAction {
            lattice,
            weights,
            ambient,
        })
    }

    /// Rank-1 torus with the given diagonal weights.
    pub fn diagonal(weights: &[i64]) -> Result<Self> {
        let lattice = CharacterLattice::new(1)?;
        let characters = weights.iter().map(|&w| Character::new(vec![w])).collect();
        ProjectiveAction::new(lattice, characters)
    }

    /// Dimension `n` of the projective space.
    pub fn dim(&self) -> usize {
        self.weights.len() - 1
    }

    pub fn weights(&self) -> &[Character] {
        &self.weights
    }

    pub fn lattice(&self) -> &CharacterLattice {
        &self.lattice
    }

    /// The ring containing `h` and the torus variables.
    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.ambient
    }

    /// The torus point ring (no `h`).
    pub fn point_ambient(&self) -> &Arc<Ambient> {
        self.lattice.ambient()
    }

    fn hyperplane(&self) -> IntPolynomial {
        IntPolynomial::var(&self.ambient, "h").expect("declared")
    }

    /// The linear form of a character, living in the `h` ring.
    fn form(&self, chi: &Character) -> IntPolynomial {
        self.lattice
            .linear_form(chi)
            .expect("rank checked")
            .substitute(&self.ambient, &[])
            .expect("torus variables present")
    }

    /// The linear form of a character in the torus point ring.
    fn point_form(&self, chi: &Character) -> IntPolynomial {
        self.lattice.linear_form(chi).expect("rank checked")
    }

    /// The defining relation: the product of `h + l(chi_j)` over all weights,
    /// monic of degree `n+1` in `h`.
    pub fn relation(&self) -> IntPolynomial {
        let mut product = IntPolynomial::one(&self.ambient);
        for chi in &self.weights {
            let factor = self.hyperplane().try_add(&self.form(chi)).expect("ambient");
            product = product.try_mul(&factor).expect("ambient");
        }
        product
    }

    /// `Z[t.., h]` modulo the defining relation, reduced by division in `h`.
    pub fn presentation(&self) -> RingPresentation<BigInt> {
        RingPresentation::new(
            &self.ambient,
            vec![self.relation()],
            Strategy::MonicInVariable("h".into()),
        )
        .expect("relation is homogeneous and monic in h")
    }

    /// Rank of the ring as a module over the point ring, which is `n + 1`.
    /// Verified structurally: `1, h, .., h^n` are distinct normal forms and
    /// the relation reduces to zero.
    pub fn module_rank(&self) -> Result<usize> {
        let presentation = self.presentation();
        let h = self.hyperplane();
        let mut seen = Vec::new();
        for k in 0..=self.dim() as u32 {
            let nf = presentation.normal_form(&h.pow(k))?;
            if nf != h.pow(k) {
                return Err(Error::VerificationFailed(format!(
                    "h^{k} is not its own normal form"
                )));
            }
            if seen.contains(&nf) {
                return Err(Error::VerificationFailed(format!(
                    "h^{k} collides with a lower power"
                )));
            }
            seen.push(nf);
        }
        if !presentation.normal_form(&self.relation())?.is_zero() {
            return Err(Error::VerificationFailed(
                "defining relation does not reduce to zero".into(),
            ));
        }
        Ok(self.dim() + 1)
    }

    pub fn require_distinct(&self) -> Result<()> {
        for i in 0..self.weights.len() {
            for j in i + 1..self.weights.len() {
                if self.weights[i] == self.weights[j] {
                    return Err(Error::RepeatedWeights);
                }
            }
        }
        Ok(())
    }

    fn check_index(&self, r: usize) -> Result<()> {
        if r >= self.weights.len() {
            return Err(Error::IndexOutOfRange {
                index: r,
                limit: self.weights.len(),
            });
        }
        Ok(())
    }

    /// Product of the relative weights at the `r`-th fixed point; nonzero and
    /// homogeneous of degree `n` exactly when the weights are distinct.
    pub fn euler_class(&self, r: usize) -> Result<IntPolynomial> {
        self.require_distinct()?;
        self.check_index(r)?;
        let base = self.point_form(&self.weights[r]);
        let mut product = IntPolynomial::one(self.point_ambient());
        for (s, chi) in self.weights.iter().enumerate() {
            if s == r {
                continue;
            }
            let factor = self.point_form(chi).try_sub(&base).expect("ambient");
            product = product.try_mul(&factor).expect("ambient");
        }
        Ok(product)
    }

    /// Restriction to the `r`-th fixed point: substitute `h -> -l(chi_r)`.
    pub fn restrict_to_fixed(&self, class: &IntPolynomial, r: usize) -> Result<IntPolynomial> {
        self.require_distinct()?;
        self.check_index(r)?;
        let image = self.point_form(&self.weights[r]).neg();
        class.substitute(self.point_ambient(), &[("h", image)])
    }

    /// Pushforward from the `r`-th fixed point: multiply by the product of
    /// `h + l(chi_s)` over `s != r`, reduced in the presentation.
    pub fn pushforward_from_fixed(
        &self,
        class: &IntPolynomial,
        r: usize,
    ) -> Result<IntPolynomial> {
        self.require_distinct()?;
        self.check_index(r)?;
        if class.ambient() != self.point_ambient() {
            return Err(Error::AmbientMismatch);
        }
        let lifted = class.substitute(&self.ambient, &[])?;
        let mut product = lifted;
        for (s, chi) in self.weights.iter().enumerate() {
            if s == r {
                continue;
            }
            let factor = self.hyperplane().try_add(&self.form(chi)).expect("ambient");
            product = product.try_mul(&factor).expect("ambient");
        }
        self.presentation().normal_form(&product)
    }

    /// The table of fixed-point data.
    pub fn fixed_points(&self) -> Result<Vec<FixedPointDatum>> {
        self.require_distinct()?;
        (0..self.weights.len())
            .map(|r| {
                Ok(FixedPointDatum {
                    index: r,
                    restriction: self.point_form(&self.weights[r]).neg(),
                    euler: self.euler_class(r)?,
                })
            })
            .collect()
    }

    /// First Chern class of `O(m)` twisted by a character: `m*h + l(chi)`.
    pub fn line_bundle_class(&self, m: i64, chi: &Character) -> Result<IntPolynomial> {
        if chi.rank() != self.lattice.rank() {
            return Err(Error::LatticeMismatch);
        }
        let twisted = self.form(chi);
        self.hyperplane()
            .scale(&BigInt::from(m))
            .try_add(&twisted)
            .map_err(|_| Error::AmbientMismatch)
    }

    /// Pushforward to the point by localization: the sum over fixed points of
    /// restriction divided by the Euler class. The sum must clear its
    /// denominators exactly; anything else is reported as an error.
    pub fn integrate(&self, class: &IntPolynomial) -> Result<IntPolynomial> {
        self.require_distinct()?;
        if class.ambient() != &self.ambient {
            return Err(Error::AmbientMismatch);
        }
        let indices: Vec<usize> = (0..self.weights.len()).collect();
        let contributions: Vec<Result<LocalizedElement>> = par::map_collect(indices, |r| {
            let numerator = self.restrict_to_fixed(class, r)?;
            let base = self.point_form(&self.weights[r]);
            let denominators: Vec<IntPolynomial> = self
                .weights
                .iter()
                .enumerate()
                .filter(|&(s, _)| s != r)
                .map(|(_, chi)| self.point_form(chi).try_sub(&base).expect("ambient"))
                .collect();
            LocalizedElement::new(numerator, denominators)
        });
        let mut total = LocalizedElement::from_polynomial(IntPolynomial::zero(self.point_ambient()));
        for c in contributions {
            total = total.try_add(&c?)?;
        }
        total.into_polynomial()
    }
}

/// A fraction whose denominator is kept as a multiset of degree-1 forms.
/// Factors are cancelled only when the division is exact; the denominator is
/// never expanded into a polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalizedElement {
    numerator: IntPolynomial,
    denominators: Vec<IntPolynomial>,
}

impl LocalizedElement {
    pub fn new(numerator: IntPolynomial, denominators: Vec<IntPolynomial>) -> Result<Self> {
        for d in &denominators {
            if d.is_zero() {
                return Err(Error::NonClearingDenominator(
                    "zero denominator form".into(),
                ));
            }
            if d.ambient() != numerator.ambient() {
                return Err(Error::AmbientMismatch);
            }
            if !matches!(d.weighted_degree(), crate::poly::Homogeneity::Homogeneous(1)) {
                return Err(Error::NonClearingDenominator(format!(
                    "denominator `{d}` is not a degree-1 form"
                )));
            }
        }
        let mut element = LocalizedElement {
            numerator,
            denominators,
        };
        element.reduce();
        Ok(element)
    }

    pub fn from_polynomial(p: IntPolynomial) -> Self {
        LocalizedElement {
            numerator: p,
            denominators: Vec::new(),
        }
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denominators(&self) -> &[IntPolynomial] {
        &self.denominators
    }

    /// Cancel denominator forms that divide the numerator exactly.
    fn reduce(&mut self) {
        if self.numerator.is_zero() {
            self.denominators.clear();
            return;
        }
        let mut remaining = Vec::with_capacity(self.denominators.len());
        for d in std::mem::take(&mut self.denominators) {
            match self.numerator.try_exact_div(&d) {
                Some(q) => self.numerator = q,
                None => remaining.push(d),
            }
        }
        self.denominators = remaining;
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.numerator.ambient() != other.numerator.ambient() {
            return Err(Error::AmbientMismatch);
        }
        let mut left = self.numerator.clone();
        for d in &other.denominators {
            left = left.try_mul(d)?;
        }
        let mut right = other.numerator.clone();
        for d in &self.denominators {
            right = right.try_mul(d)?;
        }
        let mut denominators = self.denominators.clone();
        denominators.extend(other.denominators.iter().cloned());
        LocalizedElement::new(left.try_add(&right)?, denominators)
    }

    /// The cleared polynomial; errors when denominators survive reduction.
    pub fn into_polynomial(mut self) -> Result<IntPolynomial> {
        self.reduce();
        if self.denominators.is_empty() {
            Ok(self.numerator)
        } else {
            let forms: Vec<String> = self.denominators.iter().map(|d| d.to_string()).collect();
            Err(Error::NonClearingDenominator(format!(
                "`{}` / ({})",
                self.numerator,
                forms.join(")*(")
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p1(weights: &[i64]) -> ProjectiveAction {
        ProjectiveAction::diagonal(weights).unwrap()
    }

    #[test]
    fn presentation_examples() {
        // trivial action on P^2: Z[h, t]/(h^3)
        let a = p1(&[0, 0, 0]);
        assert_eq!(a.presentation().to_string(), "Z[h, t]/(h^3)");
        // weights (0, 1): relation h^2 + h t
        let a = p1(&[0, 1]);
        assert_eq!(a.presentation().to_string(), "Z[h, t]/(h^2 + h*t)");
    }

    #[test]
    fn relation_coefficients_are_elementary_symmetric_in_the_weights() {
        // h^2 + (a0 + a1) t h + a0 a1 t^2 over a grid of weight pairs
        for a0 in -3..=3i64 {
            for a1 in -3..=3i64 {
                let action = p1(&[a0, a1]);
                let ambient = action.ambient().clone();
                let h = IntPolynomial::var(&ambient, "h").unwrap();
                let t = IntPolynomial::var(&ambient, "t").unwrap();
                let expected = h
                    .pow(2)
                    .try_add(&h.try_mul(&t).unwrap().scale(&BigInt::from(a0 + a1)))
                    .unwrap()
                    .try_add(&t.pow(2).scale(&BigInt::from(a0 * a1)))
                    .unwrap();
                assert_eq!(action.relation(), expected, "weights ({a0},{a1})");
            }
        }
    }

    #[test]
    fn module_rank_matches_dimension_plus_one() {
        assert_eq!(p1(&[0, 1, 2]).module_rank().unwrap(), 3);
        assert_eq!(p1(&[5]).module_rank().unwrap(), 1);
        assert_eq!(p1(&[0, 1]).module_rank().unwrap(), 2);
    }

    #[test]
    fn restriction_examples() {
        let action = p1(&[0, 1]);
        let h = IntPolynomial::var(action.ambient(), "h").unwrap();
        let t_point = IntPolynomial::var(action.point_ambient(), "t").unwrap();
        // restrict h at r=1: h -> -a1 t = -t
        assert_eq!(action.restrict_to_fixed(&h, 1).unwrap(), t_point.neg());
        // constants restrict to themselves
        let one = IntPolynomial::one(action.ambient());
        assert!(action.restrict_to_fixed(&one, 0).unwrap().is_one());
    }

    #[test]
    fn pushforward_examples() {
        // P^1, weights (a0, a1), r=0: 1 maps to h + a1 t
        let action = p1(&[2, 5]);
        let one = IntPolynomial::one(action.point_ambient());
        let image = action.pushforward_from_fixed(&one, 0).unwrap();
        let h = IntPolynomial::var(action.ambient(), "h").unwrap();
        let t = IntPolynomial::var(action.ambient(), "t").unwrap();
        assert_eq!(image, h.try_add(&t.scale(&BigInt::from(5))).unwrap());
        // P^2, weights (0,1,2), r=0: (h + t)(h + 2t) = h^2 + 3 t h + 2 t^2
        let action = p1(&[0, 1, 2]);
        let one = IntPolynomial::one(action.point_ambient());
        let image = action.pushforward_from_fixed(&one, 0).unwrap();
        let h = IntPolynomial::var(action.ambient(), "h").unwrap();
        let t = IntPolynomial::var(action.ambient(), "t").unwrap();
        let expected = h
            .pow(2)
            .try_add(&h.try_mul(&t).unwrap().scale(&BigInt::from(3)))
            .unwrap()
            .try_add(&t.pow(2).scale(&BigInt::from(2)))
            .unwrap();
        assert_eq!(image, expected);
        // zero pushes to zero
        let zero = IntPolynomial::zero(action.point_ambient());
        assert!(action.pushforward_from_fixed(&zero, 1).unwrap().is_zero());
    }

    #[test]
    fn euler_class_examples() {
        let action = p1(&[0, 1]);
        let t = IntPolynomial::var(action.point_ambient(), "t").unwrap();
        assert_eq!(action.euler_class(0).unwrap(), t);
        assert_eq!(action.euler_class(1).unwrap(), t.neg());
        let action = p1(&[0, 1, 2]);
        assert_eq!(action.euler_class(1).unwrap(), t.pow(2).neg());
        // self-intersection: restriction of the pushforward is the Euler class
        let action = p1(&[-1, 2]);
        let one = IntPolynomial::one(action.point_ambient());
        let push = action.pushforward_from_fixed(&one, 0).unwrap();
        let back = action.restrict_to_fixed(&push, 0).unwrap();
        assert_eq!(back, action.euler_class(0).unwrap());
    }

    #[test]
    fn repeated_weights_are_rejected() {
        let action = p1(&[1, 2, 2]);
        let h = IntPolynomial::var(action.ambient(), "h").unwrap();
        assert_eq!(action.euler_class(0), Err(Error::RepeatedWeights));
        assert_eq!(action.restrict_to_fixed(&h, 0), Err(Error::RepeatedWeights));
        assert_eq!(action.integrate(&h), Err(Error::RepeatedWeights));
        // the presentation itself is still available
        assert_eq!(action.presentation().to_string(), "Z[h, t]/(h^3 + 5*h^2*t + 8*h*t^2 + 4*t^3)");
    }

    #[test]
    fn localization_on_p2() {
        // weights (0,1,2), h^2 integrates to 1
        let action = p1(&[0, 1, 2]);
        let h = IntPolynomial::var(action.ambient(), "h").unwrap();
        let result = action.integrate(&h.pow(2)).unwrap();
        assert!(result.is_one());
        // h integrates to 0 on P^2
        assert!(action.integrate(&h).unwrap().is_zero());
        assert!(action.integrate(&IntPolynomial::one(action.ambient())).unwrap().is_zero());
    }

    #[test]
    fn localization_on_p1() {
        let action = p1(&[0, 1]);
        let h = IntPolynomial::var(action.ambient(), "h").unwrap();
        assert!(action
            .integrate(&IntPolynomial::one(action.ambient()))
            .unwrap()
            .is_zero());
        assert!(action.integrate(&h).unwrap().is_one());
        // intermediate rationals appear for weights (-1, 1) but the sum clears
        let sym = p1(&[-1, 1]);
        let h = IntPolynomial::var(sym.ambient(), "h").unwrap();
        assert!(sym.integrate(&h).unwrap().is_one());
    }

    #[test]
    fn localization_degree_drop() {
        // deg alpha - n: integrating h^3 on P^2 gives a degree-1 polynomial
        let action = p1(&[0, 1, 2]);
        let h = IntPolynomial::var(action.ambient(), "h").unwrap();
        let t = IntPolynomial::var(action.point_ambient(), "t").unwrap();
        let result = action.integrate(&h.pow(3)).unwrap();
        // h^3 = -3t h^2 - 2t^2 h modulo the relation, so the integral is -3t
        assert_eq!(result, t.scale(&BigInt::from(-3)));
    }

    #[test]
    fn line_bundle_classes() {
        let action = p1(&[0, 1]);
        let h = IntPolynomial::var(action.ambient(), "h").unwrap();
        let t = IntPolynomial::var(action.ambient(), "t").unwrap();
        assert_eq!(
            action.line_bundle_class(1, &Character::zero(1)).unwrap(),
            h
        );
        assert_eq!(
            action.line_bundle_class(0, &Character::new(vec![4])).unwrap(),
            t.scale(&BigInt::from(4))
        );
        assert_eq!(
            action.line_bundle_class(2, &Character::new(vec![-1])).unwrap(),
            h.scale(&BigInt::from(2)).try_sub(&t).unwrap()
        );
    }

    #[test]
    fn localized_arithmetic_keeps_multisets() {
        let point = CharacterLattice::new(1).unwrap();
        let t = IntPolynomial::var(point.ambient(), "t").unwrap();
        // t / (2t) does not cancel over the integers
        let half = LocalizedElement::new(t.clone(), vec![t.scale(&BigInt::from(2))]).unwrap();
        assert_eq!(half.denominators().len(), 1);
        // but 1/2 + 1/2 = 1 after combining
        let sum = half.try_add(&half).unwrap();
        assert!(sum.into_polynomial().unwrap().is_one());
        // a genuinely non-clearing value reports an error
        let third = LocalizedElement::new(t.clone(), vec![t.scale(&BigInt::from(3))]).unwrap();
        assert!(matches!(
            third.into_polynomial(),
            Err(Error::NonClearingDenominator(_))
        ));
    }
}
