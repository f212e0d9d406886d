//! Graded ring presentations: a polynomial ring, a homogeneous relation ideal,
//! and a reduction strategy yielding canonical representatives.

use crate::ambient::Ambient;
use crate::coeff::{Coeff, Domain};
use crate::error::{Error, Result};
use crate::groebner;
use crate::monomial::Monomial;
use crate::poly::GradedPolynomial;
use num_bigint::BigInt;
use num_rational::BigRational;
use std::fmt;
use std::sync::Arc;

/// How normal forms modulo the relation ideal are computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Strategy {
    /// No relations: the free graded polynomial ring.
    None,
    /// Every relation is a single term; reduction is per-monomial coefficient
    /// reduction modulo the gcd of the coefficients of the dividing relations.
    PrincipalUnivariate,
    /// One relation, monic in the named variable; reduction is division.
    MonicInVariable(String),
    /// Rational coefficients; reduction by a reduced Groebner basis.
    GroebnerRational,
}

impl Strategy {
    pub fn label(&self) -> String {
        match self {
            Strategy::None => "none".into(),
            Strategy::PrincipalUnivariate => "principal-univariate".into(),
            Strategy::MonicInVariable(v) => format!("monic-in-variable({v})"),
            Strategy::GroebnerRational => "groebner-rational".into(),
        }
    }
}

/// A graded ring presented as polynomial generators modulo homogeneous
/// relations. Immutable after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct RingPresentation<C: Coeff> {
    ambient: Arc<Ambient>,
    relations: Vec<GradedPolynomial<C>>,
    strategy: Strategy,
    reduced_basis: Option<Vec<GradedPolynomial<C>>>,
}

impl<C: Coeff> RingPresentation<C> {
    /// The free graded polynomial ring on `ambient`.
    pub fn free(ambient: &Arc<Ambient>) -> Self {
        RingPresentation {
            ambient: Arc::clone(ambient),
            relations: Vec::new(),
            strategy: Strategy::None,
            reduced_basis: None,
        }
    }

    /// Validates the relations against the strategy. Zero relations are
    /// dropped; all relations must be homogeneous for the grading.
    pub fn new(
        ambient: &Arc<Ambient>,
        relations: Vec<GradedPolynomial<C>>,
        strategy: Strategy,
    ) -> Result<Self> {
        let relations: Vec<GradedPolynomial<C>> =
            relations.into_iter().filter(|r| !r.is_zero()).collect();
        for r in &relations {
            if r.ambient() != ambient {
                return Err(Error::AmbientMismatch);
            }
            if !r.is_homogeneous() {
                return Err(Error::InhomogeneousRelation(r.to_string()));
            }
        }
        match &strategy {
            Strategy::None => {
                if !relations.is_empty() {
                    return Err(Error::StrategyMismatch(
                        "strategy `none` admits no relations".into(),
                    ));
                }
            }
            Strategy::PrincipalUnivariate => {
                for r in &relations {
                    if r.num_terms() != 1 {
                        return Err(Error::StrategyMismatch(format!(
                            "`{r}` is not a single term"
                        )));
                    }
                }
            }
            Strategy::MonicInVariable(v) => {
                let index = ambient
                    .index_of(v)
                    .ok_or_else(|| Error::UndeclaredVariable(v.clone()))?;
                if relations.len() != 1 {
                    return Err(Error::StrategyMismatch(format!(
                        "monic-in-variable reduction needs exactly one relation, got {}",
                        relations.len()
                    )));
                }
                let r = &relations[0];
                let d = r.degree_in_var(index);
                let lead: Vec<_> = r
                    .terms()
                    .filter(|(m, _)| m.exponent(index) == d)
                    .collect();
                let monic = d > 0
                    && lead.len() == 1
                    && lead[0].0 == &Monomial::var_pow(index, d)
                    && lead[0].1.is_one();
                if !monic {
                    return Err(Error::StrategyMismatch(format!(
                        "`{r}` is not monic in `{v}`"
                    )));
                }
            }
            Strategy::GroebnerRational => {
                if C::DOMAIN != Domain::Rationals {
                    return Err(Error::StrategyMismatch(
                        "groebner-rational requires rational coefficients".into(),
                    ));
                }
            }
        }
        let mut presentation = RingPresentation {
            ambient: Arc::clone(ambient),
            relations,
            strategy,
            reduced_basis: None,
        };
        if presentation.strategy == Strategy::GroebnerRational {
            presentation.compute_basis();
        }
        Ok(presentation)
    }

    fn compute_basis(&mut self) {
        // the domain is rational here, guaranteed by validation
        let rat_relations: Vec<GradedPolynomial<BigRational>> = self
            .relations
            .iter()
            .map(|r| r.map_coeff(Coeff::to_rational))
            .collect();
        let basis = groebner::reduced_groebner_basis(&rat_relations);
        self.reduced_basis = Some(
            basis
                .into_iter()
                .map(|p| p.map_coeff(|c| C::from_rational(c).expect("rational domain")))
                .collect(),
        );
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.ambient
    }

    pub fn relations(&self) -> &[GradedPolynomial<C>] {
        &self.relations
    }

    pub fn strategy(&self) -> &Strategy {
        &self.strategy
    }

    pub fn coefficient_domain(&self) -> Domain {
        C::DOMAIN
    }

    pub fn is_free(&self) -> bool {
        self.relations.is_empty()
    }

    /// Canonical representative of `p` modulo the relation ideal.
    pub fn normal_form(&self, p: &GradedPolynomial<C>) -> Result<GradedPolynomial<C>> {
        if p.ambient() != &self.ambient {
            return Err(Error::AmbientMismatch);
        }
        match &self.strategy {
            Strategy::None => Ok(p.clone()),
            Strategy::PrincipalUnivariate => Ok(self.principal_normal_form(p)),
            Strategy::MonicInVariable(v) => {
                let index = self.ambient.index_of(v).expect("validated");
                Ok(self.monic_normal_form(p, index))
            }
            Strategy::GroebnerRational => {
                let basis = self.reduced_basis.as_ref().expect("computed at construction");
                let rat = p.map_coeff(Coeff::to_rational);
                let rat_basis: Vec<GradedPolynomial<BigRational>> = basis
                    .iter()
                    .map(|g| g.map_coeff(Coeff::to_rational))
                    .collect();
                let reduced = groebner::reduce_full(&rat, &rat_basis);
                Ok(reduced.map_coeff(|c| C::from_rational(c).expect("rational domain")))
            }
        }
    }

    /// Per-term reduction: on monomial `m`, the ideal contributes exactly the
    /// multiples of gcd{ c_r : monomial(r) divides m }.
    fn principal_normal_form(&self, p: &GradedPolynomial<C>) -> GradedPolynomial<C> {
        let terms: Vec<(Monomial, C)> = p
            .terms()
            .map(|(m, c)| {
                let mut modulus = C::zero();
                for r in &self.relations {
                    let (rm, rc) = r.terms().next().expect("single term");
                    if rm.divides(m) {
                        modulus = modulus.content_gcd(rc);
                    }
                }
                (m.clone(), c.rem_canonical(&modulus))
            })
            .collect();
        GradedPolynomial::from_terms(&self.ambient, terms).expect("same ambient")
    }

    /// Division by the unique relation, univariate in the distinguished
    /// variable: the remainder has strictly smaller degree in it.
    fn monic_normal_form(&self, p: &GradedPolynomial<C>, index: usize) -> GradedPolynomial<C> {
        let relation = &self.relations[0];
        let d = relation.degree_in_var(index);
        let mut work = p.clone();
        loop {
            let k = work.degree_in_var(index);
            if k < d || work.is_zero() {
                return work;
            }
            // q = (coefficient of v^k in work) * v^(k-d)
            let q_terms: Vec<(Monomial, C)> = work
                .terms()
                .filter(|(m, _)| m.exponent(index) == k)
                .map(|(m, c)| {
                    let reduced = m
                        .try_div(&Monomial::var_pow(index, d))
                        .expect("exponent k >= d");
                    (reduced, c.clone())
                })
                .collect();
            let q = GradedPolynomial::from_terms(&self.ambient, q_terms).expect("same ambient");
            work = work
                .try_sub(&q.try_mul(relation).expect("same ambient"))
                .expect("same ambient");
        }
    }
}

impl<C: Coeff> fmt::Display for RingPresentation<C> {
    /// `Z[t]/(12*t)`; free rings render without the quotient part.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", C::DOMAIN.symbol())?;
        for (i, v) in self.ambient.vars().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", v.name)?;
        }
        write!(f, "]")?;
        if !self.relations.is_empty() {
            write!(f, "/(")?;
            for (i, r) in self.relations.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{r}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Runtime-typed presentation, for JSON ingestion where the coefficient
/// domain is data.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyPresentation {
    Integers(RingPresentation<BigInt>),
    Rationals(RingPresentation<BigRational>),
}

impl AnyPresentation {
    pub fn domain(&self) -> Domain {
        match self {
            AnyPresentation::Integers(_) => Domain::Integers,
            AnyPresentation::Rationals(_) => Domain::Rationals,
        }
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        match self {
            AnyPresentation::Integers(p) => p.ambient(),
            AnyPresentation::Rationals(p) => p.ambient(),
        }
    }
}

impl fmt::Display for AnyPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyPresentation::Integers(p) => p.fmt(f),
            AnyPresentation::Rationals(p) => p.fmt(f),
        }
    }
}
