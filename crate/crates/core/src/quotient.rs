//! Chow rings of torus quotients of open subsets of representations: the
//! invariant-subspace ideal over the rationals, excision by explicit
//! equivariant classes over the integers, and the weights-(1,2,2) naive
//! comparison.

use crate::chars::{Character, CharacterLattice, Representation};
use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::graded::GradedAbelianGroup;
use crate::monomial::Monomial;
use crate::poly::{GradedPolynomial, IntPolynomial, RatPolynomial};
use crate::presentation::{RingPresentation, Strategy};
use num_bigint::BigInt;
use num_rational::BigRational;

/// An invariant linear subspace to remove, named either by the coordinate
/// indices it keeps or, when weights repeat, by the explicit multiset of
/// weights on the quotient `V/L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RemovedLocus {
    Coordinate { kept: Vec<usize> },
    QuotientWeights { weights: Vec<Character> },
}

impl RemovedLocus {
    pub fn origin() -> Self {
        RemovedLocus::Coordinate { kept: Vec::new() }
    }
}

/// A representation with removed invariant loci and/or explicit equivariant
/// fundamental classes for integral excision.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientScenario {
    pub representation: Representation,
    pub removed: Vec<RemovedLocus>,
    pub classes: Vec<IntPolynomial>,
}

impl QuotientScenario {
    pub fn new(
        representation: Representation,
        removed: Vec<RemovedLocus>,
        classes: Vec<IntPolynomial>,
    ) -> Result<Self> {
        for (i, locus) in removed.iter().enumerate() {
            match locus {
                RemovedLocus::Coordinate { kept } => {
                    for (j, &k) in kept.iter().enumerate() {
                        if k >= representation.dim() {
                            return Err(Error::InvalidScenario(format!(
                                "removed[{i}].kept[{j}]: index {k} out of range ({} coordinates)",
                                representation.dim()
                            )));
                        }
                        if kept[..j].contains(&k) {
                            return Err(Error::InvalidScenario(format!(
                                "removed[{i}].kept[{j}]: duplicate index {k}"
                            )));
                        }
                    }
                }
                RemovedLocus::QuotientWeights { weights } => {
                    for (j, chi) in weights.iter().enumerate() {
                        if chi.rank() != representation.lattice().rank() {
                            return Err(Error::InvalidScenario(format!(
                                "removed[{i}].quotient_weights[{j}]: expected rank {}, got {}",
                                representation.lattice().rank(),
                                chi.rank()
                            )));
                        }
                    }
                }
            }
        }
        for (i, class) in classes.iter().enumerate() {
            if class.ambient() != representation.lattice().ambient() {
                return Err(Error::InvalidScenario(format!(
                    "classes[{i}]: wrong ambient ring"
                )));
            }
            if !class.is_homogeneous() {
                return Err(Error::InvalidScenario(format!(
                    "classes[{i}]: `{class}` is not homogeneous"
                )));
            }
        }
        Ok(QuotientScenario {
            representation,
            removed,
            classes,
        })
    }
}

/// The class of an invariant linear subspace: the product of the linear forms
/// of the weights of `V/L`, homogeneous of degree `codim L`.
pub fn chi_class(locus: &RemovedLocus, representation: &Representation) -> Result<IntPolynomial> {
    let lattice = representation.lattice();
    let quotient_weights: Vec<Character> = match locus {
        RemovedLocus::Coordinate { kept } => {
            for &k in kept {
                if k >= representation.dim() {
                    return Err(Error::IndexOutOfRange {
                        index: k,
                        limit: representation.dim(),
                    });
                }
            }
            representation
                .characters()
                .iter()
                .enumerate()
                .filter(|(i, _)| !kept.contains(i))
                .map(|(_, chi)| chi.clone())
                .collect()
        }
        RemovedLocus::QuotientWeights { weights } => weights.clone(),
    };
    let mut product = IntPolynomial::one(lattice.ambient());
    for chi in &quotient_weights {
        product = product.try_mul(&lattice.linear_form(chi)?)?;
    }
    Ok(product)
}

/// The rational presentation of the quotient: the torus point ring modulo the
/// classes of the removed subspaces. Rank 1 reduces by the principal strategy,
/// higher rank through a Groebner basis. An empty removal list yields the free
/// ring.
pub fn quotient_presentation(scenario: &QuotientScenario) -> Result<RingPresentation<BigRational>> {
    let lattice = scenario.representation.lattice();
    let relations: Vec<RatPolynomial> = scenario
        .removed
        .iter()
        .map(|locus| chi_class(locus, &scenario.representation).map(|p| p.to_rational()))
        .collect::<Result<_>>()?;
    let strategy = if relations.iter().all(|r| r.is_zero()) {
        Strategy::None
    } else if lattice.rank() == 1 {
        Strategy::PrincipalUnivariate
    } else {
        Strategy::GroebnerRational
    };
    RingPresentation::new(lattice.ambient(), relations, strategy)
}

/// Append homogeneous classes to the relations of a presentation, picking the
/// least strategy that validates over the coefficient domain.
pub fn excise_by_classes<C: Coeff>(
    base: &RingPresentation<C>,
    classes: &[GradedPolynomial<C>],
) -> Result<RingPresentation<C>> {
    for class in classes {
        if class.ambient() != base.ambient() {
            return Err(Error::AmbientMismatch);
        }
        if !class.is_homogeneous() {
            return Err(Error::InhomogeneousRelation(class.to_string()));
        }
    }
    let mut relations: Vec<GradedPolynomial<C>> = base.relations().to_vec();
    relations.extend(classes.iter().cloned());
    let relations: Vec<GradedPolynomial<C>> =
        relations.into_iter().filter(|r| !r.is_zero()).collect();

    let strategy = if relations.is_empty() {
        Strategy::None
    } else if relations.iter().all(|r| r.num_terms() == 1) {
        Strategy::PrincipalUnivariate
    } else if C::DOMAIN == crate::coeff::Domain::Rationals {
        Strategy::GroebnerRational
    } else if relations.len() == 1 {
        // fall back to division when the single relation is monic in a variable
        let r = &relations[0];
        let ambient = base.ambient();
        let monic_var = (0..ambient.len()).find(|&i| {
            let d = r.degree_in_var(i);
            d > 0 && r.coefficient(&Monomial::var_pow(i, d)).is_one() && {
                r.terms().filter(|(m, _)| m.exponent(i) == d).count() == 1
            }
        });
        match monic_var {
            Some(i) => Strategy::MonicInVariable(ambient.name(i).to_string()),
            None => {
                return Err(Error::StrategyMismatch(
                    "no reduction strategy covers these integral relations".into(),
                ))
            }
        }
    } else {
        return Err(Error::StrategyMismatch(
            "no reduction strategy covers these integral relations".into(),
        ));
    };
    RingPresentation::new(base.ambient(), relations, strategy)
}

/// The equivariant fundamental class of the invariant hypersurface cut out by
/// a semi-invariant of weight `w` under a rank-1 torus: `w * t`. The weight
/// must already be positive under this crate's sign convention; a negative
/// value is reported, never silently negated.
pub fn hypersurface_class(lattice: &CharacterLattice, weight: i64) -> Result<IntPolynomial> {
    if lattice.rank() != 1 {
        return Err(Error::LatticeMismatch);
    }
    if weight <= 0 {
        return Err(Error::NonPositiveWeight(weight));
    }
    let t = IntPolynomial::var(lattice.ambient(), "t")?;
    Ok(t.scale(&BigInt::from(weight)))
}

/// The comparison of naive invariant-cycle classes with the equivariant ring
/// for the rank-1 action with weights (1, 2, 2) on three-space minus the
/// origin.
#[derive(Debug, Clone)]
pub struct NaiveComparisonReport {
    /// The statement this report certifies.
    pub identity: String,
    /// `Z[t]/(4*t^3)`.
    pub presentation: RingPresentation<BigInt>,
    /// Images of the naive generators: `[X] -> 1`, `p -> t`, `l -> 2t^2`.
    pub class_map: Vec<(String, IntPolynomial)>,
    /// The degree-2 graded piece (free of rank 1 on `t^2`).
    pub degree_two: GradedAbelianGroup,
    /// `p*p = t^2` in the equivariant ring.
    pub p_squared: IntPolynomial,
    /// Whether `t^2` lies in the subgroup generated by the image of `l`.
    pub p_squared_in_naive_image: bool,
}

/// Build the weights-(1,2,2) report: the equivariant ring has the extra class
/// `t^2` that the naive groups miss, so `p*p` has no integral naive preimage.
pub fn naive_comparison_122() -> Result<NaiveComparisonReport> {
    let representation = Representation::diagonal(&[1, 2, 2])?;
    let lattice = representation.lattice().clone();
    let chi = chi_class(&RemovedLocus::origin(), &representation)?;
    let t = IntPolynomial::var(lattice.ambient(), "t")?;
    // chi of the origin is 1*2*2 t^3
    let four_t3 = t.pow(3).scale(&BigInt::from(4));
    if chi != four_t3 {
        return Err(Error::VerificationFailed(
            "origin class of weights (1,2,2) is not 4*t^3".into(),
        ));
    }
    let base = RingPresentation::free(lattice.ambient());
    let presentation = excise_by_classes(&base, &[chi])?;

    let p_image = t.clone();
    let l_image = t.pow(2).scale(&BigInt::from(2));
    let p_squared = presentation.normal_form(&p_image.try_mul(&p_image)?)?;

    let degree_two = presentation.graded_piece(2);
    if degree_two != GradedAbelianGroup::free(1) {
        return Err(Error::VerificationFailed(
            "degree-2 piece of Z[t]/(4t^3) is not free of rank 1".into(),
        ));
    }
    let in_image =
        presentation.in_graded_subgroup(2, std::slice::from_ref(&l_image), &p_squared);
    Ok(NaiveComparisonReport {
        identity: "p*p = (1/2)*l is not integral: t^2 lies outside the image 2Z*t^2".into(),
        presentation,
        class_map: vec![
            ("[X]".into(), IntPolynomial::one(lattice.ambient())),
            ("p".into(), p_image),
            ("l".into(), l_image),
        ],
        degree_two,
        p_squared,
        p_squared_in_naive_image: in_image,
    })
}
