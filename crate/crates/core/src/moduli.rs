//! The Chow rings of the moduli stacks of elliptic curves, computed by
//! excising the discriminant locus (respectively the locus of cuspidal
//! cubics) from the space of Weierstrass coefficients with its rank-1 torus
//! action.

use crate::ambient::Ambient;
use crate::chars::CharacterLattice;
use crate::error::{Error, Result};
use crate::graded::GradedAbelianGroup;
use crate::monomial::Monomial;
use crate::poly::{Homogeneity, IntPolynomial};
use crate::presentation::RingPresentation;
use crate::quotient::{excise_by_classes, hypersurface_class};
use num_bigint::BigInt;
use std::sync::Arc;

/// One named verification performed while assembling a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub detail: String,
    pub passed: bool,
}

/// The output of a moduli computation: the presentation, the checks that
/// gatekeep it, and its graded pieces.
#[derive(Debug, Clone)]
pub struct ModuliReport {
    /// The identity this report reproduces.
    pub identity: String,
    pub presentation: RingPresentation<BigInt>,
    pub checks: Vec<Check>,
    pub graded: Vec<(u64, GradedAbelianGroup)>,
}

/// Degrees of the Weierstrass coefficients under the normalized rank-1 torus
/// action (the sign convention makes semi-invariant weights positive).
pub const WEIERSTRASS_WEIGHTS: [u32; 3] = [2, 4, 6];

/// The coefficient ring of the Weierstrass family: `Z[e1, e2, e3]` with
/// degrees (2, 4, 6).
pub fn weierstrass_ambient() -> Arc<Ambient> {
    Ambient::new(
        WEIERSTRASS_WEIGHTS
            .iter()
            .enumerate()
            .map(|(i, &w)| (format!("e{}", i + 1), w)),
    )
    .expect("distinct names, positive degrees")
}

/// The discriminant of the depressed cubic, term by term:
/// `4 e2^3 + 27 e3^2 - 18 e1 e2 e3 - e1^2 e2^2 + 4 e1^3 e3`.
pub fn discriminant_cubic() -> IntPolynomial {
    let ambient = weierstrass_ambient();
    let term = |coeff: i64, exps: [u32; 3]| {
        (
            Monomial::from_pairs((0..3).map(|i| (i, exps[i]))),
            BigInt::from(coeff),
        )
    };
    IntPolynomial::from_terms(
        &ambient,
        [
            term(4, [0, 3, 0]),
            term(27, [0, 0, 2]),
            term(-18, [1, 1, 1]),
            term(-1, [2, 2, 0]),
            term(4, [3, 0, 1]),
        ],
    )
    .expect("declared variables")
}

fn run_checks(checks: &[Check]) -> Result<()> {
    for check in checks {
        if !check.passed {
            return Err(Error::VerificationFailed(format!(
                "{}: {}",
                check.name, check.detail
            )));
        }
    }
    Ok(())
}

fn graded_range(presentation: &RingPresentation<BigInt>, max: u64) -> Vec<(u64, GradedAbelianGroup)> {
    (0..=max).map(|d| (d, presentation.graded_piece(d))).collect()
}

/// The Chow ring of the moduli stack of smooth elliptic curves:
/// `Z[t]/(12*t)`. The discriminant is verified to be weighted-homogeneous of
/// degree 12 before its hypersurface class is excised.
pub fn m11_chow() -> Result<ModuliReport> {
    let discriminant = discriminant_cubic();
    let mut checks = Vec::new();

    let degree = discriminant.weighted_degree();
    checks.push(Check {
        name: "discriminant-weighted-degree".into(),
        detail: format!("{degree:?} under coefficient weights (2, 4, 6)"),
        passed: degree == Homogeneity::Homogeneous(12),
    });

    let term_degrees: Vec<u64> = discriminant
        .terms()
        .map(|(m, _)| discriminant.ambient().monomial_degree(m))
        .collect();
    checks.push(Check {
        name: "discriminant-terms".into(),
        detail: format!(
            "{} monomials, individual degrees {:?}",
            term_degrees.len(),
            term_degrees
        ),
        passed: term_degrees.len() == 5 && term_degrees.iter().all(|&d| d == 12),
    });

    let weight = match degree {
        Homogeneity::Homogeneous(d) => d as i64,
        _ => 0,
    };
    let lattice = CharacterLattice::new(1)?;
    let class = hypersurface_class(&lattice, weight)?;
    checks.push(Check {
        name: "discriminant-locus-class".into(),
        detail: format!("[S] = {class}"),
        passed: class.to_string() == "12*t",
    });

    let base = RingPresentation::free(lattice.ambient());
    let presentation = excise_by_classes(&base, &[class])?;
    checks.push(Check {
        name: "presentation-golden".into(),
        detail: presentation.to_string(),
        passed: presentation.to_string() == "Z[t]/(12*t)",
    });

    run_checks(&checks)?;
    Ok(ModuliReport {
        identity: "A*(M_{1,1}) = Z[t]/(12*t)".into(),
        graded: graded_range(&presentation, 5),
        presentation,
        checks,
    })
}

/// The Chow ring of the compactified moduli stack:  `Z[t]/(24*t^2)`. The
/// removed locus is the image of the small diagonal, with equivariant class
/// `4*t^2`, under a degree-6 cover.
pub fn m11bar_chow() -> Result<ModuliReport> {
    let lattice = CharacterLattice::new(1)?;
    let t = IntPolynomial::var(lattice.ambient(), "t")?;
    let small_diagonal = t.pow(2).scale(&BigInt::from(4));
    let covering_degree = BigInt::from(6);
    let removed_class = small_diagonal.scale(&covering_degree);

    let mut checks = Vec::new();
    checks.push(Check {
        name: "small-diagonal-class".into(),
        detail: format!("{small_diagonal}, homogeneous: {:?}", small_diagonal.weighted_degree()),
        passed: small_diagonal.weighted_degree() == Homogeneity::Homogeneous(2),
    });
    checks.push(Check {
        name: "removed-locus-class".into(),
        detail: format!("6 * (4*t^2) = {removed_class}"),
        passed: removed_class.to_string() == "24*t^2",
    });

    let base = RingPresentation::free(lattice.ambient());
    let presentation = excise_by_classes(&base, &[removed_class])?;
    checks.push(Check {
        name: "presentation-golden".into(),
        detail: presentation.to_string(),
        passed: presentation.to_string() == "Z[t]/(24*t^2)",
    });

    run_checks(&checks)?;
    Ok(ModuliReport {
        identity: "A*(Mbar_{1,1}) = Z[t]/(24*t^2)".into(),
        graded: graded_range(&presentation, 5),
        presentation,
        checks,
    })
}

/// The functorial Picard group of the moduli stack of elliptic curves: the
/// degree-1 graded piece of `Z[t]/(12*t)`, computed through the Smith normal
/// form oracle. Must be `Z/12`.
pub fn picard_m11() -> Result<GradedAbelianGroup> {
    let report = m11_chow()?;
    let piece = report.presentation.graded_piece(1);
    let expected = GradedAbelianGroup {
        free_rank: 0,
        torsion: vec![BigInt::from(12)],
    };
    if piece != expected {
        return Err(Error::VerificationFailed(format!(
            "degree-1 piece is {piece}, expected Z/12"
        )));
    }
    Ok(piece)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discriminant_is_weighted_homogeneous_of_degree_12() {
        let f = discriminant_cubic();
        assert_eq!(f.weighted_degree(), Homogeneity::Homogeneous(12));
        assert_eq!(f.num_terms(), 5);
        for (m, _) in f.terms() {
            assert_eq!(f.ambient().monomial_degree(m), 12);
        }
        assert_eq!(
            f.to_string(),
            "4*e1^3*e3 - e1^2*e2^2 - 18*e1*e2*e3 + 4*e2^3 + 27*e3^2"
        );
    }

    #[test]
    fn smooth_locus_presentation() {
        let report = m11_chow().unwrap();
        assert_eq!(report.presentation.to_string(), "Z[t]/(12*t)");
        assert!(report.checks.iter().all(|c| c.passed));
        // degree 0 is Z, every positive degree is Z/12
        assert_eq!(report.graded[0].1, GradedAbelianGroup::free(1));
        for (d, piece) in &report.graded[1..] {
            assert_eq!(piece.to_string(), "Z/12", "degree {d}");
        }
    }

    #[test]
    fn compactified_presentation() {
        let report = m11bar_chow().unwrap();
        assert_eq!(report.presentation.to_string(), "Z[t]/(24*t^2)");
        assert_eq!(report.graded[0].1, GradedAbelianGroup::free(1));
        assert_eq!(report.graded[1].1, GradedAbelianGroup::free(1));
        for (d, piece) in &report.graded[2..] {
            assert_eq!(piece.to_string(), "Z/24", "degree {d}");
        }
    }

    #[test]
    fn picard_group() {
        let picard = picard_m11().unwrap();
        assert_eq!(picard.to_string(), "Z/12");
        assert_eq!(picard.free_rank, 0);
        // on the compactification the degree-1 piece is free
        let bar = m11bar_chow().unwrap();
        assert_eq!(bar.presentation.graded_piece(1), GradedAbelianGroup::free(1));
    }

    #[test]
    fn hodge_generator_spans_every_piece() {
        // multiplication by t maps each graded piece onto the next: the normal
        // form of t * (generator) is again the generator of the next piece
        let m11 = m11_chow().unwrap().presentation;
        let t = IntPolynomial::var(m11.ambient(), "t").unwrap();
        for d in 1..=5u32 {
            let nf = m11.normal_form(&t.pow(d)).unwrap();
            assert_eq!(nf, t.pow(d), "t^{d} generates degree {d}");
        }
        let bar = m11bar_chow().unwrap().presentation;
        for d in 1..=5u32 {
            let nf = bar.normal_form(&t.pow(d)).unwrap();
            assert_eq!(nf, t.pow(d));
        }
    }
}
