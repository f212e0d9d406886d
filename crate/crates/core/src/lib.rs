//! Exact symbolic computation of equivariant Chow rings for split-torus and
//! GL/SL actions: graded polynomial arithmetic, quotient-ring presentations,
//! fixed-point localization on projective space, and the Chow rings of the
//! moduli stacks of elliptic curves.

pub mod ambient;
pub mod chars;
pub mod coeff;
pub mod error;
pub mod graded;
pub mod groebner;
pub mod json;
pub mod linalg;
pub mod moduli;
pub mod monomial;
mod par;
pub mod parse;
pub mod point;
pub mod poly;
pub mod presentation;
pub mod projective;
pub mod quotient;
pub mod symmetric;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use ambient::{Ambient, Variable};
pub use chars::{Character, CharacterLattice, Representation};
pub use coeff::{Coeff, Domain};
pub use error::{Error, Result};
pub use graded::{monomials_of_degree, GradedAbelianGroup};
pub use moduli::{m11_chow, m11bar_chow, picard_m11, ModuliReport};
pub use monomial::Monomial;
pub use parse::parse_polynomial;
pub use point::{point_ring, restrict_to_torus, weyl_image_check, GroupSpec};
pub use poly::{GradedPolynomial, Homogeneity, IntPolynomial, RatPolynomial};
pub use presentation::{AnyPresentation, RingPresentation, Strategy};
pub use projective::{FixedPointDatum, LocalizedElement, ProjectiveAction};
pub use quotient::{
    chi_class, excise_by_classes, hypersurface_class, naive_comparison_122,
    quotient_presentation, NaiveComparisonReport, QuotientScenario, RemovedLocus,
};
