//! Graded pieces of presented rings: monomial bases, relation-multiple
//! matrices, and abelian-group invariants via Smith normal form.

use crate::ambient::Ambient;
use crate::coeff::Coeff;
use crate::linalg::{self, IntMatrix};
use crate::monomial::Monomial;
use crate::par;
use crate::poly::GradedPolynomial;
use crate::presentation::RingPresentation;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use std::fmt;
use std::sync::Arc;

/// One graded piece as a finitely generated abelian group: free rank plus
/// torsion coefficients in divisibility order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedAbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl GradedAbelianGroup {
    pub fn free(rank: usize) -> Self {
        GradedAbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for GradedAbelianGroup {
    /// `0`, `Z`, `Z^2`, `Z/12`, `Z + Z/2 + Z/4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut first = true;
        if self.free_rank == 1 {
            write!(f, "Z")?;
            first = false;
        } else if self.free_rank > 1 {
            write!(f, "Z^{}", self.free_rank)?;
            first = false;
        }
        for d in &self.torsion {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "Z/{d}")?;
        }
        Ok(())
    }
}

/// All monomials of the given weighted degree, in a deterministic order
/// (earlier variables exhausted from the highest exponent down).
pub fn monomials_of_degree(ambient: &Arc<Ambient>, degree: u64) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut stack: Vec<(usize, u32)> = Vec::new();
    fn rec(
        ambient: &Ambient,
        var: usize,
        remaining: u64,
        stack: &mut Vec<(usize, u32)>,
        out: &mut Vec<Monomial>,
    ) {
        if remaining == 0 {
            out.push(Monomial::from_pairs(stack.iter().copied()));
            return;
        }
        if var >= ambient.len() {
            return;
        }
        let step = ambient.var(var).degree as u64;
        let max_exp = (remaining / step) as u32;
        for exp in (0..=max_exp).rev() {
            if exp > 0 {
                stack.push((var, exp));
            }
            rec(ambient, var + 1, remaining - exp as u64 * step, stack, out);
            if exp > 0 {
                stack.pop();
            }
        }
    }
    rec(ambient, 0, degree, &mut stack, &mut out);
    out
}

/// Columns of the degree-`d` relation matrix: every monomial multiple of every
/// relation that lands in degree `d`, expanded in the degree-`d` basis.
fn relation_columns<C: Coeff>(
    presentation: &RingPresentation<C>,
    degree: u64,
    basis: &[Monomial],
) -> Vec<Vec<C>> {
    let ambient = presentation.ambient();
    let mut jobs: Vec<(GradedPolynomial<C>, Monomial)> = Vec::new();
    for relation in presentation.relations() {
        let rel_degree = match relation.weighted_degree() {
            crate::poly::Homogeneity::Homogeneous(d) => d,
            _ => continue,
        };
        if rel_degree > degree {
            continue;
        }
        for multiplier in monomials_of_degree(ambient, degree - rel_degree) {
            jobs.push((relation.clone(), multiplier));
        }
    }
    let basis_owned: Vec<Monomial> = basis.to_vec();
    par::map_collect(jobs, move |(relation, multiplier)| {
        let product = relation.mul_term(&multiplier, &C::one());
        basis_owned
            .iter()
            .map(|m| product.coefficient(m))
            .collect::<Vec<C>>()
    })
}

impl RingPresentation<BigInt> {
    /// The degree-`d` piece as a cokernel: Smith normal form of the integer
    /// matrix of relation multiples expanded in the monomial basis.
    pub fn graded_piece(&self, degree: u64) -> GradedAbelianGroup {
        let basis = monomials_of_degree(self.ambient(), degree);
        if basis.is_empty() {
            return GradedAbelianGroup::free(0);
        }
        let columns = relation_columns(self, degree, &basis);
        if columns.is_empty() {
            return GradedAbelianGroup::free(basis.len());
        }
        let matrix = IntMatrix::from_columns(basis.len(), &columns);
        let snf = linalg::smith_normal_form(&matrix);
        let torsion: Vec<BigInt> = snf
            .diag
            .iter()
            .filter(|d| **d > BigInt::from(1))
            .cloned()
            .collect();
        GradedAbelianGroup {
            free_rank: basis.len() - snf.rank,
            torsion,
        }
    }

    /// Does `class` lie in the subgroup of the degree-`d` piece generated by
    /// `generators` (together with the relations)? Both sides are expanded in
    /// the degree-`d` monomial basis; membership is decided by Smith normal
    /// form of the combined matrix.
    pub fn in_graded_subgroup(
        &self,
        degree: u64,
        generators: &[GradedPolynomial<BigInt>],
        class: &GradedPolynomial<BigInt>,
    ) -> bool {
        let basis = monomials_of_degree(self.ambient(), degree);
        let mut columns = relation_columns(self, degree, &basis);
        for g in generators {
            columns.push(basis.iter().map(|m| g.coefficient(m)).collect());
        }
        let matrix = IntMatrix::from_columns(basis.len(), &columns);
        let target: Vec<BigInt> = basis.iter().map(|m| class.coefficient(m)).collect();
        linalg::in_image(&matrix, &target)
    }
}

impl RingPresentation<BigRational> {
    /// Dimension of the degree-`d` piece as a rational vector space, by exact
    /// rank of the relation-multiple matrix.
    pub fn graded_dimension(&self, degree: u64) -> usize {
        let basis = monomials_of_degree(self.ambient(), degree);
        if basis.is_empty() {
            return 0;
        }
        let columns = relation_columns(self, degree, &basis);
        if columns.is_empty() {
            return basis.len();
        }
        // rank of the transpose equals rank of the matrix
        let rank = linalg::rational_rank(&columns);
        basis.len() - rank
    }

    /// The same dimension through normal forms: the count of degree-`d`
    /// monomials that are their own normal form (the standard monomials).
    pub fn graded_dimension_by_normal_forms(&self, degree: u64) -> crate::error::Result<usize> {
        let mut count = 0;
        for m in monomials_of_degree(self.ambient(), degree) {
            let p = GradedPolynomial::term(self.ambient(), m, <BigRational as One>::one());
            if self.normal_form(&p)? == p {
                count += 1;
            }
        }
        Ok(count)
    }
}
