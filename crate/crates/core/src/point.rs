//! Presentations of the equivariant Chow ring of a point for tori and GL/SL,
//! and the restriction-to-torus comparison through elementary symmetric
//! polynomials.

use crate::ambient::Ambient;
use crate::chars::torus_var_names;
use crate::error::{Error, Result};
use crate::graded::monomials_of_degree;
use crate::linalg::rational_rank;
use crate::poly::IntPolynomial;
use crate::presentation::RingPresentation;
use crate::symmetric::elementary_symmetric;
use num_bigint::BigInt;
use num_rational::BigRational;
use std::fmt;
use std::sync::Arc;

/// The supported structure groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupSpec {
    Gm,
    Torus(usize),
    GL(usize),
    SL(usize),
}

impl GroupSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            GroupSpec::Gm => Ok(()),
            GroupSpec::Torus(n) | GroupSpec::GL(n) if n >= 1 => Ok(()),
            GroupSpec::SL(n) if n >= 2 => Ok(()),
            GroupSpec::SL(n) => Err(Error::InvalidScenario(format!(
                "SL({n}) requires n >= 2"
            ))),
            _ => Err(Error::InvalidScenario("group rank must be at least 1".into())),
        }
    }

    /// `Gm`, `T3`, `GL3`, `SL2`.
    pub fn parse(text: &str) -> Result<Self> {
        let spec = if text == "Gm" {
            GroupSpec::Gm
        } else if let Some(n) = text.strip_prefix("GL") {
            GroupSpec::GL(parse_rank(n, text)?)
        } else if let Some(n) = text.strip_prefix("SL") {
            GroupSpec::SL(parse_rank(n, text)?)
        } else if let Some(n) = text.strip_prefix('T') {
            GroupSpec::Torus(parse_rank(n, text)?)
        } else {
            return Err(Error::Parse(format!(
                "unknown group `{text}` (expected Gm, Tn, GLn or SLn)"
            )));
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn parse_rank(digits: &str, full: &str) -> Result<usize> {
    digits
        .parse::<usize>()
        .map_err(|_| Error::Parse(format!("bad group rank in `{full}`")))
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Gm => write!(f, "Gm"),
            GroupSpec::Torus(n) => write!(f, "T{n}"),
            GroupSpec::GL(n) => write!(f, "GL{n}"),
            GroupSpec::SL(n) => write!(f, "SL{n}"),
        }
    }
}

/// The Chow ring of the classifying space: a free graded polynomial ring on
/// the integers. `Gm -> Z[t]`, `Tn -> Z[t1..tn]`, `GLn -> Z[c1..cn]` with
/// `deg c_i = i`, `SLn -> Z[c2..cn]`.
pub fn point_ring(group: GroupSpec) -> Result<RingPresentation<BigInt>> {
    group.validate()?;
    let ambient = point_ambient(group)?;
    Ok(RingPresentation::free(&ambient))
}

fn point_ambient(group: GroupSpec) -> Result<Arc<Ambient>> {
    match group {
        GroupSpec::Gm => Ambient::degree_one(torus_var_names(1)),
        GroupSpec::Torus(n) => Ambient::degree_one(torus_var_names(n)),
        GroupSpec::GL(n) => Ambient::new((1..=n).map(|i| (format!("c{i}"), i as u32))),
        GroupSpec::SL(n) => Ambient::new((2..=n).map(|i| (format!("c{i}"), i as u32))),
    }
}

fn torus_rank(group: GroupSpec) -> usize {
    match group {
        GroupSpec::Gm => 1,
        GroupSpec::Torus(n) | GroupSpec::GL(n) | GroupSpec::SL(n) => n,
    }
}

/// Restriction to the maximal torus: `c_i -> e_i(t_1..t_n)`. The result is a
/// symmetric polynomial of the same degree.
pub fn restrict_to_torus(p: &IntPolynomial, group: GroupSpec) -> Result<IntPolynomial> {
    group.validate()?;
    let source = point_ambient(group)?;
    if p.ambient() != &source {
        return Err(Error::AmbientMismatch);
    }
    let n = torus_rank(group);
    let torus = Ambient::degree_one(torus_var_names(n))?;
    let all_vars: Vec<usize> = (0..n).collect();
    let bindings: Vec<(String, IntPolynomial)> = source
        .vars()
        .iter()
        .map(|v| {
            let i = v.degree as usize; // c_i has degree i
            elementary_symmetric::<BigInt>(&torus, i, &all_vars).map(|e| (v.name.clone(), e))
        })
        .collect::<Result<_>>()?;
    let borrowed: Vec<(&str, IntPolynomial)> = bindings
        .iter()
        .map(|(n, e)| (n.as_str(), e.clone()))
        .collect();
    p.substitute(&torus, &borrowed)
}

/// Count of partitions of `d` with every part at most `max_part`.
fn partitions_with_bounded_parts(d: u64, max_part: u64) -> u64 {
    if d == 0 {
        return 1;
    }
    if max_part == 0 {
        return 0;
    }
    let mut count = 0;
    for first in 1..=max_part.min(d) {
        count += partitions_with_bounded_parts(d - first, first);
    }
    count
}

/// Count of partitions of `d` into at most `max_len` parts.
fn partitions_with_bounded_length(d: u64, max_len: u64) -> u64 {
    if d == 0 {
        return 1;
    }
    if max_len == 0 {
        return 0;
    }
    // parts of size <= d, length <= max_len, largest part first
    fn rec(d: u64, max_part: u64, slots: u64) -> u64 {
        if d == 0 {
            return 1;
        }
        if slots == 0 {
            return 0;
        }
        let mut count = 0;
        for first in 1..=max_part.min(d) {
            count += rec(d - first, first, slots - 1);
        }
        count
    }
    rec(d, d, max_len)
}

/// Degree-`d` comparison of the GL(n) point ring and the Weyl-invariant part
/// of the torus point ring: the monomial count in `c_1..c_n` must match the
/// dimension of degree-`d` symmetric polynomials in `t_1..t_n` (two partition
/// counts), and restriction must be injective on the monomial basis (exact
/// rank over the rationals).
pub fn weyl_image_check(n: usize, d: u64) -> Result<bool> {
    let group = GroupSpec::GL(n);
    group.validate()?;
    let c_ambient = point_ambient(group)?;
    let c_monomials = monomials_of_degree(&c_ambient, d);

    // route one: monomials in c_1..c_n of weighted degree d <-> partitions of
    // d with parts <= n
    let by_parts = partitions_with_bounded_parts(d, n as u64);
    // route two: symmetric polynomials of degree d in n variables <->
    // partitions of d into at most n parts
    let by_length = partitions_with_bounded_length(d, n as u64);
    if c_monomials.len() as u64 != by_parts || by_parts != by_length {
        return Ok(false);
    }

    // injectivity of c_i -> e_i on the degree-d monomial basis
    let torus = Ambient::degree_one(torus_var_names(n))?;
    let t_basis = monomials_of_degree(&torus, d);
    let rows: Vec<Vec<BigRational>> = c_monomials
        .iter()
        .map(|m| {
            let p = IntPolynomial::term(&c_ambient, m.clone(), BigInt::from(1));
            let image = restrict_to_torus(&p, group)?;
            Ok(t_basis
                .iter()
                .map(|tm| BigRational::from_integer(image.coefficient(tm)))
                .collect())
        })
        .collect::<Result<_>>()?;
    Ok(rational_rank(&rows) == c_monomials.len())
}
