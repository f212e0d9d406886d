//! Graded variable sets shared by all polynomials of a ring.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use std::cmp::Ordering;
use std::sync::Arc;

/// One declared variable and its grading degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Variable {
    pub name: String,
    pub degree: u32,
}

/// An ordered set of graded variables.
///
/// Every polynomial holds an `Arc<Ambient>`; two polynomials interoperate only
/// when their ambients compare equal (same names, same order, same degrees).
/// The monomial order is graded lexicographic: weighted degree first, then
/// earlier declared variables dominate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ambient {
    vars: Vec<Variable>,
}

impl Ambient {
    /// Declare variables with explicit degrees. Degrees must be positive and
    /// names distinct and nonempty.
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = (S, u32)>) -> Result<Arc<Self>> {
        let vars: Vec<Variable> = vars
            .into_iter()
            .map(|(name, degree)| Variable {
                name: name.into(),
                degree,
            })
            .collect();
        for (i, v) in vars.iter().enumerate() {
            if v.name.is_empty() {
                return Err(Error::Parse("empty variable name".into()));
            }
            if v.degree == 0 {
                return Err(Error::Parse(format!(
                    "variable `{}` must have positive degree",
                    v.name
                )));
            }
            if vars[..i].iter().any(|w| w.name == v.name) {
                return Err(Error::Parse(format!("duplicate variable `{}`", v.name)));
            }
        }
        Ok(Arc::new(Ambient { vars }))
    }

    /// Declare degree-1 variables.
    pub fn degree_one<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<Self>> {
        Self::new(names.into_iter().map(|n| (n, 1)))
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    pub fn var(&self, index: usize) -> &Variable {
        &self.vars[index]
    }

    pub fn name(&self, index: usize) -> &str {
        &self.vars[index].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    /// Weighted degree of a monomial under the grading.
    pub fn monomial_degree(&self, m: &Monomial) -> u64 {
        m.pairs()
            .iter()
            .map(|&(var, exp)| self.vars[var as usize].degree as u64 * exp as u64)
            .sum()
    }

    /// Graded lexicographic comparison: weighted degree first, then the
    /// earliest declared variable with differing exponent decides (higher
    /// exponent wins).
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.monomial_degree(a).cmp(&self.monomial_degree(b)) {
            Ordering::Equal => {}
            other => return other,
        }
        let (mut pa, mut pb) = (a.pairs().iter().peekable(), b.pairs().iter().peekable());
        loop {
            match (pa.peek(), pb.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => {
                    if va == vb {
                        match ea.cmp(&eb) {
                            Ordering::Equal => {
                                pa.next();
                                pb.next();
                            }
                            other => return other,
                        }
                    } else if va < vb {
                        // `a` uses an earlier variable that `b` lacks
                        return Ordering::Greater;
                    } else {
                        return Ordering::Less;
                    }
                }
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (None, None) => return Ordering::Equal,
            }
        }
    }

    /// True when all declared degrees are 1.
    pub fn all_degree_one(&self) -> bool {
        self.vars.iter().all(|v| v.degree == 1)
    }
}
