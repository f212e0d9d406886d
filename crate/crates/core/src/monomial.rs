//! Sparse monomials over an indexed variable set.

/// A monomial: sorted sparse list of `(variable index, exponent)` pairs.
///
/// Zero exponents are never stored; the empty list is the monomial 1. The
/// derived `Ord` is a storage order used for deterministic container
/// iteration; the mathematical monomial order lives on
/// [`Ambient::cmp_monomials`](crate::ambient::Ambient::cmp_monomials).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pairs: Vec<(u32, u32)>,
}

impl Monomial {
    /// The monomial 1.
    pub fn one() -> Self {
        Monomial { pairs: Vec::new() }
    }

    /// A single variable to the first power.
    pub fn var(index: usize) -> Self {
        Self::var_pow(index, 1)
    }

    /// A single variable to the given power.
    pub fn var_pow(index: usize, exp: u32) -> Self {
        if exp == 0 {
            return Self::one();
        }
        Monomial {
            pairs: vec![(index as u32, exp)],
        }
    }

    /// Build from arbitrary pairs; duplicates are merged and zeros dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut collected: Vec<(u32, u32)> = Vec::new();
        for (var, exp) in pairs {
            if exp == 0 {
                continue;
            }
            collected.push((var as u32, exp));
        }
        collected.sort_by_key(|&(var, _)| var);
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(collected.len());
        for (var, exp) in collected {
            match merged.last_mut() {
                Some((last_var, last_exp)) if *last_var == var => *last_exp += exp,
                _ => merged.push((var, exp)),
            }
        }
        Monomial { pairs: merged }
    }

    pub fn is_one(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.pairs
            .iter()
            .find(|&&(var, _)| var as usize == index)
            .map_or(0, |&(_, exp)| exp)
    }

    /// Sum of exponents, ignoring the grading.
    pub fn total_degree(&self) -> u64 {
        self.pairs.iter().map(|&(_, exp)| exp as u64).sum()
    }

    /// Indices of the variables that occur.
    pub fn vars(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairs.iter().map(|&(var, _)| var as usize)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut pairs = Vec::with_capacity(self.pairs.len() + other.pairs.len());
        let (mut a, mut b) = (self.pairs.iter().peekable(), other.pairs.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => {
                    if va < vb {
                        pairs.push((va, ea));
                        a.next();
                    } else if vb < va {
                        pairs.push((vb, eb));
                        b.next();
                    } else {
                        pairs.push((va, ea + eb));
                        a.next();
                        b.next();
                    }
                }
                (Some(&&pa), None) => {
                    pairs.push(pa);
                    a.next();
                }
                (None, Some(&&pb)) => {
                    pairs.push(pb);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial { pairs }
    }

    /// Quotient monomial, when `other` divides `self`.
    pub fn try_div(&self, other: &Self) -> Option<Self> {
        let mut pairs = Vec::with_capacity(self.pairs.len());
        let mut rest = self.pairs.iter().peekable();
        for &(var, exp) in &other.pairs {
            loop {
                let &&(v, e) = rest.peek()?;
                if v < var {
                    pairs.push((v, e));
                    rest.next();
                } else if v == var {
                    if e < exp {
                        return None;
                    }
                    if e > exp {
                        pairs.push((v, e - exp));
                    }
                    rest.next();
                    break;
                } else {
                    return None;
                }
            }
        }
        pairs.extend(rest.copied());
        Some(Monomial { pairs })
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.try_div(self).is_some()
    }

    pub fn pow(&self, k: u32) -> Self {
        if k == 0 {
            return Self::one();
        }
        Monomial {
            pairs: self.pairs.iter().map(|&(var, exp)| (var, exp * k)).collect(),
        }
    }

    /// Least common multiple of two monomials.
    pub fn lcm(&self, other: &Self) -> Self {
        let mut pairs = Vec::with_capacity(self.pairs.len() + other.pairs.len());
        let (mut a, mut b) = (self.pairs.iter().peekable(), other.pairs.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => {
                    if va < vb {
                        pairs.push((va, ea));
                        a.next();
                    } else if vb < va {
                        pairs.push((vb, eb));
                        b.next();
                    } else {
                        pairs.push((va, ea.max(eb)));
                        a.next();
                        b.next();
                    }
                }
                (Some(&&pa), None) => {
                    pairs.push(pa);
                    a.next();
                }
                (None, Some(&&pb)) => {
                    pairs.push(pb);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial { pairs }
    }

    /// True when the two monomials share no variable.
    pub fn is_coprime_with(&self, other: &Self) -> bool {
        let mut a = self.pairs.iter().peekable();
        let mut b = other.pairs.iter().peekable();
        while let (Some(&&(va, _)), Some(&&(vb, _))) = (a.peek(), b.peek()) {
            if va < vb {
                a.next();
            } else if vb < va {
                b.next();
            } else {
                return false;
            }
        }
        true
    }

    /// Remap variable indices (used for permutation and ambient re-indexing).
    pub fn map_vars(&self, f: impl Fn(usize) -> usize) -> Self {
        Self::from_pairs(self.pairs.iter().map(|&(var, exp)| (f(var as usize), exp)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_and_normalize() {
        let m = Monomial::from_pairs([(2, 1), (0, 2), (2, 3), (1, 0)]);
        assert_eq!(m.pairs(), &[(0, 2), (2, 4)]);
        assert_eq!(m.exponent(1), 0);
        assert_eq!(m.total_degree(), 6);
    }

    #[test]
    fn division() {
        let m = Monomial::from_pairs([(0, 2), (1, 1)]);
        let d = Monomial::from_pairs([(0, 1)]);
        assert_eq!(m.try_div(&d), Some(Monomial::from_pairs([(0, 1), (1, 1)])));
        assert_eq!(d.try_div(&m), None);
        assert!(d.divides(&m));
    }

    #[test]
    fn lcm_and_coprime() {
        let a = Monomial::from_pairs([(0, 2)]);
        let b = Monomial::from_pairs([(1, 3)]);
        assert!(a.is_coprime_with(&b));
        assert_eq!(a.lcm(&b), Monomial::from_pairs([(0, 2), (1, 3)]));
        let c = Monomial::from_pairs([(0, 1), (1, 1)]);
        assert!(!a.is_coprime_with(&c));
        assert_eq!(a.lcm(&c), Monomial::from_pairs([(0, 2), (1, 1)]));
    }
}
