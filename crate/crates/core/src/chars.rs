//! Character lattices of split tori, weight vectors, and representations as
//! weight multisets, with their Chern classes over a point.

use crate::ambient::Ambient;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use num_bigint::BigInt;
use std::fmt;
use std::sync::Arc;

/// The character lattice of a split torus of the given rank. Owns the
/// polynomial ring of the classifying space: `Z[t]` in rank 1, `Z[t1..tn]`
/// above.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterLattice {
    rank: usize,
    ambient: Arc<Ambient>,
}

impl CharacterLattice {
    pub fn new(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidScenario("torus rank must be at least 1".into()));
        }
        let ambient = Ambient::degree_one(torus_var_names(rank))?;
        Ok(CharacterLattice { rank, ambient })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The polynomial ring carrying the symmetric algebra on the characters.
    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.ambient
    }

    /// The first Chern class of the weight-`chi` line: the linear form
    /// `chi_1 t_1 + ... + chi_n t_n`.
    pub fn linear_form(&self, chi: &Character) -> Result<IntPolynomial> {
        if chi.rank() != self.rank {
            return Err(Error::LatticeMismatch);
        }
        let terms = chi
            .weights
            .iter()
            .enumerate()
            .map(|(i, &w)| (crate::monomial::Monomial::var(i), BigInt::from(w)));
        IntPolynomial::from_terms(&self.ambient, terms)
    }
}

/// Variable names for the rank-`n` torus point ring.
pub fn torus_var_names(rank: usize) -> Vec<String> {
    if rank == 1 {
        vec!["t".to_string()]
    } else {
        (1..=rank).map(|i| format!("t{i}")).collect()
    }
}

/// A character of the torus, stored additively as an integer weight vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Character {
    weights: Vec<i64>,
}

impl Character {
    pub fn new(weights: Vec<i64>) -> Self {
        Character { weights }
    }

    pub fn zero(rank: usize) -> Self {
        Character {
            weights: vec![0; rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn is_zero(&self) -> bool {
        self.weights.iter().all(|&w| w == 0)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::LatticeMismatch);
        }
        Ok(Character {
            weights: self
                .weights
                .iter()
                .zip(&other.weights)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Character {
            weights: self.weights.iter().map(|w| -w).collect(),
        }
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, w) in self.weights.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

/// A representation of the torus: a finite multiset of characters, kept in
/// the order given (fixed points are indexed by this order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    lattice: CharacterLattice,
    characters: Vec<Character>,
}

impl Representation {
    pub fn new(lattice: CharacterLattice, characters: Vec<Character>) -> Result<Self> {
        for chi in &characters {
            if chi.rank() != lattice.rank() {
                return Err(Error::LatticeMismatch);
            }
        }
        Ok(Representation {
            lattice,
            characters,
        })
    }

    /// Rank-1 torus acting diagonally with the given weights.
    pub fn diagonal(weights: &[i64]) -> Result<Self> {
        let lattice = CharacterLattice::new(1)?;
        let characters = weights.iter().map(|&w| Character::new(vec![w])).collect();
        Representation::new(lattice, characters)
    }

    pub fn lattice(&self) -> &CharacterLattice {
        &self.lattice
    }

    pub fn characters(&self) -> &[Character] {
        &self.characters
    }

    pub fn dim(&self) -> usize {
        self.characters.len()
    }

    /// Negate every weight.
    pub fn dual(&self) -> Self {
        Representation {
            lattice: self.lattice.clone(),
            characters: self.characters.iter().map(Character::neg).collect(),
        }
    }

    /// Multiset union.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.lattice != other.lattice {
            return Err(Error::LatticeMismatch);
        }
        let mut characters = self.characters.clone();
        characters.extend(other.characters.iter().cloned());
        Ok(Representation {
            lattice: self.lattice.clone(),
            characters,
        })
    }

    /// Add `chi` to every weight.
    pub fn twist(&self, chi: &Character) -> Result<Self> {
        let characters = self
            .characters
            .iter()
            .map(|c| c.add(chi))
            .collect::<Result<_>>()?;
        Ok(Representation {
            lattice: self.lattice.clone(),
            characters,
        })
    }

    /// Total Chern class: the product of `1 + c_1(L_chi)` over the weights.
    pub fn total_chern(&self) -> IntPolynomial {
        let ambient = self.lattice.ambient();
        let mut product = IntPolynomial::one(ambient);
        for chi in &self.characters {
            let factor = IntPolynomial::one(ambient)
                .try_add(&self.lattice.linear_form(chi).expect("rank checked"))
                .expect("same ambient");
            product = product.try_mul(&factor).expect("same ambient");
        }
        product
    }

    pub fn has_distinct_characters(&self) -> bool {
        for i in 0..self.characters.len() {
            for j in i + 1..self.characters.len() {
                if self.characters[i] == self.characters[j] {
                    return false;
                }
            }
        }
        true
    }

    /// Weights of the normal directions at the `r`-th fixed point, relative to
    /// that point: the multiset `{chi_s - chi_r : s != r}`.
    pub fn normal_rep_at_fixed_point(&self, r: usize) -> Result<Representation> {
        if r >= self.characters.len() {
            return Err(Error::IndexOutOfRange {
                index: r,
                limit: self.characters.len(),
            });
        }
        if !self.has_distinct_characters() {
            return Err(Error::RepeatedWeights);
        }
        let base = &self.characters[r];
        let characters = self
            .characters
            .iter()
            .enumerate()
            .filter(|&(s, _)| s != r)
            .map(|(_, chi)| chi.sub(base))
            .collect::<Result<_>>()?;
        Ok(Representation {
            lattice: self.lattice.clone(),
            characters,
        })
    }
}
