//! Exact coefficient domains: arbitrary-precision integers and rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

/// Which exact coefficient domain a ring is defined over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    Integers,
    Rationals,
}

impl Domain {
    /// One-letter symbol used when rendering rings ("Z[t]", "Q[t]").
    pub fn symbol(self) -> &'static str {
        match self {
            Domain::Integers => "Z",
            Domain::Rationals => "Q",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Domain::Integers => "integers",
            Domain::Rationals => "rationals",
        }
    }
}

/// An exact coefficient ring. Implemented for [`BigInt`] and [`BigRational`].
///
/// No floating point: every operation is exact.
pub trait Coeff: Clone + Eq + Hash + Debug + Display + Send + Sync + 'static {
    const DOMAIN: Domain;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn abs(&self) -> Self;
    fn from_i64(value: i64) -> Self;
    fn from_integer(value: &BigInt) -> Self;

    /// Over the integers, the gcd; over the rationals, 1 unless both inputs are 0.
    fn content_gcd(&self, other: &Self) -> Self;

    /// Canonical representative of `self` modulo `modulus`.
    ///
    /// Integers: least non-negative residue mod `|modulus|`. Rationals: 0 for
    /// any nonzero modulus. A zero modulus leaves the value unchanged.
    fn rem_canonical(&self, modulus: &Self) -> Self;

    /// Exact division; `None` when the quotient does not exist in the domain.
    fn try_exact_div(&self, divisor: &Self) -> Option<Self>;

    /// Parse a literal: `-12`, and additionally `3/4` over the rationals.
    fn parse(text: &str) -> Option<Self>;

    /// Exact view in the rationals.
    fn to_rational(&self) -> BigRational;

    /// Exact preimage from the rationals, when one exists in the domain.
    fn from_rational(value: &BigRational) -> Option<Self>;
}

impl Coeff for BigInt {
    const DOMAIN: Domain = Domain::Integers;

    fn zero() -> Self {
        <BigInt as Zero>::zero()
    }
    fn one() -> Self {
        <BigInt as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
    fn from_i64(value: i64) -> Self {
        BigInt::from(value)
    }
    fn from_integer(value: &BigInt) -> Self {
        value.clone()
    }

    fn content_gcd(&self, other: &Self) -> Self {
        self.gcd(other)
    }

    fn rem_canonical(&self, modulus: &Self) -> Self {
        if Zero::is_zero(modulus) {
            self.clone()
        } else {
            self.mod_floor(&Signed::abs(modulus))
        }
    }

    fn try_exact_div(&self, divisor: &Self) -> Option<Self> {
        if Zero::is_zero(divisor) {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        if Zero::is_zero(&r) {
            Some(q)
        } else {
            None
        }
    }

    fn parse(text: &str) -> Option<Self> {
        BigInt::from_str(text).ok()
    }

    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }

    fn from_rational(value: &BigRational) -> Option<Self> {
        if One::is_one(value.denom()) {
            Some(value.numer().clone())
        } else {
            None
        }
    }
}

impl Coeff for BigRational {
    const DOMAIN: Domain = Domain::Rationals;

    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }
    fn from_integer(value: &BigInt) -> Self {
        BigRational::from_integer(value.clone())
    }

    fn content_gcd(&self, other: &Self) -> Self {
        if Zero::is_zero(self) && Zero::is_zero(other) {
            <BigRational as Zero>::zero()
        } else {
            <BigRational as One>::one()
        }
    }

    fn rem_canonical(&self, modulus: &Self) -> Self {
        if Zero::is_zero(modulus) {
            self.clone()
        } else {
            <BigRational as Zero>::zero()
        }
    }

    fn try_exact_div(&self, divisor: &Self) -> Option<Self> {
        if Zero::is_zero(divisor) {
            None
        } else {
            Some(self / divisor)
        }
    }

    fn parse(text: &str) -> Option<Self> {
        BigRational::from_str(text).ok()
    }

    fn to_rational(&self) -> BigRational {
        self.clone()
    }

    fn from_rational(value: &BigRational) -> Option<Self> {
        Some(value.clone())
    }
}
