//! Exact scalar fields: the rationals and prime fields `F_p`.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::json;

/// Which field a computation runs over. Serializes as
/// `{"kind":"rational"}` or `{"kind":"prime","p":2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Prime { p: u64 },
}

impl FieldSpec {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime { p } => *p,
        }
    }

    /// `0` is the rationals, anything else must be a prime.
    pub fn from_characteristic(c: u64) -> Result<Self> {
        if c == 0 {
            Ok(FieldSpec::Rational)
        } else if is_prime(c) {
            Ok(FieldSpec::Prime { p: c })
        } else {
            Err(Error::NotPrime(c))
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            FieldSpec::Prime { p } if !is_prime(*p) => Err(Error::NotPrime(*p)),
            _ => Ok(()),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Field operations over a runtime-chosen field. Elements are plain values;
/// the field object carries the context (e.g. the modulus).
pub trait Field: Clone + Debug {
    type Elem: Clone + PartialEq + Eq + Hash + Debug;

    fn spec(&self) -> FieldSpec;

    fn characteristic(&self) -> u64 {
        self.spec().characteristic()
    }

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Image of a rational number; fails when the denominator vanishes in
    /// the field.
    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem>;

    /// A rational representative. For `F_p` this is the integer in
    /// `(-p/2, p/2]`.
    fn lift(&self, a: &Self::Elem) -> BigRational;

    fn to_json(&self, a: &Self::Elem) -> Value;

    fn from_int(&self, k: i64) -> Self::Elem {
        self.from_rational(&BigRational::from_integer(BigInt::from(k)))
            .expect("integers exist in every field")
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }

    fn from_rational(&self, q: &BigRational) -> Result<BigRational> {
        Ok(q.clone())
    }

    fn lift(&self, a: &BigRational) -> BigRational {
        a.clone()
    }

    fn to_json(&self, a: &BigRational) -> Value {
        json::rational_value(a)
    }
}

/// The prime field `F_p`, elements stored as residues in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(PrimeField { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_int(&self, x: &BigInt) -> u64 {
        x.mod_floor(&BigInt::from(self.p)).to_u64().expect("residue fits")
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime { p: self.p }
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + self.p as u128 - *b as u128) % self.p as u128) as u64
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| self.pow(*a, self.p - 2))
    }

    fn from_rational(&self, q: &BigRational) -> Result<u64> {
        let num = self.reduce_int(q.numer());
        let den = self.reduce_int(q.denom());
        let inv = self.inv(&den).ok_or_else(|| {
            Error::InvalidMatrix(format!("entry {q} has a denominator divisible by {}", self.p))
        })?;
        Ok(self.mul(&num, &inv))
    }

    fn lift(&self, a: &u64) -> BigRational {
        let v = if *a > self.p / 2 { BigInt::from(*a) - BigInt::from(self.p) } else { BigInt::from(*a) };
        BigRational::from_integer(v)
    }

    fn to_json(&self, a: &u64) -> Value {
        Value::from(*a)
    }
}

/// Nonnegative integer value of an exact rational, if it is one.
pub(crate) fn as_natural(q: &BigRational) -> Option<num_bigint::BigUint> {
    (q.is_integer() && !q.is_negative()).then(|| q.to_integer().to_biguint().expect("nonnegative"))
}
