//! Characters of polynomial GL-representations in the Schur basis.
//!
//! A [`SchurExpansion`] is a finite integer combination `Σ c_λ s_λ`. Products
//! are computed with Littlewood–Richardson coefficients, found by listing
//! LR skew tableaux. The Schur functor, which takes a representation to its
//! `(1^n)` weight spaces, acts on characters by `s_λ ↦ f^λ` in degree `|λ|`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::dims::{schur_dim, specht_dim};
use crate::error::{Error, Result};
use crate::json;
use crate::partitions::{binomial, Partition};

/// Largest `|μ| + |ν|` accepted by [`lr_coefficients`].
pub const LR_SIZE_LIMIT: usize = 16;

/// Sparse integer combination of Schur functions. Zero coefficients are
/// never stored; negative coefficients (virtual characters) are allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single Schur function `s_λ`.
    pub fn schur(shape: Partition) -> Self {
        let mut x = Self::zero();
        x.add_term(shape, BigInt::from(1));
        x
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, BigInt)>) -> Self {
        let mut x = Self::zero();
        for (shape, c) in terms {
            x.add_term(shape, c);
        }
        x
    }

    pub fn add_term(&mut self, shape: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(shape) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn coefficient(&self, shape: &Partition) -> BigInt {
        self.terms.get(shape).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when no coefficient is negative, i.e. the character of an
    /// actual representation.
    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// The degree-`n` part.
    pub fn homogeneous(&self, n: usize) -> SchurExpansion {
        SchurExpansion {
            terms: self.terms.iter().filter(|(l, _)| l.size() == n).map(|(l, c)| (l.clone(), c.clone())).collect(),
        }
    }

    /// Product in the character ring, bilinear in the LR coefficients.
    pub fn try_mul(&self, other: &SchurExpansion) -> Result<SchurExpansion> {
        let mut out = SchurExpansion::zero();
        for (mu, a) in &self.terms {
            for (nu, b) in &other.terms {
                let coeff = a * b;
                for (lam, c) in lr_coefficients(mu, nu)? {
                    out.add_term(lam, &coeff * BigInt::from(c));
                }
            }
        }
        Ok(out)
    }

    /// Dimension of the representation on `k^m`: `Σ c_λ dim S_λ(k^m)`.
    pub fn dimension_at_rank(&self, m: usize) -> BigInt {
        self.terms.iter().map(|(l, c)| c * BigInt::from(schur_dim(l, m))).sum()
    }
}

impl Add for &SchurExpansion {
    type Output = SchurExpansion;

    fn add(self, rhs: &SchurExpansion) -> SchurExpansion {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }
}

impl Neg for &SchurExpansion {
    type Output = SchurExpansion;

    fn neg(self) -> SchurExpansion {
        SchurExpansion { terms: self.terms.iter().map(|(l, c)| (l.clone(), -c)).collect() }
    }
}

impl Sub for &SchurExpansion {
    type Output = SchurExpansion;

    fn sub(self, rhs: &SchurExpansion) -> SchurExpansion {
        self + &(-rhs)
    }
}

impl Mul<&BigInt> for &SchurExpansion {
    type Output = SchurExpansion;

    fn mul(self, k: &BigInt) -> SchurExpansion {
        SchurExpansion::from_terms(self.terms.iter().map(|(l, c)| (l.clone(), c * k)))
    }
}

impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (l, c) in &self.terms {
            map.serialize_entry(&l.to_string(), &json::int_value(c))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for SchurExpansion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, serde_json::Value>::deserialize(d)?;
        let mut out = SchurExpansion::zero();
        for (key, value) in raw {
            let shape: Partition = key.parse().map_err(D::Error::custom)?;
            let c = json::parse_int(&value).map_err(D::Error::custom)?;
            out.add_term(shape, c);
        }
        Ok(out)
    }
}

/// Littlewood–Richardson coefficients `c^λ_{μν}` for all λ with nonzero
/// coefficient.
///
/// LR tableaux of shape λ/μ and content ν are built by adding, for each
/// letter `k`, a horizontal strip of `ν_k` cells labelled `k`; a filling is
/// kept when its reverse reading word (rows top to bottom, each read right
/// to left) is a lattice word.
pub fn lr_coefficients(mu: &Partition, nu: &Partition) -> Result<BTreeMap<Partition, u64>> {
    let size = mu.size() + nu.size();
    if size > LR_SIZE_LIMIT {
        return Err(Error::SizeGuard { what: "Littlewood-Richardson enumeration", size, limit: LR_SIZE_LIMIT });
    }

    let mut out = BTreeMap::new();
    let max_rows = mu.len() + nu.len();
    let mut shape: Vec<usize> = mu.parts().to_vec();
    shape.resize(max_rows, 0);
    let mut letters: Vec<Vec<usize>> = vec![Vec::new(); max_rows];
    add_letter(nu.parts(), 0, &mut shape, &mut letters, &mut out);
    Ok(out)
}

fn add_letter(
    content: &[usize],
    letter: usize,
    shape: &mut Vec<usize>,
    letters: &mut Vec<Vec<usize>>,
    out: &mut BTreeMap<Partition, u64>,
) {
    if letter == content.len() {
        if is_lattice(letters, content.len()) {
            let lam = Partition::new(shape.clone()).expect("strips keep the shape a partition");
            *out.entry(lam).or_insert(0) += 1;
        }
        return;
    }
    let old = shape.clone();
    place_strip(content, letter, &old, 0, content[letter], shape, letters, out);
}

/// Distributes `remaining` cells of `letter` over rows `row..`, keeping the
/// added cells a horizontal strip over `old`.
#[allow(clippy::too_many_arguments)]
fn place_strip(
    content: &[usize],
    letter: usize,
    old: &[usize],
    row: usize,
    remaining: usize,
    shape: &mut Vec<usize>,
    letters: &mut Vec<Vec<usize>>,
    out: &mut BTreeMap<Partition, u64>,
) {
    if remaining == 0 {
        add_letter(content, letter + 1, shape, letters, out);
        return;
    }
    if row == old.len() {
        return;
    }
    // a horizontal strip never puts a new cell under another new cell
    let room = if row == 0 { remaining } else { old[row - 1] - old[row] };
    for take in (0..=room.min(remaining)).rev() {
        shape[row] = old[row] + take;
        letters[row].extend(std::iter::repeat_n(letter, take));
        place_strip(content, letter, old, row + 1, remaining - take, shape, letters, out);
        let keep = letters[row].len() - take;
        letters[row].truncate(keep);
        shape[row] = old[row];
    }
}

fn is_lattice(letters: &[Vec<usize>], alphabet: usize) -> bool {
    let mut seen = vec![0usize; alphabet];
    for row in letters {
        for &k in row.iter().rev() {
            seen[k] += 1;
            if k > 0 && seen[k] > seen[k - 1] {
                return false;
            }
        }
    }
    true
}

/// `s_μ · s_ν` as a Schur expansion.
pub fn lr_product(mu: &Partition, nu: &Partition) -> Result<SchurExpansion> {
    Ok(SchurExpansion::from_terms(lr_coefficients(mu, nu)?.into_iter().map(|(l, c)| (l, BigInt::from(c)))))
}

/// Dimension of the degree-`n` component of the Schur functor applied to a
/// representation with character `x`: `Σ_{|λ| = n} c_λ f^λ`.
pub fn flat_weight_dim(x: &SchurExpansion, n: usize) -> BigInt {
    x.terms().filter(|(l, _)| l.size() == n).map(|(l, c)| c * BigInt::from(specht_dim(l))).sum()
}

/// Checks the dimension identity behind monoidality of the Schur functor:
/// the flat weight space of `S_μ ⊗ S_ν` has dimension
/// `C(d + e, d) f^μ f^ν` where `d = |μ|` and `e = |ν|`.
pub fn monoidality_check(mu: &Partition, nu: &Partition) -> Result<bool> {
    let (d, e) = (mu.size(), nu.size());
    let lhs = flat_weight_dim(&lr_product(mu, nu)?, d + e);
    let rhs: BigUint = binomial(d + e, d) * specht_dim(mu) * specht_dim(nu);
    Ok(lhs == BigInt::from(rhs))
}
