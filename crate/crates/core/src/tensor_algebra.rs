//! The free tca `T(W)` on an `m`-dimensional space: words, the place
//! permutation action of `S_n` on `T(W)_n`, symmetric group characters and
//! the Schur–Weyl decomposition of `T(W)_n`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::json;
use crate::partitions::{enumerate_partitions, factorial, Partition};

pub const CHARACTER_TABLE_LIMIT: usize = 10;
pub const SCHUR_WEYL_LIMIT: usize = 8;

/// A permutation of `{0, ..., n-1}` stored by its images.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Swaps `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Permutation(images)
    }

    /// The cycle `c[0] -> c[1] -> ... -> c[0]` on `n` points.
    pub fn cycle(n: usize, points: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for (k, &a) in points.iter().enumerate() {
            if a >= n {
                return Err(Error::InvalidPermutation(format!("point {a} outside 0..{n}")));
            }
            images[a] = points[(k + 1) % points.len()];
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_by(|a, b| b.cmp(a));
        Partition::new(lengths).expect("sorted cycle lengths")
    }
}

/// A basis word `x_{i_1} ⋯ x_{i_n}` of `T(W)_n`, letters stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<usize>,
    alphabet: usize,
}

impl Word {
    pub fn new(letters: Vec<usize>, alphabet: usize) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| l >= alphabet) {
            return Err(Error::LetterOutOfRange { letter: bad, size: alphabet });
        }
        Ok(Word { letters, alphabet })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn degree(&self) -> usize {
        self.letters.len()
    }

    /// Position of the word in the lexicographic basis of `T(W)_n`.
    pub fn index(&self) -> usize {
        self.letters.iter().fold(0, |acc, &l| acc * self.alphabet + l)
    }

    pub fn from_index(alphabet: usize, degree: usize, mut index: usize) -> Word {
        let mut letters = vec![0; degree];
        for slot in letters.iter_mut().rev() {
            *slot = index % alphabet;
            index /= alphabet;
        }
        Word { letters, alphabet }
    }

    /// Concatenation, the multiplication of `T(W)`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters, alphabet: self.alphabet }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "x{}", l + 1)?;
        }
        Ok(())
    }
}

/// `σ(w_1 ⋯ w_n) = w_{σ⁻¹(1)} ⋯ w_{σ⁻¹(n)}`: the letter at position `i`
/// moves to position `σ(i)`. This is a left action.
pub fn sn_act(sigma: &Permutation, w: &Word) -> Result<Word> {
    if sigma.degree() != w.degree() {
        return Err(Error::DegreeMismatch { expected: w.degree(), got: sigma.degree() });
    }
    let mut letters = vec![0; w.degree()];
    for (i, &l) in w.letters.iter().enumerate() {
        letters[sigma.image(i)] = l;
    }
    Ok(Word { letters, alphabet: w.alphabet })
}

/// Number of words of length `n` over `m` letters, `m^n`, if it fits.
pub fn word_count(m: usize, n: usize) -> Option<usize> {
    m.checked_pow(n as u32)
}

/// Index map of a place permutation on the word basis of `T(k^m)_n`:
/// entry `i` is the index of `σ · word(i)`.
pub fn place_permutation_indices(sigma: &Permutation, m: usize) -> Vec<usize> {
    let n = sigma.degree();
    let total = m.pow(n as u32);
    (0..total)
        .map(|i| sn_act(sigma, &Word::from_index(m, n, i)).expect("degrees agree").index())
        .collect()
}

/// `χ^λ(ρ)` by the Murnaghan–Nakayama rule on beta-sets.
fn mn_value(shape: &Partition, rho: &[usize], memo: &mut HashMap<(Partition, usize), i64>) -> i64 {
    let Some((&r, rest)) = rho.split_first() else {
        return if shape.is_empty() { 1 } else { 0 };
    };
    if let Some(&v) = memo.get(&(shape.clone(), rho.len())) {
        return v;
    }
    let len = shape.len();
    let beta: Vec<usize> = (0..len).map(|i| shape.part(i) + (len - 1 - i)).collect();
    let mut total = 0;
    for (k, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let crossed = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[k] = target;
        moved.sort_by(|a, b| b.cmp(a));
        let parts = moved.iter().enumerate().map(|(i, &x)| x - (len - 1 - i)).collect();
        let smaller = Partition::new(parts).expect("rim hook removal keeps a partition");
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        total += sign * mn_value(&smaller, rest, memo);
    }
    memo.insert((shape.clone(), rho.len()), total);
    total
}

/// Irreducible characters of `S_n`; rows are indexed by `shapes`, columns by
/// cycle types `classes`, both in lexicographically decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub n: usize,
    #[serde(rename = "rows", with = "partition_labels")]
    pub shapes: Vec<Partition>,
    #[serde(rename = "columns", with = "partition_labels")]
    pub classes: Vec<Partition>,
    pub values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn value(&self, shape: &Partition, class: &Partition) -> Option<i64> {
        let i = self.shapes.iter().position(|s| s == shape)?;
        let j = self.classes.iter().position(|c| c == class)?;
        Some(self.values[i][j])
    }

    /// The row of `shape` as an [`SnCharacter`].
    pub fn character(&self, shape: &Partition) -> Option<SnCharacter> {
        let i = self.shapes.iter().position(|s| s == shape)?;
        let values = self
            .classes
            .iter()
            .zip(&self.values[i])
            .map(|(c, &v)| (c.clone(), BigRational::from_integer(BigInt::from(v))))
            .collect();
        Some(SnCharacter { n: self.n, values })
    }
}

mod partition_labels {
    use super::*;

    pub fn serialize<S: Serializer>(ps: &[Partition], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(ps.iter().map(|p| p.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Partition>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| s.parse().map_err(D::Error::custom))
            .collect()
    }
}

pub fn character_table(n: usize) -> Result<CharacterTable> {
    if n > CHARACTER_TABLE_LIMIT {
        return Err(Error::SizeGuard { what: "character table", size: n, limit: CHARACTER_TABLE_LIMIT });
    }
    let shapes = enumerate_partitions(n, None);
    let mut memo = HashMap::new();
    let values = shapes
        .iter()
        .map(|lam| {
            shapes
                .iter()
                .map(|rho| {
                    memo.clear();
                    mn_value(lam, rho.parts(), &mut memo)
                })
                .collect()
        })
        .collect();
    Ok(CharacterTable { n, classes: shapes.clone(), shapes, values })
}

/// A class function on `S_n` with exact rational values, keyed by cycle
/// type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnCharacter {
    n: usize,
    values: BTreeMap<Partition, BigRational>,
}

impl SnCharacter {
    /// Requires a value for every cycle type of `S_n` and nothing else.
    pub fn new(n: usize, values: BTreeMap<Partition, BigRational>) -> Result<Self> {
        let classes = enumerate_partitions(n, None);
        if values.len() != classes.len() || classes.iter().any(|c| !values.contains_key(c)) {
            return Err(Error::Parse(format!("class function on S_{n} must cover exactly the cycle types of {n}")));
        }
        Ok(SnCharacter { n, values })
    }

    /// Builds a class function by evaluating `f` on every cycle type.
    pub fn from_fn(n: usize, mut f: impl FnMut(&Partition) -> BigRational) -> Self {
        let values = enumerate_partitions(n, None).into_iter().map(|c| {
            let v = f(&c);
            (c, v)
        });
        SnCharacter { n, values: values.collect() }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn value(&self, class: &Partition) -> Option<&BigRational> {
        self.values.get(class)
    }

    pub fn values(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.values.iter()
    }

    /// Value at the identity: the dimension of the representation.
    pub fn dimension(&self) -> &BigRational {
        &self.values[&Partition::column(self.n)]
    }

    /// `⟨χ, ψ⟩ = (1/n!) Σ_ρ |class ρ| χ(ρ) ψ(ρ)` (all characters of `S_n`
    /// are real).
    pub fn inner_product(&self, other: &SnCharacter) -> BigRational {
        let total: BigRational = self
            .values
            .iter()
            .map(|(c, v)| {
                let w = other.values.get(c).cloned().unwrap_or_else(BigRational::zero);
                BigRational::from_integer(BigInt::from(c.class_size())) * v * w
            })
            .sum();
        total / BigRational::from_integer(BigInt::from(factorial(self.n)))
    }

    /// Multiplicity of every Specht module `S^λ`, `λ ⊢ n`. Each must be a
    /// nonnegative integer.
    pub fn multiplicities(&self) -> Result<BTreeMap<Partition, BigUint>> {
        let table = character_table(self.n)?;
        table
            .shapes
            .iter()
            .map(|lam| {
                let chi = table.character(lam).expect("row exists");
                let m = chi.inner_product(self);
                if !m.is_integer() || m.is_negative() {
                    return Err(Error::BadMultiplicity(format!("{m} for shape ({lam})")));
                }
                Ok((lam.clone(), m.to_integer().to_biguint().expect("nonnegative")))
            })
            .collect()
    }
}

impl Serialize for SnCharacter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let values: BTreeMap<String, serde_json::Value> =
            self.values.iter().map(|(c, v)| (c.to_string(), json::rational_value(v))).collect();
        serde_json::json!({ "n": self.n, "values": values }).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SnCharacter {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            values: BTreeMap<String, serde_json::Value>,
        }
        let raw = Raw::deserialize(d)?;
        let values = raw
            .values
            .iter()
            .map(|(k, v)| Ok((k.parse::<Partition>()?, json::parse_rational(v)?)))
            .collect::<Result<BTreeMap<_, _>>>()
            .map_err(D::Error::custom)?;
        SnCharacter::new(raw.n, values).map_err(D::Error::custom)
    }
}

/// Character of `S_n` acting on `(k^m)^{⊗n}` by place permutations: a
/// permutation of cycle type ρ fixes `m^{ℓ(ρ)}` words.
pub fn tensor_power_character(m: usize, n: usize) -> Result<SnCharacter> {
    if n > CHARACTER_TABLE_LIMIT {
        return Err(Error::SizeGuard { what: "tensor power character", size: n, limit: CHARACTER_TABLE_LIMIT });
    }
    Ok(SnCharacter::from_fn(n, |rho| BigRational::from_integer(BigInt::from(m).pow(rho.len() as u32))))
}

/// Multiplicity of each Specht module `S^λ` in `T(k^m)_n`, computed from
/// characters; every partition of `n` appears, possibly with multiplicity 0.
pub fn schur_weyl_decompose(m: usize, n: usize) -> Result<BTreeMap<Partition, BigUint>> {
    if n > SCHUR_WEYL_LIMIT {
        return Err(Error::SizeGuard { what: "Schur-Weyl decomposition", size: n, limit: SCHUR_WEYL_LIMIT });
    }
    tensor_power_character(m, n)?.multiplicities()
}

/// Sign character of `S_n`.
pub fn sign_character(n: usize) -> SnCharacter {
    SnCharacter::from_fn(n, |rho| BigRational::from_integer(BigInt::from(rho.sign())))
}

/// Trivial character of `S_n`.
pub fn trivial_character(n: usize) -> SnCharacter {
    SnCharacter::from_fn(n, |_| BigRational::one())
}
