//! Integer partitions: the index set for Schur modules, Specht modules and
//! conjugacy classes of symmetric groups.
//!
//! A [`Partition`] stores its nonzero parts in weakly decreasing order. The
//! empty partition is the unique partition of zero.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing finite sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition from its parts. Trailing zeros are dropped; any
    /// other violation of weak decrease is rejected rather than sorted.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part before a positive one"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// The rectangle with `rows` rows of length `width`.
    pub fn rectangle(rows: usize, width: usize) -> Self {
        if width == 0 {
            Self::empty()
        } else {
            Partition(vec![width; rows])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// The transposed diagram: column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let cols = (0..width)
            .map(|j| self.0.iter().take_while(|&&r| r > j).count())
            .collect();
        Partition(cols)
    }

    /// True iff every successive difference `λ_i - λ_{i+1}` (including the
    /// last part minus zero) is below `p`. Characteristic zero (`p == 0`)
    /// imposes no condition.
    pub fn is_p_restricted(&self, p: u64) -> bool {
        if p == 0 {
            return true;
        }
        (0..self.len()).all(|i| ((self.part(i) - self.part(i + 1)) as u64) < p)
    }

    /// Every part doubled: `2λ = (2λ_1, 2λ_2, ...)`.
    pub fn double(&self) -> Partition {
        Partition(self.0.iter().map(|&r| 2 * r).collect())
    }

    /// Cells `(row, col)` of the Young diagram, 0-based, in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| (0..r).map(move |j| (i, j)))
    }

    /// Hook length of every cell, in row-major cell order.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.cells()
            .map(|(i, j)| self.part(i) - j + conj.part(j) - i - 1)
            .collect()
    }

    /// Multiplicity of each part size: entry `k` counts parts equal to `k + 1`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut mult = vec![0; self.part(0)];
        for &r in &self.0 {
            mult[r - 1] += 1;
        }
        mult
    }

    /// Order of the centralizer of a permutation of this cycle type,
    /// `z_ρ = ∏ i^{m_i} m_i!`.
    pub fn centralizer_order(&self) -> BigUint {
        let mut z = BigUint::one();
        for (k, &m) in self.multiplicities().iter().enumerate() {
            let i = BigUint::from(k + 1);
            for t in 1..=m {
                z *= &i;
                z *= BigUint::from(t);
            }
        }
        z
    }

    /// Size of the conjugacy class of `S_n` with this cycle type.
    pub fn class_size(&self) -> BigUint {
        factorial(self.size()) / self.centralizer_order()
    }

    /// Sign of a permutation with this cycle type.
    pub fn sign(&self) -> i64 {
        let even_cycles = self.0.iter().filter(|&&r| r % 2 == 0).count();
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Whether `other` fits inside this diagram.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// Comma-separated parts, `3,1`; the empty partition renders as the empty
/// string.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for r in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// All partitions of `n`, optionally restricted to at most `max_parts`
/// parts, in lexicographically decreasing order.
pub fn enumerate_partitions(n: usize, max_parts: Option<usize>) -> Vec<Partition> {
    fn go(
        remaining: usize,
        cap: usize,
        slots: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for first in (1..=cap.min(remaining)).rev() {
            // the remaining slots must be able to absorb what is left
            if first * slots < remaining {
                break;
            }
            current.push(first);
            go(remaining - first, first, slots - 1, current, out);
            current.pop();
        }
    }

    let mut out = Vec::new();
    go(n, n, max_parts.unwrap_or(n), &mut Vec::new(), &mut out);
    out
}

/// Values `p(0), ..., p(n)` of the partition function via Euler's
/// pentagonal-number recurrence.
pub fn partition_counts(n: usize) -> Vec<BigUint> {
    let mut table: Vec<BigUint> = Vec::with_capacity(n + 1);
    table.push(BigUint::one());
    for i in 1..=n {
        let mut plus = BigUint::zero();
        let mut minus = BigUint::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let bucket = if k % 2 == 1 { &mut plus } else { &mut minus };
            *bucket += &table[i - g1];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= i {
                *bucket += &table[i - g2];
            }
        }
        table.push(plus - minus);
    }
    table
}
