//! Dimensions of Schur modules `S_λ(k^m)` and Specht modules `S^λ`, the
//! tableau-counting oracles that cross-check them, and composition lengths
//! of two-row Specht modules.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::partitions::{factorial, Partition};

/// Multiplies small factors into a `BigUint`, batching them in a machine
/// word first.
struct Product {
    big: BigUint,
    word: u64,
}

impl Product {
    fn new() -> Self {
        Product { big: BigUint::one(), word: 1 }
    }

    fn push(&mut self, factor: usize) {
        let factor = factor as u64;
        match self.word.checked_mul(factor) {
            Some(w) if w < (1 << 48) => self.word = w,
            _ => {
                self.big *= self.word;
                self.word = factor;
            }
        }
    }

    fn finish(mut self) -> BigUint {
        self.big *= self.word;
        self.big
    }
}

/// `dim S_λ(k^m)` by the hook-content formula
/// `∏ (m + content) / hook` over the cells of λ. Zero when λ has more than
/// `m` rows.
pub fn schur_dim(shape: &Partition, m: usize) -> BigUint {
    if shape.len() > m {
        return BigUint::default();
    }
    let mut num = Product::new();
    let mut den = Product::new();
    for ((i, j), hook) in shape.cells().zip(shape.hook_lengths()) {
        num.push(m + j - i);
        den.push(hook);
    }
    num.finish() / den.finish()
}

/// Number of standard Young tableaux of shape λ by the hook length formula.
/// The empty partition has dimension one.
pub fn specht_dim(shape: &Partition) -> BigUint {
    let mut den = Product::new();
    for hook in shape.hook_lengths() {
        den.push(hook);
    }
    factorial(shape.size()) / den.finish()
}

pub const SYT_ORACLE_LIMIT: usize = 12;
pub const SSYT_ORACLE_SIZE_LIMIT: usize = 10;
pub const SSYT_ORACLE_RANK_LIMIT: usize = 5;

/// Counts standard Young tableaux of shape λ by listing them: the entries
/// `1..=n` are placed one at a time into an outer corner of the growing
/// shape, so each complete placement sequence is one tableau.
pub fn syt_count_oracle(shape: &Partition) -> Result<u64> {
    let n = shape.size();
    if n > SYT_ORACLE_LIMIT {
        return Err(Error::SizeGuard { what: "standard tableau enumeration", size: n, limit: SYT_ORACLE_LIMIT });
    }

    fn fill(target: &[usize], rows: &mut Vec<usize>, placed: usize, total: usize) -> u64 {
        if placed == total {
            return 1;
        }
        let mut count = 0;
        for i in 0..target.len() {
            let fits_row = rows[i] < target[i];
            let fits_column = i == 0 || rows[i - 1] > rows[i];
            if fits_row && fits_column {
                rows[i] += 1;
                count += fill(target, rows, placed + 1, total);
                rows[i] -= 1;
            }
        }
        count
    }

    let target = shape.parts();
    Ok(fill(target, &mut vec![0; target.len()], 0, n))
}

/// Counts semistandard tableaux of shape λ with entries in `1..=m` by
/// filling cells in row-major order under the row-weak, column-strict rule.
pub fn ssyt_count_oracle(shape: &Partition, m: usize) -> Result<u64> {
    let n = shape.size();
    if n > SSYT_ORACLE_SIZE_LIMIT {
        return Err(Error::SizeGuard { what: "semistandard tableau enumeration", size: n, limit: SSYT_ORACLE_SIZE_LIMIT });
    }
    if m > SSYT_ORACLE_RANK_LIMIT {
        return Err(Error::SizeGuard { what: "semistandard tableau enumeration rank", size: m, limit: SSYT_ORACLE_RANK_LIMIT });
    }

    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let width = shape.part(0);
    let mut grid = vec![vec![0usize; width]; shape.len()];

    fn fill(cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, at: usize, m: usize) -> u64 {
        let Some(&(i, j)) = cells.get(at) else {
            return 1;
        };
        let low_left = if j > 0 { grid[i][j - 1] } else { 1 };
        let low_above = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
        let mut count = 0;
        for v in low_left.max(low_above)..=m {
            grid[i][j] = v;
            count += fill(cells, grid, at + 1, m);
        }
        grid[i][j] = 0;
        count
    }

    Ok(fill(&cells, &mut grid, 0, m))
}

/// `⌊log_p((n + 1) / 2)⌋`: the largest `e ≥ 0` with `2 p^e ≤ n + 1`.
///
/// This is the asymptotic size of the composition length of the Specht
/// module `S^{(n,n)}` in characteristic `p`, not an exact length.
pub fn two_row_length_estimate(n: u64, p: u64) -> u32 {
    assert!(n >= 1 && p >= 2, "two_row_length_estimate needs n >= 1 and p >= 2");
    let bound = n as u128 + 1;
    let mut e = 0;
    let mut power = p as u128;
    while 2 * power <= bound {
        e += 1;
        power *= p as u128;
    }
    e
}

/// Source of composition lengths `len(S^λ)` of Specht modules.
pub trait LengthOracle {
    /// Characteristic the lengths refer to (0 or a prime).
    fn characteristic(&self) -> u64;

    /// `len(S^λ)`, or `None` when the oracle does not know it.
    fn length(&self, shape: &Partition) -> Option<u64>;
}

/// Default lengths: every Specht module is simple in characteristic zero;
/// in characteristic `p` only the rectangles `(m, m)` and `(2^m)` are
/// covered, by `max(1, ⌊log_p((m + 1)/2)⌋)`.
///
/// The floor at one keeps nonzero modules at length at least one where the
/// logarithmic estimate rounds down to zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoRowLengths {
    characteristic: u64,
}

impl TwoRowLengths {
    pub fn new(characteristic: u64) -> Self {
        TwoRowLengths { characteristic }
    }

    /// `m` when the shape is `(m, m)` or `(2^m)`; the empty shape gives 0.
    fn rectangle_size(shape: &Partition) -> Option<usize> {
        let parts = shape.parts();
        match parts {
            [] => Some(0),
            [a, b] if a == b => Some(*a),
            _ if parts.iter().all(|&r| r == 2) => Some(parts.len()),
            _ => None,
        }
    }
}

impl LengthOracle for TwoRowLengths {
    fn characteristic(&self) -> u64 {
        self.characteristic
    }

    fn length(&self, shape: &Partition) -> Option<u64> {
        if self.characteristic == 0 {
            return Some(1);
        }
        match Self::rectangle_size(shape)? {
            0 => Some(1),
            m => Some(u64::from(two_row_length_estimate(m as u64, self.characteristic)).max(1)),
        }
    }
}
