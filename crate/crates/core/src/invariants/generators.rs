//! New tca generators of `R^G = T(W)^G`: in each degree, the invariants
//! modulo the `S_n`-stable span of products of lower-degree invariants.

use serde::{Deserialize, Serialize};

use super::field::Field;
use super::fixed::{fixed_space, InvariantSpace};
use super::group::MatrixGroup;
use super::linalg::{kron_rows, EchelonBasis};
use crate::error::{Error, Result};
use crate::tensor_algebra::{place_permutation_indices, word_count, Permutation};

/// Per-degree summary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub degree: usize,
    pub invariants: usize,
    pub decomposable: usize,
    pub new_generators: usize,
}

/// Invariant spaces `R_1..R_N` and the decomposable subspaces `D_n ⊂ R_n`.
#[derive(Clone, Debug)]
pub struct GeneratorAnalysis<F: Field> {
    size: usize,
    invariants: Vec<InvariantSpace<F>>,
    decomposables: Vec<EchelonBasis<F>>,
}

/// `v ↦ σ · v` on `T(k^m)_n`, given the index map of σ.
fn permute<E: Clone>(v: &[E], indices: &[usize]) -> Vec<E> {
    let mut out = v.to_vec();
    for (i, &j) in indices.iter().enumerate() {
        out[j] = v[i].clone();
    }
    out
}

fn adjacent_transpositions(m: usize, n: usize) -> Vec<Vec<usize>> {
    (0..n.saturating_sub(1)).map(|k| place_permutation_indices(&Permutation::transposition(n, k, k + 1), m)).collect()
}

impl<F: Field> GeneratorAnalysis<F> {
    pub fn new(group: &MatrixGroup<F>, max_degree: usize) -> Result<Self> {
        let field = group.field().clone();
        let m = group.size();
        let invariants = (1..=max_degree).map(|n| fixed_space(group, n)).collect::<Result<Vec<_>>>()?;
        let mut decomposables = Vec::with_capacity(max_degree);
        for n in 1..=max_degree {
            let width = word_count(m, n).expect("checked by fixed_space");
            let target = invariants[n - 1].dim();
            let mut span = EchelonBasis::new(field.clone(), width);
            let mut queue = Vec::new();
            'products: for i in 1..n {
                for u in invariants[i - 1].basis() {
                    for v in invariants[n - i - 1].basis() {
                        if span.rank() == target {
                            break 'products;
                        }
                        let w = kron_rows(&field, &[u, v]);
                        if span.insert(w.clone()) {
                            queue.push(w);
                        }
                    }
                }
            }
            // Products of invariants are invariant, so the closure stays
            // inside R_n and every pass through the queue raises the rank:
            // at most dim R_n vectors are ever queued.
            let swaps = adjacent_transpositions(m, n);
            while let Some(w) = queue.pop() {
                if span.rank() == target {
                    break;
                }
                for s in &swaps {
                    let sw = permute(&w, s);
                    if span.insert(sw.clone()) {
                        queue.push(sw);
                    }
                }
            }
            if span.rank() > target {
                return Err(Error::InvalidMatrix(format!("decomposables exceed the invariants in degree {n}")));
            }
            decomposables.push(span);
        }
        Ok(GeneratorAnalysis { size: m, invariants, decomposables })
    }

    pub fn max_degree(&self) -> usize {
        self.invariants.len()
    }

    pub fn invariants(&self, n: usize) -> &InvariantSpace<F> {
        &self.invariants[n - 1]
    }

    /// `D_n`.
    pub fn decomposable(&self, n: usize) -> &EchelonBasis<F> {
        &self.decomposables[n - 1]
    }

    pub fn reports(&self) -> Vec<DegreeReport> {
        (1..=self.max_degree())
            .map(|n| {
                let (r, d) = (self.invariants(n).dim(), self.decomposable(n).rank());
                DegreeReport { degree: n, invariants: r, decomposable: d, new_generators: r - d }
            })
            .collect()
    }

    /// `dim R_n − dim D_n` for `n = 1..=N`.
    pub fn new_generator_dims(&self) -> Vec<usize> {
        self.reports().iter().map(|r| r.new_generators).collect()
    }

    /// Whether `v ∈ D_n`.
    pub fn is_decomposable(&self, n: usize, v: &[F::Elem]) -> bool {
        self.decomposable(n).contains(v)
    }

    /// Whether `D_n` is closed under every adjacent transposition.
    pub fn is_sn_stable(&self, n: usize) -> bool {
        let span = self.decomposable(n);
        adjacent_transpositions(self.size, n).iter().all(|s| span.rows().iter().all(|row| span.contains(&permute(row, s))))
    }
}

/// `dim (R^G_+ / (R^G_+)^2)_n` for `n = 1..=max_degree`.
pub fn new_generators_dims<F: Field>(group: &MatrixGroup<F>, max_degree: usize) -> Result<Vec<usize>> {
    Ok(GeneratorAnalysis::new(group, max_degree)?.new_generator_dims())
}

/// The power sum `x_1^n + ... + x_m^n`: the sum of the constant words.
pub fn power_sum_vector<F: Field>(field: &F, m: usize, n: usize) -> Vec<F::Elem> {
    let width = m.pow(n as u32);
    let mut v = vec![field.zero(); width];
    for i in 0..m {
        let index = (0..n).fold(0, |acc, _| acc * m + i);
        v[index] = field.one();
    }
    v
}
