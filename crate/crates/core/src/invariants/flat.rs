//! Invariants of `T(W)_n` recomputed inside the polynomial ring
//! `Sym(W ⊗ k^n) = k[x_{i,j}]`, as the multidegree `(1, ..., 1)` part in the
//! `k^n` variables. The group acts by linear substitution of variables; no
//! tensor-power matrices are involved, so agreement with
//! [`fixed_space`](super::fixed::fixed_space) is an independent check.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::field::Field;
use super::fixed::{fixed_space_capped, DEFAULT_DIMENSION_CAP};
use super::group::MatrixGroup;
use super::linalg::{EchelonBasis, Matrix};
use crate::error::{Error, Result};

/// Monomials are sorted lists of variable indices; `x_{i,j}` has index
/// `j·m + i`.
type Poly<E> = BTreeMap<Vec<usize>, E>;

fn poly_mul<F: Field>(field: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
    let mut out: Poly<F::Elem> = BTreeMap::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let mut mono = ma.clone();
            mono.extend_from_slice(mb);
            mono.sort_unstable();
            let c = field.mul(ca, cb);
            let slot = out.entry(mono).or_insert_with(|| field.zero());
            *slot = field.add(slot, &c);
        }
    }
    out.retain(|_, c| !field.is_zero(c));
    out
}

/// `g · x_{i,j} = Σ_k g_{k,i} x_{k,j}`.
fn substitute_variable<F: Field>(field: &F, g: &Matrix<F::Elem>, var: usize) -> Poly<F::Elem> {
    let m = g.size();
    let (i, j) = (var % m, var / m);
    (0..m).filter(|&k| !field.is_zero(g.get(k, i))).map(|k| (vec![j * m + k], g.get(k, i).clone())).collect()
}

fn act<F: Field>(field: &F, g: &Matrix<F::Elem>, mono: &[usize]) -> Poly<F::Elem> {
    mono.iter().fold(Poly::from([(Vec::new(), field.one())]), |acc, &v| {
        poly_mul(field, &acc, &substitute_variable(field, g, v))
    })
}

/// The flat monomials `x_{i_1,1} ⋯ x_{i_n,n}`, one per function
/// `{1..n} → {1..m}`.
fn flat_monomials(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for j in 0..n {
        out = out
            .into_iter()
            .flat_map(|mono: Vec<usize>| {
                (0..m).map(move |i| {
                    let mut next = mono.clone();
                    next.push(j * m + i);
                    next
                })
            })
            .collect();
    }
    out
}

/// Outcome of comparing the two computations in degree `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrosscheckReport {
    pub degree: usize,
    pub polynomial_dim: usize,
    pub tensor_dim: usize,
    /// Every tensor-side invariant, read as a polynomial, is fixed by the
    /// substitution action.
    pub tensor_basis_fixed: bool,
    pub agrees: bool,
}

pub fn flat_weight_report<F: Field>(group: &MatrixGroup<F>, n: usize) -> Result<CrosscheckReport> {
    let field = group.field();
    let m = group.size();
    let tensor = fixed_space_capped(group, n, DEFAULT_DIMENSION_CAP)?;
    let monos = flat_monomials(m, n);
    let position: BTreeMap<&Vec<usize>, usize> = monos.iter().enumerate().map(|(k, x)| (x, k)).collect();

    // images[g][k] = g · monos[k], as a vector on the flat monomials
    let mut images = Vec::new();
    for g in group.generators() {
        let mut rows = Vec::with_capacity(monos.len());
        for mono in &monos {
            let mut v = vec![field.zero(); monos.len()];
            for (image, c) in act(field, g, mono) {
                let k = *position
                    .get(&image)
                    .ok_or_else(|| Error::InvalidMatrix("substitution left the flat weight space".into()))?;
                v[k] = c;
            }
            rows.push(v);
        }
        images.push(rows);
    }

    // f = Σ c_k monos[k] is fixed iff Σ_k c_k (g·monos[k] − monos[k]) = 0,
    // i.e. c lies in the kernel of the transposed columns.
    let width = monos.len();
    let mut relations = EchelonBasis::new(field.clone(), width);
    for rows in &images {
        for target in 0..width {
            let row: Vec<F::Elem> = (0..width)
                .map(|k| {
                    let x = rows[k][target].clone();
                    if k == target {
                        field.sub(&x, &field.one())
                    } else {
                        x
                    }
                })
                .collect();
            relations.insert(row);
        }
    }
    let polynomial_dim = width - relations.rank();

    // word (i_1..i_n) ↔ x_{i_1,1} ⋯ x_{i_n,n}; flat_monomials lists them in
    // the same lexicographic order as the word basis.
    let tensor_basis_fixed = tensor.basis().iter().all(|c| {
        images.iter().all(|rows| {
            (0..width).all(|target| {
                let image = (0..width).fold(field.zero(), |acc, k| {
                    if field.is_zero(&c[k]) {
                        acc
                    } else {
                        field.add(&acc, &field.mul(&c[k], &rows[k][target]))
                    }
                });
                image == c[target]
            })
        })
    });
    Ok(CrosscheckReport {
        degree: n,
        polynomial_dim,
        tensor_dim: tensor.dim(),
        tensor_basis_fixed,
        agrees: polynomial_dim == tensor.dim() && tensor_basis_fixed,
    })
}

/// True when the polynomial-ring computation of the flat weight invariants
/// agrees with the word-basis fixed space in degree `n`.
pub fn flat_weight_crosscheck<F: Field>(group: &MatrixGroup<F>, n: usize) -> Result<bool> {
    Ok(flat_weight_report(group, n)?.agrees)
}
