//! Exact linear algebra over a [`Field`]: square matrices and an
//! incrementally maintained reduced row echelon basis.

use super::field::Field;

/// Dense square matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    size: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_rows(rows: Vec<Vec<E>>) -> Option<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return None;
        }
        Some(Matrix { size, data: rows.into_iter().flatten().collect() })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.size + j]
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.size..(i + 1) * self.size]
    }

    pub fn rows(&self) -> Vec<Vec<E>> {
        (0..self.size).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<T>(&self, f: impl FnMut(&E) -> T) -> Matrix<T> {
        Matrix { size: self.size, data: self.data.iter().map(f).collect() }
    }
}

pub fn identity<F: Field>(field: &F, size: usize) -> Matrix<F::Elem> {
    let data = (0..size * size)
        .map(|k| if k / size == k % size { field.one() } else { field.zero() })
        .collect();
    Matrix { size, data }
}

pub fn mat_mul<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let n = a.size;
    let mut data = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = field.zero();
            for k in 0..n {
                let (x, y) = (a.get(i, k), b.get(k, j));
                if !field.is_zero(x) && !field.is_zero(y) {
                    acc = field.add(&acc, &field.mul(x, y));
                }
            }
            data.push(acc);
        }
    }
    Matrix { size: n, data }
}

pub fn trace<F: Field>(field: &F, a: &Matrix<F::Elem>) -> F::Elem {
    (0..a.size).fold(field.zero(), |acc, i| field.add(&acc, a.get(i, i)))
}

pub fn rank<F: Field>(field: &F, rows: impl IntoIterator<Item = Vec<F::Elem>>, width: usize) -> usize {
    let mut basis = EchelonBasis::new(field.clone(), width);
    for r in rows {
        basis.insert(r);
    }
    basis.rank()
}

/// Kronecker product of row vectors: entry `(j_1, ..., j_k)` (lexicographic)
/// is `∏ rows[t][j_t]`.
pub fn kron_rows<F: Field>(field: &F, rows: &[&[F::Elem]]) -> Vec<F::Elem> {
    let mut acc = vec![field.one()];
    for r in rows {
        let mut next = Vec::with_capacity(acc.len() * r.len());
        for a in &acc {
            for b in r.iter() {
                next.push(if field.is_zero(a) || field.is_zero(b) { field.zero() } else { field.mul(a, b) });
            }
        }
        acc = next;
    }
    acc
}

/// Span of the inserted vectors, kept in reduced row echelon form: every
/// stored row has a leading one in its pivot column and zeros in the pivot
/// columns of all other rows.
#[derive(Clone, Debug)]
pub struct EchelonBasis<F: Field> {
    field: F,
    width: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> EchelonBasis<F> {
    pub fn new(field: F, width: usize) -> Self {
        EchelonBasis { field, width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    fn axpy(&self, target: &mut [F::Elem], coeff: &F::Elem, row: &[F::Elem]) {
        for (t, r) in target.iter_mut().zip(row) {
            if !self.field.is_zero(r) {
                *t = self.field.sub(t, &self.field.mul(coeff, r));
            }
        }
    }

    /// Reduces `v` against the stored rows; the result is zero iff `v` lies
    /// in the span.
    pub fn reduce(&self, v: &mut [F::Elem]) {
        assert_eq!(v.len(), self.width, "vector length must match the ambient dimension");
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if !self.field.is_zero(&v[c]) {
                let coeff = v[c].clone();
                self.axpy(v, &coeff, row);
            }
        }
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| self.field.is_zero(x))
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<F::Elem>) -> bool {
        self.reduce(&mut v);
        let Some(c) = v.iter().position(|x| !self.field.is_zero(x)) else {
            return false;
        };
        let inv = self.field.inv(&v[c]).expect("nonzero pivot");
        for x in v.iter_mut() {
            if !self.field.is_zero(x) {
                *x = self.field.mul(x, &inv);
            }
        }
        let mut rows = std::mem::take(&mut self.rows);
        for row in rows.iter_mut() {
            if !self.field.is_zero(&row[c]) {
                let coeff = row[c].clone();
                self.axpy(row, &coeff, &v);
            }
        }
        self.rows = rows;
        self.rows.push(v);
        self.pivots.push(c);
        true
    }

    /// Basis of `{x : r · x = 0 for every stored row r}`, one vector per
    /// free column in increasing column order.
    pub fn nullspace(&self) -> Vec<Vec<F::Elem>> {
        let mut is_pivot = vec![false; self.width];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.width)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = vec![self.field.zero(); self.width];
                x[f] = self.field.one();
                for (row, &c) in self.rows.iter().zip(&self.pivots) {
                    x[c] = self.field.neg(&row[f]);
                }
                x
            })
            .collect()
    }
}
