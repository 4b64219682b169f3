//! Finite matrix groups given by generators, closed by breadth-first
//! multiplication.

use std::collections::HashMap;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::field::{Field, FieldSpec, PrimeField, Rationals};
use super::linalg::{identity, mat_mul, rank, Matrix};
use crate::error::{Error, Result};
use crate::json;

pub const DEFAULT_GROUP_CAP: usize = 10_000;

/// A finite subgroup of `GL_m` over an exact field. `elements` is the full
/// closure of `generators`, identity first, in breadth-first order.
#[derive(Clone, Debug)]
pub struct MatrixGroup<F: Field> {
    field: F,
    size: usize,
    generators: Vec<Matrix<F::Elem>>,
    elements: Vec<Matrix<F::Elem>>,
}

impl<F: Field> MatrixGroup<F> {
    /// Closes `generators` under multiplication. Fails on non-square or
    /// singular generators and when more than `cap` elements appear.
    pub fn generate(field: F, size: usize, generators: Vec<Matrix<F::Elem>>, cap: usize) -> Result<Self> {
        for (k, g) in generators.iter().enumerate() {
            if g.size() != size {
                return Err(Error::InvalidMatrix(format!("generator {k} is {0}x{0}, expected {size}x{size}", g.size())));
            }
            if rank(&field, g.rows(), size) < size {
                return Err(Error::SingularGenerator(k));
            }
        }

        let id = identity(&field, size);
        let mut elements = vec![id.clone()];
        let mut seen = HashMap::from([(id, 0usize)]);
        let mut next = 0;
        while next < elements.len() {
            let current = elements[next].clone();
            for g in &generators {
                let h = mat_mul(&field, g, &current);
                if !seen.contains_key(&h) {
                    if elements.len() >= cap {
                        return Err(Error::GroupTooLarge(cap));
                    }
                    seen.insert(h.clone(), elements.len());
                    elements.push(h);
                }
            }
            next += 1;
        }
        Ok(MatrixGroup { field, size, generators, elements })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// `dim W`.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Matrix<F::Elem>] {
        &self.generators
    }

    pub fn elements(&self) -> &[Matrix<F::Elem>] {
        &self.elements
    }

    /// True when the characteristic divides the group order.
    pub fn is_modular(&self) -> bool {
        let p = self.field.characteristic();
        p != 0 && (self.order() as u64).is_multiple_of(p)
    }

    /// The group elements as rational matrices forming an isomorphic group
    /// over a field of characteristic zero, so that averaging formulas
    /// compute dimensions over this field.
    ///
    /// Over the rationals this is the group itself. Over `F_p` with
    /// `p ∤ |G|`, each element is lifted entrywise to `(-p/2, p/2]`; the
    /// lift is accepted when `lift(g) · lift(h) = lift(g h)` holds over the
    /// integers for every generator `g` and element `h`, which makes the
    /// lifted set a group mapping isomorphically onto `G`. Invariants of a
    /// non-modular group then commute with reduction mod `p`.
    pub fn characteristic_zero_model(&self) -> Result<Vec<Matrix<BigRational>>> {
        let p = self.field.characteristic();
        if self.is_modular() {
            return Err(Error::ModularAveraging { p, order: self.order() });
        }
        let lifted: Vec<Matrix<BigRational>> = self.elements.iter().map(|g| g.map(|x| self.field.lift(x))).collect();
        if p == 0 {
            return Ok(lifted);
        }
        let index: HashMap<&Matrix<F::Elem>, usize> = self.elements.iter().enumerate().map(|(i, g)| (g, i)).collect();
        for g in &self.generators {
            let lg = g.map(|x| self.field.lift(x));
            for (h, lh) in self.elements.iter().zip(&lifted) {
                let gh = mat_mul(&self.field, g, h);
                if mat_mul(&Rationals, &lg, lh) != lifted[index[&gh]] {
                    return Err(Error::NoIntegralLift(p));
                }
            }
        }
        Ok(lifted)
    }
}

/// On-disk group description:
/// `{"field": {...}, "size": m, "generators": [[[row], ...], ...]}` with
/// entries given as integers or `"a/b"` strings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupFile {
    pub field: FieldSpec,
    pub size: usize,
    pub generators: Vec<Vec<Vec<Value>>>,
}

impl GroupFile {
    fn parse_generators<F: Field>(&self, field: &F) -> Result<Vec<Matrix<F::Elem>>> {
        self.generators
            .iter()
            .enumerate()
            .map(|(k, rows)| {
                let rows = rows
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|v| json::parse_rational(v).and_then(|q| field.from_rational(&q)))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                Matrix::from_rows(rows).ok_or_else(|| Error::InvalidMatrix(format!("generator {k} is not square")))
            })
            .collect()
    }

    /// Parses and closes the group.
    pub fn load(&self, cap: usize) -> Result<AnyGroup> {
        self.field.validate()?;
        match self.field {
            FieldSpec::Rational => {
                let gens = self.parse_generators(&Rationals)?;
                Ok(AnyGroup::Rational(MatrixGroup::generate(Rationals, self.size, gens, cap)?))
            }
            FieldSpec::Prime { p } => {
                let field = PrimeField::new(p)?;
                let gens = self.parse_generators(&field)?;
                Ok(AnyGroup::Prime(MatrixGroup::generate(field, self.size, gens, cap)?))
            }
        }
    }
}

/// A group over whichever field its description named.
#[derive(Clone, Debug)]
pub enum AnyGroup {
    Rational(MatrixGroup<Rationals>),
    Prime(MatrixGroup<PrimeField>),
}

impl AnyGroup {
    pub fn order(&self) -> usize {
        match self {
            AnyGroup::Rational(g) => g.order(),
            AnyGroup::Prime(g) => g.order(),
        }
    }

    pub fn field_spec(&self) -> FieldSpec {
        match self {
            AnyGroup::Rational(g) => g.field().spec(),
            AnyGroup::Prime(g) => g.field().spec(),
        }
    }
}

/// Permutation matrices of the given images (`images[j]` is where basis
/// vector `j` goes).
pub fn permutation_matrix<F: Field>(field: &F, images: &[usize]) -> Matrix<F::Elem> {
    let n = images.len();
    let mut rows = vec![vec![field.zero(); n]; n];
    for (j, &i) in images.iter().enumerate() {
        rows[i][j] = field.one();
    }
    Matrix::from_rows(rows).expect("square")
}

pub fn int_matrix<F: Field>(field: &F, rows: &[&[i64]]) -> Matrix<F::Elem> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| field.from_int(x)).collect()).collect())
        .expect("square integer matrix")
}

/// `S_m` permuting the coordinates of `k^m`, generated by a transposition
/// and an `m`-cycle.
pub fn symmetric_group<F: Field>(field: F, m: usize) -> Result<MatrixGroup<F>> {
    let mut gens = Vec::new();
    if m >= 2 {
        let mut swap: Vec<usize> = (0..m).collect();
        swap.swap(0, 1);
        gens.push(permutation_matrix(&field, &swap));
        if m >= 3 {
            let cycle: Vec<usize> = (0..m).map(|i| (i + 1) % m).collect();
            gens.push(permutation_matrix(&field, &cycle));
        }
    }
    MatrixGroup::generate(field, m, gens, DEFAULT_GROUP_CAP)
}
