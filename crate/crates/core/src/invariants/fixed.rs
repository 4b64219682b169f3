//! Invariants of a finite group in `T(W)_n`: exact kernels in any
//! characteristic, and averaging formulas when `p ∤ |G|`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};
use serde_json::Value;
use std::collections::BTreeMap;

use super::field::{as_natural, Field, Rationals};
use super::group::MatrixGroup;
use super::linalg::{kron_rows, mat_mul, trace, EchelonBasis, Matrix};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::tensor_algebra::{word_count, SnCharacter};

/// Largest word basis `m^n` on which kernels are computed.
pub const DEFAULT_DIMENSION_CAP: usize = 6561;

/// Largest degree for equivariant characters.
pub const EQUIVARIANT_CHARACTER_LIMIT: usize = 8;

/// `T(W)^G_n` as an explicit basis of coefficient vectors on the
/// lexicographic word basis.
#[derive(Clone, Debug)]
pub struct InvariantSpace<F: Field> {
    field: F,
    size: usize,
    degree: usize,
    basis: Vec<Vec<F::Elem>>,
}

impl<F: Field> InvariantSpace<F> {
    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.basis
    }

    /// Reads back the serialized form, checking the field, the vector lengths
    /// and linear independence. Invariance itself is not rechecked.
    pub fn from_json(field: F, value: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("invariant space: {what}"));
        let spec: super::field::FieldSpec =
            serde_json::from_value(value.get("field").cloned().ok_or_else(|| bad("missing field"))?)
                .map_err(|e| bad(&e.to_string()))?;
        if spec != field.spec() {
            return Err(bad("field does not match"));
        }
        let get = |k: &str| value.get(k).and_then(Value::as_u64).map(|x| x as usize).ok_or_else(|| bad(k));
        let (size, degree) = (get("size")?, get("degree")?);
        let width = word_count(size, degree).ok_or_else(|| bad("word basis too large"))?;
        let rows = value.get("basis").and_then(Value::as_array).ok_or_else(|| bad("missing basis"))?;
        let mut echelon = EchelonBasis::new(field.clone(), width);
        let mut basis = Vec::new();
        for row in rows {
            let entries = row.as_array().filter(|r| r.len() == width).ok_or_else(|| bad("vector length"))?;
            let v = entries
                .iter()
                .map(|x| crate::json::parse_rational(x).and_then(|q| field.from_rational(&q)))
                .collect::<Result<Vec<_>>>()?;
            if !echelon.insert(v.clone()) {
                return Err(bad("basis vectors are dependent"));
            }
            basis.push(v);
        }
        Ok(InvariantSpace { field, size, degree, basis })
    }
}

impl<F: Field> Serialize for InvariantSpace<F> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let basis: Vec<Vec<Value>> =
            self.basis.iter().map(|v| v.iter().map(|x| self.field.to_json(x)).collect()).collect();
        let mut st = s.serialize_struct("InvariantSpace", 4)?;
        st.serialize_field("field", &self.field.spec())?;
        st.serialize_field("size", &self.size)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("basis", &basis)?;
        st.end()
    }
}

fn checked_width(m: usize, n: usize, cap: usize) -> Result<usize> {
    match word_count(m, n) {
        Some(w) if w <= cap => Ok(w),
        _ => Err(Error::SizeGuard { what: "word basis", size: m.saturating_pow(n as u32), limit: cap }),
    }
}

/// Row `w` of `g^{⊗n}` on the word basis.
pub(crate) fn tensor_power_row<F: Field>(field: &F, g: &Matrix<F::Elem>, n: usize, mut w: usize) -> Vec<F::Elem> {
    let m = g.size();
    let mut letters = vec![0; n];
    for t in (0..n).rev() {
        letters[t] = w % m;
        w /= m;
    }
    let rows: Vec<&[F::Elem]> = letters.iter().map(|&i| g.row(i)).collect();
    kron_rows(field, &rows)
}

/// Exact basis of `T(W)^G_n`: the common kernel of `g^{⊗n} − I` over the
/// generators, which cuts out the same space as all group elements.
pub fn fixed_space<F: Field>(group: &MatrixGroup<F>, n: usize) -> Result<InvariantSpace<F>> {
    fixed_space_capped(group, n, DEFAULT_DIMENSION_CAP)
}

pub fn fixed_space_capped<F: Field>(group: &MatrixGroup<F>, n: usize, cap: usize) -> Result<InvariantSpace<F>> {
    let field = group.field();
    let width = checked_width(group.size(), n, cap)?;
    let mut relations = EchelonBasis::new(field.clone(), width);
    for g in group.generators() {
        for w in 0..width {
            if relations.rank() == width {
                break;
            }
            let mut row = tensor_power_row(field, g, n, w);
            row[w] = field.sub(&row[w], &field.one());
            relations.insert(row);
        }
    }
    Ok(InvariantSpace { field: field.clone(), size: group.size(), degree: n, basis: relations.nullspace() })
}

/// Dimensions of `T(W)^G_n` for `n = 0..=max_degree` by averaging
/// `(tr g)^n` over the group. Refused when `p | |G|`.
pub fn molien_dims<F: Field>(group: &MatrixGroup<F>, max_degree: usize) -> Result<Vec<BigUint>> {
    let model = group.characteristic_zero_model()?;
    let traces: Vec<BigRational> = model.iter().map(|g| trace(&Rationals, g)).collect();
    let order = BigRational::from_integer(BigInt::from(model.len()));
    let mut powers = vec![BigRational::one(); traces.len()];
    let mut dims = Vec::with_capacity(max_degree + 1);
    for n in 0..=max_degree {
        if n > 0 {
            for (p, t) in powers.iter_mut().zip(&traces) {
                *p = &*p * t;
            }
        }
        let avg = powers.iter().fold(BigRational::zero(), |acc, x| acc + x) / &order;
        dims.push(as_natural(&avg).ok_or_else(|| Error::BadMultiplicity(format!("average {avg} in degree {n}")))?);
    }
    Ok(dims)
}

/// `S_n`-character of `T(W)^G_n` together with its Specht multiplicities.
/// At cycle type ρ the value is the group average of `∏_ℓ tr(g^ℓ)`.
pub fn equivariant_character<F: Field>(
    group: &MatrixGroup<F>,
    n: usize,
) -> Result<(SnCharacter, BTreeMap<Partition, BigUint>)> {
    if n > EQUIVARIANT_CHARACTER_LIMIT {
        return Err(Error::SizeGuard { what: "equivariant character", size: n, limit: EQUIVARIANT_CHARACTER_LIMIT });
    }
    let model = group.characteristic_zero_model()?;
    // power_traces[g][ℓ - 1] = tr(g^ℓ)
    let power_traces: Vec<Vec<BigRational>> = model
        .iter()
        .map(|g| {
            let mut acc = g.clone();
            let mut out = Vec::with_capacity(n);
            for _ in 0..n {
                out.push(trace(&Rationals, &acc));
                acc = mat_mul(&Rationals, &acc, g);
            }
            out
        })
        .collect();
    let order = BigRational::from_integer(BigInt::from(model.len()));
    let chi = SnCharacter::from_fn(n, |rho| {
        let total = power_traces.iter().fold(BigRational::zero(), |acc, tr| {
            acc + rho.parts().iter().fold(BigRational::one(), |prod, &l| prod * &tr[l - 1])
        });
        total / &order
    });
    let mults = chi.multiplicities()?;
    Ok((chi, mults))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dims::specht_dim;
    use crate::invariants::field::PrimeField;
    use crate::invariants::group::{int_matrix, symmetric_group};
    use crate::invariants::linalg::identity;
    use crate::tensor_algebra::tensor_power_character;

    fn nat(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    fn rational_group(m: usize, gens: &[&[&[i64]]]) -> MatrixGroup<Rationals> {
        let gens = gens.iter().map(|g| int_matrix(&Rationals, g)).collect();
        MatrixGroup::generate(Rationals, m, gens, 1000).unwrap()
    }

    fn swap() -> MatrixGroup<Rationals> {
        rational_group(2, &[&[&[0, 1], &[1, 0]]])
    }

    /// Invariant dimension as the number of orbits of the group on words,
    /// valid for permutation groups in every characteristic.
    fn orbit_count(perms: &[Vec<usize>], m: usize, n: usize) -> usize {
        let total = m.pow(n as u32);
        let mut seen = vec![false; total];
        let mut orbits = 0;
        for start in 0..total {
            if seen[start] {
                continue;
            }
            orbits += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(w) = stack.pop() {
                for p in perms {
                    let mut letters = Vec::new();
                    let mut x = w;
                    for _ in 0..n {
                        letters.push(p[x % m]);
                        x /= m;
                    }
                    let image = letters.iter().rev().fold(0, |acc, &l| acc * m + l);
                    if !seen[image] {
                        seen[image] = true;
                        stack.push(image);
                    }
                }
            }
        }
        orbits
    }

    #[test]
    fn molien_examples() {
        let trivial = MatrixGroup::generate(Rationals, 2, vec![identity(&Rationals, 2)], 10).unwrap();
        assert_eq!(molien_dims(&trivial, 3).unwrap(), nat(&[1, 2, 4, 8]));
        let minus = rational_group(2, &[&[&[-1, 0], &[0, -1]]]);
        assert_eq!(molien_dims(&minus, 3).unwrap(), nat(&[1, 0, 4, 0]));
        assert_eq!(molien_dims(&swap(), 2).unwrap()[2], BigUint::from(2u32));
        let f2 = PrimeField::new(2).unwrap();
        assert!(matches!(molien_dims(&symmetric_group(f2, 2).unwrap(), 3), Err(Error::ModularAveraging { .. })));
    }

    #[test]
    fn fixed_space_examples() {
        let trivial = MatrixGroup::generate(Rationals, 2, vec![identity(&Rationals, 2)], 10).unwrap();
        assert_eq!(fixed_space(&trivial, 3).unwrap().dim(), 8);
        let s = fixed_space(&swap(), 2).unwrap();
        assert_eq!(s.dim(), 2);
        // e11 + e22 and e12 + e21
        let q = |v: &[i64]| v.iter().map(|&x| BigRational::from_integer(x.into())).collect::<Vec<_>>();
        let mut span = EchelonBasis::new(Rationals, 4);
        for b in s.basis() {
            span.insert(b.clone());
        }
        assert!(span.contains(&q(&[1, 0, 0, 1])) && span.contains(&q(&[0, 1, 1, 0])));
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(fixed_space(&symmetric_group(f2, 2).unwrap(), 3).unwrap().dim(), 4);
        assert!(matches!(fixed_space_capped(&trivial, 4, 15), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn permutation_groups_match_orbit_counts() {
        let f2 = PrimeField::new(2).unwrap();
        let f3 = PrimeField::new(3).unwrap();
        let s2 = vec![vec![1, 0]];
        let s3 = vec![vec![1, 0, 2], vec![1, 2, 0]];
        for n in 1..=5 {
            assert_eq!(fixed_space(&symmetric_group(f2, 2).unwrap(), n).unwrap().dim(), orbit_count(&s2, 2, n));
            assert_eq!(fixed_space(&symmetric_group(Rationals, 2).unwrap(), n).unwrap().dim(), orbit_count(&s2, 2, n));
        }
        for n in 1..=4 {
            assert_eq!(fixed_space(&symmetric_group(f3, 3).unwrap(), n).unwrap().dim(), orbit_count(&s3, 3, n));
        }
    }

    #[test]
    fn molien_agrees_with_kernel() {
        let c3 = rational_group(2, &[&[&[0, -1], &[1, -1]]]);
        let minus = rational_group(1, &[&[&[-1]]]);
        let f5 = PrimeField::new(5).unwrap();
        let s3_f5 = symmetric_group(f5, 3).unwrap();
        for n in 0..=5 {
            for g in [&c3, &minus, &swap()] {
                assert_eq!(molien_dims(g, n).unwrap()[n], BigUint::from(fixed_space(g, n).unwrap().dim()));
            }
        }
        for n in 0..=4 {
            assert_eq!(molien_dims(&s3_f5, n).unwrap()[n], BigUint::from(fixed_space(&s3_f5, n).unwrap().dim()));
        }
    }

    #[test]
    fn equivariant_character_examples() {
        let trivial = MatrixGroup::generate(Rationals, 2, vec![identity(&Rationals, 2)], 10).unwrap();
        for n in 1..=4 {
            assert_eq!(equivariant_character(&trivial, n).unwrap().0, tensor_power_character(2, n).unwrap());
        }
        let (chi, mults) = equivariant_character(&swap(), 2).unwrap();
        assert_eq!(chi.dimension(), &BigRational::from_integer(2.into()));
        assert_eq!(mults[&Partition::row(2)], BigUint::from(2u32));
        assert_eq!(mults[&Partition::column(2)], BigUint::zero());

        let c3 = rational_group(2, &[&[&[0, -1], &[1, -1]]]);
        for n in 1..=6 {
            let (chi, mults) = equivariant_character(&c3, n).unwrap();
            let molien = molien_dims(&c3, n).unwrap();
            assert_eq!(as_natural(chi.dimension()).unwrap(), molien[n]);
            let weighted: BigUint = mults.iter().map(|(lam, k)| k * specht_dim(lam)).sum();
            assert_eq!(weighted, molien[n]);
        }
        assert!(matches!(equivariant_character(&c3, 9), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn json_round_trip() {
        let f2 = PrimeField::new(2).unwrap();
        let space = fixed_space(&symmetric_group(f2, 2).unwrap(), 3).unwrap();
        let value = serde_json::to_value(&space).unwrap();
        assert_eq!(value["field"], serde_json::json!({"kind": "prime", "p": 2}));
        let back = InvariantSpace::from_json(f2, &value).unwrap();
        assert_eq!(back.basis(), space.basis());
        assert!(InvariantSpace::from_json(PrimeField::new(3).unwrap(), &value).is_err());

        let space = fixed_space(&swap(), 2).unwrap();
        let back = InvariantSpace::from_json(Rationals, &serde_json::to_value(&space).unwrap()).unwrap();
        assert_eq!(back.basis(), space.basis());
    }
}
