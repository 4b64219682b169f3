//! Categorical Gelfand–Kirillov growth functions `f_{A;V}(N)`: the length
//! of the part of `A` generated in degrees `≤ N`, for the free tca `T(W)`,
//! `Sym(triv_2)` and the `SL_2`-invariants of `T(k^2)`, and log-log slope
//! fits estimating the growth exponent.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::dims::{LengthOracle, TwoRowLengths};
use crate::error::{Error, Result};
use crate::invariants::FieldSpec;
use crate::json;
use crate::partitions::{enumerate_partitions, partition_counts, Partition};

pub const SYM_TRIV2_LIMIT: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthEntry {
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(with = "json::biguint_number")]
    pub f: BigUint,
}

/// `f(N)` for `N = 0..=max` (or whatever rows were read back).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthTable {
    pub family: String,
    pub characteristic: u64,
    pub entries: Vec<GrowthEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl GrowthTable {
    /// Checks that `N` strictly increases and `f` weakly increases.
    pub fn new(family: impl Into<String>, characteristic: u64, entries: Vec<GrowthEntry>) -> Result<Self> {
        for pair in entries.windows(2) {
            if pair[1].n <= pair[0].n {
                return Err(Error::Parse(format!("table rows must have increasing N ({} after {})", pair[1].n, pair[0].n)));
            }
            if pair[1].f < pair[0].f {
                return Err(Error::Parse(format!("f decreases at N = {}", pair[1].n)));
            }
        }
        Ok(GrowthTable { family: family.into(), characteristic, entries, notes: Vec::new() })
    }

    fn from_values(family: String, characteristic: u64, values: Vec<BigUint>) -> Self {
        let entries = values.into_iter().enumerate().map(|(n, f)| GrowthEntry { n, f }).collect();
        GrowthTable { family, characteristic, entries, notes: Vec::new() }
    }

    pub fn value(&self, n: usize) -> Option<&BigUint> {
        self.entries.binary_search_by_key(&n, |e| e.n).ok().map(|k| &self.entries[k].f)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("N,f\n");
        for e in &self.entries {
            writeln!(out, "{},{}", e.n, e.f).expect("writing to a String");
        }
        out
    }

    /// Reads `N,f` rows; the header line is optional. CSV carries no
    /// metadata, so the family is recorded as `"csv"` in characteristic 0.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (k, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || (k == 0 && line.eq_ignore_ascii_case("N,f")) {
                continue;
            }
            let bad = || Error::Parse(format!("line {}: expected `N,f`, got {line:?}", k + 1));
            let (n, f) = line.split_once(',').ok_or_else(bad)?;
            let n = n.trim().parse().map_err(|_| bad())?;
            let f = f.trim().parse().map_err(|_| bad())?;
            entries.push(GrowthEntry { n, f });
        }
        GrowthTable::new("csv", 0, entries)
    }

    /// Accepts either the JSON form or CSV.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            let t: GrowthTable = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
            let notes = t.notes.clone();
            let mut checked = GrowthTable::new(t.family, t.characteristic, t.entries)?;
            checked.notes = notes;
            Ok(checked)
        } else {
            GrowthTable::from_csv(text)
        }
    }
}

/// Weyl's formula `∏_{i<j} (λ_i − λ_j + j − i)/(j − i)` for `dim S_λ(k^m)`,
/// `O(m²)` per shape.
fn weyl_dim(shape: &Partition, m: usize) -> BigUint {
    if shape.len() > m {
        return BigUint::zero();
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..m {
        for j in i + 1..m {
            num *= shape.part(i) - shape.part(j) + j - i;
            den *= j - i;
        }
    }
    num / den
}

/// `len(S^λ) = 1` for every shape. Exact in characteristic 0; in
/// characteristic `p` it turns a growth table into a lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnitLengths {
    pub characteristic: u64,
}

impl LengthOracle for UnitLengths {
    fn characteristic(&self) -> u64 {
        self.characteristic
    }

    fn length(&self, _: &Partition) -> Option<u64> {
        Some(1)
    }
}

/// `g(n) = Σ_{λ ⊢ n} dim S_λ(k^m) · len(S^λ)` for `n = 0..=top`.
fn free_tca_pieces(m: usize, top: usize, lengths: &dyn LengthOracle) -> Result<Vec<BigUint>> {
    (0..=top)
        .map(|n| {
            enumerate_partitions(n, Some(m)).iter().try_fold(BigUint::zero(), |acc, lam| {
                let len = lengths.length(lam).ok_or_else(|| {
                    Error::UnsupportedLength(format!(
                        "len(S^({lam})) in characteristic {}; supply a length oracle covering it",
                        lengths.characteristic()
                    ))
                })?;
                Ok(acc + weyl_dim(lam, m) * len)
            })
        })
        .collect()
}

fn prefix_sums(pieces: &[BigUint]) -> Vec<BigUint> {
    let mut acc = BigUint::zero();
    pieces
        .iter()
        .map(|x| {
            acc += x;
            acc.clone()
        })
        .collect()
}

fn check_free_tca(m: usize, field: FieldSpec, lengths: &dyn LengthOracle) -> Result<()> {
    field.validate()?;
    if m == 0 {
        return Err(Error::UnsupportedGrowth("the free tca needs rank m >= 1".into()));
    }
    let p = field.characteristic();
    if p != 0 && m > 2 {
        return Err(Error::UnsupportedLength(format!(
            "characteristic {p} with rank {m}: Specht lengths with more than two rows are not available"
        )));
    }
    if lengths.characteristic() != p {
        return Err(Error::UnsupportedLength(format!(
            "the length oracle is for characteristic {}, the field has characteristic {p}",
            lengths.characteristic()
        )));
    }
    Ok(())
}

/// `f_{T(W);W}(N) = Σ_{|λ| ≤ N} dim S_λ(W) · len(S^λ)` with `W = k^m`,
/// for `N = 0..=max`. Characteristic `p > 0` needs `m ≤ 2` and an oracle
/// that knows the lengths of all shapes with at most two rows.
pub fn gk_free_tca(m: usize, field: FieldSpec, max: usize, lengths: &dyn LengthOracle) -> Result<GrowthTable> {
    gk_free_tca_generated(m, field, max, 1, lengths)
}

/// The free tca measured against the generating subobject `T(W)_{≤l}`:
/// `f_{T(W);V}(N) = f_{T(W);W}(l·N)`, since products of `N` elements of
/// degree `≤ l` fill out exactly the degrees `≤ l·N`.
pub fn gk_free_tca_generated(
    m: usize,
    field: FieldSpec,
    max: usize,
    generator_degree: usize,
    lengths: &dyn LengthOracle,
) -> Result<GrowthTable> {
    check_free_tca(m, field, lengths)?;
    if generator_degree == 0 {
        return Err(Error::UnsupportedGrowth("generator degree must be at least 1".into()));
    }
    let top = max
        .checked_mul(generator_degree)
        .ok_or(Error::SizeGuard { what: "free tca table", size: usize::MAX, limit: usize::MAX })?;
    let cumulative = prefix_sums(&free_tca_pieces(m, top, lengths)?);
    let values = (0..=max).map(|n| cumulative[n * generator_degree].clone()).collect();
    let family = if generator_degree == 1 {
        format!("free_tca(m={m})")
    } else {
        format!("free_tca(m={m},generators<={generator_degree})")
    };
    Ok(GrowthTable::from_values(family, field.characteristic(), values))
}

/// `Sym(triv_2)`: `f(N) = Σ_{i ≤ N} p(i)`. Exact in characteristic 0; in
/// characteristic `p` the same numbers are a lower bound, since every
/// Schur module has length at least one.
pub fn gk_sym_triv2(max: usize, field: FieldSpec) -> Result<GrowthTable> {
    field.validate()?;
    if max > SYM_TRIV2_LIMIT {
        return Err(Error::SizeGuard { what: "Sym(triv_2) table", size: max, limit: SYM_TRIV2_LIMIT });
    }
    let mut table =
        GrowthTable::from_values("sym_triv2".into(), field.characteristic(), prefix_sums(&partition_counts(max)));
    if field.characteristic() != 0 {
        table.notes.push("lower bound: every length is taken to be 1".into());
    }
    Ok(table)
}

/// `SL_2`-invariants of `T(k^2)`: one filtration piece `S^{(2^j)}` in each
/// even degree `2j`, so `f(N) = 1 + Σ_{1 ≤ j ≤ N/2} len(S^{(2^j)})`.
pub fn gk_sl2_invariants(field: FieldSpec, max: usize) -> Result<GrowthTable> {
    field.validate()?;
    let p = field.characteristic();
    let lengths = TwoRowLengths::new(p);
    let mut acc = BigUint::one();
    let mut values = Vec::with_capacity(max + 1);
    for n in 0..=max {
        if n > 0 && n % 2 == 0 {
            let len = lengths.length(&Partition::rectangle(n / 2, 2)).expect("rectangles are covered");
            acc += len;
        }
        values.push(acc.clone());
    }
    let mut table = GrowthTable::from_values("sl2_invariants".into(), p, values);
    if p != 0 {
        table.notes.push(format!(
            "len(S^(2^j)) = max(1, floor(log_{p}((j+1)/2))), an estimate floored at 1 where the logarithm gives 0"
        ));
    }
    Ok(table)
}

/// Least-squares line through `(ln N, ln f(N))` over a window.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SlopeEstimate {
    pub window: (usize, usize),
    pub points: usize,
    /// Decimal rendering of `slope_exact`.
    pub slope: String,
    /// The fitted `f64` slope as an exact binary fraction.
    pub slope_exact: String,
    /// Root mean square of the log residuals.
    pub residual: String,
}

impl SlopeEstimate {
    pub fn slope_f64(&self) -> f64 {
        self.slope.parse().expect("decimal slope")
    }

    pub fn residual_f64(&self) -> f64 {
        self.residual.parse().expect("decimal residual")
    }
}

/// Natural logarithm of a positive big integer.
fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 53 {
        return x.to_f64().expect("small").ln();
    }
    let shift = bits - 53;
    (x >> shift).to_f64().expect("53 bits").ln() + shift as f64 * std::f64::consts::LN_2
}

pub fn estimate_slope(table: &GrowthTable, window: (usize, usize)) -> Result<SlopeEstimate> {
    let (lo, hi) = window;
    if lo == 0 || lo >= hi {
        return Err(Error::InvalidWindow(format!("need 1 <= N_lo < N_hi, got {lo}:{hi}")));
    }
    let first = table.entries.first().map(|e| e.n);
    let last = table.entries.last().map(|e| e.n);
    if first.is_none_or(|f| f > lo) || last.is_none_or(|l| l < hi) {
        return Err(Error::InvalidWindow(format!("{lo}:{hi} is outside the table range")));
    }
    let points: Vec<(f64, f64)> = table
        .entries
        .iter()
        .filter(|e| (lo..=hi).contains(&e.n))
        .map(|e| {
            if e.f.is_zero() {
                Err(Error::InvalidWindow(format!("f({}) = 0 has no logarithm", e.n)))
            } else {
                Ok(((e.n as f64).ln(), ln_biguint(&e.f)))
            }
        })
        .collect::<Result<_>>()?;
    if points.len() < 2 {
        return Err(Error::InvalidWindow(format!("{lo}:{hi} holds fewer than two rows")));
    }
    let count = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / count;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / count;
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.0 - mean_x)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let slope = sxy / sxx;
    let sse: f64 = points.iter().map(|p| (p.1 - mean_y - slope * (p.0 - mean_x)).powi(2)).sum();
    let exact = BigRational::from_float(slope)
        .ok_or_else(|| Error::InvalidWindow(format!("slope {slope} is not finite")))?;
    Ok(SlopeEstimate {
        window,
        points: points.len(),
        slope: slope.to_string(),
        slope_exact: exact.to_string(),
        residual: (sse / count).sqrt().to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dims::{schur_dim, specht_dim};
    use crate::partitions::binomial;
    use crate::tensor_algebra::schur_weyl_decompose;
    use proptest::prelude::*;

    const Q: FieldSpec = FieldSpec::Rational;

    fn f(table: &GrowthTable, n: usize) -> u64 {
        table.value(n).unwrap().to_u64().unwrap()
    }

    fn power_table(max: usize, k: u32) -> GrowthTable {
        let entries = (0..=max).map(|n| GrowthEntry { n, f: BigUint::from(n).pow(k) }).collect();
        GrowthTable::new("power", 0, entries).unwrap()
    }

    #[test]
    fn weyl_matches_hook_content() {
        for n in 0..=9 {
            for lam in enumerate_partitions(n, None) {
                for m in 0..=4 {
                    assert_eq!(weyl_dim(&lam, m), schur_dim(&lam, m), "{lam} {m}");
                }
            }
        }
    }

    #[test]
    fn free_tca_examples() {
        let line = gk_free_tca(1, Q, 20, &TwoRowLengths::new(0)).unwrap();
        for n in 0..=20 {
            assert_eq!(f(&line, n), n as u64 + 1);
        }
        let plane = gk_free_tca(2, Q, 5, &TwoRowLengths::new(0)).unwrap();
        assert_eq!(f(&plane, 2), 7);
        // Σ_λ s_λ(x) = ∏ 1/(1 − x_i) ∏_{i<j} 1/(1 − x_i x_j); at x = t·(1^m)
        // the degree-n piece counts multisets of m weight-1 and C(m,2)
        // weight-2 items.
        for m in 1..=4usize {
            let mut series = vec![0u64; 31];
            series[0] = 1;
            let weights = std::iter::repeat_n(1, m).chain(std::iter::repeat_n(2, m * (m - 1) / 2));
            for w in weights {
                for n in w..=30 {
                    series[n] += series[n - w];
                }
            }
            let t = gk_free_tca(m, Q, 30, &TwoRowLengths::new(0)).unwrap();
            for n in 0..=30 {
                assert_eq!(f(&t, n), series[..=n].iter().sum::<u64>(), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn free_tca_refusals() {
        let f2 = FieldSpec::Prime { p: 2 };
        assert!(matches!(gk_free_tca(3, f2, 5, &UnitLengths { characteristic: 2 }), Err(Error::UnsupportedLength(_))));
        // the default oracle only knows rectangles
        assert!(matches!(gk_free_tca(2, f2, 5, &TwoRowLengths::new(2)), Err(Error::UnsupportedLength(_))));
        assert!(matches!(gk_free_tca(2, f2, 5, &TwoRowLengths::new(0)), Err(Error::UnsupportedLength(_))));
        assert!(matches!(gk_free_tca(2, FieldSpec::Prime { p: 4 }, 5, &UnitLengths { characteristic: 4 }), Err(Error::NotPrime(4))));
        let lower = gk_free_tca(2, f2, 10, &UnitLengths { characteristic: 2 }).unwrap();
        assert_eq!(lower, GrowthTable { characteristic: 2, ..gk_free_tca(2, Q, 10, &UnitLengths { characteristic: 0 }).unwrap() });
    }

    #[test]
    fn free_tca_matches_schur_weyl() {
        for m in 1..=3 {
            let t = gk_free_tca(m, Q, 8, &TwoRowLengths::new(0)).unwrap();
            for n in 1..=8 {
                let total: BigUint = schur_weyl_decompose(m, n).unwrap().values().sum();
                assert_eq!(t.value(n).unwrap() - t.value(n - 1).unwrap(), total, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn free_tca_with_degree_two_generators() {
        let a = gk_free_tca(2, Q, 40, &TwoRowLengths::new(0)).unwrap();
        let b = gk_free_tca_generated(2, Q, 20, 2, &TwoRowLengths::new(0)).unwrap();
        for n in 0..=20 {
            assert_eq!(b.value(n), a.value(2 * n));
        }
    }

    #[test]
    fn sym_triv2_examples() {
        let t = gk_sym_triv2(10, Q).unwrap();
        assert_eq!((f(&t, 0), f(&t, 1), f(&t, 5)), (1, 2, 19));
        let brute: usize = (0..=10).map(|n| enumerate_partitions(n, None).len()).sum();
        assert_eq!(f(&t, 10), brute as u64);
        let lower = gk_sym_triv2(10, FieldSpec::Prime { p: 3 }).unwrap();
        assert_eq!(lower.entries, t.entries);
        assert_eq!(lower.notes.len(), 1);
        assert!(matches!(gk_sym_triv2(10_001, Q), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn sl2_examples() {
        let t = gk_sl2_invariants(Q, 10).unwrap();
        assert_eq!(f(&t, 10), 6);
        assert_eq!(f(&t, 9), 5);
        assert_eq!(t.value(0), Some(&BigUint::one()));
        let t2 = gk_sl2_invariants(FieldSpec::Prime { p: 2 }, 20).unwrap();
        // pieces at j = 1..=10 with lengths 1,1,1,1,1,1,2,2,2,2
        assert_eq!(f(&t2, 20), 1 + 6 + 8);
        assert!(!t2.notes.is_empty());
    }

    #[test]
    fn catalan_pieces() {
        for m in 0..=6u32 {
            let catalan = binomial(2 * m as usize, m as usize) / BigUint::from(m + 1);
            let shape = Partition::new(vec![2; m as usize]).unwrap();
            assert_eq!(specht_dim(&shape), catalan);
            assert_eq!(TwoRowLengths::new(0).length(&shape), Some(1));
        }
        let t = gk_sl2_invariants(Q, 12).unwrap();
        for m in 1..=6 {
            assert_eq!(f(&t, 2 * m) - f(&t, 2 * m - 1), 1);
        }
    }

    #[test]
    fn slope_of_power_laws() {
        let linear = power_table(200, 1);
        assert_eq!(estimate_slope(&linear, (1, 200)).unwrap().slope_f64(), 1.0);
        assert_eq!(estimate_slope(&linear, (37, 91)).unwrap().slope_exact, "1");
        let cubic = power_table(100, 3);
        let est = estimate_slope(&cubic, (10, 100)).unwrap();
        assert!((est.slope_f64() - 3.0).abs() < 1e-9, "{est:?}");
        assert!(est.residual_f64() < 1e-9);
        assert_eq!(est.points, 91);
    }

    #[test]
    fn slope_windows() {
        let t = power_table(50, 2);
        assert!(matches!(estimate_slope(&t, (0, 10)), Err(Error::InvalidWindow(_))));
        assert!(matches!(estimate_slope(&t, (10, 10)), Err(Error::InvalidWindow(_))));
        assert!(matches!(estimate_slope(&t, (10, 51)), Err(Error::InvalidWindow(_))));
        let zero = GrowthTable::new("z", 0, vec![GrowthEntry { n: 1, f: BigUint::zero() }, GrowthEntry { n: 2, f: BigUint::one() }]).unwrap();
        assert!(matches!(estimate_slope(&zero, (1, 2)), Err(Error::InvalidWindow(_))));
    }

    #[test]
    fn big_logarithms() {
        let x = BigUint::from(3u32).pow(500);
        assert!((ln_biguint(&x) - 500.0 * 3f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn serialization() {
        let t = gk_sl2_invariants(FieldSpec::Prime { p: 2 }, 12).unwrap();
        let text = serde_json::to_string(&t).unwrap();
        assert!(text.contains(r#"{"N":0,"f":1}"#));
        assert_eq!(GrowthTable::parse(&text).unwrap(), t);
        let csv = t.to_csv();
        assert!(csv.starts_with("N,f\n0,1\n1,1\n2,2\n"));
        assert_eq!(GrowthTable::parse(&csv).unwrap().entries, t.entries);
        assert!(GrowthTable::from_csv("N,f\n0,2\n1,1\n").is_err());
        assert!(GrowthTable::from_csv("N,f\n1,2\n1,3\n").is_err());
        assert!(GrowthTable::from_csv("N,f\nx,1\n").is_err());
        // f beyond u64 survives both formats
        let big = GrowthTable::new("big", 0, vec![GrowthEntry { n: 0, f: BigUint::from(7u32).pow(40) }]).unwrap();
        assert_eq!(GrowthTable::parse(&serde_json::to_string(&big).unwrap()).unwrap(), big);
        assert_eq!(GrowthTable::from_csv(&big.to_csv()).unwrap().entries, big.entries);
    }

    proptest! {
        #[test]
        fn tables_are_monotone(m in 1usize..=3, max in 0usize..40) {
            let t = gk_free_tca(m, Q, max, &TwoRowLengths::new(0)).unwrap();
            prop_assert_eq!(t.value(0), Some(&BigUint::one()));
            prop_assert!(t.entries.windows(2).all(|w| w[0].f <= w[1].f));
            let s = gk_sl2_invariants(FieldSpec::Prime { p: 3 }, max).unwrap();
            prop_assert!(s.entries.windows(2).all(|w| w[0].f <= w[1].f));
        }
    }
}
