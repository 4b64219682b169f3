//! Finite matrix groups `G ⊂ GL(W)` acting letterwise on `T(W)`.
//!
//! Kernels ([`fixed_space`]) are exact in every characteristic, including
//! the modular case `p | |G|`. Averaging formulas ([`molien_dims`],
//! [`equivariant_character`]) need `p ∤ |G|` and refuse otherwise.

pub mod field;
pub mod fixed;
pub mod flat;
pub mod generators;
pub mod group;
pub mod linalg;

pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use fixed::{equivariant_character, fixed_space, fixed_space_capped, molien_dims, InvariantSpace};
pub use flat::{flat_weight_crosscheck, flat_weight_report, CrosscheckReport};
pub use generators::{new_generators_dims, power_sum_vector, DegreeReport, GeneratorAnalysis};
pub use group::{AnyGroup, GroupFile, MatrixGroup, DEFAULT_GROUP_CAP};
