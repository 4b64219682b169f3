//! Exact computations around Schur–Weyl duality for tensor algebras viewed
//! as twisted commutative algebras (tcas).
//!
//! - [`partitions`]: partition arithmetic and enumeration.
//! - [`dims`]: Schur and Specht module dimensions with tableau oracles.
//! - [`symfunc`]: Schur-basis characters, Littlewood–Richardson products and
//!   the Schur functor on characters.
//! - [`tensor_algebra`]: words, the symmetric group action on `T(W)_n`,
//!   character tables and the Schur–Weyl decomposition.
//! - [`invariants`]: finite matrix groups acting on `T(W)`, invariant
//!   dimensions in every characteristic and new tca generators.
//! - [`growth`]: categorical Gelfand–Kirillov growth tables and slope fits.

pub mod dims;
pub mod error;
pub mod growth;
pub mod invariants;
pub mod json;
pub mod partitions;
pub mod symfunc;
pub mod tensor_algebra;

pub use error::{Error, Result};
pub use partitions::Partition;
