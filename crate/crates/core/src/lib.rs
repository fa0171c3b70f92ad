//! Exact deformation diagnostics for G-valued Weil–Deligne representations.
//!
//! Everything is computed over ℚ or ℚ(√p) with exact rationals: group
//! models and their Lie algebras, sl₂-triples, Weil–Deligne points, the
//! tangent-obstruction complex and its duality, smooth point construction,
//! the (φ,N)-module bridge and Hodge-type dimension bookkeeping.

pub mod cohomology;
pub mod document;
pub mod error;
pub mod groups;
pub mod linalg;
pub mod nilpotent;
pub mod phimod;
pub mod scalars;
pub mod smoothfactory;
pub mod wdrep;

pub use error::{Error, Result};
