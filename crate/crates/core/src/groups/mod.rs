//! Group models, their Lie algebras, gradings and morphisms.

mod grading;
pub(crate) mod model;
mod morphism;
mod oddness;

pub use grading::{dynamic_decomposition, integer_eigenspaces, Grading};
pub use model::{Factor, FactorKind, GroupElement, GroupModel, GroupSpec};
pub use morphism::Morphism;
pub use oddness::{oddness_fixed_dim, Oddness};
