//! Exact linear algebra: matrices, echelon forms, subspaces.

mod mat;
mod subspace;

pub use mat::{Echelon, Mat};
pub use subspace::Subspace;
