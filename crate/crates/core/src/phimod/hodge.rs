//! Hodge types, the filtered complex in the split case, and the local
//! dimension count.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::GroupModel;
use crate::linalg::{Mat, Subspace};
use crate::nilpotent::Cocharacter;
use crate::scalars::Scalar;
use crate::wdrep::WDPoint;

/// One cocharacter per embedding `K ↪ E`.
#[derive(Clone, Debug)]
pub struct HodgeType {
    pub cochars: Vec<Cocharacter>,
}

impl HodgeType {
    pub fn new(cochars: Vec<Cocharacter>) -> Self {
        HodgeType { cochars }
    }

    /// `[K:ℚ_p]` copies of the same cocharacter.
    pub fn constant(lambda: Cocharacter, degree: usize) -> Self {
        HodgeType { cochars: vec![lambda; degree] }
    }

    pub fn degree(&self) -> usize {
        self.cochars.len()
    }
}

/// `Σ_i dim 𝔤_{<0}(λ_i)`, the dimension of the flag variety of the type.
pub fn hodge_dim(_g: &GroupModel, v: &HodgeType) -> usize {
    v.cochars.iter().map(|c| c.grading.lt(0).dim()).sum()
}

/// Every centralizer `𝔤_0(λ_i)` is a Cartan subalgebra.
pub fn is_regular(g: &GroupModel, v: &HodgeType) -> bool {
    v.cochars.iter().all(|c| c.grading.dim(0) == g.rank)
}

/// `1 + dim G` (or `dim G^der` with fixed determinant), plus the Hodge
/// contribution when `l = p`.
pub fn local_dim(
    g: &GroupModel,
    _fk: u32,
    hodge: Option<&HodgeType>,
    fixed_det: bool,
    l_equals_p: bool,
) -> Result<usize> {
    let base = if fixed_det { g.derived_dim() } else { g.dim() };
    let extra = match (l_equals_p, hodge) {
        (false, _) => 0,
        (true, Some(v)) => hodge_dim(g, v),
        (true, None) => return Err(Error::InvalidPoint("a Hodge type is required when l = p".into())),
    };
    Ok(1 + base + extra)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FilteredDims {
    pub h0: usize,
    pub h1: usize,
    pub h2: usize,
    /// `dim 𝔤/Fil⁰`.
    pub quotient_dim: usize,
    /// `dim G − h0 + h1`.
    pub tangent_dim: usize,
}

/// Total complex of the filtered square for a split point (`f_K = 1`,
/// trivial inertia). With `Φ = Φ_WD⁻¹` the module Frobenius and
/// `Fil⁰ = 𝔤_{≥0}(λ_fil)`:
///
/// `d0 : X ↦ ((1 − AdΦ)X, ad_N X, X mod Fil⁰)`,
/// `d1 : (f, g, c) ↦ ad_N f + (p·AdΦ − 1) g`.
pub fn filtered_cohomology(x: &WDPoint, lambda_fil: &Cocharacter) -> Result<FilteredDims> {
    x.ensure_valid()?;
    let g = &x.group;
    if x.fk != 1 || x.inertia.d != 1 || x.inertia.tau.iter().any(|t| !g.is_identity(t)) {
        return Err(Error::Unsupported("the filtered complex needs f_K = 1 and trivial inertia".into()));
    }
    if lambda_fil.h.len() != g.group_dim {
        return Err(Error::Dimension("filtration cocharacter".into()));
    }
    let n = g.group_dim;
    let ad_phi = g.ad_matrix(&g.inv(&x.phi));
    let ad_n = x.ad_n();
    let id = Mat::identity(n);
    let fil0 = lambda_fil.grading.ge(0);
    let proj = quotient_map(&fil0);
    let q = proj.rows();
    let d0 = id.sub(&ad_phi).vstack(&ad_n)?.vstack(&proj)?;
    let p = Scalar::from_int(x.p as i64);
    let d1 = ad_n.hstack(&ad_phi.scale(&p).sub(&id))?.hstack(&Mat::zeros(n, q))?;
    debug_assert!(d1.mul(&d0).is_zero());
    let r0 = d0.rank();
    let r1 = d1.rank();
    let h0 = n - r0;
    let h1 = 2 * n + q - r1 - r0;
    let h2 = n - r1;
    Ok(FilteredDims { h0, h1, h2, quotient_dim: q, tangent_dim: g.dim() + h1 - h0 })
}

/// Rows giving coordinates on `𝔤/W` along the complement of `W` spanned by
/// unit vectors.
fn quotient_map(w: &Subspace) -> Mat {
    let n = w.ambient();
    let comp = w.complement_basis();
    if comp.is_empty() {
        return Mat::zeros(0, n);
    }
    // write e_j = w-part + Σ c_k comp_k and keep the c's
    let mut cols = w.basis().to_vec();
    cols.extend(comp.iter().cloned());
    let change = Mat::from_cols(&cols, n).inverse().expect("complement spans");
    let k = w.dim();
    Mat::from_rows((k..n).map(|r| change.row(r).to_vec()).collect()).expect("rows of equal length")
}
