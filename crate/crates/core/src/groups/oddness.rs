//! Fixed dimensions of involutions on the derived Lie algebra.

use crate::error::{Error, Result};
use crate::groups::{GroupElement, GroupModel};
use crate::linalg::Mat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Oddness {
    pub fixed_dim: usize,
    pub target: usize,
    pub odd: bool,
}

/// `dim (𝔤⁰)^{Ad c}` for an involution `c`, compared with `dim G − dim B`.
/// `borel_dim` overrides the catalog value.
pub fn oddness_fixed_dim(
    g: &GroupModel,
    c: &GroupElement,
    borel_dim: Option<usize>,
) -> Result<Oddness> {
    g.check_member(c)?;
    if !g.is_identity(&g.mul(c, c)) {
        return Err(Error::InvalidTwist("element does not square to the identity".into()));
    }
    let ad = g.ad_matrix(c).sub(&Mat::identity(g.group_dim));
    let fixed = ad.kernel().intersect(&g.derived_subspace())?;
    let target = g.group_dim - borel_dim.unwrap_or(g.borel_dim);
    Ok(Oddness { fixed_dim: fixed.dim(), target, odd: fixed.dim() == target })
}
