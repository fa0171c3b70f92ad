//! The three-term complex `V → V⊕V → V` computing `H^i(D_x)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Mat, Subspace};
use crate::scalars::Scalar;
use crate::wdrep::WDPoint;

/// `d0 : j ↦ ((1 − AdΦ)j, ad_N j)` and
/// `d1 : (f, g) ↦ ad_N f + (q⁻¹ AdΦ − 1) g` on `V = 𝔤^{τ(I)}`,
/// all in the echelon basis of `V`.
#[derive(Clone, Debug)]
pub struct WDComplex {
    pub v: Subspace,
    pub ad_phi: Mat,
    pub ad_n: Mat,
    pub q: Scalar,
    pub d0: Mat,
    pub d1: Mat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub h0: usize,
    pub h1: usize,
    pub h2: usize,
    pub dual_h0: usize,
    pub smooth: bool,
    pub tangent_dim_framed: usize,
}

impl WDComplex {
    pub fn from_operators(v: Subspace, ad_phi: Mat, ad_n: Mat, q: Scalar) -> Result<Self> {
        let k = v.dim();
        let id = Mat::identity(k);
        let d0 = id.sub(&ad_phi).vstack(&ad_n)?;
        let qi = q.inv()?;
        let d1 = ad_n.hstack(&ad_phi.scale(&qi).sub(&id))?;
        if !d1.mul(&d0).is_zero() {
            return Err(Error::InvalidPoint("d1 ∘ d0 ≠ 0".into()));
        }
        Ok(WDComplex { v, ad_phi, ad_n, q, d0, d1 })
    }

    pub fn dim_v(&self) -> usize {
        self.v.dim()
    }

    /// `(h0, h1, h2)`.
    pub fn dims(&self) -> (usize, usize, usize) {
        let k = self.dim_v();
        let r0 = self.d0.rank();
        let r1 = self.d1.rank();
        (k - r0, 2 * k - r1 - r0, k - r1)
    }

    /// Basis of `H⁰(D*(1))`: functionals `φ` on `V` with `φ∘ad_N = 0` and
    /// `φ∘AdΦ = q·φ`, as row vectors.
    pub fn dual_h0_basis(&self) -> Vec<Vec<Scalar>> {
        let k = self.dim_v();
        let a = self.ad_n.transpose();
        let b = self.ad_phi.transpose().sub(&Mat::scalar(k, self.q.clone()));
        a.vstack(&b).expect("same width").kernel().basis().to_vec()
    }

    /// Representatives of `H² = V / im d1`: unit vectors off the pivots of
    /// the echelon form of `im d1`.
    pub fn h2_representatives(&self) -> Vec<Vec<Scalar>> {
        self.d1.image().complement_basis()
    }

    /// `⟨φ_a, y_b⟩` between the two bases above.
    pub fn pairing_matrix(&self) -> Mat {
        let phis = self.dual_h0_basis();
        let ys = self.h2_representatives();
        let mut m = Mat::zeros(phis.len(), ys.len());
        for (a, phi) in phis.iter().enumerate() {
            for (b, y) in ys.iter().enumerate() {
                let mut acc = Scalar::zero();
                for (u, w) in phi.iter().zip(y) {
                    if !u.is_zero() && !w.is_zero() {
                        acc += &(u * w);
                    }
                }
                m[(a, b)] = acc;
            }
        }
        m
    }
}

/// Builds the complex of a valid point.
pub fn complex_of(x: &WDPoint) -> Result<WDComplex> {
    x.ensure_valid()?;
    let v = x.invariants_subspace();
    let ad_phi = v.restrict(&x.ad_phi())?;
    let ad_n = v.restrict(&x.ad_n())?;
    WDComplex::from_operators(v, ad_phi, ad_n, x.q())
}

pub fn cohomology_dims(x: &WDPoint) -> Result<(usize, usize, usize)> {
    Ok(complex_of(x)?.dims())
}

pub fn dual_h0_twisted(x: &WDPoint) -> Result<usize> {
    Ok(complex_of(x)?.dual_h0_basis().len())
}

pub fn pairing_matrix(x: &WDPoint) -> Result<Mat> {
    Ok(complex_of(x)?.pairing_matrix())
}

pub fn is_smooth(x: &WDPoint) -> Result<bool> {
    Ok(cohomology_dims(x)?.2 == 0)
}

pub fn report(x: &WDPoint) -> Result<CohomologyReport> {
    let c = complex_of(x)?;
    let (h0, h1, h2) = c.dims();
    let dual_h0 = c.dual_h0_basis().len();
    let tangent = x.group.group_dim + h1 - h0;
    debug_assert_eq!(tangent, x.group.group_dim + h2);
    Ok(CohomologyReport {
        h0,
        h1,
        h2,
        dual_h0,
        smooth: h2 == 0,
        tangent_dim_framed: tangent,
    })
}

/// The two-term complex `1 − AdΦ` on `V`, for points with `N = 0`.
pub fn cohomology_n0(x: &WDPoint) -> Result<(usize, usize)> {
    x.ensure_valid()?;
    if !x.is_n_zero() {
        return Err(Error::InvalidPoint("cohomology_N0 requires N = 0".into()));
    }
    let v = x.invariants_subspace();
    let a = v.restrict(&x.ad_phi())?;
    let m = Mat::identity(v.dim()).sub(&a);
    let r = m.rank();
    Ok((v.dim() - r, v.dim() - r))
}
