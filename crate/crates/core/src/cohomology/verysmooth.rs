//! Very smoothness: vanishing of `H²` over every finite extension.
//!
//! Two independent routes. The power route computes `H²` of the uniform
//! datum `(ad_N, q^{−M} AdΦ^M − 1)` on `𝔤`, i.e. the nullity of `T^M − 1`
//! on `𝔤 / im ad_N` with `T = q⁻¹ AdΦ`, using `X^M − 1 = ∏_{n|M} Φ_n`
//! (coprime factors have independent kernels). The eigenvalue route forms the
//! characteristic polynomial of `T` on the functionals killed by `ad_N` and
//! asks whether it shares a root with `X^{n₀} − 1`.

use serde::Serialize;

use crate::error::Result;
use crate::linalg::Mat;
use crate::scalars::{candidate_orders, cyclotomic_poly, field_degree, gcd_with_unity, Poly, Scalar};
use crate::wdrep::WDPoint;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerySmoothReport {
    pub m: String,
    pub n0: String,
    pub power_h2: usize,
    pub eigenvalue_detects: bool,
    pub very_smooth: bool,
    pub agree: bool,
}

fn normalized_frobenius(x: &WDPoint) -> Result<Mat> {
    Ok(x.ad_phi().scale(&x.q().inv()?))
}

/// Operator induced by `t` on `𝔤 / im a`, in the unit-vector complement.
fn on_quotient(t: &Mat, a: &Mat) -> Mat {
    let img = a.image();
    let comp = img.complement_basis();
    let free: Vec<usize> = (0..t.rows()).filter(|c| !img.pivots().contains(c)).collect();
    let cols: Vec<Vec<Scalar>> = comp
        .iter()
        .map(|c| {
            let mut w = t.mul_vec(c);
            for (b, &p) in img.basis().iter().zip(img.pivots()) {
                let f = w[p].clone();
                if f.is_zero() {
                    continue;
                }
                for (x, y) in w.iter_mut().zip(b) {
                    if !y.is_zero() {
                        *x -= &(&f * y);
                    }
                }
            }
            free.iter().map(|&i| w[i].clone()).collect()
        })
        .collect();
    Mat::from_cols(&cols, free.len())
}

/// `dim coker` of `(ad_N, T^M − 1)` on `𝔤`.
pub fn power_test_h2(x: &WDPoint, m: u128) -> Result<usize> {
    let t = normalized_frobenius(x)?;
    let tq = on_quotient(&t, &x.ad_n());
    let k = tq.rows();
    if k == 0 {
        return Ok(0);
    }
    let e = field_degree(x.field_tag()?);
    let mut nullity = 0;
    for n in candidate_orders(m, k, e) {
        let phi_n = tq.eval_poly(&cyclotomic_poly(n));
        nullity += k - phi_n.rank();
    }
    Ok(nullity)
}

/// `gcd(χ, X^{n₀} − 1)` for `χ` the characteristic polynomial of `T` acting
/// on `{φ : φ∘ad_N = 0}`.
pub fn unity_factor(x: &WDPoint, n0: u128) -> Result<Poly> {
    let t = normalized_frobenius(x)?;
    let w = x.ad_n().transpose().kernel();
    if w.dim() == 0 {
        return Ok(Poly::one());
    }
    let r = w.restrict(&t.transpose())?;
    gcd_with_unity(&r.char_poly()?, n0)
}

pub fn very_smooth_report(x: &WDPoint) -> Result<VerySmoothReport> {
    x.ensure_valid()?;
    let ext = x.trivialize_inertia()?;
    let power_h2 = power_test_h2(x, ext.m)?;
    let eigenvalue_detects = unity_factor(x, ext.n0)?.degree() > Some(0);
    Ok(VerySmoothReport {
        m: ext.m.to_string(),
        n0: ext.n0.to_string(),
        power_h2,
        eigenvalue_detects,
        very_smooth: power_h2 == 0,
        agree: (power_h2 == 0) != eigenvalue_detects,
    })
}

pub fn is_very_smooth(x: &WDPoint) -> Result<bool> {
    Ok(very_smooth_report(x)?.very_smooth)
}
