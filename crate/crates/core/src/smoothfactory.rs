//! Construction of smooth points from nilpotent data, twists, and
//! pushforward along morphisms.

use crate::cohomology::{report, very_smooth_report};
use crate::error::{Error, Result};
use crate::groups::{GroupElement, GroupModel, Morphism};
use crate::linalg::Mat;
use crate::nilpotent::{associated_cocharacter, Cocharacter};
use crate::scalars::{cyclotomic_bound, field_degree, gcd_with_unity, sqrt_power, Scalar};
use crate::wdrep::{InertialData, WDPoint};

#[derive(Clone, Debug)]
pub struct SmoothCertificate {
    pub point: WDPoint,
    pub lambda: Cocharacter,
    pub twist: Option<GroupElement>,
    pub h2: usize,
    pub very_smooth: bool,
}

/// `Φ = diag(√q, 1/√q)`, `N = e` in SL(2) with trivial inertia.
pub fn standard_sl2_point(p: u64, fk: u32) -> Result<WDPoint> {
    let g = GroupModel::sl(2);
    let s = sqrt_power(p, fk)?;
    let phi = GroupElement::new(Mat::diag(&[s.clone(), s.inv()?]), 0);
    let n = g.lie_coords(&Mat::unit(2, 0, 1))?;
    let i = InertialData::trivial(&g);
    let x = WDPoint::new(g, p, fk, phi, n, i);
    x.ensure_valid()?;
    Ok(x)
}

fn certify(point: WDPoint, lambda: Cocharacter, twist: Option<GroupElement>) -> Result<SmoothCertificate> {
    point.ensure_valid()?;
    let r = report(&point)?;
    let vs = very_smooth_report(&point)?;
    if r.h2 != 0 || !vs.very_smooth {
        return Err(Error::InvalidPoint(format!(
            "constructed point is not very smooth (h2 = {}, power h2 = {})",
            r.h2, vs.power_h2
        )));
    }
    Ok(SmoothCertificate { point, lambda, twist, h2: r.h2, very_smooth: vs.very_smooth })
}

/// `Φ = λ_N(√q)` with `λ_N` the Jacobson–Morozov cocharacter inside the
/// centralizer of `τ`.
pub fn smooth_point(
    g: &GroupModel,
    inertia: &InertialData,
    n: &[Scalar],
    p: u64,
    fk: u32,
) -> Result<SmoothCertificate> {
    inertia.check(g)?;
    let z = g.fixed_lie(&inertia.tau);
    let lambda = associated_cocharacter(g, n, Some(&z))?;
    let phi = lambda.eval(&sqrt_power(p, fk)?)?;
    let x = WDPoint::new(g.clone(), p, fk, phi, n.to_vec(), inertia.clone());
    certify(x, lambda, None)
}

/// Certifies that `c` has finite order: the eigenvalues of (a power of) its
/// realization are roots of unity and `c^{n₀} = 1`.
fn check_finite_order(g: &GroupModel, c: &GroupElement) -> Result<()> {
    let c2 = if c.component == 0 { c.clone() } else { g.mul(c, c) };
    let chi = c2.matrix.char_poly()?;
    let e = field_degree(c2.d_tag());
    let n0 = cyclotomic_bound(e * g.std_dim);
    let rad = chi.div_rem(&chi.gcd(&chi.derivative())?)?.0;
    let unity = gcd_with_unity(&chi, n0)?;
    if unity.degree() != rad.degree() {
        return Err(Error::InvalidTwist("an eigenvalue is not a root of unity".into()));
    }
    let exp = i64::try_from(n0).map_err(|_| Error::Unsupported("order bound too large".into()))?;
    if !g.is_identity(&g.pow(&c2, exp)) {
        return Err(Error::InvalidTwist("element is not of finite order".into()));
    }
    Ok(())
}

/// Replaces `Φ` by `Φ·c` for `c` of finite order fixing `dλ(1)` and `N`
/// and normalizing `τ(I)`.
pub fn twist_by(cert: &SmoothCertificate, c: &GroupElement) -> Result<SmoothCertificate> {
    let x = &cert.point;
    let g = &x.group;
    g.check_member(c)?;
    let ad = g.ad_matrix(c);
    if ad.mul_vec(&cert.lambda.h) != cert.lambda.h {
        return Err(Error::InvalidTwist("c does not fix dλ(1)".into()));
    }
    if ad.mul_vec(&x.n) != x.n {
        return Err(Error::InvalidTwist("c does not fix N".into()));
    }
    check_finite_order(g, c)?;
    let phi = g.mul(&x.phi, c);
    let inert = &x.inertia;
    let mut theta = Vec::with_capacity(inert.order());
    for t in &inert.tau {
        let img = g.conj(&phi, t);
        let Some(h) = inert.tau.iter().position(|s| *s == img) else {
            return Err(Error::InvalidTwist("c does not normalize τ(I)".into()));
        };
        theta.push(h);
    }
    let inertia = if theta == inert.theta {
        inert.clone()
    } else {
        let i = inert.clone().with_theta(theta);
        i.check(g).map_err(|e| Error::InvalidTwist(format!("twisted θ: {e}")))?;
        i
    };
    let twist = match &cert.twist {
        None => c.clone(),
        Some(t) => g.mul(t, c),
    };
    let y = WDPoint::new(g.clone(), x.p, x.fk, phi, x.n.clone(), inertia);
    certify(y, cert.lambda.clone(), Some(twist))
}

/// Image of a point under a morphism of group models.
pub fn pushforward(f: &Morphism, x: &WDPoint) -> Result<WDPoint> {
    if f.source != x.group {
        return Err(Error::InvalidMorphism(format!(
            "source {} does not match the point's group {}",
            f.source.name, x.group.name
        )));
    }
    let tau = x.inertia.tau.iter().map(|t| f.elt_map(t)).collect::<Result<_>>()?;
    let inertia = InertialData { tau, ..x.inertia.clone() };
    let y = WDPoint::new(f.target.clone(), x.p, x.fk, f.elt_map(&x.phi)?, f.push_lie(&x.n), inertia);
    y.ensure_valid()?;
    Ok(y)
}

/// Points over a product group from points over its factors, with trivial
/// inertia and a shared `(p, f_K)`.
pub fn product_point(points: &[&WDPoint]) -> Result<WDPoint> {
    let first = points.first().ok_or_else(|| Error::InvalidPoint("empty product".into()))?;
    if points.iter().any(|x| x.p != first.p || x.fk != first.fk || x.inertia.order() != 1) {
        return Err(Error::Unsupported("product points need equal (p, fK) and trivial inertia".into()));
    }
    let g = GroupModel::product(&points.iter().map(|x| x.group.clone()).collect::<Vec<_>>());
    let phi = Mat::block_diag(&points.iter().map(|x| x.phi.matrix.clone()).collect::<Vec<_>>());
    let mut component = 0;
    let mut shift = 0;
    for x in points {
        component |= x.phi.component << shift;
        shift += x.group.n_components.trailing_zeros();
    }
    let n = points.iter().flat_map(|x| x.n.iter().cloned()).collect();
    let i = InertialData::trivial(&g);
    let y = WDPoint::new(g, first.p, first.fk, GroupElement::new(phi, component), n, i);
    y.ensure_valid()?;
    Ok(y)
}
