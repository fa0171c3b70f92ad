//! (φ, N, Gal)-modules in coordinates and the bridge to Weil–Deligne points.
//!
//! `E ⊗ L₀` is modelled as `f_L` labelled copies `D_0, …, D_{f_L−1}` of the
//! coefficient field, with Frobenius shifting the label by one. In the
//! chosen bases:
//!
//! * `Φ_i : D_{i+1} → D_i` and `N_i = p·Ad(Φ_i) N_{i+1}`,
//! * `τ(g)_i : D_{i+s} → D_i` with `s = v(g)·f_K`,
//! * `τ(g₁g₂)_i = τ(g₁)_i τ(g₂)_{i+s₁}` and `τ(g)_i Φ_{i+s} = Φ_i τ(g)_{i+1}`.
//!
//! With this indexing the collapsed operator satisfies
//! `Ad(Φ^{f_L}) N = p^{−f_L} N`, and `Φ_WD = τ(σ̄)_0 (Φ_0⋯Φ_{f_K−1})⁻¹`
//! satisfies `Ad(Φ_WD) N = p^{f_K} N`, which is the Weil–Deligne relation.

use crate::error::{Error, Result};
use crate::groups::{GroupElement, GroupModel};
use crate::scalars::{is_prime, prime_power, Scalar};
use crate::wdrep::{GalGroup, InertialData, WDPoint};

#[derive(Clone, Debug)]
pub struct PhiModule {
    pub group: GroupModel,
    pub p: u64,
    pub fk: u32,
    pub fl: u32,
    pub phis: Vec<GroupElement>,
    pub ns: Vec<Vec<Scalar>>,
    /// Structure of `Gal(L/K)`: inertia table, `θ`, `d = f_L/f_K` and `u`.
    /// Its `tau` is `τ` restricted to inertia on `D_0`.
    pub gal: InertialData,
    /// `taus[g][i] = τ(g)_i`, with `g` indexed as in [`GalGroup`].
    pub taus: Vec<Vec<GroupElement>>,
}

impl PartialEq for PhiModule {
    fn eq(&self, o: &Self) -> bool {
        self.group.spec == o.group.spec
            && (self.p, self.fk, self.fl) == (o.p, o.fk, o.fl)
            && self.phis == o.phis
            && self.ns == o.ns
            && self.gal == o.gal
            && self.taus == o.taus
    }
}

/// `Φ^{f_L}` on `D_σ` together with the change of basis `a` that moves the
/// whole Frobenius onto the component `σ`.
#[derive(Clone, Debug, PartialEq)]
pub struct Collapse {
    pub sigma: usize,
    pub phi: GroupElement,
    pub n: Vec<Scalar>,
    /// `a[σ] = 1`, `a[σ+j] = (Φ_{σ+j}⋯Φ_{σ+f_L−1})⁻¹`.
    pub a: Vec<GroupElement>,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidModule(msg.into())
}

fn ad_apply(g: &GroupModel, x: &GroupElement, n: &[Scalar]) -> Vec<Scalar> {
    g.ad_matrix(x).mul_vec(n)
}

fn scale(v: &[Scalar], s: &Scalar) -> Vec<Scalar> {
    v.iter().map(|x| x * s).collect()
}

impl PhiModule {
    fn fl(&self) -> usize {
        self.fl as usize
    }

    /// Shift `s(g) = v(g)·f_K mod f_L` of a Galois element.
    pub fn shift(&self, g: usize) -> usize {
        let gal = GalGroup::new(&self.gal);
        (gal.valuation(g) * self.fk as usize) % self.fl()
    }

    /// `Φ_a Φ_{a+1} ⋯ Φ_{a+len−1}` (indices mod `f_L`), a map `D_{a+len} → D_a`.
    pub fn path(&self, a: usize, len: usize) -> GroupElement {
        let g = &self.group;
        (0..len).fold(g.identity(), |acc, j| g.mul(&acc, &self.phis[(a + j) % self.fl()]))
    }

    /// Checks shapes and all four module conditions plus nilpotency.
    pub fn validate(&self) -> Result<()> {
        let g = &self.group;
        let fl = self.fl();
        if !is_prime(self.p) {
            return Err(Error::NotPrime(self.p));
        }
        if self.fk == 0 || self.fl == 0 || self.fl % self.fk != 0 {
            return Err(bad("f_K must be positive and divide f_L"));
        }
        self.gal.check(g)?;
        if self.gal.d != fl / self.fk as usize {
            return Err(bad("residue degree of the Galois data must be f_L / f_K"));
        }
        if self.phis.len() != fl || self.ns.len() != fl {
            return Err(bad("expected one Φ_i and one N_i per component"));
        }
        let gal = GalGroup::new(&self.gal);
        if self.taus.len() != gal.order() || self.taus.iter().any(|t| t.len() != fl) {
            return Err(bad("expected τ(g)_i for every Galois element and component"));
        }
        for x in self.phis.iter().chain(self.taus.iter().flatten()) {
            g.check_member(x)?;
        }
        if self.ns.iter().any(|n| n.len() != g.group_dim) {
            return Err(bad("N_i has the wrong number of coordinates"));
        }
        let p = Scalar::from_int(self.p as i64);
        for i in 0..fl {
            let rhs = scale(&ad_apply(g, &self.phis[i], &self.ns[(i + 1) % fl]), &p);
            if self.ns[i] != rhs {
                return Err(bad(format!("N_{i} ≠ p·Ad(Φ_{i}) N_{}", (i + 1) % fl)));
            }
        }
        if !g.is_nilpotent(&self.ns[0]) {
            return Err(Error::NotNilpotent);
        }
        for x in 0..gal.order() {
            let s = self.shift(x);
            for i in 0..fl {
                if ad_apply(g, &self.taus[x][i], &self.ns[(i + s) % fl]) != self.ns[i] {
                    return Err(bad(format!("τ({x})_{i} does not carry N_{} to N_{i}", (i + s) % fl)));
                }
                let lhs = g.mul(&self.taus[x][i], &self.phis[(i + s) % fl]);
                let rhs = g.mul(&self.phis[i], &self.taus[x][(i + 1) % fl]);
                if lhs != rhs {
                    return Err(bad(format!("τ({x}) does not commute with Φ at component {i}")));
                }
            }
            for y in 0..gal.order() {
                let xy = gal.mul(x, y);
                for i in 0..fl {
                    let rhs = g.mul(&self.taus[x][i], &self.taus[y][(i + s) % fl]);
                    if self.taus[xy][i] != rhs {
                        return Err(bad(format!("cocycle condition fails for ({x}, {y}) at component {i}")));
                    }
                }
            }
        }
        let e = gal.identity();
        for (h, t) in self.gal.tau.iter().enumerate() {
            if *t != self.taus[gal.join(0, h)][0] {
                return Err(bad(format!("recorded inertia image differs from τ({h})_0")));
            }
        }
        if self.taus[e].iter().any(|t| !g.is_identity(t)) {
            return Err(bad("τ(1) must be the identity"));
        }
        Ok(())
    }

    /// Applies the componentwise change of basis `a`:
    /// `Φ_i ↦ a_i Φ_i a_{i+1}⁻¹`, `N_i ↦ Ad(a_i) N_i`, `τ(g)_i ↦ a_i τ(g)_i a_{i+s}⁻¹`.
    pub fn change_basis(&self, a: &[GroupElement]) -> Result<PhiModule> {
        let g = &self.group;
        let fl = self.fl();
        if a.len() != fl {
            return Err(bad("change of basis needs one element per component"));
        }
        let inv: Vec<GroupElement> = a.iter().map(|x| g.inv(x)).collect();
        let phis = (0..fl)
            .map(|i| g.mul(&g.mul(&a[i], &self.phis[i]), &inv[(i + 1) % fl]))
            .collect();
        let ns = (0..fl).map(|i| ad_apply(g, &a[i], &self.ns[i])).collect();
        let taus: Vec<Vec<GroupElement>> = (0..self.taus.len())
            .map(|x| {
                let s = self.shift(x);
                (0..fl)
                    .map(|i| g.mul(&g.mul(&a[i], &self.taus[x][i]), &inv[(i + s) % fl]))
                    .collect()
            })
            .collect();
        let gal_data = GalGroup::new(&self.gal);
        let tau = (0..self.gal.order()).map(|h| taus[gal_data.join(0, h)][0].clone()).collect();
        let gal = InertialData { tau, ..self.gal.clone() };
        Ok(PhiModule { phis, ns, taus, gal, ..self.clone() })
    }
}

/// `Φ^{f_L}|_{D_σ} = Φ_σ Φ_{σ+1} ⋯ Φ_{σ+f_L−1}` and `N_σ`.
pub fn collapse(m: &PhiModule, sigma: usize) -> Result<Collapse> {
    m.validate()?;
    let fl = m.fl();
    if sigma >= fl {
        return Err(bad(format!("component {sigma} out of range")));
    }
    let g = &m.group;
    let mut a = vec![g.identity(); fl];
    for j in 1..fl {
        a[(sigma + j) % fl] = g.inv(&m.path(sigma + j, fl - j));
    }
    Ok(Collapse { sigma, phi: m.path(sigma, fl), n: m.ns[sigma].clone(), a })
}

/// The change of basis of [`collapse`] applied to the module: afterwards
/// `Φ_σ = Φ^{f_L}` and every other `Φ_i` is the identity.
pub fn normalize(m: &PhiModule, sigma: usize) -> Result<PhiModule> {
    let c = collapse(m, sigma)?;
    m.change_basis(&c.a)
}

/// `r(g) = τ(ḡ)_0 ∘ Φ^{−v(g) f_K}` read off on `D_0`: `Φ_WD = τ(σ̄)_0 (Φ_0⋯Φ_{f_K−1})⁻¹`,
/// `τ_WD(h) = τ(h)_0`, `N = N_0`.
pub fn fontaine_to_wd(m: &PhiModule) -> Result<WDPoint> {
    m.validate()?;
    let g = &m.group;
    let gal = GalGroup::new(&m.gal);
    let sigma = gal.frobenius();
    let phi = g.mul(&m.taus[sigma][0], &g.inv(&m.path(0, m.fk as usize)));
    let tau = (0..m.gal.order()).map(|h| m.taus[gal.join(0, h)][0].clone()).collect();
    let inertia = InertialData { tau, ..m.gal.clone() };
    let x = WDPoint::new(g.clone(), m.p, m.fk, phi, m.ns[0].clone(), inertia);
    x.ensure_valid()?;
    Ok(x)
}

/// Inverse of [`fontaine_to_wd`]. `f_L` must be a multiple of `d·f_K`; the
/// inertia is inflated to residue degree `f_L/f_K` first. The output is in
/// collapsed form: `Φ_0 = F = Φ_WD^{−d} τ(u)`, all other `Φ_i = 1`, and the
/// `N_i` are obtained from `N_0 = N` by `N_{i+1} = p⁻¹ Ad(Φ_i⁻¹) N_i`.
pub fn wd_to_phi_module(x: &WDPoint, fl: u32) -> Result<PhiModule> {
    x.ensure_valid()?;
    let g = &x.group;
    let base = x.inertia.d as u32 * x.fk;
    if fl == 0 || fl % base != 0 {
        return Err(bad(format!("f_L = {fl} is not a multiple of d·f_K = {base}")));
    }
    let gal_data = x.inertia.inflate_residue((fl / base) as usize);
    let d = gal_data.d;
    let fl = fl as usize;
    let f = g.mul(&g.pow(&x.phi, -(d as i64)), &gal_data.tau[gal_data.frob]);
    let mut phis = vec![g.identity(); fl];
    phis[0] = f.clone();
    let pinv = prime_power(x.p, -1);
    let mut ns = vec![x.n.clone(); fl];
    for i in 1..fl {
        ns[i] = scale(&ad_apply(g, &g.inv(&phis[i - 1]), &ns[i - 1]), &pinv);
    }
    let gal = GalGroup::new(&gal_data);
    let fk = x.fk as usize;
    let mut taus = Vec::with_capacity(gal.order());
    for el in 0..gal.order() {
        let (k, h) = gal.split(el);
        // τ(σ̄^k h)_0 = Φ_WD^k τ(h) (Φ_0⋯Φ_{s−1}); the path is F when s ≥ 1
        let mut t0 = g.mul(&g.pow(&x.phi, k as i64), &gal_data.tau[h]);
        let s = (k * fk) % fl;
        if s >= 1 {
            t0 = g.mul(&t0, &f);
        }
        // τ_{i+1} = Φ_i⁻¹ τ_i Φ_{i+s}
        let mut row = vec![t0];
        for i in 0..fl - 1 {
            let next = g.mul(&g.mul(&g.inv(&phis[i]), &row[i]), &phis[(i + s) % fl]);
            row.push(next);
        }
        taus.push(row);
    }
    let m = PhiModule { group: g.clone(), p: x.p, fk: x.fk, fl: fl as u32, phis, ns, gal: gal_data, taus };
    m.validate()?;
    Ok(m)
}

/// `x` with its inertia inflated to residue degree `f_L/f_K`, the exact
/// target of `fontaine_to_wd ∘ wd_to_phi_module(·, f_L)`.
pub fn inflated_point(x: &WDPoint, fl: u32) -> Result<WDPoint> {
    let base = x.inertia.d as u32 * x.fk;
    if fl == 0 || fl % base != 0 {
        return Err(bad(format!("f_L = {fl} is not a multiple of d·f_K = {base}")));
    }
    let inertia = x.inertia.inflate_residue((fl / base) as usize);
    Ok(WDPoint { inertia, ..x.clone() })
}

/// `r(g₀^d ũ⁻¹) = Φ^d τ(u)⁻¹` for the residue degree `d` of the inertia data;
/// this element should commute with `Φ` and all of `τ(I)`.
pub fn wl_frobenius_centralizes(x: &WDPoint) -> bool {
    let g = &x.group;
    let i = &x.inertia;
    let c = g.mul(&g.pow(&x.phi, i.d as i64), &g.inv(&i.tau[i.frob]));
    std::iter::once(&x.phi)
        .chain(i.tau.iter())
        .all(|y| g.mul(&c, y) == g.mul(y, &c))
}
