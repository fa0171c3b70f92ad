//! Weil–Deligne points `(Φ, N, τ)` and their basic operations.

use std::fmt;

use crate::error::{Error, Result};
use crate::groups::{GroupElement, GroupModel};
use crate::linalg::{Mat, Subspace};
use crate::scalars::{cyclotomic_bound, field_degree, is_prime, prime_power, Scalar};
use crate::wdrep::{GalGroup, InertialData};

#[derive(Clone, Debug)]
pub struct WDPoint {
    pub group: GroupModel,
    pub p: u64,
    pub fk: u32,
    pub phi: GroupElement,
    pub n: Vec<Scalar>,
    pub inertia: InertialData,
}

impl PartialEq for WDPoint {
    fn eq(&self, o: &Self) -> bool {
        self.group.spec == o.group.spec
            && (self.p, self.fk) == (o.p, o.fk)
            && self.phi == o.phi
            && self.n == o.n
            && self.inertia == o.inertia
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Constraint {
    /// Field tags are consistent and the data lives in the group.
    WellFormed,
    /// `Ad(Φ) N = p^{f_K} N`.
    FrobeniusScalesN,
    /// `Φ τ(g) Φ⁻¹ = τ(θ(g))`.
    FrobeniusNormalizesInertia,
    /// `Ad(τ(g)) N = N`.
    InertiaFixesN,
    /// `N` is nilpotent.
    Nilpotent,
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Constraint::WellFormed => "well_formed",
            Constraint::FrobeniusScalesN => "frobenius_scales_n",
            Constraint::FrobeniusNormalizesInertia => "frobenius_normalizes_inertia",
            Constraint::InertiaFixesN => "inertia_fixes_n",
            Constraint::Nilpotent => "nilpotent",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub constraint: Constraint,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Validation {
    pub violations: Vec<Violation>,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, constraint: Constraint, detail: impl Into<String>) {
        self.violations.push(Violation { constraint, detail: detail.into() });
    }
}

/// Data of the uniform extension that kills inertia and all root-of-unity
/// ambiguity: `Φ' = Φ^M` over `f_{K'} = M·f_K`, with `V' = 𝔤`.
#[derive(Clone, Debug)]
pub struct UniformExtension {
    pub m: u128,
    pub fk: u128,
    pub n0: u128,
}

impl WDPoint {
    pub fn new(
        group: GroupModel,
        p: u64,
        fk: u32,
        phi: GroupElement,
        n: Vec<Scalar>,
        inertia: InertialData,
    ) -> Self {
        WDPoint { group, p, fk, phi, n, inertia }
    }

    /// `q = p^{f_K}`.
    pub fn q(&self) -> Scalar {
        prime_power(self.p, self.fk as i64)
    }

    /// Common field tag of all entries, if consistent.
    pub fn field_tag(&self) -> Result<u64> {
        let mut tags: Vec<u64> = vec![self.phi.d_tag(), self.inertia.d_tag()];
        tags.extend(self.n.iter().map(Scalar::d_tag));
        let mut tag = 1;
        for t in tags {
            if t != 1 {
                if tag != 1 && tag != t {
                    return Err(Error::FieldMismatch(tag, t));
                }
                tag = t;
            }
        }
        Ok(tag)
    }

    /// Runs every check and reports each failed constraint separately.
    pub fn validate(&self) -> Validation {
        let mut v = Validation::default();
        let g = &self.group;
        if !is_prime(self.p) {
            v.push(Constraint::WellFormed, format!("{} is not prime", self.p));
        }
        if self.fk == 0 {
            v.push(Constraint::WellFormed, "f_K must be positive");
        }
        if let Err(e) = self.field_tag() {
            v.push(Constraint::WellFormed, e.to_string());
            return v;
        }
        if self.n.len() != g.group_dim {
            v.push(Constraint::WellFormed, "N has the wrong number of coordinates");
            return v;
        }
        if let Err(e) = g.check_member(&self.phi) {
            v.push(Constraint::WellFormed, format!("Phi: {e}"));
            return v;
        }
        if let Err(e) = self.inertia.check(g) {
            v.push(Constraint::WellFormed, e.to_string());
            return v;
        }
        let ad_phi = g.ad_matrix(&self.phi);
        let q = self.q();
        let scaled: Vec<Scalar> = self.n.iter().map(|x| x * &q).collect();
        if ad_phi.mul_vec(&self.n) != scaled {
            v.push(Constraint::FrobeniusScalesN, "Ad(Phi) N differs from p^fK N");
        }
        let inert = &self.inertia;
        for (h, t) in inert.tau.iter().enumerate() {
            if g.conj(&self.phi, t) != inert.tau[inert.theta[h]] {
                v.push(
                    Constraint::FrobeniusNormalizesInertia,
                    format!("Phi tau({h}) Phi^-1 differs from tau(theta({h}))"),
                );
                break;
            }
        }
        for (h, t) in inert.tau.iter().enumerate() {
            if g.ad_matrix(t).mul_vec(&self.n) != self.n {
                v.push(Constraint::InertiaFixesN, format!("Ad(tau({h})) moves N"));
                break;
            }
        }
        if !g.is_nilpotent(&self.n) {
            v.push(Constraint::Nilpotent, "N is not nilpotent");
        }
        v
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let v = self.validate();
        match v.violations.first() {
            None => Ok(()),
            Some(x) => Err(Error::InvalidPoint(format!("{}: {}", x.constraint, x.detail))),
        }
    }

    /// The inertia-fixed subspace `V = 𝔤^{τ(I)}`.
    pub fn invariants_subspace(&self) -> Subspace {
        self.group.fixed_lie(&self.inertia.tau)
    }

    /// Restriction to the unramified extension of degree `m`.
    pub fn restrict_unramified(&self, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidPoint("restriction degree must be positive".into()));
        }
        let i = &self.inertia;
        let gal = GalGroup::new(i);
        let d_new = i.d / gcd(i.d, m as usize);
        // new Frobenius image σ̄^m and u' = (σ̄^m)^{d'}
        let sigma_m = gal.pow(gal.frobenius(), m as usize);
        let u_new = gal.pow(sigma_m, d_new);
        let (k, h) = gal.split(u_new);
        debug_assert_eq!(k, 0);
        let theta = (0..i.order()).map(|x| i.theta_pow(x, m as i64)).collect();
        let inertia = InertialData {
            table: i.table.clone(),
            tau: i.tau.clone(),
            theta,
            d: d_new,
            frob: h,
        };
        Ok(WDPoint {
            group: self.group.clone(),
            p: self.p,
            fk: self.fk * m,
            phi: self.group.pow(&self.phi, m as i64),
            n: self.n.clone(),
            inertia,
        })
    }

    /// The exponent `M = n₀·d·|I|`, where `n₀` bounds the orders of roots of
    /// unity of degree at most `dim G` over the coefficient field.
    pub fn trivialize_inertia(&self) -> Result<UniformExtension> {
        let e = field_degree(self.field_tag()?);
        let n0 = cyclotomic_bound(e * self.group.group_dim);
        let m = n0 * self.inertia.d as u128 * self.inertia.order() as u128;
        Ok(UniformExtension { m, fk: m * self.fk as u128, n0 })
    }

    pub fn is_n_zero(&self) -> bool {
        self.n.iter().all(Scalar::is_zero)
    }

    /// `Ad(Φ)` on Lie coordinates.
    pub fn ad_phi(&self) -> Mat {
        self.group.ad_matrix(&self.phi)
    }

    pub fn ad_n(&self) -> Mat {
        self.group.ad_lie_matrix(&self.n)
    }
}

impl UniformExtension {
    /// `Φ^M`; only sensible for small `M`, the entries grow like `Φ^M`.
    pub fn frobenius(&self, x: &WDPoint) -> GroupElement {
        x.group.pow(&x.phi, self.m as i64)
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
