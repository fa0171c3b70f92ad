//! Matrix group models: GL(n), SL(n), the similitude-type group 𝒢(n) and
//! products of these.
//!
//! Every group is realized inside block-diagonal matrices. A 𝒢(n) factor
//! uses an `(n+1)`-block `diag(g, a)` for the pair `(g, a) ∈ GL_n × GL_1`;
//! its second component `ȷ` is tracked by a bit in
//! [`GroupElement::component`] rather than by a matrix, since it acts on the
//! Lie algebra by the outer automorphism `(X, y) ↦ (y·1 − Xᵗ, y)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Mat, Subspace};
use crate::scalars::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum GroupSpec {
    #[serde(rename = "GL")]
    GL { n: usize },
    #[serde(rename = "SL")]
    SL { n: usize },
    #[serde(rename = "calG")]
    CalG { n: usize },
    #[serde(rename = "product")]
    Product { factors: Vec<GroupSpec> },
}

impl GroupSpec {
    /// Parses short names such as `GL3`, `SL2`, `GL1`, `calG2`, `GL2xGL1`.
    pub fn parse_short(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(['x', '*']).map(str::trim).collect();
        if parts.len() > 1 {
            let factors = parts.iter().map(|p| Self::parse_short(p)).collect::<Result<_>>()?;
            return Ok(GroupSpec::Product { factors });
        }
        let s = parts[0];
        let num = |t: &str| -> Result<usize> {
            let t = t.trim_start_matches('(').trim_end_matches(')');
            t.parse::<usize>()
                .ok()
                .filter(|&n| n >= 1)
                .ok_or_else(|| Error::Parse(format!("bad group size in '{s}'")))
        };
        if let Some(t) = s.strip_prefix("calG") {
            return Ok(GroupSpec::CalG { n: num(t)? });
        }
        if let Some(t) = s.strip_prefix("GL") {
            return Ok(GroupSpec::GL { n: num(t)? });
        }
        if let Some(t) = s.strip_prefix("SL") {
            return Ok(GroupSpec::SL { n: num(t)? });
        }
        Err(Error::Parse(format!("unknown group '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    GL,
    SL,
    CalG,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub kind: FactorKind,
    pub n: usize,
    /// Offset and size of the block in the standard realization.
    pub std_off: usize,
    pub std_size: usize,
    /// Offset and dimension of the factor's Lie basis.
    pub lie_off: usize,
    pub lie_dim: usize,
    /// Component bit, for 𝒢(n) factors.
    pub bit: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    /// Block-diagonal matrix in the standard realization.
    pub matrix: Mat,
    /// Bitmask of the 𝒢(n) factors whose `ȷ`-component is present.
    pub component: usize,
}

impl GroupElement {
    pub fn new(matrix: Mat, component: usize) -> Self {
        GroupElement { matrix, component }
    }

    pub fn d_tag(&self) -> u64 {
        self.matrix.d_tag()
    }
}

#[derive(Clone, Debug)]
pub struct GroupModel {
    pub name: String,
    pub spec: GroupSpec,
    pub factors: Vec<Factor>,
    pub std_dim: usize,
    pub lie_basis: Vec<Mat>,
    pub group_dim: usize,
    pub rank: usize,
    /// Indices of the Lie basis spanning the derived subalgebra 𝔤⁰.
    pub derived_idx: Vec<usize>,
    pub borel_dim: usize,
    pub n_components: usize,
}

impl PartialEq for GroupModel {
    fn eq(&self, o: &Self) -> bool {
        self.spec == o.spec
    }
}

fn gl_basis(n: usize, with_center: bool) -> Vec<Mat> {
    let mut b = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            b.push(Mat::unit(n, i, j));
        }
    }
    for i in 0..n.saturating_sub(1) {
        b.push(Mat::unit(n, i, i).sub(&Mat::unit(n, i + 1, i + 1)));
    }
    for i in 0..n {
        for j in 0..i {
            b.push(Mat::unit(n, i, j));
        }
    }
    if with_center {
        b.push(Mat::identity(n));
    }
    b
}

/// Coordinates of an `n×n` block in [`gl_basis`].
fn gl_coords(x: &Mat, with_center: bool) -> Option<Vec<Scalar>> {
    let n = x.rows();
    let mut c = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in i + 1..n {
            c.push(x[(i, j)].clone());
        }
    }
    let tr = x.trace();
    let center = if with_center {
        &tr / &Scalar::from_int(n as i64)
    } else {
        if !tr.is_zero() {
            return None;
        }
        Scalar::zero()
    };
    let mut run = Scalar::zero();
    for i in 0..n.saturating_sub(1) {
        run = &run + &(&x[(i, i)] - &center);
        c.push(run.clone());
    }
    for i in 0..n {
        for j in 0..i {
            c.push(x[(i, j)].clone());
        }
    }
    if with_center {
        c.push(center);
    }
    Some(c)
}

/// `(X, y) ↦ (y·1 − Xᵗ, y)` on an `(n+1)`-block.
fn calg_theta(z: &Mat) -> Mat {
    let n = z.rows() - 1;
    let y = z[(n, n)].clone();
    let x = z.block(0, 0, n, n);
    let mut out = Mat::zeros(n + 1, n + 1);
    out.set_block(0, 0, &Mat::scalar(n, y.clone()).sub(&x.transpose()));
    out[(n, n)] = y;
    out
}

impl GroupModel {
    pub fn gl(n: usize) -> Self {
        Self::from_spec(&GroupSpec::GL { n }).expect("valid")
    }

    pub fn sl(n: usize) -> Self {
        Self::from_spec(&GroupSpec::SL { n }).expect("valid")
    }

    pub fn gl1() -> Self {
        Self::gl(1)
    }

    pub fn calg(n: usize) -> Self {
        Self::from_spec(&GroupSpec::CalG { n }).expect("valid")
    }

    pub fn product(factors: &[GroupModel]) -> Self {
        Self::from_spec(&GroupSpec::Product {
            factors: factors.iter().map(|g| g.spec.clone()).collect(),
        })
        .expect("valid")
    }

    pub fn from_spec(spec: &GroupSpec) -> Result<Self> {
        let mut leaves = Vec::new();
        flatten(spec, &mut leaves)?;
        let mut factors = Vec::new();
        let (mut std_off, mut lie_off, mut bits) = (0, 0, 0);
        let mut names = Vec::new();
        for (kind, n) in leaves {
            let (std_size, lie_dim, bit) = match kind {
                FactorKind::GL => (n, n * n, None),
                FactorKind::SL => (n, n * n - 1, None),
                FactorKind::CalG => {
                    bits += 1;
                    (n + 1, n * n + 1, Some(bits - 1))
                }
            };
            names.push(match kind {
                FactorKind::GL => format!("GL({n})"),
                FactorKind::SL => format!("SL({n})"),
                FactorKind::CalG => format!("calG({n})"),
            });
            factors.push(Factor { kind, n, std_off, std_size, lie_off, lie_dim, bit });
            std_off += std_size;
            lie_off += lie_dim;
        }
        let std_dim = std_off;
        let mut lie_basis = Vec::new();
        let mut derived_idx = Vec::new();
        let (mut rank, mut borel_dim) = (0, 0);
        for f in &factors {
            let n = f.n;
            let local: Vec<Mat> = match f.kind {
                FactorKind::GL => gl_basis(n, true),
                FactorKind::SL => gl_basis(n, false),
                FactorKind::CalG => {
                    let mut b: Vec<Mat> = gl_basis(n, true)
                        .into_iter()
                        .map(|m| Mat::block_diag(&[m, Mat::zeros(1, 1)]))
                        .collect();
                    b.push(Mat::unit(n + 1, n, n));
                    b
                }
            };
            let derived_local: Vec<usize> = match f.kind {
                FactorKind::GL => (0..n * n - 1).collect(),
                FactorKind::SL => (0..n * n - 1).collect(),
                FactorKind::CalG => (0..n * n).collect(),
            };
            derived_idx.extend(derived_local.iter().map(|i| f.lie_off + i));
            rank += match f.kind {
                FactorKind::GL => n,
                FactorKind::SL => n - 1,
                FactorKind::CalG => n + 1,
            };
            borel_dim += match f.kind {
                FactorKind::GL => n * (n + 1) / 2,
                FactorKind::SL => n * (n + 1) / 2 - 1,
                FactorKind::CalG => n * (n + 1) / 2 + 1,
            };
            for m in local {
                let mut big = Mat::zeros(std_dim, std_dim);
                big.set_block(f.std_off, f.std_off, &m);
                lie_basis.push(big);
            }
        }
        Ok(GroupModel {
            name: names.join("x"),
            spec: spec.clone(),
            group_dim: lie_basis.len(),
            factors,
            std_dim,
            lie_basis,
            rank,
            derived_idx,
            borel_dim,
            n_components: 1 << bits,
        })
    }

    pub fn dim(&self) -> usize {
        self.group_dim
    }

    pub fn derived_dim(&self) -> usize {
        self.derived_idx.len()
    }

    /// The derived subalgebra 𝔤⁰ as a subspace of Lie coordinates.
    pub fn derived_subspace(&self) -> Subspace {
        let vecs = self
            .derived_idx
            .iter()
            .map(|&i| unit_vec(self.group_dim, i))
            .collect();
        Subspace::span(self.group_dim, vecs)
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::new(Mat::identity(self.std_dim), 0)
    }

    /// One representative per connected component, identity first.
    pub fn component_reps(&self) -> Vec<GroupElement> {
        (0..self.n_components)
            .map(|c| GroupElement::new(Mat::identity(self.std_dim), c))
            .collect()
    }

    fn off_block_zero(&self, m: &Mat) -> bool {
        for f in &self.factors {
            for i in f.std_off..f.std_off + f.std_size {
                for j in 0..self.std_dim {
                    if (j < f.std_off || j >= f.std_off + f.std_size) && !m[(i, j)].is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn not_member(&self, reason: impl Into<String>) -> Error {
        Error::NotMember { group: self.name.clone(), reason: reason.into() }
    }

    /// Checks that `x` is an element of the group.
    pub fn check_member(&self, x: &GroupElement) -> Result<()> {
        let m = &x.matrix;
        if m.rows() != self.std_dim || m.cols() != self.std_dim {
            return Err(self.not_member(format!("expected a {0}x{0} matrix", self.std_dim)));
        }
        if x.component >= self.n_components {
            return Err(self.not_member(format!("component {} out of range", x.component)));
        }
        if !self.off_block_zero(m) {
            return Err(self.not_member("nonzero entries outside the factor blocks"));
        }
        for f in &self.factors {
            let b = m.block(f.std_off, f.std_off, f.std_size, f.std_size);
            match f.kind {
                FactorKind::GL => {
                    if b.det()?.is_zero() {
                        return Err(self.not_member("singular block"));
                    }
                }
                FactorKind::SL => {
                    if !b.det()?.is_one() {
                        return Err(self.not_member("block determinant is not 1"));
                    }
                }
                FactorKind::CalG => {
                    let n = f.n;
                    for k in 0..n {
                        if !b[(k, n)].is_zero() || !b[(n, k)].is_zero() {
                            return Err(self.not_member("calG block is not diag(g, a)"));
                        }
                    }
                    if b[(n, n)].is_zero() || b.block(0, 0, n, n).det()?.is_zero() {
                        return Err(self.not_member("singular calG block"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_member(&self, x: &GroupElement) -> bool {
        self.check_member(x).is_ok()
    }

    fn flipped(&self, f: &Factor, component: usize) -> bool {
        f.bit.is_some_and(|b| component >> b & 1 == 1)
    }

    pub fn mul(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        let mut out = Mat::zeros(self.std_dim, self.std_dim);
        for f in &self.factors {
            let (o, s) = (f.std_off, f.std_size);
            let xb = x.matrix.block(o, o, s, s);
            let yb = y.matrix.block(o, o, s, s);
            let prod = if f.kind == FactorKind::CalG && self.flipped(f, x.component) {
                // (g,a,ȷ)(h,b,·) = (g·b·(hᵗ)⁻¹, ab, ȷ·)
                let n = f.n;
                let g = xb.block(0, 0, n, n);
                let h = yb.block(0, 0, n, n);
                let (a, b) = (&xb[(n, n)], &yb[(n, n)]);
                let hti = h.transpose().inverse().expect("member");
                let mut m = Mat::zeros(n + 1, n + 1);
                m.set_block(0, 0, &g.mul(&hti).scale(b));
                m[(n, n)] = a * b;
                m
            } else {
                xb.mul(&yb)
            };
            out.set_block(o, o, &prod);
        }
        GroupElement::new(out, x.component ^ y.component)
    }

    pub fn inv(&self, x: &GroupElement) -> GroupElement {
        let mut out = Mat::zeros(self.std_dim, self.std_dim);
        for f in &self.factors {
            let (o, s) = (f.std_off, f.std_size);
            let xb = x.matrix.block(o, o, s, s);
            let inv = if f.kind == FactorKind::CalG && self.flipped(f, x.component) {
                // (g,a,ȷ)⁻¹ = (a⁻¹gᵗ, a⁻¹, ȷ)
                let n = f.n;
                let ai = xb[(n, n)].inv().expect("member");
                let mut m = Mat::zeros(n + 1, n + 1);
                m.set_block(0, 0, &xb.block(0, 0, n, n).transpose().scale(&ai));
                m[(n, n)] = ai;
                m
            } else {
                xb.inverse().expect("member")
            };
            out.set_block(o, o, &inv);
        }
        GroupElement::new(out, x.component)
    }

    pub fn pow(&self, x: &GroupElement, e: i64) -> GroupElement {
        let base = if e < 0 { self.inv(x) } else { x.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = self.identity();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            k >>= 1;
            if k > 0 {
                sq = self.mul(&sq, &sq);
            }
        }
        acc
    }

    pub fn conj(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        self.mul(&self.mul(x, y), &self.inv(x))
    }

    pub fn is_identity(&self, x: &GroupElement) -> bool {
        x.component == 0 && x.matrix.is_identity()
    }

    /// Lie element with the given coordinates, as a realization matrix.
    pub fn lie_elem(&self, coords: &[Scalar]) -> Mat {
        assert_eq!(coords.len(), self.group_dim, "Lie coordinate length");
        let mut m = Mat::zeros(self.std_dim, self.std_dim);
        for (c, b) in coords.iter().zip(&self.lie_basis) {
            if !c.is_zero() {
                m = m.add(&b.scale(c));
            }
        }
        m
    }

    /// Coordinates of a realization matrix in the Lie basis.
    pub fn lie_coords(&self, x: &Mat) -> Result<Vec<Scalar>> {
        let bad = || Error::NotInLieAlgebra(self.name.clone());
        if x.rows() != self.std_dim || x.cols() != self.std_dim || !self.off_block_zero(x) {
            return Err(bad());
        }
        let mut out = Vec::with_capacity(self.group_dim);
        for f in &self.factors {
            let b = x.block(f.std_off, f.std_off, f.std_size, f.std_size);
            match f.kind {
                FactorKind::GL => out.extend(gl_coords(&b, true).ok_or_else(bad)?),
                FactorKind::SL => out.extend(gl_coords(&b, false).ok_or_else(bad)?),
                FactorKind::CalG => {
                    let n = f.n;
                    if (0..n).any(|k| !b[(k, n)].is_zero() || !b[(n, k)].is_zero()) {
                        return Err(bad());
                    }
                    out.extend(gl_coords(&b.block(0, 0, n, n), true).ok_or_else(bad)?);
                    out.push(b[(n, n)].clone());
                }
            }
        }
        Ok(out)
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let b = self.lie_elem(x).bracket(&self.lie_elem(y));
        self.lie_coords(&b).expect("Lie algebra is closed under bracket")
    }

    /// `Ad(x)` applied to a realization matrix.
    pub fn ad_act(&self, x: &GroupElement, z: &Mat) -> Mat {
        let xi = x.matrix.inverse().expect("member");
        self.ad_act_with(x, &xi, z)
    }

    fn ad_act_with(&self, x: &GroupElement, xinv: &Mat, z: &Mat) -> Mat {
        let mut z = z.clone();
        for f in &self.factors {
            if f.kind == FactorKind::CalG && self.flipped(f, x.component) {
                let (o, s) = (f.std_off, f.std_size);
                let t = calg_theta(&z.block(o, o, s, s));
                z.set_block(o, o, &t);
            }
        }
        x.matrix.mul(&z).mul(xinv)
    }

    /// Matrix of `Ad(x)` on Lie coordinates.
    pub fn ad_matrix(&self, x: &GroupElement) -> Mat {
        let xi = x.matrix.inverse().expect("member");
        let cols: Vec<Vec<Scalar>> = self
            .lie_basis
            .iter()
            .map(|b| {
                self.lie_coords(&self.ad_act_with(x, &xi, b))
                    .expect("Ad preserves the Lie algebra")
            })
            .collect();
        Mat::from_cols(&cols, self.group_dim)
    }

    /// Matrix of `ad_N` on Lie coordinates.
    pub fn ad_lie_matrix(&self, n: &[Scalar]) -> Mat {
        let nm = self.lie_elem(n);
        let cols: Vec<Vec<Scalar>> = self
            .lie_basis
            .iter()
            .map(|b| self.lie_coords(&nm.bracket(b)).expect("closed under bracket"))
            .collect();
        Mat::from_cols(&cols, self.group_dim)
    }

    /// Common fixed subspace of `Ad(g)` over the given elements.
    pub fn fixed_lie(&self, elts: &[GroupElement]) -> Subspace {
        let id = Mat::identity(self.group_dim);
        let mut stack: Option<Mat> = None;
        for g in elts {
            let m = self.ad_matrix(g).sub(&id);
            stack = Some(match stack {
                None => m,
                Some(s) => s.vstack(&m).expect("same width"),
            });
        }
        match stack {
            None => Subspace::full(self.group_dim),
            Some(s) => s.kernel(),
        }
    }

    /// `exp(X)` for `X` nilpotent in the realization; lands in the identity
    /// component.
    pub fn exp_nilpotent(&self, x: &[Scalar]) -> Result<GroupElement> {
        let m = self.lie_elem(x);
        let mut term = Mat::identity(self.std_dim);
        let mut acc = Mat::identity(self.std_dim);
        for k in 1..=self.std_dim {
            term = term.mul(&m).scale(&Scalar::from_frac(1, k as i64));
            acc = acc.add(&term);
        }
        if !term.mul(&m).is_zero() {
            return Err(Error::NotNilpotent);
        }
        Ok(GroupElement::new(acc, 0))
    }

    /// Nilpotency of a Lie element: `ad_N^{dim} = 0` and `N^{std_dim} = 0`.
    pub fn is_nilpotent(&self, n: &[Scalar]) -> bool {
        self.lie_elem(n).pow(self.std_dim as u64).is_zero()
            && self.ad_lie_matrix(n).pow(self.group_dim as u64).is_zero()
    }
}

pub(crate) fn unit_vec(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

fn flatten(spec: &GroupSpec, out: &mut Vec<(FactorKind, usize)>) -> Result<()> {
    match spec {
        GroupSpec::GL { n } if *n >= 1 => out.push((FactorKind::GL, *n)),
        GroupSpec::SL { n } if *n >= 2 => out.push((FactorKind::SL, *n)),
        GroupSpec::CalG { n } if *n >= 1 => out.push((FactorKind::CalG, *n)),
        GroupSpec::Product { factors } if !factors.is_empty() => {
            for f in factors {
                flatten(f, out)?;
            }
        }
        other => return Err(Error::Parse(format!("invalid group spec {other:?}"))),
    }
    Ok(())
}
