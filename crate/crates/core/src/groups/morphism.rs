//! Homomorphisms between group models, checked against their Lie maps.

use crate::error::{Error, Result};
use crate::groups::grading::integer_eigenspaces;
use crate::groups::{FactorKind, GroupElement, GroupModel};
use crate::linalg::Mat;
use crate::scalars::Scalar;

#[derive(Clone, Debug)]
enum Kind {
    Tensor,
    Det,
    InclBlock { extra: usize },
    Sl2 { n: Mat, y: Mat, h_basis: Mat, h_basis_inv: Mat, h_weights: Vec<i64> },
}

#[derive(Clone, Debug)]
pub struct Morphism {
    pub name: String,
    pub source: GroupModel,
    pub target: GroupModel,
    /// `dim target × dim source` matrix on Lie coordinates.
    pub lie_map: Mat,
    kind: Kind,
}

fn plain_factor(g: &GroupModel, what: &str) -> Result<(FactorKind, usize)> {
    match g.factors.as_slice() {
        [f] if f.kind != FactorKind::CalG => Ok((f.kind, f.n)),
        _ => Err(Error::InvalidMorphism(format!("{what} needs a GL(n) or SL(n) source"))),
    }
}

impl Morphism {
    fn build(name: String, source: GroupModel, target: GroupModel, kind: Kind) -> Result<Self> {
        let mut m = Morphism {
            name,
            lie_map: Mat::zeros(target.group_dim, source.group_dim),
            source,
            target,
            kind,
        };
        let cols: Vec<Vec<Scalar>> = m
            .source
            .lie_basis
            .iter()
            .map(|b| m.lie_image_matrix(b))
            .map(|x| m.target.lie_coords(&x))
            .collect::<Result<_>>()?;
        m.lie_map = Mat::from_cols(&cols, m.target.group_dim);
        m.verify()?;
        Ok(m)
    }

    /// `GL(n) × GL(m) → GL(nm)`, `(g, h) ↦ g ⊗ h`. Factors may also be SL.
    pub fn tensor(a: &GroupModel, b: &GroupModel) -> Result<Self> {
        let (_, n) = plain_factor(a, "tensor")?;
        let (_, m) = plain_factor(b, "tensor")?;
        let source = GroupModel::product(&[a.clone(), b.clone()]);
        Self::build(format!("tensor({n},{m})"), source, GroupModel::gl(n * m), Kind::Tensor)
    }

    /// `det : GL(n) → GL(1)`; the Lie map is the trace.
    pub fn det(source: &GroupModel) -> Result<Self> {
        let (_, n) = plain_factor(source, "det")?;
        Self::build(format!("det({n})"), source.clone(), GroupModel::gl1(), Kind::Det)
    }

    /// `GL(n) → GL(n + extra)`, `g ↦ diag(g, 1)`.
    pub fn incl_block(source: &GroupModel, extra: usize) -> Result<Self> {
        let (_, n) = plain_factor(source, "incl_block")?;
        Self::build(
            format!("incl_block({n},{extra})"),
            source.clone(),
            GroupModel::gl(n + extra),
            Kind::InclBlock { extra },
        )
    }

    /// `SL(2) → G` integrating an sl₂-triple `(N, H, Y)` given in Lie
    /// coordinates of `target`.
    pub fn sl2_from_triple(
        target: &GroupModel,
        n: &[Scalar],
        h: &[Scalar],
        y: &[Scalar],
    ) -> Result<Self> {
        let hm = target.lie_elem(h);
        let spaces = integer_eigenspaces(&hm)?;
        let mut cols = Vec::new();
        let mut h_weights = Vec::new();
        for (k, sp) in &spaces {
            for v in sp.basis() {
                cols.push(v.clone());
                h_weights.push(*k);
            }
        }
        let h_basis = Mat::from_cols(&cols, target.std_dim);
        let h_basis_inv = h_basis.inverse()?;
        let kind = Kind::Sl2 {
            n: target.lie_elem(n),
            y: target.lie_elem(y),
            h_basis,
            h_basis_inv,
            h_weights,
        };
        Self::build("sl2_from_triple".into(), GroupModel::sl(2), target.clone(), kind)
    }

    fn lie_image_matrix(&self, x: &Mat) -> Mat {
        match &self.kind {
            Kind::Tensor => {
                let f = &self.source.factors;
                let a = x.block(f[0].std_off, f[0].std_off, f[0].n, f[0].n);
                let b = x.block(f[1].std_off, f[1].std_off, f[1].n, f[1].n);
                a.kron(&Mat::identity(f[1].n)).add(&Mat::identity(f[0].n).kron(&b))
            }
            Kind::Det => Mat::scalar(1, x.trace()),
            Kind::InclBlock { extra } => Mat::block_diag(&[x.clone(), Mat::zeros(*extra, *extra)]),
            Kind::Sl2 { n, y, h_basis, h_basis_inv, h_weights } => {
                let hm = h_basis
                    .mul(&Mat::diag(
                        &h_weights.iter().map(|&w| Scalar::from_int(w)).collect::<Vec<_>>(),
                    ))
                    .mul(h_basis_inv);
                n.scale(&x[(0, 1)])
                    .add(&y.scale(&x[(1, 0)]))
                    .add(&hm.scale(&x[(0, 0)]))
            }
        }
    }

    /// Image of Lie coordinates.
    pub fn push_lie(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.lie_map.mul_vec(x)
    }

    pub fn elt_map(&self, x: &GroupElement) -> Result<GroupElement> {
        self.source.check_member(x)?;
        let m = &x.matrix;
        let out = match &self.kind {
            Kind::Tensor => {
                let f = &self.source.factors;
                let a = m.block(f[0].std_off, f[0].std_off, f[0].n, f[0].n);
                let b = m.block(f[1].std_off, f[1].std_off, f[1].n, f[1].n);
                a.kron(&b)
            }
            Kind::Det => Mat::scalar(1, m.det()?),
            Kind::InclBlock { extra } => Mat::block_diag(&[m.clone(), Mat::identity(*extra)]),
            Kind::Sl2 { .. } => self.sl2_elt(m)?,
        };
        Ok(GroupElement::new(out, 0))
    }

    fn sl2_elt(&self, g: &Mat) -> Result<Mat> {
        let Kind::Sl2 { n, y, h_basis, h_basis_inv, h_weights } = &self.kind else {
            unreachable!()
        };
        let exp = |x: &Mat| -> Mat {
            let d = x.rows();
            let mut term = Mat::identity(d);
            let mut acc = Mat::identity(d);
            for k in 1..=d {
                term = term.mul(x).scale(&Scalar::from_frac(1, k as i64));
                acc = acc.add(&term);
            }
            acc
        };
        let torus = |t: &Scalar| -> Result<Mat> {
            let d: Vec<Scalar> = h_weights.iter().map(|&w| t.pow(w)).collect::<Result<_>>()?;
            Ok(h_basis.mul(&Mat::diag(&d)).mul(h_basis_inv))
        };
        // g = l(c/a) · diag(a, 1/a) · u(b/a) when a ≠ 0
        let lud = |g: &Mat| -> Result<Mat> {
            let a = &g[(0, 0)];
            let (b, c) = (&g[(0, 1)], &g[(1, 0)]);
            let l = exp(&y.scale(&(c / a)));
            let u = exp(&n.scale(&(b / a)));
            Ok(l.mul(&torus(a)?).mul(&u))
        };
        if !g[(0, 0)].is_zero() {
            return lud(g);
        }
        // g = u(−1)·(u(1)·g), and u(1)·g has nonzero corner
        let u1 = Mat::from_ints(&[&[1, 1], &[0, 1]]);
        let shifted = lud(&u1.mul(g))?;
        Ok(exp(&n.neg()).mul(&shifted))
    }

    fn test_elements(&self) -> Vec<GroupElement> {
        let g = &self.source;
        let mut out = g.component_reps();
        for f in &g.factors {
            let n = f.n;
            let mut blocks: Vec<Mat> = Vec::new();
            if n >= 2 {
                let mut u = Mat::identity(n);
                u[(0, n - 1)] = Scalar::from_int(2);
                blocks.push(u.clone());
                blocks.push(u.transpose());
                let mut t = Mat::identity(n);
                t[(0, 0)] = Scalar::from_int(3);
                t[(1, 1)] = Scalar::from_frac(1, 3);
                blocks.push(t);
                let mut w = Mat::zeros(n, n);
                w[(0, 1)] = Scalar::from_int(-1);
                w[(1, 0)] = Scalar::one();
                for k in 2..n {
                    w[(k, k)] = Scalar::one();
                }
                blocks.push(w);
            }
            if f.kind == FactorKind::GL {
                blocks.push(Mat::scalar(n, Scalar::from_int(5)));
            }
            for b in blocks {
                let mut m = Mat::identity(g.std_dim);
                m.set_block(f.std_off, f.std_off, &b);
                out.push(GroupElement::new(m, 0));
            }
        }
        out
    }

    fn verify(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        let basis: Vec<Vec<Scalar>> = (0..s.group_dim)
            .map(|i| crate::groups::model::unit_vec(s.group_dim, i))
            .collect();
        for x in &basis {
            for y in &basis {
                let lhs = self.push_lie(&s.bracket(x, y));
                let rhs = t.bracket(&self.push_lie(x), &self.push_lie(y));
                if lhs != rhs {
                    return Err(Error::InvalidMorphism(format!("{}: Lie map is not a bracket map", self.name)));
                }
            }
        }
        let elts = self.test_elements();
        let images: Vec<GroupElement> = elts.iter().map(|g| self.elt_map(g)).collect::<Result<_>>()?;
        for (g, fg) in elts.iter().zip(&images) {
            t.check_member(fg)?;
            let lhs = self.lie_map.mul(&s.ad_matrix(g));
            let rhs = t.ad_matrix(fg).mul(&self.lie_map);
            if lhs != rhs {
                return Err(Error::InvalidMorphism(format!("{}: maps do not intertwine Ad", self.name)));
            }
        }
        for (i, g) in elts.iter().enumerate() {
            for (j, h) in elts.iter().enumerate() {
                let lhs = self.elt_map(&s.mul(g, h))?;
                let rhs = t.mul(&images[i], &images[j]);
                if lhs != rhs {
                    return Err(Error::InvalidMorphism(format!("{}: not multiplicative", self.name)));
                }
            }
        }
        Ok(())
    }
}
