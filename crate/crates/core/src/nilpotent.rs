//! Jacobson–Morozov triples and the cocharacters attached to nilpotents.

use crate::error::{Error, Result};
use crate::groups::{dynamic_decomposition, integer_eigenspaces, GroupElement, GroupModel, Grading};
use crate::linalg::{Mat, Subspace};
use crate::scalars::Scalar;

/// An sl₂-triple `[H,N] = 2N`, `[H,Y] = −2Y`, `[N,Y] = H` in Lie coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    pub n: Vec<Scalar>,
    pub h: Vec<Scalar>,
    pub y: Vec<Scalar>,
}

impl Sl2Triple {
    pub fn is_zero(&self) -> bool {
        self.n.iter().all(Scalar::is_zero)
    }

    pub fn check(&self, g: &GroupModel) -> bool {
        let two = Scalar::from_int(2);
        let scale = |v: &[Scalar], s: &Scalar| v.iter().map(|x| x * s).collect::<Vec<_>>();
        g.bracket(&self.h, &self.n) == scale(&self.n, &two)
            && g.bracket(&self.h, &self.y) == scale(&self.y, &-two.clone())
            && g.bracket(&self.n, &self.y) == self.h
    }
}

/// A cocharacter `λ : 𝔾_m → G` recorded through `H = dλ(1)`.
#[derive(Clone, Debug)]
pub struct Cocharacter {
    pub h: Vec<Scalar>,
    pub grading: Grading,
    std_basis: Mat,
    std_basis_inv: Mat,
    std_weights: Vec<i64>,
}

impl Cocharacter {
    /// Certifies that `H` integrates: it must act semisimply with integer
    /// eigenvalues both on the realization and on 𝔤.
    pub fn from_h(g: &GroupModel, h: &[Scalar]) -> Result<Self> {
        let grading = dynamic_decomposition(g, h)?;
        let spaces = integer_eigenspaces(&g.lie_elem(h))?;
        let mut cols = Vec::new();
        let mut std_weights = Vec::new();
        for (k, sp) in &spaces {
            for v in sp.basis() {
                cols.push(v.clone());
                std_weights.push(*k);
            }
        }
        let std_basis = Mat::from_cols(&cols, g.std_dim);
        let std_basis_inv = std_basis.inverse()?;
        let c = Cocharacter { h: h.to_vec(), grading, std_basis, std_basis_inv, std_weights };
        g.check_member(&c.eval(&Scalar::from_int(2))?)?;
        Ok(c)
    }

    /// `λ(s) = P·diag(s^{h_i})·P⁻¹`.
    pub fn eval(&self, s: &Scalar) -> Result<GroupElement> {
        let d: Vec<Scalar> = self.std_weights.iter().map(|&w| s.pow(w)).collect::<Result<_>>()?;
        Ok(GroupElement::new(self.std_basis.mul(&Mat::diag(&d)).mul(&self.std_basis_inv), 0))
    }

    /// Weights on 𝔤 with multiplicity, descending.
    pub fn weights(&self) -> Vec<i64> {
        let mut w = self.grading.weights();
        w.reverse();
        w
    }

    /// Weights on the realization, descending.
    pub fn std_weights(&self) -> Vec<i64> {
        let mut w = self.std_weights.clone();
        w.sort_unstable_by(|a, b| b.cmp(a));
        w
    }
}

fn check_nilpotent_in(g: &GroupModel, n: &[Scalar], z: &Subspace) -> Result<()> {
    if n.len() != g.group_dim {
        return Err(Error::Dimension("Lie coordinate length".into()));
    }
    if !z.contains(n) {
        return Err(Error::NotInLieAlgebra("the restricting subalgebra".into()));
    }
    if !g.is_nilpotent(n) {
        return Err(Error::NotNilpotent);
    }
    Ok(())
}

/// Completes a nilpotent `N` to an sl₂-triple inside `restrict_to`
/// (default: all of 𝔤). `H` is taken in `[N, 𝔷]` and both solves keep
/// free echelon variables at zero, so the output is deterministic.
pub fn jacobson_morozov(
    g: &GroupModel,
    n: &[Scalar],
    restrict_to: Option<&Subspace>,
) -> Result<Sl2Triple> {
    let full = Subspace::full(g.group_dim);
    let z = restrict_to.unwrap_or(&full);
    check_nilpotent_in(g, n, z)?;
    let zero = vec![Scalar::zero(); g.group_dim];
    if n.iter().all(Scalar::is_zero) {
        return Ok(Sl2Triple { n: zero.clone(), h: zero.clone(), y: zero });
    }
    let ad_n = g.ad_lie_matrix(n);
    let w = z.map(&ad_n);
    let two_n: Vec<Scalar> = n.iter().map(|x| x * &Scalar::from_int(2)).collect();
    let cols: Vec<Vec<Scalar>> = w.basis().iter().map(|wi| g.bracket(wi, n)).collect();
    let c = Mat::from_cols(&cols, g.group_dim)
        .solve_particular(&two_n)
        .ok_or_else(|| Error::Unsupported("no H in [N, z] with [H, N] = 2N".into()))?;
    let mut h = zero.clone();
    for (ci, wi) in c.iter().zip(w.basis()) {
        for (x, y) in h.iter_mut().zip(wi) {
            *x += &(ci * y);
        }
    }
    let zb = z.basis();
    let top: Vec<Vec<Scalar>> = zb.iter().map(|zk| g.bracket(n, zk)).collect();
    let bottom: Vec<Vec<Scalar>> = zb
        .iter()
        .map(|zk| {
            g.bracket(&h, zk)
                .iter()
                .zip(zk)
                .map(|(a, b)| a + &(b * &Scalar::from_int(2)))
                .collect()
        })
        .collect();
    let a = Mat::from_cols(&top, g.group_dim)
        .vstack(&Mat::from_cols(&bottom, g.group_dim))?;
    let mut rhs = h.clone();
    rhs.extend(zero.iter().cloned());
    let yc = a
        .solve_particular(&rhs)
        .ok_or_else(|| Error::Unsupported("no Y completing the triple".into()))?;
    let mut y = zero;
    for (ck, zk) in yc.iter().zip(zb) {
        for (x, v) in y.iter_mut().zip(zk) {
            *x += &(ck * v);
        }
    }
    let t = Sl2Triple { n: n.to_vec(), h, y };
    debug_assert!(t.check(g));
    Ok(t)
}

/// The cocharacter with derivative the `H` of the Jacobson–Morozov triple.
pub fn associated_cocharacter(
    g: &GroupModel,
    n: &[Scalar],
    restrict_to: Option<&Subspace>,
) -> Result<Cocharacter> {
    let t = jacobson_morozov(g, n, restrict_to)?;
    Cocharacter::from_h(g, &t.h)
}

/// Whether `𝔤₂(λ_N) ⊆ im ad_N`.
pub fn weight2_in_image(g: &GroupModel, n: &[Scalar]) -> Result<bool> {
    let lam = associated_cocharacter(g, n, None)?;
    Ok(g.ad_lie_matrix(n).image().contains_subspace(&lam.grading.piece(2)))
}

/// Partitions of `n` in decreasing order, largest parts first.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=max.min(n)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Nilpotent `n×n` matrix in Jordan form with the given block sizes.
pub fn jordan_nilpotent(parts: &[usize]) -> Mat {
    let n: usize = parts.iter().sum();
    let mut m = Mat::zeros(n, n);
    let mut off = 0;
    for &p in parts {
        for i in 0..p.saturating_sub(1) {
            m[(off + i, off + i + 1)] = Scalar::one();
        }
        off += p;
    }
    m
}

/// Partition label such as `2+1`.
pub fn partition_label(parts: &[usize]) -> String {
    parts.iter().map(usize::to_string).collect::<Vec<_>>().join("+")
}
