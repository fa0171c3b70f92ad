//! Integer gradings of a Lie algebra by a semisimple element.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::groups::GroupModel;
use crate::linalg::{Mat, Subspace};
use crate::scalars::Scalar;

/// Eigenspace decomposition `𝔤 = ⊕ 𝔤_k` of `ad_H`.
#[derive(Clone, Debug)]
pub struct Grading {
    pub pieces: BTreeMap<i64, Subspace>,
    ambient: usize,
}

/// Integer eigenspaces of a square matrix that must be diagonalizable with
/// integer eigenvalues.
pub fn integer_eigenspaces(a: &Mat) -> Result<BTreeMap<i64, Subspace>> {
    let n = a.rows();
    let chi = a.char_poly()?;
    // Fujiwara bound on the roots of the monic characteristic polynomial
    let approx = |c: &Scalar| -> f64 {
        let f = |q: &num_rational::BigRational| num_traits::ToPrimitive::to_f64(q).unwrap_or(f64::MAX).abs();
        f(c.rational_part()) + f(c.surd_part()) * (c.d_tag() as f64).sqrt()
    };
    let cs = chi.coeffs();
    let bound = (1..=n)
        .map(|k| {
            let a = approx(&cs[n - k]);
            if k == n { (a / 2.0).powf(1.0 / k as f64) } else { a.powf(1.0 / k as f64) }
        })
        .fold(0.0, f64::max);
    let bound = ((2.0 * bound).min(1e6) as i64) + 2;
    let mut out = BTreeMap::new();
    let mut total = 0;
    for k in -bound..=bound {
        if !chi.eval(&Scalar::from_int(k)).is_zero() {
            continue;
        }
        let sp = a.sub(&Mat::scalar(n, Scalar::from_int(k))).kernel();
        total += sp.dim();
        out.insert(k, sp);
    }
    if total != n {
        return Err(Error::NonIntegralGrading);
    }
    Ok(out)
}

impl Grading {
    pub fn piece(&self, k: i64) -> Subspace {
        self.pieces.get(&k).cloned().unwrap_or_else(|| Subspace::zero(self.ambient))
    }

    pub fn dim(&self, k: i64) -> usize {
        self.pieces.get(&k).map_or(0, Subspace::dim)
    }

    fn collect(&self, pred: impl Fn(i64) -> bool) -> Subspace {
        let vecs = self
            .pieces
            .iter()
            .filter(|(k, _)| pred(**k))
            .flat_map(|(_, s)| s.basis().to_vec())
            .collect();
        Subspace::span(self.ambient, vecs)
    }

    /// `𝔤_{≥k}`.
    pub fn ge(&self, k: i64) -> Subspace {
        self.collect(|j| j >= k)
    }

    /// `𝔤_{<k}`.
    pub fn lt(&self, k: i64) -> Subspace {
        self.collect(|j| j < k)
    }

    /// Weights with multiplicity, ascending.
    pub fn weights(&self) -> Vec<i64> {
        self.pieces
            .iter()
            .flat_map(|(k, s)| std::iter::repeat(*k).take(s.dim()))
            .collect()
    }
}

/// Eigenspaces of `ad_H`; fails unless `ad_H` is diagonalizable with
/// integer eigenvalues.
pub fn dynamic_decomposition(g: &GroupModel, h: &[Scalar]) -> Result<Grading> {
    let pieces = integer_eigenspaces(&g.ad_lie_matrix(h))?;
    Ok(Grading { pieces, ambient: g.group_dim })
}
