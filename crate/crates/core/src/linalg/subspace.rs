//! Subspaces of `K^n`, stored by a reduced row echelon basis.

use crate::error::{Error, Result};
use crate::linalg::mat::rref_rows;
use crate::linalg::Mat;
use crate::scalars::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of arbitrary vectors of length `ambient`.
    pub fn span(ambient: usize, vecs: Vec<Vec<Scalar>>) -> Self {
        debug_assert!(vecs.iter().all(|v| v.len() == ambient));
        let e = rref_rows(vecs, ambient);
        Subspace { ambient, basis: e.rows, pivots: e.pivots }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: vec![], pivots: vec![] }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, Mat::identity(ambient).to_rows())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn basis_matrix(&self) -> Mat {
        Mat::from_cols(&self.basis, self.ambient)
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v ∉ self`.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let c: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut w = v.to_vec();
        for (ci, b) in c.iter().zip(&self.basis) {
            if ci.is_zero() {
                continue;
            }
            for (x, y) in w.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= &(ci * y);
                }
            }
        }
        w.iter().all(Scalar::is_zero).then_some(c)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        v.len() == self.ambient && self.coords(v).is_some()
    }

    pub fn contains_subspace(&self, o: &Subspace) -> bool {
        o.ambient == self.ambient && o.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, o: &Subspace) -> Result<Subspace> {
        if self.ambient != o.ambient {
            return Err(Error::Dimension("sum of subspaces in different ambients".into()));
        }
        let mut v = self.basis.clone();
        v.extend(o.basis.iter().cloned());
        Ok(Self::span(self.ambient, v))
    }

    /// `U ∩ V`, from the kernel of `[B_U | −B_V]`.
    pub fn intersect(&self, o: &Subspace) -> Result<Subspace> {
        if self.ambient != o.ambient {
            return Err(Error::Dimension("intersection of subspaces in different ambients".into()));
        }
        if self.dim() == 0 || o.dim() == 0 {
            return Ok(Self::zero(self.ambient));
        }
        let bu = self.basis_matrix();
        let bv = o.basis_matrix().neg();
        let k = bu.hstack(&bv)?.kernel();
        let u = self.dim();
        let vecs = k
            .basis
            .iter()
            .map(|x| bu.mul_vec(&x[..u]))
            .collect();
        Ok(Self::span(self.ambient, vecs))
    }

    /// `dim U − dim V` for `V ⊆ U`.
    pub fn quotient_dim(u: &Subspace, v: &Subspace) -> Result<usize> {
        if u.ambient != v.ambient {
            return Err(Error::Dimension("quotient across different ambients".into()));
        }
        if !u.contains_subspace(v) {
            return Err(Error::NotContained);
        }
        Ok(u.dim() - v.dim())
    }

    /// Standard unit vectors on the non-pivot coordinates; together with the
    /// basis they span the ambient space.
    pub fn complement_basis(&self) -> Vec<Vec<Scalar>> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .map(|c| {
                let mut v = vec![Scalar::zero(); self.ambient];
                v[c] = Scalar::one();
                v
            })
            .collect()
    }

    /// Image under a linear map given as an `m × ambient` matrix.
    pub fn map(&self, a: &Mat) -> Subspace {
        Self::span(a.rows(), self.basis.iter().map(|v| a.mul_vec(v)).collect())
    }

    /// Matrix of an operator preserving `self`, in the echelon basis.
    pub fn restrict(&self, a: &Mat) -> Result<Mat> {
        let cols: Vec<Vec<Scalar>> = self
            .basis
            .iter()
            .map(|b| {
                let img = a.mul_vec(b);
                self.coords(&img)
                    .ok_or_else(|| Error::Dimension("operator does not preserve the subspace".into()))
            })
            .collect::<Result<_>>()?;
        Ok(Mat::from_cols(&cols, self.dim()))
    }
}
