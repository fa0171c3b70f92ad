//! Finite inertia data and the finite Galois group it generates.

use crate::error::{Error, Result};
use crate::groups::{GroupElement, GroupModel};

/// A finite group `I` (by multiplication table) with a representation `τ`
/// into `G`, the automorphism `θ(g) = g₀ g g₀⁻¹` induced by a Frobenius
/// lift, the residue degree `d = f_L / f_K`, and `u = σ̄^d ∈ I` where `σ̄` is
/// the image of the Frobenius lift in `Gal(L/K)`.
#[derive(Clone, Debug, PartialEq)]
pub struct InertialData {
    pub table: Vec<Vec<usize>>,
    pub tau: Vec<GroupElement>,
    pub theta: Vec<usize>,
    pub d: usize,
    pub frob: usize,
}

impl InertialData {
    pub fn trivial(g: &GroupModel) -> Self {
        InertialData { table: vec![vec![0]], tau: vec![g.identity()], theta: vec![0], d: 1, frob: 0 }
    }

    /// Cyclic inertia `ℤ/m` sent to powers of `gen`, with `θ = id` and `d = 1`.
    pub fn cyclic(g: &GroupModel, gen: &GroupElement, m: usize) -> Result<Self> {
        let table = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
        let tau = (0..m).map(|k| g.pow(gen, k as i64)).collect();
        let out = InertialData { table, tau, theta: (0..m).collect(), d: 1, frob: 0 };
        out.check(g)?;
        Ok(out)
    }

    pub fn with_theta(mut self, theta: Vec<usize>) -> Self {
        self.theta = theta;
        self
    }

    pub fn with_residue(mut self, d: usize, frob: usize) -> Self {
        self.d = d;
        self.frob = frob;
        self
    }

    /// The same inertia viewed over a residue extension `m` times larger:
    /// `d' = m·d` and `u' = σ̄^{m d} = u^m`.
    pub fn inflate_residue(&self, m: usize) -> Self {
        let mut frob = self.identity();
        for _ in 0..m {
            frob = self.mul(frob, self.frob);
        }
        InertialData { d: self.d * m, frob, ..self.clone() }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        (0..self.order())
            .find(|&e| (0..self.order()).all(|x| self.table[e][x] == x && self.table[x][e] == x))
            .expect("checked group")
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        let e = self.identity();
        (0..self.order()).find(|&b| self.table[a][b] == e).expect("checked group")
    }

    pub fn theta_pow(&self, h: usize, k: i64) -> usize {
        let m = self.order() as i64;
        let inverse: Vec<usize> = {
            let mut v = vec![0; self.order()];
            for (i, &t) in self.theta.iter().enumerate() {
                v[t] = i;
            }
            v
        };
        let mut x = h;
        let steps = if m == 0 { 0 } else { k };
        for _ in 0..steps.unsigned_abs() {
            x = if steps > 0 { self.theta[x] } else { inverse[x] };
        }
        x
    }

    fn bad(msg: impl Into<String>) -> Error {
        Error::InvalidInertia(msg.into())
    }

    /// Structural checks: group axioms, `τ` a homomorphism into `G`, `θ` an
    /// automorphism fixing `u` with `θ^d = conjugation by u`.
    pub fn check(&self, g: &GroupModel) -> Result<()> {
        let m = self.order();
        if m == 0 || self.table.iter().any(|r| r.len() != m || r.iter().any(|&x| x >= m)) {
            return Err(Self::bad("multiplication table is not square"));
        }
        if self.tau.len() != m || self.theta.len() != m {
            return Err(Self::bad("tau and theta must list one entry per element"));
        }
        if self.d == 0 || self.frob >= m {
            return Err(Self::bad("d must be positive and frob an element of I"));
        }
        let Some(e) = (0..m).find(|&e| (0..m).all(|x| self.table[e][x] == x && self.table[x][e] == x)) else {
            return Err(Self::bad("no identity element"));
        };
        for a in 0..m {
            if !(0..m).any(|b| self.table[a][b] == e) {
                return Err(Self::bad("an element has no inverse"));
            }
            for b in 0..m {
                for c in 0..m {
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]] {
                        return Err(Self::bad("table is not associative"));
                    }
                }
            }
        }
        for t in &self.tau {
            g.check_member(t)?;
        }
        for a in 0..m {
            for b in 0..m {
                if g.mul(&self.tau[a], &self.tau[b]) != self.tau[self.table[a][b]] {
                    return Err(Self::bad("tau is not a homomorphism"));
                }
                if self.theta[self.table[a][b]] != self.table[self.theta[a]][self.theta[b]] {
                    return Err(Self::bad("theta is not a homomorphism"));
                }
            }
        }
        let mut seen = vec![false; m];
        for &t in &self.theta {
            if t >= m || seen[t] {
                return Err(Self::bad("theta is not a bijection"));
            }
            seen[t] = true;
        }
        let u = self.frob;
        if self.theta[u] != u {
            return Err(Self::bad("theta must fix u"));
        }
        let ui = self.inv(u);
        for h in 0..m {
            if self.theta_pow(h, self.d as i64) != self.mul(self.mul(u, h), ui) {
                return Err(Self::bad("theta^d must be conjugation by u"));
            }
        }
        Ok(())
    }

    pub fn d_tag(&self) -> u64 {
        self.tau.iter().map(GroupElement::d_tag).max().unwrap_or(1)
    }
}

/// `Gal(L/K)` as pairs `σ̄^k·h`, `0 ≤ k < d`, `h ∈ I`; index `k·|I| + h`.
#[derive(Clone, Debug)]
pub struct GalGroup<'a> {
    pub inertia: &'a InertialData,
}

impl<'a> GalGroup<'a> {
    pub fn new(inertia: &'a InertialData) -> Self {
        GalGroup { inertia }
    }

    pub fn order(&self) -> usize {
        self.inertia.d * self.inertia.order()
    }

    pub fn split(&self, x: usize) -> (usize, usize) {
        (x / self.inertia.order(), x % self.inertia.order())
    }

    pub fn join(&self, k: usize, h: usize) -> usize {
        k * self.inertia.order() + h
    }

    pub fn identity(&self) -> usize {
        self.join(0, self.inertia.identity())
    }

    /// `σ̄` itself.
    pub fn frobenius(&self) -> usize {
        self.normalize(1, self.inertia.identity())
    }

    /// `σ̄^k h` for any `k ≥ 0`, reduced using `σ̄^d = u`.
    pub fn normalize(&self, k: usize, h: usize) -> usize {
        let i = self.inertia;
        let (mut k, mut h) = (k, h);
        while k >= i.d {
            // σ̄^k h = σ̄^{k−d} u h
            k -= i.d;
            h = i.mul(i.frob, h);
        }
        self.join(k, h)
    }

    /// `(σ̄^{k1} h1)(σ̄^{k2} h2) = σ̄^{k1+k2} θ^{−k2}(h1) h2`.
    pub fn mul(&self, x: usize, y: usize) -> usize {
        let (k1, h1) = self.split(x);
        let (k2, h2) = self.split(y);
        let i = self.inertia;
        let h = i.mul(i.theta_pow(h1, -(k2 as i64)), h2);
        self.normalize(k1 + k2, h)
    }

    pub fn pow(&self, x: usize, e: usize) -> usize {
        let mut acc = self.identity();
        for _ in 0..e {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// Residue shift `v(g) mod d`.
    pub fn valuation(&self, x: usize) -> usize {
        self.split(x).0
    }
}
