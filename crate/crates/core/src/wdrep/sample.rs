//! Seeded sampling of points in the fiber over a fixed `(N, τ)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::groups::{FactorKind, GroupElement, GroupModel};
use crate::linalg::Mat;
use crate::nilpotent::associated_cocharacter;
use crate::scalars::{sqrt_power, Scalar};
use crate::wdrep::{InertialData, WDPoint};

/// Basis of the block-diagonal matrices commuting with `N` and with every
/// identity-component `τ(g)`; 𝒢(n) blocks are kept in `diag(g, a)` shape.
fn commutant_basis(g: &GroupModel, n: &Mat, taus: &[GroupElement]) -> Vec<Mat> {
    let mut slots = Vec::new();
    for f in &g.factors {
        for i in 0..f.std_size {
            for j in 0..f.std_size {
                let edge = f.kind == FactorKind::CalG && (i == f.n) != (j == f.n);
                if !edge {
                    slots.push((f.std_off + i, f.std_off + j));
                }
            }
        }
    }
    let d = g.std_dim;
    let mut gens: Vec<&Mat> = vec![n];
    gens.extend(taus.iter().filter(|t| t.component == 0).map(|t| &t.matrix));
    // unknowns are the slot entries; constraints Z A − A Z = 0
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for a in gens {
        for r in 0..d {
            for c in 0..d {
                let mut row = vec![Scalar::zero(); slots.len()];
                for (k, &(i, j)) in slots.iter().enumerate() {
                    // (Z A)[r][c] has Z[r][j]·A[j][c]; (A Z)[r][c] has A[r][i]·Z[i][c]
                    if i == r {
                        row[k] += &a[(j, c)];
                    }
                    if j == c {
                        row[k] -= &a[(r, i)];
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let k = if rows.is_empty() {
        Mat::identity(slots.len()).kernel()
    } else {
        Mat::from_rows(rows).expect("rectangular").kernel()
    };
    k.basis()
        .iter()
        .map(|v| {
            let mut m = Mat::zeros(d, d);
            for (x, &(i, j)) in v.iter().zip(&slots) {
                m[(i, j)] = x.clone();
            }
            m
        })
        .collect()
}

fn fixes_tau_and_n(g: &GroupModel, z: &GroupElement, n: &[Scalar], taus: &[GroupElement]) -> bool {
    g.is_member(z)
        && g.ad_matrix(z).mul_vec(n) == n
        && taus.iter().all(|t| g.conj(z, t) == *t)
}

/// Draws `count` points `(Φ₀·z, N, τ)` where `Φ₀ = λ_N(√q)·c₀`, with `λ_N`
/// taken inside the centralizer of `τ`, `c₀` an optional element realizing
/// `θ`, and `z` a seeded random element centralizing `τ` and `N`.
#[allow(clippy::too_many_arguments)]
pub fn sample_fiber(
    g: &GroupModel,
    inertia: &InertialData,
    n: &[Scalar],
    p: u64,
    fk: u32,
    count: usize,
    seed: u64,
    base_twist: Option<&GroupElement>,
) -> Result<Vec<WDPoint>> {
    inertia.check(g)?;
    let z_alg = g.fixed_lie(&inertia.tau);
    let lam = associated_cocharacter(g, n, Some(&z_alg))?;
    let s = sqrt_power(p, fk)?;
    let mut phi0 = lam.eval(&s)?;
    if let Some(c) = base_twist {
        phi0 = g.mul(&phi0, c);
    }
    let base = WDPoint::new(g.clone(), p, fk, phi0.clone(), n.to_vec(), inertia.clone());
    base.ensure_valid()?;
    let basis = commutant_basis(g, &g.lie_elem(n), &inertia.tau);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let unipotent = |t: i64| g.exp_nilpotent(&n.iter().map(|x| x * &Scalar::from_int(t)).collect::<Vec<_>>());
    while out.len() < count {
        let mut z = None;
        for _ in 0..64 {
            let mut m = Mat::zeros(g.std_dim, g.std_dim);
            for b in &basis {
                let c: i64 = rng.gen_range(-3..=3);
                if c != 0 {
                    m = m.add(&b.scale(&Scalar::from_int(c)));
                }
            }
            let cand = GroupElement::new(m, 0);
            if fixes_tau_and_n(g, &cand, n, &inertia.tau) {
                z = Some(cand);
                break;
            }
        }
        let z = match z {
            Some(z) => z,
            None => {
                let t: i64 = rng.gen_range(-3..=3);
                let mut u = unipotent(t)?;
                let minus = GroupElement::new(u.matrix.neg(), 0);
                if rng.gen_bool(0.5) && fixes_tau_and_n(g, &minus, n, &inertia.tau) {
                    u = minus;
                }
                u
            }
        };
        let x = WDPoint::new(g.clone(), p, fk, g.mul(&phi0, &z), n.to_vec(), inertia.clone());
        if x.validate().is_valid() {
            out.push(x);
        }
    }
    Ok(out)
}
