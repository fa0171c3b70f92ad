//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Runs without the libtest harness so the report is
//! printed in order.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wdlab::cohomology::{cohomology_dims, complex_of, dual_h0_twisted, is_very_smooth, pairing_matrix, report, very_smooth_report};
use wdlab::groups::{oddness_fixed_dim, GroupElement, GroupModel, Morphism};
use wdlab::linalg::{Mat, Subspace};
use wdlab::nilpotent::{jacobson_morozov, jordan_nilpotent, partition_label, partitions, weight2_in_image, Cocharacter};
use wdlab::phimod::{
    fontaine_to_wd, global_ledger, hodge_dim, inflated_point, is_regular, local_dim, normalize, wd_to_phi_module,
    wl_frobenius_centralizes, GlobalLedgerInput, HodgeType,
};
use wdlab::scalars::Scalar;
use wdlab::smoothfactory::{product_point, pushforward, smooth_point, standard_sl2_point};
use wdlab::wdrep::{sample_fiber, InertialData, WDPoint};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>, ctx: &str) -> Result<T, String> {
    r.map_err(|err| format!("{ctx}: {err}"))
}

fn el(rows: &[&[i64]]) -> GroupElement {
    GroupElement::new(Mat::from_ints(rows), 0)
}

fn block(a: &Mat, b: &Mat) -> Mat {
    Mat::block_diag(&[a.clone(), b.clone()])
}

/// Lie coordinates of the Jordan nilpotent, padded with 1-blocks.
fn nilpotent(g: &GroupModel, parts: &[usize]) -> Option<Vec<Scalar>> {
    let mut full = parts.to_vec();
    let total: usize = parts.iter().sum();
    full.extend(std::iter::repeat(1).take(g.std_dim.checked_sub(total)?));
    g.lie_coords(&jordan_nilpotent(&full)).ok()
}

fn zero(g: &GroupModel) -> Vec<Scalar> {
    vec![Scalar::zero(); g.group_dim]
}

struct Family {
    label: String,
    group: GroupModel,
    inertia: InertialData,
    n: Vec<Scalar>,
    twist: Option<GroupElement>,
}

fn family(label: &str, g: &GroupModel, inertia: InertialData, n: Vec<Scalar>) -> Family {
    Family { label: label.into(), group: g.clone(), inertia, n, twist: None }
}

/// Families over GL2, GL3, SL2, GL2×GL1 and 𝒢₂ with trivial, order 2 and
/// order 3 inertia. `N` is always chosen fixed by the inertia.
fn families() -> Vec<Family> {
    let mut out = Vec::new();
    let rot = Mat::from_ints(&[&[0, -1], &[1, -1]]);
    let one = Mat::identity(1);

    let gl2 = GroupModel::gl(2);
    let e = nilpotent(&gl2, &[2]).unwrap();
    out.push(family("GL2 N=e", &gl2, InertialData::trivial(&gl2), e.clone()));
    out.push(family("GL2 N=0", &gl2, InertialData::trivial(&gl2), zero(&gl2)));
    let minus = GroupElement::new(Mat::scalar(2, Scalar::from_int(-1)), 0);
    out.push(family("GL2 I=<-1> N=e", &gl2, InertialData::cyclic(&gl2, &minus, 2).unwrap(), e.clone()));
    let refl = el(&[&[1, 0], &[0, -1]]);
    let i2 = InertialData::cyclic(&gl2, &refl, 2).unwrap();
    out.push(family("GL2 I=Z/2 N=0", &gl2, i2.clone(), zero(&gl2)));
    out.push(family("GL2 I=Z/2 d=2 N=0", &gl2, i2.with_residue(2, 1), zero(&gl2)));
    let r = GroupElement::new(rot.clone(), 0);
    let i3 = InertialData::cyclic(&gl2, &r, 3).unwrap();
    out.push(family("GL2 I=Z/3 N=0", &gl2, i3.clone(), zero(&gl2)));
    let mut f = family(
        "GL2 I=Z/3 theta=inv d=2 N=0",
        &gl2,
        i3.with_theta(vec![0, 2, 1]).with_residue(2, 0),
        zero(&gl2),
    );
    f.twist = Some(el(&[&[0, 1], &[1, 0]]));
    out.push(f);

    let gl3 = GroupModel::gl(3);
    for parts in partitions(3) {
        let n = nilpotent(&gl3, &parts).unwrap();
        out.push(family(&format!("GL3 N={}", partition_label(&parts)), &gl3, InertialData::trivial(&gl3), n));
    }
    let t = el(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, -1]]);
    out.push(family(
        "GL3 I=Z/2 N=2+1",
        &gl3,
        InertialData::cyclic(&gl3, &t, 2).unwrap(),
        nilpotent(&gl3, &[2]).unwrap(),
    ));
    let r3 = GroupElement::new(block(&Mat::identity(1), &rot), 0);
    out.push(family("GL3 I=Z/3 N=0", &gl3, InertialData::cyclic(&gl3, &r3, 3).unwrap(), zero(&gl3)));

    let sl2 = GroupModel::sl(2);
    let es = nilpotent(&sl2, &[2]).unwrap();
    out.push(family("SL2 N=e", &sl2, InertialData::trivial(&sl2), es.clone()));
    out.push(family("SL2 N=0", &sl2, InertialData::trivial(&sl2), zero(&sl2)));
    out.push(family("SL2 I=<-1> N=e", &sl2, InertialData::cyclic(&sl2, &minus, 2).unwrap(), es));
    out.push(family("SL2 I=Z/3 N=0", &sl2, InertialData::cyclic(&sl2, &r, 3).unwrap(), zero(&sl2)));

    let p21 = GroupModel::product(&[GroupModel::gl(2), GroupModel::gl1()]);
    out.push(family("GL2xGL1 N=e", &p21, InertialData::trivial(&p21), nilpotent(&p21, &[2]).unwrap()));
    out.push(family("GL2xGL1 N=0", &p21, InertialData::trivial(&p21), zero(&p21)));
    let t21 = GroupElement::new(block(&Mat::from_ints(&[&[1, 0], &[0, -1]]), &one), 0);
    out.push(family("GL2xGL1 I=Z/2 N=0", &p21, InertialData::cyclic(&p21, &t21, 2).unwrap(), zero(&p21)));
    let r21 = GroupElement::new(block(&rot, &one), 0);
    out.push(family("GL2xGL1 I=Z/3 N=0", &p21, InertialData::cyclic(&p21, &r21, 3).unwrap(), zero(&p21)));

    let cg = GroupModel::calg(2);
    out.push(family("calG2 N=e", &cg, InertialData::trivial(&cg), nilpotent(&cg, &[2]).unwrap()));
    out.push(family("calG2 N=0", &cg, InertialData::trivial(&cg), zero(&cg)));
    let mc = GroupElement::new(Mat::diag(&[Scalar::from_int(-1), Scalar::from_int(-1), Scalar::one()]), 0);
    out.push(family(
        "calG2 I=<-1> N=e",
        &cg,
        InertialData::cyclic(&cg, &mc, 2).unwrap(),
        nilpotent(&cg, &[2]).unwrap(),
    ));
    let rc = GroupElement::new(block(&rot, &one), 0);
    out.push(family("calG2 I=Z/3 N=0", &cg, InertialData::cyclic(&cg, &rc, 3).unwrap(), zero(&cg)));
    out
}

fn corpus() -> Result<Vec<(String, WDPoint)>, String> {
    let mut out = Vec::new();
    let settings = [(2u64, 1u32), (3, 1), (5, 2)];
    for (k, f) in families().into_iter().enumerate() {
        for (j, &(p, fk)) in settings.iter().enumerate() {
            let seed = 1000 + 10 * k as u64 + j as u64;
            let pts = e(
                sample_fiber(&f.group, &f.inertia, &f.n, p, fk, 8, seed, f.twist.as_ref()),
                &format!("sampling {}", f.label),
            )?;
            for x in pts {
                // the N = 0 sibling keeps the q-eigenvector of Ad(Φ), so h2 > 0
                if x.n.iter().any(|c| !c.is_zero()) && out.len() % 2 == 0 {
                    let mut y = x.clone();
                    y.n = zero(&y.group);
                    out.push((format!("{} p={p} fK={fk} N=0", f.label), y));
                }
                out.push((format!("{} p={p} fK={fk}", f.label), x));
            }
        }
    }
    Ok(out)
}

/// Every catalog group paired with every Jordan type of its realization
/// that lies in the Lie algebra.
fn factory_points() -> Result<Vec<(String, WDPoint)>, String> {
    let mut groups: Vec<GroupModel> = (1..=4).map(GroupModel::gl).collect();
    groups.extend([GroupModel::sl(2), GroupModel::sl(3), GroupModel::calg(2), GroupModel::calg(3)]);
    groups.push(GroupModel::product(&[GroupModel::gl(2), GroupModel::gl1()]));
    groups.push(GroupModel::product(&[GroupModel::gl(2), GroupModel::gl(2)]));
    let mut out = Vec::new();
    for g in &groups {
        for parts in partitions(g.std_dim) {
            let Some(n) = nilpotent(g, &parts) else { continue };
            for &(p, fk) in &[(2u64, 1u32), (3, 2)] {
                let c = e(smooth_point(g, &InertialData::trivial(g), &n, p, fk), &g.name)?;
                out.push((format!("{} {} p={p} fK={fk}", g.name, partition_label(&parts)), c.point));
            }
        }
    }
    Ok(out)
}

fn c1_standard_point() -> Check {
    let x = e(standard_sl2_point(2, 1), "standard point")?;
    let (_, _, h2) = e(cohomology_dims(&x), "cohomology")?;
    let mut y = x.clone();
    y.n = zero(&x.group);
    e(y.ensure_valid(), "N = 0 sibling")?;
    let (_, _, h2y) = e(cohomology_dims(&y), "cohomology")?;
    ensure(h2 == 0 && h2y == 1, || format!("h2 = {h2}, sibling h2 = {h2y}"))?;
    Ok("h2 = 0 at (2,1); h2 = 1 with N = 0".into())
}

fn c2_euler(corpus: &[(String, WDPoint)]) -> Check {
    for (label, x) in corpus {
        let c = e(complex_of(x), label)?;
        ensure(c.d1.mul(&c.d0).is_zero(), || format!("{label}: d1 d0 ≠ 0"))?;
        let k = c.v.dim();
        let h0 = c.d0.kernel().dim();
        let ker1 = c.d1.kernel();
        let im0 = c.d0.image();
        let h1 = e(Subspace::quotient_dim(&ker1, &im0), label)?;
        let h2 = k - c.d1.rank();
        ensure(h0 + h2 == h1, || format!("{label}: ({h0},{h1},{h2})"))?;
        let dims = e(cohomology_dims(x), label)?;
        ensure(dims == (h0, h1, h2), || format!("{label}: module dims {dims:?}"))?;
    }
    Ok(format!("{} points", corpus.len()))
}

fn c3_duality(corpus: &[(String, WDPoint)]) -> Check {
    let mut nonsmooth = 0;
    for (label, x) in corpus {
        let (_, _, h2) = e(cohomology_dims(x), label)?;
        let d = e(dual_h0_twisted(x), label)?;
        ensure(d == h2, || format!("{label}: dual h0 {d} ≠ h2 {h2}"))?;
        let pm = e(pairing_matrix(x), label)?;
        ensure(pm.rows() == h2 && pm.rank() == h2, || format!("{label}: pairing degenerate"))?;
        nonsmooth += usize::from(h2 > 0);
    }
    ensure(nonsmooth > 0, || "no point with h2 > 0 exercised the pairing".into())?;
    Ok(format!("{} points, {nonsmooth} with h2 > 0", corpus.len()))
}

fn c4_equidimensional(factory: &[(String, WDPoint)]) -> Check {
    for (label, x) in factory {
        let r = e(report(x), label)?;
        ensure(r.tangent_dim_framed == x.group.dim() && r.h2 == 0, || {
            format!("{label}: tangent {} vs dim {}", r.tangent_dim_framed, x.group.dim())
        })?;
    }
    Ok(format!("{} constructed points", factory.len()))
}

fn regular_cochar(g: &GroupModel, shift: i64) -> Result<Cocharacter, String> {
    let n = g.std_dim;
    let d: Vec<Scalar> = (0..n).map(|i| Scalar::from_int(shift + (n - i) as i64 * (shift + 1))).collect();
    let h = e(g.lie_coords(&Mat::diag(&d)), "hodge cocharacter")?;
    e(Cocharacter::from_h(g, &h), "hodge cocharacter")
}

fn c5_local_dims() -> Check {
    let mut cases = 0;
    for n in 1..=4usize {
        let g = GroupModel::gl(n);
        for deg in 1..=3usize {
            let cochars = (0..deg).map(|i| regular_cochar(&g, i as i64)).collect::<Result<Vec<_>, _>>()?;
            let v = HodgeType::new(cochars);
            ensure(is_regular(&g, &v), || format!("GL{n}: type not regular"))?;
            let expect = 1 + n * n + deg * n * (n - 1) / 2;
            let got = e(local_dim(&g, 1, Some(&v), false, true), "local_dim")?;
            ensure(got == expect, || format!("GL{n} deg {deg}: {got} ≠ {expect}"))?;
            let fixed = e(local_dim(&g, 1, Some(&v), true, true), "local_dim")?;
            ensure(got - fixed == 1, || format!("GL{n}: fixed determinant {fixed}"))?;
            cases += 1;
        }
        let lg = e(local_dim(&g, 1, None, false, false), "local_dim")?;
        ensure(lg == 1 + n * n, || format!("GL{n}, l ≠ p: {lg}"))?;
    }
    for n in 2..=4usize {
        let g = GroupModel::calg(n);
        let a = e(local_dim(&g, 1, None, false, false), "local_dim")?;
        let b = e(local_dim(&g, 1, None, true, false), "local_dim")?;
        ensure(a - b == 1 && a == 2 + n * n, || format!("calG{n}: {a}, {b}"))?;
        cases += 1;
    }
    Ok(format!("{cases} cases"))
}

fn c6_weight_two() -> Check {
    let mut count = 0;
    for n in 1..=4usize {
        let g = GroupModel::gl(n);
        for parts in partitions(n) {
            let x = nilpotent(&g, &parts).ok_or("nilpotent")?;
            let t = e(jacobson_morozov(&g, &x, None), "JM")?;
            ensure(t.check(&g), || format!("GL{n} {}: bad triple", partition_label(&parts)))?;
            let ok = e(weight2_in_image(&g, &x), "weight 2")?;
            ensure(ok, || format!("GL{n} {}: g_2 ⊄ im ad_N", partition_label(&parts)))?;
            count += 1;
        }
    }
    Ok(format!("{count} nilpotent types"))
}

fn h2_of(x: &WDPoint, what: &str) -> Result<usize, String> {
    Ok(e(cohomology_dims(x), what)?.2)
}

fn c7_functorial() -> Check {
    let mut pushes = 0;
    let gl2 = GroupModel::gl(2);
    let triv2 = InertialData::trivial(&gl2);
    let mut gl2_points = Vec::new();
    for parts in partitions(2) {
        let n = nilpotent(&gl2, &parts).unwrap();
        gl2_points.push(e(smooth_point(&gl2, &triv2, &n, 3, 1), "GL2 point")?.point);
    }
    let tensor = e(Morphism::tensor(&gl2, &gl2), "tensor")?;
    for a in &gl2_points {
        for b in &gl2_points {
            let pair = e(product_point(&[a, b]), "product")?;
            let y = e(pushforward(&tensor, &pair), "tensor pushforward")?;
            ensure(h2_of(&y, "tensor")? == 0, || "tensor image has h2 > 0".into())?;
            pushes += 1;
        }
    }
    for n in 1..=4usize {
        let g = GroupModel::gl(n);
        let det = e(Morphism::det(&g), "det")?;
        for parts in partitions(n) {
            let x = e(smooth_point(&g, &InertialData::trivial(&g), &nilpotent(&g, &parts).unwrap(), 2, 1), "point")?;
            let y = e(pushforward(&det, &x.point), "det pushforward")?;
            ensure(h2_of(&y, "det")? == 0, || format!("det on GL{n} {}", partition_label(&parts)))?;
            pushes += 1;
        }
    }
    for p in [2u64, 3] {
        let s = e(standard_sl2_point(p, 1), "standard point")?;
        for n in 2..=4usize {
            let g = GroupModel::gl(n);
            for parts in partitions(n).into_iter().filter(|q| q[0] > 1) {
                let x = nilpotent(&g, &parts).unwrap();
                let t = e(jacobson_morozov(&g, &x, None), "JM")?;
                let f = e(Morphism::sl2_from_triple(&g, &t.n, &t.h, &t.y), "sl2 morphism")?;
                let y = e(pushforward(&f, &s), "sl2 pushforward")?;
                ensure(h2_of(&y, "sl2")? == 0, || format!("sl2 into GL{n} {}", partition_label(&parts)))?;
                pushes += 1;
            }
        }
    }
    Ok(format!("{pushes} pushforwards"))
}

fn c8_very_smooth(corpus: &[(String, WDPoint)], factory: &[(String, WDPoint)]) -> Check {
    let mut very = 0;
    for (label, x) in corpus.iter().chain(factory) {
        let r = e(very_smooth_report(x), label)?;
        ensure(r.agree, || format!("{label}: power h2 {} vs eigenvalue test {}", r.power_h2, r.eigenvalue_detects))?;
        if r.very_smooth {
            let (_, _, h2) = e(cohomology_dims(x), label)?;
            ensure(h2 == 0, || format!("{label}: very smooth but h2 = {h2}"))?;
        }
        very += usize::from(r.very_smooth);
    }
    for (label, x) in factory {
        ensure(e(is_very_smooth(x), label)?, || format!("{label}: constructed point not very smooth"))?;
    }
    Ok(format!("{} points agree, {very} very smooth", corpus.len() + factory.len()))
}

fn c9_fontaine(corpus: &[(String, WDPoint)]) -> Check {
    let mut checked = 0;
    let mut points = 0;
    for (label, x) in corpus.iter().filter(|(_, x)| x.fk == 1) {
        let mut any = false;
        for fl in 1..=3u32 {
            if fl % (x.inertia.d as u32 * x.fk) != 0 {
                continue;
            }
            let m = e(wd_to_phi_module(x, fl), label)?;
            let y = e(fontaine_to_wd(&m), label)?;
            ensure(y == e(inflated_point(x, fl), label)?, || format!("{label}, fL = {fl}: roundtrip differs"))?;
            // move the module off its collapsed basis (keeping a_0 = 1) and back
            let g = &x.group;
            let a: Vec<GroupElement> = (0..fl as i64).map(|i| g.pow(&x.phi, i)).collect();
            let twisted = e(m.change_basis(&a), label)?;
            e(twisted.validate(), label)?;
            ensure(e(normalize(&twisted, 0), label)? == m, || format!("{label}, fL = {fl}: normalization differs"))?;
            ensure(e(fontaine_to_wd(&twisted), label)? == y, || format!("{label}, fL = {fl}: twisted image differs"))?;
            checked += 1;
            any = true;
        }
        ensure(wl_frobenius_centralizes(x), || format!("{label}: r(W_L) does not centralize"))?;
        points += usize::from(any);
    }
    ensure(points >= 100, || format!("only {points} points"))?;
    Ok(format!("{checked} roundtrips over {points} points"))
}

fn c10_ledger() -> Check {
    let g = GroupModel::calg(2);
    let c = GroupElement::new(Mat::identity(3), 1);
    let odd = e(oddness_fixed_dim(&g, &c, None), "oddness")?;
    let h = e(g.lie_coords(&Mat::diag(&[Scalar::from_int(1), Scalar::zero(), Scalar::zero()])), "cochar")?;
    let v = HodgeType::new(vec![e(Cocharacter::from_h(&g, &h), "cochar")?]);
    ensure(is_regular(&g, &v), || "Hodge type not regular".into())?;
    let inp = GlobalLedgerInput {
        sinf_size: 2,
        archimedean_h0s: vec![odd.fixed_dim],
        g0_dim: g.derived_dim(),
        places_over_p: vec![1],
        flag_dim: hodge_dim(&g, &v),
        odd_h0: g.dim() - g.borel_dim,
    };
    let l = global_ledger(&inp);
    ensure(l.odd && l.krull_lower_bound == 1, || format!("{l:?}"))?;
    Ok(format!("krull lower bound {} (s = {}, r_min = {})", l.krull_lower_bound, l.s, l.r_min))
}

fn c11_oddness() -> Check {
    for n in 2..=4usize {
        let g = GroupModel::calg(n);
        let c = GroupElement::new(Mat::identity(n + 1), 1);
        let o = e(oddness_fixed_dim(&g, &c, None), "oddness")?;
        ensure(o.fixed_dim == n * (n - 1) / 2 && o.odd, || format!("calG{n}: {o:?}"))?;
        ensure(o.target == g.dim() - g.borel_dim, || format!("calG{n}: target {}", o.target))?;
    }
    for n in [2usize, 4] {
        let g = GroupModel::calg(n);
        let h = n / 2;
        let mut m = Mat::zeros(n + 1, n + 1);
        for i in 0..h {
            m[(i, h + i)] = Scalar::one();
            m[(h + i, i)] = Scalar::from_int(-1);
        }
        m[(n, n)] = Scalar::from_int(-1);
        let o = e(oddness_fixed_dim(&g, &GroupElement::new(m, 1), None), "symplectic")?;
        ensure(o.fixed_dim == n * (n + 1) / 2 && !o.odd, || format!("calG{n} symplectic: {o:?}"))?;
    }
    Ok("n(n-1)/2 for n = 2,3,4; symplectic n(n+1)/2 for n = 2,4".into())
}

// ---- independent oracle for gl2 over Q ----

type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

fn mat2_mul(a: &[[Q; 2]; 2], b: &[[Q; 2]; 2]) -> [[Q; 2]; 2] {
    let c = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
    [[c(0, 0), c(0, 1)], [c(1, 0), c(1, 1)]]
}

fn mat2_inv(a: &[[Q; 2]; 2]) -> [[Q; 2]; 2] {
    let det = &a[0][0] * &a[1][1] - &a[0][1] * &a[1][0];
    [[&a[1][1] / &det, -&a[0][1] / &det], [-&a[1][0] / &det, &a[0][0] / &det]]
}

/// `E11, E12, E21, E22` coordinates.
fn flat(a: &[[Q; 2]; 2]) -> [Q; 4] {
    [a[0][0].clone(), a[0][1].clone(), a[1][0].clone(), a[1][1].clone()]
}

fn zero2() -> [[Q; 2]; 2] {
    [[q(0), q(0)], [q(0), q(0)]]
}

fn unit(k: usize) -> [[Q; 2]; 2] {
    let mut m = [[q(0), q(0)], [q(0), q(0)]];
    m[k / 2][k % 2] = q(1);
    m
}

fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, piv);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &rows[r][c];
                for j in 0..cols {
                    let t = &f * &rows[r][j];
                    rows[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

fn oracle_dims(phi: &[[Q; 2]; 2], n: &[[Q; 2]; 2], qq: &Q) -> (usize, usize, usize) {
    let pinv = mat2_inv(phi);
    // columns of Ad(Φ) and ad_N on the basis E_ij
    let mut ad_phi = vec![vec![q(0); 4]; 4];
    let mut ad_n = vec![vec![q(0); 4]; 4];
    for k in 0..4 {
        let u = unit(k);
        let a = flat(&mat2_mul(&mat2_mul(phi, &u), &pinv));
        let nu = mat2_mul(n, &u);
        let un = mat2_mul(&u, n);
        for i in 0..4 {
            ad_phi[i][k] = a[i].clone();
            ad_n[i][k] = &flat(&nu)[i] - &flat(&un)[i];
        }
    }
    // d0 is 8×4: [1 − AdΦ; ad_N]; d1 is 4×8: [ad_N | q⁻¹AdΦ − 1]
    let mut d0 = Vec::new();
    for i in 0..4 {
        d0.push((0..4).map(|k| if i == k { q(1) } else { q(0) } - &ad_phi[i][k]).collect::<Vec<_>>());
    }
    for row in &ad_n {
        d0.push(row.clone());
    }
    let mut d1 = Vec::new();
    for i in 0..4 {
        let mut row = ad_n[i].clone();
        row.extend((0..4).map(|k| &ad_phi[i][k] / qq - if i == k { q(1) } else { q(0) }));
        d1.push(row);
    }
    let r0 = rank(d0);
    let r1 = rank(d1);
    (4 - r0, 8 - r1 - r0, 4 - r1)
}

fn c12_oracle() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let g = GroupModel::gl(2);
    let mut nonsmooth = 0;
    for i in 0..50 {
        let p: i64 = [2, 3, 5, 7][rng.gen_range(0..4)];
        let with_n = i % 2 == 0;
        let mut rnd = |lo: i64, hi: i64| loop {
            let v: i64 = rng.gen_range(lo..=hi);
            if v != 0 {
                break v;
            }
        };
        // Φ = P·[[p a, b], [0, a]]·P⁻¹ and N = P e12 P⁻¹, or N = 0 with Φ generic
        let a = rnd(-4, 4);
        let (phi0, n0) = if with_n {
            ([[q(p * a), q(rnd(-3, 3))], [q(0), q(a)]], unit(1))
        } else if i % 4 == 1 {
            ([[q(p * a), q(0)], [q(0), q(a)]], zero2())
        } else {
            ([[q(a), q(rnd(-3, 3))], [q(rnd(-3, 3)), q(rnd(-3, 3))]], zero2())
        };
        if (&phi0[0][0] * &phi0[1][1] - &phi0[0][1] * &phi0[1][0]).is_zero() {
            continue;
        }
        let pm = loop {
            let m = [[q(rnd(-2, 2)), q(rnd(-2, 2))], [q(rnd(-2, 2)), q(rnd(-2, 2))]];
            if !(&m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]).is_zero() {
                break m;
            }
        };
        let pinv = mat2_inv(&pm);
        let phi = mat2_mul(&mat2_mul(&pm, &phi0), &pinv);
        let n = mat2_mul(&mat2_mul(&pm, &n0), &pinv);
        let expected = oracle_dims(&phi, &n, &q(p));

        let to_mat = |m: &[[Q; 2]; 2]| {
            Mat::from_rows(m.iter().map(|r| r.iter().map(|x| Scalar::rational(x.clone())).collect()).collect())
                .expect("2×2")
        };
        let nc = e(g.lie_coords(&to_mat(&n)), "N")?;
        let x = WDPoint::new(g.clone(), p as u64, 1, GroupElement::new(to_mat(&phi), 0), nc, InertialData::trivial(&g));
        e(x.ensure_valid(), "oracle point")?;
        let got = e(cohomology_dims(&x), "cohomology")?;
        ensure(got == expected, || format!("point {i}: library {got:?}, oracle {expected:?}"))?;
        nonsmooth += usize::from(got.2 > 0);
    }
    ensure(nonsmooth > 0, || "no oracle point with h2 > 0".into())?;
    Ok(format!("50 random points, {nonsmooth} with h2 > 0"))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let corpus = corpus();
    let factory = factory_points();
    println!("corpus ready [{:.1?}]", start.elapsed());
    let with_corpus = |f: &dyn Fn(&[(String, WDPoint)]) -> Check| match &corpus {
        Ok(c) => f(c),
        Err(err) => Err(format!("corpus: {err}")),
    };
    let with_factory = |f: &dyn Fn(&[(String, WDPoint)]) -> Check| match &factory {
        Ok(c) => f(c),
        Err(err) => Err(format!("factory: {err}")),
    };
    let checks: Vec<(&str, Box<dyn Fn() -> Check + '_>)> = vec![
        ("standard point reproduction", Box::new(c1_standard_point)),
        ("Euler characteristic", Box::new(|| with_corpus(&|c| {
            if c.len() < 500 {
                return Err(format!("corpus has only {} points", c.len()));
            }
            c2_euler(c)
        }))),
        ("Tate duality", Box::new(|| with_corpus(&c3_duality))),
        ("equidimensionality", Box::new(|| with_factory(&c4_equidimensional))),
        ("local dimension formulas", Box::new(c5_local_dims)),
        ("weight-2 lemma", Box::new(c6_weight_two)),
        ("functorial smoothness", Box::new(c7_functorial)),
        ("very-smoothness consistency", Box::new(|| match (&corpus, &factory) {
            (Ok(c), Ok(f)) => c8_very_smooth(c, f),
            _ => Err("corpus unavailable".into()),
        })),
        ("Fontaine roundtrip", Box::new(|| with_corpus(&c9_fontaine))),
        ("global ledger", Box::new(c10_ledger)),
        ("oddness", Box::new(c11_oddness)),
        ("brute-force oracle", Box::new(c12_oracle)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in checks.iter().enumerate() {
        let t = Instant::now();
        match check() {
            Ok(d) => println!("PASS {:>2} {name}: {d} [{:.1?}]", i + 1, t.elapsed()),
            Err(d) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {d}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed in {:.1?}", checks.len() - failed, start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
