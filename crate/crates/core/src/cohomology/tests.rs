use super::*;
use crate::groups::{GroupElement, GroupModel};
use crate::linalg::Mat;
use crate::scalars::{sqrt_power, Scalar};
use crate::wdrep::{InertialData, WDPoint};

fn torus_point(g: GroupModel, p: u64, fk: u32, with_n: bool) -> WDPoint {
    let s = sqrt_power(p, fk).unwrap();
    let phi = GroupElement::new(Mat::diag(&[s.clone(), s.inv().unwrap()]), 0);
    let n = if with_n {
        g.lie_coords(&Mat::unit(2, 0, 1)).unwrap()
    } else {
        vec![Scalar::zero(); g.group_dim]
    };
    let i = InertialData::trivial(&g);
    WDPoint::new(g, p, fk, phi, n, i)
}

#[test]
fn gl2_and_sl2_dimensions() {
    assert_eq!(cohomology_dims(&torus_point(GroupModel::gl(2), 2, 1, true)).unwrap(), (1, 1, 0));
    assert_eq!(cohomology_dims(&torus_point(GroupModel::gl(2), 2, 1, false)).unwrap(), (2, 3, 1));
    assert_eq!(cohomology_dims(&torus_point(GroupModel::sl(2), 2, 1, true)).unwrap(), (0, 0, 0));
    assert_eq!(cohomology_dims(&torus_point(GroupModel::sl(2), 2, 1, false)).unwrap(), (1, 2, 1));
}

#[test]
fn duality_on_examples() {
    for (g, n) in [(GroupModel::gl(2), true), (GroupModel::gl(2), false), (GroupModel::sl(2), false)] {
        let x = torus_point(g, 3, 1, n);
        let r = report(&x).unwrap();
        assert_eq!(r.dual_h0, r.h2);
        let m = pairing_matrix(&x).unwrap();
        assert_eq!((m.rows(), m.cols()), (r.h2, r.h2));
        if r.h2 > 0 {
            assert!(!m.det().unwrap().is_zero());
        }
        assert_eq!(r.tangent_dim_framed, x.group.group_dim + r.h2);
    }
}

#[test]
fn two_term_complex() {
    let g = GroupModel::gl(2);
    let mut x = torus_point(g.clone(), 2, 1, false);
    assert_eq!(cohomology_n0(&x).unwrap(), (2, 2));
    x.phi = g.identity();
    assert_eq!(cohomology_n0(&x).unwrap(), (4, 4));
    assert!(cohomology_n0(&torus_point(g, 2, 1, true)).is_err());
}

#[test]
fn very_smooth_examples() {
    let std = torus_point(GroupModel::sl(2), 2, 1, true);
    let r = very_smooth_report(&std).unwrap();
    assert!(r.very_smooth && r.agree);
    let sib = torus_point(GroupModel::sl(2), 2, 1, false);
    let r = very_smooth_report(&sib).unwrap();
    assert!(!r.very_smooth && r.agree);
    // smooth, but T = q⁻¹AdΦ has eigenvalue −1
    let g = GroupModel::gl(2);
    let phi = GroupElement::new(Mat::diag(&[Scalar::from_int(2), Scalar::from_int(-1)]), 0);
    let x = WDPoint::new(g.clone(), 2, 1, phi, vec![Scalar::zero(); 4], InertialData::trivial(&g));
    assert!(is_smooth(&x).unwrap());
    let r = very_smooth_report(&x).unwrap();
    assert!(!r.very_smooth && r.agree);
    assert_eq!(r.power_h2, 1);
}

#[test]
fn power_test_matches_direct_power() {
    // M = 120 is small enough to raise T to the power directly
    let g = GroupModel::gl(2);
    let phis = [
        Mat::from_ints(&[&[2, 0], &[0, -1]]),
        Mat::from_ints(&[&[1, 1], &[0, 1]]),
        Mat::from_ints(&[&[2, 1], &[0, 1]]),
        Mat::from_ints(&[&[0, 1], &[-1, 0]]),
    ];
    for phi in phis {
        let x = WDPoint::new(
            g.clone(),
            2,
            2,
            GroupElement::new(phi, 0),
            vec![Scalar::zero(); 4],
            InertialData::trivial(&g),
        );
        let m = x.trivialize_inertia().unwrap().m;
        assert_eq!(m, 120);
        let t = x.ad_phi().scale(&x.q().inv().unwrap());
        let direct = 4 - t.pow(120).sub(&Mat::identity(4)).rank();
        assert_eq!(power_test_h2(&x, m).unwrap(), direct);
    }
}
