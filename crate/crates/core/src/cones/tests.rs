use num_rational::BigRational;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::*;
use crate::exactalg::subspace::RationalSubspace;
use crate::rat;

fn v(xs: &[i64]) -> Vec<BigRational> {
    xs.iter().map(|&x| rat(x)).collect()
}

fn orthant(n: usize) -> ConeHandle {
    let rays = (0..n)
        .map(|i| {
            let mut e = vec![BigRational::zero(); n];
            e[i] = rat(1);
            e
        })
        .collect();
    ConeHandle::polyhedral_full(PolyhedralCone::from_rays(n, rays).unwrap())
}

fn mat(rows: &[&[i64]]) -> Matrix<BigRational> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
}

#[test]
fn orthant_membership() {
    let c = orthant(2);
    assert!(c.contains(&v(&[1, 2])).unwrap());
    assert!(!c.contains(&v(&[1, -1])).unwrap());
    assert!(c.contains(&v(&[0, 0])).unwrap());
    assert!(c.contains(&v(&[1, 2])).unwrap());
    assert!(c.is_strictly_convex());
    assert!(c.is_nonzero());
}

#[test]
fn lorentzian_boundary_membership() {
    // Q = diag(1, -1), h = (1, 0): v = (1, 1) has q(v) = 0 (boundary)
    let q = mat(&[&[1, 0], &[0, -1]]);
    let c = ConeHandle::lorentzian_full(LorentzianCone::new(q, v(&[1, 0])).unwrap());
    assert!(c.contains(&v(&[1, 1])).unwrap());
    assert!(c.contains(&v(&[2, 1])).unwrap());
    assert!(!c.contains(&v(&[1, 2])).unwrap());
    assert!(!c.contains(&v(&[-1, 0])).unwrap());
    assert!(c.is_strictly_convex());
}

#[test]
fn strict_convexity_witness_line() {
    let c = ConeHandle::polyhedral_full(
        PolyhedralCone::from_rays(2, vec![v(&[1, 0]), v(&[-1, 0])]).unwrap(),
    );
    let w = c.strict_convexity_witness().unwrap();
    // the witness is a direction of a line inside the cone
    assert!(c.contains(&w).unwrap());
    assert!(c.contains(&w.iter().map(|x| -x.clone()).collect::<Vec<_>>()).unwrap());

    let ok = ConeHandle::polyhedral_full(
        PolyhedralCone::from_rays(2, vec![v(&[1, 0]), v(&[1, 1]), v(&[0, 1])]).unwrap(),
    );
    assert!(ok.is_strictly_convex());
}

#[test]
fn shear_preserves_orthant_rotation_does_not() {
    let c = orthant(2);
    assert!(c.preservation_witness(&Matrix::identity(2)).unwrap().is_none());
    let shear = mat(&[&[1, 1], &[0, 1]]);
    assert!(c.preservation_witness(&shear).unwrap().is_none());
    let rot = mat(&[&[0, -1], &[1, 0]]);
    let w = c.preservation_witness(&rot).unwrap().unwrap();
    match w {
        PreservationFailure::RayEscapes { image, .. } => {
            assert!(!c.contains(&image).unwrap());
        }
        other => panic!("unexpected witness {other:?}"),
    }
}

#[test]
fn preservation_closed_under_products() {
    let c = orthant(3);
    let a = mat(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
    let b = mat(&[&[1, 0, 1], &[0, 1, 1], &[0, 0, 1]]);
    assert!(c.preservation_witness(&a).unwrap().is_none());
    assert!(c.preservation_witness(&b).unwrap().is_none());
    assert!(c.preservation_witness(&a.mul(&b)).unwrap().is_none());
}

#[test]
fn restrict_to_full_ambient_is_identity_like() {
    let c = orthant(2);
    let full = RationalSubspace::full(2);
    let r = c.restrict(&full).unwrap();
    assert!(r.contains(&v(&[3, 1])).unwrap());
    assert!(!r.contains(&v(&[-1, 0])).unwrap());
}

#[test]
fn restrict_orthant_to_diagonal_line() {
    let c = orthant(3);
    let w = RationalSubspace::span(3, vec![v(&[1, 1, 0])]);
    let r = c.restrict(&w).unwrap();
    assert!(r.is_nonzero());
    assert!(r.contains(&v(&[2, 2, 0])).unwrap());
    assert!(!r.contains(&v(&[-1, -1, 0])).unwrap());
    assert!(!r.contains(&v(&[1, 0, 0])).unwrap());
}

#[test]
fn restrict_orthant_to_antidiagonal_is_zero() {
    let c = orthant(2);
    let w = RationalSubspace::span(2, vec![v(&[1, -1])]);
    let r = c.restrict(&w).unwrap();
    assert!(!r.is_nonzero());
    assert!(r.contains(&v(&[0, 0])).unwrap());
    assert!(!r.contains(&v(&[1, -1])).unwrap());
}

#[test]
fn restrict_composition_matches_direct() {
    // restrict(restrict(c, w1), w2-in-w1-coords) compared against
    // restrict(c, w2) through lattice-coordinate ray sets
    let c = orthant(3);
    let w1 = RationalSubspace::span(3, vec![v(&[1, 0, 0]), v(&[0, 1, 1])]);
    let r1 = c.restrict(&w1).unwrap();
    let w2 = RationalSubspace::span(3, vec![v(&[1, 0, 0])]);
    let direct = c.restrict(&w2).unwrap();
    // w2 inside w1: express and restrict in stages
    let staged = r1.restrict(&w2).unwrap();
    let ConePayload::Polyhedral(pc_direct) = direct.payload() else { panic!() };
    let ConePayload::Polyhedral(pc_staged) = staged.payload() else { panic!() };
    let to_lattice = |h: &ConeHandle, rays: &[Vec<BigRational>]| {
        let mut out: Vec<Vec<BigRational>> = rays.iter().map(|r| h.to_lattice_coords(r)).collect();
        out.sort_by(|a, b| a.partial_cmp(b).unwrap());
        out
    };
    assert_eq!(
        to_lattice(&direct, pc_direct.rays()),
        to_lattice(&staged, pc_staged.rays())
    );
}

#[test]
fn lorentzian_restriction_cases() {
    // standard (1,2) form, light-cone tangent and spacelike slices
    let q = mat(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, -1]]);
    let c = ConeHandle::lorentzian_full(LorentzianCone::new(q, v(&[1, 0, 0])).unwrap());

    // 2-plane through the time axis: again Lorentzian
    let w = RationalSubspace::span(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
    let r = c.restrict(&w).unwrap();
    assert!(matches!(r.payload(), ConePayload::Lorentzian(_)));
    assert!(r.contains(&v(&[1, 0, 0])).unwrap());
    assert!(r.is_strictly_convex());

    // tangent plane to the light cone: a single ray
    let w = RationalSubspace::span(3, vec![v(&[1, 1, 0]), v(&[0, 0, 1])]);
    let r = c.restrict(&w).unwrap();
    assert!(matches!(r.payload(), ConePayload::Polyhedral(_)));
    assert!(r.is_nonzero());
    assert!(r.contains(&v(&[1, 1, 0])).unwrap());
    assert!(!r.contains(&v(&[-1, -1, 0])).unwrap());

    // spacelike plane: only the origin
    let w = RationalSubspace::span(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
    let r = c.restrict(&w).unwrap();
    assert!(!r.is_nonzero());
}

#[test]
fn lorentzian_pairing_nonnegative_on_cone() {
    // for u, v in the forward cone, (u, v)_Q >= 0
    let q = mat(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, -1]]);
    let lc = LorentzianCone::new(q, v(&[1, 0, 0])).unwrap();
    let mut rng = StdRng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 50 {
        let a = vec![
            rat(rng.random_range(1..8)),
            rat(rng.random_range(-4..4)),
            rat(rng.random_range(-4..4)),
        ];
        let b = vec![
            rat(rng.random_range(1..8)),
            rat(rng.random_range(-4..4)),
            rat(rng.random_range(-4..4)),
        ];
        if lc.contains(&a).unwrap() && lc.contains(&b).unwrap() {
            assert!(!lc.pairing(&a, &b).is_neg());
            checked += 1;
        }
    }
}

#[test]
fn membership_routes_agree() {
    // LP membership against cached-facet membership on random cones/points
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..30 {
        let dim = rng.random_range(2..4usize);
        let nrays = rng.random_range(1..5usize);
        let rays: Vec<Vec<BigRational>> = (0..nrays)
            .map(|_| (0..dim).map(|_| rat(rng.random_range(-3..4))).collect())
            .collect();
        let Ok(cone) = PolyhedralCone::from_rays(dim, rays) else {
            continue;
        };
        for _ in 0..10 {
            let p: Vec<BigRational> = (0..dim).map(|_| rat(rng.random_range(-5..6))).collect();
            let a = cone.contains(&p).unwrap();
            let b = cone.contains_by_facets(&p).unwrap();
            assert_eq!(a, b, "cone rays {:?} point {:?}", cone.rays(), p);
        }
    }
}

#[test]
fn signature_validation_rejects_wrong_forms() {
    // positive definite: not Lorentzian for n >= 2
    let q = mat(&[&[1, 0], &[0, 1]]);
    assert!(LorentzianCone::new(q, v(&[1, 0])).is_err());
    // degenerate
    let q = mat(&[&[1, 0], &[0, 0]]);
    assert!(LorentzianCone::new(q, v(&[1, 0])).is_err());
    // wrong orientation
    let q = mat(&[&[1, 0], &[0, -1]]);
    assert!(LorentzianCone::new(q, v(&[0, 1])).is_err());
}

#[test]
fn inertia_of_known_forms() {
    assert_eq!(inertia(&mat(&[&[1, 0], &[0, -1]])), (1, 1, 0));
    assert_eq!(inertia(&mat(&[&[0, 1], &[1, 0]])), (1, 1, 0));
    assert_eq!(inertia(&mat(&[&[0, 0], &[0, 0]])), (0, 0, 2));
    // disc pairing 4ac - b^2 on (a, b, c): signature (1, 2)
    let q = mat(&[&[0, 0, 2], &[0, -1, 0], &[2, 0, 0]]);
    assert_eq!(inertia(&q), (1, 2, 0));
}

#[test]
fn empty_cone_is_total() {
    let c = ConeHandle::polyhedral_full(PolyhedralCone::zero(3));
    assert!(!c.is_nonzero());
    assert!(c.is_strictly_convex());
    assert!(c.contains(&v(&[0, 0, 0])).unwrap());
    assert!(!c.contains(&v(&[1, 0, 0])).unwrap());
    assert!(c
        .preservation_witness(&mat(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]))
        .unwrap()
        .is_none());
}

#[test]
fn strictness_preserved_by_restriction() {
    let mut rng = StdRng::seed_from_u64(23);
    for _ in 0..20 {
        let dim = 3;
        let c = orthant(dim);
        // random 2-dim subspace
        let b1: Vec<BigRational> = (0..dim).map(|_| rat(rng.random_range(-3..4))).collect();
        let b2: Vec<BigRational> = (0..dim).map(|_| rat(rng.random_range(-3..4))).collect();
        let w = RationalSubspace::span(dim, vec![b1, b2]);
        if w.dim() == 0 {
            continue;
        }
        let r = c.restrict(&w).unwrap();
        assert!(r.is_strictly_convex());
    }
}
