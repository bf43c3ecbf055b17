use num_rational::BigRational;
use num_traits::Zero;

use super::*;
use crate::cones::{LorentzianCone, PolyhedralCone};
use crate::exactalg::matrix::ExactMatrix;
use crate::rat;
use crate::Budget;

fn v(xs: &[i64]) -> Vec<BigRational> {
    xs.iter().map(|&x| rat(x)).collect()
}

fn m(rows: &[&[i64]]) -> ExactMatrix {
    ExactMatrix::lattice_from_i64(rows).unwrap()
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

fn group(rank: usize, gens: &[&[&[i64]]]) -> GroupPresentation {
    GroupPresentation::new(rank, gens.iter().map(|g| m(g)).collect(), None).unwrap()
}

#[test]
fn commutators_of_single_generator_empty() {
    let g = group(2, &[&[&[1, 1], &[1, 0]]]);
    assert!(commutators(&g).is_empty());
}

#[test]
fn commutators_of_commuting_shears_empty() {
    let g = group(2, &[&[&[1, 1], &[0, 1]], &[&[1, 2], &[0, 1]]]);
    assert!(commutators(&g).is_empty());
}

#[test]
fn heisenberg_commutator_unipotent() {
    let g = group(
        3,
        &[
            &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]],
            &[&[1, 0, 0], &[0, 1, 1], &[0, 0, 1]],
        ],
    );
    let cs = commutators(&g);
    assert_eq!(cs.len(), 1);
    assert_eq!(cs[0].char_poly(), IntPolynomial::from_i64_slice(&[-1, 3, -3, 1]));
    assert!(check_unipotent_commutators(&g).is_ok());
}

#[test]
fn rotation_shear_commutator_certificate() {
    let g = group(2, &[&[&[0, -1], &[1, 0]], &[&[1, 1], &[0, 1]]]);
    let cert = check_unipotent_commutators(&g).unwrap_err();
    match cert.as_ref() {
        FailureCertificate::NonUnipotentCommutator { char_poly, .. } => {
            // computed by hand: the commutator is [[1,-1],[-1,2]], char x^2-3x+1
            assert_eq!(*char_poly, IntPolynomial::from_i64_slice(&[1, -3, 1]));
        }
        other => panic!("unexpected certificate {other:?}"),
    }
    assert!(cert.revalidate(&g, &orthant(2)));
}

#[test]
fn power_trick_basics() {
    let g = group(2, &[&[&[1, 1], &[1, 0]]]);
    let same = g.power_trick(1);
    assert_eq!(same.generators()[0], g.generators()[0]);
    let neg = group(2, &[&[&[-1, 0], &[0, -1]]]);
    let squared = neg.power_trick(2);
    assert!(squared.generators()[0].is_identity());
}

#[test]
fn abelian_identity_on_orthant() {
    let g = group(2, &[&[&[1, 0], &[0, 1]]]);
    let ray = abelian_common_ray(&g, &orthant(2), &Budget::default()).unwrap();
    assert!(verify_common_ray(&g, &orthant(2), &ray));
    assert_eq!(ray.eigenvalues()[0].to_rational(), Some(rat(1)));
}

#[test]
fn abelian_fibonacci_perron_ray() {
    let g = group(2, &[&[&[1, 1], &[1, 0]]]);
    let cone = orthant(2);
    let ray = abelian_common_ray(&g, &cone, &Budget::default()).unwrap();
    assert!(verify_common_ray(&g, &cone, &ray));
    // ray proportional to (phi, 1); the eigenvalue is phi itself
    let phi = &ray.eigenvalues()[0];
    let prop = ray.ray()[0].clone() - phi.clone() * ray.ray()[1].clone();
    assert!(prop.is_zero());
    // phi has the expected minimal polynomial
    let av = phi.to_algebraic().unwrap();
    assert_eq!(
        *av.defining_polynomial(),
        IntPolynomial::from_i64_slice(&[-1, -1, 1])
    );
}

#[test]
fn abelian_block_example_rank_four() {
    // {A ⊕ I2, I2 ⊕ B} with A Fibonacci, B = [[2,1],[1,1]] on the orthant:
    // processing in input order pins the ray to the A-block Perron vector,
    // where the second generator acts trivially.
    let g = group(
        4,
        &[
            &[&[1, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]],
            &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 2, 1], &[0, 0, 1, 1]],
        ],
    );
    let cone = orthant(4);
    let ray = abelian_common_ray(&g, &cone, &Budget::default()).unwrap();
    assert!(verify_common_ray(&g, &cone, &ray));
    let chi1 = &ray.eigenvalues()[0];
    let chi2 = &ray.eigenvalues()[1];
    // chi1 = phi, chi2 = 1
    assert_eq!(chi2.to_rational(), Some(rat(1)));
    let av = chi1.to_algebraic().unwrap();
    assert_eq!(
        *av.defining_polynomial(),
        IntPolynomial::from_i64_slice(&[-1, -1, 1])
    );
    // the last two coordinates vanish
    assert!(ray.ray()[2].is_zero());
    assert!(ray.ray()[3].is_zero());
}

#[test]
fn engine_commuting_shears_fix_e1() {
    let g = group(2, &[&[&[1, 1], &[0, 1]], &[&[1, 2], &[0, 1]]]);
    let cone = orthant(2);
    let out = common_eigen_ray(&g, &cone, &Budget::default()).unwrap();
    let EigenRayOutcome::Ray(ray) = out else {
        panic!("expected a ray");
    };
    assert!(verify_common_ray(&g, &cone, &ray));
    // ray e1, both eigenvalues 1
    assert!(ray.ray()[1].is_zero());
    for chi in ray.eigenvalues() {
        assert_eq!(chi.to_rational(), Some(rat(1)));
    }
}

#[test]
fn engine_rotation_certificate() {
    let g = group(2, &[&[&[0, -1], &[1, 0]]]);
    let cone = orthant(2);
    let out = common_eigen_ray(&g, &cone, &Budget::default()).unwrap();
    let EigenRayOutcome::Failure(cert) = out else {
        panic!("expected a failure certificate");
    };
    assert!(matches!(
        cert.as_ref(),
        FailureCertificate::NotPreserved { generator_index: 0, .. }
    ));
    assert!(cert.revalidate(&g, &cone));
}

#[test]
fn engine_heisenberg_descends_to_e1() {
    let g = group(
        3,
        &[
            &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]],
            &[&[1, 0, 0], &[0, 1, 1], &[0, 0, 1]],
            &[&[1, 0, 1], &[0, 1, 0], &[0, 0, 1]],
        ],
    );
    let cone = orthant(3);
    let out = common_eigen_ray(&g, &cone, &Budget::default()).unwrap();
    let EigenRayOutcome::Ray(ray) = out else {
        panic!("expected a ray");
    };
    assert!(verify_common_ray(&g, &cone, &ray));
    // the ray is e1 and all eigenvalues are 1
    assert!(ray.ray()[1].is_zero() && ray.ray()[2].is_zero());
    assert!(!ray.ray()[0].is_zero());
    for chi in ray.eigenvalues() {
        assert_eq!(chi.to_rational(), Some(rat(1)));
    }
    // the descent recorded a strictly decreasing nonabelian stage first
    assert!(ray.trace().len() >= 2);
    assert!(!ray.trace()[0].abelian);
}

#[test]
fn engine_fibonacci_on_lorentz_cone() {
    // Fibonacci matrix preserves the form 2x^2 - 2xy - 2y^2? Use the standard
    // hyperbolic pairing preserved by it: Q = [[2, -1], [-1, -2]] has
    // signature (1,1); check g^T Q g = Q first, then run the engine.
    let gmat = m(&[&[1, 1], &[1, 0]]);
    let q = Matrix::from_rows(vec![v(&[2, -1]), v(&[-1, -2])]);
    let gtqg = gmat.matrix().transpose().mul(&q).mul(gmat.matrix());
    assert_eq!(gtqg, q);
    let lc = LorentzianCone::new(q, v(&[1, 0])).unwrap();
    let cone = ConeHandle::lorentzian_full(lc);
    let g = GroupPresentation::new(2, vec![gmat], None).unwrap();
    let out = common_eigen_ray(&g, &cone, &Budget::default()).unwrap();
    let EigenRayOutcome::Ray(ray) = out else {
        panic!("expected a ray");
    };
    assert!(verify_common_ray(&g, &cone, &ray));
}

#[test]
fn verify_rejects_wrong_ray_and_zero() {
    let g = group(2, &[&[&[1, 1], &[0, 1]]]);
    let cone = orthant(2);
    let out = common_eigen_ray(&g, &cone, &Budget::default()).unwrap();
    let EigenRayOutcome::Ray(good) = out else { panic!() };
    assert!(verify_common_ray(&g, &cone, &good));

    // e2 is not fixed up to scalar: g e2 = (1, 1)
    let fake = CommonEigenRay {
        ctx: None,
        ray: vec![RealElem::rational(rat(0)), RealElem::rational(rat(1))],
        eigenvalues: vec![RealElem::rational(rat(1))],
        trace: Vec::new(),
    };
    assert!(!verify_common_ray(&g, &cone, &fake));

    let zero = CommonEigenRay {
        ctx: None,
        ray: vec![RealElem::rational(rat(0)), RealElem::rational(rat(0))],
        eigenvalues: vec![RealElem::rational(rat(1))],
        trace: Vec::new(),
    };
    assert!(!verify_common_ray(&g, &cone, &zero));
}

#[test]
fn exact_ray_data_roundtrip() {
    let g = group(2, &[&[&[1, 1], &[1, 0]]]);
    let cone = orthant(2);
    let ray = abelian_common_ray(&g, &cone, &Budget::default()).unwrap();
    let data = ray.to_exact_data();
    let rebuilt = CommonEigenRay::from_exact_data(&data, ray.trace().to_vec()).unwrap();
    assert!(verify_common_ray(&g, &cone, &rebuilt));
}

#[test]
fn cone_subspace_trivial_certificate_revalidates() {
    // A cone whose invariant subspace misses it: the anti-diagonal line is
    // invariant under the swap, and meets the orthant only at zero. The swap
    // and its negation generate a group that is not "connected solvable on
    // the data" in the engine's sense; feed the certificate check directly.
    let g = group(2, &[&[&[0, 1], &[1, 0]]]);
    let cone = orthant(2);
    let w = RationalSubspace::span(2, vec![v(&[1, -1])]);
    let cert = FailureCertificate::ConeSubspaceTrivial { subspace: w };
    assert!(cert.revalidate(&g, &cone));
    // a subspace that does meet the cone fails revalidation
    let w2 = RationalSubspace::span(2, vec![v(&[1, 1])]);
    let cert2 = FailureCertificate::ConeSubspaceTrivial { subspace: w2 };
    assert!(!cert2.revalidate(&g, &cone));
}

#[test]
fn eigenvalue_positivity_and_membership_always() {
    // soundness loop over a small family of solvable examples
    let cases: Vec<GroupPresentation> = vec![
        group(2, &[&[&[1, 1], &[0, 1]]]),
        group(2, &[&[&[1, 1], &[1, 0]]]),
        group(2, &[&[&[2, 1], &[1, 1]], &[&[1, 1], &[1, 0]]]),
        group(
            3,
            &[
                &[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]],
                &[&[1, 0, 2], &[0, 1, 0], &[0, 0, 1]],
            ],
        ),
    ];
    for g in cases {
        let cone = orthant(g.rank());
        let out = common_eigen_ray(&g, &cone, &Budget::default()).unwrap();
        match out {
            EigenRayOutcome::Ray(ray) => {
                assert!(verify_common_ray(&g, &cone, &ray), "soundness for {:?}", g.labels());
            }
            EigenRayOutcome::Failure(cert) => {
                assert!(cert.revalidate(&g, &cone), "certificate soundness");
            }
        }
    }
}
