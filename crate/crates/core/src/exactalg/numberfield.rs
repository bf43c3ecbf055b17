//! Eigenspaces over the number field generated by an eigenvalue.
//!
//! Coordinates are exact elements of `Q(lambda)` (arithmetic modulo the
//! square-free defining factor, with the designated-root machinery of
//! [`super::realfield`]) — or of `Q(Re lambda, Im lambda)(i)` when the
//! eigenvalue is complex.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;

use super::algebraic::{AlgebraicValue, Region};
use super::complex::Cx;
use super::matrix::{ExactMatrix, Matrix};
use super::poly::{IntPolynomial, QPoly};
use super::realfield::{adjoin, RealElem, RealFieldCtx};
use super::ExactAlgError;

/// An eigenvalue argument: exact rational or designated algebraic.
#[derive(Debug, Clone)]
pub enum EigenvalueArg {
    Rational(BigRational),
    Algebraic(AlgebraicValue),
}

/// Basis of `ker(m - lambda I)` with exact coordinates over the extension
/// field of the eigenvalue.
#[derive(Debug, Clone)]
pub enum EigenspaceBasis {
    /// Rational eigenvalue: rational coordinate rows.
    Rational(Vec<Vec<BigRational>>),
    /// Real algebraic eigenvalue: rows over `Q(lambda)`, with the shared
    /// field context.
    RealAlgebraic {
        ctx: Arc<RealFieldCtx>,
        lambda: RealElem,
        rows: Vec<Vec<RealElem>>,
    },
    /// Complex eigenvalue: rows over `K(i)` with `K = Q(Re, Im)`.
    Complex {
        ctx: Option<Arc<RealFieldCtx>>,
        lambda: Cx<RealElem>,
        rows: Vec<Vec<Cx<RealElem>>>,
    },
}

impl EigenspaceBasis {
    pub fn dim(&self) -> usize {
        match self {
            EigenspaceBasis::Rational(rows) => rows.len(),
            EigenspaceBasis::RealAlgebraic { rows, .. } => rows.len(),
            EigenspaceBasis::Complex { rows, .. } => rows.len(),
        }
    }
}

/// Exact basis of the eigenspace of `m` for `lambda`.
///
/// The defining factor of `lambda` must share the designated root with the
/// characteristic polynomial; otherwise `NotAnEigenvalue` is reported.
pub fn eigenspace(m: &ExactMatrix, lambda: &EigenvalueArg) -> Result<EigenspaceBasis, ExactAlgError> {
    let n = m.rank_dim();
    let char_poly = m.char_poly();
    match lambda {
        EigenvalueArg::Rational(q) => {
            if !char_poly.eval_rational(q).is_zero() {
                return Err(ExactAlgError::NotAnEigenvalue);
            }
            let shifted = Matrix::from_fn(n, n, |i, j| {
                let mut e = m.entry(i, j).clone();
                if i == j {
                    e -= q;
                }
                e
            });
            Ok(EigenspaceBasis::Rational(shifted.kernel()))
        }
        EigenvalueArg::Algebraic(v) => {
            if !is_root_of(v, &char_poly)? {
                return Err(ExactAlgError::NotAnEigenvalue);
            }
            match v.region() {
                Region::Real(_) => {
                    let ext = adjoin(&None, v)?;
                    let ctx = ext
                        .ctx
                        .clone()
                        .expect("irrational value produces a field context");
                    let lam = ext.adjoined.clone();
                    let mk = m
                        .matrix()
                        .map(|e| RealElem::from_poly(&ctx, QPoly::constant(e.clone())));
                    let shifted = mk.sub(&scalar_matrix(n, &lam));
                    let rows = shifted.kernel();
                    Ok(EigenspaceBasis::RealAlgebraic {
                        ctx,
                        lambda: lam,
                        rows,
                    })
                }
                Region::Complex(_) => {
                    let (ctx, lam) = complex_as_field_element(v)?;
                    let mk: Matrix<Cx<RealElem>> = m.matrix().map(|e| {
                        Cx::real(match &ctx {
                            Some(c) => RealElem::from_poly(c, QPoly::constant(e.clone())),
                            None => RealElem::rational(e.clone()),
                        })
                    });
                    let lam_mat = Matrix::from_fn(n, n, |i, j| {
                        if i == j {
                            lam.clone()
                        } else {
                            Cx::zero()
                        }
                    });
                    let shifted = mk.sub(&lam_mat);
                    let rows = shifted.kernel();
                    Ok(EigenspaceBasis::Complex {
                        ctx,
                        lambda: lam,
                        rows,
                    })
                }
            }
        }
    }
}

fn scalar_matrix(n: usize, lam: &RealElem) -> Matrix<RealElem> {
    Matrix::from_fn(n, n, |i, j| {
        if i == j {
            lam.clone()
        } else {
            RealElem::zero()
        }
    })
}

/// Is the designated root of `v` a root of `p`?
fn is_root_of(v: &AlgebraicValue, p: &IntPolynomial) -> Result<bool, ExactAlgError> {
    let g = v.defining_polynomial().to_qpoly().gcd(&p.to_qpoly().squarefree_part());
    if g.degree() == 0 {
        return Ok(false);
    }
    // The designated root lies in g iff g vanishes there: designate g's roots
    // against the isolating region.
    // The isolating region always contains the designated root; any root of
    // g (a divisor of the defining polynomial) inside the region must be that
    // root. So one clean count decides either way.
    match v.region() {
        Region::Real(iv) => {
            let chain = g.sturm_chain();
            let cnt =
                g.count_roots_in(&chain, &iv.lo, &iv.hi) + usize::from(g.eval(&iv.lo).is_zero());
            Ok(cnt >= 1)
        }
        Region::Complex(_) => {
            let mut vv = v.clone();
            let mut bits = 32u32;
            loop {
                vv.refine_to(bits)?;
                let Region::Complex(rect) = vv.region() else { unreachable!() };
                match super::algebraic::count_roots_in_rect(&g, rect) {
                    Ok(c) => return Ok(c >= 1),
                    Err(_) if bits <= 1 << 12 => {
                        bits = bits.saturating_mul(2);
                    }
                    Err(e) => return Err(e),
                }
            }
        }
    }
}

/// Express a complex algebraic value as `a + b i` with `a`, `b` in a shared
/// real algebraic field.
pub fn complex_as_field_element(
    v: &AlgebraicValue,
) -> Result<(Option<Arc<RealFieldCtx>>, Cx<RealElem>), ExactAlgError> {
    let Region::Complex(_) = v.region() else {
        return Err(ExactAlgError::Precondition(
            "expected a complex algebraic value".into(),
        ));
    };
    let p = v.defining_polynomial().to_qpoly();

    // Re(v) is a root of S(2t) where S has roots z_i + z_j.
    let sum = super::poly::root_sum_poly(&p, &p);
    let re_poly = sum
        .compose(&QPoly::from_coeffs(vec![
            BigRational::from_integer(0.into()),
            BigRational::from_integer(2.into()),
        ]))
        .primitive_integer()
        .squarefree_part();
    // Im(v) is a root of Dsym(-4 t^2) where Dsym has roots (z_i - z_j)^2.
    let diff = super::poly::root_sum_poly(&p, &p.compose_neg_x());
    let dsym = diff.roots_squared_poly();
    let im_poly = dsym
        .compose(&QPoly::from_coeffs(vec![
            BigRational::from_integer(0.into()),
            BigRational::from_integer(0.into()),
            BigRational::from_integer((-4).into()),
        ]))
        .primitive_integer()
        .squarefree_part();

    // Designate re and im from the rectangle.
    let mut vv = v.clone();
    let re_q = re_poly.to_qpoly();
    let im_q = im_poly.to_qpoly();
    let re_chain = re_q.sturm_chain();
    let im_chain = im_q.sturm_chain();
    let mut bits = 32u32;
    let (re_val, im_val) = loop {
        vv.refine_to(bits)?;
        let Region::Complex(rect) = vv.region() else { unreachable!() };
        let re_iv = rect.re.clone();
        let im_iv = rect.im.clone();
        let re_cnt = re_q.count_roots_in(&re_chain, &re_iv.lo, &re_iv.hi)
            + usize::from(re_q.eval(&re_iv.lo).is_zero());
        let im_cnt = im_q.count_roots_in(&im_chain, &im_iv.lo, &im_iv.hi)
            + usize::from(im_q.eval(&im_iv.lo).is_zero());
        if re_cnt == 1 && im_cnt == 1 {
            break (
                AlgebraicValue::new_real(re_poly.clone(), re_iv)?,
                AlgebraicValue::new_real(im_poly.clone(), im_iv)?,
            );
        }
        if bits > 1 << 13 {
            return Err(ExactAlgError::RefinementFailure {
                detail: "real/imaginary designation stalled".into(),
            });
        }
        bits = bits.saturating_mul(2);
    };

    // Build K = Q(re, im).
    let ext1 = adjoin(&None, &re_val)?;
    let re_elem = ext1.adjoined.clone();
    let ext2 = adjoin(&ext1.ctx, &im_val)?;
    let re_elem = ext2.rebase(&re_elem);
    let im_elem = ext2.adjoined.clone();
    Ok((ext2.ctx.clone(), Cx::new(re_elem, im_elem)))
}

#[cfg(test)]
mod tests {
    use super::*;
    #[allow(unused_imports)]
    use num_traits::{One, Zero};
    #[allow(unused_imports)]
    use crate::exactalg::field::ExactField as _;
    use crate::{rat, ratio};
    use super::super::algebraic::RatRect;
    use super::super::field::RatInterval;
    use super::super::field::OrderedExactField;

    #[test]
    fn identity_eigenspace_is_full() {
        let m = ExactMatrix::identity(3);
        let basis = eigenspace(&m, &EigenvalueArg::Rational(rat(1))).unwrap();
        assert_eq!(basis.dim(), 3);
    }

    #[test]
    fn diagonal_rational_eigenspace() {
        let m = ExactMatrix::lattice_from_i64(&[&[2, 0], &[0, 3]]).unwrap();
        let basis = eigenspace(&m, &EigenvalueArg::Rational(rat(2))).unwrap();
        let EigenspaceBasis::Rational(rows) = basis else { panic!() };
        assert_eq!(rows, vec![vec![rat(1), rat(0)]]);
    }

    #[test]
    fn not_an_eigenvalue_signal() {
        let m = ExactMatrix::identity(2);
        assert!(matches!(
            eigenspace(&m, &EigenvalueArg::Rational(rat(5))),
            Err(ExactAlgError::NotAnEigenvalue)
        ));
    }

    #[test]
    fn fibonacci_eigenspace_over_q_phi() {
        let m = ExactMatrix::lattice_from_i64(&[&[1, 1], &[1, 0]]).unwrap();
        let phi = AlgebraicValue::new_real(
            IntPolynomial::from_i64_slice(&[-1, -1, 1]),
            RatInterval::new(rat(1), rat(2)),
        )
        .unwrap();
        let basis = eigenspace(&m, &EigenvalueArg::Algebraic(phi)).unwrap();
        let EigenspaceBasis::RealAlgebraic { lambda, rows, .. } = basis else {
            panic!()
        };
        assert_eq!(rows.len(), 1);
        // the eigenvector is proportional to (phi, 1)
        let v = &rows[0];
        let ratio_elem = v[0].clone() * v[1].clone().invert();
        assert_eq!(ratio_elem, lambda);
    }

    #[test]
    fn complex_eigenspace_of_rotation() {
        let m = ExactMatrix::lattice_from_i64(&[&[0, -1], &[1, 0]]).unwrap();
        let i_val = AlgebraicValue::new_complex(
            IntPolynomial::from_i64_slice(&[1, 0, 1]),
            RatRect {
                re: RatInterval::new(ratio(-1, 2), ratio(1, 2)),
                im: RatInterval::new(ratio(1, 2), rat(2)),
            },
        )
        .unwrap();
        let basis = eigenspace(&m, &EigenvalueArg::Algebraic(i_val)).unwrap();
        let EigenspaceBasis::Complex { lambda, rows, .. } = basis else { panic!() };
        assert_eq!(rows.len(), 1);
        assert!(lambda.re.is_zero());
        assert_eq!(lambda.im.sign(), std::cmp::Ordering::Greater);
        // verify m v = lambda v over the field
        let v = &rows[0];
        let mv0 = -v[1].clone();
        let lv0 = lambda.clone() * v[0].clone();
        assert_eq!(mv0, lv0);
    }
}
