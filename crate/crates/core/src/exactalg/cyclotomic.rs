//! Cyclotomic polynomials and the cyclotomic-product decision.
//!
//! For a monic integer polynomial with constant term ±1 (the characteristic
//! polynomial of a determinant-±1 integer matrix), being a product of
//! cyclotomic polynomials is equivalent to spectral radius exactly 1 by
//! Kronecker's theorem. This module provides the exact divide-out decision.

use num_bigint::BigInt;
use num_traits::One;

use super::poly::{IntPolynomial, QPoly};
use super::ExactAlgError;

/// The n-th cyclotomic polynomial, by recursive division of `x^n - 1` by
/// `Phi_d` over all proper divisors `d | n`.
pub fn cyclotomic(n: usize) -> IntPolynomial {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut memo: Vec<Option<QPoly>> = vec![None; n + 1];
    cyclotomic_q(n, &mut memo).primitive_integer()
}

fn cyclotomic_q(n: usize, memo: &mut Vec<Option<QPoly>>) -> QPoly {
    if let Some(p) = &memo[n] {
        return p.clone();
    }
    let p = if n == 1 {
        QPoly::from_i64_slice(&[-1, 1])
    } else {
        let mut num = {
            // x^n - 1
            let mut coeffs = vec![num_rational::BigRational::from_integer(BigInt::from(0)); n + 1];
            coeffs[0] = num_rational::BigRational::from_integer(BigInt::from(-1));
            coeffs[n] = num_rational::BigRational::from_integer(BigInt::from(1));
            QPoly::from_coeffs(coeffs)
        };
        for d in 1..n {
            if n % d == 0 {
                let phi_d = cyclotomic_q(d, memo);
                num = num.div_exact(&phi_d);
            }
        }
        num
    };
    memo[n] = Some(p.clone());
    p
}

/// Euler's totient.
pub fn euler_phi(n: usize) -> usize {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Maximal powers of cyclotomic polynomials dividing `p`, together with the
/// remaining cofactor. Scans every index `n` with `phi(n) <= deg p`, which by
/// `phi(n) >= sqrt(n/2)` is complete for `n <= 2 deg(p)^2`.
pub fn cyclotomic_factors(p: &IntPolynomial) -> (Vec<(usize, usize)>, IntPolynomial) {
    assert!(!p.is_zero());
    let mut rest = p.to_qpoly().monic();
    let d = p.degree();
    let mut found = Vec::new();
    if d == 0 {
        return (found, IntPolynomial::one());
    }
    for n in 1..=(2 * d * d).max(1) {
        if euler_phi(n) > rest.degree() {
            continue;
        }
        let phi_n = cyclotomic(n).to_qpoly();
        let mut mult = 0usize;
        loop {
            let (q, r) = rest.div_rem(&phi_n);
            if r.is_zero() && !q.is_zero() {
                rest = q;
                mult += 1;
            } else {
                break;
            }
        }
        if mult > 0 {
            found.push((n, mult));
        }
        if rest.degree() == 0 {
            break;
        }
    }
    (found, rest.primitive_integer())
}

/// Exact decision: is `p` a product of cyclotomic polynomials?
///
/// Preconditions per contract: monic with integer coefficients and constant
/// term ±1; violations are reported, not decided.
pub fn is_cyclotomic_product(p: &IntPolynomial) -> Result<bool, ExactAlgError> {
    if p.is_zero() || !p.is_monic() {
        return Err(ExactAlgError::Precondition(
            "cyclotomic-product test requires a monic integer polynomial".into(),
        ));
    }
    let ct = p.constant_term();
    if ct != BigInt::one() && ct != -BigInt::one() {
        return Err(ExactAlgError::Precondition(
            "cyclotomic-product test requires constant term ±1".into(),
        ));
    }
    if p.degree() == 0 {
        return Ok(true);
    }
    let (_, rest) = cyclotomic_factors(p);
    Ok(rest.degree() == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), IntPolynomial::from_i64_slice(&[-1, 1]));
        assert_eq!(cyclotomic(2), IntPolynomial::from_i64_slice(&[1, 1]));
        assert_eq!(cyclotomic(3), IntPolynomial::from_i64_slice(&[1, 1, 1]));
        assert_eq!(cyclotomic(4), IntPolynomial::from_i64_slice(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), IntPolynomial::from_i64_slice(&[1, -1, 1]));
        assert_eq!(
            cyclotomic(12),
            IntPolynomial::from_i64_slice(&[1, 0, -1, 0, 1])
        );
    }

    #[test]
    fn phi3_is_cyclotomic_product() {
        let p = IntPolynomial::from_i64_slice(&[1, 1, 1]);
        assert!(is_cyclotomic_product(&p).unwrap());
    }

    #[test]
    fn phi1_phi2_phi4_product() {
        // (x-1)(x+1)(x^2+1) = x^4 - 1
        let p = IntPolynomial::from_i64_slice(&[-1, 0, 0, 0, 1]);
        assert!(is_cyclotomic_product(&p).unwrap());
        let (facs, rest) = cyclotomic_factors(&p);
        assert_eq!(facs, vec![(1, 1), (2, 1), (4, 1)]);
        assert_eq!(rest.degree(), 0);
    }

    #[test]
    fn golden_ratio_poly_is_not() {
        // x^2 - x - 1 has the root (1+sqrt5)/2 > 1
        let p = IntPolynomial::from_i64_slice(&[-1, -1, 1]);
        assert!(!is_cyclotomic_product(&p).unwrap());
    }

    #[test]
    fn repeated_factors_detected() {
        // (x-1)^3 (x^2+x+1)^2
        let p = IntPolynomial::from_i64_slice(&[-1, 1]);
        let q = IntPolynomial::from_i64_slice(&[1, 1, 1]);
        let prod = p.mul(&p).mul(&p).mul(&q).mul(&q);
        assert!(is_cyclotomic_product(&prod).unwrap());
        let (facs, _) = cyclotomic_factors(&prod);
        assert_eq!(facs, vec![(1, 3), (3, 2)]);
    }

    #[test]
    fn constant_term_precondition() {
        let p = IntPolynomial::from_i64_slice(&[2, 0, 1]);
        assert!(is_cyclotomic_product(&p).is_err());
    }

    #[test]
    fn euler_phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(2), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(30), 8);
    }
}
