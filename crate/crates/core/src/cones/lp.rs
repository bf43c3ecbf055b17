//! Exact linear programming over an ordered exact field.
//!
//! Only phase-1 feasibility is needed by the cone operations: decide
//! `∃ x >= 0 : A x = b` and produce the witness. Dense tableau simplex with
//! Bland's rule, so no cycling and no numerics anywhere.

use super::super::exactalg::field::OrderedExactField;
use super::super::exactalg::matrix::Matrix;

/// A solution `x >= 0` of `A x = b`, or `None` when infeasible.
pub fn solve_nonneg<K: OrderedExactField>(a: &Matrix<K>, b: &[K]) -> Option<Vec<K>> {
    let m = a.nrows();
    let n = a.ncols();
    assert_eq!(b.len(), m);

    // Tableau over the structural variables plus one artificial per row:
    // columns 0..n structural, n..n+m artificial, last column the rhs.
    let cols = n + m + 1;
    let mut t: Vec<Vec<K>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = vec![K::zero(); cols];
        let flip = b[i].is_neg();
        for j in 0..n {
            row[j] = if flip {
                -a[(i, j)].clone()
            } else {
                a[(i, j)].clone()
            };
        }
        row[n + i] = K::one();
        row[cols - 1] = if flip { -b[i].clone() } else { b[i].clone() };
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // objective: minimize the sum of artificials; reduced cost row
    let mut obj = vec![K::zero(); cols];
    for i in 0..m {
        for j in 0..cols {
            obj[j] = obj[j].clone() + t[i][j].clone();
        }
    }
    for j in n..n + m {
        obj[j] = K::zero();
    }

    loop {
        // Bland: smallest index with positive reduced cost
        let Some(pivot_col) = (0..n + m).find(|&j| obj[j].is_pos()) else {
            break;
        };
        // ratio test, Bland tie-break on basis index
        let mut pivot_row: Option<usize> = None;
        let mut best: Option<K> = None;
        for i in 0..m {
            if !t[i][pivot_col].is_pos() {
                continue;
            }
            let ratio = t[i][cols - 1].div(&t[i][pivot_col]);
            let replace = match &best {
                None => true,
                Some(cur) => {
                    let c = ratio.cmp_exact(cur);
                    c == std::cmp::Ordering::Less
                        || (c == std::cmp::Ordering::Equal
                            && basis[i] < basis[pivot_row.unwrap()])
                }
            };
            if replace {
                best = Some(ratio);
                pivot_row = Some(i);
            }
        }
        let Some(pr) = pivot_row else {
            // unbounded below is impossible for a sum of artificials; treat
            // as infeasible defensively
            return None;
        };
        // pivot
        let inv = t[pr][pivot_col].invert();
        for j in 0..cols {
            t[pr][j] = t[pr][j].clone() * inv.clone();
        }
        for i in 0..m {
            if i == pr || t[i][pivot_col].is_zero() {
                continue;
            }
            let f = t[i][pivot_col].clone();
            for j in 0..cols {
                let s = f.clone() * t[pr][j].clone();
                t[i][j] = t[i][j].clone() - s;
            }
        }
        let f = obj[pivot_col].clone();
        if !f.is_zero() {
            for j in 0..cols {
                let s = f.clone() * t[pr][j].clone();
                obj[j] = obj[j].clone() - s;
            }
        }
        basis[pr] = pivot_col;
    }

    // feasible iff every artificial still in the basis sits at zero
    let mut residual = K::zero();
    for (i, &bv) in basis.iter().enumerate() {
        if bv >= n {
            residual = residual + t[i][cols - 1].clone();
        }
    }
    if !residual.is_zero() {
        return None;
    }
    let mut x = vec![K::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][cols - 1].clone();
        }
    }
    Some(x)
}

/// A nonzero `λ >= 0` with `Σ λ_i r_i = 0` (normalized by `Σ λ_i = 1`),
/// or `None` when the rays positively span a pointed cone.
pub fn nontrivial_nonneg_kernel<K: OrderedExactField>(rays: &[Vec<K>]) -> Option<Vec<K>> {
    if rays.is_empty() {
        return None;
    }
    let dim = rays[0].len();
    // rows: every coordinate equation, plus the normalization Σ λ = 1
    let a = Matrix::from_fn(dim + 1, rays.len(), |i, j| {
        if i < dim {
            rays[j][i].clone()
        } else {
            K::one()
        }
    });
    let mut b = vec![K::zero(); dim + 1];
    b[dim] = K::one();
    solve_nonneg(&a, &b)
}

/// Membership of `v` in the nonnegative span of `rays`.
pub fn in_nonneg_span<K: OrderedExactField>(rays: &[Vec<K>], v: &[K]) -> Option<Vec<K>> {
    if rays.is_empty() {
        return if v.iter().all(|c| c.is_zero()) {
            Some(Vec::new())
        } else {
            None
        };
    }
    let dim = rays[0].len();
    assert_eq!(v.len(), dim);
    let a = Matrix::from_fn(dim, rays.len(), |i, j| rays[j][i].clone());
    solve_nonneg(&a, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use num_rational::BigRational;

    fn v(xs: &[i64]) -> Vec<BigRational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn orthant_membership() {
        let rays = vec![v(&[1, 0]), v(&[0, 1])];
        assert!(in_nonneg_span(&rays, &v(&[1, 2])).is_some());
        assert!(in_nonneg_span(&rays, &v(&[1, -1])).is_none());
        assert!(in_nonneg_span(&rays, &v(&[0, 0])).is_some());
    }

    #[test]
    fn pointedness_lp() {
        assert!(nontrivial_nonneg_kernel(&[v(&[1, 0]), v(&[0, 1])]).is_none());
        let sol = nontrivial_nonneg_kernel(&[v(&[1, 0]), v(&[-1, 0])]).unwrap();
        assert!(sol.iter().any(|c| c.is_pos()));
        // three rays spanning a pointed cone
        assert!(nontrivial_nonneg_kernel(&[v(&[1, 0]), v(&[1, 1]), v(&[0, 1])]).is_none());
    }

    #[test]
    fn redundant_ray_membership() {
        let rays = vec![v(&[1, 0]), v(&[1, 1]), v(&[0, 1])];
        let coeffs = in_nonneg_span(&rays, &v(&[2, 1])).unwrap();
        // verify the certificate
        let mut acc = v(&[0, 0]);
        for (c, r) in coeffs.iter().zip(&rays) {
            for k in 0..2 {
                acc[k] = &acc[k] + &(c * &r[k]);
            }
        }
        assert_eq!(acc, v(&[2, 1]));
    }
}
