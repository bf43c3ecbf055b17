//! Dense exact matrices, generic over the scalar field, and the public
//! integer/rational matrix type for lattice automorphisms.
//!
//! Characteristic polynomials are computed by the Berkowitz algorithm:
//! division-free, exact over any commutative ring, no pivoting concerns on
//! singular input.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::ExactField;
use super::poly::{IntPolynomial, Poly, QPoly};
use super::ExactAlgError;

/// Dense matrix over an exact field.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<K: ExactField> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: ExactField> Matrix<K> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![K::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = K::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[K] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<K>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out: Matrix<K> = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)].clone();
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a.clone() * other[(k, j)].clone();
                    out[(i, j)] = out[(i, j)].clone() + t;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[K]) -> Vec<K> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = K::zero();
                for j in 0..self.cols {
                    acc = acc + self[(i, j)].clone() * v[j].clone();
                }
                acc
            })
            .collect()
    }

    pub fn scale(&self, c: &K) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                let want_one = i == j;
                let e = &self[(i, j)];
                if want_one {
                    if !(e.clone() - K::one()).is_zero() {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Reduced row echelon form; returns (rref, pivot columns, rank).
    pub fn rref(&self) -> (Self, Vec<usize>, usize) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = m[(r, c)].invert();
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].clone() * inv.clone();
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    let t = f.clone() * m[(r, j)].clone();
                    m[(i, j)] = m[(i, j)].clone() - t;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots, r)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().2
    }

    /// Basis of the right kernel, as rows.
    pub fn kernel(&self) -> Vec<Vec<K>> {
        let (rr, pivots, rank) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![K::zero(); self.cols];
            v[fc] = K::one();
            for (ri, &pc) in pivots.iter().enumerate().take(rank) {
                v[pc] = -rr[(ri, fc)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `self * x = b`; `None` when inconsistent. Returns one solution.
    pub fn solve(&self, b: &[K]) -> Option<Vec<K>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (rr, pivots, rank) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![K::zero(); self.cols];
        for (ri, &pc) in pivots.iter().enumerate().take(rank) {
            x[pc] = rr[(ri, self.cols)].clone();
        }
        Some(x)
    }

    pub fn det(&self) -> K {
        assert!(self.is_square());
        let mut m = self.clone();
        let n = m.rows;
        let mut det = K::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return K::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det = det * pivot.clone();
            let inv = pivot.invert();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone() * inv.clone();
                for j in c..n {
                    let t = f.clone() * m[(c, j)].clone();
                    m[(i, j)] = m[(i, j)].clone() - t;
                }
            }
        }
        det
    }

    /// Inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = K::one();
        }
        let (rr, _, rank) = aug.rref();
        if rank < n {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| rr[(i, n + j)].clone()))
    }

    /// Integer power, negative exponents via the inverse.
    pub fn pow(&self, e: i64) -> Self {
        assert!(self.is_square());
        let base = if e < 0 {
            self.inverse().expect("negative power of a singular matrix")
        } else {
            self.clone()
        };
        let mut k = e.unsigned_abs();
        let mut acc = Matrix::identity(self.rows);
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            k >>= 1;
        }
        acc
    }

    /// Characteristic polynomial `det(xI - A)`, monic, by the Berkowitz
    /// algorithm (division-free).
    pub fn char_poly(&self) -> Poly<K> {
        assert!(self.is_square(), "characteristic polynomial of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Poly::one();
        }
        // Coefficient vector in descending order, starting with the empty
        // matrix's char poly = 1.
        let mut p: Vec<K> = vec![K::one()];
        for r in 1..=n {
            // Principal r x r block partitioned as [[A_{r-1}, S], [R, a]].
            let a = self[(r - 1, r - 1)].clone();
            let s_col: Vec<K> = (0..r - 1).map(|i| self[(i, r - 1)].clone()).collect();
            let r_row: Vec<K> = (0..r - 1).map(|j| self[(r - 1, j)].clone()).collect();
            // Toeplitz column: t0 = 1, t1 = -a, t_{k} = -R A_{r-1}^{k-2} S.
            let mut t = Vec::with_capacity(r + 1);
            t.push(K::one());
            t.push(-a);
            let mut v = s_col.clone();
            for _ in 2..=r {
                let dot = r_row
                    .iter()
                    .zip(&v)
                    .fold(K::zero(), |acc, (x, y)| acc + x.clone() * y.clone());
                t.push(-dot);
                // v <- A_{r-1} v
                let mut nv = vec![K::zero(); r - 1];
                for i in 0..r - 1 {
                    let mut acc = K::zero();
                    for j in 0..r - 1 {
                        acc = acc + self[(i, j)].clone() * v[j].clone();
                    }
                    nv[i] = acc;
                }
                v = nv;
            }
            // p_r = T_r * p_{r-1}: T_r is (r+1) x r lower-triangular Toeplitz.
            let mut np = vec![K::zero(); r + 1];
            for (i, npi) in np.iter_mut().enumerate() {
                let mut acc = K::zero();
                for (j, pj) in p.iter().enumerate() {
                    if i >= j && i - j <= r {
                        acc = acc + t[i - j].clone() * pj.clone();
                    }
                }
                *npi = acc;
            }
            p = np;
        }
        p.reverse();
        Poly::from_coeffs(p)
    }

    /// Matrix of the induced map on the k-th exterior power, in the
    /// lexicographic basis of k-element subsets. Entries are k x k minors.
    pub fn exterior_power(&self, k: usize) -> Self {
        assert!(self.is_square());
        let n = self.rows;
        assert!(k <= n, "exterior power index out of range");
        let subsets = k_subsets(n, k);
        let dim = subsets.len();
        Matrix::from_fn(dim, dim, |i, j| {
            let ri = &subsets[i];
            let cj = &subsets[j];
            let minor = Matrix::from_fn(k, k, |a, b| self[(ri[a], cj[b])].clone());
            if k == 0 {
                K::one()
            } else {
                minor.det()
            }
        })
    }

    pub fn map<L: ExactField>(&self, f: impl Fn(&K) -> L) -> Matrix<L> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| f(x)).collect(),
        }
    }
}

impl<K: ExactField> std::ops::Index<(usize, usize)> for Matrix<K> {
    type Output = K;

    fn index(&self, (i, j): (usize, usize)) -> &K {
        &self.data[i * self.cols + j]
    }
}

impl<K: ExactField> std::ops::IndexMut<(usize, usize)> for Matrix<K> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut K {
        &mut self.data[i * self.cols + j]
    }
}

/// All k-element subsets of {0..n-1} in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Whether the matrix entries are exact integers or general rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixMode {
    /// Integer entries; group elements must additionally have determinant ±1.
    Lattice,
    /// Arbitrary exact rational entries.
    General,
}

/// Square matrix with exact rational entries and a lattice/general mode flag.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactMatrix {
    mat: Matrix<BigRational>,
    mode: MatrixMode,
}

impl ExactMatrix {
    /// Lattice-mode matrix from integer rows.
    pub fn lattice_from_i64(rows: &[&[i64]]) -> Result<Self, ExactAlgError> {
        let rows: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&e| BigRational::from_integer(BigInt::from(e)))
                    .collect()
            })
            .collect();
        Self::new(rows, MatrixMode::Lattice)
    }

    pub fn general_from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self, ExactAlgError> {
        Self::new(rows, MatrixMode::General)
    }

    pub fn new(rows: Vec<Vec<BigRational>>, mode: MatrixMode) -> Result<Self, ExactAlgError> {
        let r = rows.len();
        if r == 0 {
            return Err(ExactAlgError::Precondition("empty matrix".into()));
        }
        if rows.iter().any(|row| row.len() != r) {
            return Err(ExactAlgError::Precondition("matrix must be square".into()));
        }
        if mode == MatrixMode::Lattice {
            for row in &rows {
                for e in row {
                    if !e.is_integer() {
                        return Err(ExactAlgError::Precondition(
                            "lattice-mode matrix requires integer entries".into(),
                        ));
                    }
                }
            }
        }
        Ok(ExactMatrix {
            mat: Matrix::from_rows(rows),
            mode,
        })
    }

    pub fn identity(n: usize) -> Self {
        ExactMatrix {
            mat: Matrix::identity(n),
            mode: MatrixMode::Lattice,
        }
    }

    pub fn rank_dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn mode(&self) -> MatrixMode {
        self.mode
    }

    pub fn matrix(&self) -> &Matrix<BigRational> {
        &self.mat
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.mat[(i, j)]
    }

    pub fn det(&self) -> BigRational {
        self.mat.det()
    }

    /// Determinant in {+1, -1}, required of lattice automorphisms.
    pub fn is_unimodular(&self) -> bool {
        let d = self.det();
        d == BigRational::one() || d == -BigRational::one()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mode = if self.mode == MatrixMode::Lattice && other.mode == MatrixMode::Lattice {
            MatrixMode::Lattice
        } else {
            MatrixMode::General
        };
        ExactMatrix {
            mat: self.mat.mul(&other.mat),
            mode,
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        let inv = self.mat.inverse()?;
        // The inverse of a unimodular integer matrix is again integral; keep
        // the mode only when that is actually true.
        let mode = if self.mode == MatrixMode::Lattice
            && inv.rows_vec().iter().all(|r| r.iter().all(|e| e.is_integer()))
        {
            MatrixMode::Lattice
        } else {
            MatrixMode::General
        };
        Some(ExactMatrix { mat: inv, mode })
    }

    pub fn pow(&self, e: i64) -> Self {
        let m = self.mat.pow(e);
        ExactMatrix {
            mat: m,
            mode: self.mode,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.mat.is_identity()
    }

    /// Exact monic characteristic polynomial with integer coefficients when
    /// the entries are integral (always integral in lattice mode).
    pub fn char_poly(&self) -> IntPolynomial {
        let p: QPoly = self.mat.char_poly();
        // Monic with rational coefficients; integral entries give integral
        // coefficients. Keep exact integers via signed primitive scaling only
        // when already integral, otherwise report the scaled numerator form.
        let all_int = p.coeffs().iter().all(|c| c.is_integer());
        if all_int {
            IntPolynomial::from_coeffs(p.coeffs().iter().map(|c| c.to_integer()).collect())
        } else {
            p.primitive_integer_signed()
        }
    }

    /// Characteristic polynomial as a rational polynomial (always monic).
    pub fn char_poly_q(&self) -> QPoly {
        self.mat.char_poly()
    }

    pub fn exterior_power(&self, k: usize) -> Result<ExactMatrix, ExactAlgError> {
        if k > self.rank_dim() {
            return Err(ExactAlgError::Precondition(format!(
                "exterior power index {k} exceeds rank {}",
                self.rank_dim()
            )));
        }
        Ok(ExactMatrix {
            mat: self.mat.exterior_power(k),
            mode: self.mode,
        })
    }

    /// Block-diagonal sum of two square matrices.
    pub fn block_diag(&self, other: &Self) -> Self {
        let n = self.rank_dim();
        let m = other.rank_dim();
        let mat = Matrix::from_fn(n + m, n + m, |i, j| {
            if i < n && j < n {
                self.mat[(i, j)].clone()
            } else if i >= n && j >= n {
                other.mat[(i - n, j - n)].clone()
            } else {
                BigRational::zero()
            }
        });
        let mode = if self.mode == MatrixMode::Lattice && other.mode == MatrixMode::Lattice {
            MatrixMode::Lattice
        } else {
            MatrixMode::General
        };
        ExactMatrix { mat, mode }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn m2(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::lattice_from_i64(rows).unwrap()
    }

    #[test]
    fn char_poly_identity_2x2() {
        // (x-1)^2 = x^2 - 2x + 1
        let p = ExactMatrix::identity(2).char_poly();
        assert_eq!(p, IntPolynomial::from_i64_slice(&[1, -2, 1]));
    }

    #[test]
    fn char_poly_fibonacci() {
        // x^2 - x - 1 by cofactor expansion
        let p = m2(&[&[1, 1], &[1, 0]]).char_poly();
        assert_eq!(p, IntPolynomial::from_i64_slice(&[-1, -1, 1]));
    }

    #[test]
    fn char_poly_rotation() {
        // x^2 + 1 by cofactor expansion
        let p = m2(&[&[0, -1], &[1, 0]]).char_poly();
        assert_eq!(p, IntPolynomial::from_i64_slice(&[1, 0, 1]));
    }

    #[test]
    fn char_poly_conjugation_invariant() {
        let a = m2(&[&[3, 1], &[2, 1]]);
        let p = m2(&[&[2, 1], &[1, 1]]);
        let conj = p.mul(&a).mul(&p.inverse().unwrap());
        assert_eq!(a.char_poly(), conj.char_poly());
    }

    #[test]
    fn char_poly_degree_and_det() {
        let a = m2(&[&[1, 2, 0], &[0, 1, 5], &[1, 0, -1]]);
        let p = a.char_poly();
        assert_eq!(p.degree(), 3);
        // constant term = (-1)^n det
        let d = a.det();
        assert_eq!(
            BigRational::from_integer(p.constant_term()),
            if a.rank_dim() % 2 == 1 { -d } else { d }
        );
    }

    #[test]
    fn exterior_power_edges() {
        let a = m2(&[&[1, 1], &[1, 0]]);
        let e0 = a.exterior_power(0).unwrap();
        assert_eq!(e0.rank_dim(), 1);
        assert_eq!(*e0.entry(0, 0), rat(1));
        let e2 = a.exterior_power(2).unwrap();
        assert_eq!(*e2.entry(0, 0), a.det());
        let e1 = a.exterior_power(1).unwrap();
        assert_eq!(e1, a);
        assert!(a.exterior_power(3).is_err());
    }

    #[test]
    fn exterior_power_functorial() {
        let a = m2(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let b = m2(&[&[2, 1, 1], &[1, 1, 0], &[0, 1, 1]]);
        let k = 2;
        let lhs = a.exterior_power(k).unwrap().mul(&b.exterior_power(k).unwrap());
        let rhs = a.mul(&b).exterior_power(k).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn kernel_and_solve() {
        let m: Matrix<BigRational> = Matrix::from_rows(vec![
            vec![rat(1), rat(1), rat(0)],
            vec![rat(0), rat(0), rat(1)],
        ]);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![rat(-1), rat(1), rat(0)]);
        let x = m.solve(&[rat(2), rat(3)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![rat(2), rat(3)]);
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m2(&[&[1, 1], &[1, 0]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert_eq!(inv.mode(), MatrixMode::Lattice);
    }

    #[test]
    fn block_diag_layout() {
        let a = m2(&[&[1, 1], &[1, 0]]);
        let b = m2(&[&[2, 1], &[1, 1]]);
        let c = a.block_diag(&b);
        assert_eq!(c.rank_dim(), 4);
        assert_eq!(*c.entry(0, 1), rat(1));
        assert_eq!(*c.entry(2, 2), rat(2));
        assert_eq!(*c.entry(0, 2), rat(0));
        assert_eq!(c.char_poly(), a.char_poly().mul(&b.char_poly()));
    }

    #[test]
    fn lattice_mode_rejects_fractions() {
        let rows = vec![vec![crate::ratio(1, 2), rat(0)], vec![rat(0), rat(1)]];
        assert!(ExactMatrix::new(rows, MatrixMode::Lattice).is_err());
    }
}
