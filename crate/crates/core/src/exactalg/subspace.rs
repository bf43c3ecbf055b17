//! Linear subspaces with canonical reduced-echelon bases.
//!
//! Canonicality makes subspace equality a syntactic comparison, which is what
//! the invariant-subspace iteration uses as its termination test.

use num_rational::BigRational;

use super::field::ExactField;
use super::matrix::Matrix;
use super::ExactAlgError;

/// A linear subspace of `K^n`, stored as a reduced row-echelon basis.
/// Two equal subspaces have identical stored bases.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace<K: ExactField> {
    ambient: usize,
    /// Rows form the canonical basis; empty for the zero subspace.
    basis: Matrix<K>,
}

pub type RationalSubspace = Subspace<BigRational>;

impl<K: ExactField> Subspace<K> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zero(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    /// Span of the given vectors.
    pub fn span(ambient: usize, vectors: Vec<Vec<K>>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient, "vector length must match ambient rank");
        }
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        let m = Matrix::from_rows(vectors);
        let (rr, _, rank) = m.rref();
        let rows = (0..rank).map(|i| rr.row(i).to_vec()).collect::<Vec<_>>();
        Subspace {
            ambient,
            basis: if rows.is_empty() {
                Matrix::zero(0, ambient)
            } else {
                Matrix::from_rows(rows)
            },
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis_rows(&self) -> Vec<Vec<K>> {
        self.basis.rows_vec()
    }

    /// Basis as a matrix whose columns are the basis vectors (ambient x dim).
    pub fn basis_cols_matrix(&self) -> Matrix<K> {
        self.basis.transpose()
    }

    pub fn contains_vector(&self, v: &[K]) -> bool {
        assert_eq!(v.len(), self.ambient);
        self.coordinates_of(v).is_some()
    }

    /// Coordinates of `v` with respect to the stored basis, if `v` lies in
    /// the subspace.
    pub fn coordinates_of(&self, v: &[K]) -> Option<Vec<K>> {
        if self.dim() == 0 {
            return if v.iter().all(|c| c.is_zero()) {
                Some(Vec::new())
            } else {
                None
            };
        }
        self.basis_cols_matrix().solve(v)
    }

    pub fn contains_subspace(&self, other: &Subspace<K>) -> bool {
        other
            .basis_rows()
            .iter()
            .all(|v| self.contains_vector(v))
    }

    /// Exact intersection, canonical basis.
    pub fn intersect(&self, other: &Subspace<K>) -> Result<Subspace<K>, ExactAlgError> {
        if self.ambient != other.ambient {
            return Err(ExactAlgError::Precondition(
                "subspace intersection requires equal ambient rank".into(),
            ));
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        // x in A ∩ B  <=>  x = u·A_basis = w·B_basis: solve the stacked kernel.
        let da = self.dim();
        let db = other.dim();
        let stacked = Matrix::from_fn(self.ambient, da + db, |i, j| {
            if j < da {
                self.basis[(j, i)].clone()
            } else {
                -other.basis[(j - da, i)].clone()
            }
        });
        let mut vectors = Vec::new();
        for k in stacked.kernel() {
            // The first da coordinates express the intersection vector in
            // the A-basis.
            let mut v = vec![K::zero(); self.ambient];
            for (bi, coef) in k[..da].iter().enumerate() {
                for (c, vc) in v.iter_mut().enumerate() {
                    *vc = vc.clone() + coef.clone() * self.basis[(bi, c)].clone();
                }
            }
            vectors.push(v);
        }
        Ok(Subspace::span(self.ambient, vectors))
    }

    /// Image of the subspace under a square matrix.
    pub fn image(&self, m: &Matrix<K>) -> Subspace<K> {
        assert_eq!(m.ncols(), self.ambient);
        let vectors = self
            .basis_rows()
            .iter()
            .map(|v| m.mul_vec(v))
            .collect::<Vec<_>>();
        Subspace::span(m.nrows(), vectors)
    }

    /// Reinterpret the subspace over another exact field through an
    /// injective field map. The image of a reduced echelon basis is again
    /// reduced echelon, so canonicality is preserved.
    pub fn map_scalars<L: ExactField>(&self, f: impl Fn(&K) -> L + Copy) -> Subspace<L> {
        Subspace {
            ambient: self.ambient,
            basis: self.basis.map(f),
        }
    }

    /// Sum of two subspaces.
    pub fn sum(&self, other: &Subspace<K>) -> Subspace<K> {
        assert_eq!(self.ambient, other.ambient);
        let mut vs = self.basis_rows();
        vs.extend(other.basis_rows());
        Subspace::span(self.ambient, vs)
    }
}

/// Exact kernel of `(m - I)`: the fixed space of `m`.
pub fn fixed_space<K: ExactField>(m: &Matrix<K>) -> Subspace<K> {
    assert!(m.is_square());
    let n = m.nrows();
    let shifted = m.sub(&Matrix::identity(n));
    Subspace::span(n, shifted.kernel())
}

/// The maximal subspace `W ⊆ f` with `g(W) = W` for every generator.
///
/// Iterates `W <- W ∩ g(W) ∩ g^{-1}(W)` over all generators until the
/// canonical basis stabilizes; the dimension strictly decreases otherwise, so
/// the loop terminates.
pub fn largest_invariant_subspace<K: ExactField>(
    f: &Subspace<K>,
    gens: &[Matrix<K>],
    inverses: &[Matrix<K>],
) -> Subspace<K> {
    assert_eq!(gens.len(), inverses.len());
    let mut w = f.clone();
    loop {
        let mut next = w.clone();
        for (g, gi) in gens.iter().zip(inverses) {
            next = next
                .intersect(&w.image(g))
                .expect("equal ambient by construction");
            next = next
                .intersect(&w.image(gi))
                .expect("equal ambient by construction");
            if next.is_zero() {
                return next;
            }
        }
        if next == w {
            return w;
        }
        w = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn rs(ambient: usize, vs: &[&[i64]]) -> RationalSubspace {
        Subspace::span(
            ambient,
            vs.iter()
                .map(|v| v.iter().map(|&e| rat(e)).collect())
                .collect(),
        )
    }

    fn mat(rows: &[&[i64]]) -> Matrix<BigRational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&e| rat(e)).collect())
                .collect(),
        )
    }

    #[test]
    fn canonical_equality() {
        let a = rs(2, &[&[1, 1], &[1, 0]]);
        let b = rs(2, &[&[0, 1], &[2, 0]]);
        assert_eq!(a, b);
        assert!(a.is_full());
    }

    #[test]
    fn fixed_space_identity_is_full() {
        let m = mat(&[&[1, 0], &[0, 1]]);
        assert!(fixed_space(&m).is_full());
    }

    #[test]
    fn fixed_space_shear() {
        // [[1,1],[0,1]] fixes exactly span{(1,0)}
        let m = mat(&[&[1, 1], &[0, 1]]);
        assert_eq!(fixed_space(&m), rs(2, &[&[1, 0]]));
    }

    #[test]
    fn fixed_space_swap() {
        // [[0,1],[1,0]] fixes span{(1,1)}
        let m = mat(&[&[0, 1], &[1, 0]]);
        assert_eq!(fixed_space(&m), rs(2, &[&[1, 1]]));
    }

    #[test]
    fn intersect_cases() {
        let x = rs(2, &[&[1, 0]]);
        assert_eq!(x.intersect(&x).unwrap(), x);
        let y = rs(2, &[&[0, 1]]);
        assert!(x.intersect(&y).unwrap().is_zero());
        let a = rs(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let b = rs(3, &[&[1, 1, 0]]);
        assert_eq!(a.intersect(&b).unwrap(), rs(3, &[&[1, 1, 0]]));
        assert!(rs(2, &[&[1, 0]]).intersect(&rs(3, &[&[1, 0, 0]])).is_err());
    }

    #[test]
    fn invariant_subspace_examples() {
        let shear = mat(&[&[1, 1], &[0, 1]]);
        let shear_inv = shear.inverse().unwrap();
        let full = RationalSubspace::full(2);
        // full space is invariant for any invertible generators
        assert!(largest_invariant_subspace(&full, &[shear.clone()], &[shear_inv.clone()]).is_full());
        // e1 is fixed by the shear
        let f = rs(2, &[&[1, 0]]);
        assert_eq!(
            largest_invariant_subspace(&f, &[shear], &[shear_inv]),
            rs(2, &[&[1, 0]])
        );
        // the swap moves e1 off span{(1,0)}
        let swap = mat(&[&[0, 1], &[1, 0]]);
        let swap_inv = swap.inverse().unwrap();
        assert!(largest_invariant_subspace(&rs(2, &[&[1, 0]]), &[swap], &[swap_inv]).is_zero());
    }

    #[test]
    fn fixed_space_contained_in_power_fixed_space() {
        let m = mat(&[&[0, -1], &[1, 0]]);
        let f1 = fixed_space(&m);
        for k in 1..=4i64 {
            let fk = fixed_space(&m.pow(k));
            assert!(fk.contains_subspace(&f1));
        }
    }
}
