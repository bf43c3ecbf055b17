//! Exact strictly convex closed cones: polyhedral (rational rays / facets)
//! and Lorentzian (integer Gram of signature (1, n-1) plus an orientation
//! ray), with membership, convexity and invariance checks, and restriction
//! to subspaces.
//!
//! Everything is generic over the scalar field so that the eigenray engine
//! can restrict cones to eigenspaces over real algebraic extensions; the
//! public entry points use exact rationals.

pub mod dd;
pub mod lp;

use num_rational::BigRational;
use thiserror::Error;

use crate::exactalg::field::{ExactField, OrderedExactField};
use crate::exactalg::matrix::Matrix;
use crate::exactalg::subspace::Subspace;

pub use dd::{cone_from_constraints, facets_of_rays, normalize_ray, GeneratorRep};

#[derive(Debug, Error)]
pub enum ConeError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("subspace is not contained in the cone's ambient space")]
    SubspaceNotContained,

    #[error("invalid cone data: {0}")]
    InvalidData(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

/// A polyhedral cone: the nonnegative span of finitely many rays, with the
/// facet description derived and cached at construction time.
#[derive(Debug, Clone)]
pub struct PolyhedralCone<K: OrderedExactField = BigRational> {
    dim: usize,
    /// Extreme rays, canonically normalized. Empty for the zero cone.
    rays: Vec<Vec<K>>,
    /// Original generator list as supplied (kept for witnesses).
    generators: Vec<Vec<K>>,
    /// `cone = {x : eq · x = 0 for all eq, ineq · x >= 0 for all ineq}`.
    equalities: Vec<Vec<K>>,
    inequalities: Vec<Vec<K>>,
}

impl<K: OrderedExactField> PolyhedralCone<K> {
    /// Build from generating rays (not necessarily extreme or distinct).
    pub fn from_rays(dim: usize, rays: Vec<Vec<K>>) -> Result<Self, ConeError> {
        for r in &rays {
            if r.len() != dim {
                return Err(ConeError::DimensionMismatch(format!(
                    "ray length {} in ambient rank {dim}",
                    r.len()
                )));
            }
        }
        let generators: Vec<Vec<K>> = rays
            .into_iter()
            .filter(|r| !r.iter().all(|c| c.is_zero()))
            .collect();
        let (equalities, inequalities) = dd::facets_of_rays(dim, &generators);
        // Extreme rays via the primal double description of the facets.
        // A non-pointed input has a lineality part; the canonical ray list
        // then falls back to the normalized generators so that nothing about
        // the cone is lost (the strict-convexity check reports the line).
        let rep = dd::cone_from_constraints(dim, &equalities, &inequalities);
        let mut rays = if rep.lineality.is_empty() {
            rep.rays
        } else {
            generators.iter().map(|r| dd::normalize_ray(r)).collect()
        };
        rays.sort_by(|a, b| cmp_vecs(a, b));
        rays.dedup();
        Ok(PolyhedralCone {
            dim,
            rays,
            generators,
            equalities,
            inequalities,
        })
    }

    pub fn zero(dim: usize) -> Self {
        PolyhedralCone::from_rays(dim, Vec::new()).expect("zero cone is always valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<K>] {
        &self.rays
    }

    pub fn generators(&self) -> &[Vec<K>] {
        &self.generators
    }

    pub fn facet_equalities(&self) -> &[Vec<K>] {
        &self.equalities
    }

    pub fn facet_inequalities(&self) -> &[Vec<K>] {
        &self.inequalities
    }

    pub fn is_nonzero(&self) -> bool {
        !self.rays.is_empty()
    }

    /// Exact membership by rational linear programming on the generators.
    pub fn contains(&self, v: &[K]) -> Result<bool, ConeError> {
        if v.len() != self.dim {
            return Err(ConeError::DimensionMismatch(format!(
                "vector length {} in ambient rank {}",
                v.len(),
                self.dim
            )));
        }
        Ok(lp::in_nonneg_span(&self.generators, v).is_some())
    }

    /// Membership through the cached facet description (the second route,
    /// used for cross-checks).
    pub fn contains_by_facets(&self, v: &[K]) -> Result<bool, ConeError> {
        if v.len() != self.dim {
            return Err(ConeError::DimensionMismatch("facet membership".into()));
        }
        let ok = self
            .equalities
            .iter()
            .all(|e| dot(e, v).is_zero())
            && self.inequalities.iter().all(|a| !dot(a, v).is_neg());
        Ok(ok)
    }

    /// Exact strict-convexity decision; a witness line direction is returned
    /// when the cone contains a line.
    pub fn strict_convexity_witness(&self) -> Option<Vec<K>> {
        let lambda = lp::nontrivial_nonneg_kernel(&self.generators)?;
        let idx = lambda.iter().position(|c| c.is_pos())?;
        Some(self.generators[idx].clone())
    }

    pub fn span(&self) -> Subspace<K> {
        Subspace::span(self.dim, self.rays.clone())
    }

    /// Reinterpret over another ordered field via an injective, order- and
    /// arithmetic-preserving map (rationals into a real algebraic field).
    /// Facet data stays valid, so nothing is recomputed.
    pub fn map_scalars<L: OrderedExactField>(
        &self,
        f: impl Fn(&K) -> L + Copy,
    ) -> PolyhedralCone<L> {
        let mv = |vs: &Vec<Vec<K>>| -> Vec<Vec<L>> {
            vs.iter().map(|r| r.iter().map(f).collect()).collect()
        };
        PolyhedralCone {
            dim: self.dim,
            rays: mv(&self.rays),
            generators: mv(&self.generators),
            equalities: mv(&self.equalities),
            inequalities: mv(&self.inequalities),
        }
    }
}

fn cmp_vecs<K: OrderedExactField>(a: &[K], b: &[K]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        let c = x.cmp_exact(y);
        if c != std::cmp::Ordering::Equal {
            return c;
        }
    }
    a.len().cmp(&b.len())
}

fn dot<K: ExactField>(a: &[K], b: &[K]) -> K {
    a.iter()
        .zip(b)
        .fold(K::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Inertia (positive, negative, zero counts) of a symmetric matrix by exact
/// symmetric congruence reduction.
pub fn inertia<K: OrderedExactField>(m: &Matrix<K>) -> (usize, usize, usize) {
    assert!(m.is_square());
    let n = m.nrows();
    let mut a = m.clone();
    let mut pos = 0usize;
    let mut neg = 0usize;
    let mut zero = 0usize;
    let mut live: Vec<usize> = (0..n).collect();
    while let Some(&_first) = live.first() {
        // find a live index with nonzero diagonal
        let diag_idx = live.iter().copied().find(|&i| !a[(i, i)].is_zero());
        let pivot = match diag_idx {
            Some(i) => i,
            None => {
                // all-zero diagonal: look for any nonzero off-diagonal pair
                let mut found: Option<(usize, usize)> = None;
                'outer: for (ii, &i) in live.iter().enumerate() {
                    for &j in live.iter().skip(ii + 1) {
                        if !a[(i, j)].is_zero() {
                            found = Some((i, j));
                            break 'outer;
                        }
                    }
                }
                match found {
                    None => {
                        zero += live.len();
                        break;
                    }
                    Some((i, j)) => {
                        // congruence: row/col i += row/col j gives diagonal 2a_ij
                        for k in 0..n {
                            let t = a[(j, k)].clone();
                            a[(i, k)] = a[(i, k)].clone() + t;
                        }
                        for k in 0..n {
                            let t = a[(k, j)].clone();
                            a[(k, i)] = a[(k, i)].clone() + t;
                        }
                        i
                    }
                }
            }
        };
        let d = a[(pivot, pivot)].clone();
        match d.sign() {
            std::cmp::Ordering::Greater => pos += 1,
            std::cmp::Ordering::Less => neg += 1,
            std::cmp::Ordering::Equal => unreachable!("pivot chosen nonzero"),
        }
        // clear the pivot row/column on the remaining live submatrix
        let dinv = d.invert();
        let others: Vec<usize> = live.iter().copied().filter(|&k| k != pivot).collect();
        for &r in &others {
            let f = a[(r, pivot)].clone() * dinv.clone();
            if f.is_zero() {
                continue;
            }
            for &c in &others {
                let s = f.clone() * a[(pivot, c)].clone();
                a[(r, c)] = a[(r, c)].clone() - s;
            }
            a[(r, pivot)] = K::zero();
            a[(pivot, r)] = K::zero();
        }
        live.retain(|&k| k != pivot);
    }
    (pos, neg, zero)
}

/// A Lorentzian cone `{x : q(x) >= 0, (x, h)_Q >= 0}` for a symmetric form of
/// signature (1, n-1) with a designated forward ray `h`.
#[derive(Debug, Clone)]
pub struct LorentzianCone<K: OrderedExactField = BigRational> {
    dim: usize,
    gram: Matrix<K>,
    orientation: Vec<K>,
}

impl<K: OrderedExactField> LorentzianCone<K> {
    /// Validates the signature (exactly (1, n-1), nondegenerate) and the
    /// forward orientation `q(h) > 0`.
    pub fn new(gram: Matrix<K>, orientation: Vec<K>) -> Result<Self, ConeError> {
        if !gram.is_square() || gram.nrows() != orientation.len() {
            return Err(ConeError::DimensionMismatch(
                "Gram matrix and orientation ray sizes differ".into(),
            ));
        }
        let n = gram.nrows();
        for i in 0..n {
            for j in 0..n {
                if gram[(i, j)] != gram[(j, i)] {
                    return Err(ConeError::InvalidData("Gram matrix is not symmetric".into()));
                }
            }
        }
        let (pos, neg, zero) = inertia(&gram);
        if pos != 1 || zero != 0 || neg != n - 1 {
            return Err(ConeError::InvalidData(format!(
                "signature is ({pos}, {neg}) with {zero} radical dimensions; need (1, {})",
                n - 1
            )));
        }
        let c = LorentzianCone {
            dim: n,
            gram,
            orientation,
        };
        if !c.q(&c.orientation).is_pos() {
            return Err(ConeError::InvalidData(
                "orientation ray must have positive self-pairing".into(),
            ));
        }
        Ok(c)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gram(&self) -> &Matrix<K> {
        &self.gram
    }

    pub fn orientation(&self) -> &[K] {
        &self.orientation
    }

    pub fn pairing(&self, a: &[K], b: &[K]) -> K {
        dot(a, &self.gram.mul_vec(b))
    }

    pub fn q(&self, v: &[K]) -> K {
        self.pairing(v, v)
    }

    pub fn contains(&self, v: &[K]) -> Result<bool, ConeError> {
        if v.len() != self.dim {
            return Err(ConeError::DimensionMismatch("Lorentzian membership".into()));
        }
        Ok(!self.q(v).is_neg() && !self.pairing(v, &self.orientation).is_neg())
    }

    /// `g` is an isometry of the form mapping the forward cone to itself.
    pub fn map_scalars<L: OrderedExactField>(
        &self,
        f: impl Fn(&K) -> L + Copy,
    ) -> LorentzianCone<L> {
        LorentzianCone {
            dim: self.dim,
            gram: self.gram.map(f),
            orientation: self.orientation.iter().map(f).collect(),
        }
    }

    pub fn preserved_by(&self, g: &Matrix<K>) -> Result<bool, ConeError> {
        if g.nrows() != self.dim || g.ncols() != self.dim {
            return Err(ConeError::DimensionMismatch("Lorentzian invariance".into()));
        }
        let gtqg = g.transpose().mul(&self.gram).mul(g);
        if gtqg != self.gram {
            return Ok(false);
        }
        let gh = g.mul_vec(&self.orientation);
        Ok(self.pairing(&gh, &self.orientation).is_pos())
    }

    /// A vector with positive self-pairing inside the forward component,
    /// extracted from the congruence reduction of the restricted form.
    fn forward_vector(gram: &Matrix<K>) -> Option<Vec<K>> {
        let n = gram.nrows();
        // diagonalize by congruence, tracking the basis
        let mut a = gram.clone();
        let mut basis = Matrix::<K>::identity(n);
        let mut live: Vec<usize> = (0..n).collect();
        while let Some(&_f) = live.first() {
            let diag_idx = live.iter().copied().find(|&i| !a[(i, i)].is_zero());
            let pivot = match diag_idx {
                Some(i) => i,
                None => {
                    let mut found: Option<(usize, usize)> = None;
                    'outer: for (ii, &i) in live.iter().enumerate() {
                        for &j in live.iter().skip(ii + 1) {
                            if !a[(i, j)].is_zero() {
                                found = Some((i, j));
                                break 'outer;
                            }
                        }
                    }
                    match found {
                        None => break,
                        Some((i, j)) => {
                            for k in 0..n {
                                let t = a[(j, k)].clone();
                                a[(i, k)] = a[(i, k)].clone() + t;
                            }
                            for k in 0..n {
                                let t = a[(k, j)].clone();
                                a[(k, i)] = a[(k, i)].clone() + t;
                            }
                            // basis vector i absorbs j
                            for k in 0..n {
                                let t = basis[(k, j)].clone();
                                basis[(k, i)] = basis[(k, i)].clone() + t;
                            }
                            i
                        }
                    }
                }
            };
            let d = a[(pivot, pivot)].clone();
            if d.is_pos() {
                // column `pivot` of the tracked basis is the forward vector
                return Some((0..n).map(|k| basis[(k, pivot)].clone()).collect());
            }
            let dinv = d.invert();
            let others: Vec<usize> = live.iter().copied().filter(|&k| k != pivot).collect();
            for &r in &others {
                let f = a[(r, pivot)].clone() * dinv.clone();
                if f.is_zero() {
                    continue;
                }
                for &c in &others {
                    let s = f.clone() * a[(pivot, c)].clone();
                    a[(r, c)] = a[(r, c)].clone() - s;
                }
                // basis column r -= f * basis column pivot
                for k in 0..n {
                    let s = f.clone() * basis[(k, pivot)].clone();
                    basis[(k, r)] = basis[(k, r)].clone() - s;
                }
                a[(r, pivot)] = K::zero();
                a[(pivot, r)] = K::zero();
            }
            live.retain(|&k| k != pivot);
        }
        None
    }
}

/// Which concrete family a cone belongs to.
#[derive(Debug, Clone)]
pub enum ConePayload<K: OrderedExactField = BigRational> {
    Polyhedral(PolyhedralCone<K>),
    Lorentzian(LorentzianCone<K>),
}

/// A cone together with the subspace of the original lattice it lives in.
/// The payload is expressed in the coordinates of the ambient subspace.
#[derive(Debug, Clone)]
pub struct ConeHandle<K: OrderedExactField = BigRational> {
    payload: ConePayload<K>,
    ambient: Subspace<K>,
}

impl<K: OrderedExactField> ConeHandle<K> {
    pub fn polyhedral_full(cone: PolyhedralCone<K>) -> Self {
        let dim = cone.dim();
        ConeHandle {
            payload: ConePayload::Polyhedral(cone),
            ambient: Subspace::full(dim),
        }
    }

    pub fn lorentzian_full(cone: LorentzianCone<K>) -> Self {
        let dim = cone.dim();
        ConeHandle {
            payload: ConePayload::Lorentzian(cone),
            ambient: Subspace::full(dim),
        }
    }

    pub fn new(payload: ConePayload<K>, ambient: Subspace<K>) -> Result<Self, ConeError> {
        let pdim = match &payload {
            ConePayload::Polyhedral(c) => c.dim(),
            ConePayload::Lorentzian(c) => c.dim(),
        };
        if pdim != ambient.dim() {
            return Err(ConeError::DimensionMismatch(
                "payload dimension must equal the ambient subspace dimension".into(),
            ));
        }
        Ok(ConeHandle { payload, ambient })
    }

    pub fn payload(&self) -> &ConePayload<K> {
        &self.payload
    }

    pub fn ambient(&self) -> &Subspace<K> {
        &self.ambient
    }

    /// Rank of the original lattice this cone lives in.
    pub fn ambient_rank(&self) -> usize {
        self.ambient.ambient_rank()
    }

    /// Dimension of the coordinate space of the payload.
    pub fn local_dim(&self) -> usize {
        self.ambient.dim()
    }

    /// Exact membership of a vector given in original lattice coordinates.
    pub fn contains(&self, v: &[K]) -> Result<bool, ConeError> {
        if v.len() != self.ambient_rank() {
            return Err(ConeError::DimensionMismatch(format!(
                "vector length {} in lattice rank {}",
                v.len(),
                self.ambient_rank()
            )));
        }
        let Some(local) = self.ambient.coordinates_of(v) else {
            return Ok(false);
        };
        match &self.payload {
            ConePayload::Polyhedral(c) => c.contains(&local),
            ConePayload::Lorentzian(c) => c.contains(&local),
        }
    }

    /// Exact strict-convexity decision with a witness line on failure.
    /// The witness is reported in original lattice coordinates.
    pub fn strict_convexity_witness(&self) -> Option<Vec<K>> {
        match &self.payload {
            ConePayload::Polyhedral(c) => {
                let w = c.strict_convexity_witness()?;
                Some(self.to_lattice_coords(&w))
            }
            // signature (1, n-1) was validated at construction
            ConePayload::Lorentzian(_) => None,
        }
    }

    pub fn is_strictly_convex(&self) -> bool {
        self.strict_convexity_witness().is_none()
    }

    pub fn is_nonzero(&self) -> bool {
        match &self.payload {
            ConePayload::Polyhedral(c) => c.is_nonzero(),
            ConePayload::Lorentzian(_) => true,
        }
    }

    /// Reinterpret the whole handle over another ordered field.
    pub fn map_scalars<L: OrderedExactField>(&self, f: impl Fn(&K) -> L + Copy) -> ConeHandle<L> {
        let payload = match &self.payload {
            ConePayload::Polyhedral(c) => ConePayload::Polyhedral(c.map_scalars(f)),
            ConePayload::Lorentzian(c) => ConePayload::Lorentzian(c.map_scalars(f)),
        };
        ConeHandle {
            payload,
            ambient: self.ambient.map_scalars(f),
        }
    }

    /// Map local payload coordinates to original lattice coordinates.
    pub fn to_lattice_coords(&self, local: &[K]) -> Vec<K> {
        let rows = self.ambient.basis_rows();
        let rank = self.ambient.ambient_rank();
        let mut out = vec![K::zero(); rank];
        for (c, row) in local.iter().zip(&rows) {
            for (o, r) in out.iter_mut().zip(row) {
                *o = o.clone() + c.clone() * r.clone();
            }
        }
        out
    }

    /// Does `g` (acting on the original lattice) preserve the cone?
    /// Returns a witness on failure: a generator whose image leaves the cone
    /// (polyhedral) or a reason string (Lorentzian), in lattice coordinates.
    pub fn preservation_witness(
        &self,
        g: &Matrix<K>,
    ) -> Result<Option<PreservationFailure<K>>, ConeError> {
        if g.nrows() != self.ambient_rank() {
            return Err(ConeError::DimensionMismatch("cone invariance".into()));
        }
        // The subspace itself must be g-invariant.
        for row in self.ambient.basis_rows() {
            let img = g.mul_vec(&row);
            if !self.ambient.contains_vector(&img) {
                return Ok(Some(PreservationFailure::SubspaceMoved { vector: row }));
            }
        }
        match &self.payload {
            ConePayload::Polyhedral(c) => {
                for r in c.rays() {
                    let img = g.mul_vec(&self.to_lattice_coords(r));
                    if !self.contains(&img)? {
                        return Ok(Some(PreservationFailure::RayEscapes {
                            ray: self.to_lattice_coords(r),
                            image: img,
                        }));
                    }
                }
                Ok(None)
            }
            ConePayload::Lorentzian(c) => {
                // restrict g to the subspace coordinates
                let local = self.restrict_matrix(g)?;
                if c.preserved_by(&local)? {
                    Ok(None)
                } else {
                    Ok(Some(PreservationFailure::FormNotPreserved))
                }
            }
        }
    }

    /// Matrix of `g` in the coordinates of the ambient subspace; fails when
    /// the subspace is not `g`-invariant.
    pub fn restrict_matrix(&self, g: &Matrix<K>) -> Result<Matrix<K>, ConeError> {
        let rows = self.ambient.basis_rows();
        let d = rows.len();
        let mut cols: Vec<Vec<K>> = Vec::with_capacity(d);
        for row in &rows {
            let img = g.mul_vec(row);
            let Some(coords) = self.ambient.coordinates_of(&img) else {
                return Err(ConeError::InternalInconsistency(
                    "restricting a matrix to a non-invariant subspace".into(),
                ));
            };
            cols.push(coords);
        }
        Ok(Matrix::from_fn(d, d, |i, j| cols[j][i].clone()))
    }

    /// Exact restriction `C ∩ W` for a subspace `w` of the original lattice,
    /// expressed in coordinates of `w`.
    pub fn restrict(&self, w: &Subspace<K>) -> Result<ConeHandle<K>, ConeError> {
        if w.ambient_rank() != self.ambient_rank() {
            return Err(ConeError::DimensionMismatch("cone restriction".into()));
        }
        if !self.ambient.contains_subspace(w) {
            return Err(ConeError::SubspaceNotContained);
        }
        let wd = w.dim();
        // Express each w-basis vector in payload-local coordinates.
        let mut local_basis: Vec<Vec<K>> = Vec::with_capacity(wd);
        for row in w.basis_rows() {
            let c = self
                .ambient
                .coordinates_of(&row)
                .expect("w is contained in the ambient subspace");
            local_basis.push(c);
        }
        match &self.payload {
            ConePayload::Polyhedral(c) => {
                // pull the facet description back along t -> B t
                let mut eqs = Vec::new();
                for e in c.facet_equalities() {
                    eqs.push((0..wd).map(|j| dot(e, &local_basis[j])).collect::<Vec<K>>());
                }
                let mut ineqs = Vec::new();
                for a in c.facet_inequalities() {
                    ineqs.push((0..wd).map(|j| dot(a, &local_basis[j])).collect::<Vec<K>>());
                }
                let rep = dd::cone_from_constraints(wd, &eqs, &ineqs);
                if !rep.lineality.is_empty() {
                    return Err(ConeError::InternalInconsistency(
                        "restriction of a strictly convex cone produced a line".into(),
                    ));
                }
                let cone = PolyhedralCone::from_rays(wd, rep.rays)?;
                ConeHandle::new(ConePayload::Polyhedral(cone), w.clone())
            }
            ConePayload::Lorentzian(c) => {
                // restricted form Q' = B^T Q B and the pulled-back pairing
                // with the orientation ray
                let q = Matrix::from_fn(wd, wd, |i, j| {
                    c.pairing(&local_basis[i], &local_basis[j])
                });
                let ell: Vec<K> = (0..wd)
                    .map(|j| c.pairing(&local_basis[j], c.orientation()))
                    .collect();
                let (pos, _neg, zero) = inertia(&q);
                if pos == 1 && zero == 0 {
                    // Lorentzian again; orientation from the diagonalization
                    let mut fwd = LorentzianCone::forward_vector(&q)
                        .ok_or_else(|| {
                            ConeError::InternalInconsistency(
                                "positive direction not found despite signature".into(),
                            )
                        })?;
                    let pair = dot(&ell, &fwd);
                    match pair.sign() {
                        std::cmp::Ordering::Less => {
                            for f in fwd.iter_mut() {
                                *f = -f.clone();
                            }
                        }
                        std::cmp::Ordering::Equal => {
                            return Err(ConeError::InternalInconsistency(
                                "forward direction orthogonal to the orientation".into(),
                            ));
                        }
                        _ => {}
                    }
                    let cone = LorentzianCone::new(q, fwd)?;
                    ConeHandle::new(ConePayload::Lorentzian(cone), w.clone())
                } else if pos == 0 {
                    // negative semidefinite: C ∩ W is the radical half-line
                    // (or the origin)
                    if zero == 0 {
                        let cone = PolyhedralCone::from_rays(wd, Vec::new())?;
                        return ConeHandle::new(ConePayload::Polyhedral(cone), w.clone());
                    }
                    if zero > 1 {
                        return Err(ConeError::InternalInconsistency(
                            "isotropic subspace of dimension > 1 in a Lorentzian form".into(),
                        ));
                    }
                    let rad = q.kernel();
                    let u = rad.into_iter().next().ok_or_else(|| {
                        ConeError::InternalInconsistency("radical basis missing".into())
                    })?;
                    let pair = dot(&ell, &u);
                    let ray = match pair.sign() {
                        std::cmp::Ordering::Greater => u,
                        std::cmp::Ordering::Less => u.iter().map(|c| -c.clone()).collect(),
                        std::cmp::Ordering::Equal => {
                            return Err(ConeError::InternalInconsistency(
                                "isotropic radical vector orthogonal to the orientation".into(),
                            ))
                        }
                    };
                    let cone = PolyhedralCone::from_rays(wd, vec![ray])?;
                    ConeHandle::new(ConePayload::Polyhedral(cone), w.clone())
                } else {
                    Err(ConeError::InternalInconsistency(format!(
                        "restricted form has {pos} positive directions"
                    )))
                }
            }
        }
    }

}

/// Why a generator fails to preserve a cone.
#[derive(Debug, Clone)]
pub enum PreservationFailure<K: OrderedExactField = BigRational> {
    /// The ambient subspace is not invariant; the stated basis vector moves
    /// out of it.
    SubspaceMoved { vector: Vec<K> },
    /// A cone ray maps outside the cone.
    RayEscapes { ray: Vec<K>, image: Vec<K> },
    /// The bilinear form or the orientation is not preserved.
    FormNotPreserved,
}

#[cfg(test)]
mod tests;
