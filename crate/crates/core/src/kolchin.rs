//! Constructive common-eigenray search for finitely generated groups of
//! lattice automorphisms preserving a strictly convex closed cone.
//!
//! Given generators, the engine either returns a common eigenray in the cone
//! (with one certified positive real eigenvalue per generator) or a
//! structured failure certificate whose failing datum re-checks
//! independently. The descent works on commutator fixed spaces saturated to
//! invariance; the abelian base case runs a Perron eigenray cascade over a
//! growing real algebraic field, so every restriction along the way stays
//! exact.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::cones::{ConeError, ConeHandle, ConePayload, PreservationFailure};
use crate::exactalg::algebraic::AlgebraicValue;
use crate::exactalg::field::{ExactField, OrderedExactField, RatInterval};
use crate::exactalg::matrix::{ExactMatrix, Matrix};
use crate::exactalg::poly::{resultant_y_bivariate, IntPolynomial, Poly, QPoly};
use crate::exactalg::realfield::{adjoin, FieldExtension, RealElem, RealFieldCtx};
use crate::exactalg::spectrum::rational_roots;
use crate::exactalg::subspace::{
    fixed_space, largest_invariant_subspace, RationalSubspace, Subspace,
};
use crate::exactalg::ExactAlgError;
use crate::Budget;

/// A finite generator list over a fixed lattice rank.
#[derive(Debug, Clone)]
pub struct GroupPresentation {
    rank: usize,
    generators: Vec<ExactMatrix>,
    labels: Vec<String>,
}

#[derive(Debug, Error)]
pub enum KolchinError {
    #[error("precondition violation: {0}")]
    Precondition(String),

    #[error("budget exceeded: {detail}")]
    Budget { detail: String, trace: Vec<StageInfo> },

    #[error("internal inconsistency: {0} (an earlier exact invariant must have been breached)")]
    Internal(String),

    #[error("cone error: {0}")]
    Cone(#[from] ConeError),

    #[error(transparent)]
    Alg(#[from] ExactAlgError),
}

impl GroupPresentation {
    /// Validates: square integer matrices of the stated rank, det ±1.
    pub fn new(
        rank: usize,
        generators: Vec<ExactMatrix>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, KolchinError> {
        if generators.is_empty() {
            return Err(KolchinError::Precondition(
                "a group presentation needs at least one generator".into(),
            ));
        }
        for (i, g) in generators.iter().enumerate() {
            if g.rank_dim() != rank {
                return Err(KolchinError::Precondition(format!(
                    "generator {i} has rank {} but the lattice rank is {rank}",
                    g.rank_dim()
                )));
            }
            if g.mode() != crate::exactalg::MatrixMode::Lattice {
                return Err(KolchinError::Precondition(format!(
                    "generator {i} is not an integer (lattice-mode) matrix"
                )));
            }
            if !g.is_unimodular() {
                return Err(KolchinError::Precondition(format!(
                    "generator {i} has determinant != ±1"
                )));
            }
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != generators.len() {
                    return Err(KolchinError::Precondition(
                        "label count must match generator count".into(),
                    ));
                }
                l
            }
            None => (0..generators.len()).map(|i| format!("g{}", i + 1)).collect(),
        };
        Ok(GroupPresentation {
            rank,
            generators,
            labels,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[ExactMatrix] {
        &self.generators
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Replace every generator by its k-th power. A heuristic for retrying
    /// after failures caused by finite-order parts; generates a subgroup, so
    /// a ray found afterwards is a ray for that subgroup only.
    pub fn power_trick(&self, k: u32) -> GroupPresentation {
        assert!(k >= 1, "power trick exponent must be positive");
        GroupPresentation {
            rank: self.rank,
            generators: self.generators.iter().map(|g| g.pow(k as i64)).collect(),
            labels: self.labels.clone(),
        }
    }
}

/// All pairwise commutators `g_i g_j g_i^-1 g_j^-1` for `i < j`, with
/// identities filtered out.
pub fn commutators(gens: &GroupPresentation) -> Vec<ExactMatrix> {
    let gs = gens.generators();
    let mut out = Vec::new();
    for i in 0..gs.len() {
        for j in i + 1..gs.len() {
            let gi_inv = gs[i].inverse().expect("unimodular generators are invertible");
            let gj_inv = gs[j].inverse().expect("unimodular generators are invertible");
            let c = gs[i].mul(&gs[j]).mul(&gi_inv).mul(&gj_inv);
            if !c.is_identity() {
                out.push(c);
            }
        }
    }
    out
}

/// One stage of the descent, for traces and reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageInfo {
    pub dim: usize,
    pub cone_kind: String,
    pub abelian: bool,
}

/// Why the engine gave up: a piece of data that violates the assumptions,
/// re-checkable by the stated operation.
#[derive(Debug, Clone)]
pub enum FailureCertificate {
    /// The cone contains the line through the witness vector.
    NotStrictlyConvex { witness_line: Vec<BigRational> },
    /// A generator does not preserve the cone.
    NotPreserved {
        generator_index: usize,
        witness: PreservationFailure<BigRational>,
    },
    /// A commutator of the generators has an eigenvalue different from 1.
    NonUnipotentCommutator {
        left_index: usize,
        right_index: usize,
        commutator: ExactMatrix,
        char_poly: IntPolynomial,
    },
    /// The invariant subspace meets the cone only at the origin
    /// (`C ∩ W = {0}`): the group is not connected solvable on this data.
    ConeSubspaceTrivial { subspace: RationalSubspace },
}

impl FailureCertificate {
    /// Re-validate the failing datum from scratch against the inputs.
    pub fn revalidate(&self, gens: &GroupPresentation, cone: &ConeHandle) -> bool {
        match self {
            FailureCertificate::NotStrictlyConvex { witness_line } => {
                let neg: Vec<BigRational> = witness_line.iter().map(|c| -c.clone()).collect();
                let nonzero = witness_line.iter().any(|c| !c.is_zero());
                nonzero
                    && cone.contains(witness_line).unwrap_or(false)
                    && cone.contains(&neg).unwrap_or(false)
            }
            FailureCertificate::NotPreserved { generator_index, .. } => {
                match gens.generators().get(*generator_index) {
                    Some(g) => cone
                        .preservation_witness(g.matrix())
                        .map(|w| w.is_some())
                        .unwrap_or(false),
                    None => false,
                }
            }
            FailureCertificate::NonUnipotentCommutator {
                left_index,
                right_index,
                commutator,
                ..
            } => {
                let gs = gens.generators();
                let (Some(gi), Some(gj)) = (gs.get(*left_index), gs.get(*right_index)) else {
                    return false;
                };
                let rebuilt = gi
                    .mul(gj)
                    .mul(&gi.inverse().expect("unimodular"))
                    .mul(&gj.inverse().expect("unimodular"));
                if rebuilt != *commutator {
                    return false;
                }
                let n = rebuilt.rank_dim();
                rebuilt.char_poly() != unipotent_char_poly(n)
            }
            FailureCertificate::ConeSubspaceTrivial { subspace } => {
                for g in gens.generators() {
                    for row in subspace.basis_rows() {
                        let img = g.matrix().mul_vec(&row);
                        if !subspace.contains_vector(&img) {
                            return false;
                        }
                    }
                }
                match cone.restrict(subspace) {
                    Ok(r) => !r.is_nonzero(),
                    Err(_) => false,
                }
            }
        }
    }
}

fn unipotent_char_poly(n: usize) -> IntPolynomial {
    // (x - 1)^n
    let mut p = QPoly::one();
    let lin = QPoly::from_i64_slice(&[-1, 1]);
    for _ in 0..n {
        p = p.mul(&lin);
    }
    p.primitive_integer()
}

/// Exact check that every pairwise commutator is unipotent
/// (`char poly = (x - 1)^r`); the first violation becomes a certificate.
pub fn check_unipotent_commutators(
    gens: &GroupPresentation,
) -> Result<(), Box<FailureCertificate>> {
    let gs = gens.generators();
    let unipotent = unipotent_char_poly(gens.rank());
    for i in 0..gs.len() {
        for j in i + 1..gs.len() {
            let gi_inv = gs[i].inverse().expect("unimodular");
            let gj_inv = gs[j].inverse().expect("unimodular");
            let c = gs[i].mul(&gs[j]).mul(&gi_inv).mul(&gj_inv);
            if c.is_identity() {
                continue;
            }
            let cp = c.char_poly();
            if cp != unipotent {
                return Err(Box::new(FailureCertificate::NonUnipotentCommutator {
                    left_index: i,
                    right_index: j,
                    commutator: c,
                    char_poly: cp,
                }));
            }
        }
    }
    Ok(())
}

/// A common eigenray with exact data over a shared real algebraic field.
#[derive(Debug, Clone)]
pub struct CommonEigenRay {
    ctx: Option<Arc<RealFieldCtx>>,
    /// Nonzero ray in original lattice coordinates.
    ray: Vec<RealElem>,
    /// One positive real eigenvalue per generator, in generator order.
    eigenvalues: Vec<RealElem>,
    trace: Vec<StageInfo>,
}

impl CommonEigenRay {
    pub fn field_ctx(&self) -> Option<&Arc<RealFieldCtx>> {
        self.ctx.as_ref()
    }

    pub fn ray(&self) -> &[RealElem] {
        &self.ray
    }

    pub fn eigenvalues(&self) -> &[RealElem] {
        &self.eigenvalues
    }

    pub fn trace(&self) -> &[StageInfo] {
        &self.trace
    }

    /// Eigenvalues exported as designated algebraic values.
    pub fn eigenvalue_values(&self) -> Result<Vec<AlgebraicValue>, ExactAlgError> {
        self.eigenvalues.iter().map(|e| e.to_algebraic()).collect()
    }

    /// Exact serializable form: the field modulus plus coordinates as
    /// polynomials in the field generator.
    pub fn to_exact_data(&self) -> ExactRayData {
        let (modulus, theta_interval) = match &self.ctx {
            None => (None, None),
            Some(c) => (
                Some(c.modulus().primitive_integer()),
                Some(c.current_interval()),
            ),
        };
        ExactRayData {
            modulus,
            theta_interval,
            ray: self.ray.iter().map(|e| e.poly().clone()).collect(),
            eigenvalues: self.eigenvalues.iter().map(|e| e.poly().clone()).collect(),
        }
    }

    /// Rebuild the exact ray from serialized data.
    pub fn from_exact_data(
        data: &ExactRayData,
        trace: Vec<StageInfo>,
    ) -> Result<Self, KolchinError> {
        let ctx = match (&data.modulus, &data.theta_interval) {
            (None, None) => None,
            (Some(m), Some(iv)) => Some(RealFieldCtx::new(m, iv.clone())?),
            _ => {
                return Err(KolchinError::Precondition(
                    "field modulus and root interval must come together".into(),
                ))
            }
        };
        let mk = |p: &QPoly| match &ctx {
            None => {
                if p.degree() > 0 {
                    Err(KolchinError::Precondition(
                        "nonconstant coordinate polynomial without a field".into(),
                    ))
                } else {
                    Ok(RealElem::rational(p.coeff(0)))
                }
            }
            Some(c) => Ok(RealElem::from_poly(c, p.clone())),
        };
        let ray = data.ray.iter().map(&mk).collect::<Result<Vec<_>, _>>()?;
        let eigenvalues = data
            .eigenvalues
            .iter()
            .map(&mk)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CommonEigenRay {
            ctx,
            ray,
            eigenvalues,
            trace,
        })
    }
}

/// Serializable exact representation of a ray and its eigenvalues.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactRayData {
    pub modulus: Option<IntPolynomial>,
    pub theta_interval: Option<RatInterval>,
    pub ray: Vec<QPoly>,
    pub eigenvalues: Vec<QPoly>,
}

/// Outcome of the engine: a ray or a re-checkable certificate.
#[derive(Debug, Clone)]
pub enum EigenRayOutcome {
    Ray(CommonEigenRay),
    Failure(Box<FailureCertificate>),
}

/// The main engine: verify the standing assumptions exactly, descend along
/// commutator fixed spaces saturated to invariance, finish with the abelian
/// Perron cascade.
pub fn common_eigen_ray(
    gens: &GroupPresentation,
    cone: &ConeHandle,
    budget: &Budget,
) -> Result<EigenRayOutcome, KolchinError> {
    if cone.ambient_rank() != gens.rank() {
        return Err(KolchinError::Precondition(
            "cone and generators live on different lattice ranks".into(),
        ));
    }
    if let Some(w) = cone.strict_convexity_witness() {
        return Ok(EigenRayOutcome::Failure(Box::new(
            FailureCertificate::NotStrictlyConvex { witness_line: w },
        )));
    }
    if !cone.is_nonzero() {
        return Ok(EigenRayOutcome::Failure(Box::new(
            FailureCertificate::ConeSubspaceTrivial {
                subspace: RationalSubspace::full(gens.rank()),
            },
        )));
    }
    for (i, g) in gens.generators().iter().enumerate() {
        if let Some(wit) = cone.preservation_witness(g.matrix())? {
            return Ok(EigenRayOutcome::Failure(Box::new(
                FailureCertificate::NotPreserved {
                    generator_index: i,
                    witness: wit,
                },
            )));
        }
    }

    let mut trace: Vec<StageInfo> = Vec::new();
    let mut current = cone.clone();
    loop {
        if trace.len() > gens.rank() + 1 {
            return Err(KolchinError::Budget {
                detail: "descent did not terminate within the rank bound".into(),
                trace,
            });
        }
        let locals: Vec<Matrix<BigRational>> = gens
            .generators()
            .iter()
            .map(|g| current.restrict_matrix(g.matrix()))
            .collect::<Result<_, _>>()?;
        let d = current.local_dim();

        let mut comms: Vec<(usize, usize, Matrix<BigRational>)> = Vec::new();
        for i in 0..locals.len() {
            for j in i + 1..locals.len() {
                let gi_inv = locals[i]
                    .inverse()
                    .ok_or_else(|| KolchinError::Internal("restricted generator singular".into()))?;
                let gj_inv = locals[j]
                    .inverse()
                    .ok_or_else(|| KolchinError::Internal("restricted generator singular".into()))?;
                let c = locals[i].mul(&locals[j]).mul(&gi_inv).mul(&gj_inv);
                if !c.is_identity() {
                    comms.push((i, j, c));
                }
            }
        }

        if comms.is_empty() {
            trace.push(StageInfo {
                dim: d,
                cone_kind: cone_kind(&current).to_string(),
                abelian: true,
            });
            return abelian_cascade(gens, &current, budget, trace);
        }

        let unipotent = unipotent_char_poly(d);
        for (i, j, c) in &comms {
            let cp: Poly<BigRational> = c.char_poly();
            if cp.primitive_integer() != unipotent {
                let gs = gens.generators();
                let gi_inv = gs[*i].inverse().expect("unimodular");
                let gj_inv = gs[*j].inverse().expect("unimodular");
                let lattice_comm = gs[*i].mul(&gs[*j]).mul(&gi_inv).mul(&gj_inv);
                let lattice_cp = lattice_comm.char_poly();
                return Ok(EigenRayOutcome::Failure(Box::new(
                    FailureCertificate::NonUnipotentCommutator {
                        left_index: *i,
                        right_index: *j,
                        commutator: lattice_comm,
                        char_poly: lattice_cp,
                    },
                )));
            }
        }

        // descend to the G-saturated commutator fixed space
        let mut f = Subspace::full(d);
        for (_, _, c) in &comms {
            f = f.intersect(&fixed_space(c))?;
        }
        let local_invs: Vec<Matrix<BigRational>> = locals
            .iter()
            .map(|m| m.inverse().expect("invertible on an invariant subspace"))
            .collect();
        let w_local = largest_invariant_subspace(&f, &locals, &local_invs);
        let w_lattice = Subspace::span(
            gens.rank(),
            w_local
                .basis_rows()
                .iter()
                .map(|r| current.to_lattice_coords(r))
                .collect(),
        );
        let restricted = current.restrict(&w_lattice)?;
        if !restricted.is_nonzero() {
            return Ok(EigenRayOutcome::Failure(Box::new(
                FailureCertificate::ConeSubspaceTrivial {
                    subspace: w_lattice,
                },
            )));
        }
        if w_local.dim() >= d {
            return Err(KolchinError::Internal(
                "descent failed to reduce the dimension despite nontrivial commutators".into(),
            ));
        }
        trace.push(StageInfo {
            dim: d,
            cone_kind: cone_kind(&current).to_string(),
            abelian: false,
        });
        current = restricted;
    }
}

fn cone_kind<K: OrderedExactField>(c: &ConeHandle<K>) -> &'static str {
    match c.payload() {
        ConePayload::Polyhedral(_) => "polyhedral",
        ConePayload::Lorentzian(_) => "lorentzian",
    }
}

/// Perron–Frobenius cascade for commuting generators, one eigenspace
/// restriction per generator in input order.
///
/// Preconditions (verified here): pairwise commutators act as the identity on
/// the span of the cone, the cone is nonzero and preserved by every
/// generator.
pub fn abelian_common_ray(
    gens: &GroupPresentation,
    cone: &ConeHandle,
    budget: &Budget,
) -> Result<CommonEigenRay, KolchinError> {
    eprintln!("[pre] span");
    let span = span_in_lattice(cone);
    eprintln!("[pre] restrict dim {}", span.dim());
    let restricted = cone.restrict(&span)?;
    eprintln!("[pre] locals");
    let locals: Vec<Matrix<BigRational>> = gens
        .generators()
        .iter()
        .map(|g| restricted.restrict_matrix(g.matrix()))
        .collect::<Result<_, _>>()?;
    eprintln!("[pre] commute");
    for i in 0..locals.len() {
        for j in i + 1..locals.len() {
            if locals[i].mul(&locals[j]) != locals[j].mul(&locals[i]) {
                return Err(KolchinError::Precondition(
                    "generators do not commute on the span of the cone".into(),
                ));
            }
        }
    }
    if !cone.is_nonzero() {
        return Err(KolchinError::Precondition("cone is zero".into()));
    }
    eprintln!("[pre] preserve");
    for (i, g) in gens.generators().iter().enumerate() {
        if cone.preservation_witness(g.matrix())?.is_some() {
            return Err(KolchinError::Precondition(format!(
                "generator {i} does not preserve the cone"
            )));
        }
    }
    abelian_cascade(gens, cone, budget, Vec::new()).and_then(|out| match out {
        EigenRayOutcome::Ray(r) => Ok(r),
        EigenRayOutcome::Failure(_) => Err(KolchinError::Internal(
            "verified abelian preconditions cannot produce a certificate".into(),
        )),
    })
}

fn span_in_lattice(cone: &ConeHandle) -> RationalSubspace {
    match cone.payload() {
        ConePayload::Polyhedral(c) => {
            let rays_lattice: Vec<Vec<BigRational>> = c
                .rays()
                .iter()
                .map(|r| cone.to_lattice_coords(r))
                .collect();
            Subspace::span(cone.ambient_rank(), rays_lattice)
        }
        ConePayload::Lorentzian(_) => cone.ambient().clone(),
    }
}

fn span_in_lattice_k(cone: &ConeHandle<RealElem>) -> Subspace<RealElem> {
    match cone.payload() {
        ConePayload::Polyhedral(c) => {
            let rays_lattice: Vec<Vec<RealElem>> = c
                .rays()
                .iter()
                .map(|r| cone.to_lattice_coords(r))
                .collect();
            Subspace::span(cone.ambient_rank(), rays_lattice)
        }
        ConePayload::Lorentzian(_) => cone.ambient().clone(),
    }
}

fn abelian_cascade(
    gens: &GroupPresentation,
    cone: &ConeHandle,
    budget: &Budget,
    mut trace: Vec<StageInfo>,
) -> Result<EigenRayOutcome, KolchinError> {
    let rank = gens.rank();
    let lift = |q: &BigRational| RealElem::rational(q.clone());
    let mut ctx: Option<Arc<RealFieldCtx>> = None;
    let mut cone_k: ConeHandle<RealElem> = cone.map_scalars(lift);
    let mut gens_k: Vec<Matrix<RealElem>> = gens
        .generators()
        .iter()
        .map(|g| g.matrix().map(lift))
        .collect();
    let mut eigenvalues: Vec<RealElem> = Vec::new();

    for gi in 0..gens.generators().len() {
        // restrict attention to the span of the current cone
        let span = span_in_lattice_k(&cone_k);
        cone_k = cone_k.restrict(&span)?;
        let a = cone_k.restrict_matrix(&gens_k[gi])?;
        let p: Poly<RealElem> = a.char_poly();

        // the Perron root is the largest real root (it exists and dominates
        // by Birkhoff–Perron–Frobenius, given the verified invariants)
        let roots = p.isolate_real_roots();
        let Some(top) = roots.last().cloned() else {
            return Err(KolchinError::Internal(
                "no real eigenvalue on the span of a preserved cone".into(),
            ));
        };

        let defining = defining_poly_over_q(&p, &ctx);
        let def_sf = defining.squarefree_part();
        let def_q = def_sf.to_qpoly();
        let chain = def_q.sturm_chain();
        let p_chain = p.sturm_chain();
        let mut iv = top;
        let mut bits = 24u32;
        loop {
            let cnt = def_q.count_roots_in(&chain, &iv.lo, &iv.hi)
                + usize::from(def_q.eval(&iv.lo).is_zero());
            if cnt == 1 {
                break;
            }
            iv = p.refine_root(&p_chain, &iv, bits);
            bits = bits.saturating_add(32);
            if bits > 1 << 14 {
                return Err(KolchinError::Internal(
                    "failed to designate the Perron root".into(),
                ));
            }
        }

        // rational fast path before growing the field
        let mut rho_k: Option<RealElem> = None;
        for cand in rational_roots(&def_sf) {
            if iv.contains(&cand) {
                let cand_elem = RealElem::rational(cand.clone());
                if p.eval(&cand_elem).is_zero() {
                    rho_k = Some(match &ctx {
                        None => cand_elem,
                        Some(c) => RealElem::from_poly(c, QPoly::constant(cand)),
                    });
                    break;
                }
            }
        }
        let rho = match rho_k {
            Some(r) => r,
            None => {
                let alpha = AlgebraicValue::new_real(def_sf.clone(), iv.clone())?;
                let ext: FieldExtension = adjoin(&ctx, &alpha)?;
                cone_k = cone_k.map_scalars(|e| ext.rebase(e));
                gens_k = gens_k.iter().map(|m| m.map(|e| ext.rebase(e))).collect();
                eigenvalues = eigenvalues.iter().map(|e| ext.rebase(e)).collect();
                ctx = ext.ctx.clone();
                if let Some(c) = &ctx {
                    if c.degree() as u32 > budget.max_field_degree {
                        return Err(KolchinError::Budget {
                            detail: format!(
                                "field degree {} exceeds the budget {}",
                                c.degree(),
                                budget.max_field_degree
                            ),
                            trace,
                        });
                    }
                }
                ext.adjoined.clone()
            }
        };
        if rho.sign() != std::cmp::Ordering::Greater {
            return Err(KolchinError::Internal(
                "Perron eigenvalue is not positive".into(),
            ));
        }

        // eigenspace of the restricted action, lifted to lattice coordinates
        let a = cone_k.restrict_matrix(&gens_k[gi])?;
        let dloc = a.nrows();
        let shifted = a.sub(&Matrix::from_fn(dloc, dloc, |i, j| {
            if i == j {
                rho.clone()
            } else {
                RealElem::zero()
            }
        }));
        let kernel = shifted.kernel();
        if kernel.is_empty() {
            return Err(KolchinError::Internal(
                "designated eigenvalue has an empty eigenspace".into(),
            ));
        }
        let e_lattice = Subspace::span(
            rank,
            kernel
                .iter()
                .map(|v| cone_k.to_lattice_coords(v))
                .collect(),
        );
        cone_k = cone_k.restrict(&e_lattice)?;
        if !cone_k.is_nonzero() {
            return Err(KolchinError::Internal(
                "cone collapsed to the origin inside a Perron eigenspace".into(),
            ));
        }
        eigenvalues.push(rho);
        trace.push(StageInfo {
            dim: cone_k.local_dim(),
            cone_kind: cone_kind(&cone_k).to_string(),
            abelian: true,
        });
    }

    // tie-breaking: the first stored ray of the final cone
    let ray_local: Vec<RealElem> = match cone_k.payload() {
        ConePayload::Polyhedral(c) => c
            .rays()
            .first()
            .cloned()
            .ok_or_else(|| KolchinError::Internal("final cone has no rays".into()))?,
        ConePayload::Lorentzian(c) => c.orientation().to_vec(),
    };
    let ray = cone_k.to_lattice_coords(&ray_local);

    Ok(EigenRayOutcome::Ray(CommonEigenRay {
        ctx,
        ray,
        eigenvalues,
        trace,
    }))
}

/// `Res_x(F(x), p(x, y))`: an integer polynomial whose roots include the
/// roots of a `K`-coefficient polynomial (over every conjugate of the field).
fn defining_poly_over_q(p: &Poly<RealElem>, ctx: &Option<Arc<RealFieldCtx>>) -> IntPolynomial {
    let all_rational = p.coeffs().iter().all(|e| e.to_rational().is_some());
    if ctx.is_none() || all_rational {
        let coeffs: Vec<BigRational> = p
            .coeffs()
            .iter()
            .map(|e| e.to_rational().expect("rational coefficients"))
            .collect();
        return QPoly::from_coeffs(coeffs).primitive_integer();
    }
    let c = ctx.as_ref().unwrap();
    // transpose to coefficients in x of sum_j c_j(x) y^j
    let deg_x = c.modulus().degree();
    let mut coeffs_in_x: Vec<QPoly> = vec![QPoly::zero(); deg_x.max(1)];
    for (j, e) in p.coeffs().iter().enumerate() {
        for (m, cm) in e.poly().coeffs().iter().enumerate() {
            let term = QPoly::monomial(cm.clone(), j);
            coeffs_in_x[m] = coeffs_in_x[m].add(&term);
        }
    }
    resultant_y_bivariate(c.modulus(), &coeffs_in_x).primitive_integer()
}

/// Independent re-check of a claimed common eigenray: exact cone membership
/// and the exact eigenvector equations over the ray's field.
pub fn verify_common_ray(gens: &GroupPresentation, cone: &ConeHandle, ray: &CommonEigenRay) -> bool {
    if ray.ray.len() != gens.rank() || ray.eigenvalues.len() != gens.generators().len() {
        return false;
    }
    if ray.ray.iter().all(|c| c.is_zero()) {
        return false;
    }
    let cone_k: ConeHandle<RealElem> = cone.map_scalars(|q| RealElem::rational(q.clone()));
    match cone_k.contains(&ray.ray) {
        Ok(true) => {}
        _ => return false,
    }
    for (g, chi) in gens.generators().iter().zip(&ray.eigenvalues) {
        if chi.sign() != std::cmp::Ordering::Greater {
            return false;
        }
        let gk = g.matrix().map(|q| RealElem::rational(q.clone()));
        let img = gk.mul_vec(&ray.ray);
        for (iv, rv) in img.iter().zip(&ray.ray) {
            let resid = iv.clone() - chi.clone() * rv.clone();
            if !resid.is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
#[path = "kolchin_tests.rs"]
mod tests;
