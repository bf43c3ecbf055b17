//! Arithmetic in a real algebraic number field `Q(theta)` with a designated
//! root.
//!
//! The field is `Q[x]/(F)` where `F` is square-free (not necessarily
//! irreducible) together with an isolating interval picking out which real
//! root `theta` is meant. Because exactly one root is designated, the usual
//! zero-divisor problem of non-irreducible moduli disappears: whenever a gcd
//! uncovers a factorization, the branch not containing `theta` is simply
//! discarded and the modulus shrinks. Elements carry their (possibly pruned)
//! context; contexts with a shared ancestor are reconciled through gcds.
//!
//! Every sign test is exact: interval refinement decides fast in the generic
//! case, and the `gcd(e, F)`-has-a-root-in-the-isolating-interval test decides
//! the remaining "is it exactly zero" case.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::{Arc, Mutex};

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::algebraic::AlgebraicValue;
use super::field::{pow2_inv, ExactField, OrderedExactField, RatInterval};
use super::poly::{resultant_y_bivariate, root_sum_poly, IntPolynomial, Poly, QPoly};
use super::ExactAlgError;

static FIELD_LINEAGE: AtomicU64 = AtomicU64::new(1);

/// Context of a real algebraic field with a designated root.
#[derive(Debug)]
pub struct RealFieldCtx {
    /// Shared by every pruning of the same original field.
    lineage: u64,
    /// Square-free monic modulus.
    modulus: QPoly,
    chain: Vec<QPoly>,
    /// Isolating interval of the designated root; only ever shrinks.
    interval: Mutex<RatInterval>,
}

impl RealFieldCtx {
    /// New field from a square-free defining polynomial and an isolating
    /// interval (validated).
    pub fn new(defining: &IntPolynomial, interval: RatInterval) -> Result<Arc<Self>, ExactAlgError> {
        let modulus = defining.squarefree_part().to_qpoly().monic();
        if modulus.degree() == 0 {
            return Err(ExactAlgError::Precondition(
                "field modulus must be nonconstant".into(),
            ));
        }
        let chain = modulus.sturm_chain();
        let hit = modulus.eval(&interval.lo).is_zero();
        let cnt = modulus.count_roots_in(&chain, &interval.lo, &interval.hi) + usize::from(hit);
        if cnt != 1 {
            return Err(ExactAlgError::Precondition(format!(
                "interval does not isolate a single root of the field modulus (got {cnt})"
            )));
        }
        let interval = if hit { RatInterval::point(interval.lo) } else { interval };
        Ok(Arc::new(RealFieldCtx {
            lineage: FIELD_LINEAGE.fetch_add(1, AtomicOrdering::Relaxed),
            modulus,
            chain,
            interval: Mutex::new(interval),
        }))
    }

    fn pruned(self: &Arc<Self>, new_modulus: QPoly) -> Arc<Self> {
        let modulus = new_modulus.monic();
        let chain = modulus.sturm_chain();
        let interval = self.interval.lock().unwrap().clone();
        Arc::new(RealFieldCtx {
            lineage: self.lineage,
            modulus,
            chain,
            interval: Mutex::new(interval),
        })
    }

    pub fn modulus(&self) -> &QPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree()
    }

    /// Interval of the designated root, refined to width at most `2^-bits`.
    /// Refinement is deterministic midpoint bisection, shared via the cache.
    pub fn theta_interval(&self, bits: u32) -> RatInterval {
        let mut guard = self.interval.lock().unwrap();
        if !guard.narrower_than(bits) {
            *guard = self.modulus.refine_root(&self.chain, &guard, bits);
        }
        guard.clone()
    }

    pub fn current_interval(&self) -> RatInterval {
        self.interval.lock().unwrap().clone()
    }

    /// Does the (square-free) polynomial `p` vanish at the designated root?
    fn vanishes_at_theta(&self, p: &QPoly) -> bool {
        if p.is_zero() {
            return true;
        }
        if p.degree() == 0 {
            return false;
        }
        let g = p.gcd(&self.modulus);
        if g.degree() == 0 {
            return false;
        }
        let iv = self.current_interval();
        let chain = g.sturm_chain();
        let hit = g.eval(&iv.lo).is_zero();
        g.count_roots_in(&chain, &iv.lo, &iv.hi) + usize::from(hit) > 0
    }

    /// The designated root as an [`AlgebraicValue`].
    pub fn theta_value(&self) -> AlgebraicValue {
        let iv = self.current_interval();
        AlgebraicValue::new_real(self.modulus.primitive_integer(), iv)
            .expect("field interval isolates by construction")
    }
}

/// An element of `Q(theta)` (or a plain rational when no context is set).
#[derive(Debug, Clone)]
pub struct RealElem {
    ctx: Option<Arc<RealFieldCtx>>,
    poly: QPoly,
}

impl RealElem {
    pub fn rational(q: BigRational) -> Self {
        RealElem {
            ctx: None,
            poly: QPoly::constant(q),
        }
    }

    /// The designated generator `theta` of the field.
    pub fn theta(ctx: &Arc<RealFieldCtx>) -> Self {
        RealElem {
            ctx: Some(ctx.clone()),
            poly: QPoly::x().div_rem(&ctx.modulus).1,
        }
    }

    pub fn from_poly(ctx: &Arc<RealFieldCtx>, poly: QPoly) -> Self {
        RealElem {
            ctx: Some(ctx.clone()),
            poly: poly.div_rem(&ctx.modulus).1,
        }
    }

    pub fn ctx(&self) -> Option<&Arc<RealFieldCtx>> {
        self.ctx.as_ref()
    }

    pub fn poly(&self) -> &QPoly {
        &self.poly
    }

    /// Reconcile two elements into a common context. Panics when the elements
    /// come from unrelated fields — mixing those is a programming error.
    fn unified(a: &RealElem, b: &RealElem) -> (Option<Arc<RealFieldCtx>>, QPoly, QPoly) {
        match (&a.ctx, &b.ctx) {
            (None, None) => (None, a.poly.clone(), b.poly.clone()),
            (Some(c), None) => (Some(c.clone()), a.poly.clone(), b.poly.clone()),
            (None, Some(c)) => (Some(c.clone()), a.poly.clone(), b.poly.clone()),
            (Some(ca), Some(cb)) => {
                if Arc::ptr_eq(ca, cb) {
                    return (Some(ca.clone()), a.poly.clone(), b.poly.clone());
                }
                assert_eq!(
                    ca.lineage, cb.lineage,
                    "arithmetic between elements of unrelated algebraic fields"
                );
                if ca.modulus == cb.modulus {
                    return (Some(ca.clone()), a.poly.clone(), b.poly.clone());
                }
                let g = ca.modulus.gcd(&cb.modulus);
                let ctx = ca.pruned(g);
                let pa = a.poly.div_rem(&ctx.modulus).1;
                let pb = b.poly.div_rem(&ctx.modulus).1;
                (Some(ctx), pa, pb)
            }
        }
    }

    fn reduce(ctx: Option<Arc<RealFieldCtx>>, poly: QPoly) -> RealElem {
        match ctx {
            None => RealElem { ctx: None, poly },
            Some(c) => {
                let r = poly.div_rem(&c.modulus).1;
                RealElem { ctx: Some(c), poly: r }
            }
        }
    }

    /// Certified enclosure by evaluating the representative on the refined
    /// root interval.
    pub fn enclosure_bits(&self, bits: u32) -> RatInterval {
        match &self.ctx {
            None => RatInterval::point(self.poly.coeff(0)),
            Some(c) => {
                if self.poly.is_constant() {
                    return RatInterval::point(self.poly.coeff(0));
                }
                let target = pow2_inv(bits);
                let mut theta_bits = bits + 4;
                loop {
                    let iv = c.theta_interval(theta_bits);
                    let out = self.poly.eval_interval(&iv, bits + 4);
                    if out.width() <= target || iv.is_point() {
                        return out;
                    }
                    theta_bits = theta_bits.saturating_mul(2);
                }
            }
        }
    }

    /// Exact integer defining polynomial of this element (roots include the
    /// element), via a resultant against the field modulus.
    pub fn defining_polynomial(&self) -> IntPolynomial {
        match &self.ctx {
            None => {
                let q = self.poly.coeff(0);
                IntPolynomial::from_coeffs(vec![-q.numer().clone(), q.denom().clone()])
            }
            Some(c) => {
                if self.poly.is_constant() {
                    let q = self.poly.coeff(0);
                    return IntPolynomial::from_coeffs(vec![-q.numer().clone(), q.denom().clone()]);
                }
                // Res_x(F(x), t - poly(x)) as a polynomial in t.
                let mut coeffs_in_x: Vec<QPoly> = Vec::with_capacity(self.poly.degree() + 1);
                for (j, pj) in self.poly.coeffs().iter().enumerate() {
                    if j == 0 {
                        coeffs_in_x.push(QPoly::from_coeffs(vec![-pj.clone(), BigRational::from_integer(1.into())]));
                    } else {
                        coeffs_in_x.push(QPoly::constant(-pj.clone()));
                    }
                }
                resultant_y_bivariate(&c.modulus, &coeffs_in_x)
                    .primitive_integer()
                    .squarefree_part()
            }
        }
    }

    /// This element as a designated real algebraic value.
    pub fn to_algebraic(&self) -> Result<AlgebraicValue, ExactAlgError> {
        if let Some(q) = self.to_rational() {
            return Ok(AlgebraicValue::from_rational(&q));
        }
        let def = self.defining_polynomial();
        let q = def.to_qpoly();
        let chain = q.sturm_chain();
        let mut bits = 32u32;
        loop {
            let iv = self.enclosure_bits(bits);
            let cnt = q.count_roots_in(&chain, &iv.lo, &iv.hi) + usize::from(q.eval(&iv.lo).is_zero());
            if cnt == 1 {
                return AlgebraicValue::new_real(def, iv);
            }
            bits = bits.saturating_mul(2);
            if bits > 1 << 15 {
                return Err(ExactAlgError::RefinementFailure {
                    detail: "element designation stalled".into(),
                });
            }
        }
    }
}

impl PartialEq for RealElem {
    fn eq(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).is_zero()
    }
}

impl Add for RealElem {
    type Output = RealElem;
    fn add(self, rhs: RealElem) -> RealElem {
        let (ctx, a, b) = RealElem::unified(&self, &rhs);
        RealElem::reduce(ctx, a.add(&b))
    }
}

impl Sub for RealElem {
    type Output = RealElem;
    fn sub(self, rhs: RealElem) -> RealElem {
        let (ctx, a, b) = RealElem::unified(&self, &rhs);
        RealElem::reduce(ctx, a.sub(&b))
    }
}

impl Mul for RealElem {
    type Output = RealElem;
    fn mul(self, rhs: RealElem) -> RealElem {
        let (ctx, a, b) = RealElem::unified(&self, &rhs);
        RealElem::reduce(ctx, a.mul(&b))
    }
}

impl Neg for RealElem {
    type Output = RealElem;
    fn neg(self) -> RealElem {
        RealElem {
            ctx: self.ctx,
            poly: self.poly.neg(),
        }
    }
}

impl num_traits::Zero for RealElem {
    fn zero() -> Self {
        RealElem::rational(BigRational::zero())
    }

    fn is_zero(&self) -> bool {
        match &self.ctx {
            None => self.poly.is_zero(),
            Some(c) => {
                if self.poly.is_zero() {
                    return true;
                }
                if self.poly.is_constant() {
                    return false;
                }
                // quick interval test
                let iv = self.poly.eval_interval(&c.current_interval(), 64);
                if !iv.contains_zero() {
                    return false;
                }
                c.vanishes_at_theta(&self.poly)
            }
        }
    }
}

impl num_traits::One for RealElem {
    fn one() -> Self {
        RealElem::rational(BigRational::from_integer(1.into()))
    }
}

impl ExactField for RealElem {
    fn invert(&self) -> Self {
        match &self.ctx {
            None => RealElem::rational(
                ExactField::invert(&self.poly.coeff(0)),
            ),
            Some(c) => {
                if self.poly.is_constant() {
                    let q = self.poly.coeff(0);
                    assert!(!q.is_zero(), "inverse of zero field element");
                    return RealElem {
                        ctx: self.ctx.clone(),
                        poly: QPoly::constant(q.recip()),
                    };
                }
                let mut ctx = c.clone();
                let mut poly = self.poly.clone();
                loop {
                    let (g, u, _v) = poly.xgcd(&ctx.modulus);
                    if g.degree() == 0 {
                        // u * poly ≡ g (mod F); g is monic 1 after normalization
                        return RealElem::reduce(Some(ctx), u);
                    }
                    // theta is not a root of g (the element is nonzero), so it
                    // is a root of F/g: prune the dead branch.
                    assert!(
                        !ctx.vanishes_at_theta(&g),
                        "inverse of zero field element"
                    );
                    let reduced = ctx.modulus.div_exact(&g);
                    ctx = ctx.pruned(reduced);
                    poly = poly.div_rem(&ctx.modulus).1;
                }
            }
        }
    }

    fn from_rat(q: &BigRational) -> Self {
        RealElem::rational(q.clone())
    }
}

impl OrderedExactField for RealElem {
    fn sign(&self) -> Ordering {
        match &self.ctx {
            None => {
                let q = self.poly.coeff(0);
                if q.is_zero() {
                    Ordering::Equal
                } else if q.is_positive() {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
            Some(c) => {
                if self.is_zero() {
                    return Ordering::Equal;
                }
                if self.poly.is_constant() {
                    let q = self.poly.coeff(0);
                    return if q.is_positive() { Ordering::Greater } else { Ordering::Less };
                }
                let mut bits = 32u32;
                loop {
                    let iv = self.poly.eval_interval(&c.theta_interval(bits), bits);
                    if iv.is_strictly_positive() {
                        return Ordering::Greater;
                    }
                    if iv.is_strictly_negative() {
                        return Ordering::Less;
                    }
                    bits = bits.saturating_mul(2);
                }
            }
        }
    }

    fn enclosure(&self, prec_bits: u32) -> RatInterval {
        self.enclosure_bits(prec_bits)
    }

    fn to_rational(&self) -> Option<BigRational> {
        if self.poly.is_zero() {
            return Some(BigRational::zero());
        }
        if self.poly.is_constant() {
            return Some(self.poly.coeff(0));
        }
        None
    }
}

/// Result of adjoining a real algebraic number to a field: the new context
/// plus the data to rebase old elements and to express the adjoined value.
pub struct FieldExtension {
    pub ctx: Option<Arc<RealFieldCtx>>,
    /// Image of the old generator in the new field (degree-0 when the old
    /// field was the rationals).
    theta_image: QPoly,
    /// The adjoined value as an element of the new field.
    pub adjoined: RealElem,
    old_lineage: Option<u64>,
}

impl FieldExtension {
    /// Identity extension (nothing adjoined).
    pub fn identity(ctx: Option<Arc<RealFieldCtx>>) -> Self {
        let adjoined = RealElem::zero();
        let theta_image = QPoly::x();
        let old_lineage = ctx.as_ref().map(|c| c.lineage);
        FieldExtension {
            ctx,
            theta_image,
            adjoined,
            old_lineage,
        }
    }

    /// Rebase an element of the old field into the new one.
    pub fn rebase(&self, e: &RealElem) -> RealElem {
        match (&e.ctx, &self.ctx) {
            (None, None) => e.clone(),
            (None, Some(c)) => RealElem::from_poly(c, e.poly.clone()),
            (Some(old), Some(c)) => {
                if Arc::ptr_eq(old, c) || old.lineage == c.lineage {
                    // same field (possibly pruned): representative unchanged
                    return RealElem::from_poly(c, e.poly.clone());
                }
                assert_eq!(
                    Some(old.lineage),
                    self.old_lineage,
                    "rebasing an element from a foreign field"
                );
                RealElem::from_poly(c, e.poly.compose(&self.theta_image))
            }
            (Some(_), None) => panic!("cannot rebase an algebraic element into the rationals"),
        }
    }
}

/// Adjoin a real algebraic value to the field, producing `Q(theta')` that
/// contains both; primitive element `theta' = alpha + c * theta`.
pub fn adjoin(
    ctx: &Option<Arc<RealFieldCtx>>,
    alpha: &AlgebraicValue,
) -> Result<FieldExtension, ExactAlgError> {
    if let Some(q) = alpha.rational_value() {
        let mut ext = FieldExtension::identity(ctx.clone());
        ext.adjoined = match ctx {
            None => RealElem::rational(q),
            Some(c) => RealElem::from_poly(c, QPoly::constant(q)),
        };
        return Ok(ext);
    }
    let a_poly = alpha.defining_polynomial().to_qpoly();
    match ctx {
        None => {
            let mut a = alpha.clone();
            a.refine_to(32)?;
            let iv = match a.region() {
                super::algebraic::Region::Real(iv) => iv.clone(),
                _ => {
                    return Err(ExactAlgError::Precondition(
                        "adjoining a non-real value to a real field".into(),
                    ))
                }
            };
            let new_ctx = RealFieldCtx::new(alpha.defining_polynomial(), iv)?;
            let adjoined = RealElem::theta(&new_ctx);
            Ok(FieldExtension {
                ctx: Some(new_ctx),
                theta_image: QPoly::x(),
                adjoined,
                old_lineage: None,
            })
        }
        Some(c) => {
            let f_poly = c.modulus.clone();
            for mult in 1i64..=24 {
                let cm = BigRational::from_integer(mult.into());
                // H(t) = Res_x(F(x), A(t - c x)): roots alpha_i + c theta_j.
                let scaled = f_poly.scale_roots(&cm); // roots c * theta_j
                let h = root_sum_poly(&a_poly, &scaled);
                let h_sf = h.primitive_integer().squarefree_part();
                let hq = h_sf.to_qpoly();
                let chain = hq.sturm_chain();

                // Isolate theta' = alpha + c*theta among the roots of H.
                let mut bits = 32u32;
                let mut iso: Option<RatInterval> = None;
                let mut aa = alpha.clone();
                while bits <= 1 << 12 {
                    aa.refine_to(bits)?;
                    let ia = match aa.region() {
                        super::algebraic::Region::Real(iv) => iv.clone(),
                        _ => {
                            return Err(ExactAlgError::Precondition(
                                "adjoining a non-real value to a real field".into(),
                            ))
                        }
                    };
                    let it = c.theta_interval(bits).scale(&cm);
                    let cand = ia.add(&it);
                    let cnt = hq.count_roots_in(&chain, &cand.lo, &cand.hi)
                        + usize::from(hq.eval(&cand.lo).is_zero());
                    if cnt == 1 {
                        iso = Some(cand);
                        break;
                    }
                    bits = bits.saturating_mul(2);
                }
                let Some(iso) = iso else {
                    continue;
                };
                let new_ctx = RealFieldCtx::new(&h_sf, iso)?;
                let theta_prime = RealElem::theta(&new_ctx);

                // Recover old theta: gcd( F(x), A(theta' - c x) ) over the new
                // field must be linear; otherwise try another multiplier.
                let f_in_new: Poly<RealElem> = lift_const_poly(&f_poly, &new_ctx);
                let a_shift = compose_shift_scale(&a_poly, &theta_prime, &cm, &new_ctx);
                let g = f_in_new.gcd(&a_shift);
                if g.degree() != 1 {
                    continue;
                }
                // g = x - theta  (monic)
                let theta_in_new = -g.coeff(0);
                let alpha_in_new = theta_prime.clone()
                    - theta_in_new.clone() * RealElem::from_rat(&cm);
                return Ok(FieldExtension {
                    ctx: Some(new_ctx),
                    theta_image: theta_in_new.poly.clone(),
                    adjoined: alpha_in_new,
                    old_lineage: Some(c.lineage),
                });
            }
            Err(ExactAlgError::RefinementFailure {
                detail: "no separating primitive element found".into(),
            })
        }
    }
}

/// Lift a rational polynomial to one with coefficients in the field.
pub fn lift_const_poly(p: &QPoly, ctx: &Arc<RealFieldCtx>) -> Poly<RealElem> {
    Poly::from_coeffs(
        p.coeffs()
            .iter()
            .map(|c| RealElem::from_poly(ctx, QPoly::constant(c.clone())))
            .collect(),
    )
}

/// `A(t' - c x)` as a polynomial in `x` over the new field, for `t'` a field
/// element.
fn compose_shift_scale(
    a: &QPoly,
    t_prime: &RealElem,
    c: &BigRational,
    ctx: &Arc<RealFieldCtx>,
) -> Poly<RealElem> {
    // substitute x -> t' - c x into A
    let lin = Poly::from_coeffs(vec![
        t_prime.clone(),
        RealElem::from_poly(ctx, QPoly::constant(-c.clone())),
    ]);
    let mut acc: Poly<RealElem> = Poly::zero();
    for k in (0..=a.degree()).rev() {
        acc = acc.mul(&lin).add(&Poly::constant(RealElem::from_poly(
            ctx,
            QPoly::constant(a.coeff(k)),
        )));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    #[allow(unused_imports)]
    use num_traits::{One, Zero};
    #[allow(unused_imports)]
    use crate::exactalg::field::ExactField as _;
    use crate::{rat, ratio};

    fn phi_field() -> Arc<RealFieldCtx> {
        RealFieldCtx::new(
            &IntPolynomial::from_i64_slice(&[-1, -1, 1]),
            RatInterval::new(rat(1), rat(2)),
        )
        .unwrap()
    }

    #[test]
    fn basic_arithmetic_in_q_phi() {
        let f = phi_field();
        let phi = RealElem::theta(&f);
        // phi^2 = phi + 1
        let sq = phi.clone() * phi.clone();
        let expect = phi.clone() + RealElem::one();
        assert_eq!(sq, expect);
        // sign of phi - 8/5 > 0
        let d = phi.clone() - RealElem::rational(ratio(8, 5));
        assert_eq!(d.sign(), Ordering::Greater);
        let d2 = phi.clone() - RealElem::rational(ratio(17, 10));
        assert_eq!(d2.sign(), Ordering::Less);
    }

    #[test]
    fn inverse_in_q_phi() {
        let f = phi_field();
        let phi = RealElem::theta(&f);
        let inv = phi.invert();
        assert_eq!(phi.clone() * inv.clone(), RealElem::one());
        // 1/phi = phi - 1
        assert_eq!(inv, phi - RealElem::one());
    }

    #[test]
    fn zero_test_of_vanishing_combination() {
        let f = phi_field();
        let phi = RealElem::theta(&f);
        // phi^2 - phi - 1 = 0 exactly
        let z = phi.clone() * phi.clone() - phi.clone() - RealElem::one();
        assert!(z.is_zero());
        assert_eq!(z.sign(), Ordering::Equal);
    }

    #[test]
    fn pruning_on_reducible_modulus() {
        // modulus (x^2 - 2)(x^2 - 3), designated root sqrt(2)
        let m = IntPolynomial::from_i64_slice(&[-2, 0, 1])
            .mul(&IntPolynomial::from_i64_slice(&[-3, 0, 1]));
        let ctx = RealFieldCtx::new(&m, RatInterval::new(ratio(13, 10), ratio(15, 10))).unwrap();
        let t = RealElem::theta(&ctx);
        // t^2 - 2 vanishes at the designated root even though it is a zero
        // divisor mod the full modulus
        let z = t.clone() * t.clone() - RealElem::rational(rat(2));
        assert!(z.is_zero());
        // inverting t^2 - 3 (nonzero at sqrt2) forces pruning
        let nz = t.clone() * t.clone() - RealElem::rational(rat(3));
        let inv = nz.clone().invert();
        assert_eq!(nz * inv, RealElem::one());
    }

    #[test]
    fn enclosure_tracks_value() {
        let f = phi_field();
        let phi = RealElem::theta(&f);
        let e = (phi.clone() * phi.clone()).enclosure_bits(40);
        // phi^2 = 2.618033...
        let v = ratio(26180339887, 10000000000);
        let eps = ratio(1, 1_000_000_000);
        assert!((e.midpoint() - v).abs() < eps);
        assert!(e.narrower_than(40));
    }

    #[test]
    fn adjoin_to_rationals_and_extend() {
        // start with Q, adjoin sqrt2, then adjoin sqrt3; check arithmetic
        let s2 = AlgebraicValue::new_real(
            IntPolynomial::from_i64_slice(&[-2, 0, 1]),
            RatInterval::new(rat(1), rat(2)),
        )
        .unwrap();
        let ext1 = adjoin(&None, &s2).unwrap();
        let sqrt2 = ext1.adjoined.clone();
        assert_eq!((sqrt2.clone() * sqrt2.clone()).to_rational(), Some(rat(2)));

        let s3 = AlgebraicValue::new_real(
            IntPolynomial::from_i64_slice(&[-3, 0, 1]),
            RatInterval::new(ratio(17, 10), ratio(18, 10)),
        )
        .unwrap();
        let ext2 = adjoin(&ext1.ctx, &s3).unwrap();
        let sqrt3 = ext2.adjoined.clone();
        let sqrt2_rebased = ext2.rebase(&sqrt2);
        assert_eq!(
            (sqrt2_rebased.clone() * sqrt2_rebased.clone()).to_rational(),
            Some(rat(2))
        );
        assert_eq!((sqrt3.clone() * sqrt3.clone()).to_rational(), Some(rat(3)));
        let prod = sqrt2_rebased * sqrt3;
        assert_eq!((prod.clone() * prod).to_rational(), Some(rat(6)));
    }

    #[test]
    fn defining_polynomial_roundtrip() {
        let f = phi_field();
        let phi = RealElem::theta(&f);
        let v = (phi.clone() * phi.clone()).to_algebraic().unwrap();
        // phi^2 = (3+sqrt5)/2, minimal polynomial x^2 - 3x + 1
        let mp = IntPolynomial::from_i64_slice(&[1, -3, 1]);
        assert!(mp
            .to_qpoly()
            .monic()
            .divides(&v.defining_polynomial().to_qpoly().monic()));
    }
}
