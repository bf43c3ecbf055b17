//! Real and complex algebraic numbers as (square-free integer polynomial,
//! isolating region) pairs with on-demand refinement.
//!
//! Representation invariants: the region contains exactly one root of the
//! defining polynomial, and refinement shrinks the region without ever losing
//! the root. Sign tests run by interval refinement; ties are broken exactly
//! through gcd computations on the defining polynomials, so every comparison
//! terminates with a proof.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{pow2_inv, RatInterval};
use super::poly::{root_product_poly, root_sum_poly, IntPolynomial, QPoly};
use super::roots::{certified_roots, RootDisc, SolveOptions};
use super::ExactAlgError;

/// Axis-aligned rectangle with exact rational corners.
#[derive(Debug, Clone, PartialEq)]
pub struct RatRect {
    pub re: RatInterval,
    pub im: RatInterval,
}

impl RatRect {
    pub fn contains_disc(&self, d: &RootDisc) -> bool {
        self.re.contains_interval(&d.re_interval()) && self.im.contains_interval(&d.im_interval())
    }

    pub fn disjoint_from_disc(&self, d: &RootDisc) -> bool {
        self.re.intersect(&d.re_interval()).is_none()
            || self.im.intersect(&d.im_interval()).is_none()
    }
}

/// Isolating region of an algebraic number.
#[derive(Debug, Clone, PartialEq)]
pub enum Region {
    Real(RatInterval),
    Complex(RatRect),
}

/// Shared defining polynomial with a lazily built, cached Sturm chain.
#[derive(Debug)]
pub struct DefiningPoly {
    int: IntPolynomial,
    q: QPoly,
    chain: std::sync::OnceLock<Vec<QPoly>>,
}

impl DefiningPoly {
    /// Wrap an already square-free integer polynomial.
    pub fn new_squarefree(int: IntPolynomial) -> std::sync::Arc<Self> {
        let q = int.to_qpoly();
        std::sync::Arc::new(DefiningPoly {
            int,
            q,
            chain: std::sync::OnceLock::new(),
        })
    }

    pub fn int(&self) -> &IntPolynomial {
        &self.int
    }

    pub fn q(&self) -> &QPoly {
        &self.q
    }

    pub fn chain(&self) -> &Vec<QPoly> {
        self.chain.get_or_init(|| self.q.sturm_chain())
    }

    /// Distinct real roots in the closed interval.
    pub fn count_roots_closed(&self, iv: &RatInterval) -> usize {
        self.q.count_roots_in(self.chain(), &iv.lo, &iv.hi)
            + usize::from(self.q.eval(&iv.lo).is_zero())
    }
}

/// A real or complex algebraic number: square-free integer defining
/// polynomial plus a certified isolating region.
#[derive(Debug, Clone)]
pub struct AlgebraicValue {
    def: std::sync::Arc<DefiningPoly>,
    region: Region,
    precision_bits: u32,
}

impl AlgebraicValue {
    pub fn from_rational(q: &BigRational) -> Self {
        let poly = IntPolynomial::from_coeffs(vec![-q.numer().clone(), q.denom().clone()]);
        AlgebraicValue {
            def: DefiningPoly::new_squarefree(poly),
            region: Region::Real(RatInterval::point(q.clone())),
            precision_bits: u32::MAX,
        }
    }

    pub fn one() -> Self {
        Self::from_rational(&BigRational::one())
    }

    /// Designate the unique real root of `poly` inside `interval`.
    /// Validates isolation by Sturm counting.
    pub fn new_real(poly: IntPolynomial, interval: RatInterval) -> Result<Self, ExactAlgError> {
        Self::new_real_shared(DefiningPoly::new_squarefree(poly.squarefree_part()), interval)
    }

    /// Designation against an already square-free shared polynomial; the
    /// cheap path used when many values share one pool.
    pub fn new_real_shared(
        def: std::sync::Arc<DefiningPoly>,
        interval: RatInterval,
    ) -> Result<Self, ExactAlgError> {
        let exact_hit = def.q().eval(&interval.lo).is_zero();
        let count = def.count_roots_closed(&interval);
        if count != 1 {
            return Err(ExactAlgError::Precondition(format!(
                "interval does not isolate a single real root (contains {count})"
            )));
        }
        let interval = if exact_hit {
            RatInterval::point(interval.lo)
        } else {
            interval
        };
        Ok(AlgebraicValue {
            def,
            region: Region::Real(interval),
            precision_bits: 0,
        })
    }

    /// Designate the unique root of `poly` inside `rect`.
    pub fn new_complex(poly: IntPolynomial, rect: RatRect) -> Result<Self, ExactAlgError> {
        let sf = poly.squarefree_part();
        let count = count_roots_in_rect(&sf.to_qpoly(), &rect)?;
        if count != 1 {
            return Err(ExactAlgError::Precondition(format!(
                "rectangle does not isolate a single root (contains {count})"
            )));
        }
        Ok(AlgebraicValue {
            def: DefiningPoly::new_squarefree(sf),
            region: Region::Complex(rect),
            precision_bits: 0,
        })
    }

    pub fn defining_polynomial(&self) -> &IntPolynomial {
        self.def.int()
    }

    pub fn defining(&self) -> &std::sync::Arc<DefiningPoly> {
        &self.def
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn precision_bits(&self) -> u32 {
        self.precision_bits
    }

    pub fn is_real(&self) -> bool {
        matches!(self.region, Region::Real(_))
    }

    /// Exact rational value when the designated root is rational.
    pub fn rational_value(&self) -> Option<BigRational> {
        match &self.region {
            Region::Real(iv) => {
                if iv.is_point() {
                    return Some(iv.lo.clone());
                }
                // rational root theorem on the defining polynomial; the
                // divisor scan is capped, so very large rational roots are
                // simply not detected (callers only rely on small ones)
                let lead = self.def.int().leading();
                let ct = self.def.int().constant_term();
                if ct.is_zero() {
                    // x divides the square-free polynomial; zero is a root,
                    // and the designated root is zero iff zero is inside the
                    // isolating region
                    if iv.contains(&BigRational::zero()) {
                        return Some(BigRational::zero());
                    }
                    return None;
                }
                for p in divisors_abs(&ct) {
                    for q in divisors_abs(&lead) {
                        for sign in [1i64, -1] {
                            let cand = BigRational::new(&p * BigInt::from(sign), q.clone());
                            if iv.contains(&cand)
                                && self.def.int().eval_rational(&cand).is_zero()
                            {
                                return Some(cand);
                            }
                        }
                    }
                }
                None
            }
            Region::Complex(_) => None,
        }
    }

    /// Refine the region until its width is at most `2^-bits`; region halving
    /// never loses the designated root.
    pub fn refine_to(&mut self, bits: u32) -> Result<(), ExactAlgError> {
        if self.precision_bits >= bits {
            return Ok(());
        }
        match &self.region {
            Region::Real(iv) => {
                if iv.is_point() {
                    self.precision_bits = u32::MAX;
                    return Ok(());
                }
                let refined = self.def.q().refine_root(self.def.chain(), iv, bits);
                self.region = Region::Real(refined);
                self.precision_bits = bits;
                Ok(())
            }
            Region::Complex(rect) => {
                let q = self.def.q().clone();
                let mut radius_bits = bits + 4;
                for _ in 0..8 {
                    let discs = certified_roots(
                        &q,
                        &SolveOptions {
                            radius_bits,
                            sep_factor: 1,
                            max_rounds: 30,
                        },
                    )?;
                    let mut inside = Vec::new();
                    let mut ambiguous = false;
                    for d in &discs {
                        if rect.contains_disc(d) {
                            inside.push(d.clone());
                        } else if !rect.disjoint_from_disc(d) {
                            ambiguous = true;
                        }
                    }
                    if !ambiguous && inside.len() == 1 {
                        let d = &inside[0];
                        let nrect = RatRect {
                            re: d.re_interval().intersect(&rect.re).unwrap_or(d.re_interval()),
                            im: d.im_interval().intersect(&rect.im).unwrap_or(d.im_interval()),
                        };
                        self.region = Region::Complex(nrect);
                        self.precision_bits = bits;
                        return Ok(());
                    }
                    radius_bits += 16;
                }
                Err(ExactAlgError::RefinementFailure {
                    detail: "complex region refinement stalled".into(),
                })
            }
        }
    }

    /// Certified real interval for a real algebraic value.
    pub fn real_interval(&mut self, bits: u32) -> Result<RatInterval, ExactAlgError> {
        self.refine_to(bits)?;
        match &self.region {
            Region::Real(iv) => Ok(iv.clone()),
            Region::Complex(_) => Err(ExactAlgError::Precondition(
                "real interval of a complex algebraic value".into(),
            )),
        }
    }

    /// Exact sign of a real algebraic value.
    pub fn sign(&self) -> Result<Ordering, ExactAlgError> {
        let Region::Real(iv) = &self.region else {
            return Err(ExactAlgError::Precondition(
                "sign of a complex algebraic value".into(),
            ));
        };
        if iv.is_strictly_positive() {
            return Ok(Ordering::Greater);
        }
        if iv.is_strictly_negative() {
            return Ok(Ordering::Less);
        }
        // zero in the interval: the designated root is 0 iff x | poly and the
        // interval isolates that root.
        let mut me = self.clone();
        if me.def.int().constant_term().is_zero() {
            // x divides the square-free polynomial, so 0 is a root; the
            // isolating interval contains it, hence the value is 0.
            return Ok(Ordering::Equal);
        }
        // Nonzero value: refine until the sign shows.
        let mut bits = me.precision_bits.saturating_add(8).max(16);
        loop {
            me.refine_to(bits)?;
            let Region::Real(iv) = &me.region else { unreachable!() };
            if iv.is_strictly_positive() {
                return Ok(Ordering::Greater);
            }
            if iv.is_strictly_negative() {
                return Ok(Ordering::Less);
            }
            if iv.is_point() {
                return Ok(iv.lo.sign_ordering());
            }
            bits = bits.saturating_add(32);
        }
    }

    /// Exact equality of two algebraic values (same designated root).
    ///
    /// Sound and complete: any common root of the two defining polynomials
    /// found inside both isolating regions is simultaneously both designated
    /// roots; if the values differ, refinement separates the regions.
    pub fn eq_value(&self, other: &AlgebraicValue) -> Result<bool, ExactAlgError> {
        match (&self.region, &other.region) {
            (Region::Real(_), Region::Real(_)) => {
                let shared = std::sync::Arc::ptr_eq(&self.def, &other.def);
                let g = if shared {
                    self.def.q().clone()
                } else {
                    self.def.q().gcd(other.def.q())
                };
                if g.degree() == 0 {
                    return Ok(false);
                }
                let chain = if shared {
                    self.def.chain().clone()
                } else {
                    g.sturm_chain()
                };
                let mut a = self.clone();
                let mut b = other.clone();
                let mut bits = 16u32;
                loop {
                    let (Region::Real(ia), Region::Real(ib)) = (&a.region, &b.region) else {
                        unreachable!()
                    };
                    match ia.intersect(ib) {
                        None => return Ok(false),
                        Some(common) => {
                            let cnt = g.count_roots_in(&chain, &common.lo, &common.hi)
                                + usize::from(g.eval(&common.lo).is_zero());
                            if cnt >= 1 {
                                return Ok(true);
                            }
                            a.refine_to(bits)?;
                            b.refine_to(bits)?;
                            bits = bits.saturating_add(32);
                            if bits > 1 << 14 {
                                return Err(ExactAlgError::RefinementFailure {
                                    detail: "equality test stalled".into(),
                                });
                            }
                        }
                    }
                }
            }
            (Region::Complex(_), Region::Complex(_)) => {
                // Equality through the shared factor and region overlap.
                let g = if std::sync::Arc::ptr_eq(&self.def, &other.def) {
                    self.def.q().clone()
                } else {
                    self.def.q().gcd(other.def.q())
                };
                if g.degree() == 0 {
                    return Ok(false);
                }
                let mut a = self.clone();
                let mut b = other.clone();
                let mut bits = 16u32;
                loop {
                    let (Region::Complex(ra), Region::Complex(rb)) = (&a.region, &b.region) else {
                        unreachable!()
                    };
                    let re = ra.re.intersect(&rb.re);
                    let im = ra.im.intersect(&rb.im);
                    match (re, im) {
                        (Some(re), Some(im)) => {
                            let rect = RatRect { re, im };
                            match count_roots_in_rect(&g, &rect) {
                                Ok(0) => {
                                    a.refine_to(bits)?;
                                    b.refine_to(bits)?;
                                    bits = bits.saturating_add(32);
                                    if bits > 1 << 14 {
                                        return Err(ExactAlgError::RefinementFailure {
                                            detail: "equality test stalled".into(),
                                        });
                                    }
                                }
                                Ok(_) => return Ok(true),
                                Err(_) => {
                                    a.refine_to(bits)?;
                                    b.refine_to(bits)?;
                                    bits = bits.saturating_add(32);
                                    if bits > 1 << 14 {
                                        return Err(ExactAlgError::RefinementFailure {
                                            detail: "equality test stalled".into(),
                                        });
                                    }
                                }
                            }
                        }
                        _ => return Ok(false),
                    }
                }
            }
            _ => Ok(false),
        }
    }

    /// Exact comparison of real algebraic values.
    pub fn cmp_real(&self, other: &AlgebraicValue) -> Result<Ordering, ExactAlgError> {
        if self.eq_value(other)? {
            return Ok(Ordering::Equal);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        let mut bits = 16u32;
        loop {
            let ia = a.real_interval(bits)?;
            let ib = b.real_interval(bits)?;
            if ia.hi < ib.lo {
                return Ok(Ordering::Less);
            }
            if ib.hi < ia.lo {
                return Ok(Ordering::Greater);
            }
            bits = bits.saturating_add(32);
        }
    }

    /// Negation: reflect the defining polynomial.
    pub fn neg(&self) -> AlgebraicValue {
        let q = self.def.q().compose_neg_x().primitive_integer();
        let region = match &self.region {
            Region::Real(iv) => Region::Real(iv.neg()),
            Region::Complex(r) => Region::Complex(RatRect {
                re: r.re.neg(),
                im: r.im.clone(),
            }),
        };
        AlgebraicValue {
            def: DefiningPoly::new_squarefree(q),
            region,
            precision_bits: self.precision_bits,
        }
    }

    /// Absolute value of a real algebraic number.
    pub fn abs_real(&self) -> Result<AlgebraicValue, ExactAlgError> {
        match self.sign()? {
            Ordering::Less => Ok(self.neg()),
            _ => Ok(self.clone()),
        }
    }

    /// Reciprocal of a nonzero algebraic value.
    pub fn recip(&self) -> Result<AlgebraicValue, ExactAlgError> {
        match &self.region {
            Region::Real(_) => {
                if let Some(q) = self.rational_value() {
                    if q.is_zero() {
                        return Err(ExactAlgError::Precondition("reciprocal of zero".into()));
                    }
                    return Ok(AlgebraicValue::from_rational(&q.recip()));
                }
                if self.sign()? == Ordering::Equal {
                    return Err(ExactAlgError::Precondition("reciprocal of zero".into()));
                }
                let poly = self.def.int().reverse().squarefree_part();
                let mut me = self.clone();
                let mut bits = 16;
                loop {
                    let iv = me.real_interval(bits)?;
                    if !iv.contains_zero() {
                        let inv = RatInterval::new(iv.hi.clone().recip(), iv.lo.clone().recip());
                        if let Ok(v) = AlgebraicValue::new_real(poly.clone(), inv) {
                            return Ok(v);
                        }
                    }
                    bits += 32;
                    if bits > 1 << 14 {
                        return Err(ExactAlgError::RefinementFailure {
                            detail: "reciprocal isolation stalled".into(),
                        });
                    }
                }
            }
            Region::Complex(_) => Err(ExactAlgError::Precondition(
                "reciprocal implemented for real algebraic values only".into(),
            )),
        }
    }

    /// Exact product of two real algebraic values.
    pub fn mul_real(&self, other: &AlgebraicValue) -> Result<AlgebraicValue, ExactAlgError> {
        if let (Some(a), Some(b)) = (self.rational_value(), other.rational_value()) {
            return Ok(AlgebraicValue::from_rational(&(a * b)));
        }
        let pp = root_product_poly(self.def.q(), other.def.q())
            .primitive_integer()
            .squarefree_part();
        designate_real_combination(pp, self, other, |ia, ib| ia.mul(ib))
    }

    /// Exact sum of two real algebraic values.
    pub fn add_real(&self, other: &AlgebraicValue) -> Result<AlgebraicValue, ExactAlgError> {
        if let (Some(a), Some(b)) = (self.rational_value(), other.rational_value()) {
            return Ok(AlgebraicValue::from_rational(&(a + b)));
        }
        let ps = root_sum_poly(self.def.q(), other.def.q())
            .primitive_integer()
            .squarefree_part();
        designate_real_combination(ps, self, other, |ia, ib| ia.add(ib))
    }

    /// Certified enclosure of `ln` of a positive real algebraic value.
    pub fn ln_interval(&self, bits: u32) -> Result<RatInterval, ExactAlgError> {
        if self.sign()? != Ordering::Greater {
            return Err(ExactAlgError::Precondition("log of a non-positive value".into()));
        }
        if let Some(q) = self.rational_value() {
            if q == BigRational::one() {
                return Ok(RatInterval::point(BigRational::zero()));
            }
            return Ok(ln_bounds(&q, bits));
        }
        let mut me = self.clone();
        let mut prec = bits + 8;
        loop {
            let iv = me.real_interval(prec)?;
            if iv.lo.is_positive() {
                let lo = ln_bounds(&iv.lo, bits + 4).lo;
                let hi = ln_bounds(&iv.hi, bits + 4).hi;
                let out = RatInterval::new(lo, hi);
                if out.narrower_than(bits) {
                    return Ok(out);
                }
            }
            prec += 32;
            if prec > (1 << 16) {
                return Err(ExactAlgError::RefinementFailure {
                    detail: "log enclosure refinement stalled".into(),
                });
            }
        }
    }

}

fn designate_real_combination(
    poly: IntPolynomial,
    a: &AlgebraicValue,
    b: &AlgebraicValue,
    combine: impl Fn(&RatInterval, &RatInterval) -> RatInterval,
) -> Result<AlgebraicValue, ExactAlgError> {
    let q = poly.to_qpoly();
    let chain = q.sturm_chain();
    let mut aa = a.clone();
    let mut bb = b.clone();
    let mut bits = 24u32;
    loop {
        let ia = aa.real_interval(bits)?;
        let ib = bb.real_interval(bits)?;
        let iv = combine(&ia, &ib);
        let cnt = q.count_roots_in(&chain, &iv.lo, &iv.hi) + usize::from(q.eval(&iv.lo).is_zero());
        if cnt == 1 {
            return AlgebraicValue::new_real(poly, iv);
        }
        bits = bits.saturating_add(32);
        if bits > 1 << 14 {
            return Err(ExactAlgError::RefinementFailure {
                detail: "could not isolate combined algebraic value".into(),
            });
        }
    }
}

fn divisors_abs(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![];
    }
    let mut out = Vec::new();
    let mut d = BigInt::one();
    // only small divisors matter at desk scale; cap the scan
    let cap = BigInt::from(4096i64);
    while &d * &d <= n && d <= cap {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            out.push(&n / &d);
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    out
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigRational {
    fn sign_ordering(&self) -> Ordering {
        if self.is_zero() {
            Ordering::Equal
        } else if self.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

/// Count roots of a square-free rational polynomial inside a closed
/// rectangle. Reports an error if a root lies exactly on the boundary (the
/// count would be ambiguous for the isolation contracts built on top).
pub fn count_roots_in_rect(sf: &QPoly, rect: &RatRect) -> Result<usize, ExactAlgError> {
    let mut radius_bits = 32u32;
    for _ in 0..6 {
        let discs = certified_roots(
            sf,
            &SolveOptions {
                radius_bits,
                sep_factor: 1,
                max_rounds: 30,
            },
        )?;
        let mut count = 0usize;
        let mut ambiguous = false;
        for d in &discs {
            if rect.contains_disc(d) {
                count += 1;
            } else if !rect.disjoint_from_disc(d) {
                ambiguous = true;
                break;
            }
        }
        if !ambiguous {
            return Ok(count);
        }
        if boundary_has_root(sf, rect)? {
            return Err(ExactAlgError::Precondition(
                "a root lies exactly on the rectangle boundary".into(),
            ));
        }
        radius_bits = radius_bits.saturating_mul(2);
    }
    Err(ExactAlgError::RefinementFailure {
        detail: "rectangle root counting stalled".into(),
    })
}

/// Exact test: does `sf` vanish anywhere on the boundary of the rectangle?
fn boundary_has_root(sf: &QPoly, rect: &RatRect) -> Result<bool, ExactAlgError> {
    for a in [&rect.re.lo, &rect.re.hi] {
        if line_has_root(sf, a, &rect.im, true) {
            return Ok(true);
        }
    }
    for b in [&rect.im.lo, &rect.im.hi] {
        if line_has_root(sf, b, &rect.re, false) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Roots on the vertical line `re = a` (or horizontal `im = a`) within the
/// given coordinate range, decided exactly via gcd + Sturm.
fn line_has_root(sf: &QPoly, a: &BigRational, range: &RatInterval, vertical: bool) -> bool {
    // expand p(a + i y) (vertical) or p(x + i a) (horizontal) into real and
    // imaginary polynomials of the free variable.
    let (re_p, im_p) = split_complex_eval(sf, a, vertical);
    let g = re_p.gcd(&im_p);
    if g.is_zero() {
        // both identically zero cannot happen for nonzero sf
        return false;
    }
    if g.degree() == 0 {
        return false;
    }
    let gsf = g.squarefree_part();
    let chain = gsf.sturm_chain();
    let hit_lo = gsf.eval(&range.lo).is_zero();
    gsf.count_roots_in(&chain, &range.lo, &range.hi) + usize::from(hit_lo) > 0
}

/// Real/imaginary parts of `p(a + i t)` (vertical) or `p(t + i a)`
/// (horizontal) as polynomials in `t`.
fn split_complex_eval(p: &QPoly, a: &BigRational, vertical: bool) -> (QPoly, QPoly) {
    // Horner with complex polynomial accumulator (re(t), im(t)).
    let mut re = QPoly::zero();
    let mut im = QPoly::zero();
    let t = QPoly::x();
    for c in p.coeffs().iter().rev() {
        // multiply (re + i im) by (a + i t) or (t + i a)
        let (nre, nim) = if vertical {
            (
                re.scale(a).sub(&im.mul(&t)),
                re.mul(&t).add(&im.scale(a)),
            )
        } else {
            (
                re.mul(&t).sub(&im.scale(a)),
                re.scale(a).add(&im.mul(&t)),
            )
        };
        re = nre.add(&QPoly::constant(c.clone()));
        im = nim;
    }
    (re, im)
}

/// Certified natural logarithm bounds for a positive rational, via the
/// atanh series with exact tail estimates.
pub fn ln_bounds(q: &BigRational, bits: u32) -> RatInterval {
    assert!(q.is_positive(), "log of a non-positive rational");
    if *q == BigRational::one() {
        return RatInterval::point(BigRational::zero());
    }
    if *q < BigRational::one() {
        return ln_bounds(&q.recip(), bits).neg();
    }
    // write q = 2^k * x with x in [1, 2)
    let mut k = 0i64;
    let two = BigRational::from_integer(BigInt::from(2));
    let mut x = q.clone();
    while x >= two {
        x /= &two;
        k += 1;
    }
    let ln_x = atanh_ln(&x, bits + 4);
    if k == 0 {
        return ln_x;
    }
    let ln2 = atanh_ln(&two, bits + 8);
    let kq = BigRational::from_integer(BigInt::from(k));
    RatInterval::new(&ln_x.lo + &ln2.lo * &kq, &ln_x.hi + &ln2.hi * &kq)
}

/// `ln x` for `x in [1, 2]` via `2 atanh((x-1)/(x+1))`.
fn atanh_ln(x: &BigRational, bits: u32) -> RatInterval {
    let one = BigRational::one();
    if *x == one {
        return RatInterval::point(BigRational::zero());
    }
    let t = (x - &one) / (x + &one);
    let t2 = &t * &t;
    let eps = pow2_inv(bits);
    let mut term = t.clone();
    let mut sum = BigRational::zero();
    let mut k = 0u32;
    loop {
        sum += &term / BigRational::from_integer(BigInt::from(2 * k as i64 + 1));
        term *= &t2;
        k += 1;
        // tail bound: sum_{j>=k} t^{2j+1}/(2j+1) <= t^{2k+1} / ((2k+1)(1-t^2))
        let tail = &term
            / (BigRational::from_integer(BigInt::from(2 * k as i64 + 1))
                * (BigRational::one() - &t2));
        if tail < eps || k > 4096 {
            let two = BigRational::from_integer(BigInt::from(2));
            let lo = &two * &sum;
            let hi = &two * (&sum + &tail);
            return RatInterval::new(lo, hi);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    fn phi() -> AlgebraicValue {
        AlgebraicValue::new_real(
            IntPolynomial::from_i64_slice(&[-1, -1, 1]),
            RatInterval::new(rat(1), rat(2)),
        )
        .unwrap()
    }

    #[test]
    fn isolation_validation() {
        // both roots of x^2 - x - 1 lie in [-2, 2]: not isolating
        assert!(AlgebraicValue::new_real(
            IntPolynomial::from_i64_slice(&[-1, -1, 1]),
            RatInterval::new(rat(-2), rat(2)),
        )
        .is_err());
        assert!(phi().sign().unwrap() == Ordering::Greater);
    }

    #[test]
    fn refinement_narrows_and_keeps_root() {
        let mut v = phi();
        v.refine_to(50).unwrap();
        let iv = v.real_interval(50).unwrap();
        let lo = ratio(16180339887498948, 10000000000000000);
        let hi = ratio(16180339887498950, 10000000000000000);
        assert!(iv.lo <= hi && lo <= iv.hi, "phi enclosure drifted: {iv:?}");
        assert!(iv.narrower_than(50));
    }

    #[test]
    fn rational_detection() {
        let v = AlgebraicValue::new_real(
            IntPolynomial::from_i64_slice(&[-6, 1, 1]), // (x-2)(x+3)
            RatInterval::new(rat(0), rat(5)),
        )
        .unwrap();
        assert_eq!(v.rational_value(), Some(rat(2)));
        assert!(phi().rational_value().is_none());
    }

    #[test]
    fn equality_and_order() {
        let a = phi();
        let b = phi();
        assert!(a.eq_value(&b).unwrap());
        let c = AlgebraicValue::from_rational(&ratio(8, 5));
        assert_eq!(a.cmp_real(&c).unwrap(), Ordering::Greater);
        let d = AlgebraicValue::from_rational(&ratio(17, 10));
        assert_eq!(a.cmp_real(&d).unwrap(), Ordering::Less);
    }

    #[test]
    fn mul_and_recip() {
        let a = phi();
        let inv = a.recip().unwrap();
        let prod = a.mul_real(&inv).unwrap();
        assert_eq!(prod.rational_value(), Some(rat(1)));
        // phi^2 = phi + 1
        let sq = a.mul_real(&a).unwrap();
        let shifted = a.add_real(&AlgebraicValue::from_rational(&rat(1))).unwrap();
        assert!(sq.eq_value(&shifted).unwrap());
    }

    #[test]
    fn ln_bounds_of_two() {
        let iv = ln_bounds(&rat(2), 60);
        // ln 2 = 0.693147180559945...
        let truth = ratio(693147180559945, 1000000000000000);
        let eps = ratio(1, 1_000_000_000_000);
        assert!((iv.midpoint() - &truth).abs() < eps);
        assert!(iv.narrower_than(55));
        // ln(1/2) = -ln 2
        let neg = ln_bounds(&ratio(1, 2), 60);
        assert!((neg.midpoint() + truth).abs() < eps);
    }

    #[test]
    fn ln_of_phi() {
        let v = phi();
        let iv = v.ln_interval(50).unwrap();
        // log phi = 0.481211825059603...
        let truth = ratio(481211825059603, 1000000000000000);
        let eps = ratio(1, 1_000_000_000_000);
        assert!((iv.midpoint() - truth).abs() < eps, "{iv:?}");
    }

    #[test]
    fn complex_value_isolation() {
        // i as a root of x^2 + 1
        let rect = RatRect {
            re: RatInterval::new(ratio(-1, 2), ratio(1, 2)),
            im: RatInterval::new(ratio(1, 2), rat(2)),
        };
        let v = AlgebraicValue::new_complex(IntPolynomial::from_i64_slice(&[1, 0, 1]), rect)
            .unwrap();
        assert!(!v.is_real());
        let mut v = v;
        v.refine_to(30).unwrap();
        let Region::Complex(r) = v.region() else { panic!() };
        assert!(r.re.contains(&rat(0)));
        assert!(r.im.contains(&rat(1)));
    }

    #[test]
    fn boundary_root_detected() {
        // root i exactly on the rectangle edge im = 1
        let rect = RatRect {
            re: RatInterval::new(ratio(-1, 2), ratio(1, 2)),
            im: RatInterval::new(rat(0), rat(1)),
        };
        let sf = QPoly::from_i64_slice(&[1, 0, 1]);
        assert!(boundary_has_root(&sf, &rect).unwrap());
    }
}
