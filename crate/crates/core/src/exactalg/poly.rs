//! Dense univariate polynomials, generic over an exact field, plus the
//! integer polynomial type used for characteristic polynomials and defining
//! polynomials of algebraic values.
//!
//! Coefficients are stored in ascending degree order; the vector is empty for
//! the zero polynomial and its last entry is nonzero otherwise.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{ExactField, OrderedExactField, RatInterval};

/// Dense polynomial over an exact field `K`.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<K: ExactField> {
    coeffs: Vec<K>,
}

pub type QPoly = Poly<BigRational>;

impl<K: ExactField> Poly<K> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![K::one()] }
    }

    pub fn x() -> Self {
        Poly { coeffs: vec![K::zero(), K::one()] }
    }

    pub fn constant(c: K) -> Self {
        let mut p = Poly { coeffs: vec![c] };
        p.normalize();
        p
    }

    pub fn from_coeffs(coeffs: Vec<K>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    /// Monomial `c * x^k`.
    pub fn monomial(c: K, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![K::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports degree 0 per `deg` convention used
    /// throughout (callers check `is_zero` first where it matters).
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> K {
        self.coeffs.get(k).cloned().unwrap_or_else(K::zero)
    }

    pub fn leading(&self) -> K {
        self.coeffs.last().cloned().unwrap_or_else(K::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + other.coeff(k));
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - other.coeff(k));
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![K::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &K) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Quotient and remainder; the divisor must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dlead_inv = divisor.leading().invert();
        let dd = divisor.degree();
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        let qn = rem.len() - divisor.coeffs.len() + 1;
        let mut quot = vec![K::zero(); qn];
        for k in (0..qn).rev() {
            let c = rem[k + dd].clone() * dlead_inv.clone();
            if c.is_zero() {
                continue;
            }
            quot[k] = c.clone();
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * d.clone();
            }
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Exact division; panics if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "polynomial division not exact");
        q
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * K::from_i64(k as i64))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = K::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Monic normalization (divide by the leading coefficient).
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = self.leading().invert();
        self.scale(&inv)
    }

    /// Monic gcd by the Euclidean algorithm, with positive rescaling of the
    /// remainders to control coefficient growth.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = Poly::from_coeffs(K::normalize_positive_scale(r.coeffs()));
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Extended gcd: returns `(g, u, v)` with `u*self + v*other = g`, `g` monic
    /// (or zero).
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = Poly::one();
        let mut s1 = Poly::zero();
        let mut t0 = Poly::zero();
        let mut t1 = Poly::one();
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let lead_inv = r0.leading().invert();
        (
            r0.scale(&lead_inv),
            s0.scale(&lead_inv),
            t0.scale(&lead_inv),
        )
    }

    /// Square-free part `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() || self.degree() == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).monic()
    }

    /// Yun square-free decomposition: returns `[(f1, 1), (f2, 2), ...]` with
    /// `p = lead * prod fi^i`, each `fi` monic square-free, pairwise coprime.
    /// Factors with `fi = 1` are omitted.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        assert!(!self.is_zero(), "square-free decomposition of zero");
        let p = self.monic();
        if p.degree() == 0 {
            return Vec::new();
        }
        let dp = p.derivative();
        let a0 = p.gcd(&dp);
        if a0.degree() == 0 {
            return vec![(p, 1)];
        }
        let mut out = Vec::new();
        let mut b = p.div_exact(&a0);
        let mut c = dp.div_exact(&a0);
        let mut i = 1usize;
        loop {
            let d = c.sub(&b.derivative());
            if d.is_zero() {
                if b.degree() >= 1 {
                    out.push((b.monic(), i));
                }
                break;
            }
            let f = b.gcd(&d);
            if f.degree() >= 1 {
                out.push((f.clone(), i));
            }
            b = b.div_exact(&f);
            c = d.div_exact(&f);
            i += 1;
            if b.degree() == 0 {
                break;
            }
        }
        out
    }

    /// Substitute `x -> x^2`.
    pub fn compose_x_squared(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![K::zero(); 2 * self.degree() + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * k] = c.clone();
        }
        Poly::from_coeffs(coeffs)
    }

    /// Substitute `x -> -x`.
    pub fn compose_neg_x(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// Reversed coefficients `x^deg * p(1/x)`.
    pub fn reverse(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Poly::from_coeffs(coeffs)
    }

    /// General composition `self(g)`.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Poly::constant(c.clone()));
        }
        acc
    }

    /// `p(x/c) * c^deg`: the polynomial whose roots are `c * root`.
    pub fn scale_roots(&self, c: &K) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let d = self.degree();
        let mut pw = K::one();
        let mut coeffs = vec![K::zero(); d + 1];
        for k in (0..=d).rev() {
            coeffs[k] = self.coeff(k) * pw.clone();
            pw = pw * c.clone();
        }
        Poly::from_coeffs(coeffs)
    }

    /// Split into even and odd parts: `p(x) = e(x^2) + x * o(x^2)`.
    pub fn even_odd_parts(&self) -> (Self, Self) {
        let mut e = Vec::new();
        let mut o = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if k % 2 == 0 {
                e.push(c.clone());
            } else {
                o.push(c.clone());
            }
        }
        (Poly::from_coeffs(e), Poly::from_coeffs(o))
    }

    /// Polynomial whose roots are the squares of the roots of `self`
    /// (up to leading normalization): `±(e(s)^2 - s o(s)^2)`.
    pub fn roots_squared_poly(&self) -> Self {
        let (e, o) = self.even_odd_parts();
        e.mul(&e).sub(&Poly::x().mul(&o.mul(&o)))
    }
}

impl<K: OrderedExactField> Poly<K> {
    /// Interval evaluation at a rational interval, using the coefficient
    /// enclosures at the given precision.
    pub fn eval_interval(&self, x: &RatInterval, prec_bits: u32) -> RatInterval {
        let mut acc = RatInterval::point(BigRational::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&c.enclosure(prec_bits));
        }
        acc
    }

    /// Sturm chain of the polynomial. Entries are rescaled by positive
    /// constants (sign-preserving, so the Sturm property is untouched) to
    /// keep coefficient growth polynomial.
    pub fn sturm_chain(&self) -> Vec<Self> {
        let mut chain = Vec::new();
        if self.is_zero() {
            return chain;
        }
        chain.push(self.clone());
        let d = self.derivative();
        if d.is_zero() {
            return chain;
        }
        chain.push(d);
        loop {
            let n = chain.len();
            let r = chain[n - 2].div_rem(&chain[n - 1]).1;
            if r.is_zero() {
                break;
            }
            let neg = r.neg();
            chain.push(Poly::from_coeffs(K::normalize_positive_scale(neg.coeffs())));
        }
        chain
    }

    fn sign_variations_at(chain: &[Self], x: &BigRational) -> usize {
        let mut count = 0;
        let mut last = Ordering::Equal;
        for p in chain {
            let s = K::eval_sign_at_rational(p.coeffs(), x);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    /// Requires a square-free polynomial for exact semantics on the boundary;
    /// on non-square-free input it still counts distinct roots.
    pub fn count_roots_in(&self, chain: &[Self], a: &BigRational, b: &BigRational) -> usize {
        debug_assert!(a <= b);
        let va = Self::sign_variations_at(chain, a);
        let vb = Self::sign_variations_at(chain, b);
        va.saturating_sub(vb)
    }

    /// Cauchy root bound: all real roots lie in `[-B, B]`.
    pub fn cauchy_bound(&self, prec_bits: u32) -> BigRational {
        assert!(!self.is_zero());
        let lead = self.leading().enclosure(prec_bits).abs();
        let lead_lo = lead.lo.clone();
        assert!(
            lead_lo.is_positive(),
            "leading coefficient enclosure must exclude zero"
        );
        let mut m = BigRational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let u = c.enclosure(prec_bits).abs().hi;
            if u > m {
                m = u;
            }
        }
        BigRational::one() + m / lead_lo
    }

    /// Isolate all distinct real roots. Works on the square-free part
    /// internally, so repeated roots are handled; the returned disjoint
    /// intervals `(a, b]` each contain exactly one distinct root, sorted in
    /// increasing order.
    pub fn isolate_real_roots(&self) -> Vec<RatInterval> {
        assert!(!self.is_zero(), "root isolation of the zero polynomial");
        if self.degree() == 0 {
            return Vec::new();
        }
        let sf = self.squarefree_part();
        if sf != *self {
            return sf.isolate_real_roots();
        }
        let chain = self.sturm_chain();
        let bound = self.cauchy_bound(64);
        let lo = -bound.clone();
        let hi = bound;
        let total = self.count_roots_in(&chain, &lo, &hi);
        let mut out = Vec::new();
        if total == 0 {
            return out;
        }
        let mut stack = vec![(lo, hi, total)];
        while let Some((a, b, n)) = stack.pop() {
            if n == 0 {
                continue;
            }
            if n == 1 {
                out.push(RatInterval::new(a, b));
                continue;
            }
            let mid = (&a + &b) / BigRational::from_integer(BigInt::from(2));
            let nl = self.count_roots_in(&chain, &a, &mid);
            let nr = n - nl;
            stack.push((a, mid.clone(), nl));
            stack.push((mid, b, nr));
        }
        out.sort_by(|p, q| p.lo.cmp(&q.lo));
        out
    }

    /// Halve the width of an isolating interval `(a, b]` of this square-free
    /// polynomial until it is narrower than `2^-bits`.
    ///
    /// A simple real root flips the sign of the polynomial, so once the
    /// endpoint signs straddle, bisection needs one evaluation per step; the
    /// Sturm chain is only consulted when an endpoint sign vanishes or the
    /// signs agree (endpoint equals the root, or a stale over-wide interval).
    pub fn refine_root(&self, chain: &[Self], iv: &RatInterval, bits: u32) -> RatInterval {
        let mut a = iv.lo.clone();
        let mut b = iv.hi.clone();
        let eps = super::field::pow2_inv(bits);
        if !(&b - &a > eps) {
            return RatInterval::new(a, b);
        }
        let sa = K::eval_sign_at_rational(self.coeffs(), &a);
        if sa == Ordering::Equal {
            return RatInterval::point(a);
        }
        let sb = K::eval_sign_at_rational(self.coeffs(), &b);
        if sb == Ordering::Equal {
            return RatInterval::point(b);
        }
        if sa != sb {
            // sign bisection
            while &b - &a > eps {
                let mid = (&a + &b) / BigRational::from_integer(BigInt::from(2));
                let sm = K::eval_sign_at_rational(self.coeffs(), &mid);
                if sm == Ordering::Equal {
                    return RatInterval::point(mid);
                }
                if sm == sa {
                    a = mid;
                } else {
                    b = mid;
                }
            }
            return RatInterval::new(a, b);
        }
        // No sign change at the endpoints of a (half-open) isolating
        // interval cannot happen for a square-free polynomial; fall back to
        // Sturm bisection defensively.
        while &b - &a > eps {
            let mid = (&a + &b) / BigRational::from_integer(BigInt::from(2));
            let fm = self.eval(&K::from_rat(&mid));
            match fm.sign() {
                Ordering::Equal => {
                    return RatInterval::point(mid);
                }
                _ => {
                    if self.count_roots_in(chain, &a, &mid) == 1 {
                        b = mid;
                    } else {
                        a = mid;
                    }
                }
            }
        }
        RatInterval::new(a, b)
    }
}

impl QPoly {
    pub fn from_i64_slice(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// Clear denominators and content: primitive integer polynomial with
    /// positive leading coefficient, plus nothing else (the scalar is dropped).
    pub fn primitive_integer(&self) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial { coeffs: Vec::new() };
        }
        let mut denom_lcm = BigInt::one();
        for c in self.coeffs() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs()
            .iter()
            .map(|c| (c * BigRational::from_integer(denom_lcm.clone())).to_integer())
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        if content.is_zero() {
            content = BigInt::one();
        }
        let mut coeffs: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
        if coeffs.last().map_or(false, |c| c.is_negative()) {
            for c in &mut coeffs {
                *c = -c.clone();
            }
        }
        IntPolynomial { coeffs }
    }
}

/// A polynomial with exact integer coefficients (ascending order, canonical:
/// empty for zero, last entry nonzero).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        while p.coeffs.last().map_or(false, |c| c.is_zero()) {
            p.coeffs.pop();
        }
        p
    }

    pub fn from_i64_slice(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![BigInt::one()] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == BigInt::one()
    }

    pub fn to_qpoly(&self) -> QPoly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.to_qpoly().eval(x)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.to_qpoly().mul(&other.to_qpoly()).primitive_integer_signed()
    }

    /// `x^deg * p(1/x)` with coefficients reversed.
    pub fn reverse(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        IntPolynomial::from_coeffs(coeffs)
    }

    /// Reciprocal in the palindromic sense: `p(x) == x^deg p(1/x)`.
    pub fn is_reciprocal(&self) -> bool {
        *self == self.reverse()
    }

    pub fn squarefree_part(&self) -> IntPolynomial {
        if self.is_zero() || self.degree() == 0 {
            return IntPolynomial::one();
        }
        let deriv = IntPolynomial::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k as i64))
                .collect(),
        );
        let g = int_poly_gcd(self, &deriv);
        if g.degree() == 0 {
            return self.primitive_positive();
        }
        // exact division of primitive parts
        let q = self.to_qpoly().div_exact(&g.to_qpoly());
        q.primitive_integer()
    }

    fn primitive_positive(&self) -> IntPolynomial {
        self.to_qpoly().primitive_integer()
    }
}

/// Gcd of integer polynomials by the primitive pseudo-remainder sequence;
/// result is primitive with positive leading coefficient.
pub fn int_poly_gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    if a.is_zero() {
        return b.primitive_positive();
    }
    if b.is_zero() {
        return a.primitive_positive();
    }
    let mut r0 = a.primitive_positive();
    let mut r1 = b.primitive_positive();
    if r0.degree() < r1.degree() {
        std::mem::swap(&mut r0, &mut r1);
    }
    while !r1.is_zero() {
        let r2 = int_pseudo_rem(&r0, &r1).primitive_positive();
        r0 = r1;
        r1 = r2;
    }
    r0.primitive_positive()
}

/// Pseudo-remainder `prem(a, b)`: the remainder of `lead(b)^(da-db+1) * a`
/// divided by `b`, all over the integers.
fn int_pseudo_rem(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    assert!(!b.is_zero());
    let da = a.degree();
    let db = b.degree();
    if da < db {
        return a.clone();
    }
    let lb = b.leading();
    let mut rem: Vec<BigInt> = a.coeffs().to_vec();
    for k in (db..=da).rev() {
        // multiply the remainder through by lead(b), then eliminate x^k
        let top = rem[k].clone();
        for (i, r) in rem.iter_mut().enumerate() {
            if i != k {
                *r = &*r * &lb;
            }
        }
        rem[k] = BigInt::zero();
        for j in 0..db {
            let sub = &top * &b.coeff(j);
            rem[k - db + j] -= sub;
        }
    }
    IntPolynomial::from_coeffs(rem[..db.max(1)].to_vec())
}

impl QPoly {
    /// Like `primitive_integer` but preserving the sign of the leading
    /// coefficient.
    pub fn primitive_integer_signed(&self) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let neg = self.leading().is_negative();
        let p = self.primitive_integer();
        if neg {
            IntPolynomial::from_coeffs(p.coeffs().iter().map(|c| -c.clone()).collect())
        } else {
            p
        }
    }
}

/// Resultant of two rational polynomials, by evaluation–interpolation on the
/// Sylvester determinant. Exact.
pub fn resultant_q(p: &QPoly, q: &QPoly) -> BigRational {
    sylvester_det(p, q)
}

fn sylvester_det(p: &QPoly, q: &QPoly) -> BigRational {
    if p.is_zero() || q.is_zero() {
        return BigRational::zero();
    }
    let m = p.degree();
    let n = q.degree();
    if m == 0 {
        return num_traits::pow::pow(p.coeff(0), n);
    }
    if n == 0 {
        return num_traits::pow::pow(q.coeff(0), m);
    }
    let size = m + n;
    let mut mat = vec![vec![BigRational::zero(); size]; size];
    for row in 0..n {
        for (k, c) in p.coeffs().iter().enumerate() {
            // row for x^(n-1-row) * p, coefficient of degree (m + n - 1) - (row + (m - k))
            mat[row][row + m - k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in q.coeffs().iter().enumerate() {
            mat[n + row][row + n - k] = c.clone();
        }
    }
    det_rational(mat)
}

fn det_rational(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= pivot.clone();
        let inv = pivot.recip();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] * &inv;
            for c in col..n {
                let sub = &factor * &m[col][c];
                m[r][c] = &m[r][c] - &sub;
            }
        }
    }
    det
}

/// Resultant with respect to `y` of `f(y)` and `g(s, y)` up to a nonzero
/// rational scalar (all callers normalize to a primitive square-free part
/// afterwards, so the scalar is irrelevant). `g` is given as a polynomial in
/// `y` with `QPoly`-in-`s` coefficients. Computed by evaluation at integer
/// points (fraction-free integer determinants) and Lagrange interpolation.
pub fn resultant_y_bivariate(f: &QPoly, g_coeffs_in_s: &[QPoly]) -> QPoly {
    let mut g_coeffs = g_coeffs_in_s.to_vec();
    while g_coeffs.last().map_or(false, |c| c.is_zero()) {
        g_coeffs.pop();
    }
    assert!(!f.is_zero() && !g_coeffs.is_empty(), "degenerate resultant input");
    // Scale everything to integers; only changes the resultant by a scalar.
    // The whole of g is scaled by one common constant (per-coefficient
    // scaling would change the polynomial, not just rescale it).
    let f_int = f.primitive_integer();
    let g_scale = common_integer_scale(&g_coeffs);
    let g_int: Vec<IntPolynomial> = g_coeffs
        .iter()
        .map(|c| {
            let scaled = c.scale(&g_scale);
            IntPolynomial::from_coeffs(scaled.coeffs().iter().map(|e| e.to_integer()).collect())
        })
        .collect();
    let ds: usize = g_int.iter().map(|c| if c.is_zero() { 0 } else { c.degree() }).max().unwrap_or(0);
    let npts = f.degree() * ds + 1;

    // The leading y-coefficient of g may vanish at some sample points, which
    // would change the Sylvester dimensions; skip such points.
    let glead = g_int.last().unwrap().clone();
    let mut xs: Vec<BigInt> = Vec::with_capacity(npts);
    let mut ys: Vec<BigInt> = Vec::with_capacity(npts);
    let mut t: i64 = 0;
    while xs.len() < npts {
        let x = BigInt::from(t);
        // alternate 0, 1, -1, 2, -2, ...
        t = if t > 0 { -t } else { -t + 1 };
        let xq = BigRational::from_integer(x.clone());
        if glead.eval_rational(&xq).is_zero() {
            continue;
        }
        let g_at: Vec<BigInt> = g_int
            .iter()
            .map(|c| c.eval_rational(&xq).to_integer())
            .collect();
        ys.push(sylvester_det_int(f_int.coeffs(), &g_at));
        xs.push(x);
    }
    lagrange_interpolate_int(&xs, &ys)
}

/// One rational `s > 0` such that `s * p` has integer coefficients for every
/// polynomial in the slice.
fn common_integer_scale(polys: &[QPoly]) -> BigRational {
    let mut denom_lcm = BigInt::one();
    for p in polys {
        for c in p.coeffs() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
    }
    BigRational::from_integer(denom_lcm)
}

/// Sylvester determinant of two integer coefficient vectors (ascending),
/// by fraction-free Bareiss elimination.
fn sylvester_det_int(p: &[BigInt], q: &[BigInt]) -> BigInt {
    let m = p.len() - 1;
    let n = q.len() - 1;
    if m == 0 {
        return num_traits::pow::pow(p[0].clone(), n);
    }
    if n == 0 {
        return num_traits::pow::pow(q[0].clone(), m);
    }
    let size = m + n;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for row in 0..n {
        for (k, c) in p.iter().enumerate() {
            mat[row][row + m - k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in q.iter().enumerate() {
            mat[n + row][row + n - k] = c.clone();
        }
    }
    bareiss_det(mat)
}

/// Fraction-free determinant of an integer matrix.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i64;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = &t / &prev;
            }
        }
        for row in m.iter_mut().skip(k + 1) {
            row[k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Lagrange interpolation at integer nodes, via the master polynomial.
fn lagrange_interpolate_int(xs: &[BigInt], ys: &[BigInt]) -> QPoly {
    let n = xs.len();
    // master = prod (x - x_i), integer coefficients
    let mut master: Vec<BigInt> = vec![BigInt::one()];
    for x in xs {
        let mut next = vec![BigInt::zero(); master.len() + 1];
        for (k, c) in master.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * x;
        }
        master = next;
    }
    let mut acc_coeffs = vec![BigRational::zero(); n];
    for i in 0..n {
        // synthetic division of master by (x - x_i)
        let mut quo = vec![BigInt::zero(); master.len() - 1];
        let mut carry = BigInt::zero();
        for k in (0..master.len() - 1).rev() {
            let c = &master[k + 1] + &carry;
            carry = &c * &xs[i];
            quo[k] = c;
        }
        // denominator = quo evaluated at x_i
        let mut den = BigInt::zero();
        for k in (0..quo.len()).rev() {
            den = den * &xs[i] + &quo[k];
        }
        if den.is_zero() {
            continue;
        }
        let w = BigRational::new(ys[i].clone(), den);
        for (k, qk) in quo.iter().enumerate() {
            acc_coeffs[k] += &w * BigRational::from_integer(qk.clone());
        }
    }
    Poly::from_coeffs(acc_coeffs)
}

/// Polynomial whose roots include all pairwise products of a root of `p` and
/// a root of `q` (both nonzero-rooted inputs assumed square-free is not
/// required). Used for modulus-squared values `z * conj(z)`.
pub fn root_product_poly(p: &QPoly, q: &QPoly) -> QPoly {
    // Res_y( p(y), y^deg(q) q(s / y) ): coefficient of y^(dq - k) is q_k s^k.
    let coeffs_in_s: Vec<QPoly> = (0..=q.degree())
        .map(|j| {
            // y^j coefficient: q_{dq - j} * s^{dq - j}
            let k = q.degree() - j;
            QPoly::monomial(q.coeff(k), k)
        })
        .collect();
    resultant_y_bivariate(p, &coeffs_in_s)
}

/// Polynomial whose roots include all sums of a root of `p` and a root of `q`.
pub fn root_sum_poly(p: &QPoly, q: &QPoly) -> QPoly {
    // Res_y( p(y), q(s - y) ): expand q(s - y) in powers of y.
    let dq = q.degree();
    let mut coeffs_in_s: Vec<QPoly> = vec![QPoly::zero(); dq + 1];
    // q(s - y) = sum_k q_k (s - y)^k = sum_k q_k sum_j C(k,j) s^(k-j) (-y)^j
    let mut binom = vec![BigRational::one()];
    for k in 0..=dq {
        if k > 0 {
            let mut next = vec![BigRational::one(); k + 1];
            for j in 1..k {
                next[j] = &binom[j - 1] + &binom[j];
            }
            binom = next;
        }
        let qk = q.coeff(k);
        if qk.is_zero() {
            continue;
        }
        for j in 0..=k {
            let mut c = &qk * &binom[j];
            if j % 2 == 1 {
                c = -c;
            }
            let term = QPoly::monomial(c, k - j);
            coeffs_in_s[j] = coeffs_in_s[j].add(&term);
        }
    }
    resultant_y_bivariate(p, &coeffs_in_s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn qp(coeffs: &[i64]) -> QPoly {
        QPoly::from_i64_slice(coeffs)
    }

    #[test]
    fn div_rem_roundtrip() {
        let p = qp(&[-1, 0, 0, 1]); // x^3 - 1
        let d = qp(&[-1, 1]); // x - 1
        let (q, r) = p.div_rem(&d);
        assert!(r.is_zero());
        assert_eq!(q, qp(&[1, 1, 1]));
    }

    #[test]
    fn gcd_of_common_factor() {
        let a = qp(&[-1, 1]).mul(&qp(&[1, 1])); // (x-1)(x+1)
        let b = qp(&[-1, 1]).mul(&qp(&[2, 1])); // (x-1)(x+2)
        assert_eq!(a.gcd(&b), qp(&[-1, 1]));
    }

    #[test]
    fn xgcd_bezout_identity() {
        let a = qp(&[2, 0, 1]); // x^2 + 2
        let b = qp(&[1, 1]); // x + 1
        let (g, u, v) = a.xgcd(&b);
        assert_eq!(g, QPoly::one());
        let lhs = u.mul(&a).add(&v.mul(&b));
        assert_eq!(lhs, QPoly::one());
    }

    #[test]
    fn squarefree_decomposition_multiplicities() {
        // (x-1)^2 (x+2)^3
        let p = qp(&[-1, 1]).mul(&qp(&[-1, 1])).mul(&qp(&[2, 1])).mul(&qp(&[2, 1])).mul(&qp(&[2, 1]));
        let dec = p.squarefree_decomposition();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[0], (qp(&[-1, 1]), 2));
        assert_eq!(dec[1], (qp(&[2, 1]), 3));
    }

    #[test]
    fn sturm_isolates_golden_ratio_roots() {
        let p = qp(&[-1, -1, 1]); // x^2 - x - 1, roots (1±sqrt5)/2
        let roots = p.isolate_real_roots();
        assert_eq!(roots.len(), 2);
        let chain = p.sturm_chain();
        let hi = p.refine_root(&chain, &roots[1], 40);
        // phi = 1.6180339887...
        assert!(hi.lo <= crate::ratio(16180339888, 10000000000));
        assert!(hi.hi >= crate::ratio(16180339887, 10000000000));
        assert!(hi.narrower_than(40));
    }

    #[test]
    fn resultant_of_coprime_quadratics() {
        // Res(x^2 - 2, x^2 - 3) = (2-3)^2 = 1 with standard normalization.
        let r = resultant_q(&qp(&[-2, 0, 1]), &qp(&[-3, 0, 1]));
        assert_eq!(r, rat(1));
    }

    #[test]
    fn root_product_contains_product() {
        // roots of x^2-2: ±sqrt2; of x^2-3: ±sqrt3. products: ±sqrt6.
        let pp = root_product_poly(&qp(&[-2, 0, 1]), &qp(&[-3, 0, 1]));
        // sqrt6 is a root: x^2 - 6 divides the square-free part.
        let sf = pp.squarefree_part();
        assert!(qp(&[-6, 0, 1]).monic().divides(&sf));
    }

    #[test]
    fn root_sum_contains_sum() {
        let ps = root_sum_poly(&qp(&[-2, 0, 1]), &qp(&[-3, 0, 1]));
        let sf = ps.squarefree_part();
        // sqrt2 + sqrt3 has minimal polynomial x^4 - 10x^2 + 1
        assert!(qp(&[1, 0, -10, 0, 1]).monic().divides(&sf));
    }

    #[test]
    fn primitive_integer_normalization() {
        let p = Poly::from_coeffs(vec![crate::ratio(1, 2), crate::ratio(-3, 4)]);
        let ip = p.primitive_integer();
        assert_eq!(ip.coeffs(), &[BigInt::from(-2), BigInt::from(3)]);
        let ips = p.primitive_integer_signed();
        assert_eq!(ips.coeffs(), &[BigInt::from(2), BigInt::from(-3)]);
    }
}
