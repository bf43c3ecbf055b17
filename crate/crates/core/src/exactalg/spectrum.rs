//! Exact spectrum analysis: the multiset of root moduli of an integer
//! polynomial, sorted with certified comparisons, and the certified
//! maximum-modulus root.
//!
//! Moduli of roots of `p` are algebraic: `|z|^2 = z * conj(z)` is a real root
//! of the root-product polynomial of the square-free part with itself.
//! Moduli are therefore carried as designated *squares* in that shared pool,
//! which keeps every comparison, the "equals 1 exactly" decision and the
//! log enclosures exact without ever doubling degrees.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::algebraic::AlgebraicValue;
use super::cyclotomic::cyclotomic_factors;
use super::field::RatInterval;
use super::poly::{root_product_poly, IntPolynomial, QPoly};
use super::roots::{certified_roots, sqrt_bounds, SolveOptions};
use super::ExactAlgError;

/// The modulus of a root, kept exact where exactness is load-bearing.
#[derive(Debug, Clone)]
pub enum Modulus {
    /// Exactly 1 (root of unity or proven unit-modulus root).
    One,
    /// Exact nonnegative rational modulus.
    Rational(BigRational),
    /// `sqrt` of a designated real algebraic number > 0 (the modulus
    /// squared, living in the root-product pool of its factor).
    SqrtOf(AlgebraicValue),
}

impl Modulus {
    pub fn is_one(&self) -> bool {
        match self {
            Modulus::One => true,
            Modulus::Rational(q) => *q == BigRational::one(),
            Modulus::SqrtOf(_) => false,
        }
    }

    /// The modulus squared as an algebraic value.
    pub fn squared(&self) -> AlgebraicValue {
        match self {
            Modulus::One => AlgebraicValue::one(),
            Modulus::Rational(q) => AlgebraicValue::from_rational(&(q * q)),
            Modulus::SqrtOf(v) => v.clone(),
        }
    }

    pub fn interval(&self, bits: u32) -> Result<RatInterval, ExactAlgError> {
        match self {
            Modulus::One => Ok(RatInterval::point(BigRational::one())),
            Modulus::Rational(q) => Ok(RatInterval::point(q.clone())),
            Modulus::SqrtOf(v) => {
                let mut v = v.clone();
                let iv = v.real_interval(2 * bits + 2)?;
                let lo = sqrt_bounds(&iv.lo.clone().max(BigRational::zero()), bits + 2).lo;
                let hi = sqrt_bounds(&iv.hi, bits + 2).hi;
                Ok(RatInterval::new(lo, hi))
            }
        }
    }

    /// The modulus itself as a designated algebraic value (degree-doubling
    /// composition; only used for reporting, never in the sorting loops).
    pub fn to_algebraic(&self) -> Result<AlgebraicValue, ExactAlgError> {
        match self {
            Modulus::One => Ok(AlgebraicValue::one()),
            Modulus::Rational(q) => Ok(AlgebraicValue::from_rational(q)),
            Modulus::SqrtOf(v) => {
                if let Some(q) = v.rational_value() {
                    if let Some(r) = exact_rational_sqrt(&q) {
                        return Ok(AlgebraicValue::from_rational(&r));
                    }
                }
                let s_poly = v
                    .defining_polynomial()
                    .to_qpoly()
                    .compose_x_squared()
                    .primitive_integer()
                    .squarefree_part();
                let s_q = s_poly.to_qpoly();
                let s_chain = s_q.sturm_chain();
                let mut m2 = v.clone();
                let mut bits = 32u32;
                loop {
                    let iv = m2.real_interval(bits)?;
                    let lo = sqrt_bounds(&iv.lo.clone().max(BigRational::zero()), bits).lo;
                    let hi = sqrt_bounds(&iv.hi, bits).hi;
                    let siv = RatInterval::new(lo, hi);
                    let cnt = s_q.count_roots_in(&s_chain, &siv.lo, &siv.hi)
                        + usize::from(s_q.eval(&siv.lo).is_zero());
                    if cnt == 1 {
                        return AlgebraicValue::new_real(s_poly, siv);
                    }
                    bits = bits.saturating_mul(2);
                    if bits > 1 << 14 {
                        return Err(ExactAlgError::RefinementFailure {
                            detail: "modulus designation stalled".into(),
                        });
                    }
                }
            }
        }
    }

    pub fn cmp_exact(&self, other: &Modulus) -> Result<Ordering, ExactAlgError> {
        match (self, other) {
            (Modulus::One, Modulus::One) => Ok(Ordering::Equal),
            (Modulus::Rational(a), Modulus::Rational(b)) => Ok(a.cmp(b)),
            (Modulus::One, Modulus::Rational(b)) => Ok(BigRational::one().cmp(b)),
            (Modulus::Rational(a), Modulus::One) => Ok(a.cmp(&BigRational::one())),
            // compare through the squares (both moduli are nonnegative)
            _ => self.squared().cmp_real(&other.squared()),
        }
    }

    pub fn eq_exact(&self, other: &Modulus) -> Result<bool, ExactAlgError> {
        Ok(self.cmp_exact(other)? == Ordering::Equal)
    }

    /// Certified enclosure of `ln` of the modulus; exactly 0 for [`Modulus::One`].
    pub fn ln_interval(&self, bits: u32) -> Result<RatInterval, ExactAlgError> {
        match self {
            Modulus::One => Ok(RatInterval::point(BigRational::zero())),
            Modulus::Rational(q) => {
                if *q == BigRational::one() {
                    Ok(RatInterval::point(BigRational::zero()))
                } else {
                    Ok(super::algebraic::ln_bounds(q, bits))
                }
            }
            Modulus::SqrtOf(v) => {
                // ln |z| = ln(|z|^2) / 2
                let iv = v.ln_interval(bits + 1)?;
                let half = BigRational::new(BigInt::one(), BigInt::from(2));
                Ok(iv.scale(&half))
            }
        }
    }
}

/// The sorted (descending) multiset of root moduli of `p`, with
/// multiplicities. Roots of cyclotomic factors are pinned to exactly 1
/// without any numerics; other unit-modulus roots (Salem conjugates) are
/// pinned through an exact designation.
pub fn spectrum_moduli(p: &IntPolynomial) -> Result<Vec<(Modulus, usize)>, ExactAlgError> {
    assert!(!p.is_zero(), "spectrum of the zero polynomial");
    let mut entries: Vec<(Modulus, usize)> = Vec::new();

    let mut q = p.to_qpoly().monic();
    // strip roots at zero
    let mut zero_mult = 0usize;
    while !q.is_zero() && q.coeff(0).is_zero() {
        q = q.div_exact(&QPoly::x());
        zero_mult += 1;
    }
    if zero_mult > 0 {
        entries.push((Modulus::Rational(BigRational::zero()), zero_mult));
    }
    if q.degree() == 0 {
        return merge_sorted(entries);
    }

    // cyclotomic part: all moduli exactly one
    let (cyc, rest) = cyclotomic_factors(&q.primitive_integer());
    let cyc_degree: usize = cyc
        .iter()
        .map(|(n, m)| super::cyclotomic::euler_phi(*n) * m)
        .sum();
    if cyc_degree > 0 {
        entries.push((Modulus::One, cyc_degree));
    }
    if rest.degree() == 0 {
        return merge_sorted(entries);
    }

    // non-cyclotomic part: square-free decomposition, then certified discs
    for (factor, mult) in rest.to_qpoly().squarefree_decomposition() {
        for (modulus, count) in factor_moduli(&factor)? {
            entries.push((modulus, count * mult));
        }
    }
    merge_sorted(entries)
}

/// Moduli (with multiplicity within the factor) of a square-free rational
/// polynomial with nonzero constant term.
fn factor_moduli(f: &QPoly) -> Result<Vec<(Modulus, usize)>, ExactAlgError> {
    let mut out: Vec<(Modulus, usize)> = Vec::new();

    // Exact rational roots first: cheap and keeps later designations simple.
    let fint = f.primitive_integer();
    let mut remaining = f.monic();
    for root in rational_roots(&fint) {
        let lin = QPoly::from_coeffs(vec![-root.clone(), BigRational::one()]);
        if lin.divides(&remaining) {
            remaining = remaining.div_exact(&lin);
            out.push((Modulus::Rational(root.abs()), 1));
        }
    }
    if remaining.degree() == 0 {
        return Ok(out);
    }

    // The modulus-squared pool for the irrational part.
    let pool = super::algebraic::DefiningPoly::new_squarefree(
        root_product_poly(&remaining, &remaining)
            .primitive_integer()
            .squarefree_part(),
    );
    let p2 = pool.q().clone();
    let p2_chain = pool.chain().clone();

    let mut radius_bits = 48u32;
    'outer: for _attempt in 0..6 {
        let discs = certified_roots(
            &remaining,
            &SolveOptions {
                radius_bits,
                sep_factor: 1,
                max_rounds: 30,
            },
        )?;
        // Pair conjugates: find for each disc the unique disc meeting its
        // conjugate.
        let n = discs.len();
        let mut partner = vec![usize::MAX; n];
        for i in 0..n {
            let cj = discs[i].conj();
            let hits: Vec<usize> = (0..n).filter(|&j| cj.intersects(&discs[j])).collect();
            if hits.len() != 1 {
                radius_bits *= 2;
                continue 'outer;
            }
            partner[i] = hits[0];
        }
        // Designate |z|^2 in the modulus pool for one representative of each
        // conjugate class.
        let mut result: Vec<(Modulus, usize)> = Vec::new();
        let mut used = vec![false; n];
        for i in 0..n {
            if used[i] {
                continue;
            }
            let j = partner[i];
            used[i] = true;
            let class_size = if j == i {
                1 // real root
            } else {
                used[j] = true;
                2
            };
            // |z|^2 enclosure from the disc's bounding box
            let re = discs[i].re_interval();
            let im = discs[i].im_interval();
            let m2_lo = {
                let rlo = if re.contains_zero() { BigRational::zero() } else { re.abs().lo };
                let ilo = if im.contains_zero() { BigRational::zero() } else { im.abs().lo };
                &rlo * &rlo + &ilo * &ilo
            };
            let m2_hi = {
                let rhi = re.abs().hi;
                let ihi = im.abs().hi;
                &rhi * &rhi + &ihi * &ihi
            };
            let iv = RatInterval::new(m2_lo, m2_hi);
            let hit_lo = p2.eval(&iv.lo).is_zero();
            let count = p2.count_roots_in(&p2_chain, &iv.lo, &iv.hi) + usize::from(hit_lo);
            if count != 1 {
                radius_bits *= 2;
                continue 'outer;
            }
            let m2 = AlgebraicValue::new_real_shared(pool.clone(), iv)?;
            result.push((normalize_sqrt_modulus(m2)?, class_size));
        }
        out.extend(result);
        return Ok(out);
    }
    Err(ExactAlgError::RefinementFailure {
        detail: "modulus designation stalled".into(),
    })
}

/// Normalize a designated modulus-squared into the [`Modulus`] enum,
/// pinning exact 1 and exact rationals.
fn normalize_sqrt_modulus(m2: AlgebraicValue) -> Result<Modulus, ExactAlgError> {
    if let Some(q) = m2.rational_value() {
        if q == BigRational::one() {
            return Ok(Modulus::One);
        }
        if let Some(r) = exact_rational_sqrt(&q) {
            return Ok(Modulus::Rational(r));
        }
    }
    Ok(Modulus::SqrtOf(m2))
}

fn exact_rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let ns = super::roots::isqrt(q.numer());
    let ds = super::roots::isqrt(q.denom());
    if &ns * &ns == *q.numer() && &ds * &ds == *q.denom() {
        Some(BigRational::new(ns, ds))
    } else {
        None
    }
}

/// Exact rational roots of an integer polynomial (rational root theorem).
pub fn rational_roots(p: &IntPolynomial) -> Vec<BigRational> {
    if p.is_zero() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let lead = p.leading();
    let mut ct = p.constant_term();
    if ct.is_zero() {
        out.push(BigRational::zero());
        // strip x^v
        let mut q = p.to_qpoly();
        while q.coeff(0).is_zero() && q.degree() > 0 {
            q = q.div_exact(&QPoly::x());
        }
        ct = q.primitive_integer().constant_term();
        let qi = q.primitive_integer();
        for r in rational_roots_nonzero(&qi, &ct, &qi.leading()) {
            out.push(r);
        }
        return out;
    }
    out.extend(rational_roots_nonzero(p, &ct, &lead));
    out
}

fn rational_roots_nonzero(p: &IntPolynomial, ct: &BigInt, lead: &BigInt) -> Vec<BigRational> {
    let mut out = Vec::new();
    for num in small_divisors(ct) {
        for den in small_divisors(lead) {
            for sign in [1i64, -1i64] {
                let cand = BigRational::new(&num * BigInt::from(sign), den.clone());
                if p.eval_rational(&cand).is_zero() && !out.contains(&cand) {
                    out.push(cand);
                }
            }
        }
    }
    out
}

fn small_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut d = BigInt::one();
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

/// Merge equal moduli and sort descending, with exact comparisons.
fn merge_sorted(entries: Vec<(Modulus, usize)>) -> Result<Vec<(Modulus, usize)>, ExactAlgError> {
    let mut merged: Vec<(Modulus, usize)> = Vec::new();
    'next: for (m, c) in entries {
        for (em, ec) in merged.iter_mut() {
            if em.eq_exact(&m)? {
                *ec += c;
                continue 'next;
            }
        }
        merged.push((m, c));
    }
    // insertion sort with exact comparisons (tiny lists)
    let mut sorted: Vec<(Modulus, usize)> = Vec::with_capacity(merged.len());
    for item in merged {
        let mut pos = sorted.len();
        for (i, (m, _)) in sorted.iter().enumerate() {
            if item.0.cmp_exact(m)? == Ordering::Greater {
                pos = i;
                break;
            }
        }
        sorted.insert(pos, item);
    }
    Ok(sorted)
}

/// Result of [`max_modulus_root`].
#[derive(Debug, Clone)]
pub struct MaxModulusRoot {
    /// The maximum modulus among the roots, as a certified real algebraic
    /// value (enclosure width at most `2^-precision`).
    pub value: AlgebraicValue,
    /// Whether the maximum modulus is attained by a real root of the input.
    pub attained_by_real_root: bool,
}

/// Certified enclosure of the maximum root modulus of `p`, width at most
/// `2^-precision_bits`. When the maximum is attained by a real root the
/// returned value is designated directly inside a square-free factor of `p`.
pub fn max_modulus_root(
    p: &IntPolynomial,
    precision_bits: u32,
) -> Result<MaxModulusRoot, ExactAlgError> {
    if p.is_zero() || p.degree() == 0 {
        return Err(ExactAlgError::Precondition(
            "maximum modulus requires a nonconstant polynomial".into(),
        ));
    }
    let spec = spectrum_moduli(p)?;
    let (top, _) = spec.first().expect("nonconstant polynomial has roots");
    let top_sq = top.squared();

    // Attainment by a real root: compare |r|^2 against the top square.
    let sf = p.squarefree_part().to_qpoly();
    let mut real_attainer: Option<AlgebraicValue> = None;
    for iv in sf.isolate_real_roots() {
        let root = AlgebraicValue::new_real(sf.primitive_integer(), iv)?;
        let absr = root.abs_real()?;
        let r_sq = absr.mul_real(&absr)?;
        if r_sq.eq_value(&top_sq)? {
            real_attainer = Some(absr);
            break;
        }
    }
    let (mut value, attained) = match real_attainer {
        Some(v) => (v, true),
        None => (top.to_algebraic()?, false),
    };
    value.refine_to(precision_bits)?;
    Ok(MaxModulusRoot {
        value,
        attained_by_real_root: attained,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use crate::{rat, ratio};

    fn ip(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64_slice(c)
    }

    #[test]
    fn unipotent_max_modulus_is_exactly_one() {
        // (x-1)^3
        let p = ip(&[-1, 3, -3, 1]);
        let m = max_modulus_root(&p, 64).unwrap();
        assert_eq!(m.value.rational_value(), Some(rat(1)));
        assert!(m.attained_by_real_root);
    }

    #[test]
    fn golden_ratio_enclosure() {
        let p = ip(&[-1, -1, 1]);
        let m = max_modulus_root(&p, 40).unwrap();
        let mut v = m.value.clone();
        let iv = v.real_interval(40).unwrap();
        let phi = ratio(16180339887, 10000000000);
        let eps = ratio(1, 1_000_000_000);
        assert!((iv.midpoint() - phi).abs() < eps);
        assert!(iv.narrower_than(27)); // 10^-8 ~ 2^-26.6
        assert!(m.attained_by_real_root);
    }

    #[test]
    fn pisot_pair_enclosure() {
        // x^2 - 3x + 1: max root (3+sqrt5)/2 = 2.6180339887...
        let p = ip(&[1, -3, 1]);
        let m = max_modulus_root(&p, 40).unwrap();
        let mut v = m.value.clone();
        let iv = v.real_interval(40).unwrap();
        let beta = ratio(26180339887, 10000000000);
        let eps = ratio(1, 1_000_000_000);
        assert!((iv.midpoint() - beta).abs() < eps);
        assert!(m.attained_by_real_root);
    }

    #[test]
    fn complex_attained_modulus() {
        // x^2 + 2: roots ± i sqrt2, modulus sqrt2 attained only by complex roots
        let p = ip(&[2, 0, 1]);
        let m = max_modulus_root(&p, 40).unwrap();
        assert!(!m.attained_by_real_root);
        let mut v = m.value.clone();
        let iv = v.real_interval(40).unwrap();
        let s2 = ratio(14142135624, 10000000000);
        let eps = ratio(1, 1_000_000_000);
        assert!((iv.midpoint() - s2).abs() < eps);
    }

    #[test]
    fn spectrum_of_cyclotomic_times_pisot() {
        // (x^2+x+1)(x^2-3x+1): moduli {1, 1, beta, 1/beta}
        let p = ip(&[1, 1, 1]).mul(&ip(&[1, -3, 1]));
        let spec = spectrum_moduli(&p).unwrap();
        assert_eq!(spec.len(), 3);
        // descending: beta, 1, 1/beta
        assert!(matches!(spec[1].0, Modulus::One));
        assert_eq!(spec[1].1, 2);
        let top = spec[0].0.interval(20).unwrap();
        assert!(top.lo > rat(2));
        let bot = spec[2].0.interval(20).unwrap();
        assert!(bot.hi < rat(1));
    }

    #[test]
    fn spectrum_with_multiplicity() {
        // (x^2 - x - 1)^2: phi and -1/phi with multiplicity 2 each
        let f = ip(&[-1, -1, 1]);
        let p = f.mul(&f);
        let spec = spectrum_moduli(&p).unwrap();
        assert_eq!(spec.len(), 2);
        assert_eq!(spec[0].1, 2);
        assert_eq!(spec[1].1, 2);
    }

    #[test]
    fn lehmer_polynomial_moduli() {
        // Lehmer's polynomial: degree 10 Salem, 8 roots on the unit circle
        let p = ip(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let spec = spectrum_moduli(&p).unwrap();
        // three modulus classes: lambda > 1, 1 (x8), 1/lambda
        assert_eq!(spec.len(), 3);
        assert!(matches!(spec[1].0, Modulus::One));
        assert_eq!(spec[1].1, 8);
        let top = spec[0].0.interval(30).unwrap();
        // Lehmer's number 1.17628...
        assert!(top.lo > ratio(117, 100));
        assert!(top.hi < ratio(118, 100));
    }

    #[test]
    fn off_circle_self_inversive_quartic() {
        // x^4 + 3x^2 + 1: moduli phi, 1/phi each with multiplicity 2
        let p = ip(&[1, 0, 3, 0, 1]);
        let spec = spectrum_moduli(&p).unwrap();
        assert_eq!(spec.len(), 2);
        assert_eq!(spec[0].1, 2);
        assert_eq!(spec[1].1, 2);
        assert!(!spec[0].0.is_one());
    }

    #[test]
    fn ln_of_modulus_pinned_for_units() {
        let p = ip(&[1, 1, 1]); // Phi_3
        let spec = spectrum_moduli(&p).unwrap();
        assert_eq!(spec.len(), 1);
        let ln = spec[0].0.ln_interval(64).unwrap();
        assert!(ln.is_point() && ln.lo.is_zero());
    }
}
