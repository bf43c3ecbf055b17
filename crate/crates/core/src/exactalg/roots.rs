//! Certified complex root enclosures.
//!
//! Roots are approximated by simultaneous Weierstrass (Durand–Kerner)
//! iteration in dyadic rational arithmetic and then certified a posteriori:
//! for a monic square-free `p` of degree `d` and distinct points `z_i`, the
//! discs centered at `z_i` with radii `d * |W_i|`, where
//! `W_i = p(z_i) / prod_{j != i} (z_i - z_j)` is the exact Weierstrass
//! correction, cover all roots of `p`, and every connected component made of
//! `k` discs contains exactly `k` roots. Once the discs are pairwise
//! disjoint, each contains exactly one root.
//!
//! The iteration uses floating point only to pick starting points; every
//! certification step is exact rational arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::RatInterval;
use super::poly::QPoly;
use super::ExactAlgError;

/// Complex number with exact rational parts.
#[derive(Debug, Clone, PartialEq)]
pub struct CxQ {
    pub re: BigRational,
    pub im: BigRational,
}

impl CxQ {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        CxQ { re, im }
    }

    pub fn zero() -> Self {
        CxQ {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &CxQ) -> CxQ {
        CxQ::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &CxQ) -> CxQ {
        CxQ::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn mul(&self, o: &CxQ) -> CxQ {
        CxQ::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    pub fn div(&self, o: &CxQ) -> CxQ {
        let n = &o.re * &o.re + &o.im * &o.im;
        assert!(!n.is_zero(), "complex division by zero");
        CxQ::new(
            (&self.re * &o.re + &self.im * &o.im) / &n,
            (&self.im * &o.re - &self.re * &o.im) / &n,
        )
    }

    pub fn conj(&self) -> CxQ {
        CxQ::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Round both parts to the dyadic grid `2^-bits`.
    pub fn round_dyadic(&self, bits: u32) -> CxQ {
        CxQ::new(round_dyadic(&self.re, bits), round_dyadic(&self.im, bits))
    }
}

/// Round a rational to the nearest multiple of `2^-bits`.
pub fn round_dyadic(q: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::one() << bits as usize;
    let scaled = q * BigRational::from_integer(scale.clone());
    let rounded = scaled.round().to_integer();
    BigRational::new(rounded, scale)
}

/// `floor(sqrt(n))` for a nonnegative integer.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative());
    if n.is_zero() {
        return BigInt::zero();
    }
    let mut x: BigInt = BigInt::one() << ((n.bits() as usize + 1) / 2 + 1);
    loop {
        let y = (&x + n / &x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// Rational `[lo, hi]` with `lo <= sqrt(q) <= hi`, `hi - lo <= 2^-bits`,
/// for `q >= 0`.
pub fn sqrt_bounds(q: &BigRational, bits: u32) -> RatInterval {
    assert!(!q.is_negative(), "sqrt of a negative rational");
    if q.is_zero() {
        return RatInterval::point(BigRational::zero());
    }
    // sqrt(a/b) = sqrt(a * b) / b; work at scaled precision.
    let shift = 2 * (bits as usize + 1);
    let scaled = q * BigRational::from_integer(BigInt::one() << shift);
    // lower bound via floor sqrt of floor(scaled)
    let fl = scaled.floor().to_integer();
    let s = isqrt(&fl);
    let denom = BigRational::from_integer(BigInt::one() << (shift / 2));
    let lo = BigRational::from_integer(s.clone()) / denom.clone();
    let hi = BigRational::from_integer(s + BigInt::one()) / denom;
    RatInterval::new(lo, hi)
}

/// Upper bound on `|z|`.
pub fn modulus_upper(z: &CxQ, bits: u32) -> BigRational {
    sqrt_bounds(&z.norm_sq(), bits).hi
}

/// Lower bound on `|z|` (clamped at 0).
pub fn modulus_lower(z: &CxQ, bits: u32) -> BigRational {
    let lo = sqrt_bounds(&z.norm_sq(), bits).lo;
    if lo.is_negative() {
        BigRational::zero()
    } else {
        lo
    }
}

/// A certified disc containing exactly one root of the polynomial it was
/// produced for.
#[derive(Debug, Clone)]
pub struct RootDisc {
    pub center: CxQ,
    pub radius: BigRational,
}

impl RootDisc {
    /// Enclosure of the modulus of the enclosed root.
    pub fn modulus_interval(&self, bits: u32) -> RatInterval {
        let c = sqrt_bounds(&self.center.norm_sq(), bits);
        let lo = &c.lo - &self.radius;
        let lo = if lo.is_negative() { BigRational::zero() } else { lo };
        RatInterval::new(lo, &c.hi + &self.radius)
    }

    /// Enclosure of the real part.
    pub fn re_interval(&self) -> RatInterval {
        RatInterval::new(&self.center.re - &self.radius, &self.center.re + &self.radius)
    }

    /// Enclosure of the imaginary part.
    pub fn im_interval(&self) -> RatInterval {
        RatInterval::new(&self.center.im - &self.radius, &self.center.im + &self.radius)
    }

    /// The disc of the conjugate root.
    pub fn conj(&self) -> RootDisc {
        RootDisc {
            center: self.center.conj(),
            radius: self.radius.clone(),
        }
    }

    /// Certified `|c_i - c_j| > s * (r_i + r_j)` separation test.
    pub fn separated_from(&self, other: &RootDisc, factor: i64) -> bool {
        let d2 = self.center.sub(&other.center).norm_sq();
        let rr = (&self.radius + &other.radius) * BigRational::from_integer(BigInt::from(factor));
        d2 > &rr * &rr
    }

    pub fn intersects(&self, other: &RootDisc) -> bool {
        let d2 = self.center.sub(&other.center).norm_sq();
        let rr = &self.radius + &other.radius;
        d2 <= &rr * &rr
    }
}

fn eval_cx(p: &QPoly, z: &CxQ) -> CxQ {
    let mut acc = CxQ::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(z);
        acc.re += c;
    }
    acc
}

/// Horner evaluation with dyadic rounding after every step; only used to
/// drive the iteration, never for certification.
fn eval_cx_rounded(p: &QPoly, z: &CxQ, bits: u32) -> CxQ {
    let mut acc = CxQ::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(z).round_dyadic(bits);
        acc.re += c;
    }
    acc.round_dyadic(bits)
}

/// Weierstrass corrections with rounded arithmetic (iteration driver).
fn weierstrass_rounded(p: &QPoly, zs: &[CxQ], bits: u32) -> Option<Vec<CxQ>> {
    let mut out = Vec::with_capacity(zs.len());
    for (i, z) in zs.iter().enumerate() {
        let mut denom = CxQ::new(BigRational::one(), BigRational::zero());
        for (j, w) in zs.iter().enumerate() {
            if i == j {
                continue;
            }
            let d = z.sub(w);
            if d.is_zero() {
                return None;
            }
            denom = denom.mul(&d).round_dyadic(bits);
        }
        if denom.is_zero() {
            return None;
        }
        out.push(eval_cx_rounded(p, z, bits).div(&denom).round_dyadic(bits));
    }
    Some(out)
}

/// Exact Weierstrass corrections for the current points.
fn weierstrass(p: &QPoly, zs: &[CxQ]) -> Option<Vec<CxQ>> {
    let mut out = Vec::with_capacity(zs.len());
    for (i, z) in zs.iter().enumerate() {
        let mut denom = CxQ::new(BigRational::one(), BigRational::zero());
        for (j, w) in zs.iter().enumerate() {
            if i == j {
                continue;
            }
            let d = z.sub(w);
            if d.is_zero() {
                return None;
            }
            denom = denom.mul(&d);
        }
        out.push(eval_cx(p, z).div(&denom));
    }
    Some(out)
}

/// Options for the certified solver.
#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Target radius for every certified disc.
    pub radius_bits: u32,
    /// Require pairwise center separation `>= sep_factor * (r_i + r_j)`.
    pub sep_factor: i64,
    pub max_rounds: u32,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            radius_bits: 64,
            sep_factor: 1,
            max_rounds: 24,
        }
    }
}

/// Certified discs for all roots of a square-free polynomial with rational
/// coefficients. The discs are pairwise disjoint (with the requested
/// separation margin), each containing exactly one simple root, ordered by
/// (re, im) of the centers for determinism.
pub fn certified_roots(p: &QPoly, opts: &SolveOptions) -> Result<Vec<RootDisc>, ExactAlgError> {
    assert!(!p.is_zero(), "root solving of the zero polynomial");
    let p = p.monic();
    let d = p.degree();
    if d == 0 {
        return Ok(Vec::new());
    }
    // Linear case: exact.
    if d == 1 {
        let root = -p.coeff(0);
        return Ok(vec![RootDisc {
            center: CxQ::new(root, BigRational::zero()),
            radius: BigRational::zero(),
        }]);
    }

    let bound = p.cauchy_bound(64);
    let bound_f = bound.to_f64().unwrap_or(1e6).min(1e12);

    let mut work_bits: u32 = 64;
    let target_radius = super::field::pow2_inv(opts.radius_bits);

    // Floating-point starting points on a circle; exactness is restored by
    // the a-posteriori certification.
    let mut zs: Vec<CxQ> = (0..d)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * (k as f64) / (d as f64) + 0.41;
            let r = bound_f * 0.65 + 0.1;
            let re = BigRational::from_float(r * angle.cos()).unwrap_or_else(BigRational::zero);
            let im = BigRational::from_float(r * angle.sin()).unwrap_or_else(BigRational::zero);
            CxQ::new(re, im).round_dyadic(53)
        })
        .collect();

    for _round in 0..opts.max_rounds {
        // A batch of Durand-Kerner sweeps at the current working precision.
        let sweeps = 8 + 2 * d as u32;
        for _ in 0..sweeps {
            let Some(ws) = weierstrass_rounded(&p, &zs, work_bits) else {
                // coincident points: jitter deterministically
                for (k, z) in zs.iter_mut().enumerate() {
                    let eps = BigRational::new(BigInt::from(1 + k as i64), BigInt::one() << 20);
                    z.re += &eps;
                }
                continue;
            };
            let mut moved = false;
            for (z, w) in zs.iter_mut().zip(&ws) {
                let nz = z.sub(w).round_dyadic(work_bits);
                if nz != *z {
                    moved = true;
                }
                *z = nz;
            }
            if !moved {
                break;
            }
        }

        // Exact certification.
        if let Some(ws) = weierstrass(&p, &zs) {
            let dd = BigRational::from_integer(BigInt::from(d as i64));
            let discs: Vec<RootDisc> = zs
                .iter()
                .zip(&ws)
                .map(|(z, w)| RootDisc {
                    center: z.clone(),
                    radius: &dd * modulus_upper(w, work_bits.max(opts.radius_bits) + 8),
                })
                .collect();
            let small = discs.iter().all(|disc| disc.radius <= target_radius);
            let separated = (0..d).all(|i| {
                (i + 1..d).all(|j| discs[i].separated_from(&discs[j], opts.sep_factor))
            });
            if small && separated {
                let mut out = discs;
                out.sort_by(|a, b| {
                    (&a.center.re, &a.center.im)
                        .partial_cmp(&(&b.center.re, &b.center.im))
                        .unwrap()
                });
                return Ok(out);
            }
        }

        work_bits = (work_bits * 3) / 2 + 16;
    }
    Err(ExactAlgError::RefinementFailure {
        detail: format!(
            "root certification did not reach radius 2^-{} within {} rounds",
            opts.radius_bits, opts.max_rounds
        ),
    })
}

/// Refine the discs of a previously solved polynomial to a smaller radius,
/// keeping the same root order. The discs must be for the same square-free
/// polynomial.
pub fn refine_discs(
    p: &QPoly,
    discs: &[RootDisc],
    radius_bits: u32,
    sep_factor: i64,
) -> Result<Vec<RootDisc>, ExactAlgError> {
    let opts = SolveOptions {
        radius_bits,
        sep_factor,
        max_rounds: 30,
    };
    let fresh = certified_roots(p, &opts)?;
    // Match each old disc to the unique fresh disc intersecting it.
    let mut out = Vec::with_capacity(discs.len());
    for old in discs {
        let hits: Vec<&RootDisc> = fresh.iter().filter(|nd| nd.intersects(old)).collect();
        if hits.len() != 1 {
            return Err(ExactAlgError::RefinementFailure {
                detail: "could not match refined root discs".into(),
            });
        }
        out.push(hits[0].clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    fn qp(coeffs: &[i64]) -> QPoly {
        QPoly::from_i64_slice(coeffs)
    }

    #[test]
    fn isqrt_small() {
        assert_eq!(isqrt(&BigInt::from(0)), BigInt::from(0));
        assert_eq!(isqrt(&BigInt::from(15)), BigInt::from(3));
        assert_eq!(isqrt(&BigInt::from(16)), BigInt::from(4));
        assert_eq!(isqrt(&BigInt::from(10_000_001)), BigInt::from(3162));
    }

    #[test]
    fn sqrt_bounds_contains_value() {
        let iv = sqrt_bounds(&rat(2), 40);
        // sqrt(2) = 1.41421356...
        assert!(iv.lo <= ratio(141421357, 100000000));
        assert!(iv.hi >= ratio(141421356, 100000000));
        assert!(iv.narrower_than(40));
    }

    #[test]
    fn golden_ratio_roots_certified() {
        let p = qp(&[-1, -1, 1]); // roots phi, -1/phi
        let discs = certified_roots(&p, &SolveOptions::default()).unwrap();
        assert_eq!(discs.len(), 2);
        // sorted by real part: -0.618..., then 1.618...
        let eps = ratio(1, 1_000_000_000);
        let phi = ratio(16180339887498949, 10000000000000000);
        let neg = ratio(-6180339887498949, 10000000000000000);
        assert!((discs[1].center.re.clone() - phi).abs() < eps);
        assert!((discs[0].center.re.clone() - neg).abs() < eps);
        for d in &discs {
            assert!(d.im_interval().contains(&rat(0)));
        }
    }

    #[test]
    fn complex_quartic_roots() {
        // x^4 + 3x^2 + 1: roots ± i*phi, ± i/phi
        let p = qp(&[1, 0, 3, 0, 1]);
        let discs = certified_roots(&p, &SolveOptions::default()).unwrap();
        assert_eq!(discs.len(), 4);
        let eps = ratio(1, 1_000_000_000);
        let phi = ratio(16180339887498949, 10000000000000000);
        // every root is purely imaginary with |im| in {phi, 1/phi}
        for d in &discs {
            assert!(d.re_interval().contains(&rat(0)));
            let m = d.modulus_interval(64);
            let mid = m.midpoint();
            assert!((mid.clone() - &phi).abs() < eps || (mid - phi.recip()).abs() < eps);
        }
    }

    #[test]
    fn disc_conjugate_pairing() {
        let p = qp(&[1, 0, 1]); // x^2 + 1 = (x-i)(x+i)
        let discs = certified_roots(&p, &SolveOptions::default()).unwrap();
        assert_eq!(discs.len(), 2);
        assert!(discs[0].conj().intersects(&discs[1]));
        assert!(!discs[0].intersects(&discs[1]));
    }
}
