//! Exact ordered-field abstraction.
//!
//! All cone geometry, linear algebra and Sturm machinery is generic over
//! [`OrderedExactField`] so that the same code runs over the rationals and
//! over real algebraic extensions `Q(theta)`.

use std::cmp::Ordering;
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A field with exact (never rounded) arithmetic.
pub trait ExactField:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    /// Multiplicative inverse. Panics on zero.
    fn invert(&self) -> Self;
    fn from_rat(q: &BigRational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rat(&BigRational::from_integer(BigInt::from(n)))
    }

    fn div(&self, other: &Self) -> Self {
        self.clone() * other.invert()
    }

    /// Rescale a coefficient vector by a positive constant to control
    /// coefficient growth (signs must be preserved). The default keeps the
    /// vector unchanged; the rational field divides by the positive content.
    fn normalize_positive_scale(coeffs: &[Self]) -> Vec<Self> {
        coeffs.to_vec()
    }
}

/// An exact field with a decidable ordering compatible with the reals.
pub trait OrderedExactField: ExactField {
    /// Exact sign of the element as a real number.
    fn sign(&self) -> Ordering;

    /// A rational enclosure of the element with width at most `2^-prec_bits`
    /// (exact elements may return a point interval).
    fn enclosure(&self, prec_bits: u32) -> RatInterval;

    /// Exact rational value, when the element happens to be rational.
    fn to_rational(&self) -> Option<BigRational>;

    /// Certified sign of `p(x)` for the polynomial with these coefficients
    /// (ascending) at a rational point. The default evaluates exactly; fields
    /// with big scalars override this with certified low-precision screens.
    fn eval_sign_at_rational(coeffs: &[Self], x: &BigRational) -> Ordering {
        let xe = Self::from_rat(x);
        let mut acc = Self::zero();
        for c in coeffs.iter().rev() {
            acc = acc * xe.clone() + c.clone();
        }
        acc.sign()
    }

    fn is_pos(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    fn is_neg(&self) -> bool {
        self.sign() == Ordering::Less
    }

    fn abs_val(&self) -> Self {
        if self.is_neg() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn cmp_exact(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).sign()
    }
}

impl ExactField for BigRational {
    fn invert(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        self.recip()
    }

    fn from_rat(q: &BigRational) -> Self {
        q.clone()
    }

    fn normalize_positive_scale(coeffs: &[Self]) -> Vec<Self> {
        use num_integer::Integer;
        let mut denom_lcm = BigInt::from(1);
        let mut numer_gcd = BigInt::from(0);
        for c in coeffs {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(denom_lcm.clone())).to_integer())
            .collect();
        for c in &ints {
            numer_gcd = numer_gcd.gcd(c);
        }
        if numer_gcd.is_zero() {
            return coeffs.to_vec();
        }
        ints.iter()
            .map(|c| BigRational::from_integer(c / &numer_gcd))
            .collect()
    }
}

impl OrderedExactField for BigRational {
    fn sign(&self) -> Ordering {
        if <BigRational as Zero>::is_zero(self) {
            Ordering::Equal
        } else if self.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    fn enclosure(&self, _prec_bits: u32) -> RatInterval {
        RatInterval::point(self.clone())
    }

    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }

    /// Dyadic interval Horner screens at escalating precision; exact
    /// evaluation only when the screens cannot separate from zero.
    fn eval_sign_at_rational(coeffs: &[Self], x: &BigRational) -> Ordering {
        for sig in [128u32, 512] {
            if let Some(s) = super::dyadic::horner_sign_screen(coeffs, x, sig) {
                return s;
            }
        }
        let mut acc = BigRational::zero();
        for c in coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc.sign()
    }
}

/// Largest multiple of `2^-bits` that is `<= q`.
pub fn round_down(q: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::from(1) << bits as usize;
    let v = (q * BigRational::from_integer(scale.clone())).floor().to_integer();
    BigRational::new(v, scale)
}

/// Smallest multiple of `2^-bits` that is `>= q`.
pub fn round_up(q: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::from(1) << bits as usize;
    let v = (q * BigRational::from_integer(scale.clone())).ceil().to_integer();
    BigRational::new(v, scale)
}

/// A closed interval with exact rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RatInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi, "interval endpoints out of order");
        RatInterval { lo, hi }
    }

    pub fn point(v: BigRational) -> Self {
        RatInterval { lo: v.clone(), hi: v }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains(&self, v: &BigRational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn contains_interval(&self, other: &RatInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    /// Strictly positive over the whole interval.
    pub fn is_strictly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_strictly_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn intersect(&self, other: &RatInterval) -> Option<RatInterval> {
        let lo = if self.lo >= other.lo { self.lo.clone() } else { other.lo.clone() };
        let hi = if self.hi <= other.hi { self.hi.clone() } else { other.hi.clone() };
        if lo <= hi {
            Some(RatInterval { lo, hi })
        } else {
            None
        }
    }

    pub fn add(&self, other: &RatInterval) -> RatInterval {
        RatInterval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &RatInterval) -> RatInterval {
        RatInterval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn neg(&self) -> RatInterval {
        RatInterval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn mul(&self, other: &RatInterval) -> RatInterval {
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = cands[0].clone();
        let mut hi = cands[0].clone();
        for c in &cands[1..] {
            if *c < lo {
                lo = c.clone();
            }
            if *c > hi {
                hi = c.clone();
            }
        }
        RatInterval { lo, hi }
    }

    pub fn scale(&self, c: &BigRational) -> RatInterval {
        if c.is_negative() {
            RatInterval {
                lo: &self.hi * c,
                hi: &self.lo * c,
            }
        } else {
            RatInterval {
                lo: &self.lo * c,
                hi: &self.hi * c,
            }
        }
    }

    /// Enclosure of the absolute value.
    pub fn abs(&self) -> RatInterval {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            let hi = if self.hi.abs() >= self.lo.abs() {
                self.hi.abs()
            } else {
                self.lo.abs()
            };
            RatInterval {
                lo: BigRational::from_integer(BigInt::from(0)),
                hi,
            }
        }
    }

    /// True if `width <= 2^-bits`.
    pub fn narrower_than(&self, bits: u32) -> bool {
        let bound = BigRational::new(BigInt::from(1), BigInt::from(1) << bits.min(4096) as usize);
        self.width() <= bound
    }
}

/// `2^-bits` as a rational.
pub fn pow2_inv(bits: u32) -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(1) << (bits.min(1 << 20)) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    #[test]
    fn interval_mul_signs() {
        let a = RatInterval::new(rat(-2), rat(3));
        let b = RatInterval::new(rat(-1), rat(4));
        let p = a.mul(&b);
        assert_eq!(p.lo, rat(-8));
        assert_eq!(p.hi, rat(12));
    }

    #[test]
    fn interval_abs() {
        let a = RatInterval::new(rat(-5), rat(2));
        let ab = a.abs();
        assert_eq!(ab.lo, rat(0));
        assert_eq!(ab.hi, rat(5));
        assert!(a.contains_zero());
        assert!(!ab.is_strictly_positive());
    }

    #[test]
    fn rational_field_ops() {
        let x = ratio(3, 4);
        assert_eq!(x.invert(), ratio(4, 3));
        assert_eq!(x.sign(), std::cmp::Ordering::Greater);
        assert!(RatInterval::point(rat(0)).contains_zero());
    }
}
