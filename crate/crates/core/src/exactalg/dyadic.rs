//! Directed dyadic floating-point arithmetic: `m * 2^e` with a mantissa
//! capped at a working precision. No gcd reductions anywhere, which is what
//! makes the certified sign screens cheap.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// `m * 2^e`.
#[derive(Debug, Clone)]
pub struct Dy {
    pub m: BigInt,
    pub e: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dir {
    Down,
    Up,
}

impl Dy {
    pub fn zero() -> Dy {
        Dy { m: BigInt::zero(), e: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn sign(&self) -> Ordering {
        if self.m.is_zero() {
            Ordering::Equal
        } else if self.m.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Truncate the mantissa to `sig` bits, rounding in the given direction.
    /// BigInt right-shift rounds toward negative infinity, which is exactly
    /// the `Down` direction; `Up` is obtained by negation.
    fn round(mut self, sig: u32, dir: Dir) -> Dy {
        let bits = self.m.bits();
        if bits <= sig as u64 {
            return self;
        }
        let ex = (bits - sig as u64) as usize;
        match dir {
            Dir::Down => self.m = &self.m >> ex,
            Dir::Up => self.m = -((-&self.m) >> ex),
        }
        self.e += ex as i64;
        self
    }

    pub fn from_rational(q: &BigRational, sig: u32, dir: Dir) -> Dy {
        if q.numer().is_zero() {
            return Dy::zero();
        }
        let nb = q.numer().bits() as i64;
        let db = q.denom().bits() as i64;
        let shift = sig as i64 + 2 - (nb - db);
        // m ~ q * 2^shift
        let (num, den) = if shift >= 0 {
            (q.numer() << shift as usize, q.denom().clone())
        } else {
            (q.numer().clone(), q.denom() << (-shift) as usize)
        };
        let (quo, rem) = num_integer::Integer::div_rem(&num, &den);
        let m = match dir {
            Dir::Down => {
                if rem.is_negative() {
                    quo - 1
                } else {
                    quo
                }
            }
            Dir::Up => {
                if rem.is_positive() {
                    quo + 1
                } else {
                    quo
                }
            }
        };
        Dy { m, e: -shift }
    }

    pub fn to_rational(&self) -> BigRational {
        if self.e >= 0 {
            BigRational::from_integer(&self.m << self.e as usize)
        } else {
            BigRational::new(self.m.clone(), BigInt::from(1) << (-self.e) as usize)
        }
    }

    pub fn mul(&self, other: &Dy, sig: u32, dir: Dir) -> Dy {
        Dy {
            m: &self.m * &other.m,
            e: self.e + other.e,
        }
        .round(sig, dir)
    }

    pub fn add(&self, other: &Dy, sig: u32, dir: Dir) -> Dy {
        let e = self.e.min(other.e);
        let ma = &self.m << (self.e - e) as usize;
        let mb = &other.m << (other.e - e) as usize;
        Dy { m: ma + mb, e }.round(sig, dir)
    }

    pub fn neg(&self) -> Dy {
        Dy {
            m: -self.m.clone(),
            e: self.e,
        }
    }
}

/// Outward-rounded dyadic interval.
#[derive(Debug, Clone)]
pub struct DyInterval {
    pub lo: Dy,
    pub hi: Dy,
}

impl DyInterval {
    pub fn point_zero() -> DyInterval {
        DyInterval {
            lo: Dy::zero(),
            hi: Dy::zero(),
        }
    }

    pub fn from_rational(q: &BigRational, sig: u32) -> DyInterval {
        DyInterval {
            lo: Dy::from_rational(q, sig, Dir::Down),
            hi: Dy::from_rational(q, sig, Dir::Up),
        }
    }

    pub fn add(&self, other: &DyInterval, sig: u32) -> DyInterval {
        DyInterval {
            lo: self.lo.add(&other.lo, sig, Dir::Down),
            hi: self.hi.add(&other.hi, sig, Dir::Up),
        }
    }

    pub fn mul(&self, other: &DyInterval, sig: u32) -> DyInterval {
        let cands = [
            (&self.lo, &other.lo),
            (&self.lo, &other.hi),
            (&self.hi, &other.lo),
            (&self.hi, &other.hi),
        ];
        let mut lo: Option<Dy> = None;
        let mut hi: Option<Dy> = None;
        for (a, b) in cands {
            let down = a.mul(b, sig, Dir::Down);
            let up = a.mul(b, sig, Dir::Up);
            lo = Some(match lo {
                None => down,
                Some(cur) => {
                    if dy_lt(&down, &cur) {
                        down
                    } else {
                        cur
                    }
                }
            });
            hi = Some(match hi {
                None => up,
                Some(cur) => {
                    if dy_lt(&cur, &up) {
                        up
                    } else {
                        cur
                    }
                }
            });
        }
        DyInterval {
            lo: lo.unwrap(),
            hi: hi.unwrap(),
        }
    }

    pub fn sign(&self) -> Option<Ordering> {
        if self.lo.sign() == Ordering::Greater {
            return Some(Ordering::Greater);
        }
        if self.hi.sign() == Ordering::Less {
            return Some(Ordering::Less);
        }
        if self.lo.is_zero() && self.hi.is_zero() {
            return Some(Ordering::Equal);
        }
        None
    }
}

fn dy_lt(a: &Dy, b: &Dy) -> bool {
    // compare a < b without building rationals
    let e = a.e.min(b.e);
    let ma = &a.m << (a.e - e) as usize;
    let mb = &b.m << (b.e - e) as usize;
    ma < mb
}

/// Certified sign of `sum coeffs[k] x^k` at a rational point, through a
/// dyadic interval Horner screen. `None` when the screen cannot decide at
/// this precision.
pub fn horner_sign_screen(
    coeffs: &[BigRational],
    x: &BigRational,
    sig: u32,
) -> Option<Ordering> {
    let xiv = DyInterval::from_rational(x, sig);
    let mut acc = DyInterval::point_zero();
    for c in coeffs.iter().rev() {
        let civ = DyInterval::from_rational(c, sig);
        acc = acc.mul(&xiv, sig).add(&civ, sig);
    }
    match acc.sign() {
        Some(Ordering::Equal) => None, // exactly-zero screen is not a proof
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    #[test]
    fn directed_rounding_brackets_value() {
        let q = ratio(1, 3);
        let lo = Dy::from_rational(&q, 32, Dir::Down).to_rational();
        let hi = Dy::from_rational(&q, 32, Dir::Up).to_rational();
        assert!(lo <= q && q <= hi);
        assert!(hi - lo < ratio(1, 1 << 30));
    }

    #[test]
    fn horner_screen_signs() {
        // p(x) = x^2 - 2 at 1 (negative) and 2 (positive)
        let coeffs = vec![rat(-2), rat(0), rat(1)];
        assert_eq!(
            horner_sign_screen(&coeffs, &rat(1), 96),
            Some(std::cmp::Ordering::Less)
        );
        assert_eq!(
            horner_sign_screen(&coeffs, &rat(2), 96),
            Some(std::cmp::Ordering::Greater)
        );
        // at a near-root the coarse screen may refuse: that is fine
        let near = ratio(141421356237, 100000000000);
        let s = horner_sign_screen(&coeffs, &near, 8);
        assert!(s.is_none() || s == Some(std::cmp::Ordering::Less));
    }
}
