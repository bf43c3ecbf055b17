//! Complex numbers over an exact real field: `K(i)` as pairs.
//!
//! Used by the flag search, where eigenvalues are genuinely complex; real and
//! imaginary parts live in a shared real algebraic field.

use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use super::field::{ExactField, OrderedExactField};

/// `re + i * im` over an exact real field.
#[derive(Debug, Clone, PartialEq)]
pub struct Cx<K: ExactField> {
    pub re: K,
    pub im: K,
}

impl<K: ExactField> Cx<K> {
    pub fn new(re: K, im: K) -> Self {
        Cx { re, im }
    }

    pub fn real(re: K) -> Self {
        Cx {
            re,
            im: K::zero(),
        }
    }

    pub fn i() -> Self {
        Cx {
            re: K::zero(),
            im: K::one(),
        }
    }

    pub fn conj(&self) -> Self {
        Cx {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn norm_sq(&self) -> K {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }
}

impl<K: ExactField> Add for Cx<K> {
    type Output = Cx<K>;
    fn add(self, rhs: Cx<K>) -> Cx<K> {
        Cx::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<K: ExactField> Sub for Cx<K> {
    type Output = Cx<K>;
    fn sub(self, rhs: Cx<K>) -> Cx<K> {
        Cx::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl<K: ExactField> Mul for Cx<K> {
    type Output = Cx<K>;
    fn mul(self, rhs: Cx<K>) -> Cx<K> {
        let re = self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone();
        let im = self.re * rhs.im + self.im * rhs.re;
        Cx::new(re, im)
    }
}

impl<K: ExactField> Neg for Cx<K> {
    type Output = Cx<K>;
    fn neg(self) -> Cx<K> {
        Cx::new(-self.re, -self.im)
    }
}

impl<K: ExactField> num_traits::Zero for Cx<K> {
    fn zero() -> Self {
        Cx::new(K::zero(), K::zero())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl<K: ExactField> num_traits::One for Cx<K> {
    fn one() -> Self {
        Cx::new(K::one(), K::zero())
    }
}

impl<K: ExactField> ExactField for Cx<K> {
    fn invert(&self) -> Self {
        let n = self.norm_sq();
        assert!(!n.is_zero(), "inverse of complex zero");
        let ninv = n.invert();
        Cx::new(self.re.clone() * ninv.clone(), -(self.im.clone() * ninv))
    }

    fn from_rat(q: &BigRational) -> Self {
        Cx::real(K::from_rat(q))
    }
}

impl<K: OrderedExactField> Cx<K> {
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    #[allow(unused_imports)]
    use num_traits::{One, Zero};
    #[allow(unused_imports)]
    use crate::exactalg::field::ExactField as _;
    use num_rational::BigRational;

    type C = Cx<BigRational>;

    #[test]
    fn complex_field_ops() {
        let i = C::i();
        assert_eq!(i.clone() * i.clone(), -C::one());
        let z = C::new(crate::rat(3), crate::rat(4));
        let inv = z.invert();
        assert_eq!(z * inv, C::one());
    }
}
