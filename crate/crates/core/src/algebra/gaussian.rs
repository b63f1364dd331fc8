//! Gaussian integers `Z[i]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::integer::Integer;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianInt {
    pub re: Integer,
    pub im: Integer,
}

impl GaussianInt {
    pub fn new(re: impl Into<Integer>, im: impl Into<Integer>) -> Self {
        Self { re: re.into(), im: im.into() }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self { re: Integer::one(), im: Integer::zero() }
    }

    pub fn i() -> Self {
        Self { re: Integer::zero(), im: Integer::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -&self.im }
    }

    /// `re^2 + im^2`.
    pub fn norm(&self) -> Integer {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, k: &Integer) -> Self {
        Self { re: &self.re * k, im: &self.im * k }
    }
}

impl From<Integer> for GaussianInt {
    fn from(re: Integer) -> Self {
        Self { re, im: Integer::zero() }
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}i", self.re, self.im)
    }
}

impl Add for &GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt { re: -&self.re, im: -&self.im }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(GaussianInt, Add add, Sub sub, Mul mul);
pub(crate) use forward_owned;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_expansion() {
        let p = GaussianInt::new(1, 2) * GaussianInt::new(3, 4);
        assert_eq!(p, GaussianInt::new(-5, 10));
    }

    #[test]
    fn zero_and_norm() {
        assert_eq!(GaussianInt::zero().conj(), GaussianInt::zero());
        assert_eq!(GaussianInt::zero().norm(), Integer::zero());
        assert_eq!(GaussianInt::new(1, 1).norm(), Integer::from(2));
        assert_eq!(&GaussianInt::i() * &GaussianInt::i(), GaussianInt::new(-1, 0));
    }

    #[test]
    fn norm_multiplicative_and_conj_involutive() {
        for a in -4..4 {
            for b in -4..4 {
                let g = GaussianInt::new(a, b);
                let h = GaussianInt::new(b - 1, a + 2);
                assert_eq!((&g * &h).norm(), g.norm() * h.norm());
                assert_eq!(g.conj().conj(), g);
                assert_eq!((&g * &h).conj(), &g.conj() * &h.conj());
            }
        }
    }
}
