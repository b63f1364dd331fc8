//! Lipschitz quaternions: integer combinations of `1, i, j, k` with
//! `i^2 = j^2 = -1`, `ji = -ij`, `k = ij`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gaussian::{forward_owned, GaussianInt};
use super::integer::Integer;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LipschitzQuaternion {
    pub a: Integer,
    pub b: Integer,
    pub c: Integer,
    pub d: Integer,
}

impl LipschitzQuaternion {
    pub fn new(
        a: impl Into<Integer>,
        b: impl Into<Integer>,
        c: impl Into<Integer>,
        d: impl Into<Integer>,
    ) -> Self {
        Self { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    pub fn from_coords([a, b, c, d]: [Integer; 4]) -> Self {
        Self { a, b, c, d }
    }

    pub fn coords(&self) -> [&Integer; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn into_coords(self) -> [Integer; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::real(Integer::one())
    }

    pub fn real(a: Integer) -> Self {
        Self { a, ..Self::default() }
    }

    pub fn i() -> Self {
        Self::new(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::new(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::new(0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|c| c.is_zero())
    }

    /// The involution `a + bi + cj + dk -> a - bi - cj - dk`.
    pub fn conj(&self) -> Self {
        Self { a: self.a.clone(), b: -&self.b, c: -&self.c, d: -&self.d }
    }

    /// `a^2 + b^2 + c^2 + d^2`, which equals `w* w`.
    pub fn reduced_norm(&self) -> Integer {
        self.coords().iter().map(|&x| x * x).sum()
    }

    pub fn scale(&self, k: &Integer) -> Self {
        Self { a: &self.a * k, b: &self.b * k, c: &self.c * k, d: &self.d * k }
    }

    /// Image in `M_2(Z[i])`: `[[a + bi, c + di], [-c + di, a - bi]]`.
    pub fn to_m2(&self) -> GaussianMatrix2 {
        GaussianMatrix2([
            [
                GaussianInt::new(self.a.clone(), self.b.clone()),
                GaussianInt::new(self.c.clone(), self.d.clone()),
            ],
            [
                GaussianInt::new(-&self.c, self.d.clone()),
                GaussianInt::new(self.a.clone(), -&self.b),
            ],
        ])
    }
}

impl From<Integer> for LipschitzQuaternion {
    fn from(a: Integer) -> Self {
        Self::real(a)
    }
}

impl fmt::Display for LipschitzQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}i{:+}j{:+}k", self.a, self.b, self.c, self.d)
    }
}

impl Add for &LipschitzQuaternion {
    type Output = LipschitzQuaternion;
    fn add(self, r: &LipschitzQuaternion) -> LipschitzQuaternion {
        LipschitzQuaternion {
            a: &self.a + &r.a,
            b: &self.b + &r.b,
            c: &self.c + &r.c,
            d: &self.d + &r.d,
        }
    }
}

impl Sub for &LipschitzQuaternion {
    type Output = LipschitzQuaternion;
    fn sub(self, r: &LipschitzQuaternion) -> LipschitzQuaternion {
        LipschitzQuaternion {
            a: &self.a - &r.a,
            b: &self.b - &r.b,
            c: &self.c - &r.c,
            d: &self.d - &r.d,
        }
    }
}

impl Mul for &LipschitzQuaternion {
    type Output = LipschitzQuaternion;
    fn mul(self, r: &LipschitzQuaternion) -> LipschitzQuaternion {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&r.a, &r.b, &r.c, &r.d);
        LipschitzQuaternion {
            a: a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            b: a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            c: a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            d: a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        }
    }
}

impl Neg for &LipschitzQuaternion {
    type Output = LipschitzQuaternion;
    fn neg(self) -> LipschitzQuaternion {
        LipschitzQuaternion { a: -&self.a, b: -&self.b, c: -&self.c, d: -&self.d }
    }
}

forward_owned!(LipschitzQuaternion, Add add, Sub sub, Mul mul);

/// 2x2 matrix over the Gaussian integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianMatrix2(pub [[GaussianInt; 2]; 2]);

impl GaussianMatrix2 {
    pub fn identity() -> Self {
        Self([
            [GaussianInt::one(), GaussianInt::zero()],
            [GaussianInt::zero(), GaussianInt::one()],
        ])
    }

    pub fn det(&self) -> GaussianInt {
        let m = &self.0;
        &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0])
    }
}

impl Mul for &GaussianMatrix2 {
    type Output = GaussianMatrix2;
    fn mul(self, rhs: &GaussianMatrix2) -> GaussianMatrix2 {
        let (l, r) = (&self.0, &rhs.0);
        let entry = |i: usize, j: usize| &(&l[i][0] * &r[0][j]) + &(&l[i][1] * &r[1][j]);
        GaussianMatrix2([[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = LipschitzQuaternion;

    #[test]
    fn basis_products() {
        assert_eq!(Q::i() * Q::j(), Q::k());
        assert_eq!(Q::j() * Q::i(), -&Q::k());
        assert_eq!(Q::i() * Q::i(), Q::new(-1, 0, 0, 0));
        assert_eq!(Q::j() * Q::j(), Q::new(-1, 0, 0, 0));
        assert_eq!(Q::k() * Q::k(), Q::new(-1, 0, 0, 0));
        let w = Q::new(3, -1, 4, 1);
        assert_eq!(&w * &Q::one(), w);
        let v = Q::new(1, -1, 0, 0);
        assert_eq!(v.conj() * v, Q::new(2, 0, 0, 0));
    }

    #[test]
    fn involution() {
        assert_eq!(Q::new(1, 1, 1, 1).conj(), Q::new(1, -1, -1, -1));
        assert_eq!(Q::new(5, 0, 0, 0).conj(), Q::new(5, 0, 0, 0));
        assert_eq!((Q::i() * Q::j()).conj(), -&Q::k());
        assert_eq!((Q::i() * Q::j()).conj(), Q::j().conj() * Q::i().conj());
    }

    #[test]
    fn m2_representation() {
        assert_eq!(Q::one().to_m2(), GaussianMatrix2::identity());
        assert_eq!(Q::new(1, 1, 1, 1).to_m2().det(), GaussianInt::new(4, 0));
        assert_eq!(&Q::i().to_m2() * &Q::j().to_m2(), Q::k().to_m2());
    }
}
