//! Rank-one decomposition of determinant-zero Hermitian 2x2 matrices over
//! `Z[i]` and over the Lipschitz quaternions.
//!
//! A solution of `x_1^2 + ... + x_k^2 = u v` is viewed as the Hermitian
//! matrix `[[u, x], [x*, v]]`. Elementary translations `E12(l)` and the
//! swap permutation act by `w -> h* w h`; the accumulated transform `G`
//! keeps `w_original = G* w_current G`, so once the current matrix is
//! `diag(c, 0)` the first row of `G` is the pair `(a, b)`.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{centered_rem, four_squares, gcd_all, GaussianInt, Integer, LipschitzQuaternion};
use crate::error::{Error, Result};
use crate::json::{decimal, decimal_vec};

/// Integer vector `(x_1..x_k, u, v)` with `x_1^2 + ... + x_k^2 = u v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawUv")]
pub struct UVSolution {
    #[serde(rename = "x", with = "decimal_vec")]
    xs: Vec<Integer>,
    #[serde(with = "decimal")]
    u: Integer,
    #[serde(with = "decimal")]
    v: Integer,
}

#[derive(Deserialize)]
struct RawUv {
    #[serde(with = "decimal_vec")]
    x: Vec<Integer>,
    #[serde(with = "decimal")]
    u: Integer,
    #[serde(with = "decimal")]
    v: Integer,
}

impl TryFrom<RawUv> for UVSolution {
    type Error = Error;
    fn try_from(raw: RawUv) -> Result<Self> {
        UVSolution::new(raw.x, raw.u, raw.v)
    }
}

impl UVSolution {
    /// Checks the defining equation.
    pub fn new(xs: Vec<Integer>, u: Integer, v: Integer) -> Result<Self> {
        let lhs: Integer = xs.iter().map(|x| x * x).sum();
        if lhs != &u * &v {
            return Err(Error::InvariantViolation(format!(
                "sum of squares of {:?} is {lhs}, but u*v = {}",
                xs.iter().map(ToString::to_string).collect::<Vec<_>>(),
                &u * &v
            )));
        }
        Ok(Self { xs, u, v })
    }

    pub fn from_i64(xs: &[i64], u: i64, v: i64) -> Result<Self> {
        Self::new(xs.iter().map(|&x| Integer::from(x)).collect(), u.into(), v.into())
    }

    pub fn zero(k: usize) -> Self {
        Self { xs: vec![Integer::zero(); k], u: Integer::zero(), v: Integer::zero() }
    }

    /// Number of squares on the left-hand side.
    pub fn k(&self) -> usize {
        self.xs.len()
    }

    pub fn xs(&self) -> &[Integer] {
        &self.xs
    }

    pub fn u(&self) -> &Integer {
        &self.u
    }

    pub fn v(&self) -> &Integer {
        &self.v
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero() && self.xs.iter().all(Zero::is_zero)
    }

    /// Flat form `(x_1, .., x_k, u, v)`.
    pub fn to_flat(&self) -> Vec<Integer> {
        let mut out = self.xs.clone();
        out.push(self.u.clone());
        out.push(self.v.clone());
        out
    }

    pub fn from_flat(flat: Vec<Integer>) -> Result<Self> {
        if flat.len() < 3 {
            return Err(Error::Parse(format!("uv solution needs at least 3 entries, got {}", flat.len())));
        }
        let mut xs = flat;
        let v = xs.pop().unwrap();
        let u = xs.pop().unwrap();
        Self::new(xs, u, v)
    }

    fn expect_k(&self, k: usize) -> Result<()> {
        if self.k() != k {
            return Err(Error::InvariantViolation(format!(
                "expected {k} squares, got {}",
                self.k()
            )));
        }
        Ok(())
    }

    /// Splits off `c = +-gcd` so that the remainder is primitive with `u, v >= 0`.
    fn primitive_part(&self) -> (Integer, Vec<Integer>, Integer, Integer) {
        let g = gcd_all(self.xs.iter().chain([&self.u, &self.v]));
        let negative = self.u.is_negative() || (self.u.is_zero() && self.v.is_negative());
        let c = if negative { -g } else { g };
        let xs = self.xs.iter().map(|x| x / &c).collect();
        (c.clone(), xs, &self.u / &c, &self.v / &c)
    }
}

/// `(c, a, b)` with `u = c N(a)`, `v = c N(b)`, `x_1 + x_2 i = c conj(a) b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankOneGaussian {
    pub c: Integer,
    pub a: GaussianInt,
    pub b: GaussianInt,
}

impl RankOneGaussian {
    pub fn zero() -> Self {
        Self { c: Integer::zero(), a: GaussianInt::one(), b: GaussianInt::zero() }
    }

    pub fn reconstruct(&self) -> UVSolution {
        let x = (&self.a.conj() * &self.b).scale(&self.c);
        UVSolution {
            xs: vec![x.re, x.im],
            u: &self.c * self.a.norm(),
            v: &self.c * self.b.norm(),
        }
    }
}

/// `(c, a, b)` with `u = c N(a)`, `v = c N(b)` and
/// `x_1 + x_2 i + x_3 j + x_4 k = c b* a`.
///
/// With `a = y1 + y2 i + y3 j + y4 k` and `b = y5 + .. + y8 k` the coordinates
/// of `b* a` are exactly the four bilinear forms of the nine-parameter
/// sextuple family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankOneQuaternion {
    pub c: Integer,
    pub a: LipschitzQuaternion,
    pub b: LipschitzQuaternion,
}

impl RankOneQuaternion {
    pub fn zero() -> Self {
        Self { c: Integer::zero(), a: LipschitzQuaternion::one(), b: LipschitzQuaternion::zero() }
    }

    pub fn reconstruct(&self) -> UVSolution {
        let x = (&self.b.conj() * &self.a).scale(&self.c);
        UVSolution {
            xs: x.into_coords().to_vec(),
            u: &self.c * self.a.reduced_norm(),
            v: &self.c * self.b.reduced_norm(),
        }
    }
}

/// `u` at the end of every reduction round, for progress checks.
pub type DescentTrace = Vec<Integer>;

pub fn decompose_gaussian(w: &UVSolution) -> Result<RankOneGaussian> {
    decompose_gaussian_traced(w).map(|(r, _)| r)
}

pub fn decompose_gaussian_traced(w: &UVSolution) -> Result<(RankOneGaussian, DescentTrace)> {
    w.expect_k(2)?;
    if w.is_zero() {
        return Ok((RankOneGaussian::zero(), Vec::new()));
    }
    let (c, xs, mut u, mut v) = w.primitive_part();
    let mut x = GaussianInt::new(xs[0].clone(), xs[1].clone());
    let mut g = [
        [GaussianInt::one(), GaussianInt::zero()],
        [GaussianInt::zero(), GaussianInt::one()],
    ];
    let mut trace = Vec::new();

    let swap = |x: &mut GaussianInt, u: &mut Integer, v: &mut Integer, g: &mut [[GaussianInt; 2]; 2]| {
        std::mem::swap(u, v);
        *x = x.conj();
        g.swap(0, 1);
    };

    if u.is_zero() || (!v.is_zero() && v < u) {
        swap(&mut x, &mut u, &mut v, &mut g);
    }
    loop {
        let re = centered_rem(&x.re, &u);
        let im = centered_rem(&x.im, &u);
        let lambda = GaussianInt::new((&re - &x.re) / &u, (&im - &x.im) / &u);
        // row0 <- row0 - lambda * row1
        let [row0, row1] = &mut g;
        for (a, b) in row0.iter_mut().zip(row1.iter()) {
            *a = &*a - &(&lambda * b);
        }
        x = GaussianInt::new(re, im);
        v = x.norm() / &u;
        trace.push(u.clone());
        if v.is_zero() {
            break;
        }
        swap(&mut x, &mut u, &mut v, &mut g);
    }
    debug_assert!(u.is_one());
    let [[a, b], _] = g;
    Ok((RankOneGaussian { c, a, b }, trace))
}

pub fn decompose_quaternion(w: &UVSolution) -> Result<RankOneQuaternion> {
    decompose_quaternion_traced(w).map(|(r, _)| r)
}

pub fn decompose_quaternion_traced(w: &UVSolution) -> Result<(RankOneQuaternion, DescentTrace)> {
    type Q = LipschitzQuaternion;
    w.expect_k(4)?;
    if w.is_zero() {
        return Ok((RankOneQuaternion::zero(), Vec::new()));
    }
    let (c, xs, mut u, mut v) = w.primitive_part();
    // Work with the transposed matrix, whose off-diagonal entry is x*; then
    // the terminal factorization gives x* = c a* b, i.e. x = c b* a.
    let mut x = Q::from_coords([xs[0].clone(), xs[1].clone(), xs[2].clone(), xs[3].clone()]).conj();
    let mut g = [[Q::one(), Q::zero()], [Q::zero(), Q::one()]];
    let mut trace = Vec::new();

    let swap = |x: &mut Q, u: &mut Integer, v: &mut Integer, g: &mut [[Q; 2]; 2]| {
        std::mem::swap(u, v);
        *x = x.conj();
        g.swap(0, 1);
    };

    if u.is_zero() || (!v.is_zero() && v < u) {
        swap(&mut x, &mut u, &mut v, &mut g);
    }
    let special = loop {
        let reduced: [Integer; 4] = std::array::from_fn(|m| centered_rem(x.coords()[m], &u));
        let lambda = Q::from_coords(std::array::from_fn(|m| (&reduced[m] - x.coords()[m]) / &u));
        let [row0, row1] = &mut g;
        for (a, b) in row0.iter_mut().zip(row1.iter()) {
            *a = &*a - &(&lambda * b);
        }
        x = Q::from_coords(reduced);
        v = x.reduced_norm() / &u;
        trace.push(u.clone());
        if v.is_zero() {
            break false;
        }
        if v == u {
            // Only possible with u = v = 2 and x = 1 + i + j + k: the
            // centered residues of a primitive solution are all +1 here.
            debug_assert!(u == Integer::from(2) && x == Q::new(1, 1, 1, 1));
            break true;
        }
        swap(&mut x, &mut u, &mut v, &mut g);
    };

    let [[g00, g01], [g10, g11]] = g;
    let (a, b) = if special {
        // [[2, 1+i+j+k], [1-i-j-k, 2]] = (1-i, 1+j)* (1-i, 1+j)
        let r0 = Q::new(1, -1, 0, 0);
        let r1 = Q::new(1, 0, 1, 0);
        (&r0 * &g00 + &r1 * &g10, &r0 * &g01 + &r1 * &g11)
    } else {
        debug_assert!(u.is_one());
        (g00, g01)
    };
    Ok((RankOneQuaternion { c, a, b }, trace))
}

/// Makes `c` odd (or zero) by trading factors of two for `(1+i)(a, b)`.
pub fn normalize_odd(r: RankOneGaussian) -> RankOneGaussian {
    if r.c.is_zero() {
        return RankOneGaussian::zero();
    }
    let one_plus_i = GaussianInt::new(1, 1);
    let RankOneGaussian { mut c, mut a, mut b } = r;
    while c.is_even() {
        c /= 2;
        a = &one_plus_i * &a;
        b = &one_plus_i * &b;
    }
    RankOneGaussian { c, a, b }
}

/// Makes `c` a unit (or zero) by writing `|c| = N(d)` and replacing
/// `(a, b)` with `d (a, b)`.
pub fn normalize_unit(r: RankOneQuaternion) -> RankOneQuaternion {
    if r.c.is_zero() {
        return RankOneQuaternion::zero();
    }
    if r.c.abs().is_one() {
        return r;
    }
    let d = LipschitzQuaternion::from_coords(
        four_squares(&r.c.abs()).expect("absolute value is nonnegative"),
    );
    RankOneQuaternion { c: r.c.signum(), a: &d * &r.a, b: &d * &r.b }
}
