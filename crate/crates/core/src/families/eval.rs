//! Forward evaluators. Every evaluator checks its defining equation on the
//! output and panics if it fails or if an exact halving is not exact; either
//! would be a defect in the formulas, not a user error.

use num_integer::Integer as _;

use super::params::*;
use super::tuples::{DescartesQuadruple, PythTuple};
use crate::algebra::Integer;
use crate::descent::UVSolution;

fn two() -> Integer {
    Integer::from(2)
}

fn half(x: Integer) -> Integer {
    assert!(x.is_even(), "integrality failure: {x} is odd");
    x / 2
}

fn pyth(entries: Vec<Integer>) -> PythTuple {
    PythTuple::new(entries).expect("evaluator output violates x1^2+..+x(n-1)^2 = xn^2")
}

fn uv(xs: Vec<Integer>, u: Integer, v: Integer) -> UVSolution {
    UVSolution::new(xs, u, v).expect("evaluator output violates x1^2+..+xk^2 = uv")
}

/// The four bilinear forms in `y1..y8`, i.e. the coordinates of `b* a`
/// for `a = y1 + y2 i + y3 j + y4 k`, `b = y5 + y6 i + y7 j + y8 k`.
pub(crate) fn quaternion_forms(y: &[Integer; 8]) -> [Integer; 4] {
    let [y1, y2, y3, y4, y5, y6, y7, y8] = y;
    [
        y1 * y5 + y2 * y6 + y3 * y7 + y4 * y8,
        -(y1 * y6) + y2 * y5 + y3 * y8 - y4 * y7,
        -(y1 * y7) - y2 * y8 + y3 * y5 + y4 * y6,
        -(y1 * y8) + y2 * y7 - y3 * y6 + y4 * y5,
    ]
}

fn sum_sq(ys: &[Integer]) -> Integer {
    ys.iter().map(|y| y * y).sum()
}

pub fn eval_triple(p: &TripleParams) -> PythTuple {
    let (y0, y1, y2) = (&p.y0, &p.y1, &p.y2);
    let even = y0 * two() * y1 * y2;
    let odd = y0 * (y1 * y1 - y2 * y2);
    let hyp = y0 * (y1 * y1 + y2 * y2);
    match p.variant {
        TripleVariant::F1 => pyth(vec![even, odd, hyp]),
        TripleVariant::F2 => pyth(vec![odd, even, hyp]),
    }
}

pub fn eval_uv_quadruple(p: &QuadUVParams) -> UVSolution {
    let QuadUVParams { y0, y1, y2, y3, y4 } = p;
    uv(
        vec![y0 * (y1 * y3 + y2 * y4), y0 * (y1 * y4 - y2 * y3)],
        y0 * (y1 * y1 + y2 * y2),
        y0 * (y3 * y3 + y4 * y4),
    )
}

pub fn eval_quadruple_carmichael(p: &CarmichaelParams) -> PythTuple {
    let CarmichaelParams { y0, y1, y2, y3, y4 } = p;
    let (na, nb) = (y1 * y1 + y2 * y2, y3 * y3 + y4 * y4);
    pyth(vec![
        y0 * two() * (y1 * y3 + y2 * y4),
        y0 * two() * (y1 * y4 - y2 * y3),
        y0 * (&na - &nb),
        y0 * (na + nb),
    ])
}

/// Carmichael's form at `(y0/2, y1, y2, y3, y1 + y2 + y3 + 2z)`.
pub fn eval_quadruple(p: &QuadParams) -> PythTuple {
    let QuadParams { y0, y1, y2, y3, z } = p;
    let y4 = y1 + y2 + y3 + two() * z;
    let (na, nb) = (y1 * y1 + y2 * y2, y3 * y3 + &y4 * &y4);
    pyth(vec![
        y0 * (y1 * y3 + y2 * &y4),
        y0 * (y1 * &y4 - y2 * y3),
        half(y0 * (&na - &nb)),
        half(y0 * (na + nb)),
    ])
}

pub fn eval_uv_sextuple(p: &SextUVParams) -> UVSolution {
    let y = sext_y(p);
    let forms = quaternion_forms(&y);
    uv(
        forms.iter().map(|f| &p.y0 * f).collect(),
        &p.y0 * sum_sq(&y[..4]),
        &p.y0 * sum_sq(&y[4..]),
    )
}

fn sext_y(p: &SextUVParams) -> [Integer; 8] {
    [&p.y1, &p.y2, &p.y3, &p.y4, &p.y5, &p.y6, &p.y7, &p.y8].map(Clone::clone)
}

/// The classical polynomial sextuple (not onto): legs `2 y0 * forms`,
/// `x5 = y0 (N(a) - N(b))`, `x6 = y0 (N(a) + N(b))`.
pub fn eval_sextuple_h(p: &SextUVParams) -> PythTuple {
    let y = sext_y(p);
    let (na, nb) = (sum_sq(&y[..4]), sum_sq(&y[4..]));
    let mut out: Vec<Integer> = quaternion_forms(&y).iter().map(|f| two() * &p.y0 * f).collect();
    out.push(&p.y0 * (&na - &nb));
    out.push(&p.y0 * (na + nb));
    pyth(out)
}

/// The sextuple family at `(y0/2, y1..y7, y1 + .. + y7 + 2z)`.
pub fn eval_sextuple(p: &SextParams) -> PythTuple {
    let mut y: [Integer; 8] = Default::default();
    for (slot, v) in y.iter_mut().zip([&p.y1, &p.y2, &p.y3, &p.y4, &p.y5, &p.y6, &p.y7]) {
        *slot = v.clone();
    }
    y[7] = y[..7].iter().sum::<Integer>() + two() * &p.z;
    let (na, nb) = (sum_sq(&y[..4]), sum_sq(&y[4..]));
    let mut out: Vec<Integer> = quaternion_forms(&y).iter().map(|f| &p.y0 * f).collect();
    out.push(half(&p.y0 * (&na - &nb)));
    out.push(half(&p.y0 * (na + nb)));
    pyth(out)
}

/// `y1..y8` of the three-square family (before the `y0` factor).
pub fn quint_uv_y(p: &QuintUVParams) -> [Integer; 8] {
    let QuintUVParams { z0, z1, z2, z3, z4, z12, z13, z14, z23, z24, z34, .. } = p;
    [
        z0 * z1,
        z0 * z2,
        z0 * z3,
        z0 * z4,
        -(z14 * z1) - z24 * z2 - z34 * z3,
        z13 * z1 + z23 * z2 - z34 * z4,
        -(z12 * z1) + z23 * z3 + z24 * z4,
        -(z12 * z2) - z13 * z3 - z14 * z4,
    ]
}

/// The fourth bilinear form, which the skew construction forces to zero.
pub fn quintuple_suppressed_x4(p: &QuintUVParams) -> Integer {
    let [.., x4] = quaternion_forms(&quint_uv_y(p));
    &p.y0 * x4
}

pub fn eval_uv_quintuple(p: &QuintUVParams) -> UVSolution {
    let y = quint_uv_y(p);
    let [x1, x2, x3, x4] = quaternion_forms(&y);
    assert!(num_traits::Zero::is_zero(&x4), "fourth form must vanish, got {x4}");
    uv(
        vec![&p.y0 * x1, &p.y0 * x2, &p.y0 * x3],
        &p.y0 * sum_sq(&y[..4]),
        &p.y0 * sum_sq(&y[4..]),
    )
}

/// Maps the fourteen quintuple variables to the twelve three-square
/// parameters (with `y0 = sign`). At `t in {0,1}^3` this selects one of
/// eight linear substitutions; for other `t` it is still an integer map.
pub fn quint_to_uv_params(p: &QuintParams) -> QuintUVParams {
    let QuintParams { sign, w0, w12, w13, w14, w23, w24, w34, t1, t2, t3, d1, d2, d3, w4 } = p;
    let t12 = t1 * t2;
    let t13 = t1 * t3;
    let t23 = t2 * t3;
    let t123 = &t12 * t3;
    let two = two();

    let z0 = w0 * (Integer::from(1) + t1 + t2 - &two * &t12 + t3 - &two * &t13 - &t23 + &two * &t123)
        + w12 * (t1 - &t12 - &t13 + &t23)
        + w13 * (t2 - &t12)
        + w14 * (t3 - &t13)
        + w23 * (t1 + t2 - &two * &t12 - &t13 - &t23 + &two * &t123)
        + w24 * (t1 - &t12 + t3 - &two * &t13 - &t23 + &two * &t123)
        + w34 * (t2 - &t12 + t3 - &t13 - &two * &t23 + &two * &t123);
    let z1 = &two * d1 + &t12 + t3 - &two * &t123 + w4;
    let z2 = &two * d2 + t1 - &t12 + t3 - &t13 - &t23 + &two * &t123 + w4;
    let z3 = &two * d3 + t2 + t3 - &t13 - &two * &t23 + &two * &t123 + w4;
    let z12 = w12 + (&t12 - &t123) * (w12 + w14 + w23 + w34);
    let z13 = w13 + (&t13 - &t123) * (w13 + w14 + w23 + w24);
    let z24 = w24 + &t123 * (w12 + w13 + w24 + w34);

    QuintUVParams {
        y0: sign.clone(),
        z0,
        z1,
        z2,
        z3,
        z4: w4.clone(),
        z12,
        z13,
        z14: w14.clone(),
        z23: w23.clone(),
        z24,
        z34: w34.clone(),
    }
}

/// Integer-valued quintuple family: legs `sign * forms`, and
/// `sign (N(a) -+ N(b)) / 2` for the last two entries.
pub fn eval_quintuple(p: &QuintParams) -> PythTuple {
    let q = quint_to_uv_params(p);
    let y = quint_uv_y(&q);
    let [f1, f2, f3, _] = quaternion_forms(&y);
    let (na, nb) = (sum_sq(&y[..4]), sum_sq(&y[4..]));
    let s = &q.y0;
    pyth(vec![
        s * f1,
        s * f2,
        s * f3,
        half(s * (&na - &nb)),
        half(s * (na + nb)),
    ])
}

/// Composition of the Descartes bijection with the two-square uv family.
pub fn eval_descartes(p: &DescartesParams) -> DescartesQuadruple {
    let DescartesParams { y0, y1, y2, y3, y4 } = p;
    let cross = y1 * y4 - y2 * y3;
    let (na, nb) = (y1 * y1 + y2 * y2, y3 * y3 + y4 * y4);
    let dot = y1 * y3 + y2 * y4;
    DescartesQuadruple::new([
        y0 * (&na + &nb - two() * dot + &cross),
        y0 * (na + &cross),
        y0 * (nb + &cross),
        y0 * (-&cross),
    ])
    .expect("evaluator output violates the Descartes relation")
}
