//! Three-square uv solutions and quintuples.
//!
//! A quintuple solution is a four-square solution with `x4 = 0`, which
//! means `s = (-y8, y7, -y6, y5)` is orthogonal to `(y1, .., y4)`. Writing
//! `(y1, .., y4) = z0 z` with `z` unimodular, `s` is then an integer
//! combination of the six vectors `z_j e_i - z_i e_j`.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::solve_uv_sextuple;
use crate::algebra::{cofactor_vector, gcd_all, Integer};
use crate::descent::UVSolution;
use crate::error::{Error, Result};
use crate::families::{
    eval_quintuple, quint_to_uv_params, PythTuple, QuintParams, QuintUVParams, SextUVParams,
};
use crate::json::decimal;

/// Coefficients of `s` on the basis `z_j e_i - z_i e_j`, `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct SkewCompletion {
    #[serde(with = "decimal")]
    pub z12: Integer,
    #[serde(with = "decimal")]
    pub z13: Integer,
    #[serde(with = "decimal")]
    pub z14: Integer,
    #[serde(with = "decimal")]
    pub z23: Integer,
    #[serde(with = "decimal")]
    pub z24: Integer,
    #[serde(with = "decimal")]
    pub z34: Integer,
}

impl SkewCompletion {
    /// `sum z_ij (z_j e_i - z_i e_j)`.
    pub fn apply(&self, z: &[Integer; 4]) -> [Integer; 4] {
        let Self { z12, z13, z14, z23, z24, z34 } = self;
        let [z1, z2, z3, z4] = z;
        [
            z12 * z2 + z13 * z3 + z14 * z4,
            -(z12 * z1) + z23 * z3 + z24 * z4,
            -(z13 * z1) - z23 * z2 + z34 * z4,
            -(z14 * z1) - z24 * z2 - z34 * z3,
        ]
    }

    /// The antisymmetric matrix `s p^T - p s^T`, which maps `z` to
    /// `s (p.z) - p (s.z) = s` when `p.z = 1` and `s.z = 0`.
    fn from_cofactor(s: &[Integer; 4], p: &[Integer; 4]) -> Self {
        let m = |i: usize, j: usize| &s[i] * &p[j] - &p[i] * &s[j];
        Self { z12: m(0, 1), z13: m(0, 2), z14: m(0, 3), z23: m(1, 2), z24: m(1, 3), z34: m(2, 3) }
    }
}

fn dot(a: &[Integer], b: &[Integer]) -> Integer {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn skew_complete(z: &[Integer; 4], s: &[Integer; 4]) -> Result<SkewCompletion> {
    let p = cofactor_vector(z)?;
    let d = dot(s, z);
    if !d.is_zero() {
        return Err(Error::NotOrthogonal { dot: d.to_string() });
    }
    Ok(SkewCompletion::from_cofactor(s, &to_array(p)))
}

fn to_array(v: Vec<Integer>) -> [Integer; 4] {
    v.try_into().expect("four coordinates")
}

/// Everything needed to assemble three-square parameters, kept apart so the
/// quintuple fit can retry with a different cofactor.
struct Decomposition {
    y0: Integer,
    z0: Integer,
    z: [Integer; 4],
    s: [Integer; 4],
    p: [Integer; 4],
}

impl Decomposition {
    fn assemble(&self, p: &[Integer; 4]) -> QuintUVParams {
        let sk = SkewCompletion::from_cofactor(&self.s, p);
        let [z1, z2, z3, z4] = self.z.clone();
        QuintUVParams {
            y0: self.y0.clone(),
            z0: self.z0.clone(),
            z1,
            z2,
            z3,
            z4,
            z12: sk.z12,
            z13: sk.z13,
            z14: sk.z14,
            z23: sk.z23,
            z24: sk.z24,
            z34: sk.z34,
        }
    }
}

fn decompose(w: &UVSolution) -> Result<Option<Decomposition>> {
    if w.k() != 3 {
        return Err(Error::InvariantViolation(format!("expected 3 squares, got {}", w.k())));
    }
    if w.is_zero() {
        return Ok(None);
    }
    let mut xs = w.xs().to_vec();
    xs.push(Integer::zero());
    let four = UVSolution::new(xs, w.u().clone(), w.v().clone())?;
    let SextUVParams { y0, y1, y2, y3, y4, y5, y6, y7, y8 } = solve_uv_sextuple(&four)?;
    let a = [y1, y2, y3, y4];
    let s = [-y8, y7, -y6, y5];

    let (z0, z) = match a.iter().find(|y| !y.is_zero()) {
        Some(lead) => {
            let z0 = gcd_all(&a) * lead.signum();
            let z = a.clone().map(|y| y / &z0);
            (z0, z)
        }
        None => {
            // (y1..y4) = 0: only u = 0, x = 0 lands here.
            let [s1, s2, s3, s4] = s.clone();
            let cand = [s2, -s1, s4, -s3];
            let g = gcd_all(&cand);
            let z = if g.is_zero() {
                [Integer::one(), Integer::zero(), Integer::zero(), Integer::zero()]
            } else {
                cand.map(|c| c / &g)
            };
            (Integer::zero(), z)
        }
    };
    let d = dot(&s, &z);
    if !d.is_zero() {
        return Err(Error::InvariantViolation(format!(
            "fourth bilinear form does not vanish (s.z = {d})"
        )));
    }
    let p = to_array(cofactor_vector(&z)?);
    Ok(Some(Decomposition { y0, z0, z, s, p }))
}

pub fn solve_uv_quintuple(w: &UVSolution) -> Result<QuintUVParams> {
    Ok(match decompose(w)? {
        Some(d) => d.assemble(&d.p),
        None => QuintUVParams::from_i64(&[0; 12]),
    })
}

pub fn solve_quintuple(t: &PythTuple) -> Result<QuintParams> {
    solve_quintuple_with_stats(t).map(|(p, _)| p)
}

/// Like [`solve_quintuple`], also returning how many repair moves were
/// needed (0 when the first cofactor already fits a substitution row).
pub fn solve_quintuple_with_stats(t: &PythTuple) -> Result<(QuintParams, usize)> {
    if t.n() != 5 {
        return Err(Error::InvariantViolation(format!("expected a 5-tuple, got {} entries", t.n())));
    }
    let Some(d) = decompose(&t.to_uv())? else {
        return Ok((QuintParams::default(), 0));
    };

    let z = &d.z;
    let mut candidates = vec![d.p.clone()];
    for i in 0..4 {
        for j in i + 1..4 {
            for sign in [1i64, -1] {
                let mut p = d.p.clone();
                p[i] += &z[j] * sign;
                p[j] -= &z[i] * sign;
                candidates.push(p);
            }
        }
    }
    for (repairs, p) in candidates.iter().enumerate() {
        let uvp = d.assemble(p);
        if let Some(params) = fit_substitution_row(&uvp) {
            debug_assert_eq!(quint_to_uv_params(&params), uvp);
            let out = eval_quintuple(&params);
            if out == *t {
                return Ok((params, repairs));
            }
        }
    }
    Err(Error::UnreachableParams(format!(
        "tuple {:?}: z0 = {}, z = {:?}, s = {:?}, y0 = {}",
        t.entries().iter().map(ToString::to_string).collect::<Vec<_>>(),
        d.z0,
        d.z.iter().map(ToString::to_string).collect::<Vec<_>>(),
        d.s.iter().map(ToString::to_string).collect::<Vec<_>>(),
        d.y0
    )))
}

/// Inverts the eight linear substitutions selected by `t in {0,1}^3`.
///
/// The row is fixed by the parities of `z_i - z4`; the row's one remaining
/// evenness constraint holds iff `y1 + .. + y8` is even. Returns `None` if
/// that constraint fails.
fn fit_substitution_row(q: &QuintUVParams) -> Option<QuintParams> {
    let two = Integer::from(2);
    let z4 = &q.z4;
    let offsets = [&q.z1, &q.z2, &q.z3].map(|zi| zi - z4);
    let delta = offsets.clone().map(|o| o.mod_floor(&two));
    let [d1, d2, d3] = [0, 1, 2].map(|i| (&offsets[i] - &delta[i]) / &two);
    let bits = delta.map(|b| b.is_one());

    let halve = |x: Integer| -> Option<Integer> { x.is_even().then(|| x / 2) };
    let (mut w0, mut w12, mut w13, w14, w23, mut w24, w34) = (
        q.z0.clone(),
        q.z12.clone(),
        q.z13.clone(),
        q.z14.clone(),
        q.z23.clone(),
        q.z24.clone(),
        q.z34.clone(),
    );
    let t = match bits {
        [false, false, false] => [0, 0, 0],
        [true, true, true] => {
            w0 = halve(&q.z0 - &w14 - &w24 - &w34)?;
            [0, 0, 1]
        }
        [false, false, true] => {
            w0 = halve(&q.z0 - &w13 - &w23 - &w34)?;
            [0, 1, 0]
        }
        [false, true, false] => {
            w0 = halve(&q.z0 - &w12 - &w23 - &w24)?;
            [1, 0, 0]
        }
        [true, false, false] => {
            w0 = halve(&q.z0 - &w12 - &w13 - &w14)?;
            [0, 1, 1]
        }
        [true, true, false] => {
            w13 = halve(&q.z13 - &w23 - &w24 - &w14)?;
            [1, 0, 1]
        }
        [true, false, true] => {
            w12 = halve(&q.z12 - &w23 - &w14 - &w34)?;
            [1, 1, 0]
        }
        [false, true, true] => {
            w24 = halve(&q.z24 - &w12 - &w13 - &w34)?;
            [1, 1, 1]
        }
    };
    let [t1, t2, t3] = t.map(Integer::from);
    Some(QuintParams {
        sign: q.y0.clone(),
        w0,
        w12,
        w13,
        w14,
        w23,
        w24,
        w34,
        t1,
        t2,
        t3,
        d1,
        d2,
        d3,
        w4: z4.clone(),
    })
}
