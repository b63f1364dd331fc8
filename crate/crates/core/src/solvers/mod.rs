//! Inverse parametrization: given a tuple, find parameters whose forward
//! evaluation reproduces it exactly.

mod quintuple;

pub use quintuple::{
    skew_complete, solve_quintuple, solve_quintuple_with_stats, solve_uv_quintuple,
    SkewCompletion,
};

use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use crate::algebra::{gcd_all, is_perfect_square, Integer};
use crate::descent::{decompose_gaussian, decompose_quaternion, normalize_odd, normalize_unit, UVSolution};
use crate::error::{Error, Result};
use crate::families::*;

fn expect_arity(t: &PythTuple, n: usize) -> Result<()> {
    if t.n() != n {
        return Err(Error::InvariantViolation(format!("expected a {n}-tuple, got {} entries", t.n())));
    }
    Ok(())
}

/// Exact halving of a quantity the construction guarantees to be even.
fn half_even(x: Integer, what: &str) -> Integer {
    assert!(x.is_even(), "{what} must be even, got {x}");
    x / 2
}

pub fn solve_triple(t: &PythTuple) -> Result<TripleParams> {
    expect_arity(t, 3)?;
    let zero = Integer::zero();
    if t.is_zero() {
        return Ok(TripleParams { variant: TripleVariant::F1, y0: zero.clone(), y1: zero.clone(), y2: zero });
    }
    let x = t.entries();
    // x3 != 0 for any nonzero triple
    let y0 = gcd_all(x) * x[2].signum();
    let p: Vec<Integer> = x.iter().map(|e| e / &y0).collect();
    let (variant, even_leg, odd_leg) = if p[1].is_odd() {
        (TripleVariant::F1, &p[0], &p[1])
    } else {
        (TripleVariant::F2, &p[1], &p[0])
    };
    let roots = is_perfect_square(&((&p[2] + odd_leg) / 2))
        .zip(is_perfect_square(&((&p[2] - odd_leg) / 2)));
    if let Some((y1, mut y2)) = roots {
        if even_leg.is_negative() {
            y2 = -y2;
        }
        let params = TripleParams { variant, y0: y0.clone(), y1, y2 };
        if eval_triple(&params) == *t {
            return Ok(params);
        }
    }
    brute_force_triple(t)
}

fn brute_force_triple(t: &PythTuple) -> Result<TripleParams> {
    let bound = t.entries()[2].abs();
    let mut y0 = -bound.clone();
    while y0 <= bound {
        if !y0.is_zero() {
            let mut y1 = -bound.clone();
            while y1 <= bound {
                let mut y2 = -bound.clone();
                while y2 <= bound {
                    for variant in [TripleVariant::F1, TripleVariant::F2] {
                        let p = TripleParams { variant, y0: y0.clone(), y1: y1.clone(), y2: y2.clone() };
                        if eval_triple(&p) == *t {
                            return Ok(p);
                        }
                    }
                    y2 += 1;
                }
                y1 += 1;
            }
        }
        y0 += 1;
    }
    Err(Error::InvariantViolation(format!("no triple parameters found for {:?}", t.entries())))
}

/// Descent over `Z[i]`, then `c` made odd. `y0` is odd unless `w = 0`.
pub fn solve_uv_quadruple(w: &UVSolution) -> Result<QuadUVParams> {
    if w.k() != 2 {
        return Err(Error::InvariantViolation(format!("expected 2 squares, got {}", w.k())));
    }
    if w.is_zero() {
        return Ok(QuadUVParams::from_i64(&[0; 5]));
    }
    let r = normalize_odd(decompose_gaussian(w)?);
    Ok(QuadUVParams {
        y0: r.c,
        y1: r.a.re,
        y2: r.a.im,
        y3: r.b.re,
        y4: r.b.im,
    })
}

pub fn solve_quadruple(t: &PythTuple) -> Result<QuadParams> {
    expect_arity(t, 4)?;
    let QuadUVParams { y0, y1, y2, y3, y4 } = solve_uv_quadruple(&t.to_uv())?;
    // y0 odd, so y1 + .. + y4 = u + v = 2 x4 (mod 2)
    let z = half_even(&y4 - &y1 - &y2 - &y3, "y4 - y1 - y2 - y3");
    Ok(QuadParams { y0, y1, y2, y3, z })
}

/// Descent over the Lipschitz quaternions, then `c` made a unit.
/// `y0` is `+-1` unless `w = 0`.
pub fn solve_uv_sextuple(w: &UVSolution) -> Result<SextUVParams> {
    if w.k() != 4 {
        return Err(Error::InvariantViolation(format!("expected 4 squares, got {}", w.k())));
    }
    if w.is_zero() {
        return Ok(SextUVParams::from_i64(&[0; 9]));
    }
    let r = normalize_unit(decompose_quaternion(w)?);
    let [y1, y2, y3, y4] = r.a.into_coords();
    let [y5, y6, y7, y8] = r.b.into_coords();
    Ok(SextUVParams { y0: r.c, y1, y2, y3, y4, y5, y6, y7, y8 })
}

pub fn solve_sextuple(t: &PythTuple) -> Result<SextParams> {
    expect_arity(t, 6)?;
    let SextUVParams { y0, y1, y2, y3, y4, y5, y6, y7, y8 } = solve_uv_sextuple(&t.to_uv())?;
    let z = half_even(&y8 - &y1 - &y2 - &y3 - &y4 - &y5 - &y6 - &y7, "y8 - (y1 + .. + y7)");
    Ok(SextParams { y0, y1, y2, y3, y4, y5, y6, y7, z })
}

pub fn solve_descartes(q: &DescartesQuadruple) -> Result<DescartesParams> {
    let QuadUVParams { y0, y1, y2, y3, y4 } = solve_uv_quadruple(&descartes_to_uv(q)?)?;
    Ok(DescartesParams { y0, y1, y2, y3, y4 })
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn t(xs: &[i64]) -> PythTuple {
        PythTuple::from_i64(xs).unwrap()
    }

    #[test]
    fn triples() {
        let p = solve_triple(&t(&[0, 0, 0])).unwrap();
        assert_eq!(p, TripleParams::new(TripleVariant::F1, 0, 0, 0));
        assert_eq!(solve_triple(&t(&[4, 3, 5])).unwrap(), TripleParams::new(TripleVariant::F1, 1, 2, 1));
        let p = solve_triple(&t(&[-3, -4, -5])).unwrap();
        assert!(p.y0.is_negative());
        assert_eq!(eval_triple(&p), t(&[-3, -4, -5]));
        for x in [[6, 8, 10], [0, 7, -7], [-7, 0, 7], [20, -21, 29], [-15, 8, -17]] {
            assert_eq!(eval_triple(&solve_triple(&t(&x)).unwrap()), t(&x));
        }
        assert!(solve_triple(&t(&[1, 2, 2, 3])).is_err());
    }

    #[test]
    fn uv_quadruples() {
        let w = UVSolution::zero(2);
        assert_eq!(solve_uv_quadruple(&w).unwrap(), QuadUVParams::from_i64(&[0; 5]));
        let w = UVSolution::from_i64(&[11, -2], 5, 25).unwrap();
        let p = solve_uv_quadruple(&w).unwrap();
        assert_eq!(eval_uv_quadruple(&p), w);
        assert!(p.y0.is_odd());
        let w = UVSolution::from_i64(&[6, 8], 20, 5).unwrap();
        let p = solve_uv_quadruple(&w).unwrap();
        assert!(p.y0.is_odd());
        assert_eq!(eval_uv_quadruple(&p), w);
    }

    #[test]
    fn quadruples() {
        assert_eq!(solve_quadruple(&t(&[0, 0, 0, 0])).unwrap(), QuadParams::from_i64(&[0; 5]));
        for x in [[1, 2, 2, 3], [2, 3, 6, 7], [2, 3, 6, -7], [0, 0, 4, 4], [11, -2, -10, 15]] {
            assert_eq!(eval_quadruple(&solve_quadruple(&t(&x)).unwrap()), t(&x));
        }
    }

    #[test]
    fn uv_sextuples() {
        assert_eq!(solve_uv_sextuple(&UVSolution::zero(4)).unwrap(), SextUVParams::from_i64(&[0; 9]));
        for (xs, u, v) in [([1, 1, 1, 1], 2, 2), ([3, 2, -1, 0], 1, 14), ([0, 0, 0, 0], 0, -5)] {
            let w = UVSolution::from_i64(&xs, u, v).unwrap();
            let p = solve_uv_sextuple(&w).unwrap();
            assert!(p.y0.abs() == int(1));
            assert_eq!(eval_uv_sextuple(&p), w);
        }
    }

    #[test]
    fn sextuples() {
        assert_eq!(solve_sextuple(&PythTuple::zero(6)).unwrap(), SextParams::from_i64(&[0; 9]));
        let target = t(&[1, 1, 1, 1, 0, 2]);
        assert_eq!(eval_sextuple(&solve_sextuple(&target).unwrap()), target);
        assert!(PythTuple::new([1, 2, 3, 4, 5, 7].map(int).to_vec()).is_err());
    }

    #[test]
    fn descartes() {
        let zero = DescartesQuadruple::from_i64([0; 4]).unwrap();
        assert_eq!(solve_descartes(&zero).unwrap(), DescartesParams::from_i64(&[0; 5]));
        for b in [[1, 1, 0, 0], [-1, 2, 2, 3], [6, 3, 23, 2]] {
            let q = DescartesQuadruple::from_i64(b).unwrap();
            assert_eq!(eval_descartes(&solve_descartes(&q).unwrap()), q);
        }
    }
}
