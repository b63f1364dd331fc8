//! Exhaustive enumerators over bounded boxes, in lexicographic order.

use num_integer::Roots;

use crate::algebra::Integer;
use crate::descent::UVSolution;
use crate::families::{DescartesQuadruple, PythTuple};

/// Lexicographic walk over `[lo, hi]^dims`, optionally with the first
/// coordinate pinned (one shard of a parallel run).
#[derive(Debug, Clone)]
pub(crate) struct BoxWalk {
    lo: i64,
    hi: i64,
    cur: Option<Vec<i64>>,
    pinned: bool,
}

impl BoxWalk {
    pub(crate) fn new(dims: usize, lo: i64, hi: i64, first: Option<i64>) -> Self {
        let cur = if dims == 0 || lo > hi {
            None
        } else {
            let mut v = vec![lo; dims];
            if let Some(f) = first {
                v[0] = f;
            }
            Some(v)
        };
        Self { lo, hi, cur, pinned: first.is_some() }
    }
}

impl Iterator for BoxWalk {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        let out = self.cur.clone()?;
        let cur = self.cur.as_mut().unwrap();
        let stop = if self.pinned { 1 } else { 0 };
        let mut i = cur.len();
        loop {
            if i == stop {
                self.cur = None;
                break;
            }
            i -= 1;
            if cur[i] < self.hi {
                cur[i] += 1;
                break;
            }
            cur[i] = self.lo;
        }
        Some(out)
    }
}

fn isqrt_exact(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

fn ints(v: &[i64]) -> Vec<Integer> {
    v.iter().map(|&x| Integer::from(x)).collect()
}

/// Pythagorean n-tuples with every leg in `[-bound, bound]`, both signs of
/// the last entry, in lexicographic order.
pub fn enumerate_pyth(n: usize, bound: u32) -> impl Iterator<Item = PythTuple> {
    enumerate_pyth_shard(n, bound, None)
}

pub(crate) fn enumerate_pyth_shard(
    n: usize,
    bound: u32,
    first: Option<i64>,
) -> impl Iterator<Item = PythTuple> {
    assert!(n >= 3, "arity must be at least 3");
    let b = i64::from(bound);
    BoxWalk::new(n - 1, -b, b, first).flat_map(|legs| {
        let s: i64 = legs.iter().map(|x| x * x).sum();
        let roots = match isqrt_exact(s) {
            None => vec![],
            Some(0) => vec![0],
            Some(r) => vec![-r, r],
        };
        roots.into_iter().map(move |last| {
            let mut e = ints(&legs);
            e.push(Integer::from(last));
            PythTuple::new(e).expect("enumerated tuple is valid")
        })
    })
}

/// Solutions of `x_1^2 + .. + x_k^2 = u v` with all entries in
/// `[-bound, bound]`, ordered by `(x, u, v)`.
pub fn enumerate_uv(k: usize, bound: u32) -> impl Iterator<Item = UVSolution> {
    enumerate_uv_shard(k, bound, None)
}

pub(crate) fn enumerate_uv_shard(
    k: usize,
    bound: u32,
    first: Option<i64>,
) -> impl Iterator<Item = UVSolution> {
    assert!(k >= 1, "need at least one square");
    let b = i64::from(bound);
    BoxWalk::new(k, -b, b, first).flat_map(move |xs| {
        let s: i64 = xs.iter().map(|x| x * x).sum();
        let mut pairs = Vec::new();
        for u in -b..=b {
            if u == 0 {
                if s == 0 {
                    pairs.extend((-b..=b).map(|v| (0, v)));
                }
            } else if s % u == 0 && (s / u).abs() <= b {
                pairs.push((u, s / u));
            }
        }
        pairs.into_iter().map(move |(u, v)| {
            UVSolution::new(ints(&xs), u.into(), v.into()).expect("enumerated solution is valid")
        })
    })
}

/// Integer solutions of `2(b1^2 + .. + b4^2) = (b1 + .. + b4)^2` with every
/// `|b_i| <= bound`, in lexicographic order.
///
/// For fixed `b1, b2, b3` the relation is quadratic in `b4` with roots
/// `b1 + b2 + b3 +- 2 sqrt(b1 b2 + b2 b3 + b3 b1)`.
pub fn enumerate_descartes(bound: u32) -> impl Iterator<Item = DescartesQuadruple> {
    enumerate_descartes_shard(bound, None)
}

pub(crate) fn enumerate_descartes_shard(
    bound: u32,
    first: Option<i64>,
) -> impl Iterator<Item = DescartesQuadruple> {
    let b = i64::from(bound);
    BoxWalk::new(3, -b, b, first).flat_map(move |head| {
        let (b1, b2, b3) = (head[0], head[1], head[2]);
        let s = b1 + b2 + b3;
        let roots = match isqrt_exact(b1 * b2 + b2 * b3 + b3 * b1) {
            None => vec![],
            Some(0) => vec![s],
            Some(r) => vec![s - 2 * r, s + 2 * r],
        };
        roots.into_iter().filter(move |b4| b4.abs() <= b).map(move |b4| {
            DescartesQuadruple::from_i64([b1, b2, b3, b4]).expect("enumerated quadruple is valid")
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_walk_order_and_shards() {
        let all: Vec<_> = BoxWalk::new(2, -1, 1, None).collect();
        assert_eq!(all.len(), 9);
        assert_eq!(all[0], vec![-1, -1]);
        assert_eq!(all[8], vec![1, 1]);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        let sharded: Vec<_> = (-1..=1).flat_map(|f| BoxWalk::new(2, -1, 1, Some(f))).collect();
        assert_eq!(sharded, all);
    }

    #[test]
    fn pyth_examples() {
        let zero: Vec<_> = enumerate_pyth(3, 0).collect();
        assert_eq!(zero, vec![PythTuple::zero(3)]);
        let quads: Vec<_> = enumerate_pyth(4, 2).collect();
        assert!(quads.contains(&PythTuple::from_i64(&[1, 2, 2, 3]).unwrap()));
        assert!(quads.contains(&PythTuple::from_i64(&[1, 2, 2, -3]).unwrap()));
        let sext: Vec<_> = enumerate_pyth(6, 1).collect();
        assert!(sext.contains(&PythTuple::from_i64(&[1, 1, 1, 1, 0, 2]).unwrap()));
        assert!(sext.contains(&PythTuple::from_i64(&[-1, 1, 0, -1, 1, -2]).unwrap()));
        let flat: Vec<Vec<Integer>> = sext.iter().map(|t| t.entries().to_vec()).collect();
        assert!(flat.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn uv_examples() {
        let small: Vec<_> = enumerate_uv(2, 1).collect();
        assert!(small.contains(&UVSolution::from_i64(&[1, 0], 1, 1).unwrap()));
        assert!(small.contains(&UVSolution::from_i64(&[0, 0], 1, 0).unwrap()));
        let mut oracle = 0;
        for x1 in -5i64..=5 {
            for x2 in -5i64..=5 {
                for u in -5i64..=5 {
                    for v in -5i64..=5 {
                        if x1 * x1 + x2 * x2 == u * v {
                            oracle += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(enumerate_uv(2, 5).count(), oracle);
        assert!(enumerate_uv(4, 2).any(|w| w == UVSolution::from_i64(&[1, 1, 1, 1], 2, 2).unwrap()));
    }

    #[test]
    fn descartes_examples() {
        let zero: Vec<_> = enumerate_descartes(0).collect();
        assert_eq!(zero, vec![DescartesQuadruple::from_i64([0; 4]).unwrap()]);
        assert!(enumerate_descartes(3).any(|q| q == DescartesQuadruple::from_i64([-1, 2, 2, 3]).unwrap()));
        let one: Vec<_> = enumerate_descartes(1).collect();
        for q in [[1, 1, 0, 0], [0, 1, 0, 1], [0, 0, 1, 1], [1, 0, 0, 1]] {
            assert!(one.contains(&DescartesQuadruple::from_i64(q).unwrap()));
        }
        let mut oracle = Vec::new();
        for b1 in -4i64..=4 {
            for b2 in -4i64..=4 {
                for b3 in -4i64..=4 {
                    for b4 in -4i64..=4 {
                        let s = b1 + b2 + b3 + b4;
                        if 2 * (b1 * b1 + b2 * b2 + b3 * b3 + b4 * b4) == s * s {
                            oracle.push(DescartesQuadruple::from_i64([b1, b2, b3, b4]).unwrap());
                        }
                    }
                }
            }
        }
        assert_eq!(enumerate_descartes(4).collect::<Vec<_>>(), oracle);
    }
}
