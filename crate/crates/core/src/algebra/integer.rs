//! Number-theory helpers on unbounded integers.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Signed integer of unbounded magnitude.
pub type Integer = BigInt;

/// Shorthand for building an [`Integer`] from a machine integer.
pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

/// Extended Euclid: returns `(g, s, t)` with `g = gcd(a, b) >= 0` and `s*a + t*b = g`.
///
/// `gcd(0, 0)` is `0` with coefficients `(0, 0)`.
pub fn ext_gcd(a: &Integer, b: &Integer) -> (Integer, Integer, Integer) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (Integer::one(), Integer::zero());
    let (mut old_t, mut t) = (Integer::zero(), Integer::one());
    while !r.is_zero() {
        let q = &old_r / &r;
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else if old_r.is_zero() {
        (Integer::zero(), Integer::zero(), Integer::zero())
    } else {
        (old_r, old_s, old_t)
    }
}

/// Nonnegative gcd of all entries; `0` for an empty or all-zero slice.
pub fn gcd_all<'a, I>(values: I) -> Integer
where
    I: IntoIterator<Item = &'a Integer>,
{
    values
        .into_iter()
        .fold(Integer::zero(), |acc, v| acc.gcd(v))
}

/// Unimodularity certificate: a vector `p` with `p . z = 1`.
///
/// Coordinates are folded left to right through [`ext_gcd`], so the
/// output is deterministic.
pub fn cofactor_vector(z: &[Integer]) -> Result<Vec<Integer>> {
    let mut g = Integer::zero();
    let mut p: Vec<Integer> = Vec::with_capacity(z.len());
    for zi in z {
        let (next, s, t) = ext_gcd(&g, zi);
        for pj in p.iter_mut() {
            *pj *= &s;
        }
        p.push(t);
        g = next;
    }
    if !g.is_one() {
        return Err(Error::NotUnimodular { gcd: g.to_string() });
    }
    Ok(p)
}

/// Nonnegative square root of `n` if `n` is a perfect square.
pub fn is_perfect_square(n: &Integer) -> Option<Integer> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Writes `n >= 0` as `d1^2 + d2^2 + d3^2 + d4^2` with `d1 >= d2 >= d3 >= d4 >= 0`.
///
/// Depth-first search with `d1` descending from `floor(sqrt(n))`; the first
/// hit in that order is returned.
pub fn four_squares(n: &Integer) -> Result<[Integer; 4]> {
    if n.is_negative() {
        return Err(Error::NegativeInput(n.to_string()));
    }
    let mut out = Vec::with_capacity(4);
    let found = squares_search(n, 4, &n.sqrt(), &mut out);
    // Lagrange: every nonnegative integer is a sum of four squares.
    assert!(found, "four-squares search exhausted for {n}");
    let mut it = out.into_iter();
    Ok(std::array::from_fn(|_| it.next().unwrap()))
}

fn squares_search(n: &Integer, count: u32, cap: &Integer, out: &mut Vec<Integer>) -> bool {
    if count == 1 {
        return match is_perfect_square(n) {
            Some(r) if &r <= cap => {
                out.push(r);
                true
            }
            _ => false,
        };
    }
    if n.is_zero() {
        out.extend(std::iter::repeat_with(Integer::zero).take(count as usize));
        return true;
    }
    if count == 3 && is_legendre_excluded(n) {
        return false;
    }
    let k = Integer::from(count);
    let mut d = n.sqrt().min(cap.clone());
    // With entries descending, the leading one satisfies count * d^2 >= n.
    while &k * &d * &d >= *n {
        let rest = n - &d * &d;
        out.push(d.clone());
        if squares_search(&rest, count - 1, &d, out) {
            return true;
        }
        out.pop();
        if d.is_zero() {
            break;
        }
        d -= 1;
    }
    false
}

/// `n = 4^a (8b + 7)`: not a sum of three squares.
fn is_legendre_excluded(n: &Integer) -> bool {
    if n.is_zero() {
        return false;
    }
    let mut m = n.clone();
    while (&m % 4u32).is_zero() {
        m /= 4u32;
    }
    (&m % 8u32) == Integer::from(7)
}

/// Representative of `x mod m` in `(-m/2, m/2]`, for `m > 0`.
pub fn centered_rem(x: &Integer, m: &Integer) -> Integer {
    debug_assert!(m.is_positive());
    let r = x.mod_floor(m);
    if Integer::from(2) * &r > *m {
        r - m
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Integer> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn ext_gcd_examples() {
        assert_eq!(ext_gcd(&int(0), &int(0)), (int(0), int(0), int(0)));
        let (g, s, t) = ext_gcd(&int(12), &int(18));
        assert_eq!(g, int(6));
        assert_eq!(s * 12 + t * 18, int(6));
        let (g, s, t) = ext_gcd(&int(-5), &int(7));
        assert_eq!(g, int(1));
        assert_eq!(s * -5 + t * 7, int(1));
        assert_eq!(ext_gcd(&int(-4), &int(0)).0, int(4));
    }

    #[test]
    fn cofactor_examples() {
        assert_eq!(cofactor_vector(&v(&[1, 0, 0, 0])).unwrap(), v(&[1, 0, 0, 0]));
        assert_eq!(cofactor_vector(&v(&[2, 3])).unwrap(), v(&[-1, 1]));
        let z = v(&[6, 10, 15]);
        let p = cofactor_vector(&z).unwrap();
        let dot: Integer = p.iter().zip(&z).map(|(a, b)| a * b).sum();
        assert_eq!(dot, int(1));
        assert!(matches!(
            cofactor_vector(&v(&[2, 4])),
            Err(Error::NotUnimodular { .. })
        ));
        assert!(cofactor_vector(&v(&[0, 0])).is_err());
    }

    #[test]
    fn four_squares_examples() {
        assert_eq!(four_squares(&int(0)).unwrap(), [int(0), int(0), int(0), int(0)]);
        assert_eq!(four_squares(&int(7)).unwrap(), [int(2), int(1), int(1), int(1)]);
        assert_eq!(four_squares(&int(4)).unwrap(), [int(2), int(0), int(0), int(0)]);
        let d = four_squares(&int(310)).unwrap();
        let s: Integer = d.iter().map(|x| x * x).sum();
        assert_eq!(s, int(310));
        assert!(matches!(four_squares(&int(-1)), Err(Error::NegativeInput(_))));
    }

    #[test]
    fn four_squares_large() {
        let n: Integer = "123456789012345678901".parse().unwrap();
        let d = four_squares(&n).unwrap();
        assert_eq!(d.iter().map(|x| x * x).sum::<Integer>(), n);
    }

    #[test]
    fn perfect_square_examples() {
        assert_eq!(is_perfect_square(&int(0)), Some(int(0)));
        assert_eq!(is_perfect_square(&int(225)), Some(int(15)));
        assert_eq!(is_perfect_square(&int(2)), None);
        assert_eq!(is_perfect_square(&int(-4)), None);
    }

    #[test]
    fn centered_rem_range() {
        for m in 1..9i64 {
            for x in -20..20i64 {
                let r = centered_rem(&int(x), &int(m));
                assert!(int(2) * &r <= int(m) && int(2) * &r > int(-m));
                assert!(((int(x) - r) % m).is_zero());
            }
        }
    }
}
