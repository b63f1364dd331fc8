#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::Zero;
use pythparam::family::{Params, Tuple, TupleShape};
use pythparam::{int, Family, Integer};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rand_int(rng: &mut impl Rng, range: i64) -> Integer {
    int(rng.gen_range(-range..=range))
}

/// A random parameter vector for `family` with entries in `[-range, range]`;
/// selector fields (triple variant, quintuple sign) get valid values.
pub fn random_params(family: Family, rng: &mut impl Rng, range: i64) -> Params {
    let n = family.param_fields().len();
    let mut v: Vec<Integer> = (0..n).map(|_| rand_int(rng, range)).collect();
    match family {
        Family::Triple => v[0] = int(rng.gen_range(1..=2)),
        Family::Quintuple => v[0] = int(if rng.gen_bool(0.5) { 1 } else { -1 }),
        _ => {}
    }
    family.params_from_flat(&v).expect("valid random parameters")
}

/// Checks the defining equation straight from the flat entries.
pub fn satisfies_equation(shape: TupleShape, t: &Tuple) -> bool {
    let e = t.to_flat();
    let sq = |x: &BigInt| x * x;
    match shape {
        TupleShape::Pyth(n) => {
            e.len() == n && e[..n - 1].iter().map(sq).sum::<BigInt>() == sq(&e[n - 1])
        }
        TupleShape::Uv(k) => e.len() == k + 2 && e[..k].iter().map(sq).sum::<BigInt>() == &e[k] * &e[k + 1],
        TupleShape::Descartes => {
            let s: BigInt = e.iter().sum();
            e.len() == 4 && (BigInt::from(2) * e.iter().map(sq).sum::<BigInt>() - sq(&s)).is_zero()
        }
    }
}
