//! Exact arithmetic in Z, Z[i] and the Lipschitz quaternions.

use pythparam::algebra::{cofactor_vector, ext_gcd, four_squares, GaussianInt};
use pythparam::{int, LipschitzQuaternion};

fn main() {
    let (g, s, t) = ext_gcd(&int(240), &int(46));
    println!("gcd(240, 46) = {g} = {s}*240 + {t}*46");

    let z = [6, 10, 15].map(int);
    let p = cofactor_vector(&z).unwrap();
    println!("cofactor of {z:?}: {p:?}");

    for n in [7, 31, 1_000_000_007] {
        println!("{n} = sum of squares of {:?}", four_squares(&int(n)).unwrap());
    }

    let a = GaussianInt::new(3, 2);
    let b = GaussianInt::new(1, -4);
    println!("({a:?}) * ({b:?}) = {:?}, norms {} * {} = {}", &a * &b, a.norm(), b.norm(), (&a * &b).norm());

    let w = LipschitzQuaternion::new(1, 2, 3, 4);
    let v = LipschitzQuaternion::new(0, 1, -1, 2);
    let wv = &w * &v;
    println!("w v = {wv:?}, v w = {:?}", &v * &w);
    println!("N(wv) = {} = N(w) N(v) = {}", wv.reduced_norm(), w.reduced_norm() * v.reduced_norm());
    println!("det M2(w) = {:?}", w.to_m2().det());
}
