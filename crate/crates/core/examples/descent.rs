//! Rank-one decomposition of x1^2 + .. + xk^2 = uv over Z[i] and the quaternions.

use pythparam::descent::{
    decompose_gaussian_traced, decompose_quaternion_traced, normalize_odd, normalize_unit,
};
use pythparam::UVSolution;

fn main() {
    let w = UVSolution::from_i64(&[11, -2], 5, 25).unwrap();
    let (r, trace) = decompose_gaussian_traced(&w).unwrap();
    println!("{:?} -> c = {}, a = {:?}, b = {:?}", w.to_flat(), r.c, r.a, r.b);
    println!("  u per round: {trace:?}");
    let r = normalize_odd(r);
    println!("  odd c: c = {}, a = {:?}, b = {:?}", r.c, r.a, r.b);
    assert_eq!(r.reconstruct(), w);

    let w = UVSolution::from_i64(&[1, 1, 1, 1], 2, 2).unwrap();
    let (r, trace) = decompose_quaternion_traced(&w).unwrap();
    println!("{:?} -> c = {}, a = {:?}, b = {:?} (rounds {trace:?})", w.to_flat(), r.c, r.a, r.b);

    let w = UVSolution::from_i64(&[6, 0, 9, 12], 3, 87).unwrap();
    let r = decompose_quaternion_traced(&w).unwrap().0;
    println!("{:?} -> c = {}", w.to_flat(), r.c);
    let r = normalize_unit(r);
    println!("{:?} -> c = {}, a = {:?}, b = {:?}", w.to_flat(), r.c, r.a, r.b);
    assert_eq!(r.reconstruct(), w);
}
