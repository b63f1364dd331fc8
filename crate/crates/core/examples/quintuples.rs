//! Quintuples: the three-square uv family, skew completion, and the
//! fourteen-variable integer-valued family.

use pythparam::families::{eval_quintuple, quint_to_uv_params, quintuple_suppressed_x4, QuintParams};
use pythparam::solvers::{skew_complete, solve_quintuple_with_stats, solve_uv_quintuple};
use pythparam::{int, PythTuple, UVSolution};

fn main() {
    let z = [2, 3, 5, 7].map(int);
    let s = [7, 0, 0, -2].map(int);
    let c = skew_complete(&z, &s).unwrap();
    println!("skew completion of s = {s:?} over z = {z:?}: {}", serde_json::to_string(&c).unwrap());
    assert_eq!(c.apply(&z), s);

    let w = UVSolution::from_i64(&[1, 2, 3], 2, 7).unwrap();
    let p = solve_uv_quintuple(&w).unwrap();
    println!("uv {:?} <- {}", w.to_flat(), serde_json::to_string(&p).unwrap());
    assert_eq!(quintuple_suppressed_x4(&p), int(0));

    for x in [[1, 2, 2, 4, 5], [1, 1, 1, 1, -2], [0, 3, 4, 12, 13], [2, 4, 5, 6, 9]] {
        let t = PythTuple::from_i64(&x).unwrap();
        let (p, repairs) = solve_quintuple_with_stats(&t).unwrap();
        println!("{x:?} <- {} ({repairs} repairs)", serde_json::to_string(&p).unwrap());
        assert_eq!(eval_quintuple(&p), t);
    }

    // Any integers are allowed, including selector values far from 0 and 1.
    let p = QuintParams::from_i64(&[-1, 3, 1, -2, 0, 5, 1, 1, 17, -40, 6, 2, 0, -3, 1]);
    let t = eval_quintuple(&p);
    println!("at t = (17, -40, 6): {:?}", t.entries());
    println!("  via z = {}", serde_json::to_string(&quint_to_uv_params(&p)).unwrap());
}
