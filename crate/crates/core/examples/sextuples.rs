//! Sextuples through the four-square uv family.

use pythparam::families::{eval_sextuple, eval_sextuple_h, eval_uv_sextuple, SextUVParams};
use pythparam::solvers::{solve_sextuple, solve_uv_sextuple};
use pythparam::{PythTuple, UVSolution};

fn main() {
    let w = UVSolution::from_i64(&[1, 1, 1, 1], 2, 2).unwrap();
    let p = solve_uv_sextuple(&w).unwrap();
    println!("uv {:?} <- {}", w.to_flat(), serde_json::to_string(&p).unwrap());
    assert_eq!(eval_uv_sextuple(&p), w);

    let t = PythTuple::from_i64(&[1, 1, 1, 1, 0, 2]).unwrap();
    let p = solve_sextuple(&t).unwrap();
    println!("{:?} <- {}", t.entries(), serde_json::to_string(&p).unwrap());
    assert_eq!(eval_sextuple(&p), t);

    // The classical form only reaches sextuples with even legs.
    let h = eval_sextuple_h(&SextUVParams::from_i64(&[1, 1, 0, 0, 0, 1, 1, 0, 0]));
    println!("classical form at (1; 1,0,0,0, 1,1,0,0): {:?}", h.entries());
}
