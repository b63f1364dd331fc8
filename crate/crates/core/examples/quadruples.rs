//! Triples and quadruples: evaluate the families and invert them.

use pythparam::families::{eval_quadruple, eval_triple, QuadParams, TripleParams, TripleVariant};
use pythparam::solvers::{solve_quadruple, solve_triple};
use pythparam::PythTuple;

fn main() {
    let t = eval_triple(&TripleParams::new(TripleVariant::F2, 1, 2, 1));
    println!("triple at (f2; 1, 2, 1): {:?}", t.entries());

    for legs in [[3, 4, -5], [0, 7, 7], [20, 21, 29]] {
        let t = PythTuple::from_i64(&legs).unwrap();
        let p = solve_triple(&t).unwrap();
        println!("{legs:?} <- {}", serde_json::to_string(&p).unwrap());
        assert_eq!(eval_triple(&p), t);
    }

    let q = eval_quadruple(&QuadParams::from_i64(&[1, 1, 0, 0, 0]));
    println!("quadruple at (1; 1, 0, 0, 0): {:?}", q.entries());

    for x in [[1, 2, 2, 3], [2, 3, 6, -7], [0, 0, 4, 4], [8, 9, 12, 17]] {
        let t = PythTuple::from_i64(&x).unwrap();
        let p = solve_quadruple(&t).unwrap();
        println!("{x:?} <- {}", serde_json::to_string(&p).unwrap());
        assert_eq!(eval_quadruple(&p), t);
    }
}
