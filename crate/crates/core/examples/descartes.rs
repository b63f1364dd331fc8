//! Integer Descartes quadruples: 2(b1^2 + .. + b4^2) = (b1 + .. + b4)^2.

use pythparam::families::{descartes_to_uv, eval_descartes, uv_to_descartes, DescartesParams};
use pythparam::solvers::solve_descartes;
use pythparam::verify::enumerate_descartes;
use pythparam::DescartesQuadruple;

fn main() {
    let q = eval_descartes(&DescartesParams::from_i64(&[1, 1, 2, 3, 4]));
    println!("(1; 1, 2, 3, 4) -> {:?}", q.to_flat());
    let w = descartes_to_uv(&q).unwrap();
    println!("  as a uv solution: {:?}", w.to_flat());
    assert_eq!(uv_to_descartes(&w).unwrap(), q);

    // Curvatures of the outer circle and three inner circles of a gasket.
    for b in [[-1, 2, 2, 3], [-2, 3, 6, 7], [-6, 11, 14, 15], [0, 0, 1, 1]] {
        let q = DescartesQuadruple::from_i64(b).unwrap();
        let p = solve_descartes(&q).unwrap();
        println!("{b:?} <- {}", serde_json::to_string(&p).unwrap());
        assert_eq!(eval_descartes(&p), q);
    }

    let n = enumerate_descartes(10).count();
    println!("{n} quadruples with |b_i| <= 10");
}
