//! Desk-scale acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{rand_int, random_params, rng, satisfies_equation};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use pythparam::algebra::{four_squares, gcd_all, GaussianInt};
use pythparam::families::{descartes_defect, eval_uv_sextuple, SextUVParams};
use pythparam::family::{Params, Tuple};
use pythparam::solvers::{skew_complete, solve_uv_sextuple};
use pythparam::verify::{enumerate_pyth, enumerate_uv, roundtrip_report, CoverageReport};
use pythparam::{int, Family, Integer, LipschitzQuaternion, PythTuple};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok { Ok(()) } else { Err(msg.into()) }
}

fn coverage(family: Family, bound: u32, limit: Duration) -> Result<CoverageReport, String> {
    let start = Instant::now();
    let report = roundtrip_report(family, bound);
    let elapsed = start.elapsed();
    ensure(report.verified(), format!("{} failures, first: {:?}", report.failure_count, report.failures.first()))?;
    ensure(report.total > 0, "empty enumeration")?;
    ensure(elapsed <= limit, format!("took {elapsed:?}, limit {limit:?}"))?;
    Ok(report)
}

fn summary(r: &CoverageReport) -> String {
    format!("{} tuples at bound {} in {} ms", r.total, r.bound, r.elapsed_ms)
}

fn y0_of(p: &Params) -> Integer {
    p.to_flat()[0].clone()
}

fn quadruple_coverage() -> Check {
    let r = coverage(Family::Quadruple, 40, Duration::from_secs(60))?;
    Ok(summary(&r))
}

fn uv2_coverage() -> Check {
    let r = coverage(Family::Uv2, 60, Duration::from_secs(60))?;
    for w in enumerate_uv(2, 60).filter(|w| !w.is_zero()) {
        let p = Family::Uv2.solve(&Tuple::Uv(w.clone())).map_err(|e| e.to_string())?;
        ensure(y0_of(&p).is_odd(), format!("even y0 for {:?}", w.to_flat()))?;
    }
    Ok(format!("{}, y0 odd throughout", summary(&r)))
}

fn sextuple_coverage() -> Check {
    let target = PythTuple::from_i64(&[1, 1, 1, 1, 0, 2]).unwrap();
    ensure(enumerate_pyth(6, 8).any(|t| t == target), "(1,1,1,1,0,2) not enumerated")?;
    let t = Tuple::Pyth(target);
    let p = Family::Sextuple.solve(&t).map_err(|e| e.to_string())?;
    ensure(p.eval() == t, "(1,1,1,1,0,2) does not round-trip")?;
    let r = coverage(Family::Sextuple, 8, Duration::from_secs(300))?;
    Ok(format!("{}, (1,1,1,1,0,2) -> {}", summary(&r), p.to_json()))
}

fn uv4_coverage() -> Check {
    let r = coverage(Family::Uv4, 12, Duration::from_secs(300))?;
    for w in enumerate_uv(4, 12) {
        let p = Family::Uv4.solve(&Tuple::Uv(w.clone())).map_err(|e| e.to_string())?;
        ensure(y0_of(&p).abs() <= Integer::one(), format!("y0 outside {{-1,0,1}} for {:?}", w.to_flat()))?;
    }
    Ok(format!("{}, y0 in {{-1,0,1}}", summary(&r)))
}

fn quintuple_coverage() -> Check {
    let r = coverage(Family::Quintuple, 12, Duration::from_secs(300))?;
    ensure(r.unreachable == 0, format!("{} unreachable", r.unreachable))?;
    let uv3 = coverage(Family::Uv3, 20, Duration::from_secs(300))?;
    Ok(format!("{}, {} repairs, 0 unreachable; uv3: {}", summary(&r), r.repairs, summary(&uv3)))
}

fn descartes_coverage() -> Check {
    let r = coverage(Family::Descartes, 30, Duration::from_secs(60))?;
    // b4 with the opposite sign on y2*y3 misses the relation at (1; 1, 2, 3, 4)
    let (y1, y2, y3, y4) = (1i64, 2, 3, 4);
    let cross = y1 * y4 - y2 * y3;
    let na = y1 * y1 + y2 * y2;
    let nb = y3 * y3 + y4 * y4;
    let b = [na + nb - 2 * (y1 * y3 + y2 * y4) + cross, na + cross, nb + cross];
    let flipped = -y1 * y4 - y2 * y3;
    let required = -cross;
    ensure(flipped == -10 && required == 2, format!("flipped {flipped}, required {required}"))?;
    let with = |b4: i64| descartes_defect(&[int(b[0]), int(b[1]), int(b[2]), int(b4)]);
    ensure(!with(flipped).is_zero(), "sign-flipped b4 satisfies the relation")?;
    ensure(with(required).is_zero(), "corrected b4 fails the relation")?;
    let got = Family::Descartes.params_from_flat(&[1, 1, 2, 3, 4].map(int)).unwrap().eval();
    ensure(got.to_flat()[3] == int(2), "library b4 differs from the corrected value")?;
    Ok(format!("{}; b4 regression: flipped -10 fails, corrected 2 holds", summary(&r)))
}

fn forward_validity() -> Check {
    let mut r = rng(100);
    for family in Family::ALL {
        for _ in 0..100_000 {
            let p = random_params(family, &mut r, 1000);
            let t = p.eval();
            ensure(satisfies_equation(family.shape(), &t), format!("{family} at {}", p.to_json()))?;
        }
    }
    Ok(format!("{} families x 100000 samples", Family::ALL.len()))
}

fn algebra_oracles() -> Check {
    let mut r = rng(101);
    let q = |r: &mut _| LipschitzQuaternion::from_coords(std::array::from_fn(|_| rand_int(r, 1000)));
    for _ in 0..100_000 {
        let (w, z) = (q(&mut r), q(&mut r));
        ensure((&w * &z).to_m2() == &w.to_m2() * &z.to_m2(), "M2 is not multiplicative")?;
        ensure(w.to_m2().det() == GaussianInt::new(w.reduced_norm(), 0), "det differs from reduced norm")?;
    }
    for n in 0..=10_000i64 {
        let d = four_squares(&int(n)).map_err(|e| e.to_string())?;
        ensure(d.iter().map(|x| x * x).sum::<Integer>() == int(n), format!("four_squares({n})"))?;
    }
    for n in 0..=200i64 {
        let exists = (0..=14i64).any(|a| (0..=a).any(|b| (0..=b).any(|c| (0..=c).any(|d| a * a + b * b + c * c + d * d == n))));
        ensure(exists == four_squares(&int(n)).is_ok(), format!("brute force disagrees at {n}"))?;
    }
    let mut pairs = 0;
    while pairs < 100_000 {
        let z: [Integer; 4] = std::array::from_fn(|_| rand_int(&mut r, 1000));
        if !gcd_all(z.iter()).is_one() {
            continue;
        }
        let s0: [Integer; 4] = std::array::from_fn(|_| rand_int(&mut r, 1000));
        let zz: Integer = z.iter().map(|v| v * v).sum();
        let sz: Integer = s0.iter().zip(&z).map(|(a, b)| a * b).sum();
        let s: [Integer; 4] = std::array::from_fn(|i| &zz * &s0[i] - &sz * &z[i]);
        let c = skew_complete(&z, &s).map_err(|e| e.to_string())?;
        ensure(c.apply(&z) == s, "skew completion does not re-substitute")?;
        pairs += 1;
    }
    Ok("M2 homomorphism, det = norm, four squares to 10^4, skew completion".into())
}

fn parity_identity() -> Check {
    let mut r = rng(102);
    let mut odd = 0;
    for _ in 0..10_000 {
        let y: Vec<Integer> = (0..9).map(|_| rand_int(&mut r, 12)).collect();
        let w = eval_uv_sextuple(&SextUVParams::from_flat(&y).unwrap());
        let p = solve_uv_sextuple(&w).map_err(|e| e.to_string())?;
        if p.y0.is_odd() {
            odd += 1;
            let s: Integer = p.to_flat()[1..].iter().sum();
            ensure(s.is_even() == (w.u() + w.v()).is_even(), format!("parity fails at {:?}", w.to_flat()))?;
        }
    }
    Ok(format!("{odd} odd-y0 solutions checked"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("quadruple coverage", quadruple_coverage),
        ("uv2 coverage", uv2_coverage),
        ("sextuple coverage", sextuple_coverage),
        ("uv4 coverage", uv4_coverage),
        ("quintuple coverage", quintuple_coverage),
        ("descartes coverage", descartes_coverage),
        ("forward validity", forward_validity),
        ("algebra oracles", algebra_oracles),
        ("parity identity", parity_identity),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
