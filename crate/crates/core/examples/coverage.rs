//! Exhaustive round-trip coverage and brute-force parameter search.
//!
//! Usage: cargo run --example coverage -- [family] [bound]

use pythparam::family::Tuple;
use pythparam::verify::{brute_force_param_search, roundtrip_report};
use pythparam::{Family, UVSolution};

fn main() {
    let mut args = std::env::args().skip(1);
    let family: Family = args.next().as_deref().unwrap_or("quadruple").parse().unwrap();
    let bound: u32 = args.next().map_or(10, |b| b.parse().unwrap());

    let report = roundtrip_report(family, bound);
    println!("{}", serde_json::to_string_pretty(&report).unwrap());

    let target = Tuple::Uv(UVSolution::from_i64(&[11, -2], 5, 25).unwrap());
    match brute_force_param_search(Family::Uv2, &target, 4) {
        Some(p) => println!("first uv2 parameters for (11, -2, 5, 25) in [-4, 4]: {}", p.to_json()),
        None => println!("no uv2 parameters in [-4, 4]"),
    }
}
