//! Generates a pseudo-random semi-integer tiling and proves that its big
//! rectangle has an integer side, cross-checking with the checkerboard
//! oracle. Pass a seed as the first argument (default 7).
//!
//! ```bash
//! cargo run -p semitile --example generate_and_prove -- 42
//! ```

use semitile::{gen_guillotine, prove, GenParams, LengthPredicate, Rational};

fn main() {
    let seed: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("seed must be a u64"))
        .unwrap_or(7);

    let params = GenParams {
        seed,
        max_tiles: 40,
        max_denominator: 64,
        big_width: Rational::from(9i64),
        big_height: "15/2".parse().unwrap(),
        pinwheel_probability: "1/4".parse().unwrap(),
    };
    let tiling = gen_guillotine(&params).expect("valid parameters");
    println!(
        "seed {seed}: {} tiles in a {} x {} rectangle",
        tiling.len(),
        tiling.width(),
        tiling.height()
    );

    let report = prove(&tiling, &LengthPredicate::Integer, true).expect("theorem holds");
    println!("reduced in {} steps", report.trace.steps.len());
    println!("final rectangle: {}", report.trace.final_rect);
    println!(
        "integer sides: width {} -> {}, height {} -> {}",
        report.trace.final_rect.width(),
        report.width_good,
        report.trace.final_rect.height(),
        report.height_good
    );
    let oracle = report.oracle.expect("oracle was requested");
    println!(
        "oracle agrees: width_integer={}, height_integer={}, imbalance sum = {}",
        oracle.width_integer, oracle.height_integer, oracle.tile_imbalance_sum
    );
}
