//! The half-unit checkerboard argument by itself: the triangle wave, the
//! imbalance product formula, its additivity over a tiling, and the
//! integer-side conclusion.
//!
//! ```bash
//! cargo run -p semitile --example checkerboard_oracle
//! ```

use semitile::{
    fixture_pinwheel, gen_guillotine, imbalance, theorem_oracle, triangle_wave, GenParams, Rational,
};

fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

fn main() {
    println!("triangle wave F (zero exactly at integers):");
    for x in ["0", "1/4", "1/2", "3/4", "1", "7/3", "9/2"] {
        println!("  F({x}) = {}", triangle_wave(&r(x)));
    }

    let pin = fixture_pinwheel(&Rational::one());
    println!("\nper-tile imbalance over the pinwheel:");
    let mut sum = Rational::zero();
    for (i, tile) in pin.tiles().iter().enumerate() {
        let ib = imbalance(tile);
        println!("  tile {i} {tile}: {ib}");
        sum = sum + ib;
    }
    println!(
        "  sum = {sum}, imbalance of the big rectangle = {}",
        imbalance(pin.big())
    );

    // Additivity holds for any perfect tiling, semi-integer or not.
    let random = gen_guillotine(&GenParams {
        seed: 3,
        max_tiles: 18,
        max_denominator: 16,
        big_width: r("5"),
        big_height: r("9/2"),
        pinwheel_probability: r("1/4"),
    })
    .unwrap();
    let tile_sum: Rational = random.tiles().iter().map(imbalance).sum();
    println!(
        "\nrandom {}-tile tiling: tile imbalances sum to {} = big imbalance {}",
        random.len(),
        tile_sum,
        imbalance(random.big())
    );

    let report = theorem_oracle(&pin).unwrap();
    println!(
        "\noracle on the pinwheel: width_integer={}, height_integer={}",
        report.width_integer, report.height_integer
    );
    println!("every tile has an integer side, so the zero sum forces an integer side of the box");
}
