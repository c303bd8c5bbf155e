//! Renders the pinwheel with its minimal trapped block highlighted and a
//! generated tiling alongside. Writes `pinwheel.svg` and `generated.svg`
//! into the current directory.
//!
//! ```bash
//! cargo run -p semitile --example render_svg
//! ```

use semitile::{
    find_minimal_trapped_block, fixture_pinwheel, gen_guillotine, render_svg, GenParams, Rational,
    RenderOptions,
};

fn main() {
    let pin = fixture_pinwheel(&Rational::one());
    let block = find_minimal_trapped_block(&pin).unwrap().block;
    let svg = render_svg(
        &pin,
        &RenderOptions {
            highlight: Some(block),
            ..RenderOptions::default()
        },
    );
    std::fs::write("pinwheel.svg", &svg).expect("write pinwheel.svg");
    println!(
        "wrote pinwheel.svg ({} bytes); roof and floors are tinted",
        svg.len()
    );

    let random = gen_guillotine(&GenParams {
        seed: 23,
        max_tiles: 30,
        max_denominator: 32,
        big_width: Rational::from(10i64),
        big_height: Rational::from(7i64),
        pinwheel_probability: "1/3".parse().unwrap(),
    })
    .unwrap();
    let svg = render_svg(&random, &RenderOptions::default());
    std::fs::write("generated.svg", &svg).expect("write generated.svg");
    println!("wrote generated.svg with {} tiles", random.len());
}
