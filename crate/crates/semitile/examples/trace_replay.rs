//! Produces a reduction trace, serializes it to JSON, reloads it, and
//! replay-verifies every recorded step and hash. Tampering with the trace is
//! caught.
//!
//! ```bash
//! cargo run -p semitile --example trace_replay
//! ```

use semitile::{
    gen_guillotine, reduce_to_one, GenParams, LengthPredicate, Rational, ReductionTrace,
};

fn main() {
    let tiling = gen_guillotine(&GenParams {
        seed: 99,
        max_tiles: 25,
        max_denominator: 32,
        big_width: Rational::from(8i64),
        big_height: "11/2".parse().unwrap(),
        pinwheel_probability: "1/4".parse().unwrap(),
    })
    .unwrap();

    let trace = reduce_to_one(&tiling, &LengthPredicate::Integer).unwrap();
    println!(
        "{} tiles reduced in {} steps; final {}",
        tiling.len(),
        trace.steps.len(),
        trace.final_rect
    );

    let json = trace.to_json();
    println!("trace document is {} bytes of JSON", json.len());

    let reloaded = ReductionTrace::from_json(&json).unwrap();
    reloaded
        .replay()
        .expect("replay reproduces every step and hash");
    println!("replay of the reloaded trace: ok");

    let mut tampered = reloaded.clone();
    tampered.steps[0].tiling_hash = "0".repeat(64);
    match tampered.replay() {
        Err(e) => println!("tampered hash detected: {e}"),
        Ok(()) => unreachable!("tampering must be detected"),
    }
}
