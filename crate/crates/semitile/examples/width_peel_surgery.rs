//! Demonstrates the width-peel branch of the block surgery: the shortest
//! floor's height is not an integer, so its integer width drives the surgery
//! and the roof is peeled above it until a single floor remains.
//!
//! ```bash
//! cargo run -p semitile --example width_peel_surgery
//! ```

use semitile::{
    reduce_block, reduce_step, validate_tiling, HSegment, LengthPredicate, Rational, Rect,
    StepKind, Tiling, TrappedBlock,
};

fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

fn main() {
    let rect = |a: &str, b: &str, c: &str, d: &str| Rect::new(r(a), r(b), r(c), r(d)).unwrap();
    let tiling = Tiling::from_size(
        r("2"),
        r("3"),
        vec![
            rect("0", "2", "2", "3"),   // roof
            rect("0", "3/2", "1", "2"), // floor, height 1/2
            rect("1", "1", "2", "2"),   // floor, height 1
            rect("0", "0", "1", "3/2"),
            rect("1", "0", "2", "1"),
        ],
    )
    .unwrap();
    assert!(validate_tiling(&tiling).valid);

    println!("tiling of {}:", tiling.big());
    for (i, tile) in tiling.tiles().iter().enumerate() {
        println!("  tile {i}: {tile}  ({} x {})", tile.width(), tile.height());
    }

    let block = TrappedBlock {
        roof: 0,
        floors: vec![1, 2],
        shared_edge: HSegment {
            y: r("2"),
            x0: r("0"),
            x1: r("2"),
        },
    };
    println!(
        "\nblock under tile 0: floors with heights {} and {}",
        tiling.tile(1).height(),
        tiling.tile(2).height()
    );
    println!("height 1/2 is not an integer, but the floor's width 1 is");

    let (mut cur, step) = reduce_block(&tiling, &block, &LengthPredicate::Integer).unwrap();
    if let StepKind::BlockSurgery {
        branch,
        cuts,
        coalesces,
        ..
    } = &step.kind
    {
        println!("\nsurgery branch: {branch:?}");
        for c in cuts {
            println!("  cut tile {} along {:?} = {}", c.tile, c.axis, c.at);
        }
        println!("  merges: {coalesces:?}");
        println!("  one peel, then the last floor spans the roof and merges directly");
    }
    println!("tiles: {} -> {}", step.tiles_before, step.tiles_after);

    while cur.len() > 1 {
        let (next, step) = reduce_step(&cur, &LengthPredicate::Integer).unwrap();
        println!(
            "follow-up: tiles {} -> {}",
            step.tiles_before, step.tiles_after
        );
        cur = next;
    }
    println!("final rectangle: {}", cur.tile(0));
}
