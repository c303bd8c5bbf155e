//! Walks the classic five-tile pinwheel through the full reduction, printing
//! the trapped-block search and every surgery step.
//!
//! ```bash
//! cargo run -p semitile --example pinwheel_walkthrough
//! ```

use semitile::{
    find_coalescible, find_minimal_trapped_block, fixture_pinwheel, reduce_step, LengthPredicate,
    Rational, StepKind,
};

fn main() {
    let tiling = fixture_pinwheel(&Rational::one());
    let predicate = LengthPredicate::Integer;

    println!("pinwheel tiling of {}:", tiling.big());
    for (i, tile) in tiling.tiles().iter().enumerate() {
        println!("  tile {i}: {tile}  ({} x {})", tile.width(), tile.height());
    }

    let mut cur = tiling;
    let mut step_no = 1;
    while cur.len() > 1 {
        if find_coalescible(&cur).is_none() {
            let search = find_minimal_trapped_block(&cur).expect("block exists");
            let levels: Vec<String> = search.descent.iter().map(|l| l.to_string()).collect();
            println!(
                "\nno pair shares a complete edge; searching from the top (levels {}):",
                levels.join(" -> ")
            );
            println!(
                "  minimal block: roof {} {}, floors {:?}",
                search.block.roof,
                cur.tile(search.block.roof),
                search.block.floors
            );
        }
        let (next, step) = reduce_step(&cur, &predicate).expect("reduction step");
        match &step.kind {
            StepKind::Coalesce { i, j, merged } => {
                println!("\nstep {step_no}: coalesce tiles {i} and {j} into {merged}");
            }
            StepKind::BlockSurgery {
                branch,
                cuts,
                coalesces,
                ..
            } => {
                println!(
                    "\nstep {step_no}: block surgery ({branch:?}), {} cuts and {} merges",
                    cuts.len(),
                    coalesces.len()
                );
                for c in cuts {
                    println!("  cut tile {} along {:?} = {}", c.tile, c.axis, c.at);
                }
            }
        }
        println!("  tiles: {} -> {}", step.tiles_before, step.tiles_after);
        cur = next;
        step_no += 1;
    }

    println!("\nreduced to a single tile: {}", cur.tile(0));
    println!(
        "width {} and height {} are both integers, as the reduction guarantees",
        cur.tile(0).width(),
        cur.tile(0).height()
    );
}
