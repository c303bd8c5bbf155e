//! The reduction engine: coalescing, cut primitives, block surgery, the
//! one-step reducer, and the full reduction loop.
//!
//! A reduction step either coalesces two tiles that share a complete common
//! edge, or performs surgery on a minimal trapped block. Surgery works on the
//! end floor with the minimum height. If that height is good under the
//! length predicate, every taller floor is cut down to it and the resulting
//! full-width strip merges into the roof, so the roof's height grows by a
//! good amount. Otherwise the floor's width must be good: the roof is split
//! above the floor's inner edge and the floor merges with the piece above it,
//! leaving a smaller block to repeat on. Either way the tile count strictly
//! decreases while validity and semi-integrality are preserved.
//!
//! Index policy for surgery primitives: a split keeps the lower/left piece at
//! the original index and appends the other piece; a coalesce stores the
//! union at the smaller index and fills the larger slot with the previous
//! last tile. Recorded steps refer to indices as they were when the
//! operation ran; replaying re-runs the engine and compares.

use thiserror::Error;

use crate::block::{
    find_minimal_trapped_block, find_valley, floors_under_edge, BlockError, HSegment, TrappedBlock,
};
use crate::geometry::{LengthPredicate, Rect};
use crate::oracle::{theorem_oracle, OracleError, OracleReport};
use crate::rational::Rational;
use crate::tiling::{
    check_semi_integer_all, validate_admissible, validate_tiling, Tiling, Violation,
};
use crate::trace::{
    tiling_hash, Axis, CutRecord, ReductionStep, ReductionTrace, StepKind, SurgeryBranch,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReduceError {
    #[error("tiles {i} and {j} do not share a complete common edge")]
    NotCoalescible { i: usize, j: usize },
    #[error("cut at {at} is not strictly inside tile {tile}")]
    CutOutsideTile { tile: usize, at: Rational },
    #[error("not a minimal trapped block of this tiling")]
    NotMinimal,
    #[error("tile {0} is not semi-integer under the chosen predicate")]
    NotSemiInteger(usize),
    #[error("floors stopped partitioning the roof edge mid-surgery")]
    InternalPartitionBroken,
    #[error("the tiling already consists of a single tile")]
    AlreadySingle,
    #[error(transparent)]
    Block(#[from] BlockError),
}

fn complete_shared_edge(a: &Rect, b: &Rect) -> bool {
    let side_by_side =
        a.y0() == b.y0() && a.y1() == b.y1() && (a.x1() == b.x0() || b.x1() == a.x0());
    let stacked = a.x0() == b.x0() && a.x1() == b.x1() && (a.y1() == b.y0() || b.y1() == a.y0());
    side_by_side || stacked
}

/// The lexicographically smallest pair of tiles whose union is a rectangle.
pub fn find_coalescible(t: &Tiling) -> Option<(usize, usize)> {
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            if complete_shared_edge(t.tile(i), t.tile(j)) {
                return Some((i, j));
            }
        }
    }
    None
}

/// In-place coalesce. Returns `(kept, hole, old_last)`: the union lands at
/// `kept = min(i, j)`, the tile previously at `old_last` now sits at `hole`.
fn coalesce_raw(t: &mut Tiling, i: usize, j: usize) -> Result<(usize, usize, usize), ReduceError> {
    if i == j || i >= t.len() || j >= t.len() || !complete_shared_edge(t.tile(i), t.tile(j)) {
        return Err(ReduceError::NotCoalescible { i, j });
    }
    let kept = i.min(j);
    let hole = i.max(j);
    let merged = t.tile(i).bounding_union(t.tile(j));
    let tiles = t.tiles_mut();
    let old_last = tiles.len() - 1;
    tiles[kept] = merged;
    tiles.swap_remove(hole);
    Ok((kept, hole, old_last))
}

fn remap(idx: usize, hole: usize, old_last: usize) -> usize {
    if idx == old_last {
        hole
    } else {
        idx
    }
}

/// Merges tiles `i` and `j` that share a complete common edge into their
/// bounding rectangle. The merged tile of a semi-integer pair is itself
/// semi-integer: either the shared side is good and inherited, or both
/// parallel sides are good and their sum is.
pub fn coalesce(t: &Tiling, i: usize, j: usize) -> Result<Tiling, ReduceError> {
    let mut next = t.clone();
    coalesce_raw(&mut next, i, j)?;
    Ok(next)
}

fn split_h_raw(t: &mut Tiling, i: usize, y: &Rational) -> Result<usize, ReduceError> {
    let tile = t.tile(i).clone();
    if !(tile.y0() < y && y < tile.y1()) {
        return Err(ReduceError::CutOutsideTile {
            tile: i,
            at: y.clone(),
        });
    }
    let bottom = Rect::new(
        tile.x0().clone(),
        tile.y0().clone(),
        tile.x1().clone(),
        y.clone(),
    )
    .expect("interior cut leaves positive extent");
    let top = Rect::new(
        tile.x0().clone(),
        y.clone(),
        tile.x1().clone(),
        tile.y1().clone(),
    )
    .expect("interior cut leaves positive extent");
    let tiles = t.tiles_mut();
    tiles[i] = bottom;
    tiles.push(top);
    Ok(tiles.len() - 1)
}

fn split_v_raw(t: &mut Tiling, i: usize, x: &Rational) -> Result<usize, ReduceError> {
    let tile = t.tile(i).clone();
    if !(tile.x0() < x && x < tile.x1()) {
        return Err(ReduceError::CutOutsideTile {
            tile: i,
            at: x.clone(),
        });
    }
    let left = Rect::new(
        tile.x0().clone(),
        tile.y0().clone(),
        x.clone(),
        tile.y1().clone(),
    )
    .expect("interior cut leaves positive extent");
    let right = Rect::new(
        x.clone(),
        tile.y0().clone(),
        tile.x1().clone(),
        tile.y1().clone(),
    )
    .expect("interior cut leaves positive extent");
    let tiles = t.tiles_mut();
    tiles[i] = left;
    tiles.push(right);
    Ok(tiles.len() - 1)
}

/// Splits tile `i` along the horizontal line `y`, which must be strictly
/// interior. The halves are not guaranteed semi-integer; splits exist for
/// internal use by the block surgery.
pub fn split_horizontal(t: &Tiling, i: usize, y: &Rational) -> Result<Tiling, ReduceError> {
    let mut next = t.clone();
    split_h_raw(&mut next, i, y)?;
    Ok(next)
}

/// Vertical counterpart of [`split_horizontal`].
pub fn split_vertical(t: &Tiling, i: usize, x: &Rational) -> Result<Tiling, ReduceError> {
    let mut next = t.clone();
    split_v_raw(&mut next, i, x)?;
    Ok(next)
}

fn must_coalesce(
    t: &mut Tiling,
    i: usize,
    j: usize,
    coalesces: &mut Vec<(usize, usize)>,
) -> Result<(usize, usize, usize), ReduceError> {
    coalesces.push((i.min(j), i.max(j)));
    coalesce_raw(t, i, j).map_err(|_| ReduceError::InternalPartitionBroken)
}

/// One surgery round with the end-minimum floor on the left. Returns `true`
/// when the round reduced the tile count, `false` after a count-neutral peel.
fn run_left_round(
    cur: &mut Tiling,
    roof: &mut usize,
    floors: &mut Vec<usize>,
    cuts: &mut Vec<CutRecord>,
    coalesces: &mut Vec<(usize, usize)>,
    p: &LengthPredicate,
) -> Result<bool, ReduceError> {
    let edge_y = cur.tile(*roof).y0().clone();
    let min_height = cur.tile(floors[0]).height();
    if p.accepts(&min_height) {
        // Cut every taller floor down to the minimum height; floors already at
        // that height need no cut. Then merge the strip left to right and fold
        // it into the roof.
        let cut_y = &edge_y - &min_height;
        let mut pieces: Vec<usize> = vec![floors[0]];
        for &f in &floors[1..] {
            if cur.tile(f).height() > min_height {
                cuts.push(CutRecord {
                    tile: f,
                    axis: Axis::Y,
                    at: cut_y.clone(),
                });
                let top = split_h_raw(cur, f, &cut_y)?;
                pieces.push(top);
            } else {
                pieces.push(f);
            }
        }
        let mut strip = pieces[0];
        for w in 1..pieces.len() {
            let other = pieces[w];
            let (kept, hole, old_last) = must_coalesce(cur, strip, other, coalesces)?;
            strip = kept;
            for pending in pieces[w + 1..].iter_mut() {
                *pending = remap(*pending, hole, old_last);
            }
            *roof = remap(*roof, hole, old_last);
        }
        must_coalesce(cur, strip, *roof, coalesces)?;
        Ok(true)
    } else {
        // The floor's height is not good, so its width is. Peel the roof: cut
        // it above the floor's inner edge and merge the floor upward.
        let inner_x = cur.tile(floors[0]).x1().clone();
        cuts.push(CutRecord {
            tile: *roof,
            axis: Axis::X,
            at: inner_x.clone(),
        });
        let right = split_v_raw(cur, *roof, &inner_x)?;
        let f0 = floors[0];
        let (_, hole, old_last) = must_coalesce(cur, f0, *roof, coalesces)?;
        *roof = remap(right, hole, old_last);
        floors.remove(0);
        Ok(false)
    }
}

fn adjacent_equal_heights(t: &Tiling, floors: &[usize]) -> Option<usize> {
    (0..floors.len().saturating_sub(1))
        .find(|&w| t.tile(floors[w]).height() == t.tile(floors[w + 1]).height())
}

/// Reduces a minimal trapped block, strictly decreasing the tile count while
/// preserving validity and the semi-integer property of every tile.
pub fn reduce_block(
    t: &Tiling,
    block: &TrappedBlock,
    p: &LengthPredicate,
) -> Result<(Tiling, ReductionStep), ReduceError> {
    // The block must describe this tiling.
    if block.roof >= t.len() || block.floors.is_empty() {
        return Err(ReduceError::NotMinimal);
    }
    let edge = HSegment::bottom_of(t, block.roof);
    if edge != block.shared_edge {
        return Err(ReduceError::NotMinimal);
    }
    match floors_under_edge(t, &edge) {
        Some(floors) if floors == block.floors => {}
        _ => return Err(ReduceError::NotMinimal),
    }
    if find_valley(block, t).is_some() {
        return Err(ReduceError::NotMinimal);
    }
    for &i in block.floors.iter().chain(std::iter::once(&block.roof)) {
        if !t.tile(i).semi_integer(p) {
            return Err(ReduceError::NotSemiInteger(i));
        }
    }

    let heights = block.floor_heights(t);
    let min_height = heights.iter().min().expect("non-empty floors").clone();
    let branch = if p.accepts(&min_height) {
        SurgeryBranch::IntegerHeight
    } else {
        SurgeryBranch::IntegerWidthPeel
    };

    let mut cur = t.clone();
    let mut roof = block.roof;
    let mut floors = block.floors.clone();
    let mut cuts: Vec<CutRecord> = Vec::new();
    let mut coalesces: Vec<(usize, usize)> = Vec::new();

    loop {
        if floors.len() == 1 {
            // The lone floor spans the roof's bottom edge exactly.
            must_coalesce(&mut cur, floors[0], roof, &mut coalesces)?;
            break;
        }
        if let Some(w) = adjacent_equal_heights(&cur, &floors) {
            // Equal-height neighbors on the same edge share a complete side.
            must_coalesce(&mut cur, floors[w], floors[w + 1], &mut coalesces)?;
            break;
        }
        let hts: Vec<Rational> = floors.iter().map(|&i| cur.tile(i).height()).collect();
        let lowest = hts.iter().min().expect("non-empty floors");
        let done = if hts.first() == Some(lowest) {
            run_left_round(
                &mut cur,
                &mut roof,
                &mut floors,
                &mut cuts,
                &mut coalesces,
                p,
            )?
        } else if hts.last() == Some(lowest) {
            // Mirror, run the left-end logic, mirror back, and restore the
            // recorded x-cut coordinates. Tile indices survive reflection.
            let width = cur.width();
            let mut mirrored = cur.mirrored_x();
            floors.reverse();
            let cut_mark = cuts.len();
            let done = run_left_round(
                &mut mirrored,
                &mut roof,
                &mut floors,
                &mut cuts,
                &mut coalesces,
                p,
            )?;
            cur = mirrored.mirrored_x();
            floors.reverse();
            for c in &mut cuts[cut_mark..] {
                if c.axis == Axis::X {
                    c.at = &width - &c.at;
                }
            }
            done
        } else {
            return Err(ReduceError::InternalPartitionBroken);
        };
        if done {
            break;
        }
    }

    let tiles_after = cur.len();
    if tiles_after >= t.len() {
        return Err(ReduceError::InternalPartitionBroken);
    }
    let step = ReductionStep {
        kind: StepKind::BlockSurgery {
            block: block.clone(),
            branch,
            cuts,
            coalesces,
        },
        tiles_before: t.len(),
        tiles_after,
        tiling_hash: tiling_hash(&cur),
    };
    Ok((cur, step))
}

/// One step of the reduction: coalesce a complete-shared-edge pair if one
/// exists, otherwise find a minimal trapped block and reduce it.
pub fn reduce_step(
    t: &Tiling,
    p: &LengthPredicate,
) -> Result<(Tiling, ReductionStep), ReduceError> {
    if t.len() <= 1 {
        return Err(ReduceError::AlreadySingle);
    }
    if let Some((i, j)) = find_coalescible(t) {
        let merged = t.tile(i).bounding_union(t.tile(j));
        let next = coalesce(t, i, j)?;
        let step = ReductionStep {
            kind: StepKind::Coalesce { i, j, merged },
            tiles_before: t.len(),
            tiles_after: next.len(),
            tiling_hash: tiling_hash(&next),
        };
        Ok((next, step))
    } else {
        let search = find_minimal_trapped_block(t)?;
        reduce_block(t, &search.block, p)
    }
}

/// Iterates [`reduce_step`] until a single tile remains. The final rectangle
/// equals the big rectangle and has at least one good side. A single-tile
/// input yields an empty trace.
pub fn reduce_to_one(t: &Tiling, p: &LengthPredicate) -> Result<ReductionTrace, ReduceError> {
    if t.is_empty() {
        return Err(ReduceError::AlreadySingle);
    }
    let mut cur = t.clone();
    let mut steps = Vec::new();
    while cur.len() > 1 {
        let (next, step) = reduce_step(&cur, p)?;
        debug_assert!(step.tiles_after < step.tiles_before);
        steps.push(step);
        cur = next;
    }
    let final_rect = cur.tile(0).clone();
    assert_eq!(
        &final_rect,
        t.big(),
        "reduction of a valid tiling terminates at the big rectangle"
    );
    Ok(ReductionTrace {
        predicate: p.clone(),
        initial: t.clone(),
        steps,
        final_rect,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProveReport {
    pub trace: ReductionTrace,
    /// The final rectangle's width satisfies the predicate.
    pub width_good: bool,
    /// The final rectangle's height satisfies the predicate.
    pub height_good: bool,
    pub oracle: Option<OracleReport>,
}

#[derive(Debug, Error)]
pub enum ProveError {
    #[error("input tiling is not admissible ({} violations)", .0.len())]
    Inadmissible(Vec<Violation>),
    #[error("invariant broken after step {step}: {detail}")]
    StepInvariantBroken { step: usize, detail: String },
    #[error(transparent)]
    Reduce(#[from] ReduceError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("oracle disagrees with the reduction: {0}")]
    OracleDisagreement(String),
}

/// Validates the input, reduces it to a single tile while re-validating every
/// intermediate tiling, and reports which side of the final rectangle is good.
/// With `check_oracle` the checkerboard oracle independently confirms the
/// conclusion; any disagreement is an error.
pub fn prove(
    t: &Tiling,
    p: &LengthPredicate,
    check_oracle: bool,
) -> Result<ProveReport, ProveError> {
    let admission = validate_admissible(t, p);
    if !admission.valid {
        return Err(ProveError::Inadmissible(admission.violations));
    }

    let mut cur = t.clone();
    let mut steps = Vec::new();
    while cur.len() > 1 {
        let (next, step) = reduce_step(&cur, p)?;
        if step.tiles_after >= step.tiles_before {
            return Err(ProveError::StepInvariantBroken {
                step: steps.len(),
                detail: "tile count did not decrease".into(),
            });
        }
        let report = validate_tiling(&next);
        if !report.valid {
            return Err(ProveError::StepInvariantBroken {
                step: steps.len(),
                detail: format!("validity lost: {:?}", report.violations),
            });
        }
        let bad = check_semi_integer_all(&next, p);
        if !bad.is_empty() {
            return Err(ProveError::StepInvariantBroken {
                step: steps.len(),
                detail: format!("semi-integer property lost at tiles {bad:?}"),
            });
        }
        steps.push(step);
        cur = next;
    }

    let final_rect = cur.tile(0).clone();
    let width_good = p.accepts(&final_rect.width());
    let height_good = p.accepts(&final_rect.height());
    if !(width_good || height_good) {
        return Err(ProveError::StepInvariantBroken {
            step: steps.len(),
            detail: "final rectangle has no good side".into(),
        });
    }

    let oracle = if check_oracle {
        let report = match p {
            LengthPredicate::Integer => theorem_oracle(t)?,
            LengthPredicate::MultipleOf(g) => {
                // The checkerboard argument is scale-specific; measure in
                // units of g.
                let scaled = t.scaled(&(Rational::one() / g));
                theorem_oracle(&scaled)?
            }
        };
        if !report.tile_imbalance_sum.is_zero() {
            return Err(ProveError::OracleDisagreement(
                "tile imbalance sum is not zero".into(),
            ));
        }
        if !(report.width_integer && width_good || report.height_integer && height_good) {
            return Err(ProveError::OracleDisagreement(
                "no side is good for both the oracle and the reduction".into(),
            ));
        }
        Some(report)
    } else {
        None
    };

    Ok(ProveReport {
        trace: ReductionTrace {
            predicate: p.clone(),
            initial: t.clone(),
            steps,
            final_rect,
        },
        width_good,
        height_good,
        oracle,
    })
}
