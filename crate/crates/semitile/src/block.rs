//! Trapped blocks and the descent that finds a minimal one.
//!
//! A trapped block is a roof tile whose bottom edge is exactly partitioned by
//! the top edges of the floor tiles hanging below it. A block is minimal when
//! no interior floor is a valley, i.e. strictly shorter than both of its
//! horizontal neighbors. In a minimal block the shortest floor sits at one of
//! the two ends, which is what makes the reduction surgery possible.
//!
//! The search starts at the top side of the big rectangle, treated as a
//! virtual roof edge with the sides of the rectangle as infinitely tall
//! walls. Among the tiles attached below the current edge it picks the
//! leftmost tile strictly shorter than both neighbors; that tile roofs a
//! block, and while the block has a valley the search descends into it. The
//! roof's bottom level strictly decreases, so the descent terminates.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::Rational;
use crate::tiling::Tiling;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BlockError {
    /// Two tiles sharing a complete common edge were discovered; the caller
    /// should coalesce them instead of looking for a block.
    #[error("tiles {0} and {1} share a complete edge and should be coalesced")]
    CoalescibleFound(usize, usize),
    /// Fewer than two tiles, so no block exists.
    #[error("a tiling with fewer than two tiles has no trapped block")]
    NoBlock,
    /// The minimum floor height is attained only in the interior, so the
    /// block was not produced by a well-formed search.
    #[error("minimum floor height is not attained at an end floor")]
    MinNotAtEnd,
}

/// A horizontal segment: a y-level together with an x-interval.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HSegment {
    pub y: Rational,
    pub x0: Rational,
    pub x1: Rational,
}

impl HSegment {
    /// The bottom side of a tile.
    pub fn bottom_of(t: &Tiling, tile: usize) -> HSegment {
        let r = t.tile(tile);
        HSegment {
            y: r.y0().clone(),
            x0: r.x0().clone(),
            x1: r.x1().clone(),
        }
    }

    /// The top side of the big rectangle.
    pub fn top_of_big(t: &Tiling) -> HSegment {
        HSegment {
            y: t.height(),
            x0: Rational::zero(),
            x1: t.width(),
        }
    }
}

/// A roof tile plus the floors partitioning its bottom edge, ordered left to
/// right. Indices refer to the tiling the block was found in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrappedBlock {
    pub roof: usize,
    pub floors: Vec<usize>,
    pub shared_edge: HSegment,
}

impl TrappedBlock {
    pub fn floor_heights(&self, t: &Tiling) -> Vec<Rational> {
        self.floors.iter().map(|&i| t.tile(i).height()).collect()
    }
}

/// The block found by [`find_minimal_trapped_block`] plus the strictly
/// decreasing sequence of roof-edge y-levels the descent visited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSearch {
    pub block: TrappedBlock,
    pub descent: Vec<Rational>,
}

/// Which end of a minimal block carries the minimum floor height.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EndSide {
    Left,
    Right,
}

/// Neighbor lists for all four edges of every tile, each sorted by the
/// neighbor's start coordinate along the edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyIndex {
    pub below: Vec<Vec<usize>>,
    pub above: Vec<Vec<usize>>,
    pub left: Vec<Vec<usize>>,
    pub right: Vec<Vec<usize>>,
}

pub fn build_adjacency(t: &Tiling) -> AdjacencyIndex {
    let n = t.len();
    let mut idx = AdjacencyIndex {
        below: vec![Vec::new(); n],
        above: vec![Vec::new(); n],
        left: vec![Vec::new(); n],
        right: vec![Vec::new(); n],
    };
    for i in 0..n {
        let a = t.tile(i);
        for j in 0..n {
            if i == j {
                continue;
            }
            let b = t.tile(j);
            let x_overlap = a.x0() < b.x1() && b.x0() < a.x1();
            let y_overlap = a.y0() < b.y1() && b.y0() < a.y1();
            if x_overlap && b.y1() == a.y0() {
                idx.below[i].push(j);
            }
            if x_overlap && b.y0() == a.y1() {
                idx.above[i].push(j);
            }
            if y_overlap && b.x1() == a.x0() {
                idx.left[i].push(j);
            }
            if y_overlap && b.x0() == a.x1() {
                idx.right[i].push(j);
            }
        }
        idx.below[i].sort_by(|&a, &b| t.tile(a).x0().cmp(t.tile(b).x0()));
        idx.above[i].sort_by(|&a, &b| t.tile(a).x0().cmp(t.tile(b).x0()));
        idx.left[i].sort_by(|&a, &b| t.tile(a).y0().cmp(t.tile(b).y0()));
        idx.right[i].sort_by(|&a, &b| t.tile(a).y0().cmp(t.tile(b).y0()));
    }
    idx
}

/// Floors under a roof edge: the tiles whose top sides meet the edge, in
/// left-to-right order, provided they partition the edge exactly. Any
/// overhang past either endpoint or any gap yields `None`.
pub fn floors_under_edge(t: &Tiling, edge: &HSegment) -> Option<Vec<usize>> {
    let mut floors: Vec<usize> = (0..t.len())
        .filter(|&i| {
            let tile = t.tile(i);
            *tile.y1() == edge.y && *tile.x0() < edge.x1 && *tile.x1() > edge.x0
        })
        .collect();
    floors.sort_by(|&a, &b| t.tile(a).x0().cmp(t.tile(b).x0()));
    exact_partition(t, edge, floors)
}

/// Checks that the already sorted candidate tiles partition the edge exactly.
fn exact_partition(t: &Tiling, edge: &HSegment, floors: Vec<usize>) -> Option<Vec<usize>> {
    if floors.is_empty() {
        return None;
    }
    let mut cursor = edge.x0.clone();
    for &i in &floors {
        if *t.tile(i).x0() != cursor {
            return None;
        }
        cursor = t.tile(i).x1().clone();
    }
    if cursor != edge.x1 {
        return None;
    }
    Some(floors)
}

/// Position of the leftmost interior floor strictly shorter than both of its
/// neighbors, or `None` when the block is minimal.
pub fn find_valley(b: &TrappedBlock, t: &Tiling) -> Option<usize> {
    let heights = b.floor_heights(t);
    (1..heights.len().saturating_sub(1))
        .find(|&i| heights[i] < heights[i - 1] && heights[i] < heights[i + 1])
}

/// Which end of a minimal block attains the minimum floor height. Ties
/// between the two ends break `Left`.
pub fn end_min_side(b: &TrappedBlock, t: &Tiling) -> Result<EndSide, BlockError> {
    let heights = b.floor_heights(t);
    let min = heights
        .iter()
        .min()
        .expect("blocks have at least one floor");
    if heights.first() == Some(min) {
        Ok(EndSide::Left)
    } else if heights.last() == Some(min) {
        Ok(EndSide::Right)
    } else {
        Err(BlockError::MinNotAtEnd)
    }
}

/// Scans a left-to-right row of tiles attached below a shared edge and picks
/// the leftmost one strictly shorter than both neighbors; missing neighbors
/// (the walls of the big rectangle) count as infinitely tall. Two adjacent
/// tiles of equal height in the row share a complete edge, which is reported
/// instead.
fn select_local_min(t: &Tiling, row: &[usize]) -> Result<usize, BlockError> {
    for w in row.windows(2) {
        if t.tile(w[0]).height() == t.tile(w[1]).height() {
            return Err(BlockError::CoalescibleFound(w[0].min(w[1]), w[0].max(w[1])));
        }
    }
    let shorter_than = |i: usize, j: usize| t.tile(row[i]).height() < t.tile(row[j]).height();
    for i in 0..row.len() {
        let left_taller = i == 0 || shorter_than(i, i - 1);
        let right_taller = i == row.len() - 1 || shorter_than(i, i + 1);
        if left_taller && right_taller {
            return Ok(row[i]);
        }
    }
    unreachable!("a row with pairwise distinct adjacent heights has a strict local minimum")
}

/// Finds a minimal trapped block in a valid tiling with no coalescible pair.
///
/// Every floor and the roof of the returned block are real tiles, the floors
/// partition the roof's bottom edge exactly, and the minimum floor height is
/// attained at an end. The returned descent log lists the roof-edge y-levels
/// visited, starting with the top of the big rectangle.
pub fn find_minimal_trapped_block(t: &Tiling) -> Result<BlockSearch, BlockError> {
    if t.len() < 2 {
        return Err(BlockError::NoBlock);
    }

    let top = HSegment::top_of_big(t);
    let attached = floors_under_edge(t, &top)
        .expect("tiles attached to the top side of a valid tiling partition it");
    let mut descent = vec![top.y.clone()];
    let adjacency = build_adjacency(t);
    let mut roof = select_local_min(t, &attached)?;

    loop {
        let edge = HSegment::bottom_of(t, roof);
        descent.push(edge.y.clone());
        let floors = exact_partition(t, &edge, adjacency.below[roof].clone())
            .expect("floors of a locally minimal roof partition its bottom edge");
        if floors.len() == 1 {
            let other = floors[0];
            return Err(BlockError::CoalescibleFound(
                roof.min(other),
                roof.max(other),
            ));
        }
        for w in floors.windows(2) {
            if t.tile(w[0]).height() == t.tile(w[1]).height() {
                return Err(BlockError::CoalescibleFound(w[0].min(w[1]), w[0].max(w[1])));
            }
        }
        let block = TrappedBlock {
            roof,
            floors,
            shared_edge: edge,
        };
        match find_valley(&block, t) {
            None => return Ok(BlockSearch { block, descent }),
            Some(pos) => roof = block.floors[pos],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::fixture_pinwheel;
    use crate::geometry::Rect;
    use crate::tiling::validate_tiling;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn rect(x0: i64, y0: i64, x1: i64, y1: i64) -> Rect {
        Rect::from_ints(x0, y0, x1, y1).unwrap()
    }

    fn tiling(w: i64, h: i64, tiles: Vec<Rect>) -> Tiling {
        let t = Tiling::from_size(w.into(), h.into(), tiles).unwrap();
        assert!(
            validate_tiling(&t).valid,
            "test fixture must be a valid tiling"
        );
        t
    }

    /// Builds a tiling whose top row is a roof strip and whose floors under it
    /// have the given heights (all width 1), padded below so the tiling is
    /// perfect. Returns the tiling and the block under the roof.
    fn block_with_floor_heights(heights: &[i64]) -> (Tiling, TrappedBlock) {
        let k = heights.len() as i64;
        let max = *heights.iter().max().unwrap();
        let big_h = max + 1;
        let mut tiles = vec![Rect::from_ints(0, max, k, big_h).unwrap()];
        let mut floors = Vec::new();
        for (i, &h) in heights.iter().enumerate() {
            let x = i as i64;
            floors.push(tiles.len());
            tiles.push(Rect::from_ints(x, max - h, x + 1, max).unwrap());
            if h < max {
                tiles.push(Rect::from_ints(x, 0, x + 1, max - h).unwrap());
            }
        }
        let t = tiling(k, big_h, tiles);
        let block = TrappedBlock {
            roof: 0,
            floors,
            shared_edge: HSegment {
                y: max.into(),
                x0: Rational::zero(),
                x1: k.into(),
            },
        };
        (t, block)
    }

    #[test]
    fn adjacency_on_pinwheel() {
        let t = fixture_pinwheel(&Rational::one());
        let adj = build_adjacency(&t);
        // Tile order: A=(0,0,2,1), B=(2,0,3,2), C=(1,2,3,3), D=(0,1,1,3), E=(1,1,2,2).
        assert_eq!(adj.below[2], vec![4, 1]);
        assert_eq!(adj.above[0], vec![3, 4]);
        assert_eq!(adj.right[3], vec![4, 2]);
        assert_eq!(adj.left[1], vec![0, 4]);
    }

    #[test]
    fn adjacency_trivial_cases() {
        let single = tiling(1, 1, vec![rect(0, 0, 1, 1)]);
        let adj = build_adjacency(&single);
        assert!(adj.below[0].is_empty() && adj.above[0].is_empty());
        assert!(adj.left[0].is_empty() && adj.right[0].is_empty());

        let stacked = tiling(1, 2, vec![rect(0, 0, 1, 1), rect(0, 1, 1, 2)]);
        let adj = build_adjacency(&stacked);
        assert_eq!(adj.above[0], vec![1]);
        assert_eq!(adj.below[1], vec![0]);
    }

    #[test]
    fn floors_under_pinwheel_edges() {
        let t = fixture_pinwheel(&Rational::one());
        // Bottom of C=(1,2,3,3): E covers [1,2], B covers [2,3].
        let edge_c = HSegment::bottom_of(&t, 2);
        assert_eq!(floors_under_edge(&t, &edge_c), Some(vec![4, 1]));
        // Bottom of E=(1,1,2,2): A=(0,0,2,1) overhangs left past x=1.
        let edge_e = HSegment::bottom_of(&t, 4);
        assert_eq!(floors_under_edge(&t, &edge_e), None);
        // Bottom side of the big rectangle has nothing below it.
        let bottom = HSegment {
            y: Rational::zero(),
            x0: Rational::zero(),
            x1: t.width(),
        };
        assert_eq!(floors_under_edge(&t, &bottom), None);
    }

    #[test]
    fn valley_detection() {
        let (t, b) = block_with_floor_heights(&[2, 1]);
        assert_eq!(find_valley(&b, &t), None);

        let (t, b) = block_with_floor_heights(&[3, 1, 2]);
        assert_eq!(find_valley(&b, &t), Some(1));

        let (t, b) = block_with_floor_heights(&[1, 2, 3]);
        assert_eq!(find_valley(&b, &t), None);
    }

    #[test]
    fn end_min_examples() {
        let (t, b) = block_with_floor_heights(&[1, 2]);
        assert_eq!(end_min_side(&b, &t), Ok(EndSide::Left));

        let (t, b) = block_with_floor_heights(&[3, 2, 1]);
        assert_eq!(end_min_side(&b, &t), Ok(EndSide::Right));

        let (t, b) = block_with_floor_heights(&[1, 2, 1]);
        assert_eq!(end_min_side(&b, &t), Ok(EndSide::Left));
    }

    #[test]
    fn interior_only_minimum_is_rejected() {
        let (t, b) = block_with_floor_heights(&[3, 1, 1, 3]);
        assert_eq!(find_valley(&b, &t), None);
        assert_eq!(end_min_side(&b, &t), Err(BlockError::MinNotAtEnd));
    }

    #[test]
    fn pinwheel_block_search() {
        let t = fixture_pinwheel(&Rational::one());
        let search = find_minimal_trapped_block(&t).unwrap();
        assert_eq!(search.block.roof, 2);
        assert_eq!(search.block.floors, vec![4, 1]);
        assert_eq!(search.descent, vec![r("3"), r("2")]);
        assert_eq!(end_min_side(&search.block, &t), Ok(EndSide::Left));
    }

    #[test]
    fn coalescible_pair_reported() {
        let t = tiling(2, 1, vec![rect(0, 0, 1, 1), rect(1, 0, 2, 1)]);
        assert_eq!(
            find_minimal_trapped_block(&t),
            Err(BlockError::CoalescibleFound(0, 1))
        );
    }

    #[test]
    fn single_tile_has_no_block() {
        let t = tiling(1, 1, vec![rect(0, 0, 1, 1)]);
        assert_eq!(find_minimal_trapped_block(&t), Err(BlockError::NoBlock));
    }

    #[test]
    fn two_level_descent() {
        // Top row: heights 3, 2, 3 -> roof M. M's floors have heights 2, 1, 2
        // with a valley in the middle -> descend to roof b, whose floors have
        // heights 2, 1 and form the minimal block.
        let l = rect(0, 3, 1, 6);
        let m = rect(1, 4, 5, 6);
        let rr = rect(5, 3, 6, 6);
        let a = rect(1, 2, 2, 4);
        let b = rect(2, 3, 4, 4);
        let c = rect(4, 2, 5, 4);
        let d = rect(2, 1, 3, 3);
        let e = rect(3, 2, 4, 3);
        let fills = vec![
            rect(0, 0, 1, 3),
            rect(1, 0, 2, 2),
            rect(2, 0, 3, 1),
            rect(3, 0, 4, 2),
            rect(4, 0, 5, 2),
            rect(5, 0, 6, 3),
        ];
        let mut tiles = vec![l, m, rr, a, b, c, d, e];
        tiles.extend(fills);
        let t = tiling(6, 6, tiles);

        let search = find_minimal_trapped_block(&t).unwrap();
        assert_eq!(search.block.roof, 4, "roof should be tile b");
        assert_eq!(search.block.floors, vec![6, 7], "floors should be d, e");
        assert_eq!(search.descent, vec![r("6"), r("4"), r("3")]);
        for w in search.descent.windows(2) {
            assert!(w[0] > w[1]);
        }
    }

    #[test]
    fn block_partition_invariant() {
        let t = fixture_pinwheel(&r("1/2"));
        let search = find_minimal_trapped_block(&t).unwrap();
        let b = &search.block;
        let mut cursor = b.shared_edge.x0.clone();
        for &f in &b.floors {
            assert_eq!(*t.tile(f).x0(), cursor);
            assert_eq!(*t.tile(f).y1(), b.shared_edge.y);
            cursor = t.tile(f).x1().clone();
        }
        assert_eq!(cursor, b.shared_edge.x1);
    }
}
