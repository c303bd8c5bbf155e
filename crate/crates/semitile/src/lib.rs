//! Exact rational rectangle tilings with a constructive integer-side prover.
//!
//! The library represents perfect tilings of a rectangle by tiles that each
//! have at least one integer side (or, more generally, one side that is an
//! integer multiple of a fixed rational). It reduces any such tiling to a
//! single tile by repeatedly coalescing tiles that share a complete edge and
//! performing surgery on minimal trapped blocks, which constructively shows
//! that the tiled rectangle itself has an integer side. An independent
//! half-unit checkerboard oracle cross-checks the conclusion.
//!
//! ```
//! use semitile::{fixture_pinwheel, reduce_to_one, LengthPredicate, Rational};
//!
//! let tiling = fixture_pinwheel(&Rational::one());
//! let trace = reduce_to_one(&tiling, &LengthPredicate::Integer).unwrap();
//! assert_eq!(trace.steps.len(), 4);
//! assert_eq!(&trace.final_rect, tiling.big());
//! ```

pub mod block;
pub mod generate;
pub mod geometry;
pub mod oracle;
pub mod rational;
pub mod reduce;
pub mod svg;
pub mod tiling;
pub mod trace;

pub use block::{
    build_adjacency, end_min_side, find_minimal_trapped_block, find_valley, floors_under_edge,
    AdjacencyIndex, BlockError, BlockSearch, EndSide, HSegment, TrappedBlock,
};
pub use generate::{embed_pinwheel, fixture_pinwheel, gen_guillotine, GenError, GenParams, Lcg64};
pub use geometry::{semi_integer, GeometryError, LengthPredicate, Rect};
pub use oracle::{imbalance, theorem_oracle, triangle_wave, OracleError, OracleReport};
pub use rational::{to_decimal, Rational, RationalError};
pub use reduce::{
    coalesce, find_coalescible, prove, reduce_block, reduce_step, reduce_to_one, split_horizontal,
    split_vertical, ProveError, ProveReport, ReduceError,
};
pub use svg::{render_svg, RenderOptions};
pub use tiling::{
    check_semi_integer_all, load_tiling, parse_tiling, save_tiling, tiling_to_string,
    validate_admissible, validate_tiling, DocumentError, Tiling, ValidationReport, Violation,
};
pub use trace::{
    tiling_hash, Axis, CutRecord, ReductionStep, ReductionTrace, ReplayError, StepKind,
    SurgeryBranch,
};
