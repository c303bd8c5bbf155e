//! Reduction traces: an ordered record of surgery steps sufficient to replay
//! and audit a full reduction.
//!
//! A step records what was done (a coalesce, or a block surgery with its cut
//! and merge lists), the tile counts before and after, and a hash of the
//! tiling after the step. Replaying re-runs the deterministic engine from the
//! initial tiling and checks every recorded step and hash.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::block::TrappedBlock;
use crate::geometry::{LengthPredicate, Rect};
use crate::reduce::{reduce_step, ReduceError};
use crate::tiling::Tiling;

/// Which side of the end-minimum floor drove a block surgery: its height was
/// good (`IntegerHeight`), or its width was good and the roof was peeled
/// (`IntegerWidthPeel`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SurgeryBranch {
    IntegerHeight,
    IntegerWidthPeel,
}

/// Cut axis: `X` is a vertical line `x = at`, `Y` a horizontal line `y = at`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Axis {
    #[serde(rename = "x")]
    X,
    #[serde(rename = "y")]
    Y,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutRecord {
    pub tile: usize,
    pub axis: Axis,
    pub at: crate::rational::Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum StepKind {
    /// Two tiles sharing a complete edge merged into `merged`.
    Coalesce { i: usize, j: usize, merged: Rect },
    /// A minimal trapped block reduced by cuts and coalesces.
    BlockSurgery {
        block: TrappedBlock,
        branch: SurgeryBranch,
        cuts: Vec<CutRecord>,
        coalesces: Vec<(usize, usize)>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    #[serde(flatten)]
    pub kind: StepKind,
    pub tiles_before: usize,
    pub tiles_after: usize,
    /// SHA-256 (hex) of the canonical document of the tiling after the step.
    pub tiling_hash: String,
}

impl ReductionStep {
    /// Number of roof peels performed in a block surgery: the vertical cuts.
    pub fn peel_count(&self) -> usize {
        match &self.kind {
            StepKind::Coalesce { .. } => 0,
            StepKind::BlockSurgery { cuts, .. } => {
                cuts.iter().filter(|c| c.axis == Axis::X).count()
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub predicate: LengthPredicate,
    pub initial: Tiling,
    pub steps: Vec<ReductionStep>,
    #[serde(rename = "final")]
    pub final_rect: Rect,
}

#[derive(Debug, Error)]
pub enum ReplayError {
    #[error("step {index} does not match the recorded step")]
    StepMismatch { index: usize },
    #[error("final rectangle does not match the recorded one")]
    FinalMismatch,
    #[error("replay failed at step {index}: {source}")]
    Reduce { index: usize, source: ReduceError },
}

impl ReductionTrace {
    /// Re-runs the engine from `initial` and checks that every recorded step
    /// (including its hash) is reproduced exactly.
    pub fn replay(&self) -> Result<(), ReplayError> {
        let mut cur = self.initial.clone();
        for (index, recorded) in self.steps.iter().enumerate() {
            let (next, step) = reduce_step(&cur, &self.predicate)
                .map_err(|source| ReplayError::Reduce { index, source })?;
            if &step != recorded {
                return Err(ReplayError::StepMismatch { index });
            }
            cur = next;
        }
        if cur.len() != 1 || cur.tile(0) != &self.final_rect {
            return Err(ReplayError::FinalMismatch);
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("trace serialization cannot fail");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// SHA-256 hex digest of the tiling's canonical (compact JSON) document.
pub fn tiling_hash(t: &Tiling) -> String {
    let bytes = serde_json::to_vec(t).expect("tiling serialization cannot fail");
    let digest = Sha256::digest(&bytes);
    let mut out = String::with_capacity(64);
    for byte in digest {
        out.push_str(&format!("{byte:02x}"));
    }
    out
}
