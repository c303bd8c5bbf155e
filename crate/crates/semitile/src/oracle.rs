//! Independent cross-check of the integer-side conclusion via the half-unit
//! checkerboard argument.
//!
//! Color the plane in half-unit strips, dark then light. The signed
//! dark-minus-light area of a rectangle factors as
//! `(F(x1) - F(x0)) * (F(y1) - F(y0))` where `F` is the 1-periodic triangle
//! wave, and it vanishes exactly when a side is an integer. Imbalances add
//! over a perfect tiling, so a tiling of integer-semi-integer tiles forces
//! the big rectangle's imbalance to zero; with the big rectangle anchored at
//! the origin that reads `F(W) * F(H) = 0`, hence an integer side. This
//! route shares no code with the reduction engine.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{LengthPredicate, Rect};
use crate::rational::Rational;
use crate::tiling::Tiling;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error(
        "tile {0} has no integer side; the checkerboard oracle needs integer-semi-integer tiles"
    )]
    Inapplicable(usize),
}

/// The 1-periodic triangle wave: with `f = x - floor(x)`, returns `f` for
/// `f <= 1/2` and `1 - f` otherwise. Zero exactly at the integers.
pub fn triangle_wave(x: &Rational) -> Rational {
    let f = x.fract();
    let half = Rational::new(1, 2).expect("nonzero denominator");
    if f <= half {
        f
    } else {
        Rational::one() - f
    }
}

/// Signed dark-minus-light area of `r` under the half-unit checkerboard.
/// Zero whenever the width or the height is an integer.
pub fn imbalance(r: &Rect) -> Rational {
    (triangle_wave(r.x1()) - triangle_wave(r.x0()))
        * (triangle_wave(r.y1()) - triangle_wave(r.y0()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub width_integer: bool,
    pub height_integer: bool,
    pub tile_imbalance_sum: Rational,
}

/// Runs the checkerboard argument on a valid tiling whose tiles all have an
/// integer side. The tile imbalances sum to zero, which equals the big
/// rectangle's imbalance and forces one of its sides to be an integer.
pub fn theorem_oracle(t: &Tiling) -> Result<OracleReport, OracleError> {
    // F(W) and F(H) only witness integer sides when measured from the origin.
    debug_assert!(t.big().x0().is_zero() && t.big().y0().is_zero());
    let integer = LengthPredicate::Integer;
    for (i, tile) in t.tiles().iter().enumerate() {
        if !tile.semi_integer(&integer) {
            return Err(OracleError::Inapplicable(i));
        }
    }
    let sum: Rational = t.tiles().iter().map(imbalance).sum();
    let big = imbalance(t.big());
    assert_eq!(
        sum, big,
        "imbalance additivity violated; the tiling is not perfect"
    );
    Ok(OracleReport {
        width_integer: t.width().is_integer(),
        height_integer: t.height().is_integer(),
        tile_imbalance_sum: sum,
    })
}
