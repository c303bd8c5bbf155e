//! Deterministic generation of valid semi-integer tilings, plus the pinwheel
//! fixtures used throughout the tests and examples.
//!
//! Guillotine splits keep every sub-rectangle semi-integer: a side that is an
//! integer of at least 2 admits an integer cut across it, and any integer
//! side admits a rational cut parallel to it. Guillotine tilings alone always
//! collapse under plain coalescing, so pinwheel embeddings provide the
//! non-guillotine structure that exercises the block surgery.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::geometry::Rect;
use crate::rational::Rational;
use crate::tiling::Tiling;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
    #[error("tile {leaf} has width {width}, not a positive integer multiple of 3")]
    LeafNotEmbeddable { leaf: usize, width: Rational },
}

/// Portable 64-bit linear congruential generator using Knuth's MMIX
/// constants: multiplier 6364136223846793005, increment 1442695040888963407.
/// Fixed here so that fixtures reproduce bit-for-bit across platforms and
/// implementations.
#[derive(Clone, Debug)]
pub struct Lcg64 {
    state: u64,
}

impl Lcg64 {
    pub fn new(seed: u64) -> Self {
        Lcg64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self
            .state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.state
    }

    /// Uniform-ish value in `0..n` (modulo reduction; fine for fixtures).
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        self.next_u64() % n
    }

    /// Exact Bernoulli draw for a rational probability in [0, 1].
    pub fn chance(&mut self, p: &Rational) -> bool {
        let num = p.numer().to_u64().expect("probability in [0, 1]");
        let den = p
            .denom()
            .to_u64()
            .expect("probability denominator fits u64");
        self.below(den) < num
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenParams {
    pub seed: u64,
    pub max_tiles: usize,
    /// Bound on the denominators of generated cut coordinates.
    pub max_denominator: u32,
    pub big_width: Rational,
    pub big_height: Rational,
    /// Probability of replacing a suitable leaf with a pinwheel.
    pub pinwheel_probability: Rational,
}

impl GenParams {
    fn validate(&self) -> Result<(), GenError> {
        if self.max_tiles < 1 {
            return Err(GenError::InvalidParams(
                "max_tiles must be at least 1".into(),
            ));
        }
        if self.max_denominator < 1 {
            return Err(GenError::InvalidParams(
                "max_denominator must be at least 1".into(),
            ));
        }
        if !self.big_width.is_positive() || !self.big_height.is_positive() {
            return Err(GenError::InvalidParams(
                "big rectangle sides must be positive".into(),
            ));
        }
        if !self.big_width.is_integer() && !self.big_height.is_integer() {
            return Err(GenError::InvalidParams(
                "at least one side of the big rectangle must be an integer".into(),
            ));
        }
        if self.pinwheel_probability.is_negative() || self.pinwheel_probability > Rational::one() {
            return Err(GenError::InvalidParams(
                "pinwheel_probability must lie in [0, 1]".into(),
            ));
        }
        Ok(())
    }
}

/// A rational strictly between `a` and `b` whose denominator is at most
/// `max_den`, or `None` if a few attempts find no room.
fn rational_between(a: &Rational, b: &Rational, max_den: u32, rng: &mut Lcg64) -> Option<Rational> {
    for _ in 0..16 {
        let d = 1 + rng.below(max_den as u64);
        let dr = Rational::from(d);
        let lo: BigInt = (a * &dr).floor_int() + 1;
        let hi: BigInt = (b * &dr).ceil_int() - 1;
        if lo > hi {
            continue;
        }
        let span = (&hi - &lo + BigInt::from(1))
            .to_u64()
            .expect("cut range fits u64 at desk scale");
        let pick = &lo + BigInt::from(rng.below(span));
        return Some(Rational::new(pick, d).expect("nonzero denominator"));
    }
    None
}

#[derive(Clone, Copy)]
enum SplitMove {
    VerticalInteger,
    HorizontalRational,
    HorizontalInteger,
    VerticalRational,
}

fn split_leaf(leaf: &Rect, max_den: u32, rng: &mut Lcg64) -> Option<(Rect, Rect)> {
    let w = leaf.width();
    let h = leaf.height();
    let two = Rational::from(2i64);
    let mut moves = Vec::with_capacity(4);
    if w.is_integer() {
        if w >= two {
            moves.push(SplitMove::VerticalInteger);
        }
        moves.push(SplitMove::HorizontalRational);
    }
    if h.is_integer() {
        if h >= two {
            moves.push(SplitMove::HorizontalInteger);
        }
        moves.push(SplitMove::VerticalRational);
    }
    if moves.is_empty() {
        return None;
    }
    let first = rng.below(moves.len() as u64) as usize;
    for k in 0..moves.len() {
        let cut = match moves[(first + k) % moves.len()] {
            SplitMove::VerticalInteger => {
                let w_int = w.to_u64().expect("integer width fits u64");
                let offset = 1 + rng.below(w_int - 1);
                Some(leaf.x0() + &Rational::from(offset))
            }
            SplitMove::HorizontalInteger => {
                let h_int = h.to_u64().expect("integer height fits u64");
                let offset = 1 + rng.below(h_int - 1);
                Some(leaf.y0() + &Rational::from(offset))
            }
            SplitMove::HorizontalRational => rational_between(leaf.y0(), leaf.y1(), max_den, rng),
            SplitMove::VerticalRational => rational_between(leaf.x0(), leaf.x1(), max_den, rng),
        };
        let vertical = matches!(
            moves[(first + k) % moves.len()],
            SplitMove::VerticalInteger | SplitMove::VerticalRational
        );
        if let Some(at) = cut {
            let (a, b) = if vertical {
                (
                    Rect::new(
                        leaf.x0().clone(),
                        leaf.y0().clone(),
                        at.clone(),
                        leaf.y1().clone(),
                    ),
                    Rect::new(at, leaf.y0().clone(), leaf.x1().clone(), leaf.y1().clone()),
                )
            } else {
                (
                    Rect::new(
                        leaf.x0().clone(),
                        leaf.y0().clone(),
                        leaf.x1().clone(),
                        at.clone(),
                    ),
                    Rect::new(leaf.x0().clone(), at, leaf.x1().clone(), leaf.y1().clone()),
                )
            };
            return Some((
                a.expect("interior cut leaves positive extent"),
                b.expect("interior cut leaves positive extent"),
            ));
        }
    }
    None
}

fn pinwheel_width_multiple(leaf: &Rect) -> Option<Rational> {
    let scale = leaf.width() / Rational::from(3i64);
    if scale.is_integer() && scale.is_positive() {
        Some(scale)
    } else {
        None
    }
}

/// Pinwheel tiles filling `leaf`, scaled from the unit fixture. Widths stay
/// integers because the x scale is an integer.
fn pinwheel_tiles_in(leaf: &Rect, sx: &Rational) -> Vec<Rect> {
    let base = fixture_pinwheel(&Rational::one());
    let sy = leaf.height() / Rational::from(3i64);
    base.tiles()
        .iter()
        .map(|t| t.scaled(sx, &sy).translated(leaf.x0(), leaf.y0()))
        .collect()
}

/// Deterministic pseudo-random tiling of the big rectangle: guillotine splits
/// that keep every leaf semi-integer, with pinwheel embeddings at the given
/// probability. Identical parameters give bit-identical documents.
pub fn gen_guillotine(params: &GenParams) -> Result<Tiling, GenError> {
    params.validate()?;
    let mut rng = Lcg64::new(params.seed);
    let big = Rect::new(
        Rational::zero(),
        Rational::zero(),
        params.big_width.clone(),
        params.big_height.clone(),
    )
    .expect("validated params give a positive rectangle");

    let mut leaves: Vec<Rect> = vec![big];
    let mut frozen: Vec<Rect> = Vec::new();
    while !leaves.is_empty() && leaves.len() + frozen.len() < params.max_tiles {
        let pick = rng.below(leaves.len() as u64) as usize;
        let leaf = leaves.swap_remove(pick);
        let whole_box = leaves.is_empty() && frozen.is_empty();
        // Occasionally freeze a leaf untouched, but always split at least once.
        if !whole_box && rng.below(6) == 0 {
            frozen.push(leaf);
            continue;
        }
        let room_for_pinwheel =
            !whole_box && leaves.len() + frozen.len() + 1 + 4 <= params.max_tiles;
        if room_for_pinwheel {
            if let Some(sx) = pinwheel_width_multiple(&leaf) {
                if rng.chance(&params.pinwheel_probability) {
                    frozen.extend(pinwheel_tiles_in(&leaf, &sx));
                    continue;
                }
            }
        }
        match split_leaf(&leaf, params.max_denominator, &mut rng) {
            Some((a, b)) => {
                leaves.push(a);
                leaves.push(b);
            }
            None => frozen.push(leaf),
        }
    }
    frozen.extend(leaves);
    Tiling::from_size(params.big_width.clone(), params.big_height.clone(), frozen)
        .map_err(|e| GenError::InvalidParams(e.to_string()))
}

/// The five-tile pinwheel in a `3` by `3q` box. Every tile has an integer
/// width, so the tiling is semi-integer for any positive `q`, and no two
/// tiles share a complete edge, which forces the block-surgery path of the
/// reducer.
pub fn fixture_pinwheel(q: &Rational) -> Tiling {
    assert!(q.is_positive(), "pinwheel parameter must be positive");
    let i = |v: i64| Rational::from(v);
    let q1 = q.clone();
    let q2 = q * &i(2);
    let q3 = q * &i(3);
    let rect = |x0: Rational, y0: Rational, x1: Rational, y1: Rational| {
        Rect::new(x0, y0, x1, y1).expect("pinwheel tiles have positive extent")
    };
    let tiles = vec![
        rect(i(0), i(0), i(2), q1.clone()),
        rect(i(2), i(0), i(3), q2.clone()),
        rect(i(1), q2.clone(), i(3), q3.clone()),
        rect(i(0), q1.clone(), i(1), q3.clone()),
        rect(i(1), q1, i(2), q2),
    ];
    Tiling::from_size(i(3), q3, tiles).expect("pinwheel box has positive extent")
}

/// Replaces tile `leaf` with a pinwheel: x is scaled by `width / 3` (which
/// must be a positive integer) and y so that the `3q`-tall fixture spans the
/// leaf's height. The first pinwheel tile takes the leaf's index slot and the
/// other four are appended.
pub fn embed_pinwheel(t: &Tiling, leaf: usize, q: &Rational) -> Result<Tiling, GenError> {
    assert!(q.is_positive(), "pinwheel parameter must be positive");
    let leaf_rect = t.tile(leaf).clone();
    let sx = match pinwheel_width_multiple(&leaf_rect) {
        Some(sx) => sx,
        None => {
            return Err(GenError::LeafNotEmbeddable {
                leaf,
                width: leaf_rect.width(),
            })
        }
    };
    let base = fixture_pinwheel(q);
    let sy = leaf_rect.height() / (q * &Rational::from(3i64));
    let placed: Vec<Rect> = base
        .tiles()
        .iter()
        .map(|tile| {
            tile.scaled(&sx, &sy)
                .translated(leaf_rect.x0(), leaf_rect.y0())
        })
        .collect();
    let mut tiles = t.tiles().to_vec();
    tiles[leaf] = placed[0].clone();
    tiles.extend_from_slice(&placed[1..]);
    Tiling::from_size(t.width(), t.height(), tiles)
        .map_err(|e| GenError::InvalidParams(e.to_string()))
}
