//! The tiling value, the perfect-tiling validator, and the JSON document
//! format.
//!
//! A [`Tiling`] is a big rectangle anchored at the origin plus an ordered
//! sequence of tile rectangles. Whether the tiles actually form a perfect
//! tiling is a checked property, never an assumption: [`validate_tiling`]
//! compresses all coordinates into an elementary-cell grid and requires each
//! cell inside the big rectangle to be covered by exactly one tile.

use std::collections::BTreeSet;
use std::fmt;
use std::fs;
use std::path::Path;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::geometry::{GeometryError, LengthPredicate, Rect};
use crate::rational::Rational;

/// A big rectangle `(0, 0, width, height)` plus tiles with stable indices.
#[derive(Clone, PartialEq, Eq)]
pub struct Tiling {
    big: Rect,
    tiles: Vec<Rect>,
}

impl Tiling {
    /// Tiling of a `width` by `height` rectangle anchored at the origin.
    pub fn from_size(
        width: Rational,
        height: Rational,
        tiles: Vec<Rect>,
    ) -> Result<Self, GeometryError> {
        let big = Rect::new(Rational::zero(), Rational::zero(), width, height)?;
        Ok(Tiling { big, tiles })
    }

    /// Translates `big` and all tiles so that `big` sits at the origin.
    pub fn from_big(big: Rect, tiles: Vec<Rect>) -> Self {
        let dx = -big.x0();
        let dy = -big.y0();
        let tiles = tiles.iter().map(|t| t.translated(&dx, &dy)).collect();
        Tiling {
            big: big.translated(&dx, &dy),
            tiles,
        }
    }

    pub fn big(&self) -> &Rect {
        &self.big
    }

    pub fn width(&self) -> Rational {
        self.big.width()
    }

    pub fn height(&self) -> Rational {
        self.big.height()
    }

    pub fn tiles(&self) -> &[Rect] {
        &self.tiles
    }

    pub fn tile(&self, i: usize) -> &Rect {
        &self.tiles[i]
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub(crate) fn tiles_mut(&mut self) -> &mut Vec<Rect> {
        &mut self.tiles
    }

    /// Both axes scaled by a positive factor.
    pub fn scaled(&self, factor: &Rational) -> Tiling {
        Tiling {
            big: self.big.scaled(factor, factor),
            tiles: self
                .tiles
                .iter()
                .map(|t| t.scaled(factor, factor))
                .collect(),
        }
    }

    /// Reflection across the vertical midline of the big rectangle. Tile
    /// indices are preserved.
    pub fn mirrored_x(&self) -> Tiling {
        let w = self.width();
        let flip = |t: &Rect| {
            Rect::new(&w - t.x1(), t.y0().clone(), &w - t.x0(), t.y1().clone())
                .expect("mirrored rectangle keeps positive extent")
        };
        Tiling {
            big: self.big.clone(),
            tiles: self.tiles.iter().map(flip).collect(),
        }
    }
}

impl fmt::Debug for Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Tiling[{} x {}; {} tiles]",
            self.width(),
            self.height(),
            self.len()
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Tiles `i` and `j` have intersecting interiors.
    Overlap(usize, usize),
    /// An elementary cell inside the big rectangle covered by no tile.
    Gap(Rect),
    /// Tile `i` is not contained in the big rectangle.
    OutOfBounds(usize),
    /// Total tile area differs from the big rectangle's area.
    AreaMismatch {
        expected: Rational,
        actual: Rational,
    },
    /// Tile `i` fails the semi-integer test under the chosen predicate.
    NonSemiInteger(usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Overlap(i, j) => write!(f, "Overlap({i}, {j})"),
            Violation::Gap(cell) => write!(f, "Gap({cell})"),
            Violation::OutOfBounds(i) => write!(f, "OutOfBounds({i})"),
            Violation::AreaMismatch { expected, actual } => {
                write!(f, "AreaMismatch(expected {expected}, actual {actual})")
            }
            Violation::NonSemiInteger(i) => write!(f, "NonSemiInteger({i})"),
        }
    }
}

/// Everything the validator found. `valid` is true iff `violations` is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    fn new(violations: Vec<Violation>) -> Self {
        ValidationReport {
            valid: violations.is_empty(),
            violations,
        }
    }
}

/// Checks that the tiles perfectly tile the big rectangle. Violations are
/// data, not failures; an invalid tiling yields a report, never an error.
pub fn validate_tiling(t: &Tiling) -> ValidationReport {
    let zero = Rational::zero();
    let w = t.width();
    let h = t.height();

    let mut xs: Vec<Rational> = vec![zero.clone(), w.clone()];
    let mut ys: Vec<Rational> = vec![zero.clone(), h.clone()];
    for tile in t.tiles() {
        xs.push(tile.x0().clone());
        xs.push(tile.x1().clone());
        ys.push(tile.y0().clone());
        ys.push(tile.y1().clone());
    }
    xs.sort();
    xs.dedup();
    ys.sort();
    ys.dedup();

    let xi = |v: &Rational| xs.binary_search(v).expect("coordinate present in grid");
    let yi = |v: &Rational| ys.binary_search(v).expect("coordinate present in grid");
    let cols = xs.len() - 1;
    let rows = ys.len() - 1;

    // Range-increment per row via a difference array, then prefix-sum.
    let stride = cols + 1;
    let mut diff = vec![0i32; rows * stride];
    let mut out_of_bounds = Vec::new();
    for (i, tile) in t.tiles().iter().enumerate() {
        if !t.big().contains_rect(tile) {
            out_of_bounds.push(Violation::OutOfBounds(i));
        }
        let (cx0, cx1) = (xi(tile.x0()), xi(tile.x1()));
        let (cy0, cy1) = (yi(tile.y0()), yi(tile.y1()));
        for row in diff.chunks_mut(stride).take(cy1).skip(cy0) {
            row[cx0] += 1;
            row[cx1] -= 1;
        }
    }

    // Cells strictly outside the big rectangle only exist when some tile is
    // out of bounds; they are skipped for gap detection but still count for
    // overlaps.
    let bx0 = xi(&zero);
    let bx1 = xi(&w);
    let by0 = yi(&zero);
    let by1 = yi(&h);

    let mut overlap_pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut gaps = Vec::new();
    for ry in 0..rows {
        let mut count = 0i32;
        for rx in 0..cols {
            count += diff[ry * stride + rx];
            let inside = rx >= bx0 && rx < bx1 && ry >= by0 && ry < by1;
            if count == 0 && inside {
                let cell = Rect::new(
                    xs[rx].clone(),
                    ys[ry].clone(),
                    xs[rx + 1].clone(),
                    ys[ry + 1].clone(),
                )
                .expect("grid cells have positive extent");
                gaps.push(Violation::Gap(cell));
            } else if count >= 2 {
                let covering: Vec<usize> = t
                    .tiles()
                    .iter()
                    .enumerate()
                    .filter(|(_, tile)| {
                        *tile.x0() <= xs[rx]
                            && xs[rx + 1] <= *tile.x1()
                            && *tile.y0() <= ys[ry]
                            && ys[ry + 1] <= *tile.y1()
                    })
                    .map(|(i, _)| i)
                    .collect();
                for (a, &i) in covering.iter().enumerate() {
                    for &j in &covering[a + 1..] {
                        overlap_pairs.insert((i, j));
                    }
                }
            }
        }
    }

    let mut violations = out_of_bounds;
    violations.extend(
        overlap_pairs
            .into_iter()
            .map(|(i, j)| Violation::Overlap(i, j)),
    );
    violations.extend(gaps);

    let actual: Rational = t.tiles().iter().map(Rect::area).sum();
    let expected = t.big().area();
    if actual != expected {
        violations.push(Violation::AreaMismatch { expected, actual });
    }

    ValidationReport::new(violations)
}

/// Indices of tiles that fail the semi-integer test under `p`. Empty means
/// the tiling is admissible input for the reduction engine.
pub fn check_semi_integer_all(t: &Tiling, p: &LengthPredicate) -> Vec<usize> {
    t.tiles()
        .iter()
        .enumerate()
        .filter(|(_, tile)| !tile.semi_integer(p))
        .map(|(i, _)| i)
        .collect()
}

/// Geometric validation plus semi-integer checks in one report.
pub fn validate_admissible(t: &Tiling, p: &LengthPredicate) -> ValidationReport {
    let mut violations = validate_tiling(t).violations;
    violations.extend(
        check_semi_integer_all(t, p)
            .into_iter()
            .map(Violation::NonSemiInteger),
    );
    ValidationReport::new(violations)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TilingDoc {
    width: Rational,
    height: Rational,
    tiles: Vec<Rect>,
}

impl Serialize for Tiling {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        TilingDoc {
            width: self.width(),
            height: self.height(),
            tiles: self.tiles.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Tiling {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let doc = TilingDoc::deserialize(deserializer)?;
        Tiling::from_size(doc.width, doc.height, doc.tiles).map_err(de::Error::custom)
    }
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("cannot access {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(serde_json::Error),
    #[error("invalid document: {0}")]
    InvalidDocument(serde_json::Error),
}

/// Reads a tiling document. Syntax problems surface as `Parse`, violated
/// value constraints (zero denominators, empty rectangles, unknown keys) as
/// `InvalidDocument`; both carry line/column context from the decoder.
pub fn load_tiling(path: impl AsRef<Path>) -> Result<Tiling, DocumentError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| DocumentError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_tiling(&text)
}

pub fn parse_tiling(text: &str) -> Result<Tiling, DocumentError> {
    serde_json::from_str(text).map_err(|e| {
        let field_parse_failure = {
            let msg = e.to_string();
            msg.contains("denominator must not be zero") || msg.contains("malformed rational")
        };
        if e.classify() == serde_json::error::Category::Data && !field_parse_failure {
            DocumentError::InvalidDocument(e)
        } else {
            DocumentError::Parse(e)
        }
    })
}

/// Serializes `t` in the canonical document form (pretty JSON, trailing
/// newline). Byte-identical for equal tilings.
pub fn tiling_to_string(t: &Tiling) -> String {
    let mut s = serde_json::to_string_pretty(t).expect("tiling serialization cannot fail");
    s.push('\n');
    s
}

pub fn save_tiling(t: &Tiling, path: impl AsRef<Path>) -> Result<(), DocumentError> {
    let path = path.as_ref();
    fs::write(path, tiling_to_string(t)).map_err(|source| DocumentError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::fixture_pinwheel;
    use proptest::prelude::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn rect(x0: i64, y0: i64, x1: i64, y1: i64) -> Rect {
        Rect::from_ints(x0, y0, x1, y1).unwrap()
    }

    /// Independent validity oracle: containment, pairwise disjoint interiors,
    /// and exact area. For closed rectangles these three together are
    /// equivalent to a perfect tiling.
    fn brute_force_valid(t: &Tiling) -> bool {
        let contained = t.tiles().iter().all(|tile| t.big().contains_rect(tile));
        let disjoint =
            (0..t.len()).all(|i| (i + 1..t.len()).all(|j| !t.tile(i).interiors_overlap(t.tile(j))));
        let area: Rational = t.tiles().iter().map(Rect::area).sum();
        contained && disjoint && area == t.big().area()
    }

    #[test]
    fn pinwheel_is_valid() {
        let t = fixture_pinwheel(&Rational::one());
        let report = validate_tiling(&t);
        assert!(report.valid, "{:?}", report.violations);
        assert!(brute_force_valid(&t));
        assert!(check_semi_integer_all(&t, &LengthPredicate::Integer).is_empty());
    }

    #[test]
    fn duplicate_tile_reports_overlap_and_area() {
        let t =
            Tiling::from_size(r("1"), r("1"), vec![rect(0, 0, 1, 1), rect(0, 0, 1, 1)]).unwrap();
        let report = validate_tiling(&t);
        assert!(!report.valid);
        assert_eq!(
            report.violations,
            vec![
                Violation::Overlap(0, 1),
                Violation::AreaMismatch {
                    expected: r("1"),
                    actual: r("2")
                }
            ]
        );
        assert!(!brute_force_valid(&t));
    }

    #[test]
    fn missing_half_reports_gap_and_area() {
        let t = Tiling::from_size(r("2"), r("1"), vec![rect(0, 0, 1, 1)]).unwrap();
        let report = validate_tiling(&t);
        assert_eq!(
            report.violations,
            vec![
                Violation::Gap(rect(1, 0, 2, 1)),
                Violation::AreaMismatch {
                    expected: r("2"),
                    actual: r("1")
                }
            ]
        );
    }

    #[test]
    fn out_of_bounds_detected() {
        let t = Tiling::from_size(r("1"), r("1"), vec![rect(0, 0, 2, 1)]).unwrap();
        let report = validate_tiling(&t);
        assert!(report.violations.contains(&Violation::OutOfBounds(0)));
    }

    #[test]
    fn semi_integer_indices() {
        let quarters = Tiling::from_size(
            r("1"),
            r("1"),
            vec![
                Rect::new(r("0"), r("0"), r("1/2"), r("1/2")).unwrap(),
                Rect::new(r("1/2"), r("0"), r("1"), r("1/2")).unwrap(),
                Rect::new(r("0"), r("1/2"), r("1"), r("1")).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(
            check_semi_integer_all(&quarters, &LengthPredicate::Integer),
            vec![0, 1]
        );
        let halves = LengthPredicate::multiple_of(r("1/2")).unwrap();
        assert!(check_semi_integer_all(&quarters, &halves).is_empty());
        let report = validate_admissible(&quarters, &LengthPredicate::Integer);
        assert_eq!(
            report.violations,
            vec![Violation::NonSemiInteger(0), Violation::NonSemiInteger(1)]
        );
    }

    #[test]
    fn grid_size_bound() {
        let t = fixture_pinwheel(&Rational::one());
        let n = t.len();
        let mut xs: Vec<Rational> = vec![Rational::zero(), t.width()];
        for tile in t.tiles() {
            xs.push(tile.x0().clone());
            xs.push(tile.x1().clone());
        }
        xs.sort();
        xs.dedup();
        assert!(xs.len() <= 2 * n + 2);
    }

    #[test]
    fn document_round_trip() {
        let t = fixture_pinwheel(&r("1/2"));
        let text = tiling_to_string(&t);
        let back = parse_tiling(&text).unwrap();
        assert_eq!(back, t);
        assert_eq!(tiling_to_string(&back), text);
    }

    #[test]
    fn document_rejections() {
        let zero_denominator =
            r#"{"width":"1","height":"1","tiles":[{"x0":"0","y0":"0","x1":"1/0","y1":"1"}]}"#;
        assert!(matches!(
            parse_tiling(zero_denominator),
            Err(DocumentError::Parse(_))
        ));

        let unknown_key = r#"{"width":"1","height":"1","tiles":[],"color":"red"}"#;
        assert!(matches!(
            parse_tiling(unknown_key),
            Err(DocumentError::InvalidDocument(_))
        ));

        let empty_rect =
            r#"{"width":"1","height":"1","tiles":[{"x0":"0","y0":"0","x1":"0","y1":"1"}]}"#;
        assert!(parse_tiling(empty_rect).is_err());

        let syntax = r#"{"width":"1","#;
        assert!(matches!(parse_tiling(syntax), Err(DocumentError::Parse(_))));
    }

    proptest! {
        #[test]
        fn validity_invariant_under_permutation(seed in 0u64..200, swap_a in 0usize..5, swap_b in 0usize..5) {
            let t = fixture_pinwheel(&Rational::one());
            let mut tiles = t.tiles().to_vec();
            tiles.swap(swap_a.min(4), swap_b.min(4));
            if seed % 2 == 0 {
                tiles.reverse();
            }
            let shuffled = Tiling::from_size(t.width(), t.height(), tiles).unwrap();
            prop_assert_eq!(validate_tiling(&shuffled).valid, validate_tiling(&t).valid);
        }
    }
}
