//! Axis-aligned rectangles with exact corner coordinates, and the pluggable
//! length predicate that defines which side lengths count as "good".
//!
//! Coordinates are stored as absolute corner positions rather than
//! origin+extent so that edge-sharing tests are plain coordinate equality.

use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("rectangle must have positive width and height: ({0}, {1}, {2}, {3})")]
    DegenerateRect(Rational, Rational, Rational, Rational),
    #[error("length predicate modulus must be positive, got {0}")]
    NonPositiveModulus(Rational),
    #[error("unknown length predicate {0:?} (expected \"integer\" or \"multiple:<g>\")")]
    UnknownPredicate(String),
}

/// A closed axis-aligned rectangle with `x0 < x1` and `y0 < y1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rect {
    x0: Rational,
    y0: Rational,
    x1: Rational,
    y1: Rational,
}

impl Rect {
    pub fn new(
        x0: Rational,
        y0: Rational,
        x1: Rational,
        y1: Rational,
    ) -> Result<Self, GeometryError> {
        if x0 >= x1 || y0 >= y1 {
            return Err(GeometryError::DegenerateRect(x0, y0, x1, y1));
        }
        Ok(Rect { x0, y0, x1, y1 })
    }

    /// Shorthand for integer corners, handy in fixtures.
    pub fn from_ints(x0: i64, y0: i64, x1: i64, y1: i64) -> Result<Self, GeometryError> {
        Rect::new(x0.into(), y0.into(), x1.into(), y1.into())
    }

    pub fn x0(&self) -> &Rational {
        &self.x0
    }

    pub fn y0(&self) -> &Rational {
        &self.y0
    }

    pub fn x1(&self) -> &Rational {
        &self.x1
    }

    pub fn y1(&self) -> &Rational {
        &self.y1
    }

    pub fn width(&self) -> Rational {
        &self.x1 - &self.x0
    }

    pub fn height(&self) -> Rational {
        &self.y1 - &self.y0
    }

    pub fn area(&self) -> Rational {
        self.width() * self.height()
    }

    pub fn translated(&self, dx: &Rational, dy: &Rational) -> Rect {
        Rect {
            x0: &self.x0 + dx,
            y0: &self.y0 + dy,
            x1: &self.x1 + dx,
            y1: &self.y1 + dy,
        }
    }

    pub fn scaled(&self, sx: &Rational, sy: &Rational) -> Rect {
        assert!(
            sx.is_positive() && sy.is_positive(),
            "scale must be positive"
        );
        Rect {
            x0: &self.x0 * sx,
            y0: &self.y0 * sy,
            x1: &self.x1 * sx,
            y1: &self.y1 * sy,
        }
    }

    /// True iff `other` lies within `self` (closed containment).
    pub fn contains_rect(&self, other: &Rect) -> bool {
        self.x0 <= other.x0 && other.x1 <= self.x1 && self.y0 <= other.y0 && other.y1 <= self.y1
    }

    /// Smallest rectangle containing both.
    pub fn bounding_union(&self, other: &Rect) -> Rect {
        Rect {
            x0: self.x0.clone().min(other.x0.clone()),
            y0: self.y0.clone().min(other.y0.clone()),
            x1: self.x1.clone().max(other.x1.clone()),
            y1: self.y1.clone().max(other.y1.clone()),
        }
    }

    /// True iff the interiors of the two rectangles intersect.
    pub fn interiors_overlap(&self, other: &Rect) -> bool {
        self.x0 < other.x1 && other.x0 < self.x1 && self.y0 < other.y1 && other.y0 < self.y1
    }

    /// At least one side length satisfies the predicate.
    pub fn semi_integer(&self, p: &LengthPredicate) -> bool {
        p.accepts(&self.width()) || p.accepts(&self.height())
    }
}

impl fmt::Display for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.x0, self.y0, self.x1, self.y1)
    }
}

impl fmt::Debug for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rect{}", self)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RectDoc {
    x0: Rational,
    y0: Rational,
    x1: Rational,
    y1: Rational,
}

impl Serialize for Rect {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RectDoc {
            x0: self.x0.clone(),
            y0: self.y0.clone(),
            x1: self.x1.clone(),
            y1: self.y1.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Rect {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let doc = RectDoc::deserialize(deserializer)?;
        Rect::new(doc.x0, doc.y0, doc.x1, doc.y1).map_err(de::Error::custom)
    }
}

/// Which side lengths count as good. `Integer` is the default; `MultipleOf(g)`
/// accepts integer multiples of a fixed positive rational. Both families are
/// closed under addition and subtraction, which is all the surgery relies on.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum LengthPredicate {
    #[default]
    Integer,
    MultipleOf(Rational),
}

impl LengthPredicate {
    pub fn multiple_of(g: Rational) -> Result<Self, GeometryError> {
        if !g.is_positive() {
            return Err(GeometryError::NonPositiveModulus(g));
        }
        Ok(LengthPredicate::MultipleOf(g))
    }

    pub fn accepts(&self, len: &Rational) -> bool {
        match self {
            LengthPredicate::Integer => len.is_integer(),
            LengthPredicate::MultipleOf(g) => len.is_multiple_of(g),
        }
    }
}

impl fmt::Display for LengthPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LengthPredicate::Integer => write!(f, "integer"),
            LengthPredicate::MultipleOf(g) => write!(f, "multiple:{}", g),
        }
    }
}

impl FromStr for LengthPredicate {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "integer" {
            return Ok(LengthPredicate::Integer);
        }
        if let Some(g) = s.strip_prefix("multiple:") {
            let g: Rational = g
                .parse()
                .map_err(|_| GeometryError::UnknownPredicate(s.to_string()))?;
            return LengthPredicate::multiple_of(g);
        }
        Err(GeometryError::UnknownPredicate(s.to_string()))
    }
}

impl Serialize for LengthPredicate {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LengthPredicate {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// Free-function form of [`Rect::semi_integer`].
pub fn semi_integer(r: &Rect, p: &LengthPredicate) -> bool {
    r.semi_integer(p)
}
