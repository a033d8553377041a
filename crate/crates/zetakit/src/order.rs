//! A total order on the integers that places 0 first and the negatives
//! past every positive: 0, 1, 2, 3, ..., -3, -2, -1.
//!
//! Comparison works through the key a -> -1/a, read as an extended
//! rational with -1/0 = -infinity. Segments of this line are either
//! ordinary finite runs or wrapped unions that pass through the
//! "far end" of the integers.

use crate::exactnum::Rational;
use std::fmt;

/// True iff `a` strictly precedes `b` in the reordered line.
pub fn precedes(a: i64, b: i64) -> bool {
    if a == b {
        return false;
    }
    match (a, b) {
        (0, _) => true,
        (_, 0) => false,
        _ => Rational::new(-1, a) < Rational::new(-1, b),
    }
}

/// Non-strict companion of [`precedes`].
pub fn precedes_eq(a: i64, b: i64) -> bool {
    a == b || precedes(a, b)
}

/// The set Z_{a,b} between two integers of the reordered line.
///
/// `Standard` is the ordinary finite run {a, ..., b}. `Wrapped` is the
/// union [a..-1] of everything from `a` to the top of the line plus the
/// initial run [0..b]; for a >= 1 that set is infinite. `make_segment`
/// is the validating constructor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Segment {
    Standard { a: i64, b: i64 },
    Wrapped { a: i64, b: i64 },
}

/// Pairs whose segment is not expressible as `Standard` or `Wrapped`:
/// both endpoints negative with b < a, which punches a hole inside the
/// negatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnsupportedSegment {
    pub a: i64,
    pub b: i64,
}

impl fmt::Display for UnsupportedSegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "segment from {} to {} is not a standard run or a wrapped union",
            self.a, self.b
        )
    }
}

impl std::error::Error for UnsupportedSegment {}

/// Describes Z_{a,b} for an arbitrary integer pair.
///
/// Standard covers monotone runs a <= b with both endpoints on the same
/// side of zero. Wrapped covers every pair with a after b in the new
/// order and b >= 0; for negative `a` the union [a..-1] + [0..b] is the
/// finite run {a..b}. Remaining pairs are rejected.
pub fn make_segment(a: i64, b: i64) -> Result<Segment, UnsupportedSegment> {
    if a <= b && (a >= 0 || b < 0) {
        Ok(Segment::Standard { a, b })
    } else if b >= 0 {
        Ok(Segment::Wrapped { a, b })
    } else {
        Err(UnsupportedSegment { a, b })
    }
}

impl Segment {
    /// Membership per the set definition.
    pub fn contains(&self, u: i64) -> bool {
        match *self {
            Segment::Standard { a, b } => a <= u && u <= b,
            Segment::Wrapped { a, b } => precedes_eq(a, u) || (0 <= u && u <= b),
        }
    }

    /// The ordinary run for `Standard` segments; `None` for wrapped ones,
    /// which are not enumerable.
    pub fn standard_range(&self) -> Option<std::ops::RangeInclusive<i64>> {
        match *self {
            Segment::Standard { a, b } => Some(a..=b),
            Segment::Wrapped { .. } => None,
        }
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Segment::Standard { a, b } => write!(f, "[{a}..{b}]"),
            Segment::Wrapped { a, b } => write!(f, "[{a}..-1] u [0..{b}]"),
        }
    }
}
