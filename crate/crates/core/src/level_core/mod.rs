//! Exact levels in (0,1], interval pieces, inf-compact level sets and the
//! piecewise-constant [`StepMap`] that carries every gradual object.

mod level_set;
mod step_map;

pub use level_set::LevelSet;
pub use step_map::{Atom, StepMap};

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// Builds the rational `num/den`. Panics when `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"` or `"p"` into a rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim()).map_err(|_| Error::OutOfRange(s.to_string(), "p/q rational"))
}

/// Formats a rational as `p/q`, or `p` when the denominator is 1.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A membership degree in [0,1].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Grade(Rational);

impl Grade {
    pub fn new(value: Rational) -> Result<Self> {
        if value.is_negative() || value > Rational::one() {
            return Err(Error::OutOfRange(fmt_rational(&value), "[0,1]"));
        }
        Ok(Grade(value))
    }

    pub fn from_ratio(num: i64, den: i64) -> Result<Self> {
        Self::new(ratio(num, den))
    }

    pub fn zero() -> Self {
        Grade(Rational::zero())
    }

    pub fn one() -> Self {
        Grade(Rational::one())
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }
}

impl From<Level> for Grade {
    fn from(level: Level) -> Self {
        Grade(level.0)
    }
}

impl FromStr for Grade {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Grade::new(parse_rational(s)?)
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_rational(&self.0))
    }
}

/// A level in (0,1].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Level(Rational);

impl Level {
    pub fn new(value: Rational) -> Result<Self> {
        if !value.is_positive() || value > Rational::one() {
            return Err(Error::OutOfRange(fmt_rational(&value), "(0,1]"));
        }
        Ok(Level(value))
    }

    pub fn from_ratio(num: i64, den: i64) -> Result<Self> {
        Self::new(ratio(num, den))
    }

    pub fn one() -> Self {
        Level(Rational::one())
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_inner(self) -> Rational {
        self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }
}

impl TryFrom<Grade> for Level {
    type Error = Error;

    fn try_from(grade: Grade) -> Result<Self> {
        Level::new(grade.0)
    }
}

impl FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Level::new(parse_rational(s)?)
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_rational(&self.0))
    }
}

/// An interval contained in (0,1]: `lo` may be 0 only when the left end is open.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalPiece {
    pub lo: Rational,
    pub hi: Rational,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl IntervalPiece {
    pub fn new(lo: Rational, hi: Rational, lo_closed: bool, hi_closed: bool) -> Result<Self> {
        let piece = IntervalPiece {
            lo,
            hi,
            lo_closed,
            hi_closed,
        };
        piece.validate()?;
        Ok(piece)
    }

    /// `{at}`.
    pub fn point(at: Rational) -> Result<Self> {
        Self::new(at.clone(), at, true, true)
    }

    /// `[lo, hi]`.
    pub fn closed(lo: Rational, hi: Rational) -> Result<Self> {
        Self::new(lo, hi, true, true)
    }

    /// `(lo, hi]`.
    pub fn left_open(lo: Rational, hi: Rational) -> Result<Self> {
        Self::new(lo, hi, false, true)
    }

    /// `[lo, hi)`.
    pub fn right_open(lo: Rational, hi: Rational) -> Result<Self> {
        Self::new(lo, hi, true, false)
    }

    /// `(lo, hi)`.
    pub fn open(lo: Rational, hi: Rational) -> Result<Self> {
        Self::new(lo, hi, false, false)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::InvalidPiece(format!("{self}: {why}")));
        if self.lo.is_negative() || self.hi > Rational::one() {
            return bad("not inside (0,1]");
        }
        if self.lo.is_zero() && self.lo_closed {
            return bad("0 is not a level");
        }
        if self.lo > self.hi {
            return bad("lo > hi");
        }
        if self.lo == self.hi && !(self.lo_closed && self.hi_closed) {
            return bad("degenerate interval");
        }
        Ok(())
    }

    pub fn is_singleton(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let above = if self.lo_closed { *x >= self.lo } else { *x > self.lo };
        let below = if self.hi_closed { *x <= self.hi } else { *x < self.hi };
        above && below
    }

    /// True when the piece meets `[alpha, 1]`.
    pub fn meets_at_or_above(&self, alpha: &Rational) -> bool {
        self.hi > *alpha || (self.hi == *alpha && self.hi_closed)
    }

    /// True when the piece meets `(alpha, 1]`.
    pub fn meets_above(&self, alpha: &Rational) -> bool {
        self.hi > *alpha
    }
}

impl fmt::Display for IntervalPiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_singleton() && self.lo_closed && self.hi_closed {
            return write!(f, "{{{}}}", fmt_rational(&self.lo));
        }
        write!(
            f,
            "{}{},{}{}",
            if self.lo_closed { '[' } else { '(' },
            fmt_rational(&self.lo),
            fmt_rational(&self.hi),
            if self.hi_closed { ']' } else { ')' }
        )
    }
}
