//! Storage and coordinates for one fundamental period of a closed pattern.
//!
//! # Coordinates
//!
//! Entries carry paper coordinates `(i, j)` with `i, j` integers. The entry
//! `(i, j)` lives in row `r = j - i - 1`; a closed pattern of width `n` stores
//! rows `0..=n+1` (the boundary rows included) and every row is cyclic with
//! period `n + 3`, so `(i, j)` and `(i + n + 3, j + n + 3)` resolve to the
//! same stored scalar.
//!
//! Within row `r`, the entry `(i, j)` is stored at column `(i - origin) mod
//! (n + 3)`. The `origin` field only shifts which `i` sits at storage column
//! 0; constructors in this crate always produce `origin = 0`.
//!
//! For display, entry `(i, j)` occupies staggered column `k = i + j - 1 =
//! 2i + r`: with `origin = 0`, even rows occupy even columns and odd rows odd
//! columns. A diamond is a quadruple centered on a column `k`:
//!
//! ```text
//!        N            N = (r - 1, k)
//!      W   E          W = (r, k - 1),  E = (r, k + 1)
//!        S            S = (r + 1, k)
//! ```
//!
//! In paper coordinates, the diamond whose west entry is `(i, j)` has
//! `N = (i + 1, j)`, `E = (i + 1, j + 1)`, and `S = (i, j + 1)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Which diamond rule a stored grid is meant to satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PatternKind {
    YFrieze,
    Frieze,
}

impl PatternKind {
    /// The constant filling boundary rows: 0 for Y-friezes, 1 for friezes.
    pub fn boundary(self) -> Rational {
        match self {
            PatternKind::YFrieze => Rational::zero(),
            PatternKind::Frieze => Rational::one(),
        }
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PatternKind::YFrieze => "yfrieze",
            PatternKind::Frieze => "frieze",
        })
    }
}

/// One fundamental period of a closed pattern: `width + 2` rows of
/// `width + 3` scalars each, cyclic in the column direction.
///
/// The grid itself only knows its shape; which diamond rule the entries
/// satisfy is enforced by the owning type ([`crate::yfrieze::YFrieze`] or
/// [`crate::frieze::Frieze`]). Equality and hashing are structural, so two
/// patterns differing by translation are distinct values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PatternGrid {
    width: usize,
    origin: i64,
    rows: Vec<Vec<Rational>>,
}

impl PatternGrid {
    /// Wraps pre-laid-out rows after checking the shape: exactly `width + 2`
    /// rows of `width + 3` entries.
    pub fn from_rows(width: usize, origin: i64, rows: Vec<Vec<Rational>>) -> Result<PatternGrid> {
        if width == 0 {
            return Err(Error::domain("pattern width must be at least 1"));
        }
        if rows.len() != width + 2 {
            return Err(Error::domain(format!(
                "width {} needs {} rows, got {}",
                width,
                width + 2,
                rows.len()
            )));
        }
        let period = width + 3;
        for (r, row) in rows.iter().enumerate() {
            if row.len() != period {
                return Err(Error::domain(format!(
                    "row {} has {} entries, period is {}",
                    r,
                    row.len(),
                    period
                )));
            }
        }
        Ok(PatternGrid { width, origin, rows })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Column period `width + 3`.
    pub fn period(&self) -> usize {
        self.width + 3
    }

    pub fn origin(&self) -> i64 {
        self.origin
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Row `r` as stored, columns `origin, origin + 1, ...` in order.
    pub fn row(&self, r: usize) -> &[Rational] {
        &self.rows[r]
    }

    /// Looks up the entry at paper coordinates `(i, j)`. The row `j - i - 1`
    /// must be one of the stored rows `0..=width+1`; columns wrap cyclically.
    pub fn get(&self, i: i64, j: i64) -> Result<&Rational> {
        let r = j - i - 1;
        if r < 0 || r as usize > self.width + 1 {
            return Err(Error::Index { i, j, row: r, max_row: self.width + 1 });
        }
        Ok(self.entry(r as usize, i))
    }

    /// Entry in row `r` at column index `i` (cyclic).
    pub(crate) fn entry(&self, r: usize, i: i64) -> &Rational {
        let c = (i - self.origin).rem_euclid(self.period() as i64) as usize;
        &self.rows[r][c]
    }

    /// The diamond whose west entry sits in row `r` at column index `i`,
    /// as `(n, w, e, s)`. Requires `1 <= r <= width` so all four rows exist.
    pub(crate) fn diamond(&self, r: usize, i: i64) -> (&Rational, &Rational, &Rational, &Rational) {
        debug_assert!(r >= 1 && r <= self.width);
        let n = self.entry(r - 1, i + 1);
        let w = self.entry(r, i);
        let e = self.entry(r, i + 1);
        let s = self.entry(r + 1, i);
        (n, w, e, s)
    }

    /// Whether the grid satisfies the glide symmetry
    /// `entry(i, j) == entry(j, i + width + 3)`, which sends row `r` to row
    /// `width + 1 - r`. Both pattern families satisfy it; see
    /// [`crate::yfrieze::check_glide_symmetry`].
    pub(crate) fn glide_symmetric(&self) -> bool {
        for r in 0..self.rows.len() {
            let r_img = self.width + 1 - r;
            for c in 0..self.period() as i64 {
                let i = self.origin + c;
                let j = i + r as i64 + 1;
                // image of (i, j) is (j, i + period), in row r_img at index j
                if self.entry(r, i) != self.entry(r_img, j) {
                    return false;
                }
            }
        }
        true
    }
}

/// Step direction from one zig-zag row to the next.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = "SW")]
    SouthWest,
    #[serde(rename = "SE")]
    SouthEast,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::SouthWest => "SW",
            Direction::SouthEast => "SE",
        })
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Direction> {
        match s.trim() {
            "SW" | "sw" => Ok(Direction::SouthWest),
            "SE" | "se" => Ok(Direction::SouthEast),
            other => Err(Error::parse(format!("direction {other:?}"), "expected SW or SE")),
        }
    }
}

/// A vertical zig-zag: one value per interior row, each step moving to the
/// entry immediately south-west or south-east of the previous one.
///
/// `anchor` is the column index `i` of the first value, i.e. the first value
/// sits at paper coordinates `(anchor, anchor + 2)` in row 1. The anchor pins
/// the zig-zag to absolute columns so that reading a zig-zag out of a pattern
/// and knitting it back reproduces the pattern exactly, translation included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZigZag {
    values: Vec<Rational>,
    directions: Vec<Direction>,
    anchor: i64,
}

impl ZigZag {
    pub fn new(values: Vec<Rational>, directions: Vec<Direction>, anchor: i64) -> Result<ZigZag> {
        if values.is_empty() {
            return Err(Error::domain("zig-zag needs at least one value"));
        }
        if directions.len() + 1 != values.len() {
            return Err(Error::domain(format!(
                "{} values need {} directions, got {}",
                values.len(),
                values.len() - 1,
                directions.len()
            )));
        }
        Ok(ZigZag { values, directions, anchor })
    }

    /// The north-west to south-east diagonal through `(anchor, anchor + 2)`:
    /// all steps south-east.
    pub fn diagonal(values: Vec<Rational>, anchor: i64) -> Result<ZigZag> {
        let dirs = vec![Direction::SouthEast; values.len().saturating_sub(1)];
        ZigZag::new(values, dirs, anchor)
    }

    /// Number of rows covered, i.e. the width of the pattern knitted from it.
    pub fn width(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn directions(&self) -> &[Direction] {
        &self.directions
    }

    pub fn anchor(&self) -> i64 {
        self.anchor
    }

    /// Column index `i` of the value in each row `1..=width`, in row order.
    pub fn positions(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.values.len());
        let mut i = self.anchor;
        out.push(i);
        for d in &self.directions {
            if *d == Direction::SouthWest {
                i -= 1;
            }
            out.push(i);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn row(ns: &[i64]) -> Vec<Rational> {
        ns.iter().copied().map(r).collect()
    }

    /// Width 3, the closed pattern knitted from first row (1, 2, 5).
    fn sample_grid() -> PatternGrid {
        PatternGrid::from_rows(
            3,
            0,
            vec![
                row(&[0, 0, 0, 0, 0, 0]),
                row(&[1, 2, 5, 1, 2, 5]),
                row(&[1, 9, 4, 1, 9, 4]),
                row(&[2, 5, 1, 2, 5, 1]),
                row(&[0, 0, 0, 0, 0, 0]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn shape_is_validated() {
        assert!(matches!(PatternGrid::from_rows(1, 0, vec![]), Err(Error::Domain(_))));
        let short = vec![row(&[0, 0, 0]), row(&[1, 1, 1]), row(&[0, 0, 0])];
        assert!(matches!(PatternGrid::from_rows(1, 0, short), Err(Error::Domain(_))));
        let good = vec![row(&[0, 0, 0, 0]), row(&[1, 1, 1, 1]), row(&[0, 0, 0, 0])];
        assert!(PatternGrid::from_rows(1, 0, good).is_ok());
    }

    #[test]
    fn get_uses_row_j_minus_i_minus_1() {
        let g = sample_grid();
        assert_eq!(g.get(0, 1).unwrap(), &r(0));
        assert_eq!(g.get(0, 2).unwrap(), &r(1));
        assert_eq!(g.get(1, 4).unwrap(), &r(9));
        assert_eq!(g.get(2, 6).unwrap(), &r(1));
        // row outside 0..=n+1
        assert!(matches!(g.get(0, 0), Err(Error::Index { .. })));
        assert!(matches!(g.get(0, 7), Err(Error::Index { .. })));
    }

    #[test]
    fn columns_wrap_with_period_width_plus_3() {
        let g = sample_grid();
        for i in -7..7 {
            for roff in 0..5 {
                let j = i + roff + 1;
                assert_eq!(g.get(i, j).unwrap(), g.get(i + 6, j + 6).unwrap());
            }
        }
    }

    #[test]
    fn origin_shifts_column_zero() {
        let mut rows = sample_grid().rows().to_vec();
        for row in &mut rows {
            row.rotate_left(1); // storage col 0 now holds the old column 1
        }
        let g = PatternGrid::from_rows(3, 1, rows).unwrap();
        assert_eq!(g.get(1, 4).unwrap(), &r(9));
        assert_eq!(g.get(0, 2).unwrap(), &r(1));
    }

    #[test]
    fn diamond_neighbors() {
        let g = sample_grid();
        // west at (0, 2) in row 1: N = (1, 2) row 0, E = (1, 3) row 1, S = (0, 3) row 2
        let (n, w, e, s) = g.diamond(1, 0);
        assert_eq!((n, w, e, s), (&r(0), &r(1), &r(2), &r(1)));
        let (n, w, e, s) = g.diamond(2, 1);
        assert_eq!((n, w, e, s), (&r(5), &r(9), &r(4), &r(5)));
    }

    #[test]
    fn glide_symmetry_holds_and_breaks() {
        let g = sample_grid();
        assert!(g.glide_symmetric());
        let mut rows = g.rows().to_vec();
        rows[1].swap(0, 1);
        let bad = PatternGrid::from_rows(3, 0, rows).unwrap();
        assert!(!bad.glide_symmetric());
    }

    #[test]
    fn zigzag_positions_follow_directions() {
        let z = ZigZag::new(
            row(&[2, 3, 8, 3, 4]),
            vec![
                Direction::SouthWest,
                Direction::SouthEast,
                Direction::SouthEast,
                Direction::SouthWest,
            ],
            0,
        )
        .unwrap();
        assert_eq!(z.positions(), vec![0, -1, -1, -1, -2]);
        let d = ZigZag::diagonal(row(&[1, 2, 3]), 0).unwrap();
        assert_eq!(d.positions(), vec![0, 0, 0]);
    }

    #[test]
    fn zigzag_shape_is_validated() {
        assert!(ZigZag::new(row(&[1, 2]), vec![], 0).is_err());
        assert!(ZigZag::new(vec![], vec![], 0).is_err());
        assert!(ZigZag::new(row(&[1, 2]), vec![Direction::SouthEast], 0).is_ok());
    }

    #[test]
    fn direction_round_trip() {
        for (s, d) in [("SW", Direction::SouthWest), ("SE", Direction::SouthEast)] {
            assert_eq!(s.parse::<Direction>().unwrap(), d);
            assert_eq!(d.to_string(), s);
        }
        assert!("N".parse::<Direction>().is_err());
    }
}
