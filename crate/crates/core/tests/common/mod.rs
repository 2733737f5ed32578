//! Hand-checked fixture grids shared by the integration suites.
//!
//! Each grid is written out entry by entry in storage layout: `width + 2`
//! rows of one period (`width + 3` columns), row `r` column `c` holding the
//! entry at coordinates `i = origin + c`, `j = i + r + 1`.

#![allow(dead_code)]

use yfrieze_core::{PatternGrid, Rational};

pub fn r(n: i64) -> Rational {
    Rational::from(n)
}

pub fn row(ns: &[i64]) -> Vec<Rational> {
    ns.iter().copied().map(r).collect()
}

pub fn rows(table: &[&[i64]]) -> Vec<Vec<Rational>> {
    table.iter().map(|ns| row(ns)).collect()
}

/// Width 3, knitted from first row (1, 2, 5).
pub fn width3_basic() -> PatternGrid {
    PatternGrid::from_rows(
        3,
        0,
        rows(&[
            &[0, 0, 0, 0, 0, 0],
            &[1, 2, 5, 1, 2, 5],
            &[1, 9, 4, 1, 9, 4],
            &[2, 5, 1, 2, 5, 1],
            &[0, 0, 0, 0, 0, 0],
        ]),
    )
    .unwrap()
}

/// Width 4 with interior -1s and 0s: valid, but unreachable by vertical
/// knitting.
pub fn width4_with_minus_ones() -> PatternGrid {
    PatternGrid::from_rows(
        4,
        0,
        rows(&[
            &[0, 0, 0, 0, 0, 0, 0],
            &[1, 1, 3, -3, 0, 1, -5],
            &[0, 2, -10, -1, -1, -6, -6],
            &[-1, -6, -6, 0, 2, -10, -1],
            &[1, -5, 1, 1, 3, -3, 0],
            &[0, 0, 0, 0, 0, 0, 0],
        ]),
    )
    .unwrap()
}

/// Width 5, the arithmetic pattern whose all-SE diagonal is (1, 2, 3, 4, 5).
pub fn width5_staircase() -> PatternGrid {
    PatternGrid::from_rows(
        5,
        0,
        rows(&[
            &[0, 0, 0, 0, 0, 0, 0, 0],
            &[1, 3, 3, 3, 3, 1, 5, 5],
            &[2, 8, 8, 8, 2, 4, 24, 4],
            &[3, 15, 15, 3, 3, 15, 15, 3],
            &[4, 24, 4, 2, 8, 8, 8, 2],
            &[5, 5, 1, 3, 3, 3, 3, 1],
            &[0, 0, 0, 0, 0, 0, 0, 0],
        ]),
    )
    .unwrap()
}

/// Width 4 arithmetic frieze with first row (2, 1, 4, 1, 3, 1, 3).
pub fn frieze_width4() -> PatternGrid {
    PatternGrid::from_rows(
        4,
        0,
        rows(&[
            &[1, 1, 1, 1, 1, 1, 1],
            &[2, 1, 4, 1, 3, 1, 3],
            &[1, 3, 3, 2, 2, 2, 5],
            &[2, 2, 5, 1, 3, 3, 2],
            &[1, 3, 2, 1, 4, 1, 3],
            &[1, 1, 1, 1, 1, 1, 1],
        ]),
    )
    .unwrap()
}

/// The Y-frieze knitted from the second row of [`frieze_width4`].
pub fn frieze_width4_image() -> PatternGrid {
    PatternGrid::from_rows(
        4,
        0,
        rows(&[
            &[0, 0, 0, 0, 0, 0, 0],
            &[1, 3, 3, 2, 2, 2, 5],
            &[2, 8, 5, 3, 3, 9, 4],
            &[3, 9, 4, 2, 8, 5, 3],
            &[2, 5, 1, 3, 3, 2, 2],
            &[0, 0, 0, 0, 0, 0, 0],
        ]),
    )
    .unwrap()
}

/// Width 3 knitted from 1s on the all-SE diagonal: valid but not arithmetic,
/// with half-integer entries.
pub fn width3_halfinteger() -> PatternGrid {
    let half = |num: i64| Rational::new(num, 2).unwrap();
    let mut rows = rows(&[
        &[0, 0, 0, 0, 0, 0],
        &[1, 2, 0, 2, 1, 7],
        &[1, 6, 6, 1, 6, 6],
        &[1, 7, 1, 2, 0, 2],
        &[0, 0, 0, 0, 0, 0],
    ]);
    rows[1][2] = half(7);
    rows[3][4] = half(7);
    PatternGrid::from_rows(3, 0, rows).unwrap()
}

/// All six fixture grids with their pattern kind tags.
pub fn all_fixtures() -> Vec<(PatternGrid, yfrieze_core::PatternKind)> {
    use yfrieze_core::PatternKind::{Frieze, YFrieze};
    vec![
        (width3_basic(), YFrieze),
        (width4_with_minus_ones(), YFrieze),
        (width5_staircase(), YFrieze),
        (frieze_width4(), Frieze),
        (frieze_width4_image(), YFrieze),
        (width3_halfinteger(), YFrieze),
    ]
}
