//! Report-based verification shared by both pattern families.
//!
//! Verification never divides, so grids containing arbitrary entries
//! (including -1 for Y-friezes and 0 for friezes) can be checked safely.

use serde::Serialize;

use crate::frieze::frieze_diamond_check;
use crate::grid::{PatternGrid, PatternKind};
use crate::rational::Rational;
use crate::yfrieze::y_diamond_check;

/// One diamond that fails its rule. `row` and `col` locate the west entry of
/// the diamond: row index `row`, storage column `col` within the period.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiamondViolation {
    pub row: usize,
    pub col: usize,
    pub north: Rational,
    pub west: Rational,
    pub east: Rational,
    pub south: Rational,
}

/// Outcome of checking every stored diamond and the boundary rows.
///
/// For Y-friezes the boundary check also settles the implicit rows: once row
/// `width + 1` is identically 0, the row of -1s below it satisfies every
/// diamond it touches (`0 * 0 = (1 + N)(1 + (-1))` for any `N`), so no
/// separate check is needed. The frieze case is analogous with the implicit
/// row of 0s below the closing row of 1s.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub kind: PatternKind,
    pub width: usize,
    pub valid: bool,
    /// Rows 0 and `width + 1` hold the boundary constant everywhere.
    pub boundary_ok: bool,
    /// No interior row degenerates to the boundary constant, which would mean
    /// the pattern really closed at a smaller width.
    pub interior_rows_ok: bool,
    pub violations: Vec<DiamondViolation>,
}

pub(crate) fn verify_pattern(grid: &PatternGrid, kind: PatternKind) -> VerifyReport {
    let n = grid.width();
    let period = grid.period();
    let boundary = kind.boundary();

    let row_is_constant =
        |r: usize, value: &Rational| grid.row(r).iter().all(|entry| entry == value);

    let boundary_ok = row_is_constant(0, &boundary) && row_is_constant(n + 1, &boundary);
    let interior_rows_ok = (1..=n).all(|r| !row_is_constant(r, &boundary));

    let check: fn(&Rational, &Rational, &Rational, &Rational) -> bool = match kind {
        PatternKind::YFrieze => y_diamond_check,
        PatternKind::Frieze => frieze_diamond_check,
    };

    let mut violations = Vec::new();
    for r in 1..=n {
        for c in 0..period {
            let i = grid.origin() + c as i64;
            let (north, west, east, south) = grid.diamond(r, i);
            if !check(north, west, east, south) {
                violations.push(DiamondViolation {
                    row: r,
                    col: c,
                    north: north.clone(),
                    west: west.clone(),
                    east: east.clone(),
                    south: south.clone(),
                });
            }
        }
    }

    VerifyReport {
        kind,
        width: n,
        valid: boundary_ok && interior_rows_ok && violations.is_empty(),
        boundary_ok,
        interior_rows_ok,
        violations,
    }
}
