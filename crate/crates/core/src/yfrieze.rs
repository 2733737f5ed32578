//! Y-frieze patterns: knitting, verification, glide symmetry.
//!
//! A closed Y-frieze of width `n` consists of a row of 0s, `n` rows none of
//! which is identically zero, and another row of 0s, with every diamond
//! satisfying `W * E = (1 + N)(1 + S)`. Below the closing zero row sits an
//! implicit row of -1s, which is why vertical knitting of the next row is
//! blocked whenever a source entry equals -1.

use crate::error::{Error, Result};
use crate::grid::{Direction, PatternGrid, PatternKind, ZigZag};
use crate::rational::Rational;
use crate::verify::{verify_pattern, VerifyReport};

/// The Y-diamond rule: `W * E = (1 + N)(1 + S)`. Pure equality test, no
/// division, so it accepts any entries.
pub fn y_diamond_check(north: &Rational, west: &Rational, east: &Rational, south: &Rational) -> bool {
    let one = Rational::one();
    west * east == (&one + north) * (one + south)
}

/// Solves the diamond rule downward: `S = (W * E - N - 1) / (1 + N)`.
/// Fails when `N = -1`, where no finite solution exists.
pub fn y_knit_vertical_step(north: &Rational, west: &Rational, east: &Rational) -> Result<Rational> {
    let one = Rational::one();
    let divisor = &one + north;
    if divisor.is_zero() {
        return Err(Error::domain("cannot knit below a north entry of -1"));
    }
    Ok((west * east - north - one) / divisor)
}

/// Solves the diamond rule eastward: `E = (1 + N)(1 + S) / W`. Requires
/// `W != 0`; positive inputs give a positive output.
pub fn y_knit_horizontal_step(north: &Rational, west: &Rational, south: &Rational) -> Result<Rational> {
    if west.is_zero() {
        return Err(Error::domain("cannot knit east of a zero entry"));
    }
    let one = Rational::one();
    Ok((&one + north) * (one + south) / west)
}

/// A closed Y-frieze pattern: a verified [`PatternGrid`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct YFrieze {
    grid: PatternGrid,
}

impl YFrieze {
    /// Wraps a grid after verifying boundary rows and every diamond.
    pub fn from_grid(grid: PatternGrid) -> Result<YFrieze> {
        let report = verify_pattern(&grid, PatternKind::YFrieze);
        if !report.valid {
            return Err(Error::domain(describe_invalid(&report)));
        }
        Ok(YFrieze { grid })
    }

    pub fn width(&self) -> usize {
        self.grid.width()
    }

    pub fn grid(&self) -> &PatternGrid {
        &self.grid
    }

    pub fn into_grid(self) -> PatternGrid {
        self.grid
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        self.grid.row(r)
    }

    /// Values along the north-west to south-east diagonal anchored at column
    /// 0: the entries `(0, 2), (0, 3), ..., (0, width + 1)`. By the zig-zag
    /// bijection this tuple identifies the pattern.
    pub fn diagonal(&self) -> Vec<Rational> {
        (1..=self.width()).map(|r| self.grid.entry(r, 0).clone()).collect()
    }

    /// Whether every interior entry is a positive integer.
    pub fn is_arithmetic(&self) -> bool {
        (1..=self.width())
            .all(|r| self.row(r).iter().all(|v| v.is_positive() && v.is_integer()))
    }

    /// Largest interior entry.
    pub fn max_entry(&self) -> &Rational {
        (1..=self.width())
            .flat_map(|r| self.row(r).iter())
            .max()
            .expect("width >= 1")
    }

    pub fn glide_symmetric(&self) -> bool {
        check_glide_symmetry(&self.grid)
    }
}

fn describe_invalid(report: &VerifyReport) -> String {
    if !report.boundary_ok {
        return "boundary rows are not identically the boundary constant".into();
    }
    if !report.interior_rows_ok {
        return "an interior row degenerates to the boundary constant".into();
    }
    match report.violations.first() {
        Some(v) => format!(
            "diamond rule fails at row {}, column {}: N={} W={} E={} S={} ({} violations total)",
            v.row,
            v.col,
            v.north,
            v.west,
            v.east,
            v.south,
            report.violations.len()
        ),
        None => "invalid pattern".into(),
    }
}

/// Checks every stored diamond and the boundary rows. Never divides, so
/// patterns containing -1 entries verify fine.
pub fn verify_yfrieze(grid: &PatternGrid) -> VerifyReport {
    verify_pattern(grid, PatternKind::YFrieze)
}

/// Whether `entry(i, j) == entry(j, i + width + 3)` throughout the stored
/// period. Every closed pattern satisfies this glide symmetry; the check
/// exists to catch grids assembled by hand or read from disk.
pub fn check_glide_symmetry(grid: &PatternGrid) -> bool {
    grid.glide_symmetric()
}

/// An unfinished vertical knit: the first `rows.len()` interior rows of a
/// pattern that has not yet closed. Row `t` of the pattern is `rows[t - 1]`,
/// cyclic with the declared period (the zeroth row of 0s is implicit).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpenStrip {
    period: usize,
    rows: Vec<Vec<Rational>>,
}

impl OpenStrip {
    pub fn period(&self) -> usize {
        self.period
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }
}

/// Result of [`y_knit_vertical`]: either the pattern closed, or the budget
/// ran out first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerticalKnit {
    Closed(YFrieze),
    Open(OpenStrip),
}

/// Knits downward from a periodic first row.
///
/// Row `m + 1` is computed from rows `m - 1` and `m` by
/// [`y_knit_vertical_step`]; knitting is blocked (with the position of the
/// offending entry) if a source row contains -1. When the knitted row is
/// identically zero the pattern has closed: the result is a width-`n` pattern
/// whose rows repeat with period `n + 3`. The implicit row of -1s below the
/// closing row is recomputed as a consistency check rather than stored.
/// If no zero row appears within `max_rows` interior rows, the open strip
/// knitted so far is returned.
pub fn y_knit_vertical(first_row: &[Rational], max_rows: usize) -> Result<VerticalKnit> {
    let p = first_row.len();
    if p == 0 {
        return Err(Error::domain("first row must contain at least one entry"));
    }
    if max_rows == 0 {
        return Err(Error::domain("max_rows must be at least 1"));
    }
    if first_row.iter().all(Rational::is_zero) {
        return Err(Error::domain(
            "first row is identically zero: width-0 patterns are degenerate",
        ));
    }

    let zeros = vec![Rational::zero(); p];
    let minus_one = -Rational::one();
    let mut interior: Vec<Vec<Rational>> = vec![first_row.to_vec()];

    while interior.len() < max_rows {
        let m = interior.len(); // knitting pattern row m + 1
        let north_row = if m == 1 { &zeros } else { &interior[m - 2] };
        if let Some(col) = north_row.iter().position(|v| v == &minus_one) {
            return Err(Error::KnitBlocked { row: m - 1, col });
        }
        let cur = &interior[m - 1];
        let mut next = Vec::with_capacity(p);
        for c in 0..p {
            let e = (c + 1) % p;
            let s = y_knit_vertical_step(&north_row[e], &cur[c], &cur[e])
                .expect("source row was scanned for -1 entries");
            next.push(s);
        }
        if next.iter().all(Rational::is_zero) {
            let closed = close_vertical(&interior)?;
            return Ok(VerticalKnit::Closed(closed));
        }
        interior.push(next);
    }

    Ok(VerticalKnit::Open(OpenStrip { period: p, rows: interior }))
}

/// Builds and checks the closed pattern once the zero row has appeared.
fn close_vertical(interior: &[Vec<Rational>]) -> Result<YFrieze> {
    let n = interior.len();
    let p = interior[0].len();
    let period = n + 3;
    let minus_one = -Rational::one();

    // The implicit row below the closing zeros must knit to -1 wherever its
    // north entry allows knitting at all. Algebra guarantees this; failure
    // would mean the knitter itself is broken.
    let bottom = &interior[n - 1];
    for c in 0..p {
        let north = &bottom[(c + 1) % p];
        if north == &minus_one {
            continue;
        }
        let s = y_knit_vertical_step(north, &Rational::zero(), &Rational::zero())
            .expect("north != -1");
        if s != minus_one {
            return Err(Error::theorem(format!(
                "row below the closing zeros knit to {s} instead of -1 at column {c}"
            )));
        }
    }

    let mut rows = Vec::with_capacity(n + 2);
    rows.push(vec![Rational::zero(); period]);
    for row in interior {
        rows.push((0..period).map(|c| row[c % p].clone()).collect());
    }
    rows.push(vec![Rational::zero(); period]);

    let grid = PatternGrid::from_rows(n, 0, rows)?;
    YFrieze::from_grid(grid).map_err(|e| {
        Error::theorem(format!("vertical knit closed on an invalid width-{n} pattern: {e}"))
    })
}

/// Knits the unique positive closed pattern through a zig-zag of positive
/// values, one entry per row.
///
/// Entries are filled eastward with [`y_knit_horizontal_step`] until every
/// row covers a little over one period; periodicity then folds the strip into
/// the cyclic grid. The overlap entry (one full period east of each zig-zag
/// value) is compared against its mate, so a failure of the expected
/// periodicity cannot slip through silently. The mirrored westward solve
/// `W = (1 + N)(1 + S) / E` is not needed: east of the zig-zag plus
/// wrap-around reaches every column.
pub fn y_knit_horizontal(z: &ZigZag) -> Result<YFrieze> {
    let n = z.width();
    if let Some(bad) = z.values().iter().find(|v| !v.is_positive()) {
        return Err(Error::domain(format!(
            "horizontal knitting needs positive values, got {bad}"
        )));
    }

    let period = n + 3;
    let anchors = z.positions();
    // rows[r - 1] holds row r's known entries at columns anchor, anchor+1, ...
    let mut rows: Vec<Vec<Rational>> = z.values().iter().map(|v| vec![v.clone()]).collect();
    let target = period + 1; // one period plus the wrap-around overlap

    let value_at = |rows: &[Vec<Rational>], r: usize, i: i64| -> Option<Rational> {
        if r == 0 || r == n + 1 {
            return Some(Rational::zero());
        }
        let off = i - anchors[r - 1];
        if off < 0 || off as usize >= rows[r - 1].len() {
            return None;
        }
        Some(rows[r - 1][off as usize].clone())
    };

    loop {
        let mut progressed = false;
        let mut done = true;
        for r in 1..=n {
            while rows[r - 1].len() < target {
                let next_i = anchors[r - 1] + rows[r - 1].len() as i64;
                let north = value_at(&rows, r - 1, next_i);
                let south = value_at(&rows, r + 1, next_i - 1);
                let (Some(north), Some(south)) = (north, south) else {
                    done = false;
                    break;
                };
                let west = rows[r - 1].last().expect("anchored").clone();
                if !west.is_positive() {
                    return Err(Error::theorem(format!(
                        "horizontal knitting produced nonpositive entry {west} in row {r}"
                    )));
                }
                let east = y_knit_horizontal_step(&north, &west, &south)?;
                rows[r - 1].push(east);
                progressed = true;
            }
        }
        if done {
            break;
        }
        if !progressed {
            return Err(Error::theorem(
                "horizontal knitting stalled before filling a period",
            ));
        }
    }

    for (r, row) in rows.iter().enumerate() {
        if row[0] != row[period] {
            return Err(Error::theorem(format!(
                "row {} is not periodic: {} != {} one period apart",
                r + 1,
                row[0],
                row[period]
            )));
        }
    }

    let mut grid_rows = Vec::with_capacity(n + 2);
    grid_rows.push(vec![Rational::zero(); period]);
    for (r, row) in rows.iter().enumerate() {
        let anchor = anchors[r];
        let take = |c: usize| {
            let off = (c as i64 - anchor).rem_euclid(period as i64) as usize;
            row[off].clone()
        };
        grid_rows.push((0..period).map(take).collect());
    }
    grid_rows.push(vec![Rational::zero(); period]);

    let grid = PatternGrid::from_rows(n, 0, grid_rows)?;
    YFrieze::from_grid(grid)
        .map_err(|e| Error::theorem(format!("horizontal knit produced an invalid pattern: {e}")))
}

/// Reads the values along a zig-zag out of a closed pattern. The inverse of
/// [`y_knit_horizontal`]: knitting the returned zig-zag reproduces `f`
/// exactly, for every direction word and start column.
pub fn read_zigzag(f: &YFrieze, directions: &[Direction], start_column: i64) -> Result<ZigZag> {
    let n = f.width();
    if directions.len() + 1 != n {
        return Err(Error::domain(format!(
            "width {} needs {} directions, got {}",
            n,
            n - 1,
            directions.len()
        )));
    }
    let probe = ZigZag::new(vec![Rational::one(); n], directions.to_vec(), start_column)?;
    let values = probe
        .positions()
        .iter()
        .enumerate()
        .map(|(t, &i)| f.grid().entry(t + 1, i).clone())
        .collect();
    ZigZag::new(values, directions.to_vec(), start_column)
}
