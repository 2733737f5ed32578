//! Exhaustive search for arithmetic Y-friezes of a given width within an
//! entry bound.
//!
//! A closed positive pattern of width `n` is determined by its all-SE
//! diagonal tuple `(d_1, ..., d_n)`, and the tuple entries are themselves
//! pattern entries, so a bound `B` on entries confines the search to the cube
//! `{1..B}^n`. The search extends tuples depth-first; each new diagonal value
//! completes one anti-diagonal of knittable cells, and every cell is pruned
//! on integrality, then positivity, then the bound. Completeness of the
//! result is always relative to `B`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::yfrieze::{y_knit_horizontal, YFrieze};
use crate::ZigZag;

/// Default search bound: generous for small widths where the known patterns
/// top out at single digits, tighter where the cube is large.
pub fn default_bound(width: usize) -> u64 {
    if width <= 4 {
        1000
    } else {
        200
    }
}

/// Parameters for [`enumerate_arithmetic_yfriezes`].
#[derive(Debug, Clone)]
pub struct SearchConfig {
    width: usize,
    bound: u64,
    parallelism: Option<usize>,
    canonical_order: bool,
}

impl SearchConfig {
    /// Requires `bound >= width`: the staircase pattern with diagonal
    /// `(1, ..., n)` exists for every `n`, so a smaller bound would make
    /// even the guaranteed witness unreachable.
    pub fn new(width: usize, bound: u64) -> Result<SearchConfig> {
        if width == 0 {
            return Err(Error::domain("width must be at least 1"));
        }
        if bound < width as u64 {
            return Err(Error::domain(format!(
                "bound {bound} is below width {width}; no room for the staircase diagonal"
            )));
        }
        Ok(SearchConfig { width, bound, parallelism: None, canonical_order: true })
    }

    /// Caps the worker count; `None` leaves it to the runtime.
    pub fn parallelism(mut self, workers: Option<usize>) -> SearchConfig {
        self.parallelism = workers;
        self
    }

    /// When false, output keeps raw merge order instead of sorting by
    /// diagonal. Merge order is deterministic either way.
    pub fn canonical_order(mut self, on: bool) -> SearchConfig {
        self.canonical_order = on;
        self
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }
}

/// All arithmetic Y-friezes of width `cfg.width` whose entries are at most
/// `cfg.bound`, sorted lexicographically by diagonal tuple.
///
/// The search runs in machine integers; accepted tuples are re-knitted in
/// exact rationals and verified, so an accepted-but-invalid tuple surfaces as
/// a theorem violation instead of bad output.
pub fn enumerate_arithmetic_yfriezes(cfg: &SearchConfig) -> Result<Vec<YFrieze>> {
    let run = |n: usize, b: u64| -> Vec<Vec<u64>> {
        (1..=b)
            .into_par_iter()
            .map(|d1| {
                let mut state = SearchState::new(n, b);
                let mut found = Vec::new();
                if state.push(d1) {
                    state.descend(&mut found);
                    state.pop();
                }
                found
            })
            .reduce(Vec::new, |mut acc, mut part| {
                acc.append(&mut part);
                acc
            })
    };

    let mut tuples = match cfg.parallelism {
        Some(workers) => rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::domain(format!("worker pool: {e}")))?
            .install(|| run(cfg.width, cfg.bound)),
        None => run(cfg.width, cfg.bound),
    };

    // rayon's reduce order can vary; canonical order is lexicographic
    if cfg.canonical_order {
        tuples.sort_unstable();
    }

    tuples.iter().map(|t| knit_tuple(t, cfg.bound)).collect()
}

/// Knits an accepted diagonal tuple exactly and re-checks everything the
/// integer search promised.
fn knit_tuple(tuple: &[u64], bound: u64) -> Result<YFrieze> {
    let values: Vec<Rational> = tuple.iter().map(|&d| Rational::from(d as i64)).collect();
    let z = ZigZag::diagonal(values, 0).expect("nonempty tuple");
    let f = y_knit_horizontal(&z)
        .map_err(|e| Error::theorem(format!("search accepted {tuple:?} but knitting failed: {e}")))?;
    let max = f.max_entry().to_u64();
    if !f.is_arithmetic() || max.is_none() || max.unwrap() > bound {
        return Err(Error::theorem(format!(
            "search accepted {tuple:?} but the pattern violates the bound or integrality"
        )));
    }
    Ok(f)
}

/// One depth-first search worker. `rows[r - 1]` holds the known entries of
/// pattern row `r`, column 0 being the diagonal value `d_r`; after `depth`
/// diagonal values the known region is the anti-diagonal triangle
/// `row + column <= depth`, extended to full periods once `depth == width`.
struct SearchState {
    width: usize,
    bound: u64,
    rows: Vec<Vec<u64>>,
    depth: usize,
}

impl SearchState {
    fn new(width: usize, bound: u64) -> SearchState {
        SearchState {
            width,
            bound,
            rows: vec![Vec::with_capacity(width + 4); width],
            depth: 0,
        }
    }

    fn entry(&self, r: usize, c: usize) -> u64 {
        // rows 0 and width + 1 are the zero boundary
        if r == 0 || r == self.width + 1 {
            0
        } else {
            self.rows[r - 1][c]
        }
    }

    /// East entry at `(r, c)` from `W * E = (1 + N)(1 + S)`, or None when it
    /// is not a positive integer within the bound.
    fn knit_cell(&self, r: usize, c: usize) -> Option<u64> {
        let west = self.entry(r, c - 1) as u128;
        let north = self.entry(r - 1, c) as u128;
        let south = self.entry(r + 1, c - 1) as u128;
        let num = (1 + north) * (1 + south);
        if num % west != 0 {
            return None;
        }
        let east = num / west;
        if east == 0 || east > self.bound as u128 {
            return None;
        }
        Some(east as u64)
    }

    /// Adds `d` as the next diagonal value and knits the cells of the
    /// anti-diagonal it completes. On a pruned cell the push rolls itself
    /// back and returns false; [`pop`] is only for successful pushes.
    fn push(&mut self, d: u64) -> bool {
        self.depth += 1;
        self.rows[self.depth - 1].push(d);
        let m = self.depth;
        for r in (1..m).rev() {
            match self.knit_cell(r, m - r) {
                Some(e) => self.rows[r - 1].push(e),
                None => {
                    for rr in r + 1..=m {
                        self.rows[rr - 1].pop();
                    }
                    self.depth -= 1;
                    return false;
                }
            }
        }
        true
    }

    fn pop(&mut self) {
        for row in &mut self.rows[..self.depth] {
            row.pop();
        }
        self.depth -= 1;
    }

    fn descend(&mut self, found: &mut Vec<Vec<u64>>) {
        if self.depth == self.width {
            if self.complete_periods() {
                found.push(self.rows.iter().map(|row| row[0]).collect());
            }
            return;
        }
        for d in 1..=self.bound {
            if self.push(d) {
                self.descend(found);
                self.pop();
            }
        }
    }

    /// Extends a full-depth triangle to one period plus one column per row
    /// and checks the wrap: `row[n + 3] == row[0]` for every row pins the
    /// whole pattern to period `n + 3`, which is exactly closedness at this
    /// width. Restores the triangle before returning.
    fn complete_periods(&mut self) -> bool {
        let n = self.width;
        let target = n + 4; // columns 0..=n+3
        let mut ok = true;
        'knit: for m in n + 1..=2 * n + 3 {
            let hi = (m - 1).min(n);
            let lo = 1.max(m.saturating_sub(target - 1));
            for r in (lo..=hi).rev() {
                let c = m - r;
                if c >= target || c != self.rows[r - 1].len() {
                    continue;
                }
                match self.knit_cell(r, c) {
                    Some(e) => self.rows[r - 1].push(e),
                    None => {
                        ok = false;
                        break 'knit;
                    }
                }
            }
        }
        if ok {
            ok = (1..=n).all(|r| self.rows[r - 1][n + 3] == self.rows[r - 1][0]);
        }
        for (r, row) in self.rows.iter_mut().enumerate() {
            row.truncate(n - r); // triangle: row r keeps columns 0..n-r
        }
        ok
    }
}

/// The width-`n` pattern knitted from the staircase diagonal `(1, 2, ..., n)`.
/// It is arithmetic for every `n`; a non-arithmetic result is reported as a
/// theorem violation.
pub fn unitary_pattern(n: usize) -> Result<YFrieze> {
    if n == 0 {
        return Err(Error::domain("width must be at least 1"));
    }
    let values: Vec<Rational> = (1..=n as i64).map(Rational::from).collect();
    let z = ZigZag::diagonal(values, 0).expect("nonempty tuple");
    let f = y_knit_horizontal(&z)?;
    if !f.is_arithmetic() {
        return Err(Error::theorem(format!(
            "staircase diagonal (1..={n}) knitted a non-arithmetic pattern"
        )));
    }
    Ok(f)
}
