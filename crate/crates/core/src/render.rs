//! Staggered ASCII layout of patterns.
//!
//! Entries are right-aligned in cells of one fixed width (the longest entry
//! in the pattern), with one blank column between stagger positions. Row `r`
//! column `c` sits at stagger position `2c + r`, so each row is offset half a
//! cell from its neighbors, reproducing the diamond layout of the figures.
//! Output is deterministic byte for byte for a given input.

use crate::grid::PatternGrid;
use crate::rational::Rational;
use crate::yfrieze::OpenStrip;

/// Renders a closed pattern, boundary rows included, one period wide.
pub fn ascii_grid(grid: &PatternGrid) -> String {
    let rows: Vec<Vec<String>> = grid
        .rows()
        .iter()
        .map(|row| row.iter().map(Rational::to_string).collect())
        .collect();
    layout(&rows)
}

/// Renders an unfinished strip: the implicit zeroth row of 0s, then the
/// knitted rows, each shown for one period plus three columns so the stagger
/// shape matches a closed pattern of the same period.
pub fn ascii_strip(strip: &OpenStrip) -> String {
    let p = strip.period();
    let cols = p + 3;
    let mut rows: Vec<Vec<String>> = Vec::with_capacity(strip.rows().len() + 1);
    rows.push(vec!["0".to_string(); cols]);
    for row in strip.rows() {
        rows.push((0..cols).map(|c| row[c % p].to_string()).collect());
    }
    layout(&rows)
}

fn layout(rows: &[Vec<String>]) -> String {
    let cell = rows
        .iter()
        .flat_map(|row| row.iter().map(String::len))
        .max()
        .unwrap_or(1);
    let pitch = cell + 1;
    let mut lines = Vec::with_capacity(rows.len());
    for (r, row) in rows.iter().enumerate() {
        let mut line = String::new();
        for (c, entry) in row.iter().enumerate() {
            let start = (2 * c + r) * pitch + (cell - entry.len());
            while line.len() < start {
                line.push(' ');
            }
            line.push_str(entry);
        }
        lines.push(line);
    }
    lines.join("\n")
}
