//! Shared inputs for the benchmark targets.

use yfrieze_core::enumerate::unitary_pattern;
use yfrieze_core::{Rational, ZigZag};

/// First row of the width-n staircase pattern, the canonical integer input
/// that closes after exactly n knitted rows.
pub fn staircase_first_row(n: usize) -> Vec<Rational> {
    unitary_pattern(n)
        .expect("staircase closes for every width")
        .row(1)
        .to_vec()
}

/// A width-n diagonal with mixed numerators and denominators, so the knit
/// exercises non-integer arithmetic.
pub fn mixed_diagonal(n: usize) -> ZigZag {
    let values: Vec<Rational> = (0..n)
        .map(|k| Rational::new((k % 7 + 1) as i64, (k % 3 + 1) as i64).expect("nonzero"))
        .collect();
    ZigZag::diagonal(values, 0).expect("n is positive")
}
