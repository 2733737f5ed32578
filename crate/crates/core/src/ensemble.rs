//! The map from friezes to Y-friezes, its fibers, and surjectivity
//! experiments.
//!
//! A closed frieze of width `n` has a second row `(i, i + 3)`; knitting that
//! row vertically as a Y-frieze first row always closes at the same width,
//! which defines the map implemented by [`p_map`]. Two friezes are
//! Y-equivalent when they share a second row, i.e. the same image;
//! [`group_by_second_row`] computes those classes, and
//! [`surjectivity_report`] compares the image of the map against the
//! bounded exhaustive enumeration of arithmetic Y-friezes.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::enumerate::{enumerate_arithmetic_yfriezes, SearchConfig};
use crate::error::{Error, Result};
use crate::frieze::{enumerate_friezes, Frieze};
use crate::rational::Rational;
use crate::yfrieze::{y_knit_vertical, VerticalKnit, YFrieze};

/// The Y-frieze knitted from the second row of `f`.
///
/// Closure at exactly `f.width()` is a theorem, so every failure mode
/// (blocked knitting, closure at another width, a non-arithmetic image of an
/// arithmetic frieze) is reported as a theorem violation, never silently.
pub fn p_map(f: &Frieze) -> Result<YFrieze> {
    let n = f.width();
    let knit = y_knit_vertical(f.second_row(), n + 2)
        .map_err(|e| Error::theorem(format!("second row of a width-{n} frieze: {e}")))?;
    let y = match knit {
        VerticalKnit::Closed(y) => y,
        VerticalKnit::Open(_) => {
            return Err(Error::theorem(format!(
                "second row of a width-{n} frieze did not close within {} rows",
                n + 2
            )));
        }
    };
    if y.width() != n {
        return Err(Error::theorem(format!(
            "second row of a width-{n} frieze closed at width {}",
            y.width()
        )));
    }
    if f.is_arithmetic() && !y.is_arithmetic() {
        return Err(Error::theorem(format!(
            "arithmetic width-{n} frieze mapped to a non-arithmetic pattern"
        )));
    }
    Ok(y)
}

/// Friezes sharing one second row: a fiber of the frieze-to-Y-frieze map.
#[derive(Debug, Clone)]
pub struct EquivalenceClass {
    second_row: Vec<Rational>,
    members: Vec<Frieze>,
}

impl EquivalenceClass {
    /// The shared second row, one period.
    pub fn second_row(&self) -> &[Rational] {
        &self.second_row
    }

    pub fn members(&self) -> &[Frieze] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Partitions friezes of one width by exact equality of second rows, in
/// lexicographic second-row order. Rows are compared as sequences, not up to
/// rotation: translated friezes count separately.
///
/// Class sizes obey the parity law: width even forces singletons, width odd
/// allows at most pairs. A violation would disprove a theorem, so it panics.
/// Callers pass pairwise distinct friezes of equal width.
pub fn group_by_second_row(friezes: &[Frieze]) -> Vec<EquivalenceClass> {
    let mut by_row: BTreeMap<Vec<Rational>, Vec<Frieze>> = BTreeMap::new();
    let mut width = None;
    for f in friezes {
        match width {
            None => width = Some(f.width()),
            Some(n) => assert_eq!(n, f.width(), "friezes must share one width"),
        }
        by_row.entry(f.second_row().to_vec()).or_default().push(f.clone());
    }
    let classes: Vec<EquivalenceClass> = by_row
        .into_iter()
        .map(|(second_row, members)| EquivalenceClass { second_row, members })
        .collect();
    if let Some(n) = width {
        let cap = if n % 2 == 0 { 1 } else { 2 };
        for c in &classes {
            assert!(
                c.size() <= cap,
                "width {n} admits classes of size at most {cap}, found {}",
                c.size()
            );
        }
    }
    classes
}

/// Class-size census: classes are singletons or pairs, nothing else.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassSizes {
    pub size1: usize,
    pub size2: usize,
}

/// Outcome of one surjectivity experiment at a given width and bound.
///
/// `missing` holds diagonals found by exhaustive enumeration but absent from
/// the image of the frieze map: any entry here is a counterexample to
/// surjectivity and is reported, never asserted away. `bound_escapes` holds
/// image diagonals whose pattern has an entry above the bound, so the
/// enumeration could not have seen them.
#[derive(Debug, Clone, Serialize)]
pub struct SurjectivityReport {
    pub width: usize,
    pub bound: u64,
    pub image_size: usize,
    pub enumerated_size: usize,
    pub missing: Vec<Vec<Rational>>,
    pub bound_escapes: Vec<Vec<Rational>>,
    pub classes: ClassSizes,
}

impl SurjectivityReport {
    /// The experiment is conjecture-consistent when enumeration found
    /// nothing outside the image.
    pub fn conjecture_consistent(&self) -> bool {
        self.missing.is_empty()
    }
}

/// Runs the surjectivity experiment at width `n`: enumerate all friezes, map
/// them through [`p_map`], enumerate all arithmetic Y-friezes with entries at
/// most `bound`, and compare. Patterns are identified by their all-SE
/// diagonal, which determines a closed positive pattern.
pub fn surjectivity_report(n: usize, bound: u64) -> Result<SurjectivityReport> {
    let friezes = enumerate_friezes(n)?;
    let classes = group_by_second_row(&friezes);

    let mut image: BTreeMap<Vec<Rational>, &YFrieze> = BTreeMap::new();
    let images: Vec<YFrieze> = friezes.iter().map(p_map).collect::<Result<_>>()?;
    for y in &images {
        image.insert(y.diagonal(), y);
    }
    assert_eq!(
        image.len(),
        classes.len(),
        "distinct images must match equivalence classes one for one"
    );

    let cfg = SearchConfig::new(n, bound)?;
    let enumerated: Vec<Vec<Rational>> = enumerate_arithmetic_yfriezes(&cfg)?
        .iter()
        .map(YFrieze::diagonal)
        .collect();

    let bound_r = Rational::from(bound as i64);
    let bound_escapes: Vec<Vec<Rational>> = image
        .iter()
        .filter(|(_, y)| *y.max_entry() > bound_r)
        .map(|(d, _)| d.clone())
        .collect();
    let missing: Vec<Vec<Rational>> =
        enumerated.iter().filter(|d| !image.contains_key(*d)).cloned().collect();

    let enumerated_set: std::collections::BTreeSet<&Vec<Rational>> = enumerated.iter().collect();
    for d in image.keys() {
        assert!(
            enumerated_set.contains(d) || bound_escapes.contains(d),
            "image pattern {d:?} within bound was missed by the search"
        );
    }

    Ok(SurjectivityReport {
        width: n,
        bound,
        image_size: image.len(),
        enumerated_size: enumerated.len(),
        missing,
        bound_escapes,
        classes: ClassSizes {
            size1: classes.iter().filter(|c| c.size() == 1).count(),
            size2: classes.iter().filter(|c| c.size() == 2).count(),
        },
    })
}
