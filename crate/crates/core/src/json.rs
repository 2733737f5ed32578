//! The JSON interchange format for closed patterns.
//!
//! ```json
//! {"kind": "yfrieze", "width": 3, "origin": 0,
//!  "rows": [["0","0","0","0","0","0"], ...]}
//! ```
//!
//! `kind` is `"yfrieze"` or `"frieze"`; `rows` holds the `width + 2` stored
//! rows of one fundamental period, each `width + 3` entries long, scalars as
//! reduced `"p/q"` strings (`"p"` when the denominator is 1). Deserialization
//! checks shape and scalar syntax only; rule verification is a separate step
//! so that rule-violating grids can still be loaded and diagnosed.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{PatternGrid, PatternKind};
use crate::rational::Rational;

#[derive(Debug, Clone, Serialize, Deserialize)]
struct GridDoc {
    kind: PatternKind,
    width: usize,
    origin: i64,
    rows: Vec<Vec<Rational>>,
}

/// Serializes a grid to the interchange format, pretty-printed.
pub fn serialize_grid(grid: &PatternGrid, kind: PatternKind) -> String {
    let doc = GridDoc {
        kind,
        width: grid.width(),
        origin: grid.origin(),
        rows: grid.rows().to_vec(),
    };
    serde_json::to_string_pretty(&doc).expect("grid serialization cannot fail")
}

/// Parses the interchange format. Malformed text, bad scalars, and wrong row
/// shapes all report a position or a shape diagnosis.
pub fn deserialize_grid(text: &str) -> Result<(PatternGrid, PatternKind)> {
    let doc: GridDoc = serde_json::from_str(text).map_err(|e| Error::Parse {
        location: format!("line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    let grid = PatternGrid::from_rows(doc.width, doc.origin, doc.rows)
        .map_err(|e| Error::parse("document", format!("{e}")))?;
    Ok((grid, doc.kind))
}
