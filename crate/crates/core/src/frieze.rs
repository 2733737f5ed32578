//! Coxeter frieze patterns and their triangulation model.
//!
//! A closed frieze of width `n` has a row of 1s, `n` interior rows, and
//! another row of 1s, with every diamond satisfying `W * E = 1 + N * S`.
//! The friezes of width `n` whose entries are positive integers correspond
//! bijectively to triangulations of a labeled `(n + 3)`-gon: the first
//! interior row of the frieze is the quiddity sequence of the triangulation,
//! the count of triangles meeting each vertex. That correspondence drives
//! [`enumerate_friezes`], so the number of friezes of width `n` is the
//! Catalan number `C(n + 1)`.

use crate::error::{Error, Result};
use crate::grid::{PatternGrid, PatternKind};
use crate::rational::Rational;
use crate::verify::{verify_pattern, VerifyReport};

/// Widest frieze [`enumerate_friezes`] will enumerate; the count grows like
/// the Catalan numbers, so this keeps accidental blowups out.
pub const MAX_ENUMERATION_WIDTH: usize = 10;

/// The frieze diamond rule: `W * E = 1 + N * S`.
pub fn frieze_diamond_check(
    north: &Rational,
    west: &Rational,
    east: &Rational,
    south: &Rational,
) -> bool {
    west * east == Rational::one() + north * south
}

/// Solves the frieze rule downward: `S = (W * E - 1) / N`, defined for
/// `N != 0`.
fn frieze_knit_step(north: &Rational, west: &Rational, east: &Rational) -> Result<Rational> {
    if north.is_zero() {
        return Err(Error::domain("cannot knit below a zero entry"));
    }
    Ok((west * east - Rational::one()) / north)
}

/// A closed frieze pattern: a verified [`PatternGrid`] with rows of 1s on the
/// boundary.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Frieze {
    grid: PatternGrid,
}

impl Frieze {
    pub fn from_grid(grid: PatternGrid) -> Result<Frieze> {
        let report = verify_pattern(&grid, PatternKind::Frieze);
        if !report.valid {
            let detail = match report.violations.first() {
                Some(v) => format!(
                    "diamond rule fails at row {}, column {} (N={} W={} E={} S={})",
                    v.row, v.col, v.north, v.west, v.east, v.south
                ),
                None => "boundary rows are not identically 1".into(),
            };
            return Err(Error::domain(detail));
        }
        Ok(Frieze { grid })
    }

    pub fn width(&self) -> usize {
        self.grid.width()
    }

    pub fn grid(&self) -> &PatternGrid {
        &self.grid
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        self.grid.row(r)
    }

    /// The first interior row, `(i, i + 2)` for `i = 0..width+2`. For
    /// triangulation-backed friezes this is the quiddity sequence.
    pub fn first_row(&self) -> &[Rational] {
        self.grid.row(1)
    }

    /// The second row, `(i, i + 3)` for `i = 0..width+2`. For width 1 this is
    /// the closing row of 1s. This row is what the Y-frieze map knits from.
    pub fn second_row(&self) -> &[Rational] {
        self.grid.row(2)
    }

    pub fn is_arithmetic(&self) -> bool {
        (1..=self.width())
            .all(|r| self.row(r).iter().all(|v| v.is_positive() && v.is_integer()))
    }

    pub fn glide_symmetric(&self) -> bool {
        self.grid.glide_symmetric()
    }
}

/// Checks every stored diamond and the boundary rows against the frieze rule.
pub fn verify_frieze(grid: &PatternGrid) -> VerifyReport {
    verify_pattern(grid, PatternKind::Frieze)
}

/// Knits downward from a periodic quiddity row between rows of 1s.
///
/// Stops when a row of 1s reappears: the result is the closed frieze of width
/// `n` = number of rows strictly between the rows of 1s (the implicit row of
/// 0s below is checked, not stored). Knitting is blocked when a source row
/// contains 0; inputs that never close within `max_rows` are rejected.
pub fn frieze_knit_vertical(quiddity: &[Rational], max_rows: usize) -> Result<Frieze> {
    let p = quiddity.len();
    if p == 0 {
        return Err(Error::domain("quiddity must contain at least one entry"));
    }
    if quiddity.iter().all(Rational::is_one) {
        return Err(Error::domain(
            "quiddity is identically 1: width-0 patterns are degenerate",
        ));
    }

    let ones = vec![Rational::one(); p];
    let mut interior: Vec<Vec<Rational>> = vec![quiddity.to_vec()];

    while interior.len() <= max_rows {
        let m = interior.len(); // knitting pattern row m + 1
        let north_row = if m == 1 { &ones } else { &interior[m - 2] };
        if let Some(col) = north_row.iter().position(|v| v.is_zero()) {
            return Err(Error::KnitBlocked { row: m - 1, col });
        }
        let cur = &interior[m - 1];
        let mut next = Vec::with_capacity(p);
        for c in 0..p {
            let e = (c + 1) % p;
            let s = frieze_knit_step(&north_row[e], &cur[c], &cur[e])
                .expect("source row was scanned for zero entries");
            next.push(s);
        }
        if next.iter().all(Rational::is_one) {
            return close_frieze(&interior);
        }
        interior.push(next);
    }

    Err(Error::domain(format!(
        "no row of 1s within {max_rows} rows: not a closing quiddity"
    )))
}

fn close_frieze(interior: &[Vec<Rational>]) -> Result<Frieze> {
    let n = interior.len();
    let p = interior[0].len();
    let period = n + 3;

    // The implicit row below the closing 1s knits to (1*1 - 1)/N = 0 wherever
    // N != 0; where N = 0 the diamond rule holds for any value. Failure here
    // would mean the knitter itself is broken.
    let bottom = &interior[n - 1];
    for c in 0..p {
        let north = &bottom[(c + 1) % p];
        if north.is_zero() {
            continue;
        }
        let s = frieze_knit_step(north, &Rational::one(), &Rational::one()).expect("north != 0");
        if !s.is_zero() {
            return Err(Error::theorem(format!(
                "row below the closing 1s knit to {s} instead of 0 at column {c}"
            )));
        }
    }

    let mut rows = Vec::with_capacity(n + 2);
    rows.push(vec![Rational::one(); period]);
    for row in interior {
        rows.push((0..period).map(|c| row[c % p].clone()).collect());
    }
    rows.push(vec![Rational::one(); period]);

    let grid = PatternGrid::from_rows(n, 0, rows)?;
    Frieze::from_grid(grid).map_err(|e| {
        Error::theorem(format!("knit closed on an invalid width-{n} frieze: {e}"))
    })
}

/// A triangulation of the convex polygon with vertices labeled `1..=polygon`
/// in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    polygon: usize,
    /// Chords `(a, b)` with `a < b`, sorted; `polygon - 3` of them.
    diagonals: Vec<(usize, usize)>,
    /// Triangles as sorted vertex triples; `polygon - 2` of them.
    triangles: Vec<[usize; 3]>,
}

impl Triangulation {
    pub fn polygon(&self) -> usize {
        self.polygon
    }

    pub fn diagonals(&self) -> &[(usize, usize)] {
        &self.diagonals
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    /// Number of triangles meeting each vertex, in vertex order `1..=m`.
    pub fn quiddity(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.polygon];
        for t in &self.triangles {
            for &v in t {
                counts[v - 1] += 1;
            }
        }
        counts
    }
}

/// All triangulations of the labeled `m`-gon, `m >= 3`, in a deterministic
/// order. There are Catalan-number `C(m - 2)` of them.
///
/// Every triangulation contains exactly one triangle on the edge `(1, 2)`;
/// recursing over its apex and the two sub-polygons it cuts off yields each
/// triangulation exactly once.
pub fn enumerate_triangulations(m: usize) -> Result<Vec<Triangulation>> {
    if m < 3 {
        return Err(Error::domain(format!("a polygon needs at least 3 vertices, got {m}")));
    }
    let vertices: Vec<usize> = (1..=m).collect();
    let all = triangulate(&vertices);
    let out = all
        .into_iter()
        .map(|mut triangles| {
            for t in &mut triangles {
                t.sort_unstable();
            }
            triangles.sort_unstable();
            let mut diagonals: Vec<(usize, usize)> = triangles
                .iter()
                .flat_map(|&[a, b, c]| [(a, b), (a, c), (b, c)])
                .filter(|&(a, b)| {
                    let side = b - a == 1 || (a == 1 && b == m);
                    !side
                })
                .collect();
            diagonals.sort_unstable();
            diagonals.dedup();
            Triangulation { polygon: m, diagonals, triangles }
        })
        .collect();
    Ok(out)
}

/// Triangulations of the sub-polygon spanned by `vertices` (cyclic order
/// inherited): for each apex of the triangle on the first edge, combine the
/// triangulations of the two pieces.
fn triangulate(vertices: &[usize]) -> Vec<Vec<[usize; 3]>> {
    let l = vertices.len();
    if l == 2 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in 2..l {
        let base = [vertices[0], vertices[1], vertices[k]];
        let left = triangulate(&vertices[1..=k]);
        let mut right_vertices = vertices[k..].to_vec();
        right_vertices.push(vertices[0]);
        let right = triangulate(&right_vertices);
        for lt in &left {
            for rt in &right {
                let mut tri = Vec::with_capacity(l - 2);
                tri.push(base);
                tri.extend_from_slice(lt);
                tri.extend_from_slice(rt);
                out.push(tri);
            }
        }
    }
    out
}

/// All closed friezes of width `n` with positive integer entries, one per
/// triangulation of the `(n + 3)`-gon, in triangulation order.
pub fn enumerate_friezes(n: usize) -> Result<Vec<Frieze>> {
    if n == 0 || n > MAX_ENUMERATION_WIDTH {
        return Err(Error::domain(format!(
            "frieze enumeration supports widths 1..={MAX_ENUMERATION_WIDTH}, got {n}"
        )));
    }
    let m = n + 3;
    let mut out = Vec::new();
    for t in enumerate_triangulations(m)? {
        let quiddity: Vec<Rational> =
            t.quiddity().into_iter().map(|c| Rational::from(c as i64)).collect();
        let f = frieze_knit_vertical(&quiddity, n + 1).map_err(|e| {
            Error::theorem(format!("quiddity of a triangulation failed to knit: {e}"))
        })?;
        if f.width() != n {
            return Err(Error::theorem(format!(
                "quiddity of an {m}-gon triangulation closed at width {} instead of {n}",
                f.width()
            )));
        }
        if !f.is_arithmetic() {
            return Err(Error::theorem(
                "triangulation frieze has a non-integer or nonpositive entry",
            ));
        }
        out.push(f);
    }
    Ok(out)
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

    fn catalan(k: usize) -> usize {
        // C(k) = binom(2k, k) / (k + 1)
        let mut c: u128 = 1;
        for i in 0..k as u128 {
            c = c * (2 * (k as u128) - i) / (i + 1);
        }
        (c / (k as u128 + 1)) as usize
    }

    #[test]
    fn diamond_check_examples() {
        assert!(frieze_diamond_check(&r(1), &r(2), &r(1), &r(1)));
        assert!(frieze_diamond_check(&r(4), &r(3), &r(3), &r(2)));
        assert!(!frieze_diamond_check(&r(4), &r(3), &r(3), &r(3)));
    }

    #[test]
    fn triangulation_counts_are_catalan() {
        for m in 3..=9 {
            let ts = enumerate_triangulations(m).unwrap();
            assert_eq!(ts.len(), catalan(m - 2), "m = {m}");
            for t in &ts {
                assert_eq!(t.diagonals().len(), m - 3);
                assert_eq!(t.triangles().len(), m - 2);
                let q: u64 = t.quiddity().iter().sum();
                assert_eq!(q, 3 * (m as u64 - 2));
            }
        }
    }

    #[test]
    fn triangulations_are_distinct_and_noncrossing() {
        let ts = enumerate_triangulations(7).unwrap();
        let mut seen = std::collections::HashSet::new();
        for t in &ts {
            assert!(seen.insert(t.diagonals().to_vec()), "duplicate {:?}", t.diagonals());
            let d = t.diagonals();
            for x in 0..d.len() {
                for y in x + 1..d.len() {
                    let (a, b) = d[x];
                    let (c, e) = d[y];
                    let crossing = (a < c && c < b && b < e) || (c < a && a < e && e < b);
                    assert!(!crossing, "{:?} crosses {:?}", d[x], d[y]);
                }
            }
        }
    }

    #[test]
    fn square_quiddities() {
        let ts = enumerate_triangulations(4).unwrap();
        let quiddities: Vec<Vec<u64>> = ts.iter().map(Triangulation::quiddity).collect();
        assert!(quiddities.contains(&vec![2, 1, 2, 1]));
        assert!(quiddities.contains(&vec![1, 2, 1, 2]));
        assert_eq!(quiddities.len(), 2);
    }

    #[test]
    fn pentagon_fan_quiddity() {
        let ts = enumerate_triangulations(5).unwrap();
        let fan = ts
            .iter()
            .find(|t| t.diagonals() == [(1, 3), (1, 4)])
            .expect("fan at vertex 1");
        assert_eq!(fan.quiddity(), vec![3, 1, 2, 2, 1]);
    }

    #[test]
    fn knit_width_4_from_its_quiddity() {
        let f = frieze_knit_vertical(&row(&[2, 1, 4, 1, 3, 1, 3]), 16).unwrap();
        assert_eq!(f.width(), 4);
        assert_eq!(f.row(1), &row(&[2, 1, 4, 1, 3, 1, 3])[..]);
        assert_eq!(f.row(2), &row(&[1, 3, 3, 2, 2, 2, 5])[..]);
        assert_eq!(f.row(3), &row(&[2, 2, 5, 1, 3, 3, 2])[..]);
        assert_eq!(f.row(4), &row(&[1, 3, 2, 1, 4, 1, 3])[..]);
        assert!(f.is_arithmetic());
        assert!(f.glide_symmetric());
    }

    #[test]
    fn knit_width_1_and_2() {
        let f = frieze_knit_vertical(&row(&[1, 2, 1, 2]), 8).unwrap();
        assert_eq!(f.width(), 1);
        assert_eq!(f.second_row(), &row(&[1, 1, 1, 1])[..]);

        let f = frieze_knit_vertical(&row(&[3, 1, 2, 2, 1]), 8).unwrap();
        assert_eq!(f.width(), 2);
    }

    #[test]
    fn knit_blocks_on_zero_source_entry() {
        // (1,1,2) knits (0,1,1) then (-1,0,-1/2), then the 0 blocks row 4
        let err = frieze_knit_vertical(&row(&[1, 1, 2]), 8).unwrap_err();
        assert_eq!(err, Error::KnitBlocked { row: 2, col: 0 });
    }

    #[test]
    fn degenerate_and_nonclosing_quiddities_are_rejected() {
        assert!(matches!(frieze_knit_vertical(&row(&[1, 1]), 8), Err(Error::Domain(_))));
        // constant 3s satisfy the rule forever without closing
        assert!(matches!(frieze_knit_vertical(&row(&[3]), 12), Err(Error::Domain(_))));
    }

    #[test]
    fn enumerate_small_widths() {
        let fs = enumerate_friezes(2).unwrap();
        assert_eq!(fs.len(), 5);
        let mut seen = std::collections::HashSet::new();
        for f in &fs {
            assert_eq!(f.width(), 2);
            assert!(f.is_arithmetic());
            assert!(f.glide_symmetric());
            assert!(seen.insert(f.grid().clone()));
        }
        assert!(enumerate_friezes(0).is_err());
        assert!(enumerate_friezes(MAX_ENUMERATION_WIDTH + 1).is_err());
    }
}
