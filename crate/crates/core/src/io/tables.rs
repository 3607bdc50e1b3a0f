use std::fmt::Write;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{spec_for_hole, spec_for_rotational, ExactAngle, PentagonSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableKind {
    Rotational,
    Hole,
}

impl std::str::FromStr for TableKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rotational" | "rot" => Ok(TableKind::Rotational),
            "hole" => Ok(TableKind::Hole),
            _ => Err(Error::Parse(format!("unknown table {s:?}, expected rotational or hole"))),
        }
    }
}

/// One row: the index (`n` or `m`), the five angles, `e`, and for hole rows
/// the matching `n` when `3 | m`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub index: u32,
    pub angles: [ExactAngle; 5],
    pub e: f64,
    pub cross_ref: Option<u32>,
}

impl TableRow {
    fn new(index: u32, spec: &PentagonSpec, cross_ref: Option<u32>) -> Self {
        TableRow { index, angles: spec.angles(), e: spec.e(), cross_ref }
    }

    /// Angles rounded to two decimals, `e` to three, trailing zeros dropped.
    pub fn cells(&self) -> Vec<String> {
        let mut out = vec![self.index.to_string()];
        out.extend(self.angles.iter().map(|&a| round_angle(a)));
        out.push(round_e(self.e));
        out.push(self.cross_ref.map(|n| n.to_string()).unwrap_or_default());
        out
    }
}

fn trim(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// Exact half-away-from-zero rounding of a rational angle to two decimals.
pub fn round_angle(a: ExactAngle) -> String {
    let scaled = a.num() as i128 * 100;
    let den = a.den() as i128;
    let q = (2 * scaled.abs() + den) / (2 * den);
    let sign = if scaled < 0 && q != 0 { "-" } else { "" };
    trim(format!("{sign}{}.{:02}", q / 100, q % 100))
}

/// Half-away-from-zero rounding of `e` to three decimals.
pub fn round_e(e: f64) -> String {
    let q = (e * 1000.0).round() / 1000.0;
    trim(format!("{q:.3}"))
}

pub fn rotational_table(range: RangeInclusive<u32>) -> Result<Vec<TableRow>> {
    range.map(|n| Ok(TableRow::new(n, &spec_for_rotational(n)?, None))).collect()
}

pub fn hole_table(range: RangeInclusive<u32>) -> Result<Vec<TableRow>> {
    range
        .map(|m| {
            let cross = (m % 3 == 0).then_some(m / 3);
            Ok(TableRow::new(m, &spec_for_hole(m)?, cross))
        })
        .collect()
}

pub fn table(kind: TableKind, range: RangeInclusive<u32>) -> Result<Vec<TableRow>> {
    match kind {
        TableKind::Rotational => rotational_table(range),
        TableKind::Hole => hole_table(range),
    }
}

/// Parses `"3..18"`, `"3..=18"` (both inclusive) or a single index.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u32>> {
    let bad = || Error::Parse(format!("bad range {s:?}, expected like 3..18"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a, b.trim_start_matches('=')),
        None => (s, s),
    };
    let lo: u32 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u32 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

/// Fixed-width text rendering.
pub fn format_table(kind: TableKind, rows: &[TableRow]) -> String {
    let head = match kind {
        TableKind::Rotational => ["n", "A", "B", "C", "D", "E", "e", ""],
        TableKind::Hole => ["m", "A", "B", "C", "D", "E", "e", "n"],
    };
    let width = [4, 9, 9, 9, 9, 9, 7, 4];
    let mut out = String::new();
    let line = |cells: Vec<String>, out: &mut String| {
        let mut l = String::new();
        for (c, w) in cells.iter().zip(width) {
            let _ = write!(l, "{c:>w$}");
        }
        out.push_str(l.trim_end());
        out.push('\n');
    };
    line(head.iter().map(|s| s.to_string()).collect(), &mut out);
    for r in rows {
        line(r.cells(), &mut out);
    }
    out
}
