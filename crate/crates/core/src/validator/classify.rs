use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::incidence::{build_incidence, IncidenceMap};
use crate::assembler::{Mode, Tiling};
use crate::geometry::{EdgeLabel, ExactAngle, PentagonSpec, VertexLabel};

/// Angle pattern at an interior vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VertexKind {
    /// `A + B + C = 360°`
    Abc,
    /// `2E + C = 360°`
    Eec,
    /// `2D + A + B = 360°`
    Ddab,
    /// `2D + 2E = 360°`
    Ddee,
    /// `k` copies of `B` around a rotation center.
    CenterB { k: u32 },
    /// `D + E = 180°` on the interior of another tile's edge.
    FlatDe,
    /// Anything else, with its labels and exact angle sum.
    Other { labels: String, sum: ExactAngle, flat: bool },
}

impl fmt::Display for VertexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexKind::Abc => write!(f, "ABC"),
            VertexKind::Eec => write!(f, "EEC"),
            VertexKind::Ddab => write!(f, "DDAB"),
            VertexKind::Ddee => write!(f, "DDEE"),
            VertexKind::CenterB { k } => write!(f, "centerB({k})"),
            VertexKind::FlatDe => write!(f, "flat_DE"),
            VertexKind::Other { labels, sum, flat } => {
                let how = if *flat { "flat" } else { "full" };
                write!(f, "other({labels}, {how}, sum {sum})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexClass {
    pub kind: VertexKind,
    pub count: usize,
}

/// Where a vertex sits relative to the patch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Situation {
    /// Surrounded by tile corners.
    Full,
    /// On the open edge of another tile, corners fill one side.
    Flat,
    Boundary,
}

/// Which vertex kinds a mode accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexPolicy {
    pub center_b: Option<u32>,
    pub flat_de: bool,
    /// Accept any full vertex whose angles sum to exactly 360°.
    pub any_full: bool,
    /// Accept any flat vertex whose angles sum to exactly 180°.
    pub any_flat: bool,
}

impl VertexPolicy {
    pub fn for_mode(mode: Mode) -> Self {
        let strict = VertexPolicy { center_b: None, flat_de: false, any_full: false, any_flat: false };
        match mode {
            Mode::Rotational { n } => VertexPolicy { center_b: Some(n), ..strict },
            Mode::Hole { .. } => strict,
            Mode::Rows { .. } => VertexPolicy { flat_de: true, ..strict },
            Mode::Spiral { .. } => VertexPolicy { any_full: true, ..strict },
            Mode::Freeform => VertexPolicy { center_b: None, flat_de: true, any_full: true, any_flat: true },
        }
    }

    pub fn allows(&self, kind: &VertexKind) -> bool {
        match kind {
            VertexKind::Abc | VertexKind::Eec | VertexKind::Ddab | VertexKind::Ddee => true,
            VertexKind::CenterB { k } => self.center_b == Some(*k) || self.any_full,
            VertexKind::FlatDe => self.flat_de || self.any_flat,
            VertexKind::Other { sum, flat: false, .. } => self.any_full && *sum == ExactAngle::FULL,
            VertexKind::Other { sum, flat: true, .. } => self.any_flat && *sum == ExactAngle::STRAIGHT,
        }
    }
}

/// Kind from the corner labels; the exact sum must match the situation or the kind is `Other`.
pub fn kind_of(spec: &PentagonSpec, labels: &[VertexLabel], flat: bool) -> VertexKind {
    let mut counts = [0u32; 5];
    let mut sum = ExactAngle::ZERO;
    for &l in labels {
        counts[l.index()] += 1;
        sum = sum.checked_add(spec.angle(l)).unwrap_or(ExactAngle::ZERO);
    }
    let target = if flat { ExactAngle::STRAIGHT } else { ExactAngle::FULL };
    let other = || {
        let mut sorted = labels.to_vec();
        sorted.sort();
        VertexKind::Other { labels: sorted.iter().map(|l| l.as_char()).collect(), sum, flat }
    };
    if sum != target {
        return other();
    }
    match (flat, counts) {
        (false, [1, 1, 1, 0, 0]) => VertexKind::Abc,
        (false, [0, 0, 1, 0, 2]) => VertexKind::Eec,
        (false, [1, 1, 0, 2, 0]) => VertexKind::Ddab,
        (false, [0, 0, 0, 2, 2]) => VertexKind::Ddee,
        (false, [0, k, 0, 0, 0]) => VertexKind::CenterB { k },
        (true, [0, 0, 0, 1, 1]) => VertexKind::FlatDe,
        _ => other(),
    }
}

/// Decides whether a vertex is surrounded, flat or on the boundary by pairing the
/// exact directions of the tile edges leaving it.
pub fn situation(t: &Tiling, inc: &IncidenceMap, key: usize) -> Situation {
    let spec = t.spec();
    let mut dirs: BTreeMap<ExactAngle, usize> = BTreeMap::new();
    for &(tile, v) in &inc.vertices[key].corners {
        let iso = t.tiles()[tile];
        let out = EdgeLabel::from_index(v.index());
        let back = EdgeLabel::from_index(v.index() + 4);
        let d_out = iso.map_direction(spec.edge_direction(out));
        let d_back = iso.map_direction(spec.edge_direction(back) + ExactAngle::STRAIGHT);
        *dirs.entry(d_out).or_default() += 1;
        *dirs.entry(d_back).or_default() += 1;
    }
    let unpaired: Vec<ExactAngle> = dirs.iter().filter(|(_, &c)| c % 2 == 1).map(|(d, _)| *d).collect();
    match unpaired.as_slice() {
        [] => Situation::Full,
        [a, b] if (*b - *a) == ExactAngle::STRAIGHT && !inc.hanging[key].is_empty() => {
            let along = inc.hanging[key].iter().any(|&(tile, e)| {
                let d = t.tiles()[tile].map_direction(spec.edge_direction(e));
                d == *a || d == *b
            });
            if along {
                Situation::Flat
            } else {
                Situation::Boundary
            }
        }
        _ => Situation::Boundary,
    }
}

/// Per-vertex kinds; `None` for boundary vertices.
pub fn vertex_kinds(t: &Tiling, inc: &IncidenceMap) -> Vec<Option<VertexKind>> {
    (0..inc.vertices.len())
        .into_par_iter()
        .map(|k| {
            let flat = match situation(t, inc, k) {
                Situation::Boundary => return None,
                Situation::Flat => true,
                Situation::Full => false,
            };
            let labels: Vec<VertexLabel> = inc.vertices[k].corners.iter().map(|&(_, l)| l).collect();
            Some(kind_of(t.spec(), &labels, flat))
        })
        .collect()
}

/// Counts of each kind, sorted by kind.
pub fn tally(kinds: &[Option<VertexKind>]) -> Vec<VertexClass> {
    let mut counts: BTreeMap<VertexKind, usize> = BTreeMap::new();
    for k in kinds.iter().flatten() {
        *counts.entry(k.clone()).or_default() += 1;
    }
    counts.into_iter().map(|(kind, count)| VertexClass { kind, count }).collect()
}

pub fn classify_vertices(t: &Tiling) -> Vec<VertexClass> {
    let inc = build_incidence(t);
    tally(&vertex_kinds(t, &inc))
}
