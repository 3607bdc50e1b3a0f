use std::fmt;

use serde::{Deserialize, Serialize};

use super::boundary::boundary_cycles;
use super::classify::{tally, vertex_kinds, VertexClass, VertexPolicy};
use super::hole::{hole_from_cover, HoleReport};
use super::incidence::{build_incidence, IncidenceMap};
use super::overlap::find_overlaps;
use super::symmetry::{detect_symmetry, Symmetry};
use crate::assembler::{Mode, Tiling};

/// Relative tolerance on the covered area.
pub const AREA_REL_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub mode: Mode,
    pub tile_count: usize,
    pub edge_to_edge: bool,
    pub vertex_classes: Vec<VertexClass>,
    pub illegal_vertices: usize,
    pub overlaps: Vec<(usize, usize)>,
    pub gaps: bool,
    pub union_area: f64,
    pub planarity_violations: usize,
    /// Tiles whose rotation is off the mode's angle lattice.
    pub off_lattice: Vec<usize>,
    pub connected: bool,
    pub symmetry: Symmetry,
    pub hole: Option<HoleReport>,
    pub problems: Vec<String>,
}

fn connected(inc: &IncidenceMap) -> bool {
    let n = inc.tile_vertices.len();
    if n <= 1 {
        return true;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for star in &inc.vertices {
        let first = star.corners[0].0;
        for &(tile, _) in &star.corners[1..] {
            let (a, b) = (find(&mut parent, first), find(&mut parent, tile));
            parent[a] = b;
        }
    }
    for (k, hs) in inc.hanging.iter().enumerate() {
        let first = inc.vertices[k].corners[0].0;
        for &(tile, _) in hs {
            let (a, b) = (find(&mut parent, first), find(&mut parent, tile));
            parent[a] = b;
        }
    }
    let root = find(&mut parent, 0);
    (1..n).all(|i| find(&mut parent, i) == root)
}

/// Runs every check with the vertex policy of the tiling's mode.
pub fn validate(t: &Tiling) -> ValidationReport {
    validate_with_policy(t, &VertexPolicy::for_mode(t.mode()))
}

pub fn validate_with_policy(t: &Tiling, policy: &VertexPolicy) -> ValidationReport {
    let inc = build_incidence(t);
    let mut problems = Vec::new();

    let kinds = vertex_kinds(t, &inc);
    let mut illegal_vertices = 0;
    for (k, kind) in kinds.iter().enumerate() {
        if let Some(kind) = kind {
            if !policy.allows(kind) {
                illegal_vertices += 1;
                if illegal_vertices <= 5 {
                    let p = inc.vertices[k].point;
                    problems.push(format!("vertex ({:.6}, {:.6}) is {kind}, not allowed here", p.x, p.y));
                }
            }
        }
    }
    if illegal_vertices > 5 {
        problems.push(format!("{illegal_vertices} illegal vertices in total"));
    }

    let overlaps = find_overlaps(&inc.geoms);
    if !overlaps.is_empty() {
        problems.push(format!("{} overlapping tile pairs, first {:?}", overlaps.len(), overlaps[0]));
    }

    let edge_to_edge = inc.is_edge_to_edge();
    let needs_edge_to_edge = !matches!(t.mode(), Mode::Rows { .. } | Mode::Freeform);
    if needs_edge_to_edge && !edge_to_edge {
        problems.push("a tile vertex lies inside another tile's edge".into());
    }

    let planarity_violations = inc.planarity_violations.len();
    if planarity_violations > 0 {
        problems.push(format!("{planarity_violations} edges shared by more than two tiles"));
    }

    let off_lattice: Vec<usize> = match t.rotation_unit() {
        Some(unit) => (0..t.len()).filter(|&i| !t.tiles()[i].rotation().is_multiple_of(unit)).collect(),
        None => Vec::new(),
    };
    if !off_lattice.is_empty() {
        problems.push(format!("{} placements have rotations off the mode's angle lattice", off_lattice.len()));
    }

    let symmetry = detect_symmetry(t);
    let cover = boundary_cycles(t, &inc);
    let expected_area = t.len() as f64 * t.pentagon_area();
    let scale = expected_area.max(f64::MIN_POSITIVE);
    let hole = match t.mode() {
        Mode::Hole { m } => match hole_from_cover(&cover, symmetry.center, m) {
            Ok(h) => {
                if !h.passes() {
                    problems.push(format!(
                        "hole deviates from the regular {m}-gon: side {:e}, radius {:e}",
                        h.max_side_deviation, h.max_radius_deviation
                    ));
                }
                Some(h)
            }
            Err(e) => {
                problems.push(format!("hole check failed: {e}"));
                None
            }
        },
        _ => None,
    };

    let declared_hole = hole.as_ref().map(|h| h.area);
    let mut skipped = false;
    let stray_holes = cover
        .cycles
        .iter()
        .filter(|c| c.is_hole() && c.signed_area.abs() > AREA_REL_TOL * scale)
        .filter(|c| {
            let is_declared = !skipped && declared_hole.is_some_and(|a| (a - c.signed_area.abs()).abs() <= 1e-9 * a.max(1.0));
            if is_declared {
                skipped = true;
            }
            !is_declared
        })
        .count();
    let area_mismatch = (cover.union_area - expected_area).abs() > AREA_REL_TOL * scale;
    let gaps = !cover.closed || stray_holes > 0 || (!t.is_empty() && area_mismatch);
    if stray_holes > 0 {
        problems.push(format!("{stray_holes} uncovered regions inside the patch"));
    }
    if !cover.closed {
        problems.push("patch boundary does not close".into());
    }
    if !t.is_empty() && area_mismatch {
        problems.push(format!("covered area {} differs from {} tiles' area {}", cover.union_area, t.len(), expected_area));
    }

    let connected = connected(&inc);
    if !connected && t.mode() != Mode::Freeform {
        problems.push("patch is not connected".into());
    }

    let want = match t.mode() {
        Mode::Rotational { n } => Some(n as usize),
        Mode::Hole { m } => Some(m as usize),
        Mode::Spiral { .. } => Some(2),
        _ => None,
    };
    if let Some(order) = want {
        if symmetry.rotation_order != order || symmetry.reflection_axes != 0 {
            problems.push(format!("symmetry is {} with {} axes, expected C{order}", symmetry.schoenflies(), symmetry.reflection_axes));
        }
    }

    ValidationReport {
        valid: problems.is_empty(),
        mode: t.mode(),
        tile_count: t.len(),
        edge_to_edge,
        vertex_classes: tally(&kinds),
        illegal_vertices,
        overlaps,
        gaps,
        union_area: cover.union_area,
        planarity_violations,
        off_lattice,
        connected,
        symmetry,
        hole,
        problems,
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verdict: {}", if self.valid { "valid" } else { "INVALID" })?;
        writeln!(f, "tiles: {}", self.tile_count)?;
        writeln!(f, "edge-to-edge: {}", self.edge_to_edge)?;
        writeln!(f, "overlaps: {}", self.overlaps.len())?;
        writeln!(f, "gaps: {}", self.gaps)?;
        writeln!(f, "connected: {}", self.connected)?;
        writeln!(
            f,
            "symmetry: {} ({} reflection axes) about ({:.6}, {:.6})",
            self.symmetry.schoenflies(),
            self.symmetry.reflection_axes,
            self.symmetry.center.x,
            self.symmetry.center.y
        )?;
        writeln!(f, "vertices:")?;
        for c in &self.vertex_classes {
            writeln!(f, "  {:<12} {}", c.kind.to_string(), c.count)?;
        }
        if let Some(h) = &self.hole {
            writeln!(
                f,
                "hole: {}-gon, side deviation {:.3e}, radius deviation {:.3e}",
                h.m, h.max_side_deviation, h.max_radius_deviation
            )?;
        }
        for p in &self.problems {
            writeln!(f, "problem: {p}")?;
        }
        Ok(())
    }
}
