//! Patch certification: incidence, vertex classes, overlaps and gaps, symmetry and the hole shape.

mod boundary;
mod classify;
mod hole;
mod incidence;
mod overlap;
mod report;
mod symmetry;

pub use boundary::{boundary_cycles, BoundaryCycle, Cover};
pub use classify::{
    classify_vertices, kind_of, situation, tally, vertex_kinds, Situation, VertexClass, VertexKind,
    VertexPolicy,
};
pub use hole::{check_hole, merge_collinear, regular_circumradius, HoleReport, HOLE_TOL};
pub use incidence::{build_incidence, IncidenceMap, VertexStar, MERGE_RADIUS};
pub use overlap::{check_overlaps, convex_intersection_area, find_overlaps, patch_bbox, OVERLAP_AREA};
pub use report::{validate, validate_with_policy, ValidationReport, AREA_REL_TOL};
pub use symmetry::{detect_point_symmetry, detect_symmetry, patch_center, Symmetry, PLACEMENT_TOL};

use crate::assembler::Tiling;

/// True iff no tile vertex lies inside another tile's edge.
pub fn check_edge_to_edge(t: &Tiling) -> bool {
    build_incidence(t).is_edge_to_edge()
}

/// Overlapping pairs, and whether the patch has uncovered regions inside it.
pub fn check_overlap_gap(t: &Tiling) -> (Vec<(usize, usize)>, bool) {
    let r = validate_with_policy(t, &VertexPolicy::for_mode(crate::assembler::Mode::Freeform));
    (r.overlaps, r.gaps)
}
