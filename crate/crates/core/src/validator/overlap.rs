use std::collections::HashMap;

use rayon::prelude::*;

use crate::assembler::Tiling;
use crate::geometry::{bbox, signed_area, PentagonGeom, Point};

/// Interiors meeting in less than this area do not overlap.
pub const OVERLAP_AREA: f64 = 1e-9;

fn ccw(poly: &[Point]) -> Vec<Point> {
    let mut v = poly.to_vec();
    if signed_area(&v) < 0.0 {
        v.reverse();
    }
    v
}

/// Area of the intersection of two convex polygons (Sutherland-Hodgman clipping).
pub fn convex_intersection_area(a: &[Point], b: &[Point]) -> f64 {
    let clip = ccw(b);
    let mut poly = ccw(a);
    for i in 0..clip.len() {
        if poly.is_empty() {
            break;
        }
        let (c0, c1) = (clip[i], clip[(i + 1) % clip.len()]);
        let edge = c1 - c0;
        let side = |p: Point| edge.cross(p - c0);
        let mut next = Vec::with_capacity(poly.len() + 2);
        for j in 0..poly.len() {
            let (p, q) = (poly[j], poly[(j + 1) % poly.len()]);
            let (sp, sq) = (side(p), side(q));
            if sp >= 0.0 {
                next.push(p);
            }
            if (sp >= 0.0) != (sq >= 0.0) {
                let t = sp / (sp - sq);
                next.push(p + (q - p) * t);
            }
        }
        poly = next;
    }
    if poly.len() < 3 {
        0.0
    } else {
        signed_area(&poly).abs()
    }
}

/// Pairs `(i, j)`, `i < j`, whose interiors overlap, sorted.
pub fn find_overlaps(geoms: &[PentagonGeom]) -> Vec<(usize, usize)> {
    let boxes: Vec<(Point, Point)> = geoms.iter().map(|g| g.bbox()).collect();
    let size = boxes
        .iter()
        .map(|(lo, hi)| (hi.x - lo.x).max(hi.y - lo.y))
        .fold(1.0f64, f64::max);
    let cell = |x: f64| (x / size).floor() as i64;
    let mut grid: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    for (i, (lo, hi)) in boxes.iter().enumerate() {
        for x in cell(lo.x)..=cell(hi.x) {
            for y in cell(lo.y)..=cell(hi.y) {
                grid.entry((x, y)).or_default().push(i);
            }
        }
    }
    let boxes = &boxes;
    let mut pairs: Vec<(usize, usize)> = (0..geoms.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let (lo, hi) = boxes[i];
            let mut cands: Vec<usize> = Vec::new();
            for x in cell(lo.x)..=cell(hi.x) {
                for y in cell(lo.y)..=cell(hi.y) {
                    if let Some(list) = grid.get(&(x, y)) {
                        cands.extend(list.iter().copied().filter(|&j| j > i));
                    }
                }
            }
            cands.sort_unstable();
            cands.dedup();
            cands
                .into_iter()
                .filter(move |&j| {
                    let (l2, h2) = boxes[j];
                    let apart = l2.x >= hi.x || h2.x <= lo.x || l2.y >= hi.y || h2.y <= lo.y;
                    !apart && convex_intersection_area(&geoms[i].vertices, &geoms[j].vertices) > OVERLAP_AREA
                })
                .map(move |j| (i, j))
        })
        .collect();
    pairs.sort_unstable();
    pairs
}

/// Overlapping tile pairs of a patch.
pub fn check_overlaps(t: &Tiling) -> Vec<(usize, usize)> {
    find_overlaps(&t.geoms())
}

/// Bounding box of a whole patch, `None` when empty.
pub fn patch_bbox(geoms: &[PentagonGeom]) -> Option<(Point, Point)> {
    if geoms.is_empty() {
        return None;
    }
    let pts: Vec<Point> = geoms.iter().flat_map(|g| g.vertices).collect();
    Some(bbox(&pts))
}
