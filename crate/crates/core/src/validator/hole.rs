use serde::{Deserialize, Serialize};

use super::boundary::{boundary_cycles, Cover};
use super::incidence::build_incidence;
use super::symmetry::patch_center;
use crate::assembler::Tiling;
use crate::error::{Error, Result};
use crate::geometry::Point;

/// Side lengths and circumradius of the hole must match within this.
pub const HOLE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HoleReport {
    pub m: u32,
    pub max_side_deviation: f64,
    pub max_radius_deviation: f64,
    pub area: f64,
    pub center: Point,
    pub vertices: Vec<Point>,
}

impl HoleReport {
    pub fn passes(&self) -> bool {
        self.max_side_deviation <= HOLE_TOL && self.max_radius_deviation <= HOLE_TOL
    }
}

/// Circumradius of the regular m-gon with unit sides.
pub fn regular_circumradius(m: u32) -> f64 {
    1.0 / (2.0 * (std::f64::consts::PI / m as f64).sin())
}

/// Drops vertices where the boundary runs straight on.
pub fn merge_collinear(points: &[Point]) -> Vec<Point> {
    let n = points.len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let prev = points[(i + n - 1) % n];
        let next = points[(i + 1) % n];
        let (a, b) = (points[i] - prev, next - points[i]);
        let straight = a.cross(b).abs() <= 1e-9 * a.norm() * b.norm() && a.dot(b) > 0.0;
        if !straight {
            out.push(points[i]);
        }
    }
    out
}

pub(crate) fn hole_from_cover(cover: &Cover, center: Point, m: u32) -> Result<HoleReport> {
    let hole = cover
        .cycles
        .iter()
        .filter(|c| c.is_hole())
        .min_by(|a, b| a.mean().dist(center).total_cmp(&b.mean().dist(center)))
        .ok_or(Error::NoHole)?;
    let vertices = merge_collinear(&hole.points);
    if vertices.len() != m as usize {
        return Err(Error::HoleSides { expected: m as usize, found: vertices.len() });
    }
    let n = vertices.len();
    let mid = vertices.iter().fold(Point::ORIGIN, |acc, &p| acc + p) * (1.0 / n as f64);
    let radius = regular_circumradius(m);
    let max_side_deviation = (0..n)
        .map(|i| (vertices[i].dist(vertices[(i + 1) % n]) - 1.0).abs())
        .fold(0.0, f64::max);
    let max_radius_deviation = vertices.iter().map(|p| (p.dist(mid) - radius).abs()).fold(0.0, f64::max);
    Ok(HoleReport {
        m,
        max_side_deviation,
        max_radius_deviation,
        area: hole.signed_area.abs(),
        center: mid,
        vertices,
    })
}

/// Finds the hole nearest the patch center and measures it against the regular m-gon of side 1.
pub fn check_hole(t: &Tiling, m: u32) -> Result<HoleReport> {
    let inc = build_incidence(t);
    let cover = boundary_cycles(t, &inc);
    hole_from_cover(&cover, patch_center(t), m)
}
