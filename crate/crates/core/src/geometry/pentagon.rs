use std::fmt;

use serde::{Deserialize, Serialize};

use super::angle::ExactAngle;
use super::point::{polygon_centroid, signed_area, Point};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VertexLabel {
    A,
    B,
    C,
    D,
    E,
}

impl VertexLabel {
    pub const ALL: [VertexLabel; 5] = [Self::A, Self::B, Self::C, Self::D, Self::E];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Self {
        Self::ALL[i % 5]
    }

    pub fn as_char(self) -> char {
        (b'A' + self as u8) as char
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Edges in boundary order; `DE` is the edge of length `e`, the rest have unit length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeLabel {
    AB,
    BC,
    CD,
    DE,
    EA,
}

impl EdgeLabel {
    pub const ALL: [EdgeLabel; 5] = [Self::AB, Self::BC, Self::CD, Self::DE, Self::EA];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Self {
        Self::ALL[i % 5]
    }

    /// Start and end vertex in counterclockwise order.
    pub fn endpoints(self) -> (VertexLabel, VertexLabel) {
        let i = self.index();
        (VertexLabel::from_index(i), VertexLabel::from_index(i + 1))
    }

    pub fn is_unit(self) -> bool {
        self != EdgeLabel::DE
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.endpoints();
        write!(f, "{a}{b}")
    }
}

impl std::str::FromStr for EdgeLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        EdgeLabel::ALL
            .into_iter()
            .find(|e| e.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown edge label {s:?}")))
    }
}

/// Interior angles and the length `e` of a C11-T1A pentagon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PentagonSpec {
    angles: [ExactAngle; 5],
    e: f64,
}

impl PentagonSpec {
    /// Wraps raw angles and a length without checking the family relations.
    ///
    /// Useful for fault injection; everything else should come from [`angles_from_b`].
    pub fn from_parts_unchecked(angles: [ExactAngle; 5], e: f64) -> Self {
        PentagonSpec { angles, e }
    }

    pub fn angle(&self, v: VertexLabel) -> ExactAngle {
        self.angles[v.index()]
    }

    pub fn angles(&self) -> [ExactAngle; 5] {
        self.angles
    }

    pub fn b(&self) -> ExactAngle {
        self.angle(VertexLabel::B)
    }

    /// Length of edge `DE`.
    pub fn e(&self) -> f64 {
        self.e
    }

    pub fn edge_length(&self, edge: EdgeLabel) -> f64 {
        if edge.is_unit() {
            1.0
        } else {
            self.e
        }
    }

    /// All five edges have unit length (only at `B = 60°`).
    pub fn is_equilateral(&self) -> bool {
        self.b() == ExactAngle::degrees(60)
    }

    /// True when the two edges can be glued: both unit, both `DE`, or an equilateral pentagon.
    pub fn edges_match(&self, a: EdgeLabel, b: EdgeLabel) -> bool {
        a.is_unit() == b.is_unit() || self.is_equilateral()
    }

    /// Direction of an edge in the pentagon's own frame, with `AB` along +x.
    pub fn edge_direction(&self, edge: EdgeLabel) -> ExactAngle {
        let mut dir = ExactAngle::ZERO;
        for k in 1..=edge.index() {
            let turn = ExactAngle::STRAIGHT - self.angles[k];
            dir = dir + turn;
        }
        dir.normalized()
    }

    /// Checks the family relations exactly and the value of `e`.
    pub fn check(&self) -> Result<()> {
        let [a, b, c, d, e] = self.angles;
        let full = ExactAngle::FULL;
        let fail = |what: &str| Err(Error::Domain(format!("pentagon spec violates {what}")));
        if a.checked_add(b)?.checked_add(c)? != full {
            return fail("A + B + C = 360");
        }
        if c != d.checked_mul_int(2)? {
            return fail("C = 2D");
        }
        if d.checked_add(e)? != ExactAngle::STRAIGHT {
            return fail("D + E = 180");
        }
        if self.angles.iter().any(|&x| x <= ExactAngle::ZERO || x >= ExactAngle::STRAIGHT) {
            return fail("convexity");
        }
        if (self.e - edge_e(b)).abs() > 1e-12 {
            return fail("e = 2 sin(B/2)");
        }
        Ok(())
    }
}

fn edge_e(b: ExactAngle) -> f64 {
    2.0 * (b.to_radians() / 2.0).sin()
}

/// The pentagon of the family with angle `B`, which must lie strictly between 0° and 180°.
pub fn angles_from_b(b: ExactAngle) -> Result<PentagonSpec> {
    if b <= ExactAngle::ZERO || b >= ExactAngle::STRAIGHT {
        return Err(Error::Domain(format!("B = {b} is outside (0, 180)")));
    }
    let s = ExactAngle::STRAIGHT;
    let r = ExactAngle::degrees(90);
    let a = s.checked_sub(b.checked_scale(2, 3)?)?;
    let c = s.checked_sub(b.checked_scale(1, 3)?)?;
    let d = r.checked_sub(b.checked_scale(1, 6)?)?;
    let e = r.checked_add(b.checked_scale(1, 6)?)?;
    Ok(PentagonSpec { angles: [a, b, c, d, e], e: edge_e(b) })
}

/// Pentagon for n-fold rotational tilings, `B = 360°/n`.
pub fn spec_for_rotational(n: u32) -> Result<PentagonSpec> {
    if n < 3 {
        return Err(Error::Domain(format!("n = {n}, need n >= 3")));
    }
    angles_from_b(ExactAngle::new(360, n as i64)?)
}

/// Pentagon for tilings around a regular m-gon hole, `B = 1080°/m`.
pub fn spec_for_hole(m: u32) -> Result<PentagonSpec> {
    if m < 7 {
        return Err(Error::Domain(format!("m = {m}, need m >= 7")));
    }
    angles_from_b(ExactAngle::new(1080, m as i64)?)
}

/// Concrete coordinates of a pentagon, vertices in label order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PentagonGeom {
    pub vertices: [Point; 5],
}

impl PentagonGeom {
    pub fn vertex(&self, v: VertexLabel) -> Point {
        self.vertices[v.index()]
    }

    pub fn edge(&self, e: EdgeLabel) -> (Point, Point) {
        let (a, b) = e.endpoints();
        (self.vertex(a), self.vertex(b))
    }

    pub fn edge_length(&self, e: EdgeLabel) -> f64 {
        let (a, b) = self.edge(e);
        a.dist(b)
    }

    pub fn signed_area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    pub fn area(&self) -> f64 {
        self.signed_area().abs()
    }

    pub fn centroid(&self) -> Point {
        polygon_centroid(&self.vertices)
    }

    /// Interior angle in degrees, measured from coordinates.
    pub fn interior_angle_deg(&self, v: VertexLabel) -> f64 {
        let i = v.index();
        let p = self.vertices[i];
        let next = self.vertices[(i + 1) % 5] - p;
        let prev = self.vertices[(i + 4) % 5] - p;
        let ccw = self.signed_area() > 0.0;
        let (from, to) = if ccw { (next, prev) } else { (prev, next) };
        from.cross(to).atan2(from.dot(to)).to_degrees().rem_euclid(360.0)
    }

    pub fn is_convex(&self) -> bool {
        let mut sign = 0.0;
        for i in 0..5 {
            let a = self.vertices[(i + 1) % 5] - self.vertices[i];
            let b = self.vertices[(i + 2) % 5] - self.vertices[(i + 1) % 5];
            let c = a.cross(b);
            if c == 0.0 || (sign != 0.0 && c.signum() != sign) {
                return false;
            }
            sign = c.signum();
        }
        true
    }

    pub fn bbox(&self) -> (Point, Point) {
        bbox(&self.vertices)
    }
}

pub(crate) fn bbox(pts: &[Point]) -> (Point, Point) {
    let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in pts {
        lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    (lo, hi)
}

/// Lays the pentagon out counterclockwise from `A = (0, 0)`, `B = (1, 0)`.
pub fn realize(spec: &PentagonSpec) -> Result<PentagonGeom> {
    let mut vertices = [Point::ORIGIN; 5];
    let mut p = Point::ORIGIN;
    for edge in EdgeLabel::ALL {
        vertices[edge.index()] = p;
        let step = Point::new(spec.edge_length(edge), 0.0).rotate(spec.edge_direction(edge).cos_sin());
        p = p + step;
    }
    let residual = p.norm();
    if residual > 1e-9 {
        return Err(Error::Internal(format!("boundary walk misses closure by {residual:e}")));
    }
    Ok(PentagonGeom { vertices })
}
