use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// A point or vector in the plane, in units of the pentagon's unit edge.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, o: Point) -> f64 {
        (self - o).norm()
    }

    /// Rotates by the angle whose cosine and sine are given.
    pub fn rotate(self, (c, s): (f64, f64)) -> Point {
        Point::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn conj(self) -> Point {
        Point::new(self.x, -self.y)
    }

    /// Direction in degrees, in `(-180, 180]`.
    pub fn angle_deg(self) -> f64 {
        self.y.atan2(self.x).to_degrees()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// Signed area of a closed polygon, positive when counterclockwise.
pub fn signed_area(pts: &[Point]) -> f64 {
    let n = pts.len();
    (0..n).map(|i| pts[i].cross(pts[(i + 1) % n])).sum::<f64>() / 2.0
}

/// Area centroid of a simple polygon.
pub fn polygon_centroid(pts: &[Point]) -> Point {
    let n = pts.len();
    let a = signed_area(pts);
    if a.abs() < 1e-300 {
        let s = pts.iter().fold(Point::ORIGIN, |acc, &p| acc + p);
        return s * (1.0 / n.max(1) as f64);
    }
    let mut c = Point::ORIGIN;
    for i in 0..n {
        let (p, q) = (pts[i], pts[(i + 1) % n]);
        c = c + (p + q) * p.cross(q);
    }
    c * (1.0 / (6.0 * a))
}

/// Distance from `p` to the segment `a`-`b`, together with the projection parameter.
pub fn segment_distance(p: Point, a: Point, b: Point) -> (f64, f64) {
    let d = b - a;
    let len2 = d.dot(d);
    if len2 == 0.0 {
        return (p.dist(a), 0.0);
    }
    let t = (p - a).dot(d) / len2;
    let q = a + d * t.clamp(0.0, 1.0);
    (p.dist(q), t)
}
