//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use octatile::geometry::{PentagonGeom, Point};

/// Pentagon vertices from a plain float walk: unit edges except `DE = e`,
/// turning left by `180° - angle` after each vertex.
pub fn walk(angles_deg: [f64; 5], e: f64) -> ([Point; 6], f64) {
    let lengths = [1.0, 1.0, 1.0, e, 1.0];
    let mut pts = [Point::new(0.0, 0.0); 6];
    let mut heading = 0.0f64;
    for k in 0..5 {
        if k > 0 {
            heading += 180.0 - angles_deg[k];
        }
        let r = heading.to_radians();
        pts[k + 1] = Point::new(pts[k].x + lengths[k] * r.cos(), pts[k].y + lengths[k] * r.sin());
    }
    let closure = pts[5].dist(pts[0]);
    (pts, closure)
}

pub fn shoelace(pts: &[Point]) -> f64 {
    let n = pts.len();
    (0..n).map(|i| pts[i].x * pts[(i + 1) % n].y - pts[(i + 1) % n].x * pts[i].y).sum::<f64>() / 2.0
}

fn ccw(poly: &[Point]) -> Vec<Point> {
    let mut v = poly.to_vec();
    if shoelace(&v) < 0.0 {
        v.reverse();
    }
    v
}

fn inside_convex(p: Point, poly: &[Point]) -> bool {
    let n = poly.len();
    (0..n).all(|i| {
        let a = poly[i];
        let b = poly[(i + 1) % n];
        (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x) >= -1e-12
    })
}

fn segment_hit(p1: Point, p2: Point, q1: Point, q2: Point) -> Option<Point> {
    let r = Point::new(p2.x - p1.x, p2.y - p1.y);
    let s = Point::new(q2.x - q1.x, q2.y - q1.y);
    let den = r.x * s.y - r.y * s.x;
    if den.abs() <= 1e-9 * r.norm() * s.norm() {
        return None;
    }
    let w = Point::new(q1.x - p1.x, q1.y - p1.y);
    let t = (w.x * s.y - w.y * s.x) / den;
    let u = (w.x * r.y - w.y * r.x) / den;
    ((-1e-12..=1.0 + 1e-12).contains(&t) && (-1e-12..=1.0 + 1e-12).contains(&u))
        .then(|| Point::new(p1.x + t * r.x, p1.y + t * r.y))
}

fn hull_area(mut pts: Vec<Point>) -> f64 {
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    pts.dedup_by(|a, b| (a.x - b.x).abs() < 1e-15 && (a.y - b.y).abs() < 1e-15);
    if pts.len() < 3 {
        return 0.0;
    }
    let cross = |o: Point, a: Point, b: Point| (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    let mut lower: Vec<Point> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    shoelace(&lower).abs()
}

/// Area of the intersection of two convex polygons as the hull of mutually
/// contained vertices and edge crossings.
pub fn intersection_area(a: &[Point], b: &[Point]) -> f64 {
    let (a, b) = (ccw(a), ccw(b));
    let mut pts: Vec<Point> = a.iter().copied().filter(|&p| inside_convex(p, &b)).collect();
    pts.extend(b.iter().copied().filter(|&p| inside_convex(p, &a)));
    for i in 0..a.len() {
        for j in 0..b.len() {
            if let Some(p) = segment_hit(a[i], a[(i + 1) % a.len()], b[j], b[(j + 1) % b.len()]) {
                pts.push(p);
            }
        }
    }
    hull_area(pts)
}

/// All pairs, no prefilter.
pub fn brute_force_overlaps(geoms: &[PentagonGeom]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..geoms.len() {
        for j in i + 1..geoms.len() {
            if intersection_area(&geoms[i].vertices, &geoms[j].vertices) > 1e-9 {
                out.push((i, j));
            }
        }
    }
    out
}

/// Distinct tile vertices, merged within `tol`.
pub fn distinct_vertices(geoms: &[PentagonGeom], tol: f64) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::new();
    for g in geoms {
        for &p in &g.vertices {
            if !out.iter().any(|q| q.dist(p) < tol) {
                out.push(p);
            }
        }
    }
    out
}

pub fn mean_centroid(geoms: &[PentagonGeom]) -> Point {
    let n = geoms.len() as f64;
    let (sx, sy) = geoms.iter().fold((0.0, 0.0), |(sx, sy), g| {
        let a = shoelace(&g.vertices);
        let (mut cx, mut cy) = (0.0, 0.0);
        for i in 0..5 {
            let (p, q) = (g.vertices[i], g.vertices[(i + 1) % 5]);
            let w = p.x * q.y - q.x * p.y;
            cx += (p.x + q.x) * w;
            cy += (p.y + q.y) * w;
        }
        (sx + cx / (6.0 * a), sy + cy / (6.0 * a))
    });
    Point::new(sx / n, sy / n)
}

/// True when some tile has an edge joining `p` and `q`.
pub fn is_tile_edge(geoms: &[PentagonGeom], p: Point, q: Point, tol: f64) -> bool {
    geoms.iter().any(|g| {
        (0..5).any(|i| {
            let (a, b) = (g.vertices[i], g.vertices[(i + 1) % 5]);
            (a.dist(p) < tol && b.dist(q) < tol) || (a.dist(q) < tol && b.dist(p) < tol)
        })
    })
}
