use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::assembler::Tiling;
use crate::geometry::{ExactAngle, Isometry, Point};

/// Translations of mapped placements must agree within this distance.
pub const PLACEMENT_TOL: f64 = 1e-9;

/// A planar point group: `C_r` when there are no axes, `D_r` with `r` axes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Symmetry {
    pub rotation_order: usize,
    pub reflection_axes: usize,
    pub center: Point,
}

impl Symmetry {
    pub fn schoenflies(&self) -> String {
        if self.reflection_axes == 0 {
            format!("C{}", self.rotation_order)
        } else {
            format!("D{}", self.rotation_order)
        }
    }
}

fn divisors_desc(n: usize) -> Vec<usize> {
    let mut d: Vec<usize> = (1..=n).filter(|&k| n.is_multiple_of(k)).collect();
    d.reverse();
    d
}

type Grid = HashMap<(i64, i64), Vec<Point>>;

/// Placements bucketed by exact rotation and reflection, then by a coarse grid on translation.
struct PlacementIndex {
    buckets: HashMap<(i64, i64, bool), Grid>,
}

const CELL: f64 = 1e-6;

fn cell(p: Point) -> (i64, i64) {
    ((p.x / CELL).floor() as i64, (p.y / CELL).floor() as i64)
}

impl PlacementIndex {
    fn new(tiles: &[Isometry]) -> Self {
        let mut buckets: HashMap<_, HashMap<_, Vec<Point>>> = HashMap::new();
        for t in tiles {
            let r = t.rotation();
            buckets
                .entry((r.num(), r.den(), t.reflected))
                .or_default()
                .entry(cell(t.translation))
                .or_default()
                .push(t.translation);
        }
        PlacementIndex { buckets }
    }

    fn contains(&self, t: &Isometry) -> bool {
        let r = t.rotation();
        let Some(grid) = self.buckets.get(&(r.num(), r.den(), t.reflected)) else {
            return false;
        };
        let (cx, cy) = cell(t.translation);
        for dx in -1..=1 {
            for dy in -1..=1 {
                if let Some(list) = grid.get(&(cx + dx, cy + dy)) {
                    let hit = list.iter().any(|p| {
                        (p.x - t.translation.x).abs() <= PLACEMENT_TOL
                            && (p.y - t.translation.y).abs() <= PLACEMENT_TOL
                    });
                    if hit {
                        return true;
                    }
                }
            }
        }
        false
    }

    fn maps_onto_itself(&self, tiles: &[Isometry], g: &Isometry) -> bool {
        tiles.iter().all(|t| self.contains(&g.compose(t)))
    }
}

/// Centroid of the tile centroids.
pub fn patch_center(t: &Tiling) -> Point {
    let n = t.len().max(1) as f64;
    t.geoms().iter().fold(Point::ORIGIN, |acc, g| acc + g.centroid()) * (1.0 / n)
}

/// Rotation order and reflection axes of the placement set about its center.
pub fn detect_symmetry(t: &Tiling) -> Symmetry {
    let center = patch_center(t);
    let tiles = t.tiles();
    if tiles.is_empty() {
        return Symmetry { rotation_order: 1, reflection_axes: 0, center };
    }
    let index = PlacementIndex::new(tiles);
    let rotation_order = divisors_desc(tiles.len())
        .into_iter()
        .find(|&r| {
            r == 1 || {
                let step = ExactAngle::new(360, r as i64).expect("non-zero order");
                index.maps_onto_itself(tiles, &Isometry::rotate_about(step, center))
            }
        })
        .unwrap_or(1);

    // An axis at angle phi maps tile 0 to some tile q of opposite handedness,
    // which fixes 2·phi = rot(0) + rot(q).
    let first = tiles[0];
    let mut axes: BTreeSet<ExactAngle> = BTreeSet::new();
    let mut tried: BTreeSet<ExactAngle> = BTreeSet::new();
    for q in tiles.iter().filter(|q| q.reflected != first.reflected) {
        let twice = (first.rotation() + q.rotation()).normalized();
        if !tried.insert(twice) {
            continue;
        }
        let t = center - center.conj().rotate(twice.cos_sin());
        let mirror = Isometry::new(twice, t, true);
        if index.maps_onto_itself(tiles, &mirror) {
            axes.insert(twice);
        }
    }
    Symmetry { rotation_order, reflection_axes: axes.len(), center }
}

/// Symmetry of a finite point set, comparing points within `tol`.
pub fn detect_point_symmetry(points: &[Point], tol: f64) -> Symmetry {
    let n = points.len();
    let center = points.iter().fold(Point::ORIGIN, |acc, &p| acc + p) * (1.0 / n.max(1) as f64);
    if n == 0 {
        return Symmetry { rotation_order: 1, reflection_axes: 0, center };
    }
    let present = |q: Point| points.iter().any(|p| p.dist(q) <= tol);
    let rotation_order = divisors_desc(n)
        .into_iter()
        .find(|&r| {
            let a = (360.0 / r as f64).to_radians();
            let cs = (a.cos(), a.sin());
            points.iter().all(|&p| present((p - center).rotate(cs) + center))
        })
        .unwrap_or(1);
    let base = (points[0] - center).angle_deg();
    let mut axes: Vec<f64> = Vec::new();
    for &q in points {
        let phi = ((base + (q - center).angle_deg()) / 2.0).rem_euclid(180.0);
        let seen = axes.iter().any(|&a| {
            let d = (a - phi).rem_euclid(180.0);
            d.min(180.0 - d) < 1e-9
        });
        if seen {
            continue;
        }
        let cs = ((2.0 * phi).to_radians().cos(), (2.0 * phi).to_radians().sin());
        if points.iter().all(|&p| present((p - center).conj().rotate(cs) + center)) {
            axes.push(phi);
        }
    }
    Symmetry { rotation_order, reflection_axes: axes.len(), center }
}
