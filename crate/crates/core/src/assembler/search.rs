use super::tiling::{GlueStep, Tiling};
use crate::error::{Error, Result};
use crate::geometry::{segment_distance, EdgeLabel, ExactAngle, PentagonGeom, Point, VertexLabel};
use crate::validator::convex_intersection_area;

const POINT_TOL: f64 = 1e-7;
const AREA_TOL: f64 = 1e-9;
const MAX_SCALED_FULL: i64 = 1 << 22;

/// Which remainders `0..=360°` can still be filled by the prototile's angles.
struct Completions {
    scale: i64,
    reachable: Option<Vec<bool>>,
}

impl Completions {
    fn new(angles: [ExactAngle; 5]) -> Self {
        let scale = angles.iter().fold(1i64, |acc, a| lcm(acc, a.den()));
        let full = 360i64.saturating_mul(scale);
        if full > MAX_SCALED_FULL || angles.iter().any(|a| a.num() <= 0) {
            return Completions { scale, reachable: None };
        }
        let steps: Vec<usize> = angles.iter().map(|a| (a.num() * (scale / a.den())) as usize).collect();
        let mut reachable = vec![false; full as usize + 1];
        reachable[0] = true;
        for v in 1..reachable.len() {
            reachable[v] = steps.iter().any(|&s| s <= v && reachable[v - s]);
        }
        Completions { scale, reachable: Some(reachable) }
    }

    /// `sum` can be topped up to exactly `target` with further angles.
    fn completable(&self, sum: ExactAngle, target: ExactAngle) -> bool {
        if sum > target {
            return false;
        }
        let rest = target - sum;
        match &self.reachable {
            None => true,
            Some(r) => {
                if rest.den() != 1 && self.scale % rest.den() != 0 {
                    return false;
                }
                let v = rest.num() * (self.scale / rest.den());
                r.get(v as usize).copied().unwrap_or(false)
            }
        }
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    (a / x).saturating_mul(b)
}

fn on_open_edge(p: Point, g: &PentagonGeom) -> bool {
    EdgeLabel::ALL.iter().any(|&e| {
        let (a, b) = g.edge(e);
        let (d, _) = segment_distance(p, a, b);
        d < POINT_TOL && a.dist(p) >= POINT_TOL && b.dist(p) >= POINT_TOL
    })
}

/// Angles already present at `p` among `geoms`.
fn angle_sum_at(p: Point, t: &Tiling, geoms: &[PentagonGeom]) -> ExactAngle {
    let mut sum = ExactAngle::ZERO;
    for g in geoms {
        for v in VertexLabel::ALL {
            if g.vertex(v).dist(p) < POINT_TOL {
                sum = sum + t.spec().angle(v);
            }
        }
    }
    sum
}

fn admissible(t: &Tiling, geoms: &[PentagonGeom], new: &PentagonGeom, done: &Completions) -> bool {
    let (lo, hi) = new.bbox();
    for g in geoms {
        let (glo, ghi) = g.bbox();
        let apart = glo.x > hi.x || ghi.x < lo.x || glo.y > hi.y || ghi.y < lo.y;
        if !apart && convex_intersection_area(&g.vertices, &new.vertices) > AREA_TOL {
            return false;
        }
    }
    let mut all = geoms.to_vec();
    all.push(*new);
    let straight = ExactAngle::STRAIGHT;
    for v in VertexLabel::ALL {
        let p = new.vertex(v);
        let sum = angle_sum_at(p, t, &all);
        let target = if geoms.iter().any(|g| on_open_edge(p, g)) { straight } else { ExactAngle::FULL };
        if !done.completable(sum, target) {
            return false;
        }
    }
    for g in geoms {
        for p in g.vertices {
            if on_open_edge(p, new) && !done.completable(angle_sum_at(p, t, &all), straight) {
                return false;
            }
        }
    }
    true
}

/// Every glue step at a free edge that keeps the patch overlap-free and leaves each
/// touched vertex completable, ordered by guest edge and then by reflection flag.
pub fn extend_search(
    t: &Tiling,
    host_tile: usize,
    host_edge: EdgeLabel,
    max_solutions: usize,
) -> Result<Vec<GlueStep>> {
    if !t.edge_neighbours(host_tile, host_edge)?.is_empty() {
        return Err(Error::NotFrontier { tile: host_tile, edge: host_edge });
    }
    let geoms = t.geoms();
    let done = Completions::new(t.spec().angles());
    let mut out = Vec::new();
    for guest_edge in EdgeLabel::ALL {
        for guest_reflected in [false, true] {
            if out.len() >= max_solutions {
                return Ok(out);
            }
            let step = GlueStep { host_tile, host_edge, guest_edge, guest_reflected };
            let placement = match t.glue_placement(step) {
                Ok(p) => p,
                Err(Error::LengthMismatch { .. }) => continue,
                Err(e) => return Err(e),
            };
            let new = placement.apply_geom(t.prototile());
            if admissible(t, &geoms, &new, &done) {
                out.push(step);
            }
        }
    }
    Ok(out)
}
