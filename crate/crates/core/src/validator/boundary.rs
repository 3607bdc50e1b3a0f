use std::collections::HashMap;

use super::incidence::IncidenceMap;
use crate::assembler::Tiling;
use crate::geometry::{signed_area, EdgeLabel, Point};

/// A closed boundary curve of the covered region, interior on its left.
///
/// Outer boundaries have positive area, holes negative.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryCycle {
    pub keys: Vec<usize>,
    pub points: Vec<Point>,
    pub signed_area: f64,
}

impl BoundaryCycle {
    pub fn is_hole(&self) -> bool {
        self.signed_area < 0.0
    }

    pub fn mean(&self) -> Point {
        let s = self.points.iter().fold(Point::ORIGIN, |acc, &p| acc + p);
        s * (1.0 / self.points.len().max(1) as f64)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Cover {
    pub cycles: Vec<BoundaryCycle>,
    /// Sum of signed cycle areas: the area of the union of the tiles.
    pub union_area: f64,
    /// False when some boundary segment could not be linked into a cycle.
    pub closed: bool,
}

/// Splits tile edges at T-junctions and links the segments covered once into cycles.
pub fn boundary_cycles(t: &Tiling, inc: &IncidenceMap) -> Cover {
    let interior = inc.interior_points();
    let mut uses: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
    let mut order: Vec<(usize, usize)> = Vec::new();
    for (tile, iso) in t.tiles().iter().enumerate() {
        for e in EdgeLabel::ALL {
            let (a, b) = e.endpoints();
            let mut chain = vec![inc.tile_vertices[tile][a.index()]];
            if let Some(mid) = interior.get(&(tile, e)) {
                chain.extend(mid);
            }
            chain.push(inc.tile_vertices[tile][b.index()]);
            if iso.reflected {
                chain.reverse();
            }
            for w in chain.windows(2) {
                let key = (w[0].min(w[1]), w[0].max(w[1]));
                let entry = uses.entry(key).or_default();
                if entry.is_empty() {
                    order.push(key);
                }
                entry.push((w[0], w[1]));
            }
        }
    }
    let segments: Vec<(usize, usize)> = order
        .iter()
        .filter(|k| uses[k].len() == 1)
        .map(|k| uses[k][0])
        .filter(|(a, b)| a != b)
        .collect();

    let mut outgoing: HashMap<usize, Vec<usize>> = HashMap::new();
    for (i, &(a, _)) in segments.iter().enumerate() {
        outgoing.entry(a).or_default().push(i);
    }
    let pt = |k: usize| inc.vertices[k].point;
    let mut used = vec![false; segments.len()];
    let mut cycles = Vec::new();
    let mut closed = true;
    for start in 0..segments.len() {
        if used[start] {
            continue;
        }
        let mut keys = vec![segments[start].0];
        let mut cur = start;
        used[start] = true;
        loop {
            let (u, v) = segments[cur];
            let back = (pt(u) - pt(v)).angle_deg();
            let next = outgoing.get(&v).and_then(|cands| {
                cands
                    .iter()
                    .copied()
                    .map(|c| {
                        let ahead = (pt(segments[c].1) - pt(v)).angle_deg();
                        let mut cw = (back - ahead).rem_euclid(360.0);
                        if cw <= 0.0 {
                            cw = 360.0;
                        }
                        (cw, c)
                    })
                    .min_by(|x, y| x.0.total_cmp(&y.0))
                    .map(|(_, c)| c)
            });
            match next {
                Some(c) if c == start => break,
                Some(c) if !used[c] => {
                    used[c] = true;
                    keys.push(v);
                    cur = c;
                }
                _ => {
                    closed = false;
                    break;
                }
            }
        }
        let points: Vec<Point> = keys.iter().map(|&k| pt(k)).collect();
        let area = signed_area(&points);
        cycles.push(BoundaryCycle { keys, points, signed_area: area });
    }
    let union_area = cycles.iter().map(|c| c.signed_area).sum();
    Cover { cycles, union_area, closed }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assembler::{assemble_hole, assemble_rotational, build_strip, Mode};
    use crate::geometry::{spec_for_rotational, Isometry};
    use crate::validator::build_incidence;

    #[test]
    fn octa_unit_boundary_is_the_octagon() {
        let t = build_strip(&spec_for_rotational(4).unwrap(), 1).unwrap();
        let cover = boundary_cycles(&t, &build_incidence(&t));
        assert!(cover.closed);
        assert_eq!(cover.cycles.len(), 1);
        assert_eq!(cover.cycles[0].points.len(), 8);
        assert!((cover.union_area - 2.0 * t.pentagon_area()).abs() < 1e-12);
    }

    #[test]
    fn rotational_patch_is_a_disk() {
        let t = assemble_rotational(6, 2).unwrap();
        let cover = boundary_cycles(&t, &build_incidence(&t));
        assert!(cover.closed);
        assert_eq!(cover.cycles.len(), 1);
        let rel = (cover.union_area - t.len() as f64 * t.pentagon_area()).abs() / cover.union_area;
        assert!(rel < 1e-9);
    }

    #[test]
    fn hole_patch_has_one_hole() {
        let t = assemble_hole(9, 1).unwrap();
        let cover = boundary_cycles(&t, &build_incidence(&t));
        let holes: Vec<_> = cover.cycles.iter().filter(|c| c.is_hole()).collect();
        assert_eq!(holes.len(), 1);
        let m = 9.0f64;
        let expect = m / (4.0 * (std::f64::consts::PI / m).tan());
        assert!((holes[0].signed_area.abs() - expect).abs() < 1e-9);
    }

    #[test]
    fn disjoint_tiles_give_two_outer_cycles() {
        let mut t = Tiling::seed(spec_for_rotational(5).unwrap(), Mode::Freeform).unwrap();
        t.push(Isometry::translate(Point::new(20.0, 0.0)));
        let cover = boundary_cycles(&t, &build_incidence(&t));
        assert_eq!(cover.cycles.len(), 2);
        assert!(cover.cycles.iter().all(|c| !c.is_hole()));
    }
}
