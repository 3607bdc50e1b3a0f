use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::assembler::Tiling;
use crate::geometry::{segment_distance, EdgeLabel, PentagonGeom, Point, VertexLabel};

/// Points closer than this are the same vertex.
pub const MERGE_RADIUS: f64 = 1e-7;

/// All tile corners that coincide at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexStar {
    pub point: Point,
    pub corners: Vec<(usize, VertexLabel)>,
}

/// Vertex and edge incidence of a patch.
#[derive(Debug, Clone, Default)]
pub struct IncidenceMap {
    pub vertices: Vec<VertexStar>,
    /// Vertex key of each corner of each tile.
    pub tile_vertices: Vec<[usize; 5]>,
    /// Edges keyed by their sorted endpoint keys.
    pub edges: BTreeMap<(usize, usize), Vec<(usize, EdgeLabel)>>,
    /// Tile edges whose open segment passes through each vertex.
    pub hanging: Vec<Vec<(usize, EdgeLabel)>>,
    /// Edge keys shared by more than two tiles.
    pub planarity_violations: Vec<(usize, usize)>,
    pub geoms: Vec<PentagonGeom>,
}

impl IncidenceMap {
    pub fn edge_key(&self, tile: usize, edge: EdgeLabel) -> (usize, usize) {
        let (a, b) = edge.endpoints();
        let ka = self.tile_vertices[tile][a.index()];
        let kb = self.tile_vertices[tile][b.index()];
        (ka.min(kb), ka.max(kb))
    }

    /// Vertex keys strictly inside each tile edge that has any, ordered from its start to its end.
    pub fn interior_points(&self) -> HashMap<(usize, EdgeLabel), Vec<usize>> {
        let mut map: HashMap<(usize, EdgeLabel), Vec<(f64, usize)>> = HashMap::new();
        for (k, hs) in self.hanging.iter().enumerate() {
            for &(tile, edge) in hs {
                let (a, b) = self.geoms[tile].edge(edge);
                let s = segment_distance(self.vertices[k].point, a, b).1;
                map.entry((tile, edge)).or_default().push((s, k));
            }
        }
        map.into_iter()
            .map(|(key, mut on)| {
                on.sort_by(|x, y| x.0.total_cmp(&y.0));
                (key, on.into_iter().map(|(_, k)| k).collect())
            })
            .collect()
    }

    pub fn is_edge_to_edge(&self) -> bool {
        self.hanging.iter().all(Vec::is_empty)
    }
}

type Cell = (i64, i64);

fn cell(p: Point, size: f64) -> Cell {
    ((p.x / size).floor() as i64, (p.y / size).floor() as i64)
}

/// Merges coincident corners and records edges and T-junctions.
pub fn build_incidence(t: &Tiling) -> IncidenceMap {
    let geoms = t.geoms();
    let mut grid: HashMap<Cell, Vec<usize>> = HashMap::new();
    let mut vertices: Vec<VertexStar> = Vec::new();
    let mut tile_vertices = Vec::with_capacity(geoms.len());
    for (id, g) in geoms.iter().enumerate() {
        let mut keys = [0usize; 5];
        for v in VertexLabel::ALL {
            let p = g.vertex(v);
            let (cx, cy) = cell(p, MERGE_RADIUS);
            let mut found = None;
            'probe: for dx in -1..=1 {
                for dy in -1..=1 {
                    if let Some(list) = grid.get(&(cx + dx, cy + dy)) {
                        for &k in list {
                            if vertices[k].point.dist(p) <= MERGE_RADIUS {
                                found = Some(k);
                                break 'probe;
                            }
                        }
                    }
                }
            }
            let k = found.unwrap_or_else(|| {
                vertices.push(VertexStar { point: p, corners: Vec::new() });
                let k = vertices.len() - 1;
                grid.entry((cx, cy)).or_default().push(k);
                k
            });
            vertices[k].corners.push((id, v));
            keys[v.index()] = k;
        }
        tile_vertices.push(keys);
    }

    let mut edges: BTreeMap<(usize, usize), Vec<(usize, EdgeLabel)>> = BTreeMap::new();
    for (id, keys) in tile_vertices.iter().enumerate() {
        for e in EdgeLabel::ALL {
            let (a, b) = e.endpoints();
            let (ka, kb) = (keys[a.index()], keys[b.index()]);
            edges.entry((ka.min(kb), ka.max(kb))).or_default().push((id, e));
        }
    }
    let planarity_violations = edges.iter().filter(|(_, v)| v.len() > 2).map(|(k, _)| *k).collect();

    let hanging = find_hanging(&geoms, &vertices, &tile_vertices);
    IncidenceMap { vertices, tile_vertices, edges, hanging, planarity_violations, geoms }
}

fn find_hanging(
    geoms: &[PentagonGeom],
    vertices: &[VertexStar],
    tile_vertices: &[[usize; 5]],
) -> Vec<Vec<(usize, EdgeLabel)>> {
    let size = geoms
        .iter()
        .flat_map(|g| EdgeLabel::ALL.map(|e| g.edge_length(e)))
        .fold(1.0f64, f64::max);
    let mut grid: HashMap<Cell, Vec<(usize, EdgeLabel)>> = HashMap::new();
    for (id, g) in geoms.iter().enumerate() {
        for e in EdgeLabel::ALL {
            let (a, b) = g.edge(e);
            let r = MERGE_RADIUS;
            let lo = cell(Point::new(a.x.min(b.x) - r, a.y.min(b.y) - r), size);
            let hi = cell(Point::new(a.x.max(b.x) + r, a.y.max(b.y) + r), size);
            for x in lo.0..=hi.0 {
                for y in lo.1..=hi.1 {
                    grid.entry((x, y)).or_default().push((id, e));
                }
            }
        }
    }
    vertices
        .par_iter()
        .enumerate()
        .map(|(k, star)| {
            let mut out: Vec<(usize, EdgeLabel)> = Vec::new();
            if let Some(list) = grid.get(&cell(star.point, size)) {
                for &(id, e) in list {
                    let (a, b) = e.endpoints();
                    if tile_vertices[id][a.index()] == k || tile_vertices[id][b.index()] == k {
                        continue;
                    }
                    let (p, q) = geoms[id].edge(e);
                    let (d, s) = segment_distance(star.point, p, q);
                    if d < MERGE_RADIUS && s > 0.0 && s < 1.0 {
                        out.push((id, e));
                    }
                }
            }
            out.sort();
            out.dedup();
            out
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assembler::{build_strip, Mode};
    use crate::geometry::spec_for_rotational;

    #[test]
    fn octa_unit_incidence() {
        let t = build_strip(&spec_for_rotational(5).unwrap(), 1).unwrap();
        let inc = build_incidence(&t);
        assert_eq!(inc.vertices.len(), 8);
        let counts: Vec<usize> = inc.edges.values().map(Vec::len).collect();
        assert_eq!(counts.iter().filter(|&&c| c == 1).count(), 8);
        assert_eq!(counts.iter().filter(|&&c| c == 2).count(), 1);
        let shared = inc.edges.values().find(|v| v.len() == 2).unwrap();
        assert!(shared.iter().all(|&(_, e)| e == EdgeLabel::DE));
        assert!(inc.is_edge_to_edge());
    }

    #[test]
    fn every_tile_has_five_records() {
        let t = build_strip(&spec_for_rotational(7).unwrap(), 4).unwrap();
        let inc = build_incidence(&t);
        let corners: usize = inc.vertices.iter().map(|s| s.corners.len()).sum();
        assert_eq!(corners, 5 * t.len());
        let edges: usize = inc.edges.values().map(Vec::len).sum();
        assert_eq!(edges, 5 * t.len());
        for (a, b) in inc.edges.keys() {
            assert!(*a < inc.vertices.len() && *b < inc.vertices.len());
        }
    }

    #[test]
    fn empty_tiling() {
        let t = Tiling::new(spec_for_rotational(5).unwrap(), Mode::Freeform).unwrap();
        let inc = build_incidence(&t);
        assert!(inc.vertices.is_empty() && inc.edges.is_empty());
    }

    #[test]
    fn near_points_merge_across_cells() {
        let spec = spec_for_rotational(5).unwrap();
        let mut t = Tiling::seed(spec, Mode::Freeform).unwrap();
        let shift = crate::geometry::Isometry::translate(Point::new(3e-8, -4e-8));
        t.push(shift);
        let inc = build_incidence(&t);
        assert_eq!(inc.vertices.len(), 5);
        assert_eq!(inc.planarity_violations.len(), 0);
    }
}
