use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{
    realize, EdgeLabel, ExactAngle, Isometry, PentagonGeom, PentagonSpec, Point,
};

/// What a patch claims to be; drives the validator's expectations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Mode {
    Rotational { n: u32 },
    Hole { m: u32 },
    Rows { rows: u32, rows_len: u32 },
    Spiral { m: u32 },
    Freeform,
}

/// A list of congruent pentagons, each placed by an isometry of the realized prototile.
///
/// Tile ids are positions in [`Tiling::tiles`].
#[derive(Debug, Clone, PartialEq)]
pub struct Tiling {
    spec: PentagonSpec,
    base: PentagonGeom,
    mode: Mode,
    tiles: Vec<Isometry>,
}

/// Attach a new pentagon to edge `host_edge` of tile `host_tile` along its own `guest_edge`.
///
/// `guest_reflected` is relative to the host: when false the two tiles have the same handedness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GlueStep {
    pub host_tile: usize,
    pub host_edge: EdgeLabel,
    pub guest_edge: EdgeLabel,
    pub guest_reflected: bool,
}

const EDGE_MATCH_TOL: f64 = 1e-7;

impl Tiling {
    pub fn new(spec: PentagonSpec, mode: Mode) -> Result<Self> {
        let base = realize(&spec)?;
        Ok(Tiling { spec, base, mode, tiles: Vec::new() })
    }

    pub fn with_tiles(spec: PentagonSpec, mode: Mode, tiles: Vec<Isometry>) -> Result<Self> {
        let mut t = Self::new(spec, mode)?;
        t.tiles = tiles;
        Ok(t)
    }

    /// A one-tile patch with the prototile at the identity.
    pub fn seed(spec: PentagonSpec, mode: Mode) -> Result<Self> {
        Self::with_tiles(spec, mode, vec![Isometry::IDENTITY])
    }

    pub fn spec(&self) -> &PentagonSpec {
        &self.spec
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn set_mode(&mut self, mode: Mode) {
        self.mode = mode;
    }

    pub fn tiles(&self) -> &[Isometry] {
        &self.tiles
    }

    pub fn tiles_mut(&mut self) -> &mut Vec<Isometry> {
        &mut self.tiles
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn push(&mut self, placement: Isometry) -> usize {
        self.tiles.push(placement);
        self.tiles.len() - 1
    }

    /// The prototile in its own frame.
    pub fn prototile(&self) -> &PentagonGeom {
        &self.base
    }

    pub fn geom(&self, id: usize) -> Result<PentagonGeom> {
        let t = self.tiles.get(id).ok_or(Error::UnknownTile(id))?;
        Ok(t.apply_geom(&self.base))
    }

    pub fn geoms(&self) -> Vec<PentagonGeom> {
        self.tiles.iter().map(|t| t.apply_geom(&self.base)).collect()
    }

    pub fn pentagon_area(&self) -> f64 {
        self.base.area()
    }

    /// Applies `iso` to every placement.
    pub fn transformed(&self, iso: &Isometry) -> Tiling {
        let mut out = self.clone();
        for t in &mut out.tiles {
            *t = iso.compose(t);
        }
        out
    }

    /// Every placement rotation must be a multiple of this angle; `None` for freeform patches.
    pub fn rotation_unit(&self) -> Option<ExactAngle> {
        if self.mode == Mode::Freeform {
            return None;
        }
        let third = self.spec.b().checked_scale(1, 3).ok()?;
        third.gcd(ExactAngle::STRAIGHT).ok()
    }

    /// World direction of an edge of a placed tile, traversed in label order.
    pub fn edge_direction(&self, id: usize, edge: EdgeLabel) -> Result<ExactAngle> {
        let t = self.tiles.get(id).ok_or(Error::UnknownTile(id))?;
        Ok(t.map_direction(self.spec.edge_direction(edge)))
    }

    /// Ids of other tiles having an edge with the same endpoints as `edge` of tile `id`.
    pub fn edge_neighbours(&self, id: usize, edge: EdgeLabel) -> Result<Vec<usize>> {
        let (p, q) = self.geom(id)?.edge(edge);
        let mut out = Vec::new();
        for (other, g) in self.geoms().iter().enumerate() {
            if other == id {
                continue;
            }
            let hit = EdgeLabel::ALL.iter().any(|&e| {
                let (a, b) = g.edge(e);
                (a.dist(p) < EDGE_MATCH_TOL && b.dist(q) < EDGE_MATCH_TOL)
                    || (a.dist(q) < EDGE_MATCH_TOL && b.dist(p) < EDGE_MATCH_TOL)
            });
            if hit {
                out.push(other);
            }
        }
        Ok(out)
    }

    /// Placement that realizes `step`, without checking occupancy.
    pub fn glue_placement(&self, step: GlueStep) -> Result<Isometry> {
        let host = *self.tiles.get(step.host_tile).ok_or(Error::UnknownTile(step.host_tile))?;
        if !self.spec.edges_match(step.host_edge, step.guest_edge) {
            return Err(Error::LengthMismatch { host: step.host_edge, guest: step.guest_edge });
        }
        let (p, q) = host.apply_geom(&self.base).edge(step.host_edge);
        let host_dir = host.map_direction(self.spec.edge_direction(step.host_edge));
        let guest_dir = self.spec.edge_direction(step.guest_edge);
        let reflected = host.reflected != step.guest_reflected;
        // Same handedness: the shared edge is traversed in opposite directions.
        let (target_dir, start) = if step.guest_reflected {
            (host_dir, p)
        } else {
            (host_dir + ExactAngle::STRAIGHT, q)
        };
        let rotation = if reflected { target_dir + guest_dir } else { target_dir - guest_dir };
        let linear = Isometry::new(rotation, Point::ORIGIN, reflected);
        let x = self.base.edge(step.guest_edge).0;
        Ok(Isometry::new(rotation, start - linear.apply(x), reflected))
    }

    /// Appends the tile described by `step` and returns its id.
    pub fn glue_in_place(&mut self, step: GlueStep) -> Result<usize> {
        let placement = self.glue_placement(step)?;
        if !self.edge_neighbours(step.host_tile, step.host_edge)?.is_empty() {
            return Err(Error::OccupiedEdge { tile: step.host_tile, edge: step.host_edge });
        }
        Ok(self.push(placement))
    }
}

/// Pure form of [`Tiling::glue_in_place`].
pub fn glue(t: &Tiling, step: GlueStep) -> Result<Tiling> {
    let mut out = t.clone();
    out.glue_in_place(step)?;
    Ok(out)
}
