use serde::{Deserialize, Serialize};

use super::tiling::{Mode, Tiling};
use crate::error::{Error, Result};
use crate::geometry::{
    mirror_isometry, realize, reflect_to_octa, spec_for_hole, spec_for_rotational, ExactAngle,
    Isometry, OctaLattice, PentagonSpec, Point, VertexLabel,
};

/// Size of a wedge: row `j` (counting from 1) holds `j` Octa-units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeParams {
    depth: u32,
}

impl WedgeParams {
    pub fn new(depth: u32) -> Result<Self> {
        if depth == 0 {
            return Err(Error::Domain("wedge depth must be at least 1".into()));
        }
        Ok(WedgeParams { depth })
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// Pentagons in one wedge, `depth·(depth+1)`.
    pub fn tile_count(&self) -> usize {
        let k = self.depth as usize;
        k * (k + 1)
    }
}

/// Placements of the Octa-unit construction in the prototile's own frame.
#[derive(Debug, Clone, Copy)]
struct Frame {
    mirror: Isometry,
    lattice: OctaLattice,
    seam: Isometry,
}

impl Frame {
    fn new(spec: &PentagonSpec) -> Result<Self> {
        let base = realize(spec)?;
        let unit = reflect_to_octa(&base);
        let mirror = mirror_isometry(spec)?;
        let turn = spec.b().checked_scale(1, 3)?;
        let c_mirror = mirror.apply(base.vertex(VertexLabel::C));
        let e_turned = base.vertex(VertexLabel::E).rotate(turn.cos_sin());
        let seam = Isometry::new(turn, c_mirror - e_turned, false);
        Ok(Frame { mirror, lattice: OctaLattice::new(&unit), seam })
    }

    fn octa_at(&self, offset: Point, out: &mut Vec<Isometry>) {
        let t = Isometry::translate(offset);
        out.push(t);
        out.push(t.compose(&self.mirror));
    }

    /// Octa-units at `i·v1 + j·v2` for `i + j < depth`, by row `i + j`, then by `i`.
    fn wedge(&self, p: WedgeParams) -> Vec<Isometry> {
        let (v1, v2) = (self.lattice.v1, self.lattice.v2);
        let mut out = Vec::with_capacity(p.tile_count());
        for row in 0..p.depth {
            for i in 0..=row {
                let j = row - i;
                self.octa_at(v1 * i as f64 + v2 * j as f64, &mut out);
            }
        }
        out
    }

    /// `len` Octa-units along the shared `DE` axis.
    fn chain(&self, len: u32) -> Vec<Isometry> {
        let mut out = Vec::with_capacity(2 * len as usize);
        for j in 0..len {
            self.octa_at(self.lattice.v3 * j as f64, &mut out);
        }
        out
    }

    /// Wedge copies `F_w · W` with `F_0 = id`, `F_{w+1} = F_w · T(shift_w · v2) · seam`.
    ///
    /// Returns the placements and the frames `F_0..=F_count`.
    fn fan(&self, p: WedgeParams, count: usize, shifts: &[u32]) -> (Vec<Isometry>, Vec<Isometry>) {
        let wedge = self.wedge(p);
        let mut frames = vec![Isometry::IDENTITY];
        let mut tiles = Vec::with_capacity(count * wedge.len());
        for w in 0..count {
            let f = frames[w];
            tiles.extend(wedge.iter().map(|t| f.compose(t)));
            let shift = Isometry::translate(self.lattice.v2 * shifts[w % shifts.len()] as f64);
            frames.push(f.compose(&shift).compose(&self.seam));
        }
        (tiles, frames)
    }
}

fn centered(spec: PentagonSpec, mode: Mode, tiles: Vec<Isometry>, center: Point) -> Result<Tiling> {
    let t = Tiling::with_tiles(spec, mode, tiles)?;
    Ok(t.transformed(&Isometry::translate(-center)))
}

fn fixed_point(f: &Isometry) -> Result<Point> {
    f.fixed_point().ok_or_else(|| Error::Internal("wedge fan has no rotation center".into()))
}

/// A straight axis chain of `count` Octa-units; equals a single-row [`build_row_tiling`].
pub fn build_strip(spec: &PentagonSpec, count: u32) -> Result<Tiling> {
    build_row_tiling(spec, &[false], count)
}

/// Three wedges at relative rotations 0, `mode_angle` and twice `mode_angle`.
///
/// `mode_angle` must be a third of `B` (120°/n for rotational specs, 360°/m for hole specs).
pub fn build_triunit(spec: &PentagonSpec, mode_angle: ExactAngle, p: WedgeParams) -> Result<Tiling> {
    let third = spec.b().checked_scale(1, 3)?;
    if mode_angle != third {
        return Err(Error::Domain(format!("mode angle {mode_angle} must equal B/3 = {third}")));
    }
    let (tiles, _) = Frame::new(spec)?.fan(p, 3, &[0]);
    Tiling::with_tiles(*spec, Mode::Freeform, tiles)
}

/// n-fold rotational patch: `3n` wedges around a center where `n` angles `B` meet.
///
/// The center is at the origin.
pub fn assemble_rotational(n: u32, depth: u32) -> Result<Tiling> {
    let spec = spec_for_rotational(n)?;
    let p = WedgeParams::new(depth)?;
    let frame = Frame::new(&spec)?;
    let (tiles, frames) = frame.fan(p, 3 * n as usize, &[0, 0, 1]);
    let center = fixed_point(&frames[3])?;
    centered(spec, Mode::Rotational { n }, tiles, center)
}

/// Patch around a regular m-gon hole of side 1: `m` wedges, one per hole edge.
///
/// The hole center is at the origin.
pub fn assemble_hole(m: u32, depth: u32) -> Result<Tiling> {
    let spec = spec_for_hole(m)?;
    let p = WedgeParams::new(depth)?;
    let frame = Frame::new(&spec)?;
    let (tiles, _) = frame.fan(p, m as usize, &[0]);
    let center = fixed_point(&frame.seam)?;
    centered(spec, Mode::Hole { m }, tiles, center)
}

/// Wedge shift pattern, repeated twice around the center, for the spiral specs.
pub fn spiral_shifts(m: u32) -> Option<&'static [u32]> {
    match m {
        8 => Some(&[0, 0, 0, 1]),
        10 => Some(&[0, 0, 1, 0, 1]),
        14 => Some(&[0, 0, 0, 1, 0, 0, 1]),
        _ => None,
    }
}

/// Two-fold spiral for `m` in {8, 10, 14}; `belts` is the wedge depth.
///
/// The rotation center is at the origin.
pub fn spiral_two_fold(m: u32, belts: u32) -> Result<Tiling> {
    let shifts = spiral_shifts(m)
        .ok_or_else(|| Error::Domain(format!("spiral needs m in {{8, 10, 14}}, got {m}")))?;
    let spec = spec_for_hole(m)?;
    let p = WedgeParams::new(belts)?;
    let frame = Frame::new(&spec)?;
    let (tiles, frames) = frame.fan(p, m as usize, shifts);
    let center = fixed_point(&frames[m as usize / 2])?;
    centered(spec, Mode::Spiral { m }, tiles, center)
}

/// Parallel axis chains of `rows_len` Octa-units each; row `i` is turned half-way round when `flips[i]` is set.
pub fn build_row_tiling(spec: &PentagonSpec, flips: &[bool], rows_len: u32) -> Result<Tiling> {
    if flips.is_empty() {
        return Err(Error::Domain("at least one row is required".into()));
    }
    if rows_len == 0 {
        return Err(Error::Domain("rows must hold at least one Octa-unit".into()));
    }
    let base = realize(spec)?;
    let frame = Frame::new(spec)?;
    let mirror = frame.mirror;
    let v1 = frame.lattice.v1;
    let vb = |v| base.vertex(v);
    let vm = |v| mirror.apply(base.vertex(v));
    // Offsets between consecutive rows.
    let normal_to_flipped = vb(VertexLabel::B) + vb(VertexLabel::C);
    let flipped_to_normal = -(vm(VertexLabel::C) + vm(VertexLabel::B));
    let chain = frame.chain(rows_len);
    let half_turn = Isometry::rotate(ExactAngle::STRAIGHT);
    let mut tiles = Vec::with_capacity(chain.len() * flips.len());
    let mut offset = Point::ORIGIN;
    for (i, &flip) in flips.iter().enumerate() {
        if i > 0 {
            offset = offset
                + match (flips[i - 1], flip) {
                    (false, true) => normal_to_flipped,
                    (true, false) => flipped_to_normal,
                    _ => v1,
                };
        }
        let place = if flip {
            Isometry::translate(offset).compose(&half_turn)
        } else {
            Isometry::translate(offset)
        };
        tiles.extend(chain.iter().map(|t| place.compose(t)));
    }
    let mode = Mode::Rows { rows: flips.len() as u32, rows_len };
    Tiling::with_tiles(*spec, mode, tiles)
}

/// Strips bounded by consecutive `DE` axes; strip `i` slides half an `e` along the axis when `slides[i]` is set.
///
/// Slid strips meet their neighbours at flat vertices where `D + E = 180°`.
pub fn build_type1_variation(spec: &PentagonSpec, slides: &[bool], rows_len: u32) -> Result<Tiling> {
    if slides.is_empty() {
        return Err(Error::Domain("at least one strip is required".into()));
    }
    if rows_len == 0 {
        return Err(Error::Domain("strips must hold at least one pentagon pair".into()));
    }
    let frame = Frame::new(spec)?;
    let l = frame.lattice;
    let mut tiles = Vec::with_capacity(2 * rows_len as usize * slides.len());
    for (i, &slide) in slides.iter().enumerate() {
        let shift = if slide { l.v3 * 0.5 } else { Point::ORIGIN };
        for j in 0..rows_len {
            let along = l.v3 * j as f64 + shift;
            tiles.push(Isometry::translate(l.v1 * i as f64 + along));
            let upper = Isometry::translate(l.v1 * (i + 1) as f64 + along);
            tiles.push(upper.compose(&frame.mirror));
        }
    }
    let mode = Mode::Rows { rows: slides.len() as u32, rows_len };
    Tiling::with_tiles(*spec, mode, tiles)
}
