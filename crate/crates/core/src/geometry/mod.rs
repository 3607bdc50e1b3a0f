//! Exact pentagon angle sets, their coordinates, the Octa-unit and plane isometries.

mod angle;
mod isometry;
mod octa;
mod pentagon;
mod point;

pub use angle::ExactAngle;
pub use isometry::Isometry;
pub use octa::{mirror_isometry, reflect_to_octa, OctaLattice, OctaUnit};
pub use pentagon::{
    angles_from_b, realize, spec_for_hole, spec_for_rotational, EdgeLabel, PentagonGeom,
    PentagonSpec, VertexLabel,
};
pub(crate) use pentagon::bbox;
pub use point::{polygon_centroid, segment_distance, signed_area, Point};
