use super::angle::ExactAngle;
use super::isometry::Isometry;
use super::pentagon::{realize, EdgeLabel, PentagonGeom, PentagonSpec, VertexLabel};
use super::point::Point;
use crate::error::Result;

/// A pentagon and its mirror image across edge `DE`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OctaUnit {
    pub base: PentagonGeom,
    pub mirror: PentagonGeom,
}

impl OctaUnit {
    /// Boundary in counterclockwise order: `A, B, C, D, C', B', A', E`.
    pub fn boundary(&self) -> [Point; 8] {
        let b = |v| self.base.vertex(v);
        let m = |v| self.mirror.vertex(v);
        use VertexLabel::*;
        [b(A), b(B), b(C), b(D), m(C), m(B), m(A), b(E)]
    }

    /// Interior angles matching [`OctaUnit::boundary`].
    pub fn boundary_angles(spec: &PentagonSpec) -> [ExactAngle; 8] {
        use VertexLabel::*;
        let a = |v| spec.angle(v);
        let twice = |v: VertexLabel| spec.angle(v) + spec.angle(v);
        [a(A), a(B), a(C), twice(D), a(C), a(B), a(A), twice(E)]
    }
}

/// Mirrors `geom` across the line through its `D` and `E`.
pub fn reflect_to_octa(geom: &PentagonGeom) -> OctaUnit {
    let (d, e) = geom.edge(EdgeLabel::DE);
    let axis = e - d;
    let len2 = axis.dot(axis);
    let mirror = geom.vertices.map(|p| {
        let foot = d + axis * ((p - d).dot(axis) / len2);
        foot * 2.0 - p
    });
    OctaUnit { base: *geom, mirror: PentagonGeom { vertices: mirror } }
}

/// Isometry taking the realized pentagon to its mirror across `DE`.
pub fn mirror_isometry(spec: &PentagonSpec) -> Result<Isometry> {
    let g = realize(spec)?;
    Ok(Isometry::reflect_across(spec.edge_direction(EdgeLabel::DE), g.vertex(VertexLabel::D)))
}

/// Translation lattice of the Octa-unit tiling.
///
/// `v1` and `v2` stack neighbouring axis chains, `v3 = v2 - v1` runs along the `DE` axes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OctaLattice {
    pub v1: Point,
    pub v2: Point,
    pub v3: Point,
}

impl OctaLattice {
    pub fn new(unit: &OctaUnit) -> Self {
        use VertexLabel::*;
        let v1 = unit.base.vertex(A) - unit.mirror.vertex(B);
        let v2 = unit.base.vertex(B) - unit.mirror.vertex(A);
        OctaLattice { v1, v2, v3: v2 - v1 }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::pentagon::{angles_from_b, spec_for_rotational};
    use crate::geometry::point::signed_area;
    use proptest::prelude::*;

    fn unit(spec: &PentagonSpec) -> OctaUnit {
        reflect_to_octa(&realize(spec).unwrap())
    }

    fn interior_angles(pts: &[Point; 8]) -> [f64; 8] {
        let mut out = [0.0; 8];
        for i in 0..8 {
            let p = pts[i];
            let next = pts[(i + 1) % 8] - p;
            let prev = pts[(i + 7) % 8] - p;
            out[i] = next.cross(prev).atan2(next.dot(prev)).to_degrees().rem_euclid(360.0);
        }
        out
    }

    #[test]
    fn equilateral_octagon_at_b60() {
        let u = unit(&angles_from_b(ExactAngle::degrees(60)).unwrap());
        let b = u.boundary();
        for i in 0..8 {
            assert!((b[i].dist(b[(i + 1) % 8]) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn reflex_angle_at_b90() {
        let s = spec_for_rotational(4).unwrap();
        let angles = interior_angles(&unit(&s).boundary());
        assert!((angles[7] - 210.0).abs() < 1e-9);
        assert_eq!(OctaUnit::boundary_angles(&s)[7], ExactAngle::degrees(210));
    }

    #[test]
    fn mirror_isometry_matches_reflection() {
        let s = spec_for_rotational(7).unwrap();
        let g = realize(&s).unwrap();
        let by_iso = mirror_isometry(&s).unwrap().apply_geom(&g);
        let by_float = reflect_to_octa(&g).mirror;
        for i in 0..5 {
            assert!(by_iso.vertices[i].dist(by_float.vertices[i]) < 1e-12);
        }
        assert_eq!(mirror_isometry(&s).unwrap().rotation(), ExactAngle::STRAIGHT - s.b());
    }

    #[test]
    fn lattice_third_vector_is_c_minus_a() {
        let s = spec_for_rotational(5).unwrap();
        let u = unit(&s);
        let l = OctaLattice::new(&u);
        let ca = u.base.vertex(VertexLabel::C) - u.base.vertex(VertexLabel::A);
        assert!(l.v3.dist(ca) < 1e-12);
        assert!((l.v3.norm() - s.e()).abs() < 1e-12);
        assert!((l.v1.norm() - l.v2.norm()).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn octa_invariants(num in 1i64..64_800, den in 1i64..=360) {
            let b = ExactAngle::new(num, den).unwrap();
            prop_assume!(b < ExactAngle::STRAIGHT);
            let s = angles_from_b(b).unwrap();
            let u = unit(&s);
            let pts = u.boundary();
            for i in 0..8 {
                prop_assert!((pts[i].dist(pts[(i + 1) % 8]) - 1.0).abs() < 1e-12);
            }
            prop_assert!(signed_area(&pts) > 0.0);
            let measured = interior_angles(&pts);
            let exact = OctaUnit::boundary_angles(&s);
            let reflex = measured.iter().filter(|&&a| a > 180.0).count();
            prop_assert_eq!(reflex, 1);
            prop_assert!(measured[7] > 180.0 && measured[3] < 180.0);
            for i in 0..8 {
                prop_assert!((measured[i] - exact[i].to_f64()).abs() < 1e-9);
            }
            // Base and mirror share exactly edge DE.
            let shared = (0..5).filter(|&i| (0..5).any(|j| u.base.vertices[i].dist(u.mirror.vertices[j]) < 1e-12)).count();
            prop_assert_eq!(shared, 2);
        }
    }
}
