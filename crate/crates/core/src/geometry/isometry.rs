use serde::{Deserialize, Serialize};

use super::angle::ExactAngle;
use super::pentagon::PentagonGeom;
use super::point::Point;

/// A plane isometry `p ↦ R(rotation) · F(p) + translation`, where `F` is the
/// reflection `(x, y) ↦ (x, -y)` when `reflected` is set and the identity otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Isometry {
    rotation: ExactAngle,
    pub translation: Point,
    pub reflected: bool,
}

impl Default for Isometry {
    fn default() -> Self {
        Self::IDENTITY
    }
}

impl Isometry {
    pub const IDENTITY: Isometry = Isometry {
        rotation: ExactAngle::ZERO,
        translation: Point::ORIGIN,
        reflected: false,
    };

    pub fn new(rotation: ExactAngle, translation: Point, reflected: bool) -> Self {
        Isometry { rotation: rotation.normalized(), translation, reflected }
    }

    pub fn translate(t: Point) -> Self {
        Isometry { translation: t, ..Self::IDENTITY }
    }

    pub fn rotate(angle: ExactAngle) -> Self {
        Self::new(angle, Point::ORIGIN, false)
    }

    /// Rotation by `angle` about `center`.
    pub fn rotate_about(angle: ExactAngle, center: Point) -> Self {
        let t = center - center.rotate(angle.cos_sin());
        Self::new(angle, t, false)
    }

    /// Reflection across the line through `point` with direction `angle`.
    pub fn reflect_across(angle: ExactAngle, point: Point) -> Self {
        let twice = angle.checked_mul_int(2).expect("exact angle overflow");
        let t = point - point.conj().rotate(twice.cos_sin());
        Self::new(twice, t, true)
    }

    /// Rotation in `[0°, 360°)`.
    pub fn rotation(&self) -> ExactAngle {
        self.rotation
    }

    pub fn apply_linear(&self, p: Point) -> Point {
        let q = if self.reflected { p.conj() } else { p };
        q.rotate(self.rotation.cos_sin())
    }

    pub fn apply(&self, p: Point) -> Point {
        self.apply_linear(p) + self.translation
    }

    pub fn apply_geom(&self, g: &PentagonGeom) -> PentagonGeom {
        PentagonGeom { vertices: g.vertices.map(|p| self.apply(p)) }
    }

    /// Image of a direction angle.
    pub fn map_direction(&self, dir: ExactAngle) -> ExactAngle {
        if self.reflected {
            (self.rotation - dir).normalized()
        } else {
            (self.rotation + dir).normalized()
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        let rotation = if self.reflected {
            self.rotation - other.rotation
        } else {
            self.rotation + other.rotation
        };
        Isometry::new(
            rotation,
            self.apply_linear(other.translation) + self.translation,
            self.reflected != other.reflected,
        )
    }

    pub fn inverse(&self) -> Isometry {
        if self.reflected {
            let t = -(self.translation.conj().rotate(self.rotation.cos_sin()));
            Isometry::new(self.rotation, t, true)
        } else {
            let back = -self.rotation;
            Isometry::new(back, -(self.translation.rotate(back.cos_sin())), false)
        }
    }

    /// Fixed point of a proper isometry with non-zero rotation.
    pub fn fixed_point(&self) -> Option<Point> {
        if self.reflected || self.rotation.is_zero() {
            return None;
        }
        // Solve (I - R) c = t.
        let (c, s) = self.rotation.cos_sin();
        let (a, b) = (1.0 - c, s);
        let det = a * a + b * b;
        let t = self.translation;
        Some(Point::new((a * t.x - b * t.y) / det, (b * t.x + a * t.y) / det))
    }

    /// Same rotation and reflection, translation within `tol` per coordinate.
    pub fn approx_eq(&self, other: &Isometry, tol: f64) -> bool {
        self.rotation == other.rotation
            && self.reflected == other.reflected
            && (self.translation.x - other.translation.x).abs() <= tol
            && (self.translation.y - other.translation.y).abs() <= tol
    }
}
