use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::assembler::{Mode, Tiling};
use crate::error::{Error, Result};
use crate::geometry::{angles_from_b, ExactAngle, Isometry, Point, VertexLabel};

pub const FORMAT_VERSION: &str = "1";

/// On-disk form of a [`Tiling`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TilingDocument {
    pub format_version: String,
    pub spec: SpecDoc,
    pub mode: Mode,
    pub placements: Vec<PlacementDoc>,
}

/// The free angle `B`, plus the derived angles and `e` for readers; derived values are checked on load.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDoc {
    #[serde(rename = "B_num")]
    pub b_num: i64,
    #[serde(rename = "B_den")]
    pub b_den: i64,
    #[serde(rename = "A", default, skip_serializing_if = "Option::is_none")]
    pub a: Option<ExactAngle>,
    #[serde(rename = "C", default, skip_serializing_if = "Option::is_none")]
    pub c: Option<ExactAngle>,
    #[serde(rename = "D", default, skip_serializing_if = "Option::is_none")]
    pub d: Option<ExactAngle>,
    #[serde(rename = "E", default, skip_serializing_if = "Option::is_none")]
    pub e_angle: Option<ExactAngle>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlacementDoc {
    pub rot_num: i64,
    pub rot_den: i64,
    pub tx: f64,
    pub ty: f64,
    pub reflected: bool,
}

impl TilingDocument {
    pub fn from_tiling(t: &Tiling) -> Self {
        let s = t.spec();
        let b = s.b();
        let spec = SpecDoc {
            b_num: b.num(),
            b_den: b.den(),
            a: Some(s.angle(VertexLabel::A)),
            c: Some(s.angle(VertexLabel::C)),
            d: Some(s.angle(VertexLabel::D)),
            e_angle: Some(s.angle(VertexLabel::E)),
            e: Some(s.e()),
        };
        let placements = t
            .tiles()
            .iter()
            .map(|p| PlacementDoc {
                rot_num: p.rotation().num(),
                rot_den: p.rotation().den(),
                tx: p.translation.x,
                ty: p.translation.y,
                reflected: p.reflected,
            })
            .collect();
        TilingDocument { format_version: FORMAT_VERSION.into(), spec, mode: t.mode(), placements }
    }

    pub fn to_tiling(&self) -> Result<Tiling> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::Parse(format!("unsupported format_version {:?}", self.format_version)));
        }
        let b = ExactAngle::new(self.spec.b_num, self.spec.b_den)?;
        let spec = angles_from_b(b)?;
        let derived = [
            ("A", self.spec.a, VertexLabel::A),
            ("C", self.spec.c, VertexLabel::C),
            ("D", self.spec.d, VertexLabel::D),
            ("E", self.spec.e_angle, VertexLabel::E),
        ];
        for (name, stored, label) in derived {
            if let Some(value) = stored {
                if value != spec.angle(label) {
                    return Err(Error::Parse(format!(
                        "angle {name} = {value} disagrees with B = {b} (expected {})",
                        spec.angle(label)
                    )));
                }
            }
        }
        if let Some(e) = self.spec.e {
            if (e - spec.e()).abs() > 1e-12 {
                return Err(Error::Parse(format!("e = {e} disagrees with B = {b} (expected {})", spec.e())));
            }
        }
        let mut tiles = Vec::with_capacity(self.placements.len());
        for (i, p) in self.placements.iter().enumerate() {
            if !p.tx.is_finite() || !p.ty.is_finite() {
                return Err(Error::Parse(format!("placement {i} has a non-finite translation")));
            }
            let rot = ExactAngle::new(p.rot_num, p.rot_den)?;
            tiles.push(Isometry::new(rot, Point::new(p.tx, p.ty), p.reflected));
        }
        Tiling::with_tiles(spec, self.mode, tiles)
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json(t: &Tiling) -> String {
    let mut s = serde_json::to_string_pretty(&TilingDocument::from_tiling(t)).expect("document serializes");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<Tiling> {
    let doc: TilingDocument = serde_json::from_str(text)?;
    doc.to_tiling()
}

pub fn read_tiling(path: &Path) -> Result<Tiling> {
    from_json(&std::fs::read_to_string(path)?)
}

/// Writes through a temporary file in the same directory, then renames it into place.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    use std::io::Write;
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents)?;
    tmp.flush()?;
    let perms = match std::fs::metadata(path) {
        Ok(meta) => meta.permissions(),
        Err(_) => default_permissions(tmp.as_file().metadata()?.permissions()),
    };
    tmp.as_file().set_permissions(perms)?;
    tmp.persist(path).map_err(|e| Error::Io(e.error.to_string()))?;
    Ok(())
}

#[cfg(unix)]
fn default_permissions(mut p: std::fs::Permissions) -> std::fs::Permissions {
    use std::os::unix::fs::PermissionsExt;
    p.set_mode(0o644);
    p
}

#[cfg(not(unix))]
fn default_permissions(p: std::fs::Permissions) -> std::fs::Permissions {
    p
}
