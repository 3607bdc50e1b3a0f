use std::fmt::Write;

use crate::assembler::{Mode, Tiling};
use crate::geometry::Point;
use crate::validator::{check_hole, patch_bbox};

/// Drawing units per unit edge.
pub const SCALE: f64 = 100.0;

#[derive(Debug, Clone, PartialEq)]
pub struct SvgOptions {
    pub fill: String,
    pub reflected_fill: String,
    pub stroke: String,
    pub stroke_width: f64,
    /// Outline the m-gon hole of a hole-mode patch.
    pub hole_overlay: bool,
    pub margin: f64,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            fill: "#f2d38a".into(),
            reflected_fill: "#8fb8de".into(),
            stroke: "#333333".into(),
            stroke_width: 1.5,
            hole_overlay: false,
            margin: 20.0,
        }
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    if s.trim_start_matches('-').bytes().all(|b| b == b'0' || b == b'.') {
        "0.000".into()
    } else {
        s
    }
}

fn screen(p: Point) -> (String, String) {
    (num(p.x * SCALE), num(-p.y * SCALE))
}

/// One closed `<path>` per tile in tile order, y pointing down, three decimals.
pub fn render_svg(t: &Tiling, opts: &SvgOptions) -> String {
    let geoms = t.geoms();
    let (lo, hi) = patch_bbox(&geoms).unwrap_or((Point::ORIGIN, Point::new(1.0, 1.0)));
    let m = opts.margin;
    let (x0, y0) = (lo.x * SCALE - m, -hi.y * SCALE - m);
    let (w, h) = ((hi.x - lo.x) * SCALE + 2.0 * m, (hi.y - lo.y) * SCALE + 2.0 * m);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\" width=\"{}\" height=\"{}\">",
        num(x0),
        num(y0),
        num(w),
        num(h),
        num(w),
        num(h)
    );
    let _ = writeln!(
        out,
        "<g stroke=\"{}\" stroke-width=\"{}\" stroke-linejoin=\"round\">",
        opts.stroke,
        num(opts.stroke_width)
    );
    for (g, iso) in geoms.iter().zip(t.tiles()) {
        let fill = if iso.reflected { &opts.reflected_fill } else { &opts.fill };
        let mut d = String::new();
        for (i, p) in g.vertices.iter().enumerate() {
            let (x, y) = screen(*p);
            let _ = write!(d, "{}{} {} ", if i == 0 { "M" } else { "L" }, x, y);
        }
        d.push('Z');
        let _ = writeln!(out, "<path d=\"{d}\" fill=\"{fill}\"/>");
    }
    out.push_str("</g>\n");
    if opts.hole_overlay {
        if let Mode::Hole { m } = t.mode() {
            if let Ok(hole) = check_hole(t, m) {
                let pts: Vec<String> = hole
                    .vertices
                    .iter()
                    .map(|p| {
                        let (x, y) = screen(*p);
                        format!("{x},{y}")
                    })
                    .collect();
                let _ = writeln!(
                    out,
                    "<polygon points=\"{}\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"{}\"/>",
                    pts.join(" "),
                    num(opts.stroke_width * 2.0)
                );
            }
        }
    }
    out.push_str("</svg>\n");
    out
}
