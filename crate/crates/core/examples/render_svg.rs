//! Writes an SVG drawing of a hole patch with the hole outlined.
//!
//! ```text
//! cargo run --example render_svg -- hole12.svg
//! ```

use octatile::assembler::assemble_hole;
use octatile::io::{render_svg, write_atomic, SvgOptions};

fn main() -> octatile::Result<()> {
    let out = std::env::args().nth(1).unwrap_or_else(|| "hole12.svg".into());
    let tiling = assemble_hole(12, 3)?;
    let svg = render_svg(&tiling, &SvgOptions { hole_overlay: true, ..SvgOptions::default() });
    write_atomic(out.as_ref(), svg.as_bytes())?;
    println!("wrote {out}: {} tiles, {} bytes", tiling.len(), svg.len());
    Ok(())
}
