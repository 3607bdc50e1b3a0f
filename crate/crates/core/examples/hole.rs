//! A patch around a regular m-gon hole, with the measured hole shape.
//!
//! ```text
//! cargo run --example hole -- 18 2
//! ```

use octatile::assembler::assemble_hole;
use octatile::validator::{regular_circumradius, validate};

fn main() -> octatile::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u32>());
    let m = args.next().transpose().map_err(|e| octatile::Error::Parse(e.to_string()))?.unwrap_or(12);
    let depth = args.next().transpose().map_err(|e| octatile::Error::Parse(e.to_string()))?.unwrap_or(2);
    let tiling = assemble_hole(m, depth)?;
    let report = validate(&tiling);
    println!("m = {m}, depth = {depth}, {} tiles, {}", tiling.len(), if report.valid { "valid" } else { "INVALID" });
    if let Some(h) = &report.hole {
        println!("hole circumradius {:.12} (regular: {:.12})", h.vertices[0].dist(h.center), regular_circumradius(m));
        println!("max side deviation {:e}, max radius deviation {:e}", h.max_side_deviation, h.max_radius_deviation);
        for p in &h.vertices {
            println!("  ({:.9}, {:.9})", p.x, p.y);
        }
    }
    Ok(())
}
