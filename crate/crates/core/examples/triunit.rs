//! Three wedges turned by B/3 about a common corner.
//!
//! ```text
//! cargo run --example triunit -- 12 2
//! ```

use octatile::assembler::{build_triunit, WedgeParams};
use octatile::geometry::spec_for_hole;
use octatile::validator::validate;

fn main() -> octatile::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u32>());
    let m = args.next().transpose().map_err(|e| octatile::Error::Parse(e.to_string()))?.unwrap_or(12);
    let depth = args.next().transpose().map_err(|e| octatile::Error::Parse(e.to_string()))?.unwrap_or(2);
    let spec = spec_for_hole(m)?;
    let third = spec.b().checked_scale(1, 3)?;
    let t = build_triunit(&spec, third, WedgeParams::new(depth)?)?;
    let r = validate(&t);
    println!("B = {}, turn {third}, {} tiles, overlaps {}, gaps {}", spec.b(), t.len(), r.overlaps.len(), r.gaps);
    for c in &r.vertex_classes {
        println!("  {:<10} {}", c.kind.to_string(), c.count);
    }
    Ok(())
}
