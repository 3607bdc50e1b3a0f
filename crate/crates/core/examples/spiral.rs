//! Two-fold spirals for m = 8, 10 and 14.
//!
//! ```text
//! cargo run --example spiral -- 2
//! ```

use octatile::assembler::{spiral_shifts, spiral_two_fold};
use octatile::validator::validate;

fn main() -> octatile::Result<()> {
    let belts = std::env::args().nth(1).map(|a| a.parse::<u32>()).transpose().map_err(|e| octatile::Error::Parse(e.to_string()))?.unwrap_or(2);
    for m in [8, 10, 14] {
        let t = spiral_two_fold(m, belts)?;
        let r = validate(&t);
        println!(
            "m = {m:>2}, shifts {:?}, {} tiles, {} with {} axes, valid {}",
            spiral_shifts(m).unwrap_or_default(),
            t.len(),
            r.symmetry.schoenflies(),
            r.symmetry.reflection_axes,
            r.valid
        );
        for c in &r.vertex_classes {
            println!("    {:<24} {}", c.kind.to_string(), c.count);
        }
    }
    Ok(())
}
