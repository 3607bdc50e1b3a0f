//! Row tilings: Octa-unit rows in either orientation, and half-slid strips with flat vertices.
//!
//! ```text
//! cargo run --example rows
//! ```

use octatile::assembler::{build_row_tiling, build_type1_variation};
use octatile::geometry::spec_for_rotational;
use octatile::validator::validate;

fn main() -> octatile::Result<()> {
    let spec = spec_for_rotational(5)?;
    for flips in [vec![false, false, false], vec![false, true, true, false]] {
        let t = build_row_tiling(&spec, &flips, 4)?;
        let r = validate(&t);
        println!("rows {flips:?}: {} tiles, valid {}, edge-to-edge {}", t.len(), r.valid, r.edge_to_edge);
        for c in &r.vertex_classes {
            println!("  {:<10} {}", c.kind.to_string(), c.count);
        }
    }
    let t = build_type1_variation(&spec, &[false, true, false], 4)?;
    let r = validate(&t);
    println!("slid strips: {} tiles, valid {}, edge-to-edge {}", t.len(), r.valid, r.edge_to_edge);
    for c in &r.vertex_classes {
        println!("  {:<10} {}", c.kind.to_string(), c.count);
    }
    Ok(())
}
