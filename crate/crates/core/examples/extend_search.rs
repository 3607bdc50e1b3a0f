//! Probes the free edges of a hole patch for admissible next tiles.
//!
//! ```text
//! cargo run --example extend_search -- 10
//! ```

use octatile::assembler::{assemble_hole, extend_search, glue};
use octatile::geometry::EdgeLabel;
use octatile::validator::validate;

fn main() -> octatile::Result<()> {
    let m = std::env::args().nth(1).map(|a| a.parse::<u32>()).transpose().map_err(|e| octatile::Error::Parse(e.to_string()))?.unwrap_or(10);
    let patch = assemble_hole(m, 1)?;
    println!("hole patch m = {m}: {} tiles", patch.len());
    let mut histogram = std::collections::BTreeMap::new();
    for tile in 0..patch.len() {
        for edge in EdgeLabel::ALL {
            if !patch.edge_neighbours(tile, edge)?.is_empty() {
                continue;
            }
            let steps = extend_search(&patch, tile, edge, usize::MAX)?;
            *histogram.entry(steps.len()).or_insert(0) += 1;
            if tile < 2 {
                println!("tile {tile} edge {edge}: {} options", steps.len());
                for s in steps {
                    let grown = glue(&patch, s)?;
                    let r = validate(&grown);
                    println!("    guest {} reflected {:<5} overlaps {}", s.guest_edge, s.guest_reflected, r.overlaps.len());
                }
            }
        }
    }
    println!("free edges by option count: {histogram:?}");
    Ok(())
}
