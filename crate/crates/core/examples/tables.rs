//! Angle tables for the rotational and hole families.
//!
//! ```text
//! cargo run --example tables
//! ```

use octatile::io::{format_table, table, TableKind};

fn main() -> octatile::Result<()> {
    for (kind, range) in [(TableKind::Rotational, 3..=18), (TableKind::Hole, 7..=27)] {
        print!("{}", format_table(kind, &table(kind, range)?));
        println!();
    }
    Ok(())
}
