//! Validates a patch file, or a freshly built patch, and prints the JSON report.
//!
//! ```text
//! cargo run --example validate -- patch.json
//! ```

use octatile::assembler::assemble_hole;
use octatile::io::read_tiling;
use octatile::validator::validate;

fn main() -> octatile::Result<()> {
    let tiling = match std::env::args().nth(1) {
        Some(path) => read_tiling(path.as_ref())?,
        None => assemble_hole(10, 2)?,
    };
    let report = validate(&tiling);
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}
