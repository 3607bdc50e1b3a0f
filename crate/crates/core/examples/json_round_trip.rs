//! Serializes a spiral to JSON, reads it back and checks the bytes match.
//!
//! ```text
//! cargo run --example json_round_trip
//! ```

use octatile::assembler::spiral_two_fold;
use octatile::io::{from_json, to_json};

fn main() -> octatile::Result<()> {
    let tiling = spiral_two_fold(10, 1)?;
    let text = to_json(&tiling);
    let back = from_json(&text)?;
    assert_eq!(to_json(&back), text);
    let head: Vec<&str> = text.lines().take(24).collect();
    println!("{}\n  ...", head.join("\n"));
    println!("{} placements, {} bytes, round trip identical", back.len(), text.len());
    Ok(())
}
