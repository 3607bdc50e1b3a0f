//! An n-fold rotational patch and its validation report.
//!
//! ```text
//! cargo run --example rotational -- 7 3
//! ```

use octatile::assembler::assemble_rotational;
use octatile::validator::validate;

fn main() -> octatile::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u32>());
    let n = args.next().transpose().map_err(|e| octatile::Error::Parse(e.to_string()))?.unwrap_or(5);
    let depth = args.next().transpose().map_err(|e| octatile::Error::Parse(e.to_string()))?.unwrap_or(2);
    let tiling = assemble_rotational(n, depth)?;
    println!("n = {n}, depth = {depth}, B = {}", tiling.spec().b());
    print!("{}", validate(&tiling));
    Ok(())
}
