//! The pentagon for a given `B`, its mirror across `DE`, and the Octa-unit lattice.
//!
//! ```text
//! cargo run --example octa_unit -- 72
//! ```

use octatile::assembler::{glue, GlueStep, Mode};
use octatile::geometry::{
    angles_from_b, realize, reflect_to_octa, EdgeLabel, ExactAngle, OctaLattice, OctaUnit, VertexLabel,
};
use octatile::validator::classify_vertices;
use octatile::Tiling;

fn main() -> octatile::Result<()> {
    let b: ExactAngle = std::env::args().nth(1).unwrap_or_else(|| "72".into()).parse()?;
    let spec = angles_from_b(b)?;
    let geom = realize(&spec)?;
    println!("B = {b}");
    for v in VertexLabel::ALL {
        let p = geom.vertex(v);
        println!("  {v}: angle {:>8} at ({:.6}, {:.6})", spec.angle(v).to_string(), p.x, p.y);
    }
    println!("  |DE| = e = {:.9}", spec.e());

    let unit = reflect_to_octa(&geom);
    let names = ["A", "B", "C", "D", "C'", "B'", "A'", "E"];
    let angles = OctaUnit::boundary_angles(&spec);
    println!("Octa-unit boundary:");
    for ((name, p), a) in names.iter().zip(unit.boundary()).zip(angles) {
        println!("  {name:<2} {a:>8} at ({:.6}, {:.6})", p.x, p.y);
    }
    let l = OctaLattice::new(&unit);
    println!("lattice v1 = ({:.6}, {:.6}), v2 = ({:.6}, {:.6}), |v3| = {:.6}", l.v1.x, l.v1.y, l.v2.x, l.v2.y, l.v3.norm());

    let step = GlueStep { host_tile: 0, host_edge: EdgeLabel::DE, guest_edge: EdgeLabel::DE, guest_reflected: true };
    let pair = glue(&Tiling::seed(spec, Mode::Freeform)?, step)?;
    println!("glued along DE: {} tiles, placement {:?}", pair.len(), pair.tiles()[1]);
    println!("interior vertex classes: {:?}", classify_vertices(&pair));
    Ok(())
}
