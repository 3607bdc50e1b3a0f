//! JSON interchange, SVG rendering and the angle tables.

mod document;
mod svg;
mod tables;

pub use document::{
    from_json, read_tiling, to_json, write_atomic, PlacementDoc, SpecDoc, TilingDocument,
    FORMAT_VERSION,
};
pub use svg::{render_svg, SvgOptions, SCALE};
pub use tables::{
    format_table, hole_table, parse_range, rotational_table, round_angle, round_e, table,
    TableKind, TableRow,
};
