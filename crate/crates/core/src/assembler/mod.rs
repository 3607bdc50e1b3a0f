//! Patch construction: edge gluing, Octa-unit wedges and the closed-form builders.

mod builders;
mod search;
mod tiling;

pub use builders::{
    assemble_hole, assemble_rotational, build_row_tiling, build_strip, build_triunit,
    build_type1_variation, spiral_shifts, spiral_two_fold, WedgeParams,
};
pub use search::extend_search;
pub use tiling::{glue, GlueStep, Mode, Tiling};
