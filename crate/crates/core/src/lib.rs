//! Construction and verification of tilings by the C11-T1A convex pentagon.
//!
//! The pentagon family has one free angle `B`. The crate builds the
//! pentagon and its Octa-unit, assembles n-fold rotational patches,
//! patches with a regular m-gon hole, row tilings and two-fold spirals,
//! and checks every patch with exact angle sums and float geometry.
//!
//! ```
//! use octatile::{assembler, validator};
//!
//! let tiling = assembler::assemble_rotational(5, 2).unwrap();
//! let report = validator::validate(&tiling);
//! assert!(report.valid);
//! assert_eq!(report.symmetry.rotation_order, 5);
//! ```

pub mod assembler;
pub mod error;
pub mod geometry;
pub mod io;
pub mod validator;

pub use assembler::{Mode, Tiling};
pub use error::{Error, Result};
pub use geometry::{ExactAngle, Isometry, PentagonSpec, Point};
