use thiserror::Error;

use crate::geometry::EdgeLabel;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("zero denominator in exact angle")]
    ZeroDenominator,
    #[error("exact arithmetic overflow")]
    Overflow,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("tile {0} does not exist")]
    UnknownTile(usize),
    #[error("edge {edge} of tile {tile} is already shared by two tiles")]
    OccupiedEdge { tile: usize, edge: EdgeLabel },
    #[error("edge {host} cannot be glued to edge {guest}: lengths differ")]
    LengthMismatch { host: EdgeLabel, guest: EdgeLabel },
    #[error("edge {edge} of tile {tile} is not a free boundary edge")]
    NotFrontier { tile: usize, edge: EdgeLabel },
    #[error("the patch has no hole")]
    NoHole,
    #[error("hole has {found} sides, expected {expected}")]
    HoleSides { expected: usize, found: usize },
    #[error("i/o error: {0}")]
    Io(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
