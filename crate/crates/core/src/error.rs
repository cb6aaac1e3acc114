//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} is outside the diagram of rank {rank}")]
    UnknownIndex { index: usize, rank: usize },
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),
    #[error("word {word:?} has length {len}, a reduced word of w0 needs {expected}")]
    NotLongest { word: Vec<usize>, len: usize, expected: usize },
    #[error("letter {0} is not a sink of the class")]
    NotSink(usize),
    #[error("letter {0} is not a source of the class")]
    NotSource(usize),
    #[error("automorphism is not compatible with the diagram: {0}")]
    BadAutomorphism(String),
    #[error("class is not in the twisted adapted cluster point: {0}")]
    NotInPoint(String),
    #[error("class is not adapted to any Dynkin quiver")]
    NotAdapted,
    #[error("two vertices share the coordinate ({residue}, {pos2x}/2)")]
    CoordinateCollision { residue: usize, pos2x: i64 },
    #[error("the value is undefined: {0}")]
    Undefined(String),
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
    #[error("cannot parse {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
