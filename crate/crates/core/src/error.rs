use thiserror::Error;

use crate::cartan::Sign;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 2, got {0}")]
    RankTooSmall(usize),

    #[error("node {node} is outside 0..={ell}")]
    NodeOutOfRange { node: usize, ell: usize },

    #[error("expected {expected} coefficients, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("xi index must be even, got {0}")]
    OddXiIndex(usize),

    #[error("xi_{k}^{sign}{i} is undefined: {k} {sign} {i} leaves 0..={ell}")]
    XiOutOfRange {
        k: usize,
        sign: Sign,
        i: usize,
        ell: usize,
    },

    #[error("root vector has a negative coefficient: {0:?}")]
    NotPositive(Vec<i64>),

    #[error("dominance walk exceeded {0} reflections; input is not a weight of V(Lambda_k)")]
    DominantizeCapExceeded(usize),

    #[error("parts must be weakly decreasing: {0:?}")]
    NotAPartition(Vec<usize>),

    #[error("node ({row},{col}) is not in the diagram")]
    NodeNotInDiagram { row: usize, col: usize },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("residue sequence {0:?} does not have content beta")]
    SequenceNotInBlock(Vec<usize>),

    #[error("residue {residue} is outside 0..={ell}")]
    ResidueOutOfRange { residue: usize, ell: usize },

    #[error("no idempotent certificate is known for ell={ell}, k={k}")]
    NoCertificate { ell: usize, k: usize },

    #[error("wildness witness needs two distinct idempotents")]
    EqualIdempotents,

    #[error("unknown table selector {0:?}")]
    UnknownSelector(String),

    #[error("cannot parse Laurent polynomial: {0}")]
    ParsePoly(String),
}
