use thiserror::Error;

/// Errors produced by the group, subgroup, homomorphism and decision routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,

    #[error("invalid modulus {0}: every cyclic factor needs modulus >= 2")]
    InvalidModulus(u64),

    #[error("rank mismatch: expected {expected} coordinates, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("coordinate {index} = {value} is out of range for modulus {modulus}")]
    CoordinateOutOfRange {
        index: usize,
        value: u64,
        modulus: u64,
    },

    #[error("g must be nonzero (pointed groups require g ≠ 0)")]
    ZeroPoint,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("group order {order} exceeds the enumeration bound {bound}")]
    BoundExceeded { order: u64, bound: u64 },

    #[error("operands live in different groups ({left} vs {right})")]
    ParentMismatch { left: String, right: String },

    #[error("not well-defined on generator {generator}: {modulus}·{image} ≠ 0 in {codomain}")]
    NotWellDefined {
        generator: usize,
        modulus: u64,
        image: String,
        codomain: String,
    },

    #[error("{leg} leg is not pointed: it sends g to {actual}, expected {expected}")]
    NotPointed {
        leg: &'static str,
        actual: String,
        expected: String,
    },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error(
        "deciders disagree on ({group}, {g}): bruteforce says {bruteforce}, structural says {structural}"
    )]
    DeciderDisagreement {
        group: String,
        g: String,
        bruteforce: bool,
        structural: bool,
    },

    #[error("invalid span file: {0}")]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
