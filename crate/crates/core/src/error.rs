use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Tables of the wrong shape or entries out of range.
    #[error("malformed ring tables: {0}")]
    Structure(String),

    #[error("ring of order {requested} exceeds the maximum supported order {max}")]
    Size { requested: u128, max: usize },

    #[error("{axiom} violated at {witness:?}")]
    Axiom { axiom: String, witness: Vec<usize> },

    #[error("element {0} is out of range for this ring")]
    Element(usize),

    #[error("subset is not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),

    #[error("map is not a ring homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("bimodule law violated: {0}")]
    Bimodule(String),

    #[error("ideal lattice exceeded cap of {cap} ideals; raise the cap")]
    LatticeTruncated { cap: usize },

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("unknown property `{0}`")]
    UnknownProperty(String),

    #[error("unknown rule `{0}`")]
    UnknownRule(String),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("{0}")]
    Format(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
