use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("field order {0} exceeds the supported maximum 65536")]
    FieldTooLarge(u128),

    #[error("invalid field modulus: {0}")]
    InvalidModulus(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("element code {elem} is out of range for GF({q})")]
    ElementOutOfRange { elem: u64, q: u32 },

    #[error("GF({sub}) is not a subfield of GF({ambient})")]
    NotSubfield { sub: u32, ambient: u32 },

    #[error("operands live in different fields")]
    FieldMismatch,

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("generator matrix has rank {rank} but {rows} rows")]
    RankDeficient { rank: usize, rows: usize },

    #[error("a code needs length and dimension at least 1")]
    EmptyCode,

    #[error("{what} needs {size} steps, over the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: u128,
        cap: u128,
    },

    #[error("input columns are not a projective point set: {0}")]
    NotProjective(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("format error: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}

impl From<toml::de::Error> for Error {
    fn from(e: toml::de::Error) -> Self {
        Error::Format(e.to_string())
    }
}
