use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("word lengths differ ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("word length {len} exceeds the supported maximum of {max}")]
    LengthTooLong { len: usize, max: usize },
    #[error("invalid symbol {symbol} (expected one of {expected})")]
    InvalidSymbol { symbol: i64, expected: &'static str },
    #[error("coordinate {index} out of range for length {len}")]
    CoordinateOutOfRange { index: usize, len: usize },
    #[error("shortening needs words of length at least 2, got {len}")]
    ShortenTooShort { len: usize },
    #[error("binary word has odd length {len}; the phi image has even length")]
    OddLength { len: usize },
    #[error("coordinate pair {pair} equals (1,1), which is outside the phi image")]
    NotInPhiImage { pair: usize },
    #[error("duplicate codeword {word}")]
    DuplicateWord { word: String },
    #[error("length {n} exceeds the exhaustive enumeration limit {limit}")]
    OverExhaustiveLimit { n: usize, limit: usize },
    #[error(
        "search space has {vertices} vertices, above the limit of {limit}; \
         use the bounds table instead or raise the vertex limit"
    )]
    OverVertexLimit { vertices: u128, limit: usize },
    #[error("code has minimum distance {actual}, required at least {required}")]
    MinDistanceViolated { required: u32, actual: String },
    #[error("no inner code supplied for weight {weight}")]
    MissingInnerCode { weight: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("codebook line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(
        "inconsistent bounds at (n={n}, d={d}): lower {lower} [{lower_provenance}] \
         exceeds upper {upper} [{upper_provenance}]"
    )]
    Inconsistent {
        n: usize,
        d: usize,
        lower: String,
        upper: String,
        lower_provenance: String,
        upper_provenance: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
