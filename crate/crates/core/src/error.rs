use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid subset syntax {0:?}: expected comma-separated 1-based indices or \"-\"")]
    SubsetSyntax(String),
    #[error("index {index} outside [1, {ambient}]")]
    IndexOutOfRange { index: usize, ambient: usize },
    #[error("ambient size {ambient} not supported (max {max})")]
    AmbientTooLarge { ambient: usize, max: usize },
    #[error("ambient size mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("matrix shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("facet {inner} is contained in facet {outer}; facets must be maximal")]
    NotMaximal { inner: String, outer: String },
    #[error("global complement requires plain (non-complemented) complexes")]
    ComplementedWithGlobal,
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("trivial code: no nonzero codeword")]
    TrivialCode,
    #[error("family must be in 1..=9, got {0}")]
    InvalidFamily(u8),
    #[error("no distance-optimality condition is claimed for family {0}")]
    NotClaimed(u8),
    #[error("code has {size} codewords, above the cap of {cap}")]
    CodeTooLarge { size: u64, cap: u64 },
    #[error("defining set is not injective: element {0} repeated")]
    NotInjective(String),
    #[error("predicted table row has non-integral weight {twice}/2")]
    NonIntegralWeight { twice: i128 },
    #[error("manifest: {0}")]
    Manifest(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
