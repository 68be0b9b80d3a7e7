use thiserror::Error;

/// Reasons a candidate root datum or automorphism is rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootDatumError {
    #[error("rank must be positive")]
    ZeroRank,
    #[error("root {index}: expected {expected} coordinates, found {found}")]
    WrongLength { index: usize, expected: usize, found: usize },
    #[error("{roots} roots but {coroots} coroots")]
    CountMismatch { roots: usize, coroots: usize },
    #[error("root {index} appears twice")]
    DuplicateRoot { index: usize },
    #[error("root {index}: pairing with its coroot is {pairing}, not 2")]
    PairingNotTwo { index: usize, pairing: i64 },
    #[error("root {index}: its negative is missing or carries the wrong coroot")]
    MissingNegative { index: usize },
    #[error("root {index}: twice this root is also a root")]
    NonReduced { index: usize },
    #[error("root {index}: its reflection does not permute the roots and coroots")]
    NotReflectionStable { index: usize },
    #[error("simple index {index} is out of range or repeated")]
    BadSimpleIndex { index: usize },
    #[error("simple roots are linearly dependent")]
    SimpleDependent,
    #[error("root {index} is not a same-sign integer combination of the simple roots")]
    NotABase { index: usize },
    #[error("automorphism matrix must be square of size {rank}")]
    MatrixShape { rank: usize },
    #[error("automorphism matrix is not invertible over the integers")]
    NotInvertible,
    #[error("automorphism has no finite order within {bound}")]
    InfiniteOrder { bound: usize },
    #[error("automorphism sends root {index} outside the root set")]
    NotRootPreserving { index: usize },
    #[error("automorphism does not preserve the simple roots (root {index})")]
    NotBased { index: usize },
    #[error("levi subset contains a non-simple root index {index}")]
    NotSimple { index: usize },
}

/// Library-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root datum: {0}")]
    RootDatum(#[from] RootDatumError),
    #[error("group order exceeds the configured bound {bound}")]
    BoundExceeded { bound: usize },
    #[error("order bound {n} is divisible by the residue characteristic {p}")]
    OrderBoundDivisibleByP { n: u64, p: u64 },
    #[error("order bound must be positive")]
    ZeroOrderBound,
    #[error("invalid Frobenius data: {0}")]
    Frobenius(String),
    #[error("class {class} has a denominator divisible by {p}")]
    NotTame { class: String, p: u64 },
    #[error("invalid class vector: {0}")]
    BadClass(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("facet {sigma} is not a face of {omega}")]
    NotAFace { omega: String, sigma: String },
    #[error("unknown facet {0}")]
    UnknownFacet(String),
    #[error("invalid Levi subset: {0}")]
    Levi(String),
    #[error("matrix is not of finite order")]
    NotFiniteOrder,
    #[error("eigenvalue multiset {0} is not stable under Frobenius")]
    NotRational(String),
    #[error("vertex polynomial needs a unit eigenvalue in both factors")]
    MissingUnitEigenvalue,
    #[error("no admissible Jordan splitting for orbit {orbit} with target {target}")]
    NoAdmissibleSplitting { orbit: String, target: i64 },
    #[error("{0}")]
    Classical(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
