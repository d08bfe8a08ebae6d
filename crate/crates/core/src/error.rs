use thiserror::Error;

/// Error type shared by all modules of the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    DescriptorMismatch,
    #[error("zero input where a nonzero value is required")]
    ZeroInput,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus polynomial is not irreducible")]
    ReducibleModulus,
    #[error("modulus polynomial has wrong degree")]
    BadModulusDegree,
    #[error("quadratic polynomial is not separable")]
    InseparablePolynomial,
    #[error("etale spec must be a degree-2 polynomial")]
    NotDegreeTwo,
    #[error("polynomial is reducible; use the split shape instead")]
    ReduciblePolynomial,
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("negative power")]
    NegativePower,
    #[error("no norm-zero element exists (anisotropic norm)")]
    NoneExist,
    #[error("bounded search exhausted without finding a solution")]
    SearchBudgetExhausted,
    #[error("element is not a primitive idempotent")]
    NotPrimitiveIdempotent,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("gamma must be <1,1,1> for the GL3 action")]
    GammaNotUnit,
    #[error("Cayley-Dickson parameters are not allowed in characteristic 2")]
    CayleyDicksonCharTwo,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("element is not singular")]
    NotSingular,
    #[error("subspace is not an inner ideal")]
    NotInnerIdeal,
    #[error("no inner ideal of dimension {0} found within budget")]
    ConstructionFailed(usize),
    #[error("rank does not match the requested flag kind")]
    RankMismatch,
    #[error("elements belong to different triples")]
    TripleMismatch,
    #[error("subspace is not a K-submodule")]
    NotKSubmodule,
    #[error("element is not an isotropy witness")]
    NotAWitness,
    #[error("s must have nonzero trace")]
    TraceZeroS,
    #[error("unsupported K shape in characteristic 2")]
    CharTwoUnsupportedShape,
    #[error("g does not witness a congruence of the hermitian forms")]
    NotACongruence,
    #[error("zero generator in a Pfister form")]
    ZeroGenerator,
    #[error("zero gamma entry")]
    ZeroGamma,
    #[error("bad gamma: 2-Pfister generators required")]
    BadGamma,
    #[error("unsupported base field for the form engine")]
    UnsupportedBase,
    #[error("verdict undecidable in this regime")]
    UndecidedRegime,
    #[error("config parse error: {0}")]
    ConfigParse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
