use alloc::string::String;

/// Everything that can go wrong while building or analysing a fan.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ray {ray} is not primitive (its coordinates have a common factor, or it is zero)")]
    NonPrimitiveRay { ray: usize },
    #[error("rays {first} and {second} are equal")]
    DuplicateRay { first: usize, second: usize },
    #[error("ray {ray} is not an extreme ray of maximal cone {cone}")]
    RedundantGenerator { cone: usize, ray: usize },
    #[error("maximal cone {cone} contains a line")]
    NotStronglyConvex { cone: usize },
    #[error("maximal cones {first} and {second} do not meet in a common face")]
    NotAFan { first: usize, second: usize },
    #[error("ray index {index} is out of range ({rays} rays)")]
    InvalidRayIndex { index: usize, rays: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("cone is not a cone of this fan")]
    UnknownCone,
    #[error("the zero cone has no link")]
    ZeroCone,
    #[error("the fans do not share a ray universe")]
    IncompatibleRayUniverse,
    #[error("unknown example `{0}`")]
    UnknownExample(String),
    #[error("the fan is not simplicial")]
    NotSimplicial,
    #[error("the fan is not smooth")]
    NotSmooth,
    #[error("the fan is not complete")]
    NotComplete,
    #[error("the maps do not form a complex (composition is nonzero)")]
    NotAComplex,
    #[error("negative dimension {0}")]
    NegativeDimension(i64),
    #[error("equivariant Betti series has a negative coefficient {value} at degree {degree}")]
    PurityViolation { degree: usize, value: i64 },
    #[error("the open rays of a completion must index rays of the ambient fan without repetition")]
    InvalidOpenRays,
    #[error("Frobenius needs a prime power p > 1, got {0}")]
    InvalidPrime(u64),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
}

impl Error {
    /// Stable identifier of the error kind, used by front ends.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonPrimitiveRay { .. } => "NonPrimitiveRay",
            Error::DuplicateRay { .. } => "DuplicateRay",
            Error::RedundantGenerator { .. } => "RedundantGenerator",
            Error::NotStronglyConvex { .. } => "NotStronglyConvex",
            Error::NotAFan { .. } => "NotAFan",
            Error::InvalidRayIndex { .. } => "InvalidRayIndex",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::UnknownCone => "UnknownCone",
            Error::ZeroCone => "ZeroCone",
            Error::IncompatibleRayUniverse => "IncompatibleRayUniverse",
            Error::UnknownExample(_) => "UnknownExample",
            Error::NotSimplicial => "NotSimplicial",
            Error::NotSmooth => "NotSmooth",
            Error::NotComplete => "NotComplete",
            Error::NotAComplex => "NotAComplex",
            Error::NegativeDimension(_) => "NegativeDimension",
            Error::PurityViolation { .. } => "PurityViolation",
            Error::InvalidOpenRays => "InvalidOpenRays",
            Error::InvalidPrime(_) => "InvalidPrime",
            Error::Overflow => "Overflow",
        }
    }

    /// Internal-consistency failures, as opposed to bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::PurityViolation { .. } | Error::NotAComplex | Error::Overflow
        )
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
