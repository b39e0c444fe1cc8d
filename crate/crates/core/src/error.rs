use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("cyclotomic conductor must be positive")]
    ZeroConductor,
    #[error("field mismatch: Q(zeta_{left}) vs Q(zeta_{right})")]
    FieldMismatch { left: u32, right: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("variable sets differ")]
    VarSetMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("exponent tuple has {got} entries, ring has {expected} variables")]
    ArityMismatch { expected: usize, got: usize },
    #[error("conductor {n} is not divisible by {required}")]
    ConductorIncompatible { n: u32, required: u32 },
    #[error("point is not on the line")]
    NotOnLine,
    #[error("the curve contains the line")]
    LineInCurve,
    #[error("projective point must have a nonzero coordinate")]
    ZeroPoint,
    #[error("polynomial is not homogeneous of degree {0}")]
    NotHomogeneous(u32),
    #[error("generator {index} does not vanish at point {point}")]
    GeneratorNotVanishing { index: usize, point: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
