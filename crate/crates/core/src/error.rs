use alloc::string::String;

/// Errors raised by the exact-arithmetic and classification layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("ambient cyclotomic orders differ ({left} vs {right})")]
    AmbientOrderMismatch { left: u32, right: u32 },
    #[error("root of unity order {order} does not divide ambient order {ambient}")]
    OrderNotDivisible { order: u32, ambient: u32 },
    #[error("scalar must be nonzero")]
    ZeroScalar,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("operation is undefined for the zero element")]
    ZeroElement,
    #[error("elements belong to different presentations")]
    PresentationMismatch,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("unsupported scalar form: {0}")]
    UnsupportedScalarForm(String),
    #[error("roots of h^2 - alpha*h - beta are not representable as monomial scalars")]
    RootsNotRepresentable,
    #[error("beta must be nonzero")]
    ZeroBeta,
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
