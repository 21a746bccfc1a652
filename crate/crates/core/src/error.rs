use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("jet depth exceeded: {0}")]
    JetDepth(String),
    #[error("integrand does not decay fast enough: numerator degree {numerator} against pole order {poles}")]
    InsufficientDecay { numerator: u32, poles: u32 },
    #[error("value still depends on {0}; substitute the unit-sphere restriction first")]
    Unrestricted(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("unknown case `{0}`")]
    UnknownCase(String),
    #[error("dimension {0} is odd; only even dimensions carry a spinor trace")]
    OddDimension(u32),
    #[error("dimension {0} is below two")]
    LowDimension(u32),
    #[error("cannot parse `{0}`")]
    Parse(String),
    #[error("not expressible in the report basis: {0}")]
    NotRepresentable(String),
    #[error("case {case}: {source}")]
    InCase { case: String, source: Box<Error> },
}

pub type Result<T> = std::result::Result<T, Error>;
