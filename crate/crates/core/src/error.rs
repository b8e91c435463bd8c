use thiserror::Error;

use crate::exact::IVec2;
use crate::presentation::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("0/0 is not a slope")]
    ZeroZero,

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("invalid presentation: {}", list_violations(.0))]
    InvalidPresentation(Vec<Violation>),

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("no valid presentation found after {0} attempts")]
    ExhaustedRetries(usize),

    #[error("affine image of {point} is not in the lattice")]
    LatticeImageFailure { point: IVec2 },

    #[error("no generic start point found: {0}")]
    NonGenericUnresolvable(String),

    #[error("segment with length multiplier {k} does not close up in the quotient")]
    TraceNotClosed { k: u64 },

    #[error("postcondition violated: {0}")]
    Postcondition(String),

    #[error("degenerate arc model: {0}")]
    DegenerateArcModel(String),

    #[error("not a core arc: {0}")]
    NotACoreArc(String),

    #[error("the two slopes must differ")]
    EqualSlopes,

    #[error("the map has a Euclidean orbifold")]
    UnsupportedOrbifold,
}

fn list_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}
