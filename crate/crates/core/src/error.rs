use thiserror::Error;

/// Every failure surfaced by the library. Each variant carries a stable
/// code (see [`Error::code`]) that the command-line tool reports verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("label partition violated: {0}")]
    LabelPartition(String),
    #[error("bubble too small: {0}")]
    BubbleTooSmall(String),
    #[error("root unstable: 2i+b = {weight} < 3")]
    RootUnstable { weight: usize },
    #[error("anchor particle ip{0} lies inside a disk bubble")]
    AnchorViolation(u32),
    #[error("degenerate space: 2n+m = {weight} < 3 for (n,m) = ({n},{m})")]
    DegenerateSpace { n: u32, m: u32, weight: u32 },
    #[error("bubble at {0} is not a flat disk bubble")]
    NotFlat(String),
    #[error("bad node path: {0}")]
    BadPath(String),
    #[error("the root cannot be merged")]
    IsRoot,
    #[error("codimension {k} outside 0..={max}")]
    CodimOutOfRange { k: usize, max: usize },
    #[error("chambers are only defined for m >= 1")]
    UnsupportedM0,
    #[error("euler characteristic is only an invariant of the cell structure for n <= 1 (got n = {0})")]
    UnsupportedN(u32),
    #[error("cap exceeded: {what} reached {count} (cap {cap}); raise the cap to continue")]
    CapExceeded {
        what: &'static str,
        count: usize,
        cap: usize,
    },
    #[error("stratum is not a chamber (codim {0})")]
    NotAChamber(usize),
    #[error("parameter too small: {0}")]
    TooSmall(String),
    #[error("poset is not graded")]
    NotGraded,
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::LabelPartition(_) => "LabelPartition",
            Error::BubbleTooSmall(_) => "BubbleTooSmall",
            Error::RootUnstable { .. } => "RootUnstable",
            Error::AnchorViolation(_) => "AnchorViolation",
            Error::DegenerateSpace { .. } => "DegenerateSpace",
            Error::NotFlat(_) => "NotFlat",
            Error::BadPath(_) => "BadPath",
            Error::IsRoot => "IsRoot",
            Error::CodimOutOfRange { .. } => "CodimOutOfRange",
            Error::UnsupportedM0 => "UnsupportedM0",
            Error::UnsupportedN(_) => "UnsupportedN",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::NotAChamber(_) => "NotAChamber",
            Error::TooSmall(_) => "TooSmall",
            Error::NotGraded => "NotGraded",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_space(n: u32, m: u32) -> Result<()> {
    let weight = 2 * n + m;
    if weight < 3 {
        return Err(Error::DegenerateSpace { n, m, weight });
    }
    Ok(())
}
