use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotWeaklyDecreasing(Vec<usize>),

    #[error("box ({row}, {col}) lies outside the Young diagram")]
    BoxOutsideDiagram { row: usize, col: usize },

    #[error("modulus t must be a positive integer")]
    ZeroModulus,

    #[error("malformed {what}: {reason}")]
    Malformed { what: &'static str, reason: String },

    #[error("colored integers have different moduli ({0} and {1})")]
    ModulusMismatch(usize, usize),

    #[error("{0} is not a {1}-core")]
    NotCore(String, usize),

    #[error("expected a quotient of length {expected}, got {got}")]
    QuotientLength { expected: usize, got: usize },

    #[error("{0} is not self-conjugate")]
    NotSelfConjugate(String),

    #[error("{0} is not a doubled distinct partition")]
    NotDoubledDistinct(String),

    #[error("parts must be strictly decreasing and positive, got {0:?}")]
    NotDistinct(Vec<usize>),

    #[error("series with constant term {0} has no inverse over the integers")]
    NotInvertible(String),

    #[error("z-window {given} is too small for order {order} (need at least {needed})")]
    WindowTooSmall { given: usize, order: usize, needed: usize },

    #[error("cannot parse {token:?}: {reason}")]
    Parse { token: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_modulus(t: usize) -> Result<()> {
    if t == 0 {
        Err(Error::ZeroModulus)
    } else {
        Ok(())
    }
}
