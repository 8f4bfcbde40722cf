//! Error type shared by all modules.

use thiserror::Error;

/// Everything that can go wrong across the crate.
///
/// Preconditions are always checked; violating one yields a structured error
/// rather than a wrong answer. `code` gives a stable machine-readable name
/// for each variant, used verbatim in CLI JSON error objects.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The integer is not of the form p^e with p prime, e >= 1.
    #[error("{0} is not a prime power")]
    NotAPrimePower(String),

    /// Input exceeds the 64-bit range this crate certifies primality for.
    #[error("input {0} does not fit the supported range (must be below 2^64)")]
    InputTooLarge(String),

    /// A squarefree polynomial was required.
    #[error("polynomial is not squarefree: gcd with its derivative has degree {0}")]
    NotSquarefree(usize),

    /// A monic polynomial was required.
    #[error("polynomial must be monic")]
    NotMonic,

    /// The polynomial does not satisfy x^(2n) f(q/x) = q^n f(x).
    #[error("polynomial violates the degree-{degree} functional equation for q = {q}")]
    FunctionalEquationViolated { degree: usize, q: u64 },

    /// An irreducible polynomial was required.
    #[error("polynomial is reducible over the rationals")]
    NotIrreducible,

    /// The pair (a, b) does not give a Weil polynomial for this q.
    #[error("x^4 + {a}x^3 + {b}x^2 + {a}qx + q^2 is not a Weil polynomial for q = {q}")]
    NotWeil { a: i64, b: i64, q: u64 },

    /// The quartic is a Weil polynomial but its middle coefficient shares a
    /// factor with q.
    #[error("surface parameters (a, b) = ({a}, {b}) are not ordinary for q = {q}")]
    NotOrdinary { a: i64, b: i64, q: u64 },

    /// The quartic is reducible, so the isogeny class is not simple.
    #[error("surface parameters (a, b) = ({a}, {b}) give a reducible quartic for q = {q}")]
    NotSimple { a: i64, b: i64, q: u64 },

    /// A degree argument outside the operation's domain.
    #[error("invalid degree {0}: {1}")]
    InvalidDegree(usize, &'static str),

    /// Epsilon must lie in (0, 1].
    #[error("epsilon must lie in (0, 1], got {0}")]
    InvalidEpsilon(String),

    /// An exhaustive verification was asked to cover too large a space.
    #[error("verification space too large: {0}")]
    TooLarge(String),

    /// The prime list handed to a verification routine is unusable.
    #[error("bad prime list: {0}")]
    BadPrimeList(String),

    /// A bounded coefficient search ended without a hit.
    #[error("coefficient search exhausted for degree {0}")]
    SearchExhausted(usize),

    /// One of the five certificate conditions failed (1-based index).
    #[error("construction certificate condition ({0}) failed")]
    HypothesisFailed(u8),

    /// Dimension must be at least 2 for the construction.
    #[error("dimension must be at least 2, got {0}")]
    InvalidDimension(usize),

    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),

    /// Filesystem trouble (cache or checkpoint files).
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Stable identifier for CLI JSON output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotAPrimePower(_) => "not_a_prime_power",
            Error::InputTooLarge(_) => "input_too_large",
            Error::NotSquarefree(_) => "not_squarefree",
            Error::NotMonic => "not_monic",
            Error::FunctionalEquationViolated { .. } => "functional_equation_violated",
            Error::NotIrreducible => "not_irreducible",
            Error::NotWeil { .. } => "not_weil",
            Error::NotOrdinary { .. } => "not_ordinary",
            Error::NotSimple { .. } => "not_simple",
            Error::InvalidDegree(..) => "invalid_degree",
            Error::InvalidEpsilon(_) => "invalid_epsilon",
            Error::TooLarge(_) => "too_large",
            Error::BadPrimeList(_) => "bad_prime_list",
            Error::SearchExhausted(_) => "search_exhausted",
            Error::HypothesisFailed(_) => "hypothesis_failed",
            Error::InvalidDimension(_) => "invalid_dimension",
            Error::Parse(_) => "parse_error",
            Error::Io(_) => "io_error",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
