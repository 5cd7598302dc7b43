//! Crate-wide error type.

use std::fmt;

/// Group axiom violated by a user-supplied multiplication table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupAxiom {
    LatinSquare,
    Identity,
    Inverses,
    Associativity,
}

impl fmt::Display for GroupAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupAxiom::LatinSquare => "Latin square",
            GroupAxiom::Identity => "identity",
            GroupAxiom::Inverses => "inverses",
            GroupAxiom::Associativity => "associativity",
        };
        f.write_str(s)
    }
}

#[derive(Debug)]
pub enum Error {
    /// Modulus passed to the prime-field constructor is not prime.
    CompositeModulus(u64),
    /// Inversion of the zero field element.
    DivisionByZero,
    /// Group order outside the constructor's domain.
    InvalidOrder(String),
    /// Metacyclic twist fails t^n = 1 (mod m).
    BadTwist { m: u64, n: u64, t: u64 },
    /// Permutation closure exceeded the configured cap.
    ClosureTooLarge { cap: usize },
    /// A multiplication table failed validation; the violated axiom is named.
    NotAGroup(GroupAxiom),
    /// An element set claimed to be a subgroup is not closed.
    NotASubgroup,
    /// Operands come from different groups or fields.
    MixedContext,
    /// Matrix or vector shapes are incompatible.
    DimensionMismatch { expected: usize, got: usize },
    /// Operation requires a square matrix.
    NotSquare,
    /// Exhaustive enumeration would exceed the vector budget.
    BudgetExceeded { needed_log2: u32, budget_log2: u32 },
    /// A bound was requested outside its precondition (reason named).
    NotApplicable(&'static str),
    /// Row-weight-4 analysis requires wgt(a) = wgt(b) = 2.
    NotW4,
    /// A pair transformation was given invalid parameters.
    InvalidTransform(String),
    /// gcd of two zero polynomials.
    BothZero,
    /// Text input failed to parse; byte position and message.
    Parse { pos: usize, msg: String },
    /// Element grammar referenced a generator the group does not define.
    UnknownGenerator(String),
    Io(std::io::Error),
    Json(serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::CompositeModulus(p) => write!(f, "{p} is not prime"),
            Error::DivisionByZero => write!(f, "division by zero field element"),
            Error::InvalidOrder(s) => write!(f, "invalid group order: {s}"),
            Error::BadTwist { m, n, t } => {
                write!(f, "twist {t}^{n} is not 1 mod {m}")
            }
            Error::ClosureTooLarge { cap } => {
                write!(f, "permutation closure exceeds cap of {cap} elements")
            }
            Error::NotAGroup(ax) => write!(f, "table is not a group: {ax} axiom fails"),
            Error::NotASubgroup => write!(f, "element set is not a subgroup"),
            Error::MixedContext => write!(f, "operands have different group or field"),
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::NotSquare => write!(f, "matrix is not square"),
            Error::BudgetExceeded {
                needed_log2,
                budget_log2,
            } => write!(
                f,
                "enumeration needs 2^{needed_log2} vectors, budget is 2^{budget_log2}"
            ),
            Error::NotApplicable(why) => write!(f, "bound not applicable: {why}"),
            Error::NotW4 => write!(f, "analysis requires wgt(a) = wgt(b) = 2"),
            Error::InvalidTransform(s) => write!(f, "invalid transform: {s}"),
            Error::BothZero => write!(f, "gcd of two zero polynomials"),
            Error::Parse { pos, msg } => write!(f, "parse error at {pos}: {msg}"),
            Error::UnknownGenerator(name) => write!(f, "unknown generator `{name}`"),
            Error::Io(e) => write!(f, "io error: {e}"),
            Error::Json(e) => write!(f, "json error: {e}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            Error::Json(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e)
    }
}
