use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative argument {0} where a non-negative integer is required")]
    NegativeArgument(i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("radicand {0} is not a squarefree integer >= 2")]
    InvalidRadicand(u64),
    #[error("mismatched radicands: sqrt({0}) vs sqrt({1})")]
    RadicandMismatch(u64, u64),
    #[error("domain error: {0}")]
    Domain(&'static str),

    #[error("series constant term is not invertible")]
    NonInvertibleConstant,
    #[error("inner series of a composition must have zero constant term")]
    NonzeroInnerConstant,
    #[error("series square root requires constant term 1")]
    ConstantTermNotOne,
    #[error("empty coefficient list")]
    EmptySeries,
    #[error("lower hypergeometric parameter {0} is a non-positive integer")]
    InvalidLowerParameter(String),
    #[error("Laurent series has nonzero terms of negative degree")]
    NegativeValuation,

    #[error("numeric series did not converge after {terms} terms")]
    NonConvergence { terms: usize },
    #[error("numeric series terms are growing after {terms} terms")]
    Diverging { terms: usize },
    #[error("convergence guard: |w| = {0} is not below 1/27")]
    ConvergenceGuard(String),
    #[error("root bracketing failed on [{0}, {1}]")]
    RootBracketing(String, String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("parse error: {0}")]
    Parse(String),
}
