use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse `{0}` as an element of Q(z)")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("unknown group element `{0}`")]
    UnknownElement(String),
    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),
    #[error("bad coset transversal for class of `{0}`")]
    BadTransversal(String),
    #[error("irrep `{label}` of the centralizer of `{rep}` is invalid: {msg}")]
    BadIrrep {
        rep: String,
        label: String,
        msg: String,
    },
    #[error("unknown weight `{0}`")]
    UnknownWeight(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("basis vector {0} is not homogeneous for the G-grading")]
    Inhomogeneous(usize),
    #[error("subspace is not stable under the action")]
    NotStable,
    #[error("element does not lie in the requested space: {0}")]
    NotInSpace(String),
    #[error("highest-weight precondition fails: {0}")]
    Precondition(String),
    #[error("unknown formula `{0}`")]
    UnknownFormula(String),
    #[error("formula `{formula}` does not apply to this input: {msg}")]
    BadFormulaArgs { formula: String, msg: String },
    #[error("no named generator `{name}` for weight {weight}")]
    UnknownGenerator { name: String, weight: String },
    #[error(transparent)]
    Group(#[from] GroupError),
}
