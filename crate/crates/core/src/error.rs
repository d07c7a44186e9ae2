use thiserror::Error;

use crate::exterior::DifferentialForm;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid multi-index {indices:?} for dimension {n}")]
    InvalidMultiIndex { indices: Vec<usize>, n: usize },

    #[error("interior product of a 0-form")]
    ContractionOfFunction,

    #[error("expected a form of degree {expected}, got degree {found}")]
    UnexpectedDegree { expected: usize, found: usize },

    #[error("form is not closed; d of it is {residual}")]
    NotClosed { residual: Box<DifferentialForm> },

    #[error("operation requires a structure with constant coefficients")]
    NonConstantStructure,

    #[error("3-form is degenerate at the given point")]
    Degenerate,

    #[error("metric is not invertible")]
    SingularMetric,

    #[error("volume factor sqrt(det g) is irrational; use the numeric tier")]
    IrrationalVolume,

    #[error("3-form is not in the 7-dimensional component; residual {residual}")]
    NotInComponent { residual: Box<DifferentialForm> },

    #[error("2-form is not coRochesterian; residual of d(sigma) {residual}")]
    NotCoRochesterian { residual: Box<DifferentialForm> },

    #[error("vector field is not coG2; L_X(*phi) = {witness}")]
    NotCoG2 { witness: Box<DifferentialForm> },

    #[error("pullback of a coRochesterian form left the coRochesterian space; residual {residual}")]
    PullbackNotCoRochesterian { residual: Box<DifferentialForm> },

    #[error("map is not a coG2-morphism; psi^*(*phi_2) - *phi_1 = {residual}")]
    NotCoG2Morphism { residual: Box<DifferentialForm> },

    #[error("map is not invertible: {0}")]
    NotInvertible(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("variable x{index} out of range for {n} variables")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("invalid document: {0}")]
    Document(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}
