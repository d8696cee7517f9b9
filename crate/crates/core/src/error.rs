use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("non-finite entry at {0}")]
    NonFinite(&'static str),

    #[error("{what} violates unitarity: max |U U^dagger - I| = {deviation:e}")]
    NotUnitary { what: &'static str, deviation: f64 },

    #[error("state vector not normalized: |norm^2 - 1| = {deviation:e}")]
    NotNormalized { deviation: f64 },

    #[error("density matrix is not Hermitian: max |rho - rho^dagger| = {deviation:e}")]
    NotHermitian { deviation: f64 },

    #[error("density matrix trace {trace} differs from 1")]
    BadTrace { trace: f64 },

    #[error("density matrix has negative eigenvalue {eigenvalue:e}")]
    NegativeEigenvalue { eigenvalue: f64 },

    #[error("{name} = {value} outside [{lo}, {hi}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("payoff table violates temptation > reward > punishment > sucker: {0}")]
    NotPrisonersDilemma(String),

    #[error("invalid strategy grid: {0}")]
    InvalidGrid(String),

    #[error("pulse sequence: {0}")]
    InvalidSequence(String),

    #[error("tomography design is rank deficient ({rank} of 15); unconstrained directions: {}", directions.join(", "))]
    RankDeficient { rank: usize, directions: Vec<String> },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    InvalidInput(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn out_of_range(name: &'static str, value: f64, lo: f64, hi: f64) -> Self {
        Error::OutOfRange { name, value, lo, hi }
    }

    /// Whether the error stems from the file system rather than from user input.
    pub fn is_io(&self) -> bool {
        matches!(self, Error::Io { .. })
    }
}
