use thiserror::Error;

/// Errors raised by the complexity and classification routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid eigenvalue sequence: {0}")]
    InvalidSequence(String),

    #[error("count is infinite: threshold is zero and the sequence has no zero tail")]
    InfiniteCount,

    #[error("largest eigenvalue has infinite multiplicity")]
    InfiniteMultiplicity,

    #[error("trace is infinite")]
    InfiniteTrace,

    #[error("dimension {0} is not supported by this problem")]
    UnsupportedDimension(u32),

    #[error("budget exceeded while {what} (limit {limit})")]
    BudgetExceeded { what: String, limit: u64 },

    #[error("inadmissible sweep cells: {}", format_cells(.0))]
    InadmissibleCell(Vec<(f64, u32)>),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("division by zero: {0}")]
    DivisionByZero(String),

    #[error("parse error: {0}")]
    Parse(String),
}

fn format_cells(cells: &[(f64, u32)]) -> String {
    cells.iter().map(|(eps, d)| format!("(eps={eps}, d={d})")).collect::<Vec<_>>().join(", ")
}

pub type Result<T> = std::result::Result<T, Error>;
