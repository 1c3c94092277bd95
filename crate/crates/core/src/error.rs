use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree {n} exceeds the exact-mode bound {bound}")]
    ExactBoundExceeded { n: usize, bound: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("root search for degree {n} did not converge: bracket [{lo}, {hi}] after {iterations} iterations")]
    BracketNonConvergence {
        n: usize,
        lo: f64,
        hi: f64,
        iterations: usize,
    },

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("square-root branch undefined on the segment [-1, 1] (z = {re} + {im}i)")]
    BranchUndefined { re: f64, im: f64 },

    #[error(
        "{count} roots within cluster radius {radius} near {re} + {im}i; multiplicity above 2"
    )]
    ClusterTooLarge {
        count: usize,
        radius: f64,
        re: f64,
        im: f64,
    },

    #[error(
        "root iteration did not converge after {iterations} iterations (max step {max_step:e})"
    )]
    RootNonConvergence { iterations: usize, max_step: f64 },

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
