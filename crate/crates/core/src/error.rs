//! Crate-wide error type.

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("integrand is not finite at node x = {node}: f(x) = {value}")]
    NonFiniteIntegrand { node: f64, value: f64 },

    #[error("quadrature spec needs at least 2 nodes, got {node_count}")]
    TooFewNodes { node_count: usize },

    #[error("quadrature interval must satisfy a < b with finite endpoints, got [{a}, {b}]")]
    BadInterval { a: f64, b: f64 },

    #[error("finite-difference step must be positive, got h = {h}")]
    NonPositiveStep { h: f64 },

    #[error("Fibonacci index {n_max} exceeds {max}, the largest index fitting 64-bit arithmetic")]
    FibonacciIndexTooLarge { n_max: usize, max: usize },

    #[error("Fibonacci word generation {generation} has length {length}, over the in-memory budget of {budget}")]
    WordTooLong {
        generation: u32,
        length: u64,
        budget: u64,
    },

    #[error("word generation must be at least 1")]
    ZeroGeneration,

    #[error("partition needs {requested} segments but the word provides only {available}")]
    WordTooShort { requested: usize, available: usize },

    #[error("time partition is invalid: {reason}")]
    BadPartition { reason: String },

    #[error("probability must lie in [0, 1], got {p}")]
    InvalidProbability { p: f64 },

    #[error("step count {n} exceeds the supported maximum {max}")]
    TooManySteps { n: usize, max: usize },

    #[error("step lengths must all be at least 1")]
    ZeroStepLength,

    #[error("characteristic-function quadrature did not converge: last doubling changed the estimate by {last_delta:e}")]
    QuadratureNotConverged { last_delta: f64 },

    #[error("characteristic-function integrand has spurious imaginary part {value:e}")]
    SpuriousImaginaryPart { value: f64 },

    #[error("index n = {n} is outside the tabulated range 0..={max}")]
    IndexOutOfRange { n: usize, max: usize },

    #[error("lattice support too large: total step length {total} exceeds {limit}")]
    SupportOverflow { total: u128, limit: u128 },

    #[error("integer overflow while computing {context}")]
    IntegerOverflow { context: &'static str },

    #[error("need at least {min} samples, got {samples}")]
    TooFewSamples { samples: u64, min: u64 },

    #[error("time must be positive, got t = {t}")]
    NonPositiveTime { t: f64 },

    #[error("diffusion constant must be positive, got D = {d}")]
    NonPositiveDiffusion { d: f64 },

    #[error("dimension must be at least 1")]
    ZeroDimension,

    #[error("{what} supports d = 1 only; use the Monte Carlo estimator for d = {d}")]
    QuadratureDimension { what: &'static str, d: usize },

    #[error("nested quadrature is limited to {max} segments (got {segments}); use the Monte Carlo estimator instead")]
    TooManySegments { segments: usize, max: usize },

    #[error("path has {nodes} nodes but the partition has {times} times")]
    PathShapeMismatch { nodes: usize, times: usize },

    #[error("time increment {index} of the partition is zero")]
    ZeroTimeIncrement { index: usize },

    #[error("action appears non-integrable: estimate changed by a relative {relative_change:e} after the final budget doubling")]
    NonIntegrableAction { relative_change: f64 },

    #[error("partition function is zero: site multiplier {site} is unreachable within n_max = {n_max}")]
    EmptyPartitionSum { site: i64, n_max: usize },

    #[error("weight function returned a non-positive value {value} at length {length}")]
    InvalidWeight { value: f64, length: u64 },

    #[error("parameter {name} must be positive, got {value}")]
    NonPositiveParameter { name: &'static str, value: f64 },

    #[error("internal cross-check failed: {detail}")]
    CheckFailed { detail: String },

    #[error("invalid report: {reason}")]
    BadReport { reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
