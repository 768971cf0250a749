use thiserror::Error;

/// Errors surfaced by simulation and estimation entry points.
#[derive(Debug, Error)]
pub enum Error {
    #[error("window extent too large: {0} (limit 2^20 per side)")]
    WindowTooLarge(f64),
    #[error("degenerate or malformed annulus: inner {inner}, outer {outer}")]
    BadAnnulus { inner: f64, outer: f64 },
    #[error("rectangle not contained in the configuration window")]
    RectangleOutsideWindow,
    #[error("annulus not contained in the configuration window")]
    AnnulusOutsideWindow,
    #[error("window too small to contain the net rectangles (n={n}, kappa={kappa})")]
    WindowTooSmallForNet { n: f64, kappa: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("estimate undecided within budget: {0}")]
    Undecided(String),
    #[error("{got} holes intersect the annulus, above the exact-search cap {cap}")]
    TooManyHoles { got: usize, cap: usize },
    #[error("scale backend domain exceeded: {0}")]
    BackendDomain(String),
    #[error("no fixed point found: {0}")]
    NoFixedPoint(String),
    #[error("unknown experiment: {0}")]
    UnknownExperiment(String),
    #[error("canvas too large: {width}x{height}")]
    CanvasTooLarge { width: u64, height: u64 },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}
