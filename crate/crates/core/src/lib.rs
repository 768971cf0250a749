//! Monte Carlo toolkit for near-critical site percolation on the triangular
//! lattice and the lattice processes built on top of it: percolation with
//! heavy-tailed impurities ("holes"), forest fires without recovery, the
//! volume-frozen percolation model, and the near-critical scale calculus
//! relating ignition rates to exceptional box sizes.
//!
//! The crate is organized by process:
//!
//! - [`lattice`]: triangular-lattice geometry (coordinates, windows, boundaries);
//! - [`percolation`]: Bernoulli sampling, cluster labeling, crossings, circuits,
//!   arm events, nets, and Monte Carlo estimators;
//! - [`impurities`]: the heavy-tailed hole process, hole-crossing events with
//!   analytic bound oracles, and the deletable-hole four-arm event;
//! - [`scales`]: time/parameter maps, the fixed-point machinery for exceptional
//!   times and scales, and exponent formulas;
//! - [`forestfire`]: event-driven simulators (pure birth, fires with and without
//!   recovery, the removed-cluster lower-bound process, frozen percolation);
//! - [`experiments`]: named, reproducible experiment suites with CSV output;
//! - [`render`]: deterministic raster/vector rendering of configurations.

pub mod error;
pub mod experiments;
pub mod forestfire;
pub mod impurities;
pub mod lattice;
pub mod percolation;
pub mod render;
pub mod rng;
pub mod scales;
pub mod stats;
pub mod unionfind;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
