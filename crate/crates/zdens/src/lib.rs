//! Verified-numerics engine for log-free zero-density bounds.
//!
//! Everything is computed in the normalized coordinate `λ = δ·log q`, the
//! scaled distance of an L-function zero from `s = 1`, so no actual zero
//! data or moduli ever enter. The engine evaluates the smoothed kernel and
//! its Laplace transform, certifies the half-plane comparison inequality
//! ("Condition 2") on a grid, evaluates the closed-form density bounds,
//! runs the greedy extremal-configuration solver, and combines the
//! per-case bounds into the final `S < 1` certification.
//!
//! The crate is organized along the computation's layers:
//!
//! - [`kernel`] — the degree-5 weight `g`, its Laplace transform `G`, the
//!   scaled family `F_x`, and monotone inversion of `G` on the reals.
//! - [`cond2`] — grid certification of the half-plane comparison
//!   inequality together with the analytic-region reduction checks.
//! - [`density`] — weighted density bounds, per-class counting bounds,
//!   the deficiency budget, and the inversion producing per-index zero
//!   lower bounds.
//! - [`extremal`] — the budget-constrained greedy maximizer, the
//!   equality-chain solver, and a brute-force oracle.
//! - [`cases`] — the full case analysis certifying `S < 1`.
//! - [`facts`] — external constants (zero-free regions, thresholds) with
//!   citations.
//! - [`report`], [`config`], [`runner`] — structured reports, run
//!   configuration, and orchestration for the CLI.

pub mod cases;
pub mod cond2;
pub mod config;
pub mod density;
pub mod extremal;
pub mod facts;
pub mod kernel;
pub mod report;
pub mod runner;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A numeric argument fell outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A density context violates the validity window of the comparison
    /// inequality (`λ₀/x ≤ 1.25` or `(Λ−λ₀)/x ≤ 13`).
    #[error("inadmissible context: {0}")]
    Inadmissible(String),

    /// A counting bound is vacuous (`Δ² ≤ ξ` resp. `Δ ≤ 0`).
    #[error("bound vacuous: {0}")]
    Vacuous(String),

    /// Bisection could not bracket the requested target.
    #[error("no sign change: {0}")]
    NoSignChange(String),

    /// A solved chain violates the required monotone ordering.
    #[error("ordering violation: {0}")]
    Ordering(String),

    /// The brute-force lattice exceeds the enumeration guard.
    #[error("lattice too large: {0} points (guard 10^8)")]
    LatticeTooLarge(u128),

    /// Invalid run configuration.
    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
