//! Conservative risk bounds for small measurement samples.
//!
//! Given a handful of measurements, this crate answers "what fraction of the
//! population can exceed the threshold `s`?" without assuming the data come
//! from any particular distribution family:
//!
//! - [`concentration`] — closed-form tail bounds from mean and standard
//!   deviation: the Bienaymé-Chebyshev/Cantelli, Camp-Meidell and
//!   Van Dantzig inequalities, plus the (non-conservative) Gaussian
//!   approximation.
//! - [`tolerance`] — one-sided normal-theory tolerance factors (Owen's
//!   k-factor method) built on the noncentral t distribution.
//! - [`wilks`] — order-statistic tolerance limits: plan a sample size, or
//!   read a confidence/risk pair off an existing sample.
//! - [`bootstrap`] — penalized bound estimates: a high quantile of the bound
//!   over many with-replacement resamples.
//! - [`simulation`] — a reproducible Monte Carlo harness that measures how
//!   often each method under-estimates the true risk.
//! - [`specfun`], [`distributions`], [`estimation`] — the numerical kernels,
//!   test distributions and summary statistics everything else builds on.
//!
//! All randomized operations draw from explicit [`rng::RandomStream`] states,
//! so every result is bit-reproducible for a given seed, independent of
//! thread count.

pub mod bootstrap;
pub mod concentration;
pub mod distributions;
pub mod estimation;
pub mod rng;
pub mod simulation;
pub mod specfun;
pub mod tolerance;
pub mod wilks;

mod par;

pub use bootstrap::{bootstrap_bound, resample, BootstrapConfig};
pub use concentration::{
    concentration_bound, gaussian_risk, plugin_bound, threshold_for_risk, BoundMethod,
    Inequality, Provenance, RiskBound,
};
pub use distributions::{lognormal_internal, mean_for_mode, DistributionSpec, Family};
pub use estimation::{order_statistic, summarize, MomentEstimates, Sample};
pub use rng::RandomStream;
pub use simulation::{
    known_moments_study, sampling_study, wilks_nonconservative_bound, KnownMomentsRow,
    Penalization, StudyConfig, StudyResult,
};
pub use specfun::{NoncentralTParams, Probability};
pub use tolerance::{alpha_from_kfactor, k_factor, KFactorQuery, KFactorSolution};
pub use wilks::{wilks_assess, wilks_confidence, wilks_gamma, wilks_min_n, WilksPlan};

/// Errors produced by the statistical routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A parameter lies outside its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// The input data cannot support the requested computation
    /// (too few values, non-finite entries, zero spread, ...).
    #[error("data error: {0}")]
    Data(String),
    /// An iterative routine failed to converge or to bracket a root.
    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;
