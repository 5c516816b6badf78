//! Test distributions: normal and log-normal, parametrized by their actual
//! mean and standard deviation, with deterministic inverse-transform
//! sampling.
//!
//! The log-normal here is always specified by the mean/sd of the variable
//! itself (not of its logarithm); [`lognormal_internal`] converts to the
//! underlying normal parameters, and [`mean_for_mode`] solves for the mean
//! that puts the density peak at a requested location.

use std::fmt;
use std::str::FromStr;

use crate::estimation::Sample;
use crate::rng::RandomStream;
use crate::specfun::{std_normal_cdf_raw, std_normal_quantile_raw, Probability};
use crate::{Error, Result};

/// Distribution family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Normal,
    LogNormal,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Normal => write!(f, "normal"),
            Family::LogNormal => write!(f, "lognormal"),
        }
    }
}

/// A distribution given by family, mean and standard deviation.
///
/// Serializes as `family:mean:sd` (e.g. `lognormal:237.86:70`) in CLI flags
/// and reports.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistributionSpec {
    family: Family,
    mean: f64,
    sd: f64,
}

impl DistributionSpec {
    pub fn new(family: Family, mean: f64, sd: f64) -> Result<Self> {
        if !mean.is_finite() || !sd.is_finite() {
            return Err(Error::Domain("mean and sd must be finite".into()));
        }
        if sd <= 0.0 {
            return Err(Error::Domain(format!("sd must be positive, got {sd}")));
        }
        if family == Family::LogNormal && mean <= 0.0 {
            return Err(Error::Domain(format!(
                "log-normal mean must be positive, got {mean}"
            )));
        }
        Ok(Self { family, mean, sd })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    pub fn sd(&self) -> f64 {
        self.sd
    }

    /// CDF at `x`.
    pub fn cdf(&self, x: f64) -> Probability {
        let p = match self.family {
            Family::Normal => std_normal_cdf_raw((x - self.mean) / self.sd),
            Family::LogNormal => {
                if x <= 0.0 {
                    0.0
                } else {
                    let ln = lognormal_internal_raw(self.mean, self.sd);
                    std_normal_cdf_raw((x.ln() - ln.log_mean) / ln.log_sd)
                }
            }
        };
        Probability::new(p).expect("cdf is a probability")
    }

    /// Quantile at order `p` (requires 0 < p < 1).
    pub fn quantile(&self, p: Probability) -> Result<f64> {
        let pv = p.value();
        if pv <= 0.0 || pv >= 1.0 {
            return Err(Error::Domain(format!(
                "quantile requires 0 < p < 1, got {pv}"
            )));
        }
        let z = std_normal_quantile_raw(pv);
        Ok(match self.family {
            Family::Normal => self.mean + self.sd * z,
            Family::LogNormal => {
                let ln = lognormal_internal_raw(self.mean, self.sd);
                (ln.log_mean + ln.log_sd * z).exp()
            }
        })
    }

    /// Probability density at `x`.
    pub fn pdf(&self, x: f64) -> f64 {
        const INV_SQRT_2PI: f64 = 0.398_942_280_401_432_7;
        match self.family {
            Family::Normal => {
                let z = (x - self.mean) / self.sd;
                INV_SQRT_2PI / self.sd * (-0.5 * z * z).exp()
            }
            Family::LogNormal => {
                if x <= 0.0 {
                    0.0
                } else {
                    let ln = lognormal_internal_raw(self.mean, self.sd);
                    let z = (x.ln() - ln.log_mean) / ln.log_sd;
                    INV_SQRT_2PI / (x * ln.log_sd) * (-0.5 * z * z).exp()
                }
            }
        }
    }

    /// Location of the density maximum.
    pub fn mode(&self) -> f64 {
        match self.family {
            Family::Normal => self.mean,
            Family::LogNormal => {
                // exp(mu_L - sigma_L^2) = mean / (1 + sd^2/mean^2)^(3/2)
                let q = 1.0 + (self.sd / self.mean) * (self.sd / self.mean);
                self.mean / q.powf(1.5)
            }
        }
    }

    /// Draw `n` values by inverse transform: one open-interval uniform per
    /// value, pushed through the quantile function. Bit-reproducible for a
    /// given stream state.
    pub fn sample(&self, stream: &mut RandomStream, n: usize) -> Sample {
        let values: Vec<f64> = (0..n)
            .map(|_| {
                let u = stream.next_open01();
                self.quantile(Probability::new(u).expect("u in (0,1)"))
                    .expect("u strictly inside (0,1)")
            })
            .collect();
        Sample::new(values).expect("n >= 1 finite draws")
    }
}

impl fmt::Display for DistributionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.family, self.mean, self.sd)
    }
}

impl FromStr for DistributionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(Error::Domain(format!(
                "distribution must be family:mean:sd, got {s:?}"
            )));
        }
        let family = match parts[0].to_ascii_lowercase().as_str() {
            "normal" => Family::Normal,
            "lognormal" => Family::LogNormal,
            other => {
                return Err(Error::Domain(format!(
                    "unknown family {other:?} (expected normal or lognormal)"
                )))
            }
        };
        let mean: f64 = parts[1]
            .parse()
            .map_err(|_| Error::Domain(format!("invalid mean {:?}", parts[1])))?;
        let sd: f64 = parts[2]
            .parse()
            .map_err(|_| Error::Domain(format!("invalid sd {:?}", parts[2])))?;
        DistributionSpec::new(family, mean, sd)
    }
}

/// Parameters of the normal distribution underlying a log-normal variable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogNormalInternal {
    /// Mean of log X.
    pub log_mean: f64,
    /// Standard deviation of log X.
    pub log_sd: f64,
}

fn lognormal_internal_raw(mean: f64, sd: f64) -> LogNormalInternal {
    let log_var = (1.0 + (sd / mean) * (sd / mean)).ln();
    LogNormalInternal {
        log_mean: mean.ln() - 0.5 * log_var,
        log_sd: log_var.sqrt(),
    }
}

/// Underlying normal parameters of a log-normal spec:
/// sigma_L^2 = ln(1 + sd^2/mean^2), mu_L = ln(mean) - sigma_L^2/2.
pub fn lognormal_internal(spec: &DistributionSpec) -> Result<LogNormalInternal> {
    if spec.family != Family::LogNormal {
        return Err(Error::Domain(
            "lognormal_internal requires a log-normal spec".into(),
        ));
    }
    Ok(lognormal_internal_raw(spec.mean, spec.sd))
}

/// The unique mean m for which LogNormal(m, sd) has its density maximum at
/// `mode`. Solved by bisection on m in [mode, mode + 10 sd] to 1e-8 relative
/// width (the mode is strictly increasing in the mean).
pub fn mean_for_mode(mode: f64, sd: f64) -> Result<f64> {
    if !(mode > 0.0) || !(sd > 0.0) {
        return Err(Error::Domain(format!(
            "mean_for_mode requires mode > 0 and sd > 0, got mode = {mode}, sd = {sd}"
        )));
    }
    let mode_of = |m: f64| {
        let q = 1.0 + (sd / m) * (sd / m);
        m / q.powf(1.5)
    };
    let mut lo = mode;
    let mut hi = mode + 10.0 * sd;
    if mode_of(hi) < mode {
        return Err(Error::Numerical(format!(
            "mean_for_mode failed to bracket (mode = {mode}, sd = {sd})"
        )));
    }
    while hi - lo > 1e-8 * lo {
        let mid = 0.5 * (lo + hi);
        if mode_of(mid) < mode {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
