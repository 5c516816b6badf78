//! Closed-form risk bounds from mean and standard deviation.
//!
//! For a threshold s above the mean, with t = s - mean, each concentration
//! inequality bounds the exceedance probability by
//!
//! ```text
//! P(X >= s) <= 1 / (1 + t^2 / (k sd^2))
//! ```
//!
//! with k = 1 for Bienaymé-Chebyshev/Cantelli (no shape assumptions),
//! k = 4/9 for Camp-Meidell (unimodal density) and k = 3/8 for Van Dantzig
//! (convex density tail). The Gaussian "bound" 1 - Phi((s - mean)/sd) is the
//! exact risk when the data really are normal and is reported alongside for
//! comparison; on skewed data with plug-in moments it routinely understates
//! the risk.

use std::fmt;
use std::str::FromStr;

use crate::specfun::{std_normal_cdf_raw, std_normal_quantile_raw, Probability};
use crate::tolerance;
use crate::{Error, Result};

/// Moment-only concentration inequalities and their k constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Inequality {
    /// Bienaymé-Chebyshev/Cantelli, k = 1. No density assumptions.
    Bc,
    /// Camp-Meidell, k = 4/9. Assumes a unimodal density.
    Cm,
    /// Van Dantzig, k = 3/8. Assumes the density tail is convex.
    Vd,
}

impl Inequality {
    pub const fn k(self) -> f64 {
        match self {
            Inequality::Bc => 1.0,
            Inequality::Cm => 4.0 / 9.0,
            Inequality::Vd => 3.0 / 8.0,
        }
    }
}

/// Every bound-producing method the toolkit reports on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundMethod {
    Gauss,
    Bc,
    Cm,
    Vd,
    KFactor,
}

impl BoundMethod {
    /// The concentration constant, when the method is one of the
    /// moment-only inequalities.
    pub fn inequality(self) -> Option<Inequality> {
        match self {
            BoundMethod::Bc => Some(Inequality::Bc),
            BoundMethod::Cm => Some(Inequality::Cm),
            BoundMethod::Vd => Some(Inequality::Vd),
            _ => None,
        }
    }
}

impl fmt::Display for BoundMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            BoundMethod::Gauss => "gauss",
            BoundMethod::Bc => "bc",
            BoundMethod::Cm => "cm",
            BoundMethod::Vd => "vd",
            BoundMethod::KFactor => "kfactor",
        };
        write!(f, "{name}")
    }
}

impl FromStr for BoundMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gauss" => Ok(BoundMethod::Gauss),
            "bc" => Ok(BoundMethod::Bc),
            "cm" => Ok(BoundMethod::Cm),
            "vd" => Ok(BoundMethod::Vd),
            "kfactor" => Ok(BoundMethod::KFactor),
            other => Err(Error::Domain(format!(
                "unknown method {other:?} (expected gauss|bc|cm|vd|kfactor)"
            ))),
        }
    }
}

/// Where the moments behind a bound came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// True distribution moments.
    ExactMoments,
    /// Empirical moments substituted directly.
    PluginMoments,
    /// High quantile over bootstrap resamples.
    Bootstrap,
}

/// A computed risk bound: P(X >= threshold) <= alpha.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiskBound {
    pub method: BoundMethod,
    pub threshold: f64,
    pub alpha: Probability,
    /// Confidence level (present for bootstrap-penalized and k-factor
    /// bounds).
    pub confidence: Option<Probability>,
    pub provenance: Provenance,
    /// True when the threshold does not exceed the mean in use, so the
    /// inequality carries no information (alpha = 1).
    pub vacuous: bool,
}

impl RiskBound {
    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }
}

/// Risk bound from one of the concentration inequalities with the given
/// moments. A threshold at or below the mean yields alpha = 1, flagged
/// vacuous, rather than an error, so batch reports never abort.
pub fn concentration_bound(ineq: Inequality, mean: f64, sd: f64, s: f64) -> Result<RiskBound> {
    check_moments(mean, sd, s)?;
    let t = s - mean;
    let (alpha, vacuous) = if t <= 0.0 {
        (1.0, true)
    } else {
        (1.0 / (1.0 + t * t / (ineq.k() * sd * sd)), false)
    };
    Ok(RiskBound {
        method: match ineq {
            Inequality::Bc => BoundMethod::Bc,
            Inequality::Cm => BoundMethod::Cm,
            Inequality::Vd => BoundMethod::Vd,
        },
        threshold: s,
        alpha: Probability::new(alpha)?,
        confidence: None,
        provenance: Provenance::PluginMoments,
        vacuous,
    })
}

/// Exceedance probability under the normal model with the given moments:
/// alpha = 1 - Phi((s - mean)/sd). Exact for Gaussian data, not a bound for
/// anything else; defined for every s, never vacuous.
pub fn gaussian_risk(mean: f64, sd: f64, s: f64) -> Result<RiskBound> {
    check_moments(mean, sd, s)?;
    let alpha = 1.0 - std_normal_cdf_raw((s - mean) / sd);
    Ok(RiskBound {
        method: BoundMethod::Gauss,
        threshold: s,
        alpha: Probability::new(alpha)?,
        confidence: None,
        provenance: Provenance::PluginMoments,
        vacuous: false,
    })
}

/// Inverse of the forward bounds: the threshold whose bound equals `alpha`.
///
/// For the concentration inequalities s = mean + sd sqrt(k (1-alpha)/alpha);
/// for the Gaussian method s = mean + sd z_{1-alpha}. The k-factor method
/// has no closed inverse here (it depends on the sample size).
pub fn threshold_for_risk(
    method: BoundMethod,
    mean: f64,
    sd: f64,
    alpha: Probability,
) -> Result<f64> {
    let a = alpha.value();
    if a <= 0.0 || a >= 1.0 {
        return Err(Error::Domain(format!(
            "threshold_for_risk requires 0 < alpha < 1, got {a}"
        )));
    }
    if !(sd > 0.0) || !mean.is_finite() || !sd.is_finite() {
        return Err(Error::Domain("mean must be finite and sd positive".into()));
    }
    match method {
        BoundMethod::Gauss => Ok(mean + sd * std_normal_quantile_raw(1.0 - a)),
        BoundMethod::KFactor => Err(Error::Domain(
            "threshold_for_risk is not defined for the k-factor method".into(),
        )),
        m => {
            let k = m.inequality().expect("concentration method").k();
            Ok(mean + sd * (k * (1.0 - a) / a).sqrt())
        }
    }
}

/// One plug-in bound from summary statistics, dispatched on method.
///
/// `confidence` is required by the k-factor method (its tolerance level) and
/// ignored by the others. `n` is only used by the k-factor method.
pub fn plugin_bound(
    method: BoundMethod,
    n: usize,
    mean: f64,
    sd: f64,
    s: f64,
    confidence: Option<Probability>,
) -> Result<RiskBound> {
    match method {
        BoundMethod::Gauss => gaussian_risk(mean, sd, s),
        BoundMethod::Bc | BoundMethod::Cm | BoundMethod::Vd => {
            concentration_bound(method.inequality().expect("concentration"), mean, sd, s)
        }
        BoundMethod::KFactor => {
            let beta = confidence.ok_or_else(|| {
                Error::Domain("the k-factor method needs a confidence level".into())
            })?;
            check_moments(mean, sd, s)?;
            let sol = tolerance::alpha_from_kfactor(n, (s - mean) / sd, beta)?;
            Ok(RiskBound {
                method: BoundMethod::KFactor,
                threshold: s,
                alpha: sol.alpha,
                confidence: Some(beta),
                provenance: Provenance::PluginMoments,
                vacuous: sol.vacuous,
            })
        }
    }
}

fn check_moments(mean: f64, sd: f64, s: f64) -> Result<()> {
    if !mean.is_finite() || !s.is_finite() {
        return Err(Error::Domain("mean and threshold must be finite".into()));
    }
    if !(sd > 0.0) || !sd.is_finite() {
        return Err(Error::Domain(format!("sd must be positive, got {sd}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn prob(p: f64) -> Probability {
        Probability::new(p).unwrap()
    }

    #[test]
    fn case_study_row_one() {
        // 21 activity measures: mean 31.45, sd 36.11, threshold 100.
        let bc = concentration_bound(Inequality::Bc, 31.45, 36.11, 100.0).unwrap();
        let cm = concentration_bound(Inequality::Cm, 31.45, 36.11, 100.0).unwrap();
        let vd = concentration_bound(Inequality::Vd, 31.45, 36.11, 100.0).unwrap();
        assert_abs_diff_eq!(bc.alpha.value(), 0.217, epsilon = 5e-4);
        assert_abs_diff_eq!(cm.alpha.value(), 0.110, epsilon = 5e-4);
        assert_abs_diff_eq!(vd.alpha.value(), 0.094, epsilon = 5e-4);
        assert!(!bc.vacuous);
    }

    #[test]
    fn flow_rate_row_one_bc() {
        let bc = concentration_bound(Inequality::Bc, 2.18, 2.67, 10.0).unwrap();
        // 1/(1 + 7.82^2/2.67^2)
        assert_abs_diff_eq!(bc.alpha.value(), 0.104_404_86, epsilon = 1e-6);
    }

    #[test]
    fn threshold_at_mean_is_vacuous() {
        for ineq in [Inequality::Bc, Inequality::Cm, Inequality::Vd] {
            let b = concentration_bound(ineq, 5.0, 2.0, 5.0).unwrap();
            assert_eq!(b.alpha.value(), 1.0);
            assert!(b.vacuous);
        }
        let below = concentration_bound(Inequality::Bc, 5.0, 2.0, 3.0).unwrap();
        assert!(below.vacuous);
    }

    #[test]
    fn gaussian_risk_reference_points() {
        let spec = crate::distributions::DistributionSpec::new(
            crate::distributions::Family::Normal,
            210.0,
            20.0,
        )
        .unwrap();
        let q95 = spec.quantile(prob(0.95)).unwrap();
        let g = gaussian_risk(210.0, 20.0, q95).unwrap();
        assert_abs_diff_eq!(g.alpha.value(), 0.05, epsilon = 1e-9);
        let at_mean = gaussian_risk(210.0, 20.0, 210.0).unwrap();
        assert_abs_diff_eq!(at_mean.alpha.value(), 0.5, epsilon = 1e-12);
        assert!(!at_mean.vacuous);
    }

    #[test]
    fn bound_ordering_bc_cm_vd() {
        let mut stream = crate::rng::RandomStream::new(2024);
        for _ in 0..10_000 {
            let mean = 200.0 * stream.next_open01() - 100.0;
            let sd = 50.0 * stream.next_open01() + 1e-3;
            let s = mean + 100.0 * stream.next_open01() + 1e-6;
            let bc = concentration_bound(Inequality::Bc, mean, sd, s).unwrap();
            let cm = concentration_bound(Inequality::Cm, mean, sd, s).unwrap();
            let vd = concentration_bound(Inequality::Vd, mean, sd, s).unwrap();
            assert!(bc.alpha.value() >= cm.alpha.value());
            assert!(cm.alpha.value() >= vd.alpha.value());
        }
    }

    #[test]
    fn alpha_decreases_in_threshold() {
        let mut prev = f64::INFINITY;
        for i in 1..100 {
            let s = 31.45 + i as f64;
            let a = concentration_bound(Inequality::Cm, 31.45, 36.11, s)
                .unwrap()
                .alpha
                .value();
            assert!(a < prev);
            prev = a;
        }
    }

    #[test]
    fn gaussian_k_identity() {
        // With k = z^2 alpha/(1-alpha), the generic bound at t = sd z equals
        // alpha exactly.
        for i in 1..=50 {
            let alpha = i as f64 / 100.0;
            let z = std_normal_quantile_raw(1.0 - alpha);
            let k = z * z * alpha / (1.0 - alpha);
            let sd: f64 = 3.7;
            let t = sd * z;
            let bound = 1.0 / (1.0 + t * t / (k * sd * sd));
            assert_abs_diff_eq!(bound, alpha, epsilon = 1e-12);
        }
    }

    #[test]
    fn threshold_for_risk_round_trips() {
        let mut stream = crate::rng::RandomStream::new(99);
        for _ in 0..1000 {
            let mean = 10.0 * stream.next_open01();
            let sd = 5.0 * stream.next_open01() + 0.01;
            let alpha = 0.98 * stream.next_open01() + 0.01;
            for method in [BoundMethod::Bc, BoundMethod::Cm, BoundMethod::Vd] {
                let s = threshold_for_risk(method, mean, sd, prob(alpha)).unwrap();
                let back = concentration_bound(method.inequality().unwrap(), mean, sd, s)
                    .unwrap()
                    .alpha
                    .value();
                assert_abs_diff_eq!(back, alpha, epsilon = 1e-10);
            }
            let s = threshold_for_risk(BoundMethod::Gauss, mean, sd, prob(alpha)).unwrap();
            let back = gaussian_risk(mean, sd, s).unwrap().alpha.value();
            assert_abs_diff_eq!(back, alpha, epsilon = 1e-9);
        }
    }

    #[test]
    fn threshold_for_risk_bc_closed_form() {
        let s = threshold_for_risk(BoundMethod::Bc, 0.0, 1.0, prob(0.05)).unwrap();
        assert_abs_diff_eq!(s, 19.0_f64.sqrt(), epsilon = 1e-12);
        let s = threshold_for_risk(BoundMethod::Cm, 31.45, 36.11, prob(0.110)).unwrap();
        assert_abs_diff_eq!(s, 100.0, epsilon = 0.2);
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        assert!(concentration_bound(Inequality::Bc, 0.0, 0.0, 1.0).is_err());
        assert!(gaussian_risk(0.0, -1.0, 1.0).is_err());
        assert!(threshold_for_risk(BoundMethod::Bc, 0.0, 1.0, prob(0.0)).is_err());
        assert!(threshold_for_risk(BoundMethod::KFactor, 0.0, 1.0, prob(0.1)).is_err());
    }

    #[test]
    fn method_names_parse_and_display() {
        for (name, method) in [
            ("gauss", BoundMethod::Gauss),
            ("bc", BoundMethod::Bc),
            ("cm", BoundMethod::Cm),
            ("vd", BoundMethod::Vd),
            ("kfactor", BoundMethod::KFactor),
        ] {
            assert_eq!(name.parse::<BoundMethod>().unwrap(), method);
            assert_eq!(method.to_string(), name);
        }
        assert!("wilks".parse::<BoundMethod>().is_err());
    }
}
