//! One-sided normal-theory tolerance factors (Owen's k-factor method).
//!
//! For a Gaussian population, mu_hat + k sigma_hat covers at least the
//! (1-alpha) quantile with confidence beta when
//!
//! ```text
//! k = t_{n-1, beta, delta} / sqrt(n),   delta = z_{1-alpha} sqrt(n),
//! ```
//!
//! with t the noncentral t quantile. The inverse problem — given an observed
//! factor k_obs = (s - mu_hat)/sigma_hat, find the alpha it certifies at
//! confidence beta — is what risk assessment actually needs, and is solved
//! here by bisection.

use crate::specfun::{
    noncentral_t_cdf_raw, noncentral_t_quantile, std_normal_quantile_raw, NoncentralTParams,
    Probability,
};
use crate::{Error, Result};

/// Inputs of the forward k-factor computation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KFactorQuery {
    n: usize,
    alpha: Probability,
    beta: Probability,
}

impl KFactorQuery {
    pub fn new(n: usize, alpha: Probability, beta: Probability) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!(
                "k-factor needs a sample size of at least 2, got {n}"
            )));
        }
        for (name, p) in [("alpha", alpha.value()), ("beta", beta.value())] {
            if p <= 0.0 || p >= 1.0 {
                return Err(Error::Domain(format!(
                    "{name} must lie strictly inside (0, 1), got {p}"
                )));
            }
        }
        Ok(Self { n, alpha, beta })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> Probability {
        self.alpha
    }

    pub fn beta(&self) -> Probability {
        self.beta
    }
}

/// One-sided tolerance factor k such that mu_hat + k sigma_hat exceeds the
/// (1-alpha) quantile of a normal population with probability beta.
pub fn k_factor(query: &KFactorQuery) -> Result<f64> {
    let n = query.n as f64;
    let delta = std_normal_quantile_raw(1.0 - query.alpha.value()) * n.sqrt();
    let params = NoncentralTParams::new(query.n as u64 - 1, delta)?;
    Ok(noncentral_t_quantile(query.beta, &params)? / n.sqrt())
}

/// Result of inverting the k-factor equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KFactorSolution {
    pub alpha: Probability,
    /// Set when the observed factor certifies nothing useful: the threshold
    /// sits at or below the sample mean (alpha >= 1/2), or below the
    /// solvable range entirely.
    pub vacuous: bool,
}

/// The alpha solving k_factor(n, alpha, beta) = k_obs.
///
/// Bisection on alpha in (1e-10, 1 - 1e-10) to 1e-8. Each iterate costs one
/// noncentral t CDF evaluation: k(alpha, beta) = k_obs is equivalent to
/// F(k_obs sqrt(n); n-1, z_{1-alpha} sqrt(n)) = beta, and that left side is
/// strictly increasing in alpha.
pub fn alpha_from_kfactor(n: usize, k_obs: f64, beta: Probability) -> Result<KFactorSolution> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "k-factor inversion needs a sample size of at least 2, got {n}"
        )));
    }
    if !k_obs.is_finite() {
        return Err(Error::Domain(format!("k_obs must be finite, got {k_obs}")));
    }
    let b = beta.value();
    if b <= 0.0 || b >= 1.0 {
        return Err(Error::Domain(format!(
            "beta must lie strictly inside (0, 1), got {b}"
        )));
    }

    const LO: f64 = 1e-10;
    const HI: f64 = 1.0 - 1e-10;
    let nf = n as f64;
    let nu = nf - 1.0;
    let x0 = k_obs * nf.sqrt();
    let residual = |alpha: f64| -> Result<f64> {
        let delta = std_normal_quantile_raw(1.0 - alpha) * nf.sqrt();
        Ok(noncentral_t_cdf_raw(x0, nu, delta)? - b)
    };

    if residual(LO)? >= 0.0 {
        // k_obs is above anything solvable: report the smallest alpha.
        return Ok(KFactorSolution {
            alpha: Probability::new(LO)?,
            vacuous: false,
        });
    }
    if residual(HI)? <= 0.0 {
        // Below the solvable range: nothing better than alpha ~ 1.
        return Ok(KFactorSolution {
            alpha: Probability::new(HI)?,
            vacuous: true,
        });
    }

    let (mut lo, mut hi) = (LO, HI);
    let mut iterations = 0usize;
    while hi - lo > 1e-8 {
        let mid = 0.5 * (lo + hi);
        if residual(mid)? < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
        if iterations > 200 {
            return Err(Error::Numerical(
                "k-factor inversion did not converge".into(),
            ));
        }
    }
    let alpha = 0.5 * (lo + hi);
    Ok(KFactorSolution {
        alpha: Probability::new(alpha)?,
        vacuous: k_obs <= 0.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn prob(p: f64) -> Probability {
        Probability::new(p).unwrap()
    }

    #[test]
    fn k_factor_reference_value() {
        // Published one-sided tolerance factor for n = 10, 95% coverage,
        // 95% confidence.
        let q = KFactorQuery::new(10, prob(0.05), prob(0.95)).unwrap();
        assert_abs_diff_eq!(k_factor(&q).unwrap(), 2.911, epsilon = 2e-3);
    }

    #[test]
    fn k_factor_large_n_approaches_z() {
        let q = KFactorQuery::new(100_000, prob(0.05), prob(0.95)).unwrap();
        assert_abs_diff_eq!(k_factor(&q).unwrap(), 1.6449, epsilon = 0.01);
    }

    #[test]
    fn k_factor_median_confidence_near_z_for_large_n() {
        let q = KFactorQuery::new(1000, prob(0.05), prob(0.5)).unwrap();
        let k = k_factor(&q).unwrap();
        let z = 1.644_853_626_951_472_2;
        assert!((k - z).abs() / z < 0.02, "k = {k}");
    }

    #[test]
    fn k_factor_monotone_in_beta_and_n_and_alpha() {
        let betas = [0.5, 0.75, 0.9, 0.95, 0.99];
        let mut prev = f64::NEG_INFINITY;
        for b in betas {
            let k = k_factor(&KFactorQuery::new(10, prob(0.05), prob(b)).unwrap()).unwrap();
            assert!(k > prev, "k should increase with beta");
            prev = k;
        }
        let k10 = k_factor(&KFactorQuery::new(10, prob(0.05), prob(0.95)).unwrap()).unwrap();
        let k30 = k_factor(&KFactorQuery::new(30, prob(0.05), prob(0.95)).unwrap()).unwrap();
        assert!(k30 < k10, "k should decrease with n");
        let k_a10 = k_factor(&KFactorQuery::new(10, prob(0.10), prob(0.95)).unwrap()).unwrap();
        assert!(k_a10 < k10, "k should decrease with alpha");
    }

    #[test]
    fn alpha_inversion_round_trips() {
        for n in [5usize, 10, 21, 38] {
            for alpha in [0.01, 0.05, 0.2, 0.4] {
                for beta in [0.78, 0.95] {
                    let q = KFactorQuery::new(n, prob(alpha), prob(beta)).unwrap();
                    let k = k_factor(&q).unwrap();
                    let sol = alpha_from_kfactor(n, k, prob(beta)).unwrap();
                    assert_abs_diff_eq!(sol.alpha.value(), alpha, epsilon = 1e-6);
                    assert!(!sol.vacuous);
                }
            }
        }
    }

    #[test]
    fn flow_rate_inversion_round_trips() {
        let k_obs = (10.0 - 2.18) / 2.67;
        let sol = alpha_from_kfactor(38, k_obs, prob(0.95)).unwrap();
        assert!(sol.alpha.value() > 0.0 && sol.alpha.value() < 0.5);
        let q = KFactorQuery::new(38, sol.alpha, prob(0.95)).unwrap();
        assert_abs_diff_eq!(k_factor(&q).unwrap(), k_obs, epsilon = 1e-5);
    }

    #[test]
    fn nonpositive_k_obs_is_vacuous() {
        let sol = alpha_from_kfactor(10, 0.0, prob(0.95)).unwrap();
        assert!(sol.vacuous);
        assert!(sol.alpha.value() >= 0.5);
        let sol = alpha_from_kfactor(10, -1.5, prob(0.95)).unwrap();
        assert!(sol.vacuous);
        assert!(sol.alpha.value() > 0.5);
    }

    #[test]
    fn invalid_queries_are_rejected() {
        assert!(KFactorQuery::new(1, prob(0.05), prob(0.95)).is_err());
        assert!(KFactorQuery::new(10, prob(0.0), prob(0.95)).is_err());
        assert!(alpha_from_kfactor(1, 1.0, prob(0.95)).is_err());
        assert!(alpha_from_kfactor(10, f64::NAN, prob(0.95)).is_err());
        assert!(alpha_from_kfactor(10, 1.0, prob(1.0)).is_err());
    }
}
