//! Order-statistic tolerance limits (Wilks' method).
//!
//! For an i.i.d. sample of size n sorted increasingly, the rank-r value
//! upper-bounds the gamma-quantile of the population with confidence
//!
//! ```text
//! G(gamma) = P(Binomial(n, gamma) <= r - 1)
//!          = sum_{i=0}^{r-1} C(n,i) gamma^i (1-gamma)^{n-i},
//! ```
//!
//! which for r = n (the sample maximum) reduces to 1 - gamma^n. The plan is
//! accepted when G(gamma) >= beta. Expressed through the order o of the
//! statistic counted from the top, r = n - o + 1: first order means the
//! maximum, second order the second-largest value, and so on.
//!
//! No distributional assumptions are made anywhere in this module.

use crate::estimation::{order_statistic, Sample};
use crate::specfun::{binomial_cdf, Probability};
use crate::{Error, Result};

/// A consistent order-statistic tolerance plan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WilksPlan {
    pub n: usize,
    /// Position counted from the top: 1 = maximum.
    pub order: usize,
    /// Rank from the bottom: n - order + 1.
    pub rank: usize,
    pub gamma: Probability,
    pub beta: Probability,
}

/// Outcome of assessing an existing sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WilksAssessment {
    /// The rank-(n-order+1) sample value serving as the quantile upper
    /// bound.
    pub threshold: f64,
    /// Risk level 1 - gamma certified at confidence beta.
    pub alpha: Probability,
    pub plan: WilksPlan,
}

/// Confidence G(gamma) that the rank-`rank` sample value upper-bounds the
/// gamma-quantile, for a sample of size `n`.
pub fn wilks_confidence(n: usize, rank: usize, gamma: Probability) -> Result<Probability> {
    if n < 1 {
        return Err(Error::Domain("sample size must be at least 1".into()));
    }
    if rank < 1 || rank > n {
        return Err(Error::Domain(format!(
            "rank must lie in 1..={n}, got {rank}"
        )));
    }
    binomial_cdf(n as u64, (rank - 1) as u64, gamma)
}

/// Smallest sample size n for which the order-`order` statistic from the
/// top upper-bounds the gamma-quantile with confidence at least beta.
///
/// For order 1 this is the smallest n with 1 - gamma^n >= beta, i.e.
/// ceil(ln(1-beta)/ln(gamma)).
pub fn wilks_min_n(gamma: Probability, beta: Probability, order: usize) -> Result<usize> {
    let (g, b) = (gamma.value(), beta.value());
    if g <= 0.0 || g >= 1.0 || b <= 0.0 || b >= 1.0 {
        return Err(Error::Domain(
            "gamma and beta must lie strictly inside (0, 1)".into(),
        ));
    }
    if order < 1 {
        return Err(Error::Domain("order must be at least 1".into()));
    }
    let mut n = order;
    loop {
        let rank = n - order + 1;
        if wilks_confidence(n, rank, gamma)?.value() >= b {
            return Ok(n);
        }
        n += 1;
        if n > 10_000_000 {
            return Err(Error::Numerical(
                "wilks_min_n exceeded 10^7 without reaching the requested confidence".into(),
            ));
        }
    }
}

/// The gamma at which the confidence G(gamma) equals beta, by bisection.
///
/// G is strictly decreasing in gamma from 1 to 0, so the root is unique.
/// The returned value is the lower bisection endpoint at width 1e-8, which
/// keeps the plan invariant G(gamma) >= beta true exactly.
pub fn wilks_gamma(n: usize, rank: usize, beta: Probability) -> Result<Probability> {
    if n < 1 || rank < 1 || rank > n {
        return Err(Error::Domain(format!(
            "rank must lie in 1..={n}, got {rank}"
        )));
    }
    let b = beta.value();
    if b <= 0.0 || b >= 1.0 {
        return Err(Error::Domain(format!(
            "beta must lie strictly inside (0, 1), got {b}"
        )));
    }
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    while hi - lo > 1e-8 {
        let mid = 0.5 * (lo + hi);
        let g = wilks_confidence(n, rank, Probability::new(mid)?)?.value();
        if g >= b {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Probability::new(lo)
}

/// Assess an existing sample: the order-`order` statistic from the top is a
/// quantile upper bound; report it with the risk level it certifies at
/// confidence beta.
pub fn wilks_assess(sample: &Sample, order: usize, beta: Probability) -> Result<WilksAssessment> {
    let n = sample.len();
    if order < 1 || order > n {
        return Err(Error::Domain(format!(
            "order must lie in 1..={n}, got {order}"
        )));
    }
    let rank = n - order + 1;
    let threshold = order_statistic(sample, rank)?;
    let gamma = wilks_gamma(n, rank, beta)?;
    Ok(WilksAssessment {
        threshold,
        alpha: gamma.complement(),
        plan: WilksPlan {
            n,
            order,
            rank,
            gamma,
            beta,
        },
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
    fn first_order_confidence_is_one_minus_gamma_pow_n() {
        for n in [5usize, 21, 38, 59] {
            for g in [0.5, 0.867, 0.95, 0.99] {
                let conf = wilks_confidence(n, n, prob(g)).unwrap().value();
                assert_abs_diff_eq!(conf, 1.0 - g.powi(n as i32), epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn case_study_confidences() {
        assert_abs_diff_eq!(
            wilks_confidence(21, 21, prob(0.867)).unwrap().value(),
            0.950,
            epsilon = 1e-3
        );
        assert_abs_diff_eq!(
            wilks_confidence(21, 20, prob(0.793)).unwrap().value(),
            0.950,
            epsilon = 1e-3
        );
        assert_abs_diff_eq!(
            wilks_confidence(38, 37, prob(0.881)).unwrap().value(),
            0.950,
            epsilon = 1e-3
        );
    }

    #[test]
    fn min_n_first_order_reference_table() {
        let cases = [
            (0.9, 0.5, 7),
            (0.9, 0.9, 22),
            (0.9, 0.95, 29),
            (0.95, 0.4, 10),
            (0.95, 0.5, 14),
            (0.95, 0.78, 30),
            (0.95, 0.95, 59),
            (0.99, 0.95, 299),
            (0.99, 0.99, 459),
        ];
        for (g, b, expected) in cases {
            assert_eq!(
                wilks_min_n(prob(g), prob(b), 1).unwrap(),
                expected,
                "gamma = {g}, beta = {b}"
            );
        }
    }

    #[test]
    fn min_n_matches_closed_form_for_first_order() {
        let mut stream = crate::rng::RandomStream::new(5);
        for _ in 0..200 {
            let g = 0.5 + 0.49 * stream.next_open01();
            let b = 0.3 + 0.69 * stream.next_open01();
            let n = wilks_min_n(prob(g), prob(b), 1).unwrap();
            let closed = ((1.0 - b).ln() / g.ln()).ceil() as usize;
            assert_eq!(n, closed.max(1), "gamma = {g}, beta = {b}");
        }
    }

    #[test]
    fn min_n_second_order() {
        // Smallest n with P(Bin(n, 0.95) <= n-2) >= 0.95; brute-force direct
        // summation in tests/oracles.rs cross-checks the value.
        let n = wilks_min_n(prob(0.95), prob(0.95), 2).unwrap();
        assert_eq!(n, 93);
        // Consistency at the boundary.
        assert!(wilks_confidence(93, 92, prob(0.95)).unwrap().value() >= 0.95);
        assert!(wilks_confidence(92, 91, prob(0.95)).unwrap().value() < 0.95);
    }

    #[test]
    fn gamma_inversion_case_study_values() {
        // alpha = 1 - gamma
        let g = wilks_gamma(21, 21, prob(0.95)).unwrap().value();
        assert_abs_diff_eq!(g, 0.8671, epsilon = 1e-3);
        assert_abs_diff_eq!(1.0 - g, 0.133, epsilon = 1e-3);

        let g = wilks_gamma(38, 38, prob(0.95)).unwrap().value();
        assert_abs_diff_eq!(g, 0.9242, epsilon = 1e-3);

        let g = wilks_gamma(21, 20, prob(0.90)).unwrap().value();
        assert_abs_diff_eq!(g, 0.827, epsilon = 1e-3);
    }

    #[test]
    fn gamma_inversion_keeps_confidence_at_least_beta() {
        for (n, rank, beta) in [(21, 21, 0.95), (21, 20, 0.9), (38, 37, 0.95), (10, 7, 0.6)] {
            let gamma = wilks_gamma(n, rank, prob(beta)).unwrap();
            let conf = wilks_confidence(n, rank, gamma).unwrap().value();
            assert!(conf >= beta, "G = {conf} < beta = {beta}");
            let bumped = Probability::new(gamma.value() + 1e-6).unwrap();
            assert!(wilks_confidence(n, rank, bumped).unwrap().value() < beta + 1e-4);
        }
    }

    #[test]
    fn confidence_monotone_in_gamma_and_rank() {
        let mut prev = 1.0;
        for i in 1..100 {
            let g = i as f64 / 100.0;
            let c = wilks_confidence(25, 20, prob(g)).unwrap().value();
            assert!(c <= prev + 1e-12);
            prev = c;
        }
        let mut prev = 0.0;
        for rank in 1..=25 {
            let c = wilks_confidence(25, rank, prob(0.8)).unwrap().value();
            assert!(c >= prev - 1e-12);
            prev = c;
        }
    }

    #[test]
    fn assess_uses_the_right_order_statistic() {
        let values = vec![12.0, 3.0, 156.67, 45.0, 7.0];
        let sample = Sample::new(values).unwrap();
        let a = wilks_assess(&sample, 1, prob(0.95)).unwrap();
        assert_eq!(a.threshold, 156.67);
        assert_eq!(a.plan.rank, 5);
        let a2 = wilks_assess(&sample, 2, prob(0.95)).unwrap();
        assert_eq!(a2.threshold, 45.0);

        // order = n  ->  threshold is the minimum and alpha is close to 1
        let a_min = wilks_assess(&sample, 5, prob(0.95)).unwrap();
        assert_eq!(a_min.threshold, 3.0);
        assert!(a_min.alpha.value() > 0.5);

        assert!(wilks_assess(&sample, 6, prob(0.95)).is_err());
        assert!(wilks_assess(&sample, 0, prob(0.95)).is_err());
    }

    #[test]
    fn invalid_arguments_are_rejected() {
        assert!(wilks_confidence(10, 0, prob(0.9)).is_err());
        assert!(wilks_confidence(10, 11, prob(0.9)).is_err());
        assert!(wilks_min_n(prob(0.0), prob(0.9), 1).is_err());
        assert!(wilks_min_n(prob(0.9), prob(1.0), 1).is_err());
        assert!(wilks_min_n(prob(0.9), prob(0.9), 0).is_err());
        assert!(wilks_gamma(10, 3, prob(0.0)).is_err());
    }
}
