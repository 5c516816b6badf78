//! Penalized risk bounds by resampling.
//!
//! Plugging empirical moments straight into a concentration inequality can
//! understate the risk when the sample is small. The penalized estimate
//! recomputes the bound on many with-replacement resamples and reports a
//! high quantile (order beta) of those values, trading tightness for
//! conservatism.
//!
//! Replicate b always draws from `RandomStream::substream(seed, b)`, so the
//! result is identical whether replicates run sequentially or on a thread
//! pool.

use crate::concentration::{plugin_bound, BoundMethod, Provenance, RiskBound};
use crate::estimation::{mean_sd, Sample};
use crate::par::map_indexed;
use crate::rng::RandomStream;
use crate::specfun::Probability;
use crate::{Error, Result};

/// Bootstrap parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BootstrapConfig {
    replicates: usize,
    confidence: Probability,
    seed: u64,
}

impl BootstrapConfig {
    /// At least 100 replicates; the confidence is the quantile order applied
    /// to the replicate bounds (and doubles as the k-factor tolerance level
    /// when that method is requested).
    pub fn new(replicates: usize, confidence: Probability, seed: u64) -> Result<Self> {
        if replicates < 100 {
            return Err(Error::Domain(format!(
                "bootstrap needs at least 100 replicates, got {replicates}"
            )));
        }
        Ok(Self {
            replicates,
            confidence,
            seed,
        })
    }

    pub fn replicates(&self) -> usize {
        self.replicates
    }

    pub fn confidence(&self) -> Probability {
        self.confidence
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

/// One with-replacement resample of the same size as the input.
pub fn resample(sample: &Sample, stream: &mut RandomStream) -> Result<Sample> {
    let n = sample.len();
    if n < 2 {
        return Err(Error::Data(format!(
            "resampling needs at least 2 values, got {n}"
        )));
    }
    let values = sample.values();
    let drawn: Vec<f64> = (0..n).map(|_| values[stream.next_index(n)]).collect();
    Sample::new(drawn)
}

/// Penalized bound: the ceil(beta B)-th smallest of the B replicate bounds.
///
/// Resamples with zero spread contribute alpha = 1 instead of being
/// rejected, which avoids biasing the replicate distribution. The original
/// sample itself must have positive spread.
pub fn bootstrap_bound(
    sample: &Sample,
    method: BoundMethod,
    s: f64,
    cfg: &BootstrapConfig,
) -> Result<RiskBound> {
    let n = sample.len();
    if n < 2 {
        return Err(Error::Data(format!(
            "bootstrap needs at least 2 values, got {n}"
        )));
    }
    let (orig_mean, orig_sd) = mean_sd(sample.values())?;
    if orig_sd == 0.0 {
        return Err(Error::Data(
            "bootstrap is undefined for a zero-spread sample".into(),
        ));
    }

    let alphas = replicate_alphas(sample, method, s, cfg)?;
    let mut alphas = alphas;
    alphas.sort_by(|a, b| a.total_cmp(b));
    let rank = quantile_rank(cfg.confidence.value(), cfg.replicates);
    let alpha = alphas[rank - 1];

    Ok(RiskBound {
        method,
        threshold: s,
        alpha: Probability::new(alpha)?,
        confidence: Some(cfg.confidence),
        provenance: Provenance::Bootstrap,
        vacuous: s <= orig_mean,
    })
}

/// All B replicate bound values, in replicate order (unsorted).
pub(crate) fn replicate_alphas(
    sample: &Sample,
    method: BoundMethod,
    s: f64,
    cfg: &BootstrapConfig,
) -> Result<Vec<f64>> {
    let n = sample.len();
    let values = sample.values();
    let confidence = cfg.confidence;
    let seed = cfg.seed;
    let results: Vec<Result<f64>> = map_indexed(cfg.replicates, move |b| {
        let mut stream = RandomStream::substream(seed, b as u64);
        let mut sum = 0.0;
        let mut buf = Vec::with_capacity(n);
        for _ in 0..n {
            let v = values[stream.next_index(n)];
            sum += v;
            buf.push(v);
        }
        let mean = sum / n as f64;
        let ss: f64 = buf.iter().map(|v| (v - mean) * (v - mean)).sum();
        let sd = (ss / (n as f64 - 1.0)).sqrt();
        if sd == 0.0 {
            return Ok(1.0);
        }
        Ok(plugin_bound(method, n, mean, sd, s, Some(confidence))?
            .alpha
            .value())
    });
    results.into_iter().collect()
}

/// 1-based index of the upper-biased empirical beta-quantile among `b`
/// sorted values: the ceil(beta b)-th smallest, clamped to 1..=b.
fn quantile_rank(beta: f64, b: usize) -> usize {
    ((beta * b as f64).ceil() as usize).clamp(1, b)
}
