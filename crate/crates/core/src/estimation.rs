//! Empirical summary statistics: the mean/sd plug-ins and order statistics
//! that every bound in this crate is computed from.

use crate::{Error, Result};

/// An i.i.d. measurement sample: at least one finite value, optionally
/// tagged with a unit label (e.g. "Bq/cm2", "l/drum/year").
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    values: Vec<f64>,
    unit_label: Option<String>,
}

impl Sample {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Data("sample must contain at least one value".into()));
        }
        if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::Data(format!("sample contains non-finite value {bad}")));
        }
        Ok(Self {
            values,
            unit_label: None,
        })
    }

    pub fn with_unit(values: Vec<f64>, unit_label: impl Into<String>) -> Result<Self> {
        let mut s = Self::new(values)?;
        s.unit_label = Some(unit_label.into());
        Ok(s)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn unit_label(&self) -> Option<&str> {
        self.unit_label.as_deref()
    }
}

/// Empirical moments of a sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentEstimates {
    pub n: usize,
    pub mean: f64,
    /// Unbiased standard deviation (n-1 denominator). The plug-in bounds
    /// downstream inherit this convention.
    pub sd: f64,
    pub median: f64,
    pub min: f64,
    pub max: f64,
}

/// Mean and unbiased (n-1) standard deviation of a slice.
///
/// This is the hot-path kernel shared by the bootstrap and simulation
/// layers; it requires at least two values.
pub fn mean_sd(values: &[f64]) -> Result<(f64, f64)> {
    let n = values.len();
    if n < 2 {
        return Err(Error::Data(format!(
            "standard deviation needs at least 2 values, got {n}"
        )));
    }
    let nf = n as f64;
    let mean = values.iter().sum::<f64>() / nf;
    let ss = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>();
    Ok((mean, (ss / (nf - 1.0)).sqrt()))
}

/// Summary statistics of a sample. Needs n >= 2 (the standard deviation is
/// undefined for a single observation).
pub fn summarize(sample: &Sample) -> Result<MomentEstimates> {
    let (mean, sd) = mean_sd(sample.values())?;
    let mut sorted = sample.values().to_vec();
    sorted.sort_by(|a, b| a.total_cmp(b));
    let n = sorted.len();
    let median = if n % 2 == 1 {
        sorted[n / 2]
    } else {
        0.5 * (sorted[n / 2 - 1] + sorted[n / 2])
    };
    Ok(MomentEstimates {
        n,
        mean,
        sd,
        median,
        min: sorted[0],
        max: sorted[n - 1],
    })
}

/// The `rank`-th smallest value of the sample (rank is 1-based; rank 1 is
/// the minimum and rank n the maximum).
pub fn order_statistic(sample: &Sample, rank: usize) -> Result<f64> {
    let n = sample.len();
    if rank < 1 || rank > n {
        return Err(Error::Domain(format!(
            "rank must lie in 1..={n}, got {rank}"
        )));
    }
    let mut sorted = sample.values().to_vec();
    sorted.sort_by(|a, b| a.total_cmp(b));
    Ok(sorted[rank - 1])
}
