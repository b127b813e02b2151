//! Power-law fits and skeleton-based estimates of network search information.

use serde::Serialize;

use crate::error::{Error, Result};

/// Skeleton-to-original size ratio below which estimates are flagged.
pub const RELIABLE_RATIO: f64 = 0.3;

/// `y ≈ amplitude · x^exponent`, fitted in log-log space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PowerLawFit {
    pub amplitude: f64,
    pub exponent: f64,
    /// Coefficient of determination of the log-log regression.
    pub r_squared: f64,
    pub n_points: usize,
}

impl PowerLawFit {
    pub fn predict(&self, x: f64) -> f64 {
        self.amplitude * x.powf(self.exponent)
    }
}

/// Empirical scaling constants. Defaults are the published corpus fits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScalingConstants {
    /// `H_skeleton / H_o ≈ a · (N_sk / N_o)^b`
    pub skeleton_amplitude: f64,
    pub skeleton_exponent: f64,
    /// `H_o ≈ a · (N_sk / N_o)^(-b) · H_skeleton`
    pub inverse_amplitude: f64,
    pub inverse_exponent: f64,
    /// `H_simp / H_o ≈ a · (N_sk / N_o)^b`
    pub simp_amplitude: f64,
    pub simp_exponent: f64,
    /// Mean total search information of an `n`-node tree, `a · n^b`.
    pub tree_amplitude: f64,
    pub tree_exponent: f64,
}

impl Default for ScalingConstants {
    fn default() -> Self {
        ScalingConstants {
            skeleton_amplitude: 0.988,
            skeleton_exponent: 2.355,
            inverse_amplitude: 1.012,
            inverse_exponent: 2.35,
            simp_amplitude: 0.983,
            simp_exponent: 2.297,
            tree_amplitude: 0.721,
            tree_exponent: 2.550,
        }
    }
}

impl ScalingConstants {
    pub const KEYS: [&'static str; 8] = [
        "skeleton_amplitude",
        "skeleton_exponent",
        "inverse_amplitude",
        "inverse_exponent",
        "simp_amplitude",
        "simp_exponent",
        "tree_amplitude",
        "tree_exponent",
    ];

    /// Overrides one constant by name.
    pub fn set(&mut self, key: &str, value: f64) -> Result<()> {
        if !value.is_finite() {
            return Err(Error::arg(format!("{key} must be finite")));
        }
        let slot = match key {
            "skeleton_amplitude" => &mut self.skeleton_amplitude,
            "skeleton_exponent" => &mut self.skeleton_exponent,
            "inverse_amplitude" => &mut self.inverse_amplitude,
            "inverse_exponent" => &mut self.inverse_exponent,
            "simp_amplitude" => &mut self.simp_amplitude,
            "simp_exponent" => &mut self.simp_exponent,
            "tree_amplitude" => &mut self.tree_amplitude,
            "tree_exponent" => &mut self.tree_exponent,
            _ => {
                return Err(Error::arg(format!(
                    "unknown constant '{key}' (expected one of {})",
                    Self::KEYS.join(", ")
                )))
            }
        };
        if key.ends_with("amplitude") && value <= 0.0 {
            return Err(Error::arg(format!("{key} must be positive")));
        }
        *slot = value;
        Ok(())
    }

    /// Applies a `KEY=VALUE` override.
    pub fn apply_override(&mut self, spec: &str) -> Result<()> {
        let (key, value) = spec
            .split_once('=')
            .ok_or_else(|| Error::arg(format!("expected KEY=VALUE, got '{spec}'")))?;
        let value: f64 = value
            .trim()
            .parse()
            .map_err(|_| Error::arg(format!("'{value}' is not a number")))?;
        self.set(key.trim(), value)
    }
}

/// Ordinary least squares on `(ln x, ln y)`.
pub fn fit_power_law(points: &[(f64, f64)]) -> Result<PowerLawFit> {
    if points.len() < 3 {
        return Err(Error::DegenerateFit(format!(
            "need at least 3 points, got {}",
            points.len()
        )));
    }
    if let Some(&(x, y)) = points
        .iter()
        .find(|&&(x, y)| !(x > 0.0 && y > 0.0 && x.is_finite() && y.is_finite()))
    {
        return Err(Error::Domain(format!(
            "power-law fit needs positive finite values, got ({x}, {y})"
        )));
    }

    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let n = logs.len() as f64;
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let syy: f64 = logs.iter().map(|p| (p.1 - mean_y).powi(2)).sum();

    if sxx <= f64::EPSILON * n * (1.0 + mean_x.abs()) {
        return Err(Error::DegenerateFit("all x values are equal".into()));
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let ss_res: f64 = logs
        .iter()
        .map(|&(x, y)| (y - (intercept + slope * x)).powi(2))
        .sum();
    // Constant y is fitted perfectly by a zero slope.
    let r_squared = if syy <= f64::EPSILON * n * (1.0 + mean_y.abs()) {
        1.0
    } else {
        (1.0 - ss_res / syy).clamp(0.0, 1.0)
    };
    Ok(PowerLawFit {
        amplitude: intercept.exp(),
        exponent: slope,
        r_squared,
        n_points: points.len(),
    })
}

fn check_sizes(n_skeleton: usize, n_original: usize) -> Result<f64> {
    if n_skeleton == 0 {
        return Err(Error::arg("skeleton must have at least one node"));
    }
    if n_skeleton > n_original {
        return Err(Error::arg(format!(
            "skeleton ({n_skeleton} nodes) larger than original ({n_original})"
        )));
    }
    Ok(n_skeleton as f64 / n_original as f64)
}

/// `H_o ≈ inverse_amplitude · (N_sk/N_o)^(-inverse_exponent) · H_sk`.
pub fn estimate_h_from_skeleton(
    h_skeleton: f64,
    n_skeleton: usize,
    n_original: usize,
    c: &ScalingConstants,
) -> Result<f64> {
    let ratio = check_sizes(n_skeleton, n_original)?;
    if h_skeleton < 0.0 {
        return Err(Error::arg("skeleton search information is negative"));
    }
    Ok(c.inverse_amplitude * ratio.powf(-c.inverse_exponent) * h_skeleton)
}

/// `H_o ≈ H_simp / (simp_amplitude · (N_sk/N_o)^simp_exponent)`.
pub fn estimate_h_from_simplified(
    h_simp: f64,
    n_skeleton: usize,
    n_original: usize,
    c: &ScalingConstants,
) -> Result<f64> {
    let ratio = check_sizes(n_skeleton, n_original)?;
    if h_simp < 0.0 {
        return Err(Error::arg("simplified search information is negative"));
    }
    Ok(h_simp / (c.simp_amplitude * ratio.powf(c.simp_exponent)))
}

/// Mean search information of an `n`-node tree from the tree scaling.
pub fn approx_h_tree(n: usize, c: &ScalingConstants) -> f64 {
    c.tree_amplitude * (n as f64).powf(c.tree_exponent)
}

pub fn relative_error(estimate: f64, actual: f64) -> Result<f64> {
    if actual <= 0.0 {
        return Err(Error::arg(format!(
            "relative error needs a positive reference, got {actual}"
        )));
    }
    Ok((estimate - actual) / actual)
}

/// Skeleton-based estimate with its reliability flag.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SkeletonEstimate {
    pub h_skeleton: f64,
    pub ratio: f64,
    pub estimate_bits: f64,
    /// Set when `ratio < RELIABLE_RATIO`.
    pub low_confidence: bool,
}

impl SkeletonEstimate {
    pub fn new(
        h_skeleton: f64,
        n_skeleton: usize,
        n_original: usize,
        c: &ScalingConstants,
    ) -> Result<Self> {
        let estimate_bits = estimate_h_from_skeleton(h_skeleton, n_skeleton, n_original, c)?;
        let ratio = n_skeleton as f64 / n_original as f64;
        Ok(SkeletonEstimate {
            h_skeleton,
            ratio,
            estimate_bits,
            low_confidence: ratio < RELIABLE_RATIO,
        })
    }
}
