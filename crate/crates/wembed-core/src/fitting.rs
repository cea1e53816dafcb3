//! Log-log power-law fitting for growth-rate measurements.

/// Errors from growth fitting.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FitError {
    #[error("need at least 4 sweep points, got {0}")]
    TooFewPoints(usize),
    #[error("sweep values must be strictly increasing and positive")]
    NotIncreasing,
    #[error("degenerate fit: sweep spans factor {span:.3}, need at least 4")]
    DegenerateFit { span: f64 },
    #[error("measurements must be positive and finite to fit a power law")]
    BadMeasurement,
}

/// Least-squares line through `(log x, log y)`.
#[derive(Debug, Clone, Copy)]
pub struct FitResult {
    pub slope: f64,
    pub intercept: f64,
    pub r2: f64,
}

/// Fit `y ≈ c · x^slope` by least squares in log-log coordinates.
///
/// Requires at least 4 points, strictly increasing positive `xs`
/// spanning at least a factor 4, and positive finite `ys`.
pub fn fit_growth(xs: &[f64], ys: &[f64]) -> Result<FitResult, FitError> {
    if xs.len() < 4 || xs.len() != ys.len() {
        return Err(FitError::TooFewPoints(xs.len().min(ys.len())));
    }
    if xs[0] <= 0.0 || xs.windows(2).any(|w| w[1] <= w[0]) {
        return Err(FitError::NotIncreasing);
    }
    let span = xs[xs.len() - 1] / xs[0];
    if span < 4.0 {
        return Err(FitError::DegenerateFit { span });
    }
    if ys.iter().any(|y| !(y.is_finite() && *y > 0.0)) {
        return Err(FitError::BadMeasurement);
    }
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ly.iter().map(|y| (y - my) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let r2 = if syy == 0.0 { 1.0 } else { (sxy * sxy) / (sxx * syy) };
    Ok(FitResult { slope, intercept, r2 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_power_law() {
        let xs = [1.0, 2.0, 4.0, 8.0, 16.0];
        let ys: Vec<f64> = xs.iter().map(|x| 3.0 * x * x).collect();
        let fit = fit_growth(&xs, &ys).unwrap();
        assert!((fit.slope - 2.0).abs() < 1e-12);
        assert!((fit.intercept - 3.0f64.ln()).abs() < 1e-12);
        assert!((fit.r2 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn constant_sequence_has_zero_slope() {
        let xs = [1.0, 2.0, 4.0, 8.0];
        let ys = [5.0, 5.0, 5.0, 5.0];
        let fit = fit_growth(&xs, &ys).unwrap();
        assert!(fit.slope.abs() < 1e-14);
    }

    #[test]
    fn noisy_square_root() {
        // deterministic +-1% perturbation
        let xs: Vec<f64> = (0..8).map(|i| (2.0f64).powi(i)).collect();
        let ys: Vec<f64> = xs
            .iter()
            .enumerate()
            .map(|(i, x)| x.sqrt() * (1.0 + 0.01 * if i % 2 == 0 { 1.0 } else { -1.0 }))
            .collect();
        let fit = fit_growth(&xs, &ys).unwrap();
        assert!((fit.slope - 0.5).abs() < 0.02, "slope {}", fit.slope);
    }

    #[test]
    fn rejects_degenerate_input() {
        assert!(matches!(
            fit_growth(&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.0]),
            Err(FitError::TooFewPoints(3))
        ));
        assert!(matches!(
            fit_growth(&[1.0, 2.0, 3.0, 3.5], &[1.0, 2.0, 3.0, 3.5]),
            Err(FitError::DegenerateFit { .. })
        ));
        assert!(matches!(
            fit_growth(&[1.0, 1.0, 2.0, 4.0], &[1.0; 4]),
            Err(FitError::NotIncreasing)
        ));
        assert!(matches!(
            fit_growth(&[1.0, 2.0, 4.0, 8.0], &[1.0, -1.0, 1.0, 1.0]),
            Err(FitError::BadMeasurement)
        ));
    }
}
