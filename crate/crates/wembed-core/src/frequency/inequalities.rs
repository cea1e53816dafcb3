//! Numerical checks of the band-limited norm inequalities: the
//! `L^p → L^q` bound with rate `R^{d(1/p−1/q)}` for spectrum in a ball
//! of radius `R`, and the sub-additive Young bound for `0 < p < 1` with
//! rate `(R₁+R₂)^{d(1/p−1)}`. Members of the dilation sweep are built
//! directly in frequency space from a window profile, so band
//! limitation is exact by construction and verified against the
//! stated ball.

use super::grid::{lp_norm, spectral_mass_outside, GridFunction, GridSpec, Transform};
use super::window::WindowProfile;
use crate::fitting::{fit_growth, FitError};
use crate::indices::ReciprocalIndex;
use num_complex::Complex64;

/// Errors from the inequality checks.
#[derive(Debug, thiserror::Error)]
pub enum InequalityError {
    #[error("input is not band-limited to the stated ball: relative spectral tail {tail:e}")]
    NotBandLimited { tail: f64 },
    #[error("need p <= q for the band-limited norm comparison")]
    ExponentsOutOfOrder,
    #[error("Young-type bound is stated for 0 < p < 1, got p = {0}")]
    YoungNeedsSmallP(ReciprocalIndex),
    #[error("radius {radius} does not fit the grid (Nyquist {nyquist})")]
    RadiusTooLarge { radius: f64, nyquist: f64 },
    #[error(transparent)]
    Fit(#[from] FitError),
}

/// Outcome of a dilation sweep against a power-law prediction.
#[derive(Debug, Clone)]
pub struct SweepReport {
    pub radii: Vec<f64>,
    pub measured: Vec<f64>,
    pub fitted_exponent: f64,
    pub expected_exponent: f64,
    pub fit_r2: f64,
}

impl SweepReport {
    /// Relative deviation of the fitted exponent from the prediction.
    pub fn exponent_error(&self) -> f64 {
        if self.expected_exponent == 0.0 {
            self.fitted_exponent.abs()
        } else {
            (self.fitted_exponent - self.expected_exponent).abs() / self.expected_exponent.abs()
        }
    }
}

fn bump_with_radius(spec: &GridSpec, profile: &WindowProfile, radius: f64) -> GridFunction {
    GridFunction::from_spectrum_fn(spec, |xi| {
        let r = (xi[0] * xi[0] + xi[1] * xi[1]).sqrt();
        Complex64::new(profile.value(r / radius), 0.0)
    })
}

fn verify_band_limited(
    transform: &Transform,
    f: &GridFunction,
    radius: f64,
) -> Result<(), InequalityError> {
    let tail = spectral_mass_outside(transform, f, |xi| {
        (xi[0] * xi[0] + xi[1] * xi[1]).sqrt() <= radius
    });
    if tail > 1e-10 {
        return Err(InequalityError::NotBandLimited { tail });
    }
    Ok(())
}

/// Sweep the band radius and fit the growth of `‖f_R‖_q / ‖f_R‖_p`
/// against `R`; the fitted exponent approximates `d(1/p − 1/q)`.
pub fn check_bernstein(
    spec: &GridSpec,
    profile: &WindowProfile,
    radii: &[f64],
    p: ReciprocalIndex,
    q: ReciprocalIndex,
) -> Result<SweepReport, InequalityError> {
    if !p.exp_le(q) {
        return Err(InequalityError::ExponentsOutOfOrder);
    }
    let transform = Transform::new(spec);
    let nyquist = spec.nyquist();
    let mut measured = Vec::with_capacity(radii.len());
    for &r in radii {
        let ball = r * profile.support;
        if ball >= nyquist {
            return Err(InequalityError::RadiusTooLarge { radius: ball, nyquist });
        }
        let f = bump_with_radius(spec, profile, r);
        verify_band_limited(&transform, &f, ball)?;
        measured.push(lp_norm(&f, q) / lp_norm(&f, p));
    }
    let fit = fit_growth(radii, &measured)?;
    let d = spec.dim().get() as f64;
    Ok(SweepReport {
        radii: radii.to_vec(),
        measured,
        fitted_exponent: fit.slope,
        expected_exponent: d * (p.recip_f64() - q.recip_f64()),
        fit_r2: fit.r2,
    })
}

/// Sweep the band radius and fit the growth of
/// `‖ |f_R| * |g_R| ‖_p / (‖f_R‖_p ‖g_R‖_p)` against `R₁ + R₂ = 2R`;
/// the fitted exponent approximates `d(1/p − 1)` for `0 < p < 1`.
pub fn check_young_sub1(
    spec: &GridSpec,
    profile: &WindowProfile,
    radii: &[f64],
    p: ReciprocalIndex,
) -> Result<SweepReport, InequalityError> {
    if !p.exp_lt_int(1) {
        return Err(InequalityError::YoungNeedsSmallP(p));
    }
    let transform = Transform::new(spec);
    let nyquist = spec.nyquist();
    let mut measured = Vec::with_capacity(radii.len());
    let mut sums = Vec::with_capacity(radii.len());
    for &r in radii {
        let ball = r * profile.support;
        if ball >= nyquist {
            return Err(InequalityError::RadiusTooLarge { radius: ball, nyquist });
        }
        let f = bump_with_radius(spec, profile, r);
        verify_band_limited(&transform, &f, ball)?;
        let conv = modulus_convolution(&transform, &f, &f);
        let norm_f = lp_norm(&f, p);
        measured.push(lp_norm(&conv, p) / (norm_f * norm_f));
        sums.push(2.0 * r);
    }
    let fit = fit_growth(&sums, &measured)?;
    let d = spec.dim().get() as f64;
    Ok(SweepReport {
        radii: radii.to_vec(),
        measured,
        fitted_exponent: fit.slope,
        expected_exponent: d * (p.recip_f64() - 1.0),
        fit_r2: fit.r2,
    })
}

/// Periodic convolution of the moduli `|f| * |g|` via the transform.
pub fn modulus_convolution(
    transform: &Transform,
    f: &GridFunction,
    g: &GridFunction,
) -> GridFunction {
    let spec = transform.spec();
    let fa: Vec<Complex64> =
        f.samples.iter().map(|z| Complex64::new(z.norm(), 0.0)).collect();
    let ga: Vec<Complex64> =
        g.samples.iter().map(|z| Complex64::new(z.norm(), 0.0)).collect();
    let mut sf = transform.dft(&fa);
    let sg = transform.dft(&ga);
    for (a, b) in sf.iter_mut().zip(&sg) {
        *a *= *b;
    }
    transform.idft_in_place(&mut sf);
    let cell = spec.cell_volume();
    for z in sf.iter_mut() {
        *z *= cell;
    }
    GridFunction { spec: spec.clone(), samples: sf }
}

trait RecipF64 {
    fn recip_f64(self) -> f64;
}

impl RecipF64 for ReciprocalIndex {
    fn recip_f64(self) -> f64 {
        crate::frequency::bank::ratio_f64(self.recip())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::{rat, D1};

    fn spec() -> GridSpec {
        GridSpec::new(D1, 1024, rat(8, 1)).unwrap() // Nyquist 64
    }

    #[test]
    fn bernstein_rate_for_p1_qinf() {
        let report = check_bernstein(
            &spec(),
            &WindowProfile::half_width(1.0),
            &[1.0, 2.0, 4.0, 8.0],
            "1".parse().unwrap(),
            "inf".parse().unwrap(),
        )
        .unwrap();
        assert!(
            report.exponent_error() < 0.02,
            "fitted {} vs expected {}",
            report.fitted_exponent,
            report.expected_exponent
        );
    }

    #[test]
    fn bernstein_rate_is_zero_at_equal_exponents() {
        let report = check_bernstein(
            &spec(),
            &WindowProfile::half_width(1.0),
            &[1.0, 2.0, 4.0, 8.0],
            "2".parse().unwrap(),
            "2".parse().unwrap(),
        )
        .unwrap();
        assert!(report.fitted_exponent.abs() < 1e-10);
    }

    #[test]
    fn young_rate_for_half_exponent() {
        let report = check_young_sub1(
            &spec(),
            &WindowProfile::half_width(1.0),
            &[1.0, 2.0, 4.0, 8.0],
            "1/2".parse().unwrap(),
        )
        .unwrap();
        assert!(
            report.exponent_error() < 0.10,
            "fitted {} vs expected {}",
            report.fitted_exponent,
            report.expected_exponent
        );
    }

    #[test]
    fn order_violations_are_rejected() {
        let w = WindowProfile::half_width(1.0);
        assert!(matches!(
            check_bernstein(&spec(), &w, &[1.0, 2.0, 4.0, 8.0], "2".parse().unwrap(), "1".parse().unwrap()),
            Err(InequalityError::ExponentsOutOfOrder)
        ));
        assert!(matches!(
            check_young_sub1(&spec(), &w, &[1.0, 2.0, 4.0, 8.0], "2".parse().unwrap()),
            Err(InequalityError::YoungNeedsSmallP(_))
        ));
        assert!(matches!(
            check_bernstein(&spec(), &w, &[1.0, 2.0, 4.0, 100.0], "1".parse().unwrap(), "2".parse().unwrap()),
            Err(InequalityError::RadiusTooLarge { .. })
        ));
    }
}
