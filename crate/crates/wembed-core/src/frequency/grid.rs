//! Periodic grid model. Functions live on `[0, 2πP)^d` sampled at `N`
//! points per dimension; their spectra live on the frequency lattice
//! `(1/P)Z^d` inside the Nyquist box `[-N/(2P), N/(2P))^d`.
//!
//! Transform convention: forward kernel `e^{-i x ξ}`, inverse carries
//! `(2π)^{-d}`. On the grid this pins the scalings
//! `spectrum(ξ_m) = Δx^d · DFT_m` and the discrete Parseval identity
//! `Σ|f|²Δx^d = (2π)^{-d} Σ|spectrum|² Δξ^d` exactly (up to rounding),
//! which the norm layer relies on.

use crate::indices::{Dimension, Rational, ReciprocalIndex};
use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use std::sync::Arc;

/// Errors from grid construction and grid-level operations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GridError {
    #[error("samples per dimension must be a power of two, got {0}")]
    NotPowerOfTwo(usize),
    #[error("period must be positive, got {0}")]
    BadPeriod(Rational),
    #[error("only dimensions 1 and 2 are supported, got {0}")]
    BadDimension(u32),
    #[error("grid too small: Nyquist frequency {nyquist} below required {required}")]
    SpecTooSmall { nyquist: f64, required: f64 },
    #[error("sample count {got} does not match grid ({want})")]
    LengthMismatch { got: usize, want: usize },
    #[error("non-finite sample at index {0}")]
    NonFinite(usize),
}

/// Geometry of a periodic grid: dimension (1 or 2), samples per
/// dimension (power of two) and the period parameter `P`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    d: Dimension,
    n: usize,
    period: Rational,
}

impl GridSpec {
    pub fn new(d: Dimension, n: usize, period: Rational) -> Result<Self, GridError> {
        if d.get() > 2 {
            return Err(GridError::BadDimension(d.get()));
        }
        if n < 2 || !n.is_power_of_two() {
            return Err(GridError::NotPowerOfTwo(n));
        }
        if period <= Rational::from_integer(0) {
            return Err(GridError::BadPeriod(period));
        }
        let spec = GridSpec { d, n, period };
        if spec.nyquist() < 4.0 {
            return Err(GridError::SpecTooSmall { nyquist: spec.nyquist(), required: 4.0 });
        }
        Ok(spec)
    }

    pub fn dim(&self) -> Dimension {
        self.d
    }

    pub fn samples_per_dim(&self) -> usize {
        self.n
    }

    pub fn period(&self) -> Rational {
        self.period
    }

    pub fn period_f64(&self) -> f64 {
        (*self.period.numer() as f64) / (*self.period.denom() as f64)
    }

    /// Total number of samples `N^d`.
    pub fn len(&self) -> usize {
        self.n.pow(self.d.get())
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Spatial step `Δx = 2πP/N`.
    pub fn dx(&self) -> f64 {
        2.0 * std::f64::consts::PI * self.period_f64() / self.n as f64
    }

    /// Spatial cell volume `Δx^d`.
    pub fn cell_volume(&self) -> f64 {
        self.dx().powi(self.d.get() as i32)
    }

    /// Frequency step `Δξ = 1/P`.
    pub fn dxi(&self) -> f64 {
        1.0 / self.period_f64()
    }

    /// Nyquist frequency `N/(2P)`.
    pub fn nyquist(&self) -> f64 {
        self.n as f64 / (2.0 * self.period_f64())
    }

    /// Integer frequency multiple for FFT bin `i` (per dimension):
    /// `0..N/2` map to themselves, the upper half to negatives.
    pub fn bin_to_multiple(&self, i: usize) -> i64 {
        if i < self.n / 2 {
            i as i64
        } else {
            i as i64 - self.n as i64
        }
    }

    /// Frequency coordinates (length-`d` vector padded to 2) of a flat
    /// spectrum index.
    pub fn freq_at(&self, flat: usize) -> [f64; 2] {
        let dxi = self.dxi();
        match self.d.get() {
            1 => [self.bin_to_multiple(flat) as f64 * dxi, 0.0],
            _ => {
                let i = flat / self.n;
                let j = flat % self.n;
                [
                    self.bin_to_multiple(i) as f64 * dxi,
                    self.bin_to_multiple(j) as f64 * dxi,
                ]
            }
        }
    }

    /// Spatial coordinates of a flat sample index.
    pub fn point_at(&self, flat: usize) -> [f64; 2] {
        let dx = self.dx();
        match self.d.get() {
            1 => [flat as f64 * dx, 0.0],
            _ => {
                let i = flat / self.n;
                let j = flat % self.n;
                [i as f64 * dx, j as f64 * dx]
            }
        }
    }
}

/// Complex samples of a periodic function on a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    pub spec: GridSpec,
    pub samples: Vec<Complex64>,
}

impl GridFunction {
    pub fn new(spec: GridSpec, samples: Vec<Complex64>) -> Result<Self, GridError> {
        if samples.len() != spec.len() {
            return Err(GridError::LengthMismatch { got: samples.len(), want: spec.len() });
        }
        if let Some(i) = samples.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(GridError::NonFinite(i));
        }
        Ok(GridFunction { spec, samples })
    }

    pub fn zero(spec: &GridSpec) -> Self {
        GridFunction { spec: spec.clone(), samples: vec![Complex64::new(0.0, 0.0); spec.len()] }
    }

    /// Build from an analytic profile of the spatial coordinates.
    pub fn from_fn(spec: &GridSpec, mut f: impl FnMut([f64; 2]) -> Complex64) -> Self {
        let samples = (0..spec.len()).map(|i| f(spec.point_at(i))).collect();
        GridFunction { spec: spec.clone(), samples }
    }

    /// Build by sampling a spectrum profile on the frequency lattice and
    /// transforming back. The result is exactly band-limited to the
    /// profile's support.
    pub fn from_spectrum_fn(spec: &GridSpec, mut m: impl FnMut([f64; 2]) -> Complex64) -> Self {
        let spectrum: Vec<Complex64> = (0..spec.len()).map(|i| m(spec.freq_at(i))).collect();
        synthesize(spec, &spectrum)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        GridFunction {
            spec: self.spec.clone(),
            samples: self.samples.iter().map(|z| z * c).collect(),
        }
    }

    pub fn add(&self, other: &GridFunction) -> Self {
        assert_eq!(self.spec, other.spec, "grid mismatch");
        GridFunction {
            spec: self.spec.clone(),
            samples: self
                .samples
                .iter()
                .zip(&other.samples)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// FFT engine bound to one grid geometry, with plans reused across
/// calls. All transforms are deterministic for fixed input.
pub struct Transform {
    spec: GridSpec,
    fwd: Arc<dyn Fft<f64>>,
    inv: Arc<dyn Fft<f64>>,
}

impl Transform {
    pub fn new(spec: &GridSpec) -> Self {
        let mut planner = FftPlanner::new();
        Transform {
            spec: spec.clone(),
            fwd: planner.plan_fft_forward(spec.samples_per_dim()),
            inv: planner.plan_fft_inverse(spec.samples_per_dim()),
        }
    }

    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    /// Unscaled DFT of the samples (row-column for d = 2).
    pub fn dft(&self, samples: &[Complex64]) -> Vec<Complex64> {
        let mut data = samples.to_vec();
        self.dft_in_place(&mut data);
        data
    }

    pub fn dft_in_place(&self, data: &mut [Complex64]) {
        let n = self.spec.samples_per_dim();
        match self.spec.dim().get() {
            1 => self.fwd.process(data),
            _ => {
                for row in data.chunks_exact_mut(n) {
                    self.fwd.process(row);
                }
                transpose_square(data, n);
                for row in data.chunks_exact_mut(n) {
                    self.fwd.process(row);
                }
                transpose_square(data, n);
            }
        }
    }

    /// Inverse DFT including the `1/N^d` normalization, so
    /// `idft(dft(x)) = x` up to rounding.
    pub fn idft(&self, spectrum: &[Complex64]) -> Vec<Complex64> {
        let mut data = spectrum.to_vec();
        self.idft_in_place(&mut data);
        data
    }

    pub fn idft_in_place(&self, data: &mut [Complex64]) {
        let n = self.spec.samples_per_dim();
        match self.spec.dim().get() {
            1 => self.inv.process(data),
            _ => {
                for row in data.chunks_exact_mut(n) {
                    self.inv.process(row);
                }
                transpose_square(data, n);
                for row in data.chunks_exact_mut(n) {
                    self.inv.process(row);
                }
                transpose_square(data, n);
            }
        }
        let scale = 1.0 / self.spec.len() as f64;
        for z in data.iter_mut() {
            *z *= scale;
        }
    }

    /// Continuum-scaled spectrum `f̂(ξ_m) = Δx^d · DFT_m`.
    pub fn spectrum(&self, f: &GridFunction) -> Vec<Complex64> {
        let mut s = self.dft(&f.samples);
        let c = self.spec.cell_volume();
        for z in s.iter_mut() {
            *z *= c;
        }
        s
    }

    /// Inverse of [`Transform::spectrum`].
    pub fn from_spectrum(&self, spectrum: &[Complex64]) -> GridFunction {
        let mut data = spectrum.to_vec();
        let c = 1.0 / self.spec.cell_volume();
        for z in data.iter_mut() {
            *z *= c;
        }
        self.idft_in_place(&mut data);
        GridFunction { spec: self.spec.clone(), samples: data }
    }

    /// Apply a real frequency multiplier sampled on the lattice.
    pub fn apply_multiplier(&self, f: &GridFunction, multiplier: &[f64]) -> GridFunction {
        let mut s = self.dft(&f.samples);
        for (z, m) in s.iter_mut().zip(multiplier) {
            *z *= *m;
        }
        self.idft_in_place(&mut s);
        GridFunction { spec: self.spec.clone(), samples: s }
    }
}

fn transpose_square(data: &mut [Complex64], n: usize) {
    for i in 0..n {
        for j in (i + 1)..n {
            data.swap(i * n + j, j * n + i);
        }
    }
}

/// Inverse-transform a continuum-scaled spectrum without a prebuilt plan.
pub fn synthesize(spec: &GridSpec, spectrum: &[Complex64]) -> GridFunction {
    Transform::new(spec).from_spectrum(spectrum)
}

/// Riemann-sum `L^p` quasi-norm over one period cell; `p = ∞` takes the
/// maximum modulus over the samples.
pub fn lp_norm(f: &GridFunction, p: ReciprocalIndex) -> f64 {
    lp_norm_of(&f.samples, &f.spec, p)
}

pub fn lp_norm_of(samples: &[Complex64], spec: &GridSpec, p: ReciprocalIndex) -> f64 {
    if p.is_infinite() {
        samples.iter().map(|z| z.norm()).fold(0.0, f64::max)
    } else {
        let pe = p.exponent_f64();
        let sum: f64 = samples.iter().map(|z| z.norm().powf(pe)).sum();
        (sum * spec.cell_volume()).powf(1.0 / pe)
    }
}

/// `L^2` norm via the plain sum of squares.
pub fn l2_norm(f: &GridFunction) -> f64 {
    let sum: f64 = f.samples.iter().map(|z| z.norm_sqr()).sum();
    (sum * f.spec.cell_volume()).sqrt()
}

/// Weighted spectral `L^q` norm `‖<ξ>^s f̂‖_q` (the local-component
/// norm of functions with compactly supported spectrum).
pub fn fourier_lq_norm(
    transform: &Transform,
    f: &GridFunction,
    q: ReciprocalIndex,
    s: f64,
) -> f64 {
    let spec = transform.spec();
    let spectrum = transform.spectrum(f);
    if q.is_infinite() {
        spectrum
            .iter()
            .enumerate()
            .map(|(i, z)| {
                let xi = spec.freq_at(i);
                bracket(xi).powf(s) * z.norm()
            })
            .fold(0.0, f64::max)
    } else {
        let qe = q.exponent_f64();
        let sum: f64 = spectrum
            .iter()
            .enumerate()
            .map(|(i, z)| {
                let xi = spec.freq_at(i);
                (bracket(xi).powf(s) * z.norm()).powf(qe)
            })
            .sum();
        (sum * spec.dxi().powi(spec.dim().get() as i32)).powf(1.0 / qe)
    }
}

/// Japanese bracket `<ξ> = (1 + |ξ|²)^{1/2}`.
pub fn bracket(xi: [f64; 2]) -> f64 {
    (1.0 + xi[0] * xi[0] + xi[1] * xi[1]).sqrt()
}

/// Fraction of spectral `L²` mass at frequencies where `keep` is false.
pub fn spectral_mass_outside(
    transform: &Transform,
    f: &GridFunction,
    mut keep: impl FnMut([f64; 2]) -> bool,
) -> f64 {
    let spec = transform.spec();
    let spectrum = transform.dft(&f.samples);
    let mut inside = 0.0f64;
    let mut outside = 0.0f64;
    for (i, z) in spectrum.iter().enumerate() {
        let m = z.norm_sqr();
        if keep(spec.freq_at(i)) {
            inside += m;
        } else {
            outside += m;
        }
    }
    let total = inside + outside;
    if total == 0.0 {
        0.0
    } else {
        outside / total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::{rat, D1, D2};

    fn spec1d() -> GridSpec {
        GridSpec::new(D1, 256, rat(8, 1)).unwrap()
    }

    #[test]
    fn round_trip_identity() {
        let spec = spec1d();
        let t = Transform::new(&spec);
        let f = GridFunction::from_fn(&spec, |x| {
            Complex64::new((x[0] * 0.5).sin(), (x[0] * 0.25).cos())
        });
        let g = t.from_spectrum(&t.spectrum(&f));
        let err: f64 = f
            .samples
            .iter()
            .zip(&g.samples)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        assert!(err < 1e-12, "round trip error {err}");
    }

    #[test]
    fn parseval_holds_exactly() {
        let spec = spec1d();
        let t = Transform::new(&spec);
        let f = GridFunction::from_fn(&spec, |x| {
            let c = x[0] - 8.0 * std::f64::consts::PI;
            Complex64::new((-c * c / 2.0).exp(), 0.0)
        });
        let space = l2_norm(&f);
        let spectrum = t.spectrum(&f);
        let freq_sum: f64 = spectrum.iter().map(|z| z.norm_sqr()).sum();
        let freq = (freq_sum * spec.dxi() / (2.0 * std::f64::consts::PI)).sqrt();
        assert!(
            (space - freq).abs() <= 1e-10 * space,
            "Parseval mismatch {space} vs {freq}"
        );
    }

    #[test]
    fn pure_mode_lands_on_one_bin() {
        let spec = spec1d();
        let t = Transform::new(&spec);
        // e^{i k x} with k = 3/P on the frequency lattice
        let k = 3.0 * spec.dxi();
        let f = GridFunction::from_fn(&spec, |x| Complex64::new(0.0, k * x[0]).exp());
        let spectrum = t.dft(&f.samples);
        for (i, z) in spectrum.iter().enumerate() {
            if i == 3 {
                assert!((z.norm() - 256.0).abs() < 1e-9);
            } else {
                assert!(z.norm() < 1e-9, "leakage at bin {i}");
            }
        }
    }

    #[test]
    fn two_dimensional_round_trip() {
        let spec = GridSpec::new(D2, 32, rat(2, 1)).unwrap();
        let t = Transform::new(&spec);
        let f = GridFunction::from_fn(&spec, |x| Complex64::new(x[0].sin() + x[1].cos(), 0.0));
        let g = t.idft(&t.dft(&f.samples));
        let err: f64 = f
            .samples
            .iter()
            .zip(&g)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        assert!(err < 1e-12);
    }

    #[test]
    fn lp_norm_homogeneity_is_exact() {
        let spec = spec1d();
        let f = GridFunction::from_fn(&spec, |x| Complex64::new((x[0] * 0.3).sin(), 0.1));
        for p in ["1/2", "1", "2", "4", "inf"] {
            let p: ReciprocalIndex = p.parse().unwrap();
            let a = lp_norm(&f.scale(Complex64::new(-3.5, 0.0)), p);
            let b = 3.5 * lp_norm(&f, p);
            assert!((a - b).abs() <= 1e-12 * b.max(1.0), "homogeneity at p={p}: {a} vs {b}");
        }
    }

    #[test]
    fn spec_validation() {
        assert!(GridSpec::new(D1, 100, rat(8, 1)).is_err());
        assert!(GridSpec::new(D1, 256, rat(0, 1)).is_err());
        assert!(GridSpec::new(D1, 16, rat(8, 1)).is_err()); // Nyquist 1 < 4
        assert!(GridSpec::new(Dimension::new(3).unwrap(), 16, rat(1, 1)).is_err());
    }
}
