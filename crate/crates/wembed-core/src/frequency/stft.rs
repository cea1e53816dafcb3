//! Discrete short-time Fourier transform on the periodic grid:
//! `V_g f(x, ξ) = ∫ f(t) conj(g(t − x)) e^{-i t ξ} dt`, sampled at a
//! stride sub-lattice of positions and the full frequency lattice. Used
//! only by the cross-check between the transform-side and
//! decomposition-side definitions of the uniform-scale norms.

use super::grid::{GridError, GridFunction, Transform};
use num_complex::Complex64;

/// STFT samples: `values[pos_index * spectrum_len + freq_index]`, plus
/// the effective position-cell volume for Riemann sums.
#[derive(Debug, Clone)]
pub struct StftGrid {
    pub positions: usize,
    pub spectrum_len: usize,
    pub stride: usize,
    pub values: Vec<Complex64>,
    /// Volume of one position cell (`(stride·Δx)^d`).
    pub pos_cell_volume: f64,
    /// Volume of one frequency cell (`Δξ^d`).
    pub freq_cell_volume: f64,
}

/// Compute the STFT against a window with unit `L²` norm.
///
/// `stride` subsamples the translation lattice in every dimension;
/// it must divide the grid size.
pub fn stft_grid(
    transform: &Transform,
    f: &GridFunction,
    window: &GridFunction,
    stride: usize,
) -> Result<StftGrid, GridError> {
    let spec = transform.spec();
    if f.spec != *spec || window.spec != *spec {
        return Err(GridError::LengthMismatch { got: f.samples.len(), want: spec.len() });
    }
    let n = spec.samples_per_dim();
    if stride == 0 || n % stride != 0 {
        return Err(GridError::LengthMismatch { got: stride, want: n });
    }
    let d = spec.dim().get();
    let positions_per_dim = n / stride;
    let positions = positions_per_dim.pow(d);
    let len = spec.len();
    let mut values = Vec::with_capacity(positions * len);
    let mut windowed = vec![Complex64::new(0.0, 0.0); len];
    let cell = spec.cell_volume();
    for pos in 0..positions {
        // translation offsets in sample units per dimension
        let (sx, sy) = match d {
            1 => (pos * stride, 0),
            _ => ((pos / positions_per_dim) * stride, (pos % positions_per_dim) * stride),
        };
        for (i, slot) in windowed.iter_mut().enumerate() {
            let (ti, tj) = if d == 1 { (i, 0) } else { (i / n, i % n) };
            // g(t - x) with periodic wraparound
            let gi = (ti + n - sx) % n;
            let gj = (tj + n - sy) % n;
            let g = if d == 1 { window.samples[gi] } else { window.samples[gi * n + gj] };
            *slot = f.samples[i] * g.conj();
        }
        let mut spec_row = windowed.clone();
        transform.dft_in_place(&mut spec_row);
        for z in spec_row.iter_mut() {
            *z *= cell;
        }
        values.extend_from_slice(&spec_row);
    }
    Ok(StftGrid {
        positions,
        spectrum_len: len,
        stride,
        values,
        pos_cell_volume: (stride as f64 * spec.dx()).powi(d as i32),
        freq_cell_volume: spec.dxi().powi(d as i32),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frequency::grid::{l2_norm, GridFunction, GridSpec};
    use crate::indices::{rat, D1};

    fn gaussian_pair() -> (GridSpec, GridFunction) {
        let spec = GridSpec::new(D1, 256, rat(8, 1)).unwrap();
        let centre = 8.0 * std::f64::consts::PI;
        let g = GridFunction::from_fn(&spec, |x| {
            let c = x[0] - centre;
            Complex64::new((-c * c / 2.0).exp(), 0.0)
        });
        let norm = l2_norm(&g);
        (spec.clone(), g.scale(Complex64::new(1.0 / norm, 0.0)))
    }

    #[test]
    fn self_transform_peaks_at_one() {
        let (spec, g) = gaussian_pair();
        let t = Transform::new(&spec);
        let out = stft_grid(&t, &g, &g, 8).unwrap();
        // |V_g g| attains its maximum <= 1 with value 1 at the matching
        // translation/modulation (here: the window's own position, zero
        // frequency); the window is centred mid-period, so position
        // index 0 matches.
        let peak = out
            .values
            .iter()
            .map(|z| z.norm())
            .fold(0.0f64, f64::max);
        assert!((peak - 1.0).abs() < 1e-8, "peak {peak}");
        let at_zero = out.values[0].norm();
        assert!((at_zero - 1.0).abs() < 1e-8, "V_g g at (0,0) = {at_zero}");
    }

    #[test]
    fn modulation_covariance() {
        let (spec, g) = gaussian_pair();
        let t = Transform::new(&spec);
        // k on the frequency lattice: k = 16 * dxi = 2
        let k = 16.0 * spec.dxi();
        let f = GridFunction::from_fn(&spec, |x| {
            let c = x[0] - 8.0 * std::f64::consts::PI;
            Complex64::new(0.0, k * x[0]).exp() * Complex64::new((-c * c / 2.0).exp(), 0.0)
        });
        let base = GridFunction::from_fn(&spec, |x| {
            let c = x[0] - 8.0 * std::f64::consts::PI;
            Complex64::new((-c * c / 2.0).exp(), 0.0)
        });
        let vf = stft_grid(&t, &f, &g, 16).unwrap();
        let vb = stft_grid(&t, &base, &g, 16).unwrap();
        // |V_g (e^{ik.} f)(x, xi)| = |V_g f(x, xi - k)|: bins shift by 16
        let n = spec.len();
        for pos in 0..vf.positions {
            for bin in 0..n {
                let shifted = (bin + n - 16) % n;
                let a = vf.values[pos * n + bin].norm();
                let b = vb.values[pos * n + shifted].norm();
                assert!(
                    (a - b).abs() < 1e-9 * (1.0 + b),
                    "covariance at pos {pos} bin {bin}: {a} vs {b}"
                );
            }
        }
    }

    #[test]
    fn translation_covariance() {
        let (spec, g) = gaussian_pair();
        let t = Transform::new(&spec);
        let shift = 32usize; // samples
        let base = GridFunction::from_fn(&spec, |x| {
            let c = x[0] - 8.0 * std::f64::consts::PI;
            Complex64::new((-c * c / 2.0).exp(), 0.0)
        });
        let mut moved = base.clone();
        moved.samples.rotate_right(shift);
        let vb = stft_grid(&t, &base, &g, 8).unwrap();
        let vm = stft_grid(&t, &moved, &g, 8).unwrap();
        // |V_g (T_y f)(x, xi)| = |V_g f(x - y, xi)|: positions shift by 4
        let n = spec.len();
        let pshift = shift / 8;
        for pos in 0..vm.positions {
            let from = (pos + vm.positions - pshift) % vm.positions;
            for bin in 0..n {
                let a = vm.values[pos * n + bin].norm();
                let b = vb.values[from * n + bin].norm();
                assert!(
                    (a - b).abs() < 1e-9 * (1.0 + b),
                    "translation covariance at pos {pos} bin {bin}"
                );
            }
        }
    }
}
