//! Smooth compactly supported window profiles. One polynomial
//! transition shape (a high-order smoothstep) drives every multiplier in
//! the bank layer: the unit-cell cutoff, the dyadic radial cap, and the
//! ball bumps of the α-covering. High smoothness order keeps the
//! spatial tails of the synthesized multipliers decaying fast enough for
//! the translate-based probe families.

/// Monotone polynomial step of smoothness class `C^order`:
/// `0` at `x <= 0`, `1` at `x >= 1`.
pub fn smoothstep(order: u32, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    // The alternating series is ill-conditioned near 1; use the point
    // symmetry S(x) = 1 - S(1-x) to stay on the well-conditioned half.
    if x > 0.5 {
        1.0 - smoothstep_lower_half(order, 1.0 - x)
    } else {
        smoothstep_lower_half(order, x)
    }
}

/// `S_N(x) = x^{N+1} · Σ_{k=0..N} C(N+k,k) C(2N+1,N−k) (−x)^k`,
/// evaluated only for `x <= 1/2`.
fn smoothstep_lower_half(order: u32, x: f64) -> f64 {
    let n = order as i64;
    let mut acc = 0.0f64;
    for k in (0..=n).rev() {
        let c = binomial(n + k, k) * binomial(2 * n + 1, n - k);
        acc = acc * (-x) + c;
    }
    acc * x.powi((n + 1) as i32)
}

fn binomial(n: i64, k: i64) -> f64 {
    if k < 0 || k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut num = 1.0f64;
    let mut den = 1.0f64;
    for i in 0..k {
        num *= (n - i) as f64;
        den *= (i + 1) as f64;
    }
    num / den
}

/// A symmetric bump profile: identically `1` on `[-plateau, plateau]`,
/// `0` outside `(-support, support)`, smooth monotone transition
/// between. Values are always in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct WindowProfile {
    pub plateau: f64,
    pub support: f64,
    pub order: u32,
}

impl WindowProfile {
    pub fn new(plateau: f64, support: f64, order: u32) -> Self {
        assert!(
            0.0 < plateau && plateau < support,
            "need 0 < plateau < support, got {plateau}, {support}"
        );
        WindowProfile { plateau, support, order }
    }

    /// Cutoff adapted to the unit cube: plateau `[-1/2,1/2]`, support
    /// `[-3/4,3/4]`. Base window of the uniform decomposition.
    pub fn unit_cell() -> Self {
        WindowProfile::new(0.5, 0.75, 8)
    }

    /// Radial cap for the dyadic decomposition: `1` through `5/4`,
    /// gone from `3/2`. Chosen so each dyadic difference is exactly `1`
    /// on the shell `3/4·2^j <= |ξ| <= 5/4·2^j`.
    pub fn dyadic_cap() -> Self {
        WindowProfile::new(1.25, 1.5, 8)
    }

    /// Bump with support half-width `h` and plateau `h/2`; used for the
    /// probe carriers with spectrum inside `[-h, h]^d`.
    pub fn half_width(h: f64) -> Self {
        WindowProfile::new(h / 2.0, h, 8)
    }

    /// Shell profile supported in `3/4 <= |t| <= 5/4`, identically `1`
    /// on `7/8 <= |t| <= 9/8`, for the dyadic-shell probe family.
    pub fn shell() -> ShellProfile {
        ShellProfile { inner: WindowProfile::new(1.0 / 8.0, 1.0 / 4.0, 8) }
    }

    pub fn value(&self, t: f64) -> f64 {
        let a = t.abs();
        if a <= self.plateau {
            1.0
        } else if a >= self.support {
            0.0
        } else {
            smoothstep(self.order, (self.support - a) / (self.support - self.plateau))
        }
    }

    /// Tensor-product evaluation over the first `d` coordinates.
    pub fn tensor(&self, t: [f64; 2], d: u32) -> f64 {
        match d {
            1 => self.value(t[0]),
            _ => self.value(t[0]) * self.value(t[1]),
        }
    }

    /// Radial evaluation `value(|t|)`.
    pub fn radial(&self, t: [f64; 2]) -> f64 {
        self.value((t[0] * t[0] + t[1] * t[1]).sqrt())
    }
}

/// Radial annulus profile centred on `|t| = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ShellProfile {
    inner: WindowProfile,
}

impl ShellProfile {
    pub fn value(&self, t: f64) -> f64 {
        self.inner.value(t.abs() - 1.0)
    }

    pub fn radial(&self, t: [f64; 2]) -> f64 {
        self.value((t[0] * t[0] + t[1] * t[1]).sqrt())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smoothstep_endpoints_and_monotonicity() {
        assert_eq!(smoothstep(8, -0.1), 0.0);
        assert_eq!(smoothstep(8, 1.1), 1.0);
        assert!((smoothstep(8, 0.5) - 0.5).abs() < 1e-12, "odd symmetry about 1/2");
        let mut prev = 0.0;
        for i in 0..=1000 {
            let v = smoothstep(8, i as f64 / 1000.0);
            assert!(v >= prev - 1e-12, "monotone at {i}");
            assert!((0.0..=1.0).contains(&v));
            prev = v;
        }
    }

    #[test]
    fn classic_cubic_case() {
        // order 1 is the familiar 3x^2 - 2x^3
        let x = 0.3f64;
        assert!((smoothstep(1, x) - (3.0 * x * x - 2.0 * x * x * x)).abs() < 1e-14);
    }

    #[test]
    fn unit_cell_profile_shape() {
        let w = WindowProfile::unit_cell();
        assert_eq!(w.value(0.0), 1.0);
        assert_eq!(w.value(0.5), 1.0);
        assert_eq!(w.value(-0.5), 1.0);
        assert_eq!(w.value(0.75), 0.0);
        assert_eq!(w.value(2.0), 0.0);
        let mid = w.value(0.625);
        assert!(mid > 0.0 && mid < 1.0);
    }

    #[test]
    fn shell_is_one_on_its_core() {
        let s = WindowProfile::shell();
        assert_eq!(s.value(7.0 / 8.0), 1.0);
        assert_eq!(s.value(9.0 / 8.0), 1.0);
        assert_eq!(s.value(1.0), 1.0);
        assert_eq!(s.value(3.0 / 4.0), 0.0);
        assert_eq!(s.value(5.0 / 4.0), 0.0);
        assert_eq!(s.value(0.0), 0.0);
    }
}
