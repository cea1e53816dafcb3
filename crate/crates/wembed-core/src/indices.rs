//! Exact rational arithmetic on reciprocal Lebesgue exponents and the
//! piecewise-linear index functions that drive every embedding decision.
//!
//! All comparisons between Lebesgue exponents happen on the reciprocal
//! scale: for exponents `p`, `r` with reciprocals `u = 1/p`, `w = 1/r`,
//! the exponent-scale inequality `p <= r` is equivalent to `u >= w`.
//! This module keeps that flip in one place (`ReciprocalIndex::exp_le`
//! and friends) so the decision procedures never juggle signs by hand.
//!
//! A notation warning inherited from the source material: we use the
//! standard reading `a ∨ b = max(a, b)` and `a ∧ b = min(a, b)`. Every
//! downstream threshold (`tau1`, `sigma1`, `tau`, `sigma`) and every
//! hypothesis of the form `q >= q0 ∧ 2` is evaluated with that reading;
//! it is the only one consistent with the theorems' own proofs.

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// Exact rational scalar. Stored in lowest terms with positive denominator.
pub type Rational = Ratio<i64>;

/// Shorthand constructor for a rational `n/d`.
///
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// Ambient dimension. Only `d >= 1` is meaningful.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Dimension(u32);

impl Dimension {
    pub fn new(d: u32) -> Result<Self, IndexError> {
        if d == 0 {
            Err(IndexError::ZeroDimension)
        } else {
            Ok(Dimension(d))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// The dimension as an exact rational, for use in index formulas.
    pub fn as_rational(self) -> Rational {
        Rational::from_integer(i64::from(self.0))
    }
}

pub const D1: Dimension = Dimension(1);
pub const D2: Dimension = Dimension(2);

/// Errors from constructing or combining index values.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IndexError {
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("reciprocal index must be nonnegative, got {0}")]
    NegativeReciprocal(Rational),
    #[error("exponent must be positive, got {0}")]
    NonPositiveExponent(Rational),
    #[error("alpha must satisfy 0 < alpha < 1, got {0}")]
    AlphaOutOfRange(Rational),
    #[error("cannot parse `{0}` as a rational or `inf`")]
    Parse(String),
}

/// A Lebesgue exponent `p` in `(0, ∞]`, stored as its reciprocal `u = 1/p`.
///
/// `u = 0` encodes `p = ∞`; `u > 1` encodes the quasi-Banach range
/// `0 < p < 1`. All arithmetic in the index formulas is done directly on
/// `u`, which is the coordinate used in the region diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ReciprocalIndex {
    u: Rational,
}

impl ReciprocalIndex {
    /// Build from the reciprocal value `u = 1/p >= 0`.
    pub fn from_recip(u: Rational) -> Result<Self, IndexError> {
        if u.is_negative() {
            Err(IndexError::NegativeReciprocal(u))
        } else {
            Ok(ReciprocalIndex { u })
        }
    }

    /// Build from the exponent itself (`p > 0`).
    pub fn from_exponent(p: Rational) -> Result<Self, IndexError> {
        if p.is_positive() {
            Ok(ReciprocalIndex { u: p.recip() })
        } else {
            Err(IndexError::NonPositiveExponent(p))
        }
    }

    /// The exponent `p = ∞`, i.e. `u = 0`.
    pub fn infinity() -> Self {
        ReciprocalIndex { u: Rational::zero() }
    }

    /// Reciprocal value `u = 1/p`.
    pub fn recip(self) -> Rational {
        self.u
    }

    pub fn is_infinite(self) -> bool {
        self.u.is_zero()
    }

    pub fn is_finite(self) -> bool {
        !self.u.is_zero()
    }

    /// `p <= other` on the exponent scale (note the reciprocal flip).
    pub fn exp_le(self, other: Self) -> bool {
        self.u >= other.u
    }

    /// `p < other` on the exponent scale.
    pub fn exp_lt(self, other: Self) -> bool {
        self.u > other.u
    }

    /// `p >= other` on the exponent scale.
    pub fn exp_ge(self, other: Self) -> bool {
        self.u <= other.u
    }

    /// `p > other` on the exponent scale.
    pub fn exp_gt(self, other: Self) -> bool {
        self.u < other.u
    }

    /// `min(p, q)` on the exponent scale (the larger reciprocal).
    pub fn exp_min(self, other: Self) -> Self {
        if self.u >= other.u {
            self
        } else {
            other
        }
    }

    /// `max(p, q)` on the exponent scale (the smaller reciprocal).
    pub fn exp_max(self, other: Self) -> Self {
        if self.u <= other.u {
            self
        } else {
            other
        }
    }

    /// Compare against an integer exponent, e.g. `p <= 2`.
    pub fn exp_le_int(self, n: i64) -> bool {
        self.u >= rat(1, n)
    }

    pub fn exp_lt_int(self, n: i64) -> bool {
        self.u > rat(1, n)
    }

    pub fn exp_ge_int(self, n: i64) -> bool {
        self.u <= rat(1, n)
    }

    pub fn exp_gt_int(self, n: i64) -> bool {
        self.u < rat(1, n)
    }

    pub fn exp_eq_int(self, n: i64) -> bool {
        self.u == rat(1, n)
    }

    /// The exponent as `f64` (`f64::INFINITY` when `u = 0`), for numerics.
    pub fn exponent_f64(self) -> f64 {
        if self.u.is_zero() {
            f64::INFINITY
        } else {
            (*self.u.denom() as f64) / (*self.u.numer() as f64)
        }
    }
}

impl fmt::Display for ReciprocalIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.u.is_zero() {
            write!(f, "inf")
        } else {
            write!(f, "{}", display_rational(self.u.recip()))
        }
    }
}

/// Render a rational as `n` or `n/d`.
pub fn display_rational(r: Rational) -> String {
    if r.denom() == &1 {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `a`, `a/b`, or `inf` into an exponent-form `ReciprocalIndex`.
impl FromStr for ReciprocalIndex {
    type Err = IndexError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s.eq_ignore_ascii_case("infinity") || s == "∞" {
            return Ok(ReciprocalIndex::infinity());
        }
        let p = parse_rational(s)?;
        ReciprocalIndex::from_exponent(p)
    }
}

/// Parse `a` or `a/b` into a `Rational`.
pub fn parse_rational(s: &str) -> Result<Rational, IndexError> {
    let s = s.trim();
    let err = || IndexError::Parse(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| err())?;
            let d: i64 = d.trim().parse().map_err(|_| err())?;
            if d == 0 {
                return Err(err());
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: i64 = s.parse().map_err(|_| err())?;
            Ok(Rational::from_integer(n))
        }
    }
}

impl Serialize for ReciprocalIndex {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ReciprocalIndex {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(|e: IndexError| D::Error::custom(e.to_string()))
    }
}

/// Serde adapter rendering `Rational` as `"n"` or `"n/d"`.
pub mod rational_serde {
    use super::{display_rational, parse_rational, Rational};
    use serde::de::Error as DeError;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&display_rational(*r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(de)?;
        parse_rational(&s).map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// The geometry parameter of an `α`-covering, restricted to `0 < α < 1`.
///
/// `α = 0` is the uniform decomposition and `α = 1` the dyadic one; both
/// ends are handled by their own space families, so the parameter proper
/// stays strictly inside the interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AlphaParam(#[serde(with = "rational_serde")] Rational);

impl AlphaParam {
    pub fn new(alpha: Rational) -> Result<Self, IndexError> {
        if alpha > Rational::zero() && alpha < Rational::from_integer(1) {
            Ok(AlphaParam(alpha))
        } else {
            Err(IndexError::AlphaOutOfRange(alpha))
        }
    }

    pub fn get(self) -> Rational {
        self.0
    }

    /// The covering growth exponent `α / (1 − α)`.
    pub fn beta(self) -> Rational {
        self.0 / (Rational::from_integer(1) - self.0)
    }

    /// `1 − α`.
    pub fn one_minus(self) -> Rational {
        Rational::from_integer(1) - self.0
    }

    pub fn as_f64(self) -> f64 {
        (*self.0.numer() as f64) / (*self.0.denom() as f64)
    }
}

fn max3(a: Rational, b: Rational, c: Rational) -> Rational {
    a.max(b).max(c)
}

fn min3(a: Rational, b: Rational, c: Rational) -> Rational {
    a.min(b).min(c)
}

/// `τ₁(p,q) = d · max(0, 1/q − 1/2, 1/q + 1/p − 1)`.
///
/// Arguments are the reciprocals `u = 1/p`, `v = 1/q`.
pub fn tau1(u: ReciprocalIndex, v: ReciprocalIndex, d: Dimension) -> Rational {
    let (u, v) = (u.recip(), v.recip());
    d.as_rational() * max3(Rational::zero(), v - rat(1, 2), u + v - rat(1, 1))
}

/// `σ₁(p,q) = d · min(0, 1/q − 1/2, 1/q + 1/p − 1)`.
pub fn sigma1(u: ReciprocalIndex, v: ReciprocalIndex, d: Dimension) -> Rational {
    let (u, v) = (u.recip(), v.recip());
    d.as_rational() * min3(Rational::zero(), v - rat(1, 2), u + v - rat(1, 1))
}

/// `(τ(p,q), σ(p,q), a(p,q))` with
/// `τ = d·max(0, 1/q − 1/p, 1/q + 1/p − 1)`, `σ` the matching min, and
/// `a = d(1/p + 1/q − 1)`.
pub fn tau_sigma_a(
    u: ReciprocalIndex,
    v: ReciprocalIndex,
    d: Dimension,
) -> (Rational, Rational, Rational) {
    let dd = d.as_rational();
    let (u, v) = (u.recip(), v.recip());
    let a = dd * (u + v - rat(1, 1));
    let tau = dd * max3(Rational::zero(), v - u, u + v - rat(1, 1));
    let sigma = dd * min3(Rational::zero(), v - u, u + v - rat(1, 1));
    (tau, sigma, a)
}

/// `τ(p,q)` alone.
pub fn tau(u: ReciprocalIndex, v: ReciprocalIndex, d: Dimension) -> Rational {
    tau_sigma_a(u, v, d).0
}

/// `σ(p,q)` alone.
pub fn sigma(u: ReciprocalIndex, v: ReciprocalIndex, d: Dimension) -> Rational {
    tau_sigma_a(u, v, d).1
}

/// `a(p,q) = d(1/p + 1/q − 1)`.
pub fn index_a(u: ReciprocalIndex, v: ReciprocalIndex, d: Dimension) -> Rational {
    tau_sigma_a(u, v, d).2
}

/// Dual exponent: `1/p + 1/p' = 1` for `1 <= p <= ∞`, and `p' = ∞` for
/// `0 < p < 1`.
pub fn dual_index(u: ReciprocalIndex) -> ReciprocalIndex {
    let one = Rational::from_integer(1);
    if u.recip() <= one {
        ReciprocalIndex { u: one - u.recip() }
    } else {
        ReciprocalIndex::infinity()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ri(n: i64, d: i64) -> ReciprocalIndex {
        ReciprocalIndex::from_recip(rat(n, d)).unwrap()
    }

    #[test]
    fn tau1_examples() {
        // all three terms <= 0
        assert_eq!(tau1(ri(0, 1), ri(0, 1), D2), rat(0, 1));
        // max(0, 1/2, 1) = 1
        assert_eq!(tau1(ri(1, 1), ri(1, 1), D1), rat(1, 1));
        // triple point: all three terms vanish
        assert_eq!(tau1(ri(1, 2), ri(1, 2), D1), rat(0, 1));
    }

    #[test]
    fn sigma1_examples() {
        // min(0, -1/2, -1) = -1
        assert_eq!(sigma1(ri(0, 1), ri(0, 1), D1), rat(-1, 1));
        assert_eq!(sigma1(ri(1, 2), ri(1, 2), Dimension::new(3).unwrap()), rat(0, 1));
        // min(0, -1/4, -1/2) = -1/2
        assert_eq!(sigma1(ri(1, 4), ri(1, 4), D1), rat(-1, 2));
    }

    #[test]
    fn tau_sigma_a_examples() {
        assert_eq!(tau_sigma_a(ri(1, 2), ri(1, 1), D1), (rat(1, 2), rat(0, 1), rat(1, 2)));
        assert_eq!(tau_sigma_a(ri(1, 1), ri(1, 1), D2), (rat(2, 1), rat(0, 1), rat(2, 1)));
        assert_eq!(tau_sigma_a(ri(1, 2), ri(1, 2), D1), (rat(0, 1), rat(0, 1), rat(0, 1)));
    }

    #[test]
    fn dual_index_examples() {
        // p = 2 is self-dual
        assert_eq!(dual_index(ri(1, 2)), ri(1, 2));
        // p = 1 dualizes to infinity
        assert_eq!(dual_index(ri(1, 1)), ReciprocalIndex::infinity());
        // quasi-Banach range dualizes to infinity
        assert_eq!(dual_index(ri(3, 2)), ReciprocalIndex::infinity());
        // p = infinity dualizes to 1
        assert_eq!(dual_index(ReciprocalIndex::infinity()), ri(1, 1));
    }

    #[test]
    fn dual_is_involution_on_unit_interval() {
        for n in 0..=16 {
            let u = ri(n, 16);
            assert_eq!(dual_index(dual_index(u)), u, "double dual at u={n}/16");
        }
    }

    #[test]
    fn tau1_sign_and_duality_identity() {
        // tau1 >= 0, sigma1 <= 0, and the duality reflection identity
        // tau1(u,v) = -sigma1(1-u, 1-v) on the unit square, step 1/16.
        for nu in 0..=16 {
            for nv in 0..=16 {
                let (u, v) = (ri(nu, 16), ri(nv, 16));
                for d in [D1, D2] {
                    let t = tau1(u, v, d);
                    let s = sigma1(u, v, d);
                    assert!(t >= rat(0, 1));
                    assert!(s <= rat(0, 1));
                    let (du, dv) = (ri(16 - nu, 16), ri(16 - nv, 16));
                    assert_eq!(t, -sigma1(du, dv, d), "duality at ({nu}/16,{nv}/16)");
                }
            }
        }
    }

    #[test]
    fn tau1_piecewise_cases() {
        // The three-case description: region (1) v <= 1/2 and u+v <= 1 gives 0;
        // region (2) v >= 1/2 and u <= 1/2 gives d(v - 1/2);
        // region (3) u >= 1/2 and u+v >= 1 gives d(u+v-1).
        for nu in 0..=32 {
            for nv in 0..=32 {
                let (u, v) = (rat(nu, 16), rat(nv, 16));
                let ru = ReciprocalIndex::from_recip(u).unwrap();
                let rv = ReciprocalIndex::from_recip(v).unwrap();
                let t = tau1(ru, rv, D1);
                if v <= rat(1, 2) && u + v <= rat(1, 1) {
                    assert_eq!(t, rat(0, 1));
                }
                if v >= rat(1, 2) && u <= rat(1, 2) {
                    assert_eq!(t, v - rat(1, 2));
                }
                if u >= rat(1, 2) && u + v >= rat(1, 1) {
                    assert_eq!(t, u + v - rat(1, 1));
                }
            }
        }
    }

    #[test]
    fn exponent_scale_comparisons() {
        let p_half = ri(2, 1); // p = 1/2
        let p1 = ri(1, 1);
        let p2 = ri(1, 2);
        let pinf = ReciprocalIndex::infinity();
        assert!(p_half.exp_lt(p1));
        assert!(p1.exp_lt(p2));
        assert!(p2.exp_lt(pinf));
        assert_eq!(p1.exp_min(p2), p1);
        assert_eq!(p1.exp_max(pinf), pinf);
        assert!(p2.exp_le_int(2) && p2.exp_ge_int(2));
        assert!(pinf.exp_gt_int(2));
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["2", "1/2", "inf", "3/4", "7"] {
            let r: ReciprocalIndex = s.parse().unwrap();
            let back: ReciprocalIndex = r.to_string().parse().unwrap();
            assert_eq!(r, back);
        }
        assert!("0".parse::<ReciprocalIndex>().is_err());
        assert!("-3".parse::<ReciprocalIndex>().is_err());
        assert!("x/y".parse::<ReciprocalIndex>().is_err());
    }
}
