//! Frequency decomposition banks: the uniform unit-cube partition, the
//! dyadic annular partition, and the ball covering driven by an α
//! parameter. A bank is an immutable set of nonnegative multipliers on
//! the frequency lattice summing to one on its covered region, plus the
//! index bookkeeping (block ids and weight hooks) the norm layer needs.
//!
//! Every partition here is built by the normalization trick: sample a
//! window `G` per block and divide by the total, so the partition of
//! unity is exact wherever the pre-normalization sum is positive. The
//! α bank validates the quantitative lower bound `sum G >= 1/2` on its
//! covered ball at build time and refuses to build otherwise.

use super::grid::{GridError, GridFunction, GridSpec, Transform};
use super::window::WindowProfile;
use crate::indices::{rat, AlphaParam, Rational};
use num_complex::Complex64;
use num_traits::ToPrimitive;

/// Errors from bank construction and application.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BankError {
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error("grid too small for a bank: largest whole block index {k_max} < 3")]
    SpecTooSmall { k_max: i64 },
    #[error("block index {index} out of range ({len} blocks)")]
    IndexOutOfRange { index: usize, len: usize },
    #[error(
        "covering gap: pre-normalization sum dropped to {min} (< {required}) at |xi| = {at}; \
         the ball constants do not cover this alpha"
    )]
    CoverageGap { min: f64, required: f64, at: f64 },
}

/// Identity of one block within a bank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockId {
    /// Unit-lattice block at integer centre `k` (uniform and α banks).
    Lattice([i64; 2]),
    /// Dyadic level `j` (0 is the low-frequency cap).
    Level(u32),
}

impl std::fmt::Display for BlockId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BlockId::Lattice(k) => write!(f, "k=({},{})", k[0], k[1]),
            BlockId::Level(j) => write!(f, "j={j}"),
        }
    }
}

/// A multiplier stored on its integer-frequency bounding box.
#[derive(Debug, Clone)]
pub struct Multiplier {
    /// Lower corner in integer frequency multiples, per dimension.
    lo: [i64; 2],
    /// Box extent per dimension (second entry 1 when d = 1).
    size: [usize; 2],
    /// Row-major values over the box.
    values: Vec<f64>,
}

impl Multiplier {
    fn index_of(&self, m: [i64; 2]) -> Option<usize> {
        let i = m[0] - self.lo[0];
        let j = m[1] - self.lo[1];
        if i < 0 || j < 0 || i as usize >= self.size[0] || j as usize >= self.size[1] {
            return None;
        }
        Some(i as usize * self.size[1] + j as usize)
    }

    /// Visit all (flat spectrum bin, value) pairs with nonzero value.
    pub fn for_each(&self, spec: &GridSpec, mut f: impl FnMut(usize, f64)) {
        let n = spec.samples_per_dim();
        let d = spec.dim().get();
        for bi in 0..self.size[0] {
            let m0 = self.lo[0] + bi as i64;
            let bin0 = (m0.rem_euclid(n as i64)) as usize;
            for bj in 0..self.size[1] {
                let v = self.values[bi * self.size[1] + bj];
                if v == 0.0 {
                    continue;
                }
                let flat = if d == 1 {
                    bin0
                } else {
                    let m1 = self.lo[1] + bj as i64;
                    bin0 * n + (m1.rem_euclid(n as i64)) as usize
                };
                f(flat, v);
            }
        }
    }

    /// Value at an integer frequency multiple (0 outside the box).
    pub fn value_at(&self, m: [i64; 2]) -> f64 {
        self.index_of(m).map_or(0.0, |i| self.values[i])
    }
}

/// Bank flavour plus flavour-specific bookkeeping.
#[derive(Debug, Clone)]
pub enum BankKind {
    Uniform {
        /// Largest block coordinate per dimension.
        k_max: i64,
    },
    Dyadic {
        /// Highest level `J`; blocks are `j = 0..=J`.
        levels: u32,
    },
    Alpha {
        alpha: AlphaParam,
        /// Radius of the ball on which the partition is validated.
        covered_radius: f64,
        /// Measured minimum of the pre-normalization sum on that ball.
        prenorm_min: f64,
        /// Measured maximum number of overlapping blocks.
        max_overlap: usize,
    },
}

/// An immutable bank of frequency multipliers with index bookkeeping.
#[derive(Debug, Clone)]
pub struct DecompositionBank {
    spec: GridSpec,
    kind: BankKind,
    ids: Vec<BlockId>,
    multipliers: Vec<Multiplier>,
}

/// Ball-covering constants of the α bank: blocks are balls of radius
/// `big_c * R_k` around the covering centres, guaranteed flat on
/// `small_c * R_k`, with the transition confined to the outer
/// `1 - plateau_fraction` of the support radius.
#[derive(Debug, Clone)]
pub struct AlphaBankConfig {
    pub small_c: f64,
    pub big_c: f64,
    pub plateau_fraction: f64,
    pub order: u32,
}

impl Default for AlphaBankConfig {
    fn default() -> Self {
        AlphaBankConfig { small_c: 0.5, big_c: 2.0, plateau_fraction: 0.8, order: 8 }
    }
}

impl DecompositionBank {
    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    pub fn kind(&self) -> &BankKind {
        &self.kind
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn id(&self, i: usize) -> BlockId {
        self.ids[i]
    }

    pub fn ids(&self) -> &[BlockId] {
        &self.ids
    }

    pub fn multiplier(&self, i: usize) -> &Multiplier {
        &self.multipliers[i]
    }

    /// Index of a lattice block id, if present.
    pub fn position_of(&self, id: BlockId) -> Option<usize> {
        self.ids.iter().position(|x| *x == id)
    }

    /// The family weight of block `i` at smoothness `s`:
    /// `<k>^s` (uniform), `2^{js}` (dyadic), `<k>^{s/(1-α)}` (α bank,
    /// which makes the weight comparable to `<ξ>^s` on the block).
    pub fn weight(&self, i: usize, s: f64) -> f64 {
        match (&self.kind, self.ids[i]) {
            (BankKind::Uniform { .. }, BlockId::Lattice(k)) => bracket_int(k).powf(s),
            (BankKind::Dyadic { .. }, BlockId::Level(j)) => (2.0f64).powf(j as f64 * s),
            (BankKind::Alpha { alpha, .. }, BlockId::Lattice(k)) => {
                let expo = s / alpha.one_minus().to_f64().expect("finite");
                bracket_int(k).powf(expo)
            }
            _ => unreachable!("bank kind and id kind always agree"),
        }
    }

    /// Whether a frequency lies in the region where the bank's
    /// partition of unity is exact.
    pub fn covers(&self, xi: [f64; 2]) -> bool {
        match &self.kind {
            BankKind::Uniform { k_max } => {
                let bound = *k_max as f64 + 0.25;
                xi[0].abs() <= bound && xi[1].abs() <= bound
            }
            BankKind::Dyadic { levels } => {
                let bound = 1.25 * (2.0f64).powi(*levels as i32);
                (xi[0] * xi[0] + xi[1] * xi[1]).sqrt() <= bound
            }
            BankKind::Alpha { covered_radius, .. } => {
                (xi[0] * xi[0] + xi[1] * xi[1]).sqrt() <= *covered_radius
            }
        }
    }

    /// Apply one block's multiplier to a function.
    pub fn apply_block(
        &self,
        transform: &Transform,
        index: usize,
        f: &GridFunction,
    ) -> Result<GridFunction, BankError> {
        if index >= self.len() {
            return Err(BankError::IndexOutOfRange { index, len: self.len() });
        }
        let spectrum = transform.dft(&f.samples);
        let mut out = vec![Complex64::new(0.0, 0.0); spectrum.len()];
        self.multipliers[index].for_each(&self.spec, |flat, v| {
            out[flat] = spectrum[flat] * v;
        });
        let mut data = out;
        transform.idft_in_place(&mut data);
        Ok(GridFunction { spec: self.spec.clone(), samples: data })
    }

    /// Sum of all block images; equals the input up to the truncation
    /// tail outside the covered region.
    pub fn reconstruct(&self, transform: &Transform, f: &GridFunction) -> GridFunction {
        let spectrum = transform.dft(&f.samples);
        let mut acc = vec![Complex64::new(0.0, 0.0); spectrum.len()];
        for m in &self.multipliers {
            m.for_each(&self.spec, |flat, v| {
                acc[flat] += spectrum[flat] * v;
            });
        }
        transform.idft_in_place(&mut acc);
        GridFunction { spec: self.spec.clone(), samples: acc }
    }

    /// Largest deviation `|Σ_k multiplier_k(ξ) − 1|` over covered
    /// lattice frequencies.
    pub fn partition_deviation(&self) -> f64 {
        let sums = self.multiplier_sums(1);
        let mut worst = 0.0f64;
        for (flat, s) in sums.iter().enumerate() {
            if self.covers(self.spec.freq_at(flat)) {
                worst = worst.max((s - 1.0).abs());
            }
        }
        worst
    }

    /// Minimum of `Σ_k multiplier_k(ξ)²` over covered lattice
    /// frequencies (the lower Riesz constant of the bank at `p = 2`).
    pub fn min_square_sum(&self) -> f64 {
        let sums = self.multiplier_sums(2);
        let mut min = f64::INFINITY;
        for (flat, s) in sums.iter().enumerate() {
            if self.covers(self.spec.freq_at(flat)) {
                min = min.min(*s);
            }
        }
        min
    }

    /// Maximum number of blocks with nonzero multiplier at any covered
    /// lattice frequency.
    pub fn max_overlap(&self) -> usize {
        let mut counts = vec![0usize; self.spec.len()];
        for m in &self.multipliers {
            m.for_each(&self.spec, |flat, _| counts[flat] += 1);
        }
        counts
            .iter()
            .enumerate()
            .filter(|(flat, _)| self.covers(self.spec.freq_at(*flat)))
            .map(|(_, c)| *c)
            .max()
            .unwrap_or(0)
    }

    fn multiplier_sums(&self, power: u32) -> Vec<f64> {
        let mut sums = vec![0.0f64; self.spec.len()];
        for m in &self.multipliers {
            m.for_each(&self.spec, |flat, v| {
                sums[flat] += if power == 1 { v } else { v * v };
            });
        }
        sums
    }

    /// For an α bank: the unit-lattice cells whose cube support fits
    /// entirely inside block `k`'s ball. Their count grows like
    /// `<k>^{αd/(1-α)}`.
    pub fn cells_inside_alpha_block(&self, i: usize) -> Vec<[i64; 2]> {
        let BankKind::Alpha { alpha, .. } = &self.kind else {
            return Vec::new();
        };
        let BlockId::Lattice(k) = self.ids[i] else {
            return Vec::new();
        };
        let d = self.spec.dim().get();
        let beta = ratio_f64(alpha.beta());
        let radius = bracket_int(k).powf(beta);
        let centre = [k[0] as f64 * radius, k[1] as f64 * radius];
        let reach = AlphaBankConfig::default().big_c * radius - 0.75 * (d as f64).sqrt();
        if reach <= 0.0 {
            return Vec::new();
        }
        let mut cells = Vec::new();
        let lo0 = (centre[0] - reach).ceil() as i64;
        let hi0 = (centre[0] + reach).floor() as i64;
        for c0 in lo0..=hi0 {
            if d == 1 {
                let dist = (c0 as f64 - centre[0]).abs();
                if dist + 0.75 <= AlphaBankConfig::default().big_c * radius {
                    cells.push([c0, 0]);
                }
            } else {
                let lo1 = (centre[1] - reach).ceil() as i64;
                let hi1 = (centre[1] + reach).floor() as i64;
                for c1 in lo1..=hi1 {
                    let dx = c0 as f64 - centre[0];
                    let dy = c1 as f64 - centre[1];
                    let dist = (dx * dx + dy * dy).sqrt();
                    if dist + 0.75 * 2.0f64.sqrt() <= AlphaBankConfig::default().big_c * radius {
                        cells.push([c0, c1]);
                    }
                }
            }
        }
        cells
    }
}

fn bracket_int(k: [i64; 2]) -> f64 {
    (1.0 + (k[0] * k[0] + k[1] * k[1]) as f64).sqrt()
}

pub(crate) fn ratio_f64(r: Rational) -> f64 {
    r.to_f64().expect("rational fits in f64")
}

// ---------------------------------------------------------------------------
// Uniform bank
// ---------------------------------------------------------------------------

/// Build the unit-cube partition `σ_k = σ(· − k)` over all whole blocks
/// `|k|_∞ <= k_max`, `k_max = floor(N/(2P) − 3/4)`.
pub fn build_uniform_bank(spec: &GridSpec) -> Result<DecompositionBank, BankError> {
    let nyquist = Rational::new(spec.samples_per_dim() as i64, 1)
        / (Rational::from_integer(2) * spec.period());
    let k_max_rat = (nyquist - rat(3, 4)).floor();
    let k_max = k_max_rat.to_integer();
    if k_max < 3 {
        return Err(BankError::SpecTooSmall { k_max });
    }
    let d = spec.dim().get();
    let window = WindowProfile::unit_cell();
    // 1D normalized cutoff: sigma(t) = G(t) / sum_m G(t - m).
    let sigma = |t: f64| -> f64 {
        let g = window.value(t);
        if g == 0.0 {
            return 0.0;
        }
        let mut denom = 0.0;
        let lo = (t - 0.75).ceil() as i64;
        let hi = (t + 0.75).floor() as i64;
        for m in lo..=hi {
            denom += window.value(t - m as f64);
        }
        g / denom
    };
    let p = spec.period();
    let mut ids = Vec::new();
    let mut multipliers = Vec::new();
    let range: Vec<i64> = (-k_max..=k_max).collect();
    let dxi = spec.dxi();
    // integer multiples m with m/P inside (c - 3/4, c + 3/4)
    let box_for = |c: i64| -> (i64, usize) {
        let lo = ((Rational::from_integer(c) - rat(3, 4)) * p).ceil().to_integer();
        let hi = ((Rational::from_integer(c) + rat(3, 4)) * p).floor().to_integer();
        (lo, (hi - lo + 1) as usize)
    };
    match d {
        1 => {
            for &k in &range {
                let (lo, size) = box_for(k);
                let values: Vec<f64> = (0..size)
                    .map(|i| sigma((lo + i as i64) as f64 * dxi - k as f64))
                    .collect();
                ids.push(BlockId::Lattice([k, 0]));
                multipliers.push(Multiplier { lo: [lo, 0], size: [size, 1], values });
            }
        }
        _ => {
            for &k0 in &range {
                let (lo0, size0) = box_for(k0);
                for &k1 in &range {
                    let (lo1, size1) = box_for(k1);
                    let mut values = Vec::with_capacity(size0 * size1);
                    for i in 0..size0 {
                        let v0 = sigma((lo0 + i as i64) as f64 * dxi - k0 as f64);
                        for j in 0..size1 {
                            let v1 = sigma((lo1 + j as i64) as f64 * dxi - k1 as f64);
                            values.push(v0 * v1);
                        }
                    }
                    ids.push(BlockId::Lattice([k0, k1]));
                    multipliers.push(Multiplier {
                        lo: [lo0, lo1],
                        size: [size0, size1],
                        values,
                    });
                }
            }
        }
    }
    Ok(DecompositionBank {
        spec: spec.clone(),
        kind: BankKind::Uniform { k_max },
        ids,
        multipliers,
    })
}

// ---------------------------------------------------------------------------
// Dyadic bank
// ---------------------------------------------------------------------------

/// Build the dyadic partition `φ_0 = ψ`, `φ_j = ψ(2^{-j}·) − ψ(2^{-j+1}·)`
/// up to level `J = floor(log2(N/(2P))) − 1`. Each `φ_j`, `j >= 1`, is
/// identically one on the shell `3/4·2^j <= |ξ| <= 5/4·2^j`.
pub fn build_dyadic_bank(spec: &GridSpec) -> Result<DecompositionBank, BankError> {
    let nyquist = Rational::new(spec.samples_per_dim() as i64, 1)
        / (Rational::from_integer(2) * spec.period());
    let mut levels: u32 = 0;
    while Rational::from_integer(1 << (levels + 1)) <= nyquist {
        levels += 1;
    }
    // floor(log2(nyquist)) is `levels` after the loop; step one back.
    let levels = levels.saturating_sub(1);
    if levels == 0 {
        return Err(BankError::SpecTooSmall { k_max: 0 });
    }
    let cap = WindowProfile::dyadic_cap();
    let psi = |xi: [f64; 2], scale: f64| cap.radial([xi[0] / scale, xi[1] / scale]);
    let d = spec.dim().get();
    let p = spec.period();
    let dxi = spec.dxi();
    let mut ids = Vec::new();
    let mut multipliers = Vec::new();
    for j in 0..=levels {
        // support radius 3/2 * 2^j for j >= 1 (and for the cap too)
        let radius = 1.5 * (2.0f64).powi(j as i32);
        let m_hi = (Rational::from_integer((radius.ceil()) as i64) * p).to_integer();
        let lo = -m_hi;
        let size = (2 * m_hi + 1) as usize;
        let value = |xi: [f64; 2]| -> f64 {
            if j == 0 {
                psi(xi, 1.0)
            } else {
                psi(xi, (2.0f64).powi(j as i32)) - psi(xi, (2.0f64).powi(j as i32 - 1))
            }
        };
        let mut values = Vec::with_capacity(if d == 1 { size } else { size * size });
        match d {
            1 => {
                for i in 0..size {
                    values.push(value([(lo + i as i64) as f64 * dxi, 0.0]));
                }
                multipliers.push(Multiplier { lo: [lo, 0], size: [size, 1], values });
            }
            _ => {
                for i in 0..size {
                    for jj in 0..size {
                        values.push(value([
                            (lo + i as i64) as f64 * dxi,
                            (lo + jj as i64) as f64 * dxi,
                        ]));
                    }
                }
                multipliers.push(Multiplier { lo: [lo, lo], size: [size, size], values });
            }
        }
        ids.push(BlockId::Level(j));
    }
    Ok(DecompositionBank {
        spec: spec.clone(),
        kind: BankKind::Dyadic { levels },
        ids,
        multipliers,
    })
}

// ---------------------------------------------------------------------------
// Alpha bank
// ---------------------------------------------------------------------------

/// Build the ball-covering partition with centres
/// `ξ_k = <k>^{α/(1-α)} k` and radii `C <k>^{α/(1-α)}`, normalized the
/// same way. Validates the pre-normalization lower bound on the covered
/// ball and errors with `CoverageGap` when the constants fail for this
/// α on this grid.
pub fn build_alpha_bank(
    spec: &GridSpec,
    alpha: AlphaParam,
) -> Result<DecompositionBank, BankError> {
    build_alpha_bank_with(spec, alpha, &AlphaBankConfig::default())
}

pub fn build_alpha_bank_with(
    spec: &GridSpec,
    alpha: AlphaParam,
    config: &AlphaBankConfig,
) -> Result<DecompositionBank, BankError> {
    let d = spec.dim().get();
    let beta = ratio_f64(alpha.beta());
    let nyq = spec.nyquist();
    let dxi = spec.dxi();
    let radius_of = |k: [i64; 2]| bracket_int(k).powf(beta);
    let centre_of = |k: [i64; 2]| {
        let r = radius_of(k);
        [k[0] as f64 * r, k[1] as f64 * r]
    };
    // include blocks whose support ball fits strictly inside the box
    let fits = |k: [i64; 2]| -> bool {
        let c = centre_of(k);
        let reach = config.big_c * radius_of(k);
        c[0].abs() + reach <= nyq - dxi && (d == 1 || c[1].abs() + reach <= nyq - dxi)
    };
    let mut included: Vec<[i64; 2]> = Vec::new();
    let mut excluded_inner_edge = f64::INFINITY;
    // walk outward in rings until every block in a ring starts beyond
    // the box diagonal
    let diag = nyq * (d as f64).sqrt();
    let mut ring: i64 = 0;
    loop {
        let mut ring_relevant = false;
        let members = ring_members(ring, d);
        for k in &members {
            if fits(*k) {
                included.push(*k);
                ring_relevant = true;
            } else {
                let inner = norm2(centre_of(*k)) - config.big_c * radius_of(*k);
                if inner <= diag {
                    ring_relevant = true;
                }
                excluded_inner_edge = excluded_inner_edge.min(inner);
            }
        }
        if !ring_relevant && ring > 0 {
            break;
        }
        ring += 1;
        if ring > 4 * spec.samples_per_dim() as i64 {
            break;
        }
    }
    if included.len() < 3 {
        return Err(BankError::SpecTooSmall { k_max: included.len() as i64 });
    }
    let covered_radius = excluded_inner_edge.min(nyq - dxi).max(0.0);
    // deterministic block order
    included.sort_by_key(|k| (k[0] * k[0] + k[1] * k[1], k[0], k[1]));
    let profile = WindowProfile::new(
        config.plateau_fraction * config.big_c,
        config.big_c,
        config.order,
    );
    // raw bumps on bounding boxes
    let mut raw: Vec<Multiplier> = Vec::with_capacity(included.len());
    for &k in &included {
        let c = centre_of(k);
        let r = radius_of(k);
        let reach = config.big_c * r;
        let lo0 = ((c[0] - reach) * ratio_f64(spec.period())).ceil() as i64;
        let hi0 = ((c[0] + reach) * ratio_f64(spec.period())).floor() as i64;
        let size0 = (hi0 - lo0 + 1).max(0) as usize;
        let (lo1, size1) = if d == 1 {
            (0i64, 1usize)
        } else {
            let lo1 = ((c[1] - reach) * ratio_f64(spec.period())).ceil() as i64;
            let hi1 = ((c[1] + reach) * ratio_f64(spec.period())).floor() as i64;
            (lo1, (hi1 - lo1 + 1).max(0) as usize)
        };
        let mut values = Vec::with_capacity(size0 * size1);
        for i in 0..size0 {
            let x0 = (lo0 + i as i64) as f64 * dxi;
            for j in 0..size1 {
                let x1 = if d == 1 { 0.0 } else { (lo1 + j as i64) as f64 * dxi };
                let dist = ((x0 - c[0]).powi(2) + (x1 - c[1]).powi(2)).sqrt();
                values.push(profile.value(dist / r));
            }
        }
        raw.push(Multiplier { lo: [lo0, lo1], size: [size0, size1], values });
    }
    // pre-normalization sum over the lattice
    let mut sums = vec![0.0f64; spec.len()];
    for m in &raw {
        m.for_each(spec, |flat, v| sums[flat] += v);
    }
    let mut prenorm_min = f64::INFINITY;
    let mut worst_at = 0.0f64;
    for (flat, s) in sums.iter().enumerate() {
        let xi = spec.freq_at(flat);
        if norm2(xi) <= covered_radius && *s < prenorm_min {
            prenorm_min = *s;
            worst_at = norm2(xi);
        }
    }
    if prenorm_min < 0.5 {
        return Err(BankError::CoverageGap { min: prenorm_min, required: 0.5, at: worst_at });
    }
    // normalize in place where the sum is positive
    let mut multipliers = Vec::with_capacity(raw.len());
    for m in raw {
        let mut values = m.values.clone();
        let mut idx = 0usize;
        for bi in 0..m.size[0] {
            let m0 = m.lo[0] + bi as i64;
            let bin0 = (m0.rem_euclid(spec.samples_per_dim() as i64)) as usize;
            for bj in 0..m.size[1] {
                let flat = if d == 1 {
                    bin0
                } else {
                    let m1 = m.lo[1] + bj as i64;
                    bin0 * spec.samples_per_dim()
                        + (m1.rem_euclid(spec.samples_per_dim() as i64)) as usize
                };
                if sums[flat] > 0.0 {
                    values[idx] /= sums[flat];
                } else {
                    values[idx] = 0.0;
                }
                idx += 1;
            }
        }
        multipliers.push(Multiplier { lo: m.lo, size: m.size, values });
    }
    let ids: Vec<BlockId> = included.iter().map(|&k| BlockId::Lattice(k)).collect();
    let mut bank = DecompositionBank {
        spec: spec.clone(),
        kind: BankKind::Alpha {
            alpha,
            covered_radius,
            prenorm_min,
            max_overlap: 0,
        },
        ids,
        multipliers,
    };
    let overlap = bank.max_overlap();
    if let BankKind::Alpha { max_overlap, .. } = &mut bank.kind {
        *max_overlap = overlap;
    }
    Ok(bank)
}

fn ring_members(ring: i64, d: u32) -> Vec<[i64; 2]> {
    let mut out = Vec::new();
    if d == 1 {
        if ring == 0 {
            out.push([0, 0]);
        } else {
            out.push([ring, 0]);
            out.push([-ring, 0]);
        }
        return out;
    }
    if ring == 0 {
        out.push([0, 0]);
        return out;
    }
    for a in -ring..=ring {
        out.push([a, ring]);
        out.push([a, -ring]);
    }
    for b in (-ring + 1)..ring {
        out.push([ring, b]);
        out.push([-ring, b]);
    }
    out
}

fn norm2(x: [f64; 2]) -> f64 {
    (x[0] * x[0] + x[1] * x[1]).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::{D1, D2};

    fn spec_256() -> GridSpec {
        GridSpec::new(D1, 256, rat(8, 1)).unwrap()
    }

    #[test]
    fn uniform_k_max_matches_geometry() {
        // Nyquist 16, block support must fit: k_max = 15
        let bank = build_uniform_bank(&spec_256()).unwrap();
        match bank.kind() {
            BankKind::Uniform { k_max } => assert_eq!(*k_max, 15),
            _ => panic!("wrong kind"),
        }
        assert_eq!(bank.len(), 31);
    }

    #[test]
    fn uniform_partition_and_overlap() {
        let bank = build_uniform_bank(&spec_256()).unwrap();
        assert!(bank.partition_deviation() < 1e-12);
        assert!(bank.max_overlap() <= 2);
        // centre block is identically 1 at the origin
        let centre = bank.position_of(BlockId::Lattice([0, 0])).unwrap();
        assert_eq!(bank.multiplier(centre).value_at([0, 0]), 1.0);
    }

    #[test]
    fn uniform_minimum_grid_keeps_three_blocks() {
        // the smallest admissible grid (Nyquist 4) still fits |k| <= 3
        let spec = GridSpec::new(D1, 16, rat(2, 1)).unwrap();
        let bank = build_uniform_bank(&spec).unwrap();
        match bank.kind() {
            BankKind::Uniform { k_max } => assert_eq!(*k_max, 3),
            _ => panic!("wrong kind"),
        }
        assert!(bank.partition_deviation() < 1e-12);
    }

    #[test]
    fn dyadic_partition_and_core_values() {
        let bank = build_dyadic_bank(&spec_256()).unwrap();
        let BankKind::Dyadic { levels } = *bank.kind() else { panic!() };
        assert_eq!(levels, 3); // Nyquist 16: floor(log2 16) - 1
        assert!(bank.partition_deviation() < 1e-12);
        assert!(bank.max_overlap() <= 3);
        // phi_j is 1 at |xi| = 2^j for 1 <= j
        for j in 1..=levels {
            let m = bank.multiplier(j as usize);
            let bin = (2i64.pow(j)) * 8; // xi = 2^j at multiple 2^j * P
            assert!(
                (m.value_at([bin, 0]) - 1.0).abs() < 1e-12,
                "level {j} not 1 on its shell"
            );
        }
    }

    #[test]
    fn alpha_bank_builds_for_all_acceptance_alphas() {
        let spec = GridSpec::new(D1, 1024, rat(4, 1)).unwrap(); // Nyquist 128
        for (num, den) in [(1i64, 4i64), (1, 2), (3, 4)] {
            let alpha = AlphaParam::new(rat(num, den)).unwrap();
            let bank = build_alpha_bank(&spec, alpha)
                .unwrap_or_else(|e| panic!("alpha {num}/{den}: {e}"));
            assert!(
                bank.partition_deviation() < 1e-10,
                "partition at alpha {num}/{den}: {}",
                bank.partition_deviation()
            );
            let BankKind::Alpha { covered_radius, prenorm_min, max_overlap, .. } = bank.kind()
            else {
                panic!()
            };
            assert!(*covered_radius > 8.0, "covered radius too small: {covered_radius}");
            assert!(*prenorm_min >= 0.5);
            assert!(*max_overlap >= 1);
        }
    }

    #[test]
    fn alpha_cells_grow_with_block_index() {
        let spec = GridSpec::new(D1, 1024, rat(4, 1)).unwrap();
        let alpha = AlphaParam::new(rat(1, 2)).unwrap();
        let bank = build_alpha_bank(&spec, alpha).unwrap();
        let mut counts = Vec::new();
        for i in 0..bank.len() {
            let BlockId::Lattice(k) = bank.id(i) else { continue };
            if k[0] > 0 {
                counts.push((k[0], bank.cells_inside_alpha_block(i).len()));
            }
        }
        counts.sort();
        assert!(counts.len() >= 3);
        assert!(
            counts.last().unwrap().1 > counts.first().unwrap().1,
            "cell count should grow along the covering: {counts:?}"
        );
    }

    #[test]
    fn reconstruction_on_band_limited_input() {
        let spec = spec_256();
        let t = Transform::new(&spec);
        let bank = build_uniform_bank(&spec).unwrap();
        let f = GridFunction::from_spectrum_fn(&spec, |xi| {
            Complex64::new((-xi[0] * xi[0]).exp(), 0.0)
        });
        let g = bank.reconstruct(&t, &f);
        let num: f64 = f
            .samples
            .iter()
            .zip(&g.samples)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt();
        let den: f64 = f.samples.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        assert!(num / den < 1e-8, "reconstruction error {}", num / den);
    }

    #[test]
    fn two_dimensional_uniform_bank() {
        let spec = GridSpec::new(D2, 64, rat(2, 1)).unwrap(); // Nyquist 16
        let bank = build_uniform_bank(&spec).unwrap();
        assert_eq!(bank.len(), 31 * 31);
        assert!(bank.partition_deviation() < 1e-12);
        assert!(bank.max_overlap() <= 4);
    }

    #[test]
    fn apply_block_out_of_range() {
        let spec = spec_256();
        let t = Transform::new(&spec);
        let bank = build_uniform_bank(&spec).unwrap();
        let f = GridFunction::zero(&spec);
        assert!(matches!(
            bank.apply_block(&t, 1000, &f),
            Err(BankError::IndexOutOfRange { .. })
        ));
    }
}
