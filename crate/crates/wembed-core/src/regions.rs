//! Classify the `(1/p, 1/q)` index plane for a catalogue entry into
//! verdict cells and emit figure-style region diagrams.
//!
//! Scans walk a rational lattice over the window `[0,2]²` (reciprocal
//! coordinates, so the quasi-Banach range sits at values above 1),
//! evaluate the oracle at every point, and flag cells where the verdict
//! changes between neighbours. Emission is deterministic: identical scan
//! and style produce byte-identical SVG and CSV.

use crate::indices::{display_rational, rat, Dimension, Rational, ReciprocalIndex};
use crate::oracle::{
    decide, AlphaClauseReading, EmbeddingQuery, OracleOptions, SpaceSpec, Status, TheoremId,
};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;

/// What a scan evaluates at each lattice point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ScanTarget {
    /// A catalogue entry, with the window bound to its clause-carrying
    /// index pair.
    Theorem(TheoremId),
    /// The three linear pieces of the max-type threshold function.
    Tau1Indicator,
    /// The three linear pieces of the min-type threshold function.
    Sigma1Indicator,
}

impl ScanTarget {
    pub fn parse(s: &str) -> Option<ScanTarget> {
        match s {
            "tau1-regions" => Some(ScanTarget::Tau1Indicator),
            "sigma1-regions" => Some(ScanTarget::Sigma1Indicator),
            other => THEOREM_TARGETS
                .iter()
                .find(|(id, _)| id.id_str() == other)
                .map(|(id, _)| ScanTarget::Theorem(*id)),
        }
    }
}

impl fmt::Display for ScanTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScanTarget::Theorem(id) => f.write_str(id.id_str()),
            ScanTarget::Tau1Indicator => f.write_str("tau1-regions"),
            ScanTarget::Sigma1Indicator => f.write_str("sigma1-regions"),
        }
    }
}

/// Catalogue entries that support scanning, i.e. whose clauses live on a
/// two-index window once the remaining indices are pinned.
pub const THEOREM_TARGETS: &[(TheoremId, &str)] = &[
    (TheoremId::SobolevIntoWiener, "window binds (1/r, 1/q); extra: p (default mirrors r)"),
    (TheoremId::WienerIntoSobolev, "window binds (1/r, 1/q); extra: p (default mirrors r)"),
    (TheoremId::HardyIntoWiener, "window binds (1/r, 1/q); extra: p (default mirrors r)"),
    (TheoremId::WienerIntoHardy, "window binds (1/r, 1/q); extra: p (default mirrors r)"),
    (TheoremId::BesovIntoWienerSharedQ, "window binds (1/p0, 1/q); extra: p (default mirrors p0)"),
    (TheoremId::WienerIntoBesovSharedQ, "window binds (1/p0, 1/q); extra: p (default mirrors p0)"),
    (TheoremId::BesovIntoWienerSharedP, "window binds (1/p, 1/q); extra: q0 (required)"),
    (TheoremId::WienerIntoBesovSharedP, "window binds (1/p, 1/q); extra: q0 (required)"),
    (TheoremId::ModulationIntoWiener, "window binds (1/p, 1/q); extra: p1 (default mirrors p), q1 (required)"),
    (TheoremId::WienerIntoModulation, "window binds (1/p, 1/q); extra: p1 (default mirrors p), q1 (required)"),
    (TheoremId::AlphaModulationIntoWiener, "window binds (1/p, 1/q); extra: alpha (required)"),
    (TheoremId::WienerIntoAlphaModulation, "window binds (1/p, 1/q); extra: alpha (required)"),
    (TheoremId::TriebelIntoWiener, "window binds (1/p, 1/q); extra: r (default 2)"),
    (TheoremId::WienerIntoTriebel, "window binds (1/p, 1/q); extra: r (default 2)"),
];

/// How an auxiliary index is pinned during a scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IndexRule {
    Value(ReciprocalIndex),
    /// Track the first scanned coordinate.
    MirrorU,
    /// Track the second scanned coordinate.
    MirrorV,
}

impl IndexRule {
    fn resolve(self, u: ReciprocalIndex, v: ReciprocalIndex) -> ReciprocalIndex {
        match self {
            IndexRule::Value(x) => x,
            IndexRule::MirrorU => u,
            IndexRule::MirrorV => v,
        }
    }
}

/// Smoothness rule for a scan: a fixed weight, or the threshold function
/// evaluated at the scanned point plus an offset (to walk exactly on, or
/// parallel to, the sharp boundary).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SmoothnessRule {
    Fixed(#[serde(with = "crate::indices::rational_serde")] Rational),
    Tau1Offset(#[serde(with = "crate::indices::rational_serde")] Rational),
    Sigma1Offset(#[serde(with = "crate::indices::rational_serde")] Rational),
}

impl SmoothnessRule {
    fn resolve(self, u: ReciprocalIndex, v: ReciprocalIndex, d: Dimension) -> Rational {
        match self {
            SmoothnessRule::Fixed(s) => s,
            SmoothnessRule::Tau1Offset(off) => crate::indices::tau1(u, v, d) + off,
            SmoothnessRule::Sigma1Offset(off) => crate::indices::sigma1(u, v, d) + off,
        }
    }
}

/// Pinned parameters of a scan.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FixedParams {
    pub d: Dimension,
    pub s: SmoothnessRule,
    /// Extra index rules keyed by the names in [`THEOREM_TARGETS`].
    pub extra: BTreeMap<String, IndexRule>,
    #[serde(default)]
    pub alpha_reading: AlphaClauseReading,
}

impl FixedParams {
    pub fn new(d: Dimension) -> Self {
        FixedParams {
            d,
            s: SmoothnessRule::Fixed(rat(0, 1)),
            extra: BTreeMap::new(),
            alpha_reading: AlphaClauseReading::default(),
        }
    }

    fn rule(&self, key: &str) -> Option<IndexRule> {
        self.extra.get(key).copied()
    }
}

/// Label of one scanned cell: either an oracle status or (for indicator
/// scans) the index of the attaining linear piece.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CellLabel {
    Status(StatusLabel),
    Region(u8),
}

/// Status ordering for deterministic grouping in emitted documents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StatusLabel {
    Holds,
    Fails,
    OutsideHypothesis,
    OpenInPaper,
}

impl From<Status> for StatusLabel {
    fn from(s: Status) -> Self {
        match s {
            Status::Holds => StatusLabel::Holds,
            Status::Fails => StatusLabel::Fails,
            Status::OutsideHypothesis => StatusLabel::OutsideHypothesis,
            Status::OpenInPaper => StatusLabel::OpenInPaper,
        }
    }
}

impl fmt::Display for CellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellLabel::Status(StatusLabel::Holds) => f.write_str("holds"),
            CellLabel::Status(StatusLabel::Fails) => f.write_str("fails"),
            CellLabel::Status(StatusLabel::OutsideHypothesis) => f.write_str("outside-hypothesis"),
            CellLabel::Status(StatusLabel::OpenInPaper) => f.write_str("open-in-paper"),
            CellLabel::Region(i) => write!(f, "region-{i}"),
        }
    }
}

/// Flags attached to a cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BoundaryFlag {
    /// Indicator scans: this piece ties for the extremum here.
    TiePiece(u8),
    /// The label differs from a lattice neighbour.
    VerdictChange,
    /// The cell sits exactly on a strict threshold (excluded side).
    StrictEdge,
    /// The cell sits exactly on a non-strict threshold (included side).
    NonStrictEdge,
}

impl fmt::Display for BoundaryFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryFlag::TiePiece(i) => write!(f, "tie-{i}"),
            BoundaryFlag::VerdictChange => f.write_str("change"),
            BoundaryFlag::StrictEdge => f.write_str("strict-edge"),
            BoundaryFlag::NonStrictEdge => f.write_str("nonstrict-edge"),
        }
    }
}

/// One lattice point of a scan.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RegionCell {
    #[serde(with = "crate::indices::rational_serde")]
    pub u: Rational,
    #[serde(with = "crate::indices::rational_serde")]
    pub v: Rational,
    pub label: CellLabel,
    pub boundary_flags: Vec<BoundaryFlag>,
}

/// A complete scan over the window `[0,2]²`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RegionScan {
    pub target: ScanTarget,
    pub fixed: FixedParams,
    #[serde(with = "crate::indices::rational_serde")]
    pub step: Rational,
    /// Row-major over v (outer) then u (inner); side = 2/step + 1.
    pub cells: Vec<RegionCell>,
    pub side: usize,
}

/// Errors from the scanning layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RegionError {
    #[error("step must be one of 1/16, 1/32, 1/64, got {0}")]
    BadStep(String),
    #[error("scan target {0} needs the extra index `{1}`")]
    MissingIndex(ScanTarget, &'static str),
    #[error("unknown scan target `{0}`")]
    UnknownTarget(String),
}

/// Which of the three linear pieces attains `max(0, v-1/2, u+v-1)`,
/// with ties resolved to the lowest index and reported alongside.
pub fn classify_tau1_region(u: Rational, v: Rational) -> (u8, Vec<u8>) {
    classify_pieces(u, v, true)
}

/// Which piece attains `min(0, v-1/2, u+v-1)`.
pub fn classify_sigma1_region(u: Rational, v: Rational) -> (u8, Vec<u8>) {
    classify_pieces(u, v, false)
}

fn classify_pieces(u: Rational, v: Rational, take_max: bool) -> (u8, Vec<u8>) {
    let pieces = [rat(0, 1), v - rat(1, 2), u + v - rat(1, 1)];
    let best = if take_max {
        *pieces.iter().max().expect("nonempty")
    } else {
        *pieces.iter().min().expect("nonempty")
    };
    let ties: Vec<u8> = pieces
        .iter()
        .enumerate()
        .filter(|(_, p)| **p == best)
        .map(|(i, _)| (i + 1) as u8)
        .collect();
    (ties[0], ties)
}

const ALLOWED_STEPS: [(i64, i64); 3] = [(1, 16), (1, 32), (1, 64)];

/// Scan the window for a target. Every cell's label equals the oracle
/// verdict (or attaining piece) at that exact lattice point; cells where
/// the label changes toward a neighbour are flagged.
pub fn scan_region(
    target: ScanTarget,
    fixed: &FixedParams,
    step: Rational,
) -> Result<RegionScan, RegionError> {
    if !ALLOWED_STEPS.iter().any(|&(n, d)| step == rat(n, d)) {
        return Err(RegionError::BadStep(display_rational(step)));
    }
    let side = (rat(2, 1) / step).to_integer() as usize + 1;
    let mut cells = Vec::with_capacity(side * side);
    for iv in 0..side {
        for iu in 0..side {
            let u = step * rat(iu as i64, 1);
            let v = step * rat(iv as i64, 1);
            cells.push(evaluate_cell(target, fixed, u, v)?);
        }
    }
    let mut scan = RegionScan { target, fixed: fixed.clone(), step, cells, side };
    flag_changes(&mut scan);
    Ok(scan)
}

fn evaluate_cell(
    target: ScanTarget,
    fixed: &FixedParams,
    u: Rational,
    v: Rational,
) -> Result<RegionCell, RegionError> {
    match target {
        ScanTarget::Tau1Indicator => {
            let (best, ties) = classify_tau1_region(u, v);
            Ok(indicator_cell(u, v, best, ties))
        }
        ScanTarget::Sigma1Indicator => {
            let (best, ties) = classify_sigma1_region(u, v);
            Ok(indicator_cell(u, v, best, ties))
        }
        ScanTarget::Theorem(id) => {
            let ru = ReciprocalIndex::from_recip(u).expect("window is nonnegative");
            let rv = ReciprocalIndex::from_recip(v).expect("window is nonnegative");
            let query = build_query(id, fixed, ru, rv)?;
            let mut flags = Vec::new();
            let label = match decide(&query) {
                Ok(verdict) => {
                    match verdict.boundary {
                        crate::oracle::Boundary::StrictBoundaryExcluded => {
                            flags.push(BoundaryFlag::StrictEdge)
                        }
                        crate::oracle::Boundary::NonStrictBoundary => {
                            flags.push(BoundaryFlag::NonStrictEdge)
                        }
                        crate::oracle::Boundary::Interior => {}
                    }
                    CellLabel::Status(verdict.status.into())
                }
                // Out-of-catalogue corners of the window degrade to the
                // undecided label rather than aborting the figure.
                Err(_) => CellLabel::Status(StatusLabel::OutsideHypothesis),
            };
            Ok(RegionCell { u, v, label, boundary_flags: flags })
        }
    }
}

fn indicator_cell(u: Rational, v: Rational, best: u8, ties: Vec<u8>) -> RegionCell {
    let flags = if ties.len() > 1 {
        ties.into_iter().map(BoundaryFlag::TiePiece).collect()
    } else {
        Vec::new()
    };
    RegionCell { u, v, label: CellLabel::Region(best), boundary_flags: flags }
}

fn build_query(
    id: TheoremId,
    fixed: &FixedParams,
    u: ReciprocalIndex,
    v: ReciprocalIndex,
) -> Result<EmbeddingQuery, RegionError> {
    use TheoremId::*;
    let d = fixed.d;
    let s = fixed.s.resolve(u, v, d);
    let zero = rat(0, 1);
    let target = ScanTarget::Theorem(id);
    let mirror_u = IndexRule::MirrorU;
    let resolve = |key: &str, default: Option<IndexRule>| -> Result<ReciprocalIndex, RegionError> {
        match fixed.rule(key).or(default) {
            Some(rule) => Ok(rule.resolve(u, v)),
            None => Err(RegionError::MissingIndex(target, leak(key))),
        }
    };
    let alpha = |key: &str| -> Result<crate::indices::AlphaParam, RegionError> {
        match fixed.rule(key) {
            Some(IndexRule::Value(x)) if x.is_finite() => {
                crate::indices::AlphaParam::new(x.recip().recip())
                    .map_err(|_| RegionError::MissingIndex(target, "alpha"))
            }
            _ => Err(RegionError::MissingIndex(target, "alpha")),
        }
    };
    let options = OracleOptions { alpha_reading: fixed.alpha_reading };
    let mk = |src: SpaceSpec, dst: SpaceSpec| EmbeddingQuery { src, dst, d, options };
    Ok(match id {
        SobolevIntoWiener => {
            let p = resolve("p", Some(mirror_u))?;
            mk(SpaceSpec::Sobolev { r: u, s }, SpaceSpec::Wiener { p, q: v, s: zero })
        }
        WienerIntoSobolev => {
            let p = resolve("p", Some(mirror_u))?;
            mk(SpaceSpec::Wiener { p, q: v, s: zero }, SpaceSpec::Sobolev { r: u, s })
        }
        HardyIntoWiener => {
            let p = resolve("p", Some(mirror_u))?;
            mk(SpaceSpec::LocalHardy { r: u, s }, SpaceSpec::Wiener { p, q: v, s: zero })
        }
        WienerIntoHardy => {
            let p = resolve("p", Some(mirror_u))?;
            mk(SpaceSpec::Wiener { p, q: v, s: zero }, SpaceSpec::LocalHardy { r: u, s })
        }
        BesovIntoWienerSharedQ => {
            let p = resolve("p", Some(mirror_u))?;
            mk(SpaceSpec::Besov { p: u, q: v, s }, SpaceSpec::Wiener { p, q: v, s: zero })
        }
        WienerIntoBesovSharedQ => {
            let p = resolve("p", Some(mirror_u))?;
            mk(SpaceSpec::Wiener { p, q: v, s: zero }, SpaceSpec::Besov { p: u, q: v, s })
        }
        BesovIntoWienerSharedP => {
            let q0 = resolve("q0", None)?;
            mk(SpaceSpec::Besov { p: u, q: q0, s }, SpaceSpec::Wiener { p: u, q: v, s: zero })
        }
        WienerIntoBesovSharedP => {
            let q0 = resolve("q0", None)?;
            mk(SpaceSpec::Wiener { p: u, q: v, s: zero }, SpaceSpec::Besov { p: u, q: q0, s })
        }
        ModulationIntoWiener => {
            let p1 = resolve("p1", Some(mirror_u))?;
            let q1 = resolve("q1", None)?;
            mk(
                SpaceSpec::Modulation { p: p1, q: q1, s },
                SpaceSpec::Wiener { p: u, q: v, s: zero },
            )
        }
        WienerIntoModulation => {
            let p1 = resolve("p1", Some(mirror_u))?;
            let q1 = resolve("q1", None)?;
            mk(
                SpaceSpec::Wiener { p: u, q: v, s: zero },
                SpaceSpec::Modulation { p: p1, q: q1, s },
            )
        }
        AlphaModulationIntoWiener => {
            let a = alpha("alpha")?;
            mk(
                SpaceSpec::AlphaModulation { p: u, q: v, s, alpha: a },
                SpaceSpec::Wiener { p: u, q: v, s: zero },
            )
        }
        WienerIntoAlphaModulation => {
            let a = alpha("alpha")?;
            mk(
                SpaceSpec::Wiener { p: u, q: v, s: zero },
                SpaceSpec::AlphaModulation { p: u, q: v, s, alpha: a },
            )
        }
        TriebelIntoWiener => {
            let r = resolve("r", Some(IndexRule::Value(two())))?;
            mk(SpaceSpec::Triebel { p: u, q: r, s }, SpaceSpec::Wiener { p: u, q: v, s: zero })
        }
        WienerIntoTriebel => {
            let r = resolve("r", Some(IndexRule::Value(two())))?;
            mk(SpaceSpec::Wiener { p: u, q: v, s: zero }, SpaceSpec::Triebel { p: u, q: r, s })
        }
        _ => return Err(RegionError::UnknownTarget(id.id_str().to_string())),
    })
}

fn two() -> ReciprocalIndex {
    ReciprocalIndex::from_recip(rat(1, 2)).expect("valid")
}

fn leak(s: &str) -> &'static str {
    // Scan keys come from a tiny fixed vocabulary; interning them keeps
    // the error type copy-friendly.
    match s {
        "p" => "p",
        "p1" => "p1",
        "q0" => "q0",
        "q1" => "q1",
        "r" => "r",
        "alpha" => "alpha",
        _ => "index",
    }
}

fn flag_changes(scan: &mut RegionScan) {
    let side = scan.side;
    let mut changed = vec![false; scan.cells.len()];
    for iv in 0..side {
        for iu in 0..side {
            let here = iv * side + iu;
            if iu + 1 < side && scan.cells[here].label != scan.cells[here + 1].label {
                changed[here] = true;
                changed[here + 1] = true;
            }
            if iv + 1 < side && scan.cells[here].label != scan.cells[here + side].label {
                changed[here] = true;
                changed[here + side] = true;
            }
        }
    }
    for (cell, flag) in scan.cells.iter_mut().zip(changed) {
        if flag && !cell.boundary_flags.contains(&BoundaryFlag::VerdictChange) {
            cell.boundary_flags.push(BoundaryFlag::VerdictChange);
            cell.boundary_flags.sort();
        }
    }
}

impl RegionScan {
    /// Midpoints of lattice edges across which the label changes, in
    /// `(u, v)` coordinates. This is the sampled region boundary.
    pub fn boundary_edge_midpoints(&self) -> Vec<(f64, f64)> {
        let side = self.side;
        let step = ratio_f64(self.step);
        let mut pts = Vec::new();
        for iv in 0..side {
            for iu in 0..side {
                let here = iv * side + iu;
                let (u, v) = (iu as f64 * step, iv as f64 * step);
                if iu + 1 < side && self.cells[here].label != self.cells[here + 1].label {
                    pts.push((u + step / 2.0, v));
                }
                if iv + 1 < side && self.cells[here].label != self.cells[here + side].label {
                    pts.push((u, v + step / 2.0));
                }
            }
        }
        pts
    }

    fn labels_in_order(&self) -> Vec<CellLabel> {
        let mut labels: Vec<CellLabel> = self.cells.iter().map(|c| c.label).collect();
        labels.sort();
        labels.dedup();
        labels
    }
}

pub fn ratio_f64(r: Rational) -> f64 {
    (*r.numer() as f64) / (*r.denom() as f64)
}

/// A line segment `a + t(b-a)`, `t in [0,1]`, in `(u,v)` coordinates.
#[derive(Debug, Clone, Copy)]
pub struct Segment {
    pub a: (f64, f64),
    pub b: (f64, f64),
}

impl Segment {
    pub fn distance_to(&self, p: (f64, f64)) -> f64 {
        let (ax, ay) = self.a;
        let (bx, by) = self.b;
        let (dx, dy) = (bx - ax, by - ay);
        let len2 = dx * dx + dy * dy;
        let t = if len2 == 0.0 {
            0.0
        } else {
            (((p.0 - ax) * dx + (p.1 - ay) * dy) / len2).clamp(0.0, 1.0)
        };
        let (cx, cy) = (ax + t * dx, ay + t * dy);
        ((p.0 - cx).powi(2) + (p.1 - cy).powi(2)).sqrt()
    }
}

/// Exact boundary arrangement of the max-type indicator regions inside
/// the window: the half-line between pieces 1 and 2, the diagonal
/// between 1 and 3, and the vertical tie between 2 and 3, all meeting at
/// the triple point `(1/2, 1/2)`.
pub fn tau1_symbolic_arrangement() -> Vec<Segment> {
    vec![
        Segment { a: (0.0, 0.5), b: (0.5, 0.5) },
        Segment { a: (0.5, 0.5), b: (1.0, 0.0) },
        Segment { a: (0.5, 0.5), b: (0.5, 2.0) },
    ]
}

/// Mirror arrangement for the min-type indicator.
pub fn sigma1_symbolic_arrangement() -> Vec<Segment> {
    vec![
        Segment { a: (0.5, 0.5), b: (2.0, 0.5) },
        Segment { a: (0.0, 1.0), b: (0.5, 0.5) },
        Segment { a: (0.5, 0.0), b: (0.5, 0.5) },
    ]
}

/// Symmetric Hausdorff distance between a point cloud and a segment
/// arrangement, both sampled; `f64::INFINITY` when either side is empty.
pub fn hausdorff_points_vs_segments(points: &[(f64, f64)], segments: &[Segment]) -> f64 {
    if points.is_empty() || segments.is_empty() {
        return f64::INFINITY;
    }
    let mut worst = 0.0f64;
    for p in points {
        let d = segments.iter().map(|s| s.distance_to(*p)).fold(f64::INFINITY, f64::min);
        worst = worst.max(d);
    }
    for seg in segments {
        let samples = 256;
        for i in 0..=samples {
            let t = i as f64 / samples as f64;
            let q = (
                seg.a.0 + t * (seg.b.0 - seg.a.0),
                seg.a.1 + t * (seg.b.1 - seg.a.1),
            );
            let d = points
                .iter()
                .map(|p| ((p.0 - q.0).powi(2) + (p.1 - q.1).powi(2)).sqrt())
                .fold(f64::INFINITY, f64::min);
            worst = worst.max(d);
        }
    }
    worst
}

// ---------------------------------------------------------------------------
// Emission
// ---------------------------------------------------------------------------

/// Style knobs for the SVG diagram.
#[derive(Debug, Clone)]
pub struct SvgStyle {
    /// Pixels per unit of the `(u,v)` window.
    pub scale: f64,
    pub margin: f64,
}

impl Default for SvgStyle {
    fn default() -> Self {
        SvgStyle { scale: 220.0, margin: 46.0 }
    }
}

fn label_fill(label: CellLabel) -> &'static str {
    match label {
        CellLabel::Status(StatusLabel::Holds) => "#7fc97f",
        CellLabel::Status(StatusLabel::Fails) => "#f08080",
        CellLabel::Status(StatusLabel::OutsideHypothesis) => "#c0c0c0",
        CellLabel::Status(StatusLabel::OpenInPaper) => "#fdc086",
        CellLabel::Region(1) => "#beaed4",
        CellLabel::Region(2) => "#ffff99",
        CellLabel::Region(3) => "#80b1d3",
        CellLabel::Region(_) => "#d9d9d9",
    }
}

/// Emit the scan as a deterministic SVG 1.1 document: one filled group
/// per label, boundary cells stroked (dashed where the verdict sits on a
/// strict excluded edge, solid otherwise), axes labelled `1/p`, `1/q`.
pub fn emit_region_svg(scan: &RegionScan, style: &SvgStyle) -> String {
    let step = ratio_f64(scan.step);
    let cell_px = step * style.scale;
    let w = 2.0 * style.scale + 2.0 * style.margin;
    let h = 2.0 * style.scale + 2.0 * style.margin;
    let to_x = |u: f64| style.margin + u * style.scale;
    let to_y = |v: f64| h - style.margin - v * style.scale;
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w:.1}\" height=\"{h:.1}\" viewBox=\"0 0 {w:.1} {h:.1}\">"
    );
    let _ = writeln!(out, "<title>{} step={}</title>", scan.target, display_rational(scan.step));
    let _ = writeln!(out, "<rect x=\"0\" y=\"0\" width=\"{w:.1}\" height=\"{h:.1}\" fill=\"white\"/>");
    for label in scan.labels_in_order() {
        let _ = writeln!(out, "<g fill=\"{}\" data-label=\"{}\">", label_fill(label), label);
        for cell in scan.cells.iter().filter(|c| c.label == label) {
            let u = ratio_f64(cell.u);
            let v = ratio_f64(cell.v);
            let x = to_x(u) - cell_px / 2.0;
            let y = to_y(v) - cell_px / 2.0;
            let boundary = cell.boundary_flags.iter().any(|f| {
                matches!(f, BoundaryFlag::VerdictChange | BoundaryFlag::TiePiece(_))
            });
            let strict = cell.boundary_flags.contains(&BoundaryFlag::StrictEdge);
            if boundary {
                let dash = if strict { " stroke-dasharray=\"2,2\"" } else { "" };
                let _ = writeln!(
                    out,
                    "<rect x=\"{x:.3}\" y=\"{y:.3}\" width=\"{cell_px:.3}\" height=\"{cell_px:.3}\" stroke=\"#303030\" stroke-width=\"0.6\"{dash}/>"
                );
            } else {
                let _ = writeln!(
                    out,
                    "<rect x=\"{x:.3}\" y=\"{y:.3}\" width=\"{cell_px:.3}\" height=\"{cell_px:.3}\"/>"
                );
            }
        }
        out.push_str("</g>\n");
    }
    // axes
    let x0 = to_x(0.0);
    let y0 = to_y(0.0);
    let x2 = to_x(2.0);
    let y2 = to_y(2.0);
    let _ = writeln!(
        out,
        "<path d=\"M {x0:.1} {y2:.1} L {x0:.1} {y0:.1} L {x2:.1} {y0:.1}\" fill=\"none\" stroke=\"black\" stroke-width=\"1.2\"/>"
    );
    for t in [0.0f64, 0.5, 1.0, 1.5, 2.0] {
        let _ = writeln!(
            out,
            "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"11\" text-anchor=\"middle\">{t}</text>",
            to_x(t),
            y0 + 16.0
        );
        let _ = writeln!(
            out,
            "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"11\" text-anchor=\"end\">{t}</text>",
            x0 - 6.0,
            to_y(t) + 4.0
        );
    }
    let _ = writeln!(
        out,
        "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"13\" text-anchor=\"middle\">1/p</text>",
        to_x(1.0),
        y0 + 34.0
    );
    let _ = writeln!(
        out,
        "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 {:.1} {:.1})\">1/q</text>",
        x0 - 30.0,
        to_y(1.0),
        x0 - 30.0,
        to_y(1.0)
    );
    out.push_str("</svg>\n");
    out
}

/// Emit the scan as CSV with header `u,v,label,boundary_flags`.
pub fn emit_region_csv(scan: &RegionScan) -> String {
    let mut out = String::from("u,v,label,boundary_flags\n");
    for cell in &scan.cells {
        let flags = cell
            .boundary_flags
            .iter()
            .map(|f| f.to_string())
            .collect::<Vec<_>>()
            .join("|");
        let _ = writeln!(
            out,
            "{},{},{},{}",
            display_rational(cell.u),
            display_rational(cell.v),
            cell.label,
            flags
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::D1;

    #[test]
    fn indicator_classification_examples() {
        assert_eq!(classify_tau1_region(rat(1, 4), rat(1, 4)).0, 1);
        assert_eq!(classify_tau1_region(rat(1, 4), rat(3, 4)).0, 2);
        assert_eq!(classify_tau1_region(rat(3, 4), rat(3, 4)).0, 3);
        // triple point carries all three tie flags
        let (best, ties) = classify_tau1_region(rat(1, 2), rat(1, 2));
        assert_eq!(best, 1);
        assert_eq!(ties, vec![1, 2, 3]);
    }

    #[test]
    fn classification_is_consistent_with_threshold_value() {
        for nu in 0..=32 {
            for nv in 0..=32 {
                let (u, v) = (rat(nu, 16), rat(nv, 16));
                let ru = ReciprocalIndex::from_recip(u).unwrap();
                let rv = ReciprocalIndex::from_recip(v).unwrap();
                let t = crate::indices::tau1(ru, rv, D1);
                let piece = match classify_tau1_region(u, v).0 {
                    1 => rat(0, 1),
                    2 => v - rat(1, 2),
                    3 => u + v - rat(1, 1),
                    _ => unreachable!(),
                };
                assert_eq!(t, piece, "tau1 piece value at ({nu}/16,{nv}/16)");
                let s = crate::indices::sigma1(ru, rv, D1);
                let piece = match classify_sigma1_region(u, v).0 {
                    1 => rat(0, 1),
                    2 => v - rat(1, 2),
                    3 => u + v - rat(1, 1),
                    _ => unreachable!(),
                };
                assert_eq!(s, piece, "sigma1 piece value at ({nu}/16,{nv}/16)");
            }
        }
    }

    #[test]
    fn indicator_scan_boundaries_track_symbolic_lines() {
        let fixed = FixedParams::new(D1);
        let scan = scan_region(ScanTarget::Tau1Indicator, &fixed, rat(1, 32)).unwrap();
        let pts = scan.boundary_edge_midpoints();
        let h = hausdorff_points_vs_segments(&pts, &tau1_symbolic_arrangement());
        assert!(h <= ratio_f64(rat(1, 32)), "Hausdorff {h} above one step");
    }

    #[test]
    fn svg_and_csv_are_deterministic() {
        let mut fixed = FixedParams::new(D1);
        fixed.extra.insert("q1".into(), IndexRule::Value("2".parse().unwrap()));
        let scan = scan_region(
            ScanTarget::Theorem(TheoremId::ModulationIntoWiener),
            &fixed,
            rat(1, 16),
        )
        .unwrap();
        let svg1 = emit_region_svg(&scan, &SvgStyle::default());
        let svg2 = emit_region_svg(&scan, &SvgStyle::default());
        assert_eq!(svg1, svg2);
        assert!(svg1.starts_with("<?xml"));
        let csv = emit_region_csv(&scan);
        assert!(csv.starts_with("u,v,label,boundary_flags\n"));
        assert_eq!(csv.lines().count(), scan.cells.len() + 1);
    }

    #[test]
    fn modulation_scan_matches_clause_set_at_s0() {
        // with q1 fixed and p1 mirroring p at s = 0, the holding set is
        // exactly { (u,v) : 1/q1 >= max(u,v) } on the lattice
        let mut fixed = FixedParams::new(D1);
        fixed.extra.insert("q1".into(), IndexRule::Value("2".parse().unwrap()));
        let scan = scan_region(
            ScanTarget::Theorem(TheoremId::ModulationIntoWiener),
            &fixed,
            rat(1, 16),
        )
        .unwrap();
        for cell in &scan.cells {
            let expected = rat(1, 2) >= cell.u.max(cell.v);
            let holds = cell.label == CellLabel::Status(StatusLabel::Holds);
            assert_eq!(holds, expected, "at ({}, {})", cell.u, cell.v);
        }
    }

    #[test]
    fn bad_step_is_rejected() {
        let fixed = FixedParams::new(D1);
        assert!(matches!(
            scan_region(ScanTarget::Tau1Indicator, &fixed, rat(1, 10)),
            Err(RegionError::BadStep(_))
        ));
    }
}
