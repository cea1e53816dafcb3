//! Core library: exact sharp-embedding oracle for the Wiener amalgam
//! scale against the classical scales, index-region classification and
//! figure emission, FFT-based space norms on periodic grids, and the
//! extremal-family probes that corroborate oracle verdicts numerically.
//!
//! Layout:
//! - [`indices`]: exact rational reciprocal-exponent arithmetic and the
//!   piecewise-linear threshold functions;
//! - [`oracle`]: the embedding decision catalogue;
//! - [`regions`]: index-plane scans and SVG/CSV diagram emission;
//! - [`frequency`]: grids, smooth windows, decomposition banks, STFT;
//! - [`norms`]: space (quasi-)norm computation on grid functions;
//! - [`probes`]: extremal families, growth fitting, verdict corroboration;
//! - [`selftest`]: the acceptance checks wired into the CLI.

pub mod fitting;
pub mod frequency;
pub mod indices;
pub mod oracle;
pub mod regions;

pub use indices::{AlphaParam, Dimension, Rational, ReciprocalIndex};
pub use oracle::{
    decide, EmbeddingQuery, OracleError, OracleOptions, ProbeFamily, SpaceSpec, Status, TheoremId,
    Verdict,
};
