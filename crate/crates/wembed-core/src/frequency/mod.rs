//! Periodic-grid function model, smooth window construction, the three
//! frequency-decomposition banks with FFT block application, the
//! discrete STFT, and the band-limited inequality checks.

pub mod bank;
pub mod grid;
pub mod inequalities;
pub mod stft;
pub mod wgf1;
pub mod window;

pub use bank::{
    build_alpha_bank, build_alpha_bank_with, build_dyadic_bank, build_uniform_bank,
    AlphaBankConfig, BankError, BankKind, BlockId, DecompositionBank, Multiplier,
};
pub use grid::{
    bracket, fourier_lq_norm, l2_norm, lp_norm, lp_norm_of, spectral_mass_outside, synthesize,
    GridError, GridFunction, GridSpec, Transform,
};
pub use inequalities::{
    check_bernstein, check_young_sub1, modulus_convolution, InequalityError, SweepReport,
};
pub use stft::{stft_grid, StftGrid};
pub use wgf1::{read_wgf1, write_wgf1, Wgf1Error, MAGIC};
pub use window::{smoothstep, ShellProfile, WindowProfile};
