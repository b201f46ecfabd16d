//! Periodic Hilbert transform on a strip, its singular kernel `β_d`, and the
//! Jacobi theta machinery that pins down `β_d(π/2)`.
//!
//! Everything numerical is generic over [`Real`] (`f32` or `f64`); the `*64`
//! aliases below fix the double-precision types used by the verification
//! suite.


// `!(a <= b)` is used on purpose so NaN lands on the failing side.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
pub mod beta;
pub mod error;
pub mod fourier;
pub mod hilbert;
pub mod report;
pub mod scalar;
pub mod sum;
pub mod theta;

pub use beta::{
    beta_half_excess, beta_half_lambert, beta_half_raw, beta_half_theta, beta_kernel_line1,
    beta_kernel_line2, kernel_convention_residuals, lemma_termwise_residual, limit_identity_check,
    BetaExcess, ConventionResiduals, StripGeometry,
};
pub use error::{Error, Result};
pub use fourier::{analyze, synthesize, FourierSeries, SampledFunction};
pub use hilbert::{
    cross_validate, hilbert_convolution, hilbert_convolution_with_stats, hilbert_multiplier,
    PvQuadratureConfig, QuadratureStats,
};
pub use report::{Quantity, VerificationReport};
pub use scalar::Real;
pub use sum::{compensated_sum, CompensatedSum};
pub use theta::{
    divisor_excess, ln_theta3_excess, r2_bruteforce, theta3, theta3_excess, theta3_fast,
    transformation_residual, two_squares_coefficient_check, Nome, TruncationBudget,
};

pub type FourierSeries64 = FourierSeries<f64>;
pub type SampledFunction64 = SampledFunction<f64>;
pub type Nome64 = Nome<f64>;
pub type TruncationBudget64 = TruncationBudget<f64>;
pub type StripGeometry64 = StripGeometry<f64>;
pub type BetaExcess64 = BetaExcess<f64>;
pub type PvQuadratureConfig64 = PvQuadratureConfig<f64>;

pub type FourierSeries32 = FourierSeries<f32>;
pub type StripGeometry32 = StripGeometry<f32>;
