//! Expected-distortion analysis for sending a Gaussian source over a
//! block-fading Gaussian channel to a receiver that also observes a
//! block-fading copy of the source.
//!
//! The crate evaluates the informed and partially informed encoder lower
//! bounds, optimizes the uncoded, separate (SSCC), joint-decoding (JDS) and
//! superposed hybrid digital-analog (S-HDA/HDA) schemes, and provides the
//! closed-form high-SNR distortion exponents together with tools to estimate
//! them from computed curves.

// Negated comparisons are used on purpose so NaN fails validation, and the
// quadrature tables keep their published digits.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod bounds;
pub mod error;
pub mod exponents;
pub mod fading;
pub mod montecarlo;
pub mod numerics;
pub mod rng;
pub mod schemes;
pub mod sweep;
pub mod wyner_ziv;

pub use error::{Error, Result};
pub use fading::{FadingPair, GainMeasure, GammaLaw, SystemConfig};
pub use numerics::Tolerances;
pub use schemes::{Optimized, SchemeKind, SchemeParams};
