//! Numbers written in base 3 with the digit set {0,1,2,3}, and the random
//! variable `ξ = Σ ξ_k 3⁻ᵏ` with independent identically distributed digits.
//!
//! - [`digits`]: exact representations, value-preserving rewrites, cylinders,
//!   and counting/enumeration of the representations of a number.
//! - [`measure`]: classification of the law of ξ (singular or absolutely
//!   continuous), sampling, distribution-function enclosures, the
//!   characteristic function, and convolution decompositions.
//! - [`fractal`]: box-counting dimensions of digit-restricted sets and the
//!   level sets of the base-4 to base-3 digit map.
//! - [`series`]: the series `Σ 3^-⌈n/3⌉ = 3/2` and its subsums.
//!
//! Batch loops run on rayon when the `parallel` feature is on (default);
//! see [`exec::Execution`].

pub mod digits;
pub mod error;
pub mod exec;
pub mod fractal;
pub mod measure;
pub mod rational;
pub mod series;
pub mod stats;

pub use digits::{DigitString, ReprCardinality};
pub use error::{Error, Result};
pub use exec::Execution;
pub use measure::{DistributionClass, ProbVector};
pub use rational::Rat;
