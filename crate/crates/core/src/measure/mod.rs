//! Distribution of `ξ = Σ ξ_k 3⁻ᵏ` with i.i.d. digits `ξ_k ∈ {0,1,2,3}`.

pub mod cdf;
pub mod charfn;
pub mod classify;
pub mod decompose;
pub mod prob;
pub mod sample;

pub use cdf::{cdf, cdf_many, CdfBounds};
pub use charfn::{charfn, l_lower_bound, phi, CharfnResult};
pub use classify::{classify, DistributionClass, UniformPlusCantor};
pub use decompose::{
    decompose_cantor_pair, decompose_uniform_plus_cantor, eta_params, uniform_plus_cantor_laws,
    CantorPair,
};
pub use prob::{ProbVector, Scalar};
pub use sample::{sample, sample_law_many, sample_many, sample_sum_many, DigitLaw};
