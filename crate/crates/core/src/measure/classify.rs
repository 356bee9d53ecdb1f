use serde::Serialize;

use super::decompose::decompose_uniform_plus_cantor;
use super::prob::{ProbVector, Scalar};
use crate::error::Result;
use crate::fractal::{eggleston_dimension, golden_dimension, log3_2};

/// `ξ = τ + ζ`: τ uniform on [0,1], ζ with i.i.d. digits 0 (probability x)
/// and 1 (probability 1 − x).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UniformPlusCantor {
    pub x: Scalar,
    /// ζ is constant (x ∈ {0, 1}) and ξ itself is uniform on a unit interval.
    pub uniform: bool,
}

/// Type of the distribution of ξ.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum DistributionClass {
    AbsolutelyContinuous {
        #[serde(flatten)]
        decomposition: UniformPlusCantor,
    },
    /// Spectrum is a nowhere dense self-similar set.
    SingularCantor { spectrum_dim: f64 },
    /// Distribution function strictly increasing on a unit interval.
    SingularIncreasing { support_dim: f64 },
    /// All four digits have positive probability.
    SingularFullOverlap,
}

impl DistributionClass {
    pub fn is_absolutely_continuous(&self) -> bool {
        matches!(self, DistributionClass::AbsolutelyContinuous { .. })
    }
}

pub fn classify(p: &ProbVector) -> Result<DistributionClass> {
    if p.is_one_third(1) && p.is_one_third(2) {
        let x = decompose_uniform_plus_cantor(p)?;
        let uniform = p.is_zero(0) || p.is_zero(3);
        return Ok(DistributionClass::AbsolutelyContinuous {
            decomposition: UniformPlusCantor { x, uniform },
        });
    }
    Ok(match p.zero_count() {
        0 => DistributionClass::SingularFullOverlap,
        1 if p.is_zero(1) || p.is_zero(2) => {
            DistributionClass::SingularCantor { spectrum_dim: golden_dimension() }
        }
        1 => {
            let freqs: Vec<f64> = (0..4).filter(|&i| !p.is_zero(i)).map(|i| p.get(i)).collect();
            DistributionClass::SingularIncreasing { support_dim: eggleston_dimension(&freqs)? }
        }
        _ => DistributionClass::SingularCantor { spectrum_dim: log3_2() },
    })
}
