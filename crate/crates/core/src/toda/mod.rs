//! The discrete periodic Toda flow and its spectral data.
//!
//! States are `(I, V)` pairs over an exact field; for `n ≥ 3` the Lax matrix
//! `L(z) = M(z) R(z)` gives the spectral curve `z² + h(x) z − f = 0` and the
//! polynomials `u, v, w` that locate the eigenvector's divisor.

mod curve;
mod eigen;
mod identities;
pub mod lax;
mod minors;
mod state;

use thiserror::Error;

use crate::algebra::AlgebraError;

pub use curve::{spectral_curve, SpectralCurve};
pub use eigen::{eigenvector_components, uvw, EigenvectorData};
pub use identities::{spectral_identities, IdentityCheck};
pub use lax::{characteristic_matrix, lax_matrices, LaxMatrices};
pub use minors::{minor_det, minor_det_from_bottom, MinorSpec, MinorVariant};
pub use state::{cyclic_shift, toda_step, toda_step_recursive_check, TodaState};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TodaError {
    #[error("I and V have different lengths ({i} vs {v})")]
    LengthMismatch { i: usize, v: usize },
    #[error("need n >= {min}, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("I_{index} is zero")]
    ZeroCurrent { index: usize },
    #[error("denominator of the update for I_{index} vanishes")]
    VanishingDenominator { index: usize },
    #[error("updated I_{index} is zero; the flow leaves its domain")]
    LeftDomain { index: usize },
    #[error("states have different sizes ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },
    #[error("minor ({k}, {l}) is not defined for n = {n}")]
    InvalidMinor { k: usize, l: usize, n: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl TodaError {
    /// Whether the error means the flow left its domain of definition.
    pub fn is_domain_exit(&self) -> bool {
        matches!(
            self,
            TodaError::ZeroCurrent { .. }
                | TodaError::VanishingDenominator { .. }
                | TodaError::LeftDomain { .. }
        )
    }
}
