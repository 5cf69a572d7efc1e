//! The `d^τ` calculus on curve charts.
//!
//! A KS-form on a chart with coordinates `x_0, x_1` is
//! `Σ a_i·d^τx_i + ι(c)`; `d^τ` of a function `f` is
//! `f^δ + Σ ∂f/∂x_i·d^τx_i`.

mod ksform;
mod pullback;
mod splitting;

pub use ksform::{d_tau, ksform_reduce, prolong_poly, rational_equivalence, JetPolynomial, KSForm};
pub use pullback::{compose_maps, ksform_pullback};
pub use splitting::{derivation_from_splitting, splitting_from_derivation, Splitting};

use crate::algebra::AlgebraError;
use crate::curve::CurveError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum JetError {
    #[error("F_y vanishes on the curve; d^τy cannot be eliminated")]
    NonInvertibleFy,
    #[error("composition is undefined: a denominator vanishes identically")]
    UndefinedComposition,
    #[error("the reference form is zero")]
    ZeroForm,
    #[error("derivation does not prolong δ on chart {0}: F^δ + F_x·D(x) + F_y·D(y) is nonzero mod F")]
    NotAProlongation(crate::curve::ChartTag),
    #[error("splitting does not satisfy λ∘σ = id")]
    NotASplitting,
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
