//! Plane curves, their two standard charts, and Čech cohomology on the
//! cover `U = {z ≠ 0}`, `V = {y ≠ 0}`.
//!
//! Chart `U` has coordinates `(x, y)`. Chart `V` has `s = x/y`, `t = 1/y`.

mod cohomology;
mod picard;
mod plane;

pub use cohomology::{
    cech_cobound, cech_project, h0_omega_basis, h1_basis, normal_form, normal_form_ratfn,
    H1Monomial, OmegaIndex, OverlapElem,
};
pub use picard::PicardCurve;
pub use plane::{swap_chart, PlaneCurve};

use crate::algebra::{AlgebraError, FieldElem};
use crate::certificates::CertificateError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChartTag {
    U,
    V,
}

impl ChartTag {
    pub fn vars(self) -> [&'static str; 2] {
        match self {
            ChartTag::U => ["x", "y"],
            ChartTag::V => ["s", "t"],
        }
    }
}

impl std::fmt::Display for ChartTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ChartTag::U => "U",
            ChartTag::V => "V",
        })
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CurveError {
    #[error("curve equation must have x-degree equal to its total degree with a constant leading x-coefficient")]
    NotMonicInX,
    #[error("curve is singular on chart {0}: (F_x, F_y, F) is not the unit ideal")]
    Singular(ChartTag),
    #[error("g and g' are not coprime (gcd of degree {0})")]
    NotCoprime(i32),
    #[error("not a Picard polynomial: {0}")]
    NotPicard(String),
    #[error("denominator is not a power of y")]
    NotInOverlapRing,
    #[error("class is nonzero in H^1(C, O): coordinates {0:?}")]
    NonzeroClass(Vec<FieldElem>),
    #[error(transparent)]
    Certificate(CertificateError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl From<CertificateError> for CurveError {
    fn from(e: CertificateError) -> Self {
        match e {
            CertificateError::Algebra(a) => CurveError::Algebra(a),
            CertificateError::NotCoprime { degree } => CurveError::NotCoprime(degree),
            other => CurveError::Certificate(other),
        }
    }
}
