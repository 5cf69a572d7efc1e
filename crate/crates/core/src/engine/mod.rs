//! Kodaira-Spencer cocycles, cup products, ranks and global lifts.

mod cocycle;
mod derivation;
mod lift;
mod linalg;
mod matrix;
mod report;

pub use cocycle::{ks_cocycle, pairing_with_omega00, KSCocycle};
pub use derivation::{derivation_from_certificate, prolong_derivation, Path, ProlongedDerivation};
pub use lift::{lift_global_ksform, GlobalKSForm};
pub use linalg::{bareiss_rank, ks_rank_kernel, RankKernel};
pub use matrix::{cup_product_matrix, KSMatrix};
pub use report::{analyze, AnalyzeOptions, KSReport, PicardConstants};

use crate::algebra::{AlgebraError, FieldElem};
use crate::certificates::CertificateError;
use crate::curve::{CurveError, PicardCurve, PlaneCurve};
use crate::jet::JetError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EngineError {
    #[error("form does not lift: its cup product with the KS class has coordinates {0:?}")]
    NotLiftable(Vec<FieldElem>),
    #[error("the Picard path needs a Picard curve")]
    NotPicard,
    #[error("lift fails the overlap identity")]
    OverlapMismatch,
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Jet(#[from] JetError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl From<CertificateError> for EngineError {
    fn from(e: CertificateError) -> Self {
        EngineError::Curve(e.into())
    }
}

/// A validated curve, remembering whether it came from a Picard model.
#[derive(Debug, Clone)]
pub enum CurveModel {
    Plane(PlaneCurve),
    Picard(PicardCurve),
}

impl CurveModel {
    pub fn plane(&self) -> &PlaneCurve {
        match self {
            CurveModel::Plane(c) => c,
            CurveModel::Picard(p) => p.plane(),
        }
    }

    pub fn picard(&self) -> Option<&PicardCurve> {
        match self {
            CurveModel::Picard(p) => Some(p),
            CurveModel::Plane(_) => None,
        }
    }

    pub fn default_path(&self) -> Path {
        match self {
            CurveModel::Picard(_) => Path::Picard,
            CurveModel::Plane(_) => Path::Generic,
        }
    }
}

impl From<PlaneCurve> for CurveModel {
    fn from(c: PlaneCurve) -> Self {
        CurveModel::Plane(c)
    }
}

impl From<PicardCurve> for CurveModel {
    fn from(c: PicardCurve) -> Self {
        CurveModel::Picard(c)
    }
}
