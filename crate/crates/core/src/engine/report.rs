use crate::algebra::{FieldElem, Ring};
use crate::certificates::GroebnerConfig;
use crate::curve::ChartTag;

use super::{
    cup_product_matrix, ks_cocycle, ks_rank_kernel, lift_global_ksform, prolong_derivation, CurveModel, EngineError,
    GlobalKSForm, KSMatrix, Path,
};

#[derive(Debug, Clone, Default)]
pub struct AnalyzeOptions {
    /// Defaults to the Picard path for Picard curves, generic otherwise.
    pub path: Option<Path>,
    /// Caller's assertion that the Jacobian is simple.
    pub simple_jacobian: bool,
    pub config: GroebnerConfig,
    /// Also lift every kernel vector to a global KS-form.
    pub lift: bool,
}

/// `(A, B)` read off a Picard matrix as `A' = u·A`, `B' = u·B`.
#[derive(Debug, Clone, PartialEq)]
pub struct PicardConstants {
    pub a: FieldElem,
    pub b: FieldElem,
    pub unit: FieldElem,
}

#[derive(Debug, Clone, PartialEq)]
pub struct KSReport {
    pub genus: usize,
    pub rank: usize,
    pub h0_tau: usize,
    pub manin_abs_dim: usize,
    pub isotrivial: bool,
    pub path: Path,
    pub matrix: KSMatrix,
    /// Kernel of the cup product, in `ω` coordinates.
    pub liftable_basis: Vec<Vec<FieldElem>>,
    pub lifts: Vec<GlobalKSForm>,
    pub new_forms_exist: Option<bool>,
    pub picard: Option<PicardConstants>,
}

pub fn analyze(model: &CurveModel, options: &AnalyzeOptions) -> Result<KSReport, EngineError> {
    let curve = model.plane();
    let path = options.path.unwrap_or_else(|| model.default_path());
    let d1 = prolong_derivation(model, ChartTag::U, path, &options.config)?;
    let d2 = prolong_derivation(model, ChartTag::V, path, &options.config)?;
    let cocycle = ks_cocycle(&d1, &d2, curve)?;
    let matrix = cup_product_matrix(&cocycle, curve)?;
    let rk = ks_rank_kernel(&matrix);
    let g = matrix.size();
    let lifts = if options.lift {
        rk.kernel
            .iter()
            .map(|w| lift_global_ksform(w, curve, &d1, &d2, &cocycle))
            .collect::<Result<_, _>>()?
    } else {
        Vec::new()
    };
    let picard = model.picard().map(|_| {
        let unit = FieldElem::from_ratio(1, 3);
        let inv = FieldElem::from_int(3);
        PicardConstants {
            a: matrix.get(0, 2).mul(&inv),
            b: matrix.get(1, 2).mul(&inv),
            unit,
        }
    });
    Ok(KSReport {
        genus: g,
        rank: rk.rank,
        h0_tau: g + 1 - rk.rank,
        manin_abs_dim: g + rk.rank,
        isotrivial: rk.rank == 0,
        path,
        matrix,
        liftable_basis: rk.kernel,
        lifts,
        new_forms_exist: options.simple_jacobian.then_some(rk.rank < g),
        picard,
    })
}
