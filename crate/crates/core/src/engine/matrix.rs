use rayon::prelude::*;

use crate::algebra::{FieldElem, Monomial, Ring};
use crate::curve::{cech_project, h0_omega_basis, h1_basis, normal_form, H1Monomial, OmegaIndex, PlaneCurve};

use super::{pairing_with_omega00, EngineError, KSCocycle};

/// Matrix of `ω ↦ KS ⌣ ω`; row `r` is `ω_r`, column `k` is the `k`-th
/// basis class of `H¹(C, O)`.
#[derive(Debug, Clone, PartialEq)]
pub struct KSMatrix {
    pub rows: Vec<OmegaIndex>,
    pub cols: Vec<H1Monomial>,
    pub entries: Vec<Vec<FieldElem>>,
}

impl KSMatrix {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, r: usize, k: usize) -> &FieldElem {
        &self.entries[r][k]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Ring::is_zero)
    }

    /// Zero pattern, row by row.
    pub fn support(&self) -> Vec<Vec<bool>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|e| !e.is_zero()).collect())
            .collect()
    }
}

pub fn cup_product_matrix(cocycle: &KSCocycle, curve: &PlaneCurve) -> Result<KSMatrix, EngineError> {
    let d = curve.degree();
    let rows = h0_omega_basis(d);
    let cols = h1_basis(d);
    let base = pairing_with_omega00(cocycle, curve)?;
    let entries = rows
        .par_iter()
        .map(|w| {
            let z = base
                .as_poly()
                .mul_term(&Monomial::new([w.i, w.j]), &FieldElem::one());
            Ok(cech_project(&normal_form(&z, curve)?, curve))
        })
        .collect::<Result<Vec<_>, EngineError>>()?;
    Ok(KSMatrix { rows, cols, entries })
}
