use crate::algebra::{MultiPoly, RatFn};
use crate::curve::{ChartTag, PlaneCurve};
use crate::engine::ProlongedDerivation;

use super::{JetError, KSForm};

/// A section `σ` of `λ: Ω^τ → Ω¹` on one chart, given by `σ(dx_i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Splitting {
    chart: ChartTag,
    images: Vec<KSForm>,
}

impl Splitting {
    pub fn new(chart: ChartTag, images: Vec<KSForm>) -> Result<Self, JetError> {
        let n = images.len();
        for (i, im) in images.iter().enumerate() {
            let ok = im.coeffs().len() == n
                && im
                    .coeffs()
                    .iter()
                    .enumerate()
                    .all(|(k, a)| if k == i { a.equals(&RatFn::one()) } else { a.is_zero() });
            if !ok {
                return Err(JetError::NotASplitting);
            }
        }
        Ok(Splitting { chart, images })
    }

    pub fn chart(&self) -> ChartTag {
        self.chart
    }

    /// `σ(dx_i)`.
    pub fn image(&self, i: usize) -> &KSForm {
        &self.images[i]
    }

    /// `σ(Σ h_i dx_i)`.
    pub fn apply(&self, omega: &[RatFn]) -> KSForm {
        let n = self.images.len();
        omega
            .iter()
            .zip(&self.images)
            .fold(KSForm::zero(self.chart, n), |acc, (h, im)| acc.add(&im.scale(h)))
    }

    /// `λ(η)`: the coefficients of `dx_i`.
    pub fn lambda(eta: &KSForm) -> Vec<RatFn> {
        eta.coeffs().to_vec()
    }
}

/// `σ_D(dx_i) = d^τx_i − ι(D(x_i))`.
pub fn splitting_from_derivation(
    d: &ProlongedDerivation,
    curve: &PlaneCurve,
) -> Result<Splitting, JetError> {
    let d = ProlongedDerivation::new(curve, d.chart(), d.dx().clone(), d.dy().clone())?;
    let chart = d.chart();
    let images = [d.dx(), d.dy()]
        .iter()
        .enumerate()
        .map(|(i, v)| {
            KSForm::coordinate(chart, i, 2)
                .sub(&KSForm::iota(chart, RatFn::from_poly((*v).clone()), 2))
        })
        .collect();
    Splitting::new(chart, images)
}

/// `D(x_i) = −ι⁻¹(σ(dx_i) − d^τx_i)`.
pub fn derivation_from_splitting(s: &Splitting, curve: &PlaneCurve) -> Result<ProlongedDerivation, JetError> {
    let value = |i: usize| -> Result<MultiPoly, JetError> {
        let f = s.image(i).function().neg();
        f.as_poly().cloned().ok_or(JetError::NotASplitting)
    };
    ProlongedDerivation::new(curve, s.chart(), value(0)?, value(1)?)
}
