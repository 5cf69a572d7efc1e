use crate::algebra::multipoly::{X, Y};
use crate::algebra::{FieldElem, Monomial, MultiPoly};
use crate::certificates::{unit_certificate_with, CertificateError, GroebnerConfig, UnitCertificate};
use crate::curve::{ChartTag, CurveError, PlaneCurve};
use crate::jet::JetError;

use super::{CurveModel, EngineError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Path {
    /// Certificates from Buchberger's algorithm.
    Generic,
    /// Closed-form univariate certificates of a Picard curve.
    Picard,
}

/// A derivation on a chart's coordinate ring extending δ, given by its
/// values on the two coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct ProlongedDerivation {
    chart: ChartTag,
    dx: MultiPoly,
    dy: MultiPoly,
}

impl ProlongedDerivation {
    /// Checks `F^δ + F_x·D(x) + F_y·D(y) ≡ 0 mod F` on the chart.
    pub fn new(curve: &PlaneCurve, chart: ChartTag, dx: MultiPoly, dy: MultiPoly) -> Result<Self, JetError> {
        let d = ProlongedDerivation { chart, dx, dy };
        if !d.residual(curve)?.is_zero() {
            return Err(JetError::NotAProlongation(chart));
        }
        Ok(d)
    }

    pub fn chart(&self) -> ChartTag {
        self.chart
    }

    /// Value on the first chart coordinate (`x` or `s`).
    pub fn dx(&self) -> &MultiPoly {
        &self.dx
    }

    /// Value on the second chart coordinate (`y` or `t`).
    pub fn dy(&self) -> &MultiPoly {
        &self.dy
    }

    /// `F^δ + F_x·D(x) + F_y·D(y)` reduced modulo the chart equation.
    pub fn residual(&self, curve: &PlaneCurve) -> Result<MultiPoly, CurveError> {
        let c = self.chart;
        let r = curve
            .equation_delta(c)?
            .add(&curve.derivative(c, X).mul(&self.dx))
            .add(&curve.derivative(c, Y).mul(&self.dy));
        Ok(curve.remainder(c, &r))
    }
}

/// `D(x) = −F^δ·α`, `D(y) = −F^δ·β` from a certificate on `(F_x, F_y, F)`.
pub fn derivation_from_certificate(
    curve: &PlaneCurve,
    chart: ChartTag,
    cert: &UnitCertificate,
) -> Result<ProlongedDerivation, EngineError> {
    let fd = curve.equation_delta(chart)?.neg();
    let dx = fd.mul(cert.cofactor(0));
    let dy = fd.mul(cert.cofactor(1));
    Ok(ProlongedDerivation::new(curve, chart, dx, dy)?)
}

pub fn prolong_derivation(
    model: &CurveModel,
    chart: ChartTag,
    path: Path,
    config: &GroebnerConfig,
) -> Result<ProlongedDerivation, EngineError> {
    let curve = model.plane();
    match path {
        Path::Generic => {
            let eq = curve.equation(chart);
            let gens = vec![eq.partial(X), eq.partial(Y), eq.clone()];
            let cert = match unit_certificate_with(&gens, config) {
                Ok(c) => c,
                Err(CertificateError::NotUnitIdeal) => return Err(CurveError::Singular(chart).into()),
                Err(e) => return Err(e.into()),
            };
            derivation_from_certificate(curve, chart, &cert)
        }
        Path::Picard => {
            let p = model.picard().ok_or(EngineError::NotPicard)?;
            match chart {
                ChartTag::U => {
                    // D(x) = −g^δβ₁, D(y) = g^δα₁y/3.
                    let gd = curve.field().delta_poly(p.g())?;
                    let (a1, b1) = p.bezout();
                    let dx = gd.mul(b1).neg();
                    let dy = gd
                        .mul(a1)
                        .mul_term(&Monomial::var(Y, 1), &FieldElem::from_ratio(1, 3));
                    Ok(ProlongedDerivation::new(curve, chart, dx, dy)?)
                }
                ChartTag::V => derivation_from_certificate(curve, chart, curve.certificate(ChartTag::V)),
            }
        }
    }
}
