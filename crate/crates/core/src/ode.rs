//! Order-one ODEs cut out by KS-forms: `η(exp₁(x)) = 0`, and the
//! constant-coefficient mode `ω(exp₁(x)) = 1`.

use crate::algebra::multipoly::{X, Y};
use crate::algebra::{AlgebraError, RatFn};
use crate::curve::{ChartTag, CurveError, PlaneCurve};
use crate::jet::{ksform_reduce, JetError, KSForm};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OdeError {
    #[error("the form has no d^τx part on the curve and defines no section")]
    DegenerateForm,
    #[error("the curve has non-constant coefficients")]
    NotConstantCoefficients,
    #[error(transparent)]
    Jet(#[from] JetError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `x' = rx(x, y)`, `y' = ry(x, y)` on one chart.
#[derive(Debug, Clone, PartialEq)]
pub struct DVarietySection {
    pub chart: ChartTag,
    pub rx: RatFn,
    pub ry: RatFn,
}

impl DVarietySection {
    pub fn dots(&self) -> [RatFn; 2] {
        [self.rx.clone(), self.ry.clone()]
    }

    /// Equality as functions on the curve.
    pub fn equals(&self, other: &Self, curve: &PlaneCurve) -> bool {
        self.chart == other.chart
            && curve.equal_fn(self.chart, &self.rx, &other.rx)
            && curve.equal_fn(self.chart, &self.ry, &other.ry)
    }
}

/// Both residuals reduced modulo the chart equation.
#[derive(Debug, Clone, PartialEq)]
pub struct SectionResiduals {
    /// `F^δ + F_x·Rx + F_y·Ry`.
    pub tangency: RatFn,
    /// `η` evaluated on the section.
    pub form: RatFn,
}

impl SectionResiduals {
    pub fn is_zero(&self) -> bool {
        self.tangency.is_zero() && self.form.is_zero()
    }
}

fn reduce(curve: &PlaneCurve, chart: ChartTag, f: &RatFn) -> RatFn {
    let num = curve.remainder(chart, f.numerator());
    RatFn::new(num, f.denominator().clone())
        .expect("nonzero denominator")
        .simplify()
}

fn tangent_ry(curve: &PlaneCurve, chart: ChartTag, rx: &RatFn) -> Result<RatFn, OdeError> {
    let fy = RatFn::from_poly(curve.derivative(chart, Y));
    if curve.is_zero_fn(chart, &fy) {
        return Err(JetError::NonInvertibleFy.into());
    }
    let fx = curve.derivative(chart, X);
    let fd = RatFn::from_poly(curve.equation_delta(chart)?);
    Ok(reduce(curve, chart, &fd.add(&rx.mul_poly(&fx)).neg().div(&fy)?))
}

fn tangency(curve: &PlaneCurve, s: &DVarietySection) -> Result<RatFn, OdeError> {
    let c = s.chart;
    let r = RatFn::from_poly(curve.equation_delta(c)?)
        .add(&s.rx.mul_poly(&curve.derivative(c, X)))
        .add(&s.ry.mul_poly(&curve.derivative(c, Y)));
    Ok(reduce(curve, c, &r))
}

/// Solve `η(exp₁(x)) = 0` for `(x', y')`.
pub fn section_from_ksform(eta: &KSForm, curve: &PlaneCurve) -> Result<DVarietySection, OdeError> {
    let chart = eta.chart();
    let e = ksform_reduce(eta, curve)?;
    let (u, w) = (e.coeff(0), e.function());
    if curve.is_zero_fn(chart, u) {
        return Err(OdeError::DegenerateForm);
    }
    let rx = reduce(curve, chart, &w.div(u)?.neg());
    let ry = tangent_ry(curve, chart, &rx)?;
    let s = DVarietySection { chart, rx, ry };
    debug_assert!(verify_section(&s, eta, curve).is_zero());
    Ok(s)
}

/// Residuals of the section against `d^τF` and against `η`; a failed
/// computation is reported as a nonzero residual.
pub fn verify_section(s: &DVarietySection, eta: &KSForm, curve: &PlaneCurve) -> SectionResiduals {
    let tangency = tangency(curve, s).unwrap_or_else(|_| RatFn::one());
    let form = reduce(curve, s.chart, &eta.to_chart(s.chart).eval(&s.dots()));
    SectionResiduals { tangency, form }
}

/// Solve `ω(exp₁(x)) = 1` for `ω = u·dx` on chart `U` of a curve with
/// constant coefficients.
pub fn hi_constant_mode(u: &RatFn, curve: &PlaneCurve) -> Result<DVarietySection, OdeError> {
    if !curve.has_constant_coefficients()? {
        return Err(OdeError::NotConstantCoefficients);
    }
    if curve.is_zero_fn(ChartTag::U, u) {
        return Err(OdeError::DegenerateForm);
    }
    let rx = reduce(curve, ChartTag::U, &u.inv()?);
    let ry = tangent_ry(curve, ChartTag::U, &rx)?;
    Ok(DVarietySection {
        chart: ChartTag::U,
        rx,
        ry,
    })
}
