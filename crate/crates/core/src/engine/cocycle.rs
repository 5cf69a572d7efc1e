use crate::algebra::multipoly::{X, Y};
use crate::algebra::{FieldElem, Monomial, MultiPoly, Ring};
use crate::curve::{normal_form, swap_chart, ChartTag, OverlapElem, PlaneCurve};

use super::{EngineError, ProlongedDerivation};

/// `D₁₂ = D₁ − D₂` on `U∩V`, by its values on `x` and `y`.
#[derive(Debug, Clone, PartialEq)]
pub struct KSCocycle {
    d12x: OverlapElem,
    d12y: OverlapElem,
}

impl KSCocycle {
    pub fn d12x(&self) -> &OverlapElem {
        &self.d12x
    }

    pub fn d12y(&self) -> &OverlapElem {
        &self.d12y
    }

    pub fn is_zero(&self) -> bool {
        self.d12x.is_zero() && self.d12y.is_zero()
    }
}

/// Values of a chart-`V` derivation on `x = s/t` and `y = 1/t`, written in
/// `(x, y)`: `D(x) = y·D(s) − xy·D(t)` and `D(y) = −y²·D(t)`.
pub(crate) fn v_derivation_in_xy(d2: &ProlongedDerivation) -> (MultiPoly, MultiPoly) {
    let ds = swap_chart(d2.dx());
    let dt = swap_chart(d2.dy());
    let one = FieldElem::one();
    let dx = ds
        .mul_term(&Monomial::var(Y, 1), &one)
        .sub(&dt.mul_term(&Monomial::new([1, 1]), &one));
    let dy = dt.mul_term(&Monomial::var(Y, 2), &one.neg());
    (dx, dy)
}

pub fn ks_cocycle(
    d1: &ProlongedDerivation,
    d2: &ProlongedDerivation,
    curve: &PlaneCurve,
) -> Result<KSCocycle, EngineError> {
    assert_eq!(d1.chart(), ChartTag::U, "first derivation must live on U");
    assert_eq!(d2.chart(), ChartTag::V, "second derivation must live on V");
    let (vx, vy) = v_derivation_in_xy(d2);
    Ok(KSCocycle {
        d12x: normal_form(&d1.dx().sub(&vx), curve)?,
        d12y: normal_form(&d1.dy().sub(&vy), curve)?,
    })
}

/// `⟨ω₀₀, D₁₂⟩ = D₁₂(x)/F_y` as an element of `O(U∩V)`.
///
/// When `F_y = k·y^m` the quotient is taken directly. Otherwise, with
/// `αF_x + βF_y + γF = 1` on `U`, it equals `β·D₁₂(x) − α·D₁₂(y)` because
/// `F_x·D₁₂(x) + F_y·D₁₂(y) ≡ 0`.
pub fn pairing_with_omega00(cocycle: &KSCocycle, curve: &PlaneCurve) -> Result<OverlapElem, EngineError> {
    let fy = curve.derivative(ChartTag::U, Y);
    if fy.len() == 1 {
        let (m, k) = fy.leading().expect("F_y is a single term");
        if m.exp(X) == 0 {
            let p = cocycle
                .d12x
                .as_poly()
                .mul_term(&Monomial::var(Y, -m.exp(Y)), &k.inv()?);
            return Ok(normal_form(&p, curve)?);
        }
    }
    let cert = curve.certificate(ChartTag::U);
    let p = cert
        .cofactor(1)
        .mul(cocycle.d12x.as_poly())
        .sub(&cert.cofactor(0).mul(cocycle.d12y.as_poly()));
    Ok(normal_form(&p, curve)?)
}
