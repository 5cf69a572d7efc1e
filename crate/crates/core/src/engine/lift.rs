use crate::algebra::multipoly::Y;
use crate::algebra::{FieldElem, Monomial, MultiPoly, RatFn, Ring};
use crate::curve::{cech_cobound, cech_project, h0_omega_basis, normal_form, swap_chart, ChartTag, CurveError, PlaneCurve};
use crate::jet::{ksform_reduce, KSForm};

use super::cocycle::v_derivation_in_xy;
use super::{pairing_with_omega00, EngineError, KSCocycle, ProlongedDerivation};

/// A KS-form on each chart whose difference vanishes on `U∩V`.
#[derive(Debug, Clone, PartialEq)]
pub struct GlobalKSForm {
    /// Coordinates of the underlying 1-form in the `ω_{i,j}` basis.
    pub omega: Vec<FieldElem>,
    pub on_u: KSForm,
    pub on_v: KSForm,
    /// `η_V − η_U` on `U`, reduced to the `(d^τx, 1)` basis; both parts are
    /// zero in `K(C)` for a valid lift.
    pub residual: [RatFn; 2],
}

impl GlobalKSForm {
    pub fn overlap_ok(&self, curve: &PlaneCurve) -> bool {
        self.residual.iter().all(|r| curve.is_zero_fn(ChartTag::U, r))
    }
}

fn swap_ratfn(f: &RatFn) -> RatFn {
    RatFn::new(swap_chart(f.numerator()), swap_chart(f.denominator())).expect("nonzero denominator")
}

/// Lift `ω = Σ c_r ω_r` to a global section of `Ω^τ`.
///
/// With `ω = φ dx` and `⟨ω, D₁₂⟩ = p_U + p_V` split by the Čech coboundary,
/// `η_U = φ·d^τx − φ·D₁(x) + p_U` and, with `dx = y·ds − xy·dt` on `V`,
/// `η_V = φy·d^τs − φxy·d^τt − φ·D₂(x) − p_V`.
pub fn lift_global_ksform(
    omega: &[FieldElem],
    curve: &PlaneCurve,
    d1: &ProlongedDerivation,
    d2: &ProlongedDerivation,
    cocycle: &KSCocycle,
) -> Result<GlobalKSForm, EngineError> {
    let basis = h0_omega_basis(curve.degree());
    let numer = MultiPoly::from_terms(
        basis
            .iter()
            .zip(omega)
            .map(|(w, c)| (Monomial::new([w.i, w.j]), c.clone())),
    );
    let base = pairing_with_omega00(cocycle, curve)?;
    let pairing = normal_form(&base.as_poly().mul(&numer), curve)?;
    let (p_u, p_v) = match cech_cobound(&pairing, curve) {
        Ok(split) => split,
        Err(CurveError::NonzeroClass(coords)) => return Err(EngineError::NotLiftable(coords)),
        Err(e) => return Err(e.into()),
    };
    debug_assert!(cech_project(&pairing, curve).iter().all(Ring::is_zero));

    let fy = RatFn::from_poly(curve.derivative(ChartTag::U, Y));
    let phi = RatFn::from_poly(numer).div(&fy)?;
    let on_u = KSForm::new(
        ChartTag::U,
        vec![phi.clone(), RatFn::zero()],
        RatFn::from_poly(p_u)
            .sub(&phi.mul_poly(d1.dx())),
    );
    let on_u = reduce_form(curve, &on_u);

    let (d2x, _) = v_derivation_in_xy(d2);
    let y = MultiPoly::var(Y);
    let xy = MultiPoly::term(Monomial::new([1, 1]), FieldElem::one());
    let a_v = phi.mul_poly(&y);
    let b_v = phi.mul_poly(&xy).neg();
    let f_v = phi.mul_poly(&d2x).add(&RatFn::from_poly(p_v)).neg();
    let on_v = KSForm::new(
        ChartTag::V,
        vec![swap_ratfn(&a_v), swap_ratfn(&b_v)],
        swap_ratfn(&f_v),
    );
    let on_v = reduce_form(curve, &on_v);

    let diff = ksform_reduce(&on_v.to_chart(ChartTag::U).sub(&on_u), curve)?;
    let residual = [
        reduce_fn(curve, ChartTag::U, diff.coeff(0)),
        reduce_fn(curve, ChartTag::U, diff.function()),
    ];
    let lift = GlobalKSForm {
        omega: omega.to_vec(),
        on_u,
        on_v,
        residual,
    };
    if !lift.overlap_ok(curve) {
        return Err(EngineError::OverlapMismatch);
    }
    Ok(lift)
}

/// Numerator reduced modulo the chart equation, over the original
/// denominator.
fn reduce_fn(curve: &PlaneCurve, chart: ChartTag, f: &RatFn) -> RatFn {
    let r = curve.remainder(chart, f.numerator());
    RatFn::new(r, f.denominator().clone()).expect("nonzero denominator")
}

fn reduce_form(curve: &PlaneCurve, eta: &KSForm) -> KSForm {
    let c = eta.chart();
    KSForm::new(
        c,
        eta.coeffs().iter().map(|f| reduce_fn(curve, c, f)).collect(),
        reduce_fn(curve, c, eta.function()),
    )
    .simplify()
}
