use crate::algebra::{AlgebraError, ParamField, RatFn};

use super::{d_tau, JetError, KSForm};

fn undefined(e: AlgebraError) -> JetError {
    match e {
        AlgebraError::ZeroDenominator => JetError::UndefinedComposition,
        other => JetError::Algebra(other),
    }
}

/// `φ*η` for `φ = (φ_0, …)` written in `n` source coordinates:
/// `φ*(Σ a_k d^τu_k + ι(c)) = Σ (a_k∘φ)·d^τ(φ_k) + ι(c∘φ)`.
pub fn ksform_pullback(
    field: &ParamField,
    phi: &[RatFn],
    eta: &KSForm,
    n: usize,
) -> Result<KSForm, JetError> {
    let chart = eta.chart();
    let mut out = KSForm::iota(chart, eta.function().compose(phi).map_err(undefined)?, n);
    for (a, p) in eta.coeffs().iter().zip(phi) {
        if a.is_zero() {
            continue;
        }
        let a = a.compose(phi).map_err(undefined)?;
        out = out.add(&d_tau(p, field, chart, n)?.scale(&a));
    }
    Ok(out)
}

/// `ψ∘φ`: each component of `ψ` evaluated at `φ`.
pub fn compose_maps(psi: &[RatFn], phi: &[RatFn]) -> Result<Vec<RatFn>, JetError> {
    psi.iter()
        .map(|p| p.compose(phi).map_err(undefined))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_ratfn;
    use crate::curve::ChartTag;

    fn r(src: &str, vars: &[&str]) -> RatFn {
        parse_ratfn(src, &ParamField::rationals(), vars).unwrap()
    }

    #[test]
    fn identity_pullback() {
        let k = ParamField::rationals();
        let xy = ["x", "y"];
        let eta = KSForm::new(ChartTag::U, vec![r("x*y", &xy), r("1", &xy)], r("y^2", &xy));
        let id = [r("x", &xy), r("y", &xy)];
        let back = ksform_pullback(&k, &id, &eta, 2).unwrap();
        for (a, b) in back.coeffs().iter().zip(eta.coeffs()) {
            assert!(a.equals(b));
        }
        assert!(back.function().equals(eta.function()));
    }

    #[test]
    fn projection_to_line() {
        let k = ParamField::rationals();
        let xy = ["x", "y"];
        let du = KSForm::coordinate(ChartTag::U, 0, 1);
        let back = ksform_pullback(&k, &[r("x", &xy)], &du, 2).unwrap();
        assert!(back.coeff(0).equals(&RatFn::one()));
        assert!(back.coeff(1).is_zero());
    }

    #[test]
    fn squaring_map() {
        let k = ParamField::rationals();
        let eta = KSForm::new(ChartTag::U, vec![RatFn::one()], r("u", &["u"]));
        let back = ksform_pullback(&k, &[r("x^2", &["x"])], &eta, 1).unwrap();
        assert!(back.coeff(0).equals(&r("2*x", &["x"])));
        assert!(back.function().equals(&r("x^2", &["x"])));
    }

    #[test]
    fn pole_on_whole_source_is_rejected() {
        let k = ParamField::rationals();
        let eta = KSForm::iota(ChartTag::U, r("1/u", &["u"]), 1);
        assert_eq!(
            ksform_pullback(&k, &[RatFn::zero()], &eta, 1),
            Err(JetError::UndefinedComposition)
        );
    }
}
