//! Strategies and property bodies shared by the property suite and the
//! acceptance runner.

#![allow(dead_code)]

use std::sync::OnceLock;

use ksforms::algebra::multipoly::{div_rem_univariate, X};
use ksforms::algebra::parse::{parse_field_elem, parse_poly};
use ksforms::algebra::{FieldElem, Monomial, MultiPoly, ParamField, RatFn, Ring};
use ksforms::certificates::{extended_euclid, GroebnerConfig};
use ksforms::curve::{
    cech_cobound, cech_project, h0_omega_basis, h1_basis, normal_form, ChartTag, PicardCurve, PlaneCurve,
};
use ksforms::engine::{prolong_derivation, CurveModel, Path, ProlongedDerivation};
use ksforms::jet::{
    compose_maps, d_tau, derivation_from_splitting, ksform_pullback, splitting_from_derivation, KSForm,
};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub const CASES: u32 = 200;

/// `Q(c, c1)` with `δc = c1`.
pub fn field() -> ParamField {
    ParamField::new(["c", "c1"])
        .unwrap()
        .with_derivative("c", FieldElem::param(1))
        .unwrap()
}

pub fn picard_model(deriv: &str, g: &str) -> CurveModel {
    let k = ParamField::new(["c", "c1"]).unwrap();
    let d = parse_field_elem(deriv, &k).unwrap();
    let k = k.with_derivative("c", d).unwrap();
    let g = parse_poly(g, &k, &["x"]).unwrap();
    PicardCurve::new(k, g).unwrap().into()
}

/// Smooth test curves over `field()`.
pub fn curves() -> &'static [PlaneCurve] {
    static CURVES: OnceLock<Vec<PlaneCurve>> = OnceLock::new();
    CURVES.get_or_init(|| {
        let k = field();
        let mut out = vec![picard_model("c1", "x^4 + c*x + 1").plane().clone()];
        for src in ["x^3 + y^3 + c*x*y + 1", "y^2 - x^3 - c*x - 1"] {
            let f = parse_poly(src, &k, &["x", "y"]).unwrap();
            out.push(PlaneCurve::new(k.clone(), f).unwrap());
        }
        out
    })
}

/// `(a + b·c)` or `(a + b·c)/(c + 1)` with small integers.
pub fn coeff() -> impl Strategy<Value = FieldElem> {
    (-3i64..=3, -2i64..=2, any::<bool>()).prop_map(|(a, b, div)| {
        let c = FieldElem::param(0);
        let v = FieldElem::from_int(a).add(&FieldElem::from_int(b).mul(&c));
        if div {
            v.div(&c.add(&FieldElem::one())).unwrap()
        } else {
            v
        }
    })
}

fn terms(xs: std::ops::RangeInclusive<i32>, ys: std::ops::RangeInclusive<i32>, n: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((xs, ys, coeff()), 0..=n)
        .prop_map(|ts| MultiPoly::from_terms(ts.into_iter().map(|(a, b, c)| (Monomial::new([a, b]), c))))
}

/// Polynomial in `x, y` of degree at most 2 in each variable.
pub fn poly() -> impl Strategy<Value = MultiPoly> {
    terms(0..=2, 0..=2, 4)
}

/// Polynomial map component of degree at most 1 in each variable.
pub fn small_poly() -> impl Strategy<Value = MultiPoly> {
    terms(0..=1, 0..=1, 3)
}

/// Laurent polynomial `x^a y^b` with `b` possibly negative.
pub fn laurent() -> impl Strategy<Value = MultiPoly> {
    terms(0..=5, -4..=3, 5)
}

/// `p / (1 + x·q)`, never an identically zero denominator.
pub fn ratfn() -> impl Strategy<Value = RatFn> {
    (poly(), terms(0..=1, 0..=1, 2)).prop_map(|(p, q)| {
        let den = MultiPoly::one().add(&q.mul_term(&Monomial::var(X, 1), &FieldElem::one()));
        RatFn::new(p, den).unwrap()
    })
}

pub fn univariate() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((0i32..=4, coeff()), 0..=4)
        .prop_map(|ts| MultiPoly::from_terms(ts.into_iter().map(|(a, c)| (Monomial::new([a, 0]), c))))
}

fn check(ok: bool, what: &str) -> Result<(), TestCaseError> {
    if ok {
        Ok(())
    } else {
        Err(TestCaseError::fail(what.to_string()))
    }
}

fn dt(f: &RatFn) -> KSForm {
    d_tau(f, &field(), ChartTag::U, 2).unwrap()
}

pub fn leibniz(f: &RatFn, g: &RatFn) -> Result<(), TestCaseError> {
    let prod = dt(&f.mul(g));
    let rule = dt(g).scale(f).add(&dt(f).scale(g));
    check(prod.sub(&rule).is_zero(), "d(fg) = f·dg + g·df")?;
    let sum = dt(&f.add(g));
    check(sum.sub(&dt(f).add(&dt(g))).is_zero(), "d(f+g) = df + dg")
}

pub fn pullback_functorial(phi: &[MultiPoly; 2], psi: &[MultiPoly; 2], eta: &(MultiPoly, MultiPoly, MultiPoly)) -> Result<(), TestCaseError> {
    let k = field();
    let phi: Vec<RatFn> = phi.iter().cloned().map(RatFn::from_poly).collect();
    let psi: Vec<RatFn> = psi.iter().cloned().map(RatFn::from_poly).collect();
    let eta = KSForm::new(
        ChartTag::U,
        vec![RatFn::from_poly(eta.0.clone()), RatFn::from_poly(eta.1.clone())],
        RatFn::from_poly(eta.2.clone()),
    );
    let composite = compose_maps(&psi, &phi).unwrap();
    let direct = ksform_pullback(&k, &composite, &eta, 2).unwrap();
    let staged = ksform_pullback(&k, &phi, &ksform_pullback(&k, &psi, &eta, 2).unwrap(), 2).unwrap();
    check(direct.sub(&staged).is_zero(), "(ψ∘φ)* = φ*ψ*")
}

pub fn normal_form_multiplicative(curve: usize, a: &MultiPoly, b: &MultiPoly) -> Result<(), TestCaseError> {
    let c = &curves()[curve];
    let direct = normal_form(&a.mul(b), c).unwrap();
    let na = normal_form(a, c).unwrap();
    let nb = normal_form(b, c).unwrap();
    let staged = normal_form(&na.as_poly().mul(nb.as_poly()), c).unwrap();
    check(direct == staged, "nf(ab) = nf(nf(a)·nf(b))")?;
    let d = c.degree();
    check(
        direct.as_poly().degree_in(X).is_none_or(|e| e < d),
        "normal form has x-degree below d",
    )
}

pub fn project_cobound(curve: usize, z: &MultiPoly) -> Result<(), TestCaseError> {
    let c = &curves()[curve];
    let z = normal_form(z, c).unwrap();
    let coords = cech_project(&z, c);
    let class = MultiPoly::from_terms(
        h1_basis(c.degree())
            .iter()
            .zip(&coords)
            .map(|(b, k)| (b.monomial(), k.clone())),
    );
    let exact = normal_form(&z.as_poly().sub(&class), c).unwrap();
    check(cech_project(&exact, c).iter().all(Ring::is_zero), "projection of z − [z] vanishes")?;
    let (zu, zv) = cech_cobound(&exact, c).unwrap();
    check(zu.add(&zv) == *exact.as_poly(), "z_U + z_V = z")?;
    check(zu.is_nonnegative(), "z_U regular on U")?;
    check(
        zv.terms().iter().all(|(m, _)| m.exp(0) + m.exp(1) <= 0 && m.exp(0) >= 0),
        "z_V regular on V",
    )?;
    let any_nonzero = coords.iter().any(|k| !k.is_zero());
    check(cech_cobound(&z, c).is_err() == any_nonzero, "cobound fails exactly on nonzero classes")
}

pub fn basis_counts(d: i32) -> Result<(), TestCaseError> {
    let n = ((d - 1) * (d - 2) / 2) as usize;
    check(h1_basis(d).len() == n && h0_omega_basis(d).len() == n, "|h1| = |h0| = (d−1)(d−2)/2")
}

pub fn euclid_identity(a: &MultiPoly, b: &MultiPoly) -> Result<(), TestCaseError> {
    if a.is_zero() && b.is_zero() {
        return Ok(());
    }
    let bz = extended_euclid(a, b, X).unwrap();
    check(bz.u.mul(a).add(&bz.v.mul(b)) == bz.g, "u·a + v·b = g")?;
    for p in [a, b] {
        let (_, r) = div_rem_univariate(p, &bz.g, X).unwrap();
        check(r.is_zero(), "g divides both inputs")?;
    }
    Ok(())
}

/// `D + h·(F_y, −F_x)` is again a prolongation for any `h`.
pub fn splitting_roundtrip(curve: usize, h: &MultiPoly) -> Result<(), TestCaseError> {
    let c = &curves()[curve];
    let model = CurveModel::from(c.clone());
    let base = prolong_derivation(&model, ChartTag::U, Path::Generic, &GroebnerConfig::default()).unwrap();
    let dx = base.dx().add(&h.mul(&c.derivative(ChartTag::U, 1)));
    let dy = base.dy().sub(&h.mul(&c.derivative(ChartTag::U, 0)));
    let d = ProlongedDerivation::new(c, ChartTag::U, dx, dy).unwrap();
    let s = splitting_from_derivation(&d, c).unwrap();
    let back = derivation_from_splitting(&s, c).unwrap();
    check(back == d, "derivation → splitting → derivation is the identity")
}
