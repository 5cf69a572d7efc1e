mod common;

use common::*;
use ksforms::algebra::parse::parse_poly;
use ksforms::algebra::{FieldElem, ParamField, Ring};
use ksforms::certificates::GroebnerConfig;
use ksforms::curve::{ChartTag, PicardCurve};
use ksforms::engine::{
    analyze, cup_product_matrix, ks_cocycle, lift_global_ksform, prolong_derivation, AnalyzeOptions, CurveModel,
    EngineError, Path,
};

fn symbolic_quartic() -> CurveModel {
    let names = ["a", "b", "c", "d", "a1", "b1", "c1", "d1"];
    let mut k = ParamField::new(names).unwrap();
    for (i, p) in ["a", "b", "c", "d"].iter().enumerate() {
        k = k.with_derivative(p, FieldElem::param(i + 4)).unwrap();
    }
    let g = parse_poly("x^4 + a*x^3 + b*x^2 + c*x + d", &k, &["x"]).unwrap();
    PicardCurve::new(k, g).unwrap().into()
}

#[test]
fn symbolic_picard_sparsity() {
    let r = analyze(&symbolic_quartic(), &AnalyzeOptions::default()).unwrap();
    let pattern = r.matrix.support();
    assert_eq!(
        pattern,
        vec![
            vec![false, false, true],
            vec![false, false, true],
            vec![true, true, false],
        ]
    );
    assert_eq!(r.rank, 2);
}

#[test]
fn picard_family_rank_window() {
    for g in ["x^4 + c*x + 1", "x^4 + c*x^2 + x + 1", "x^4 + x^3 + c*x + 2", "x^4 + c*x^3 + 1"] {
        let r = analyze(&picard_model("c1", g), &AnalyzeOptions::default()).unwrap();
        assert!((1..=2).contains(&r.rank), "{g}: rank {}", r.rank);
        assert_eq!(r.h0_tau + r.rank, r.genus + 1);
        assert_eq!(r.manin_abs_dim, 2 * r.genus + 1 - r.h0_tau);
    }
}

#[test]
fn isotrivial_member_has_rank_zero() {
    // (x − c)^4 + (x − c) + 1 is a translate of a constant curve.
    let g = "x^4 - 4*c*x^3 + 6*c^2*x^2 - 4*c^3*x + c^4 + x - c + 1";
    let model = picard_model("c1", g);
    let r = analyze(&model, &AnalyzeOptions::default()).unwrap();
    assert_eq!(r.rank, 0);
    assert!(r.isotrivial);
    assert_eq!(r.h0_tau, 4);
}

#[test]
fn new_forms_flag_needs_assertion() {
    let model = picard_model("c1", "x^4 + c*x + 1");
    let plain = analyze(&model, &AnalyzeOptions::default()).unwrap();
    assert_eq!(plain.new_forms_exist, None);
    let opts = AnalyzeOptions {
        simple_jacobian: true,
        ..Default::default()
    };
    assert_eq!(analyze(&model, &opts).unwrap().new_forms_exist, Some(true));
}

#[test]
fn picard_constants_carry_the_unit() {
    let model = picard_model("c1", "x^4 + c*x + 1");
    let r = analyze(&model, &AnalyzeOptions::default()).unwrap();
    let p = r.picard.unwrap();
    assert_eq!(p.a.mul(&p.unit), *r.matrix.get(0, 2));
    assert_eq!(p.b.mul(&p.unit), *r.matrix.get(1, 2));
}

struct Setup {
    model: CurveModel,
    d1: ksforms::engine::ProlongedDerivation,
    d2: ksforms::engine::ProlongedDerivation,
    cocycle: ksforms::engine::KSCocycle,
}

fn setup(deriv: &str) -> Setup {
    let model = picard_model(deriv, "x^4 + c*x + 1");
    let cfg = GroebnerConfig::default();
    let d1 = prolong_derivation(&model, ChartTag::U, Path::Picard, &cfg).unwrap();
    let d2 = prolong_derivation(&model, ChartTag::V, Path::Picard, &cfg).unwrap();
    let cocycle = ks_cocycle(&d1, &d2, model.plane()).unwrap();
    Setup {
        model,
        d1,
        d2,
        cocycle,
    }
}

#[test]
fn zero_form_lifts_to_zero() {
    let s = setup("c1");
    let zero = vec![FieldElem::zero(); 3];
    let lift = lift_global_ksform(&zero, s.model.plane(), &s.d1, &s.d2, &s.cocycle).unwrap();
    assert!(lift.on_u.is_zero() && lift.on_v.is_zero());
}

#[test]
fn forms_outside_the_kernel_do_not_lift() {
    let s = setup("c1");
    let w3 = vec![FieldElem::zero(), FieldElem::zero(), FieldElem::one()];
    let err = lift_global_ksform(&w3, s.model.plane(), &s.d1, &s.d2, &s.cocycle).unwrap_err();
    let m = cup_product_matrix(&s.cocycle, s.model.plane()).unwrap();
    assert_eq!(err, EngineError::NotLiftable(m.entries[2].clone()));
}

#[test]
fn constant_coefficients_lift_without_correction() {
    let s = setup("0");
    assert!(s.cocycle.is_zero());
    for i in 0..3 {
        let mut w = vec![FieldElem::zero(); 3];
        w[i] = FieldElem::one();
        let lift = lift_global_ksform(&w, s.model.plane(), &s.d1, &s.d2, &s.cocycle).unwrap();
        assert!(lift.on_u.function().is_zero());
        assert!(lift.on_v.function().is_zero());
    }
}

#[test]
fn general_plane_curve_pairing_uses_the_certificate() {
    // F_y = 3y^2 + c·x is not a unit on U∩V here.
    let c = &curves()[1];
    let model = CurveModel::from(c.clone());
    let r = analyze(
        &model,
        &AnalyzeOptions {
            lift: true,
            ..Default::default()
        },
    )
    .unwrap();
    assert_eq!(r.genus, 1);
    assert_eq!(r.rank, 1);
    assert!(r.lifts.is_empty());
}
