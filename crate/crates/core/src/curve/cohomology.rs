//! `O(U∩V) = ⊕_{j<d} K[y, 1/y]·x^j` and the Čech complex of the cover.
//!
//! A monomial `x^j y^i` in normal form lies in `O(U)` when `i ≥ 0` and in
//! `O(V)` when `i + j ≤ 0` (it equals `s^j t^(-i-j)` there). The remaining
//! monomials `x^j / y^m` with `1 ≤ m ≤ j − 1` form a basis of `H¹(C, O)`.

use crate::algebra::multipoly::{X, Y};
use crate::algebra::{FieldElem, Monomial, MultiPoly, RatFn, Ring};

use super::{CurveError, PlaneCurve};

/// Basis monomial `x^j / y^m` of `H¹(C, O)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct H1Monomial {
    pub j: i32,
    pub m: i32,
}

impl H1Monomial {
    pub fn monomial(self) -> Monomial {
        Monomial::new([self.j, -self.m])
    }
}

impl std::fmt::Display for H1Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let x = if self.j == 1 { "x".to_string() } else { format!("x^{}", self.j) };
        let y = if self.m == 1 { "y".to_string() } else { format!("y^{}", self.m) };
        write!(f, "{x}/{y}")
    }
}

/// Index `(i, j)` of `ω_{i,j} = x^i y^j dx / F_y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OmegaIndex {
    pub i: i32,
    pub j: i32,
}

impl std::fmt::Display for OmegaIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "w{}{}", self.i, self.j)
    }
}

/// `x^j / y^m` for `2 ≤ j ≤ d−1`, `1 ≤ m ≤ j−1`, ordered by `(j, m)`.
/// Empty for `d < 3`.
pub fn h1_basis(d: i32) -> Vec<H1Monomial> {
    (2..d)
        .flat_map(|j| (1..j).map(move |m| H1Monomial { j, m }))
        .collect()
}

/// `(i, j)` with `i + j ≤ d − 3`, by total degree and then descending `i`.
/// Empty for `d < 3`.
pub fn h0_omega_basis(d: i32) -> Vec<OmegaIndex> {
    (0..=d - 3)
        .flat_map(|n| (0..=n).rev().map(move |i| OmegaIndex { i, j: n - i }))
        .collect()
}

/// An element of `O(U∩V)` in its unique normal form: a polynomial in `x` of
/// degree below `d` with Laurent polynomial coefficients in `y`.
#[derive(Debug, Clone, PartialEq)]
pub struct OverlapElem(MultiPoly);

impl OverlapElem {
    pub fn zero() -> Self {
        OverlapElem(MultiPoly::zero())
    }

    pub fn as_poly(&self) -> &MultiPoly {
        &self.0
    }

    pub fn into_poly(self) -> MultiPoly {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn coeff(&self, j: i32, i: i32) -> FieldElem {
        self.0.coeff(&Monomial::new([j, i]))
    }
}

/// Reduce a Laurent polynomial in `x, 1/y` modulo `F`.
pub fn normal_form(p: &MultiPoly, curve: &PlaneCurve) -> Result<OverlapElem, CurveError> {
    if p.min_degree_in(X).is_some_and(|e| e < 0) || p.num_vars() > 2 {
        return Err(CurveError::NotInOverlapRing);
    }
    let d = curve.degree();
    // x^d ≡ -tail where F/lc = x^d + tail.
    let neg_tail = curve
        .monic()
        .filter(|m| m.exp(X) < d)
        .neg();
    let xd = Monomial::var(X, d);
    let mut low = p.filter(|m| m.exp(X) < d);
    let mut high = p.filter(|m| m.exp(X) >= d);
    while !high.is_zero() {
        let t = high.map_monomials(|m| m.div(&xd)).mul(&neg_tail);
        low = low.add(&t.filter(|m| m.exp(X) < d));
        high = t.filter(|m| m.exp(X) >= d);
    }
    Ok(OverlapElem(low))
}

/// Normal form of a rational function whose denominator is `k·y^n`.
pub fn normal_form_ratfn(f: &RatFn, curve: &PlaneCurve) -> Result<OverlapElem, CurveError> {
    let den = f.denominator();
    if den.len() != 1 {
        return Err(CurveError::NotInOverlapRing);
    }
    let (m, c) = den.leading().expect("nonzero");
    if m.exp(X) != 0 {
        return Err(CurveError::NotInOverlapRing);
    }
    let p = f
        .numerator()
        .mul_term(&Monomial::var(Y, -m.exp(Y)), &c.inv()?);
    normal_form(&p, curve)
}

/// Coordinates of `[z]` in [`h1_basis`].
pub fn cech_project(z: &OverlapElem, curve: &PlaneCurve) -> Vec<FieldElem> {
    h1_basis(curve.degree())
        .into_iter()
        .map(|b| z.0.coeff(&b.monomial()))
        .collect()
}

/// Split a coboundary as `z = z_U + z_V` with `z_U ∈ O(U)` and `z_V ∈ O(V)`,
/// both written in `(x, y)`. The constant term goes to `z_U`.
pub fn cech_cobound(z: &OverlapElem, curve: &PlaneCurve) -> Result<(MultiPoly, MultiPoly), CurveError> {
    let coords = cech_project(z, curve);
    if coords.iter().any(|c| !c.is_zero()) {
        return Err(CurveError::NonzeroClass(coords));
    }
    let zu = z.0.filter(|m| m.exp(Y) >= 0);
    let zv = z.0.filter(|m| m.exp(Y) < 0);
    debug_assert!(zv.terms().iter().all(|(m, _)| m.exp(X) + m.exp(Y) <= 0));
    Ok((zu, zv))
}
