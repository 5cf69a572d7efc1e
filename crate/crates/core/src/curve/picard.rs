use crate::algebra::multipoly::{int, monomial, X, Y};
use crate::algebra::{FieldElem, Monomial, MultiPoly, ParamField, Ring};
use crate::certificates::{extended_euclid, Bezout};

use super::{plane::swap_chart, CurveError, PlaneCurve};

/// `y³ = g(x)` with `g` monic of degree 4 and coprime to `g'`.
///
/// Both smoothness certificates are closed forms: on `U` from the Bezout
/// identity `α₁g + β₁g' = 1`, on `V` from the Euler relation of the
/// homogeneous quartic `G̃(s, t) = t⁴ g(s/t)`.
#[derive(Debug, Clone)]
pub struct PicardCurve {
    g: MultiPoly,
    alpha1: MultiPoly,
    beta1: MultiPoly,
    plane: PlaneCurve,
}

impl PicardCurve {
    pub fn new(field: ParamField, g: MultiPoly) -> Result<Self, CurveError> {
        if g.num_vars() > 1 || !g.is_nonnegative() {
            return Err(CurveError::NotPicard("g must be a polynomial in x alone".into()));
        }
        if g.degree_in(X) != Some(4) {
            return Err(CurveError::NotPicard("g must have degree 4".into()));
        }
        if !g.leading_coeff().is_some_and(Ring::is_one) {
            return Err(CurveError::NotPicard("g must be monic".into()));
        }
        let dg = g.partial(X);
        let (alpha1, beta1) = extended_euclid(&g, &dg, X)?.require_coprime()?;

        let f = monomial(0, 3, FieldElem::one()).sub(&g);
        let third = FieldElem::from_ratio(1, 3);
        let cof_u = vec![
            beta1.neg(),
            alpha1.mul_term(&Monomial::var(Y, 1), &third),
            alpha1.neg(),
        ];
        let cof_v = euler_certificate(&g);
        let plane = PlaneCurve::from_certificates(field, f, cof_u, cof_v)?;
        Ok(PicardCurve {
            g,
            alpha1,
            beta1,
            plane,
        })
    }

    pub fn plane(&self) -> &PlaneCurve {
        &self.plane
    }

    pub fn into_plane(self) -> PlaneCurve {
        self.plane
    }

    pub fn g(&self) -> &MultiPoly {
        &self.g
    }

    /// `g̃(x) = x⁴ g(1/x)`.
    pub fn g_tilde(&self) -> MultiPoly {
        self.g
            .map_monomials(|m| Monomial::var(X, 4 - m.exp(X)))
    }

    /// `(α₁, β₁)` with `α₁g + β₁g' = 1`.
    pub fn bezout(&self) -> (&MultiPoly, &MultiPoly) {
        (&self.alpha1, &self.beta1)
    }

    /// The identity `α₃(g + g̃') + β₃g' = 1`, when it exists.
    pub fn alpha3_identity(&self) -> Result<Bezout, CurveError> {
        let a = self.g.add(&self.g_tilde().partial(X));
        Ok(extended_euclid(&a, &self.g.partial(X), X)?)
    }

    /// Coefficient of `x^k` in `g`.
    pub fn coeff(&self, k: i32) -> FieldElem {
        self.g.coeff(&Monomial::var(X, k))
    }
}

/// Cofactors on `(F̃_s, F̃_t, F̃)` for `F̃ = t − G̃`. With
/// `P_s = (G̃_s − 4s³)/t`, `P_t = (G̃_t − a₃s³)/t` and `Q = P_t − a₃P_s/4`
/// they are `(−a₃/4 − Qs/3, 1 − Qt/3, 4Q/3)`.
fn euler_certificate(g: &MultiPoly) -> Vec<MultiPoly> {
    let a3 = g.coeff(&Monomial::var(X, 3));
    let big_g = swap_chart(g).mul_term(&Monomial::var(Y, 4), &FieldElem::one());
    let s3 = monomial(3, 0, FieldElem::one());
    let div_t = |p: MultiPoly| p.map_monomials(|m| m.div(&Monomial::var(Y, 1)));
    let ps = div_t(big_g.partial(X).sub(&s3.scale(&FieldElem::from_int(4))));
    let pt = div_t(big_g.partial(Y).sub(&s3.scale(&a3)));
    let quarter_a3 = a3.mul(&FieldElem::from_ratio(1, 4));
    let q = pt.sub(&ps.scale(&quarter_a3));
    let third = FieldElem::from_ratio(1, 3);
    vec![
        MultiPoly::constant(quarter_a3.neg())
            .sub(&q.mul_term(&Monomial::var(X, 1), &third)),
        int(1).sub(&q.mul_term(&Monomial::var(Y, 1), &third)),
        q.scale(&FieldElem::from_ratio(4, 3)),
    ]
}
