use crate::algebra::multipoly::{X, Y};
use crate::algebra::{FieldElem, Monomial, MultiPoly, ParamField, RatFn, Ring};
use crate::certificates::{unit_certificate_with, CertificateError, GroebnerConfig, UnitCertificate};

use super::{ChartTag, CurveError};

/// `x^a y^b ↔ s^a t^(-a-b)`. The exponent map is an involution, so the same
/// function converts in both directions.
pub fn swap_chart(p: &MultiPoly) -> MultiPoly {
    p.map_monomials(|m| Monomial::new([m.exp(0), -m.exp(0) - m.exp(1)]))
}

/// A smooth plane curve `F(x, y) = 0` of degree `d`, monic in `x` up to a
/// unit, with smoothness certificates on both charts.
#[derive(Debug, Clone)]
pub struct PlaneCurve {
    field: ParamField,
    f: MultiPoly,
    f_tilde: MultiPoly,
    degree: i32,
    cert_u: UnitCertificate,
    cert_v: UnitCertificate,
    /// `F` scaled so that its `x^d` coefficient is 1.
    monic: MultiPoly,
}

impl PlaneCurve {
    pub fn new(field: ParamField, f: MultiPoly) -> Result<Self, CurveError> {
        Self::with_config(field, f, &GroebnerConfig::default())
    }

    pub fn with_config(field: ParamField, f: MultiPoly, config: &GroebnerConfig) -> Result<Self, CurveError> {
        let (degree, monic) = check_shape(&f)?;
        let f_tilde = tilde(&f, degree);
        let cert_u = smoothness(&f, ChartTag::U, config)?;
        let cert_v = smoothness(&f_tilde, ChartTag::V, config)?;
        Ok(PlaneCurve {
            field,
            f,
            f_tilde,
            degree,
            cert_u,
            cert_v,
            monic,
        })
    }

    /// Build from externally produced certificates on
    /// `(F_x, F_y, F)` and `(F̃_s, F̃_t, F̃)`.
    pub fn from_certificates(
        field: ParamField,
        f: MultiPoly,
        cofactors_u: Vec<MultiPoly>,
        cofactors_v: Vec<MultiPoly>,
    ) -> Result<Self, CurveError> {
        let (degree, monic) = check_shape(&f)?;
        let f_tilde = tilde(&f, degree);
        let cert_u = UnitCertificate::new(chart_generators(&f), cofactors_u)
            .map_err(|_| CurveError::Singular(ChartTag::U))?;
        let cert_v = UnitCertificate::new(chart_generators(&f_tilde), cofactors_v)
            .map_err(|_| CurveError::Singular(ChartTag::V))?;
        Ok(PlaneCurve {
            field,
            f,
            f_tilde,
            degree,
            cert_u,
            cert_v,
            monic,
        })
    }

    pub fn field(&self) -> &ParamField {
        &self.field
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn genus(&self) -> i32 {
        (self.degree - 1) * (self.degree - 2) / 2
    }

    pub fn f(&self) -> &MultiPoly {
        &self.f
    }

    pub fn f_tilde(&self) -> &MultiPoly {
        &self.f_tilde
    }

    pub(crate) fn monic(&self) -> &MultiPoly {
        &self.monic
    }

    /// The chart equation: `F` on `U`, `F̃` on `V`.
    pub fn equation(&self, chart: ChartTag) -> &MultiPoly {
        match chart {
            ChartTag::U => &self.f,
            ChartTag::V => &self.f_tilde,
        }
    }

    pub fn certificate(&self, chart: ChartTag) -> &UnitCertificate {
        match chart {
            ChartTag::U => &self.cert_u,
            ChartTag::V => &self.cert_v,
        }
    }

    /// Partial derivative of the chart equation in coordinate `var`.
    pub fn derivative(&self, chart: ChartTag, var: usize) -> MultiPoly {
        self.equation(chart).partial(var)
    }

    /// `F^δ` (resp. `F̃^δ`).
    pub fn equation_delta(&self, chart: ChartTag) -> Result<MultiPoly, CurveError> {
        Ok(self.field.delta_poly(self.equation(chart))?)
    }

    /// Remainder of a polynomial on the chart after division by the chart
    /// equation; zero exactly when the polynomial vanishes on the curve.
    pub fn remainder(&self, chart: ChartTag, p: &MultiPoly) -> MultiPoly {
        remainder(p, self.equation(chart))
    }

    /// Whether a rational function vanishes in `K(C)`.
    pub fn is_zero_fn(&self, chart: ChartTag, f: &RatFn) -> bool {
        self.remainder(chart, f.numerator()).is_zero()
    }

    pub fn equal_fn(&self, chart: ChartTag, a: &RatFn, b: &RatFn) -> bool {
        self.is_zero_fn(chart, &a.sub(b))
    }

    /// True when every coefficient of `F` is killed by δ.
    pub fn has_constant_coefficients(&self) -> Result<bool, CurveError> {
        Ok(self.equation_delta(ChartTag::U)?.is_zero())
    }
}

fn chart_generators(f: &MultiPoly) -> Vec<MultiPoly> {
    vec![f.partial(X), f.partial(Y), f.clone()]
}

fn smoothness(f: &MultiPoly, chart: ChartTag, config: &GroebnerConfig) -> Result<UnitCertificate, CurveError> {
    match unit_certificate_with(&chart_generators(f), config) {
        Ok(c) => Ok(c),
        Err(CertificateError::NotUnitIdeal) => Err(CurveError::Singular(chart)),
        Err(e) => Err(e.into()),
    }
}

/// `F̃(s, t) = F(s/t, 1/t)·t^d`.
fn tilde(f: &MultiPoly, d: i32) -> MultiPoly {
    swap_chart(f).mul_term(&Monomial::var(Y, d), &FieldElem::one())
}

/// Checks `deg_x F = deg F = d` with constant `x^d` coefficient; returns
/// `d` and the monic rescaling.
fn check_shape(f: &MultiPoly) -> Result<(i32, MultiPoly), CurveError> {
    if f.is_zero() || !f.is_nonnegative() || f.num_vars() > 2 {
        return Err(CurveError::NotMonicInX);
    }
    let d = f.total_degree();
    if d < 1 || f.degree_in(X) != Some(d) {
        return Err(CurveError::NotMonicInX);
    }
    let lc = f.coeff(&Monomial::var(X, d));
    if lc.is_zero() {
        return Err(CurveError::NotMonicInX);
    }
    let monic = f.scale(&lc.inv()?);
    Ok((d, monic))
}

/// Division remainder of `p` by the single polynomial `f` in graded-lex
/// order. Negative exponents in `p` are cleared by a monomial factor first,
/// which is harmless as long as no coordinate divides `f`.
pub(crate) fn remainder(p: &MultiPoly, f: &MultiPoly) -> MultiPoly {
    let shift = Monomial::new((0..p.num_vars()).map(|v| -p.min_degree_in(v).unwrap_or(0).min(0)));
    let mut p = if shift.is_one() {
        p.clone()
    } else {
        p.mul_term(&shift, &FieldElem::one())
    };
    let (lm, lc) = f.leading().expect("nonzero divisor").clone();
    let inv = lc.inv().expect("nonzero");
    let mut rem = Vec::new();
    while let Some((m, c)) = p.leading().cloned() {
        if lm.divides(&m) {
            p = p.sub(&f.mul_term(&m.div(&lm), &c.mul(&inv)));
        } else {
            p = p.sub(&MultiPoly::term(m.clone(), c.clone()));
            rem.push((m, c));
        }
    }
    MultiPoly::from_terms(rem)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_poly;

    fn curve(src: &str) -> Result<PlaneCurve, CurveError> {
        let k = ParamField::rationals();
        PlaneCurve::new(k.clone(), parse_poly(src, &k, &["x", "y"]).unwrap())
    }

    #[test]
    fn node_is_singular() {
        assert!(matches!(curve("y^2 - x^2"), Err(CurveError::Singular(ChartTag::U))));
    }

    #[test]
    fn conic_has_genus_zero() {
        let c = curve("y - x^2").unwrap();
        assert_eq!(c.degree(), 2);
        assert_eq!(c.genus(), 0);
    }

    #[test]
    fn not_monic_rejected() {
        assert!(matches!(curve("x*y^3 + x + 1"), Err(CurveError::NotMonicInX)));
        assert!(matches!(curve("y^3 + x + 1"), Err(CurveError::NotMonicInX)));
    }

    #[test]
    fn fermat_cubic() {
        let c = curve("x^3 + y^3 + 1").unwrap();
        assert_eq!(c.genus(), 1);
        let k = ParamField::rationals();
        assert_eq!(
            c.f_tilde(),
            &parse_poly("s^3 + 1 + t^3", &k, &["s", "t"]).unwrap()
        );
        assert!(c.certificate(ChartTag::V).verify());
    }
}
