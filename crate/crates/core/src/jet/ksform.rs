use crate::algebra::multipoly::{X, Y};
use crate::algebra::{MultiPoly, ParamField, RatFn};
use crate::curve::{swap_chart, ChartTag, PlaneCurve};

use super::JetError;

/// `F^δ + F_x·ẋ + F_y·ẏ`, the first prolongation of a polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct JetPolynomial {
    pub constant: MultiPoly,
    pub partials: Vec<MultiPoly>,
}

impl JetPolynomial {
    /// Substitute values for the dotted variables.
    pub fn eval(&self, dots: &[RatFn]) -> RatFn {
        self.partials
            .iter()
            .zip(dots)
            .fold(RatFn::from_poly(self.constant.clone()), |acc, (p, v)| {
                acc.add(&v.mul_poly(p))
            })
    }

    pub fn to_ksform(&self, chart: ChartTag) -> KSForm {
        KSForm::new(
            chart,
            self.partials.iter().cloned().map(RatFn::from_poly).collect(),
            RatFn::from_poly(self.constant.clone()),
        )
    }
}

/// `d^τF` for a polynomial in the two chart coordinates.
pub fn prolong_poly(f: &MultiPoly, field: &ParamField) -> Result<JetPolynomial, JetError> {
    Ok(JetPolynomial {
        constant: field.delta_poly(f)?,
        partials: vec![f.partial(X), f.partial(Y)],
    })
}

/// `d^τf` for a rational function in `n` coordinates.
pub fn d_tau(f: &RatFn, field: &ParamField, chart: ChartTag, n: usize) -> Result<KSForm, JetError> {
    Ok(KSForm::new(
        chart,
        (0..n).map(|i| f.partial(i)).collect(),
        f.delta(field)?,
    ))
}

/// `Σ coeffs[i]·d^τx_i + ι(function)` on a chart.
#[derive(Debug, Clone, PartialEq)]
pub struct KSForm {
    chart: ChartTag,
    coeffs: Vec<RatFn>,
    function: RatFn,
}

impl KSForm {
    pub fn new(chart: ChartTag, coeffs: Vec<RatFn>, function: RatFn) -> Self {
        KSForm {
            chart,
            coeffs,
            function,
        }
    }

    pub fn zero(chart: ChartTag, n: usize) -> Self {
        Self::new(chart, vec![RatFn::zero(); n], RatFn::zero())
    }

    /// `d^τx_i`.
    pub fn coordinate(chart: ChartTag, i: usize, n: usize) -> Self {
        let mut f = Self::zero(chart, n);
        f.coeffs[i] = RatFn::one();
        f
    }

    /// `ι(f)`.
    pub fn iota(chart: ChartTag, f: RatFn, n: usize) -> Self {
        Self::new(chart, vec![RatFn::zero(); n], f)
    }

    pub fn chart(&self) -> ChartTag {
        self.chart
    }

    pub fn coeffs(&self) -> &[RatFn] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &RatFn {
        &self.coeffs[i]
    }

    pub fn function(&self) -> &RatFn {
        &self.function
    }

    pub fn is_zero(&self) -> bool {
        self.function.is_zero() && self.coeffs.iter().all(RatFn::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[RatFn], i: usize| v.get(i).cloned().unwrap_or_else(RatFn::zero);
        Self::new(
            self.chart,
            (0..n)
                .map(|i| get(&self.coeffs, i).add(&get(&other.coeffs, i)))
                .collect(),
            self.function.add(&other.function),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(
            self.chart,
            self.coeffs.iter().map(RatFn::neg).collect(),
            self.function.neg(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, f: &RatFn) -> Self {
        Self::new(
            self.chart,
            self.coeffs.iter().map(|a| a.mul(f)).collect(),
            self.function.mul(f),
        )
    }

    /// The value on a jet with `ẋ_i = dots[i]`.
    pub fn eval(&self, dots: &[RatFn]) -> RatFn {
        self.coeffs
            .iter()
            .zip(dots)
            .fold(self.function.clone(), |acc, (a, v)| acc.add(&a.mul(v)))
    }

    /// Simplify every component.
    pub fn simplify(&self) -> Self {
        Self::new(
            self.chart,
            self.coeffs.iter().map(RatFn::simplify).collect(),
            self.function.simplify(),
        )
    }

    /// Rewrite on the other chart. With `s = x/y`, `t = 1/y`:
    /// `d^τs = d^τx/y − x·d^τy/y²` and `d^τt = −d^τy/y²`; the inverse has
    /// the same shape with the roles exchanged.
    pub fn to_chart(&self, target: ChartTag) -> Self {
        if target == self.chart {
            return self.clone();
        }
        assert_eq!(self.coeffs.len(), 2, "chart change needs two coordinates");
        let sw = |f: &RatFn| {
            RatFn::new(swap_chart(f.numerator()), swap_chart(f.denominator()))
                .expect("nonzero denominator")
        };
        let a = sw(&self.coeffs[0]);
        let b = sw(&self.coeffs[1]);
        let x = RatFn::var(X);
        let y_inv = RatFn::var(Y).inv().expect("nonzero");
        let y_inv2 = y_inv.mul(&y_inv);
        let ax = a.mul(&y_inv);
        let ay = a.mul(&x).mul(&y_inv2).add(&b.mul(&y_inv2)).neg();
        Self::new(target, vec![ax, ay], sw(&self.function))
    }
}

/// Eliminate `d^τy` using `d^τF = 0`:
/// `d^τy = −(F^δ + F_x·d^τx)/F_y`.
pub fn ksform_reduce(eta: &KSForm, curve: &PlaneCurve) -> Result<KSForm, JetError> {
    let chart = eta.chart();
    if eta.coeffs.len() < 2 || eta.coeffs[1].is_zero() {
        return Ok(eta.clone());
    }
    let fy = RatFn::from_poly(curve.derivative(chart, Y));
    if curve.is_zero_fn(chart, &fy) {
        return Err(JetError::NonInvertibleFy);
    }
    let fx = RatFn::from_poly(curve.derivative(chart, X));
    let fd = RatFn::from_poly(curve.equation_delta(chart)?);
    let b_over = eta.coeffs[1].div(&fy)?;
    let a = eta.coeffs[0].sub(&b_over.mul(&fx));
    let c = eta.function.sub(&b_over.mul(&fd));
    Ok(KSForm::new(chart, vec![a, RatFn::zero()], c))
}

/// `Some(f)` with `η₂ = f·η₁` in `K(C)`, or `None` if no such `f` exists.
pub fn rational_equivalence(
    eta1: &KSForm,
    eta2: &KSForm,
    curve: &PlaneCurve,
) -> Result<Option<RatFn>, JetError> {
    let chart = eta1.chart();
    let e1 = ksform_reduce(eta1, curve)?;
    let e2 = ksform_reduce(&eta2.to_chart(chart), curve)?;
    let (u1, w1) = (e1.coeff(0), e1.function());
    let (u2, w2) = (e2.coeff(0), e2.function());
    let zero = |f: &RatFn| curve.is_zero_fn(chart, f);
    if zero(u1) && zero(w1) {
        return Err(JetError::ZeroForm);
    }
    let f = if zero(u1) {
        if !zero(u2) {
            return Ok(None);
        }
        w2.div(w1)?
    } else {
        u2.div(u1)?
    };
    let ok = zero(&u2.sub(&f.mul(u1))) && zero(&w2.sub(&f.mul(w1)));
    Ok(ok.then(|| f.simplify()))
}
