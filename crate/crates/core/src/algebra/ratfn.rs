//! Rational functions in the curve variables over `K`.

use num_bigint::BigInt;
use num_traits::One;

use super::field_elem::FieldElem;
use super::intpoly::{self, IntPoly};
use super::monomial::Monomial;
use super::multipoly::{self, MultiPoly};
use super::param_field::ParamField;
use super::poly::{Poly, Ring};
use super::AlgebraError;

/// Number of curve-variable slots reserved when lifting to integer
/// polynomials for gcd computations.
const CURVE_SLOTS: usize = 2;

/// `num / den` with both parts free of negative exponents. A constant
/// denominator is always 1; otherwise all coefficients are polynomials in the
/// parameters with no common factor, and `den` has a positive leading sign.
///
/// Values are not automatically reduced to lowest terms; [`RatFn::simplify`]
/// does that on request. Equality of rational functions is therefore
/// [`RatFn::equals`], not `==`.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFn {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFn {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        Self::normalize(p, MultiPoly::one())
    }

    pub fn constant(c: FieldElem) -> Self {
        RatFn {
            num: MultiPoly::constant(c),
            den: MultiPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(MultiPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }

    pub fn var(i: usize) -> Self {
        Self::from_poly(MultiPoly::var(i))
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `Some(p)` when the denominator is 1.
    pub fn as_poly(&self) -> Option<&MultiPoly> {
        self.den.is_one().then_some(&self.num)
    }

    fn normalize(num: MultiPoly, den: MultiPoly) -> Self {
        if num.is_zero() {
            return RatFn {
                num,
                den: MultiPoly::one(),
            };
        }
        // Clear negative exponents and cancel common monomial content.
        let n = num.num_vars().max(den.num_vars());
        let shift = Monomial::new((0..n).map(|v| {
            let a = num.min_degree_in(v).unwrap_or(0);
            let b = den.min_degree_in(v).unwrap_or(0);
            -a.min(b)
        }));
        let (num, den) = if shift.is_one() {
            (num, den)
        } else {
            (
                num.mul_term(&shift, &FieldElem::one()),
                den.mul_term(&shift, &FieldElem::one()),
            )
        };
        if let Some(c) = den.as_constant() {
            let num = if c.is_one() {
                num
            } else {
                num.scale(&c.inv().expect("nonzero denominator"))
            };
            return RatFn {
                num,
                den: MultiPoly::one(),
            };
        }
        let coeffs = || num.terms().iter().chain(den.terms()).map(|(_, c)| c);
        let l = coeffs().fold(IntPoly::one(), |l, c| intpoly::lcm(&l, c.denominator()));
        let mut g = IntPoly::zero();
        for c in coeffs() {
            let n = if c.denominator() == &l {
                c.numerator().clone()
            } else {
                c.numerator()
                    .mul(&intpoly::div_exact(&l, c.denominator()).expect("lcm"))
            };
            g = intpoly::gcd(&g, &n);
            if g.is_one() {
                break;
            }
        }
        let mut factor = FieldElem::from_poly(l).div(&FieldElem::from_poly(g)).expect("nonzero content");
        let lc = den.leading_coeff().expect("nonzero").mul(&factor);
        if lc.is_negative_leading() {
            factor = factor.neg();
        }
        if factor.is_one() {
            return RatFn { num, den };
        }
        RatFn {
            num: num.scale(&factor),
            den: den.scale(&factor),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::normalize(self.num.add(&other.num), self.den.clone());
        }
        Self::normalize(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::normalize(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> Self {
        Self::normalize(self.num.mul(p), self.den.clone())
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        RatFn {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self, AlgebraError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<Self, AlgebraError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let n = e.unsigned_abs();
        Ok(Self::normalize(base.num.pow(n), base.den.pow(n)))
    }

    /// Exact equality as rational functions (no curve relation).
    pub fn equals(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    pub fn partial(&self, var: usize) -> Self {
        let n = self
            .num
            .partial(var)
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.partial(var)));
        Self::normalize(n, self.den.mul(&self.den))
    }

    /// Coefficient-wise derivative `f^δ`.
    pub fn delta(&self, field: &ParamField) -> Result<Self, AlgebraError> {
        let dn = field.delta_poly(&self.num)?;
        if self.den.is_one() {
            return Ok(Self::from_poly(dn));
        }
        let dd = field.delta_poly(&self.den)?;
        let n = dn.mul(&self.den).sub(&self.num.mul(&dd));
        Ok(Self::normalize(n, self.den.mul(&self.den)))
    }

    /// Substitute `values[i]` for variable `i`.
    pub fn compose(&self, values: &[RatFn]) -> Result<Self, AlgebraError> {
        let n = self.num.num_vars().max(self.den.num_vars());
        if values.len() < n {
            return Err(AlgebraError::UnknownVariable(format!("#{}", values.len())));
        }
        // Common denominator per variable: p(n/d) = P / prod d_i^deg_i(p).
        let (pn, en) = eval_poly(&self.num, values);
        let (pd, ed) = eval_poly(&self.den, values);
        if pd.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        let mut num = pn;
        let mut den = pd;
        for (i, v) in values.iter().enumerate() {
            let k = ed.get(i).copied().unwrap_or(0) - en.get(i).copied().unwrap_or(0);
            if k > 0 {
                num = num.mul(&v.den.pow(k as u32));
            } else if k < 0 {
                den = den.mul(&v.den.pow((-k) as u32));
            }
        }
        Ok(Self::normalize(num, den).simplify())
    }

    /// Reduce to lowest terms.
    pub fn simplify(&self) -> Self {
        if self.num.is_zero() || self.den.is_one() {
            return self.clone();
        }
        let (ni, nk) = lift(&self.num);
        let (di, dk) = lift(&self.den);
        let g = intpoly::gcd(&ni, &di);
        let (ni, di) = if g.is_one() {
            (ni, di)
        } else {
            (
                intpoly::div_exact(&ni, &g).expect("gcd divides"),
                intpoly::div_exact(&di, &g).expect("gcd divides"),
            )
        };
        let scale = dk.div(&nk).expect("nonzero");
        Self::normalize(lower(&ni).scale(&scale), lower(&di))
    }
}

/// Evaluate `p` at rational values; returns the numerator and the power of
/// each value's denominator that was multiplied through.
fn eval_poly(p: &MultiPoly, values: &[RatFn]) -> (MultiPoly, Vec<i32>) {
    let degs: Vec<i32> = (0..values.len())
        .map(|i| p.degree_in(i).unwrap_or(0).max(0))
        .collect();
    let mut acc = MultiPoly::zero();
    for (m, c) in p.terms() {
        let mut t = MultiPoly::constant(c.clone());
        for (i, v) in values.iter().enumerate() {
            let e = m.exp(i);
            if e > 0 {
                t = t.mul(&v.num.pow(e as u32));
            }
            if degs[i] > e {
                t = t.mul(&v.den.pow((degs[i] - e) as u32));
            }
        }
        acc = acc.add(&t);
    }
    (acc, degs)
}

/// Clear coefficient denominators: returns an integer polynomial in
/// `(x, y, params...)` and the factor `k` with `p = lifted / k`.
fn lift(p: &MultiPoly) -> (IntPoly, FieldElem) {
    let mut l = IntPoly::one();
    for (_, c) in p.terms() {
        let d = c.denominator();
        if !d.is_one() {
            let g = intpoly::gcd(&l, d);
            l = l.mul(&intpoly::div_exact(d, &g).expect("gcd divides"));
        }
    }
    let lf = FieldElem::from_poly(l);
    let mut terms: Vec<(Monomial, BigInt)> = Vec::new();
    for (m, c) in p.terms() {
        let scaled = c.mul(&lf);
        debug_assert!(scaled.denominator().is_one());
        for (pm, k) in scaled.numerator().terms() {
            let mut e = vec![m.exp(0), m.exp(1)];
            e.extend_from_slice(pm.exps());
            terms.push((Monomial::new(e), k.clone()));
        }
    }
    let mut ip = Poly::from_terms(terms);
    let cont = intpoly::content(&ip);
    if !One::is_one(&cont) {
        ip = intpoly::div_integer(&ip, &cont);
    }
    let k = lf
        .div(&FieldElem::from_int(cont))
        .expect("nonzero content");
    (ip, k)
}

fn lower(p: &IntPoly) -> MultiPoly {
    let mut groups: std::collections::BTreeMap<(i32, i32), Vec<(Monomial, BigInt)>> =
        Default::default();
    for (m, c) in p.terms() {
        let rest = Monomial::new(m.exps().iter().skip(CURVE_SLOTS).copied());
        groups
            .entry((m.exp(0), m.exp(1)))
            .or_default()
            .push((rest, c.clone()));
    }
    MultiPoly::from_terms(groups.into_iter().map(|((a, b), ts)| {
        (
            Monomial::new([a, b]),
            FieldElem::from_poly(Poly::from_terms(ts)),
        )
    }))
}

impl From<MultiPoly> for RatFn {
    fn from(p: MultiPoly) -> Self {
        RatFn::from_poly(p)
    }
}

pub fn format_ratfn(f: &RatFn, vars: &[&str], params: &[String]) -> String {
    let n = multipoly::format_poly(&f.num, vars, params);
    if f.den.is_one() {
        return n;
    }
    let d = multipoly::format_poly(&f.den, vars, params);
    format!("({n})/({d})")
}
