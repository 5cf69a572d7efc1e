//! Polynomials in curve variables over `K`.
//!
//! Variables are positional: index 0 is `x` (or `s`), index 1 is `y` (or
//! `t`). Names are supplied only for parsing and display.

use super::field_elem::{format_monomial, FieldElem};
use super::monomial::Monomial;
use super::poly::{Poly, Ring};
use super::AlgebraError;

pub type MultiPoly = Poly<FieldElem>;

pub const X: usize = 0;
pub const Y: usize = 1;

/// Canonical form of every coefficient; idempotent.
pub fn canonicalize(p: &MultiPoly) -> MultiPoly {
    MultiPoly::from_terms(p.terms().iter().map(|(m, c)| (m.clone(), c.canonicalize())))
}

/// `∂p/∂v` for a named curve variable.
pub fn partial_derivative(p: &MultiPoly, vars: &[&str], v: &str) -> Result<MultiPoly, AlgebraError> {
    let i = vars
        .iter()
        .position(|n| *n == v)
        .ok_or_else(|| AlgebraError::UnknownVariable(v.to_string()))?;
    Ok(p.partial(i))
}

pub fn constant(c: FieldElem) -> MultiPoly {
    MultiPoly::constant(c)
}

pub fn int(v: i64) -> MultiPoly {
    MultiPoly::constant(FieldElem::from_int(v))
}

/// `c · x^a · y^b`.
pub fn monomial(a: i32, b: i32, c: FieldElem) -> MultiPoly {
    MultiPoly::term(Monomial::new([a, b]), c)
}

pub fn scale(p: &MultiPoly, c: &FieldElem) -> MultiPoly {
    p.scale(c)
}

/// Divide every coefficient by the leading one.
pub fn make_monic(p: &MultiPoly) -> Result<MultiPoly, AlgebraError> {
    let lc = p.leading_coeff().ok_or(AlgebraError::ZeroDenominator)?;
    let inv = lc.inv()?;
    Ok(p.scale(&inv))
}

/// Degree in `var` of a univariate polynomial, `None` for zero.
fn udeg(p: &MultiPoly, var: usize) -> Option<i32> {
    p.degree_in(var)
}

/// Euclidean division of polynomials in the single variable `var`.
pub fn div_rem_univariate(
    a: &MultiPoly,
    b: &MultiPoly,
    var: usize,
) -> Result<(MultiPoly, MultiPoly), AlgebraError> {
    let db = udeg(b, var).ok_or(AlgebraError::ZeroDenominator)?;
    let lb_inv = b.leading_coeff().expect("nonzero").inv()?;
    let mut q = MultiPoly::zero();
    let mut r = a.clone();
    while let Some(dr) = udeg(&r, var) {
        if dr < db {
            break;
        }
        let c = r.leading_coeff().expect("nonzero").mul(&lb_inv);
        let m = Monomial::var(var, dr - db);
        q = q.add(&MultiPoly::term(m.clone(), c.clone()));
        r = r.sub(&b.mul_term(&m, &c));
    }
    Ok((q, r))
}

/// Coefficient of `var^e`, as a polynomial in the remaining variables.
pub fn coeff_in(p: &MultiPoly, var: usize, e: i32) -> MultiPoly {
    p.coefficients_in(var).remove(&e).unwrap_or_default()
}

/// Renders `p` with the given variable and parameter names, highest term
/// first, e.g. `y^3 - x^4 - c*x - 1`.
pub fn format_poly(p: &MultiPoly, vars: &[&str], params: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
    let mut out = String::new();
    for (i, (m, c)) in p.terms().iter().enumerate() {
        let mono = format_monomial(m, &vars);
        let (neg, body) = format_coeff(c, params);
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        match (mono.is_empty(), body.as_str()) {
            (true, _) => out.push_str(&body),
            (false, "1") => out.push_str(&mono),
            (false, _) => {
                out.push_str(&body);
                out.push('*');
                out.push_str(&mono);
            }
        }
    }
    out
}

/// Sign and absolute rendering of a coefficient, parenthesized when it is
/// not a single product.
fn format_coeff(c: &FieldElem, params: &[String]) -> (bool, String) {
    let single = c.numerator().len() == 1;
    if single && c.is_negative_leading() {
        (true, c.neg().to_string_with(params))
    } else if single {
        (false, c.to_string_with(params))
    } else {
        (false, format!("({})", c.to_string_with(params)))
    }
}
