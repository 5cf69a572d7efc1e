//! Elements of the coefficient field `K = Q(params)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::intpoly::{self, IntPoly};
use super::monomial::Monomial;
use super::poly::{Poly, Ring};
use super::AlgebraError;

/// A reduced fraction of integer polynomials in the parameter symbols.
///
/// Normal form: the denominator is nonzero with positive leading
/// coefficient, numerator and denominator are coprime as polynomials and
/// their integer contents are jointly reduced. Zero is `0/1`. Equality is
/// structural equality of the normal form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElem {
    num: IntPoly,
    den: IntPoly,
}

impl FieldElem {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        FieldElem {
            num: IntPoly::constant(v.into()),
            den: IntPoly::one(),
        }
    }

    pub fn from_ratio(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        Self::new(IntPoly::constant(n.into()), IntPoly::constant(d.into()))
            .expect("nonzero denominator")
    }

    pub fn from_poly(p: IntPoly) -> Self {
        FieldElem {
            num: p,
            den: IntPoly::one(),
        }
    }

    /// The parameter with index `i`.
    pub fn param(i: usize) -> Self {
        Self::from_poly(IntPoly::var(i))
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    /// Re-establishes the normal form; idempotent on normalized values.
    pub fn canonicalize(&self) -> Self {
        Self::reduce(self.num.clone(), self.den.clone())
    }

    fn reduce(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() || num.is_constant() {
            (num, den)
        } else {
            let g = intpoly::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    intpoly::div_exact(&num, &g).expect("gcd divides"),
                    intpoly::div_exact(&den, &g).expect("gcd divides"),
                )
            }
        };
        Self::fix_content(num, den)
    }

    /// Joint integer content and sign; assumes polynomial-coprime input.
    fn fix_content(num: IntPoly, den: IntPoly) -> Self {
        let k = intpoly::content(&num).gcd(&intpoly::content(&den));
        let k = if den.leading_coeff().is_some_and(|c| c.is_negative()) {
            -k
        } else {
            k
        };
        if One::is_one(&k) {
            FieldElem { num, den }
        } else {
            FieldElem {
                num: intpoly::div_integer(&num, &k),
                den: intpoly::div_integer(&den, &k),
            }
        }
    }

    pub fn is_integer_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    /// True if the value lies in Q.
    pub fn is_rational(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.num.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(Self::fix_content(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self, AlgebraError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<Self, AlgebraError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let n = e.unsigned_abs();
        Ok(FieldElem {
            num: base.num.pow(n),
            den: base.den.pow(n),
        })
    }

    /// True if the value does not involve parameter `i`.
    pub fn uses_param(&self, i: usize) -> bool {
        self.num.uses_var(i) || self.den.uses_var(i)
    }

    /// Whether the numerator's leading coefficient is negative.
    pub fn is_negative_leading(&self) -> bool {
        self.num.leading_coeff().is_some_and(|c| c.is_negative())
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.den.is_one() {
            return format_intpoly(&self.num, names);
        }
        let n = format_intpoly(&self.num, names);
        let d = format_intpoly(&self.den, names);
        let n = if self.num.len() > 1 { format!("({n})") } else { n };
        let d = if self.den.len() > 1 || !self.den.leading_monomial().unwrap().is_one() {
            format!("({d})")
        } else {
            d
        };
        format!("{n}/{d}")
    }
}

impl Ring for FieldElem {
    fn zero() -> Self {
        FieldElem {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    fn one() -> Self {
        FieldElem {
            num: IntPoly::one(),
            den: IntPoly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = self.num.add(&other.num);
            if self.den.is_one() {
                return FieldElem {
                    num,
                    den: IntPoly::one(),
                };
            }
            return Self::reduce(num, self.den.clone());
        }
        if self.den.is_constant() && other.den.is_constant() {
            let a = self.den.as_constant().unwrap();
            let b = other.den.as_constant().unwrap();
            let num = self
                .num
                .scale(&b)
                .add(&other.num.scale(&a));
            return Self::reduce(num, IntPoly::constant(a * b));
        }
        // Henrici: only the gcd of the denominators can cancel.
        let g = intpoly::gcd(&self.den, &other.den);
        let b1 = intpoly::div_exact(&self.den, &g).expect("gcd divides");
        let d1 = intpoly::div_exact(&other.den, &g).expect("gcd divides");
        let num = self.num.mul(&d1).add(&other.num.mul(&b1));
        if num.is_zero() {
            return Self::zero();
        }
        let den = b1.mul(&d1);
        if g.is_constant() {
            return Self::fix_content(num, den.mul(&g));
        }
        let h = intpoly::gcd(&num, &g);
        if h.is_one() {
            Self::fix_content(num, den.mul(&g))
        } else {
            let num = intpoly::div_exact(&num, &h).expect("gcd divides");
            let g = intpoly::div_exact(&g, &h).expect("gcd divides");
            Self::fix_content(num, den.mul(&g))
        }
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return FieldElem {
                num: self.num.mul(&other.num),
                den: IntPoly::one(),
            };
        }
        let g1 = cross_gcd(&self.num, &other.den);
        let g2 = cross_gcd(&other.num, &self.den);
        let a = intpoly::div_exact(&self.num, &g1).expect("gcd divides");
        let d = intpoly::div_exact(&other.den, &g1).expect("gcd divides");
        let c = intpoly::div_exact(&other.num, &g2).expect("gcd divides");
        let b = intpoly::div_exact(&self.den, &g2).expect("gcd divides");
        Self::fix_content(a.mul(&c), b.mul(&d))
    }

    fn neg(&self) -> Self {
        FieldElem {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn from_i64(v: i64) -> Self {
        Self::from_int(v)
    }

    /// Products are left unreduced and summed over the lcm of their
    /// denominators, so only one gcd is taken per result.
    fn dot(pairs: &[(&Self, &Self)]) -> Self {
        if let [(a, b)] = pairs {
            return a.mul(b);
        }
        let mut parts: Vec<(IntPoly, IntPoly)> = Vec::new();
        for (a, b) in pairs {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let den = if a.den.is_one() {
                b.den.clone()
            } else if b.den.is_one() {
                a.den.clone()
            } else {
                a.den.mul(&b.den)
            };
            let num = a.num.mul(&b.num);
            match parts.iter_mut().find(|(d, _)| *d == den) {
                Some((_, n)) => *n = n.add(&num),
                None => parts.push((den, num)),
            }
        }
        let l = parts.iter().fold(IntPoly::one(), |l, (d, _)| intpoly::lcm(&l, d));
        let num = parts.iter().fold(IntPoly::zero(), |acc, (d, n)| {
            if *d == l {
                acc.add(n)
            } else {
                acc.add(&n.mul(&intpoly::div_exact(&l, d).expect("lcm")))
            }
        });
        Self::reduce(num, l)
    }
}

fn cross_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if b.is_one() || a.is_one() {
        return IntPoly::one();
    }
    if a.is_constant() || b.is_constant() {
        return IntPoly::one();
    }
    intpoly::gcd(a, b)
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.num.num_vars().max(self.den.num_vars()))
            .map(|i| format!("p{i}"))
            .collect();
        write!(f, "{}", self.to_string_with(&names))
    }
}

/// Renders an integer polynomial in decreasing graded-lex order, e.g.
/// `27*c^4 - 256`.
pub fn format_intpoly(p: &IntPoly, names: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        let mono = format_monomial(m, names);
        if mono.is_empty() {
            out.push_str(&a.to_string());
        } else if One::is_one(&a) {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{a}*{mono}"));
        }
    }
    out
}

pub fn format_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        let name = names.get(i).map(String::as_str).unwrap_or("?");
        if e == 1 {
            parts.push(name.to_string());
        } else {
            parts.push(format!("{name}^{e}"));
        }
    }
    parts.join("*")
}

/// Convenience: a constant integer polynomial.
pub fn int_poly_constant(v: i64) -> IntPoly {
    Poly::constant(BigInt::from(v))
}
