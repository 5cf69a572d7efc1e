//! Sparse multivariate (Laurent) polynomials over an exact coefficient ring.
//!
//! Terms are kept sorted by strictly decreasing monomial in graded-lex order
//! and zero coefficients are never stored, so structural equality is equality
//! of polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::monomial::Monomial;

/// Exact commutative coefficient ring.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_i64(v: i64) -> Self;

    /// `Σ a_i·b_i`; rings with expensive normalization override this to
    /// normalize once.
    fn dot(pairs: &[(&Self, &Self)]) -> Self {
        pairs.iter().fold(Self::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    terms: Vec<(Monomial, C)>,
}

impl<C: Ring> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Ring> Poly<C> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn var(var: usize) -> Self {
        Self::term(Monomial::var(var, 1), C::one())
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut v: Vec<(Monomial, C)> = terms.into_iter().collect();
        v.sort_by(|a, b| b.0.cmp(&a.0));
        Poly { terms: combine_sorted(v) }
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, C)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// The constant coefficient if the polynomial is constant.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => Some(C::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, C)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms
            .binary_search_by(|t| m.cmp(&t.0))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| C::zero())
    }

    pub fn total_degree(&self) -> i32 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }

    /// Largest exponent of `var`; `None` for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> Option<i32> {
        self.terms.iter().map(|t| t.0.exp(var)).max()
    }

    pub fn min_degree_in(&self, var: usize) -> Option<i32> {
        self.terms.iter().map(|t| t.0.exp(var)).min()
    }

    /// Highest index of a variable with a nonzero exponent, plus one.
    pub fn num_vars(&self) -> usize {
        self.terms.iter().map(|t| t.0.len()).max().unwrap_or(0)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.iter().any(|t| t.0.exp(var) != 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_nonnegative())
    }

    pub fn neg(&self) -> Self {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { b[j].1.neg() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate {
                        a[i].1.sub(&b[j].1)
                    } else {
                        a[i].1.add(&b[j].1)
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { t.1.neg() } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Poly { terms: out }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .filter_map(|(m, a)| {
                    let p = a.mul(c);
                    (!p.is_zero()).then(|| (m.clone(), p))
                })
                .collect(),
        }
    }

    /// Multiply by `c * m`; monomial multiplication preserves the order.
    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .filter_map(|(n, a)| {
                    let p = a.mul(c);
                    (!p.is_zero()).then(|| (n.mul(m), p))
                })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                prods.push((m.mul(n), a, b));
            }
        }
        prods.sort_by(|a, b| b.0.cmp(&a.0));
        let mut terms = Vec::new();
        for run in prods.chunk_by(|a, b| a.0 == b.0) {
            let pairs: Vec<(&C, &C)> = run.iter().map(|(_, a, b)| (*a, *b)).collect();
            let c = C::dot(&pairs);
            if !c.is_zero() {
                terms.push((run[0].0.clone(), c));
            }
        }
        Poly { terms }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly {
            terms: self
                .terms
                .iter()
                .filter_map(|(m, c)| {
                    let d = f(c);
                    (!d.is_zero()).then(|| (m.clone(), d))
                })
                .collect(),
        }
    }

    /// Apply a monomial map. The map need not preserve the order, so terms
    /// are re-sorted.
    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// Formal partial derivative with respect to `var`.
    pub fn partial(&self, var: usize) -> Self {
        Self::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let e = m.exp(var);
            (e != 0).then(|| (m.with_exp(var, e - 1), c.mul(&C::from_i64(e as i64))))
        }))
    }

    /// Split into coefficients of powers of `var` (which is set to zero in
    /// the returned coefficient polynomials), keyed by exponent.
    pub fn coefficients_in(&self, var: usize) -> std::collections::BTreeMap<i32, Poly<C>> {
        let mut out: std::collections::BTreeMap<i32, Vec<(Monomial, C)>> = Default::default();
        for (m, c) in &self.terms {
            out.entry(m.exp(var))
                .or_default()
                .push((m.with_exp(var, 0), c.clone()));
        }
        out.into_iter()
            .map(|(e, ts)| (e, Poly::from_terms(ts)))
            .collect()
    }

    /// Keep only the terms satisfying `pred`.
    pub fn filter(&self, pred: impl Fn(&Monomial) -> bool) -> Self {
        Poly {
            terms: self.terms.iter().filter(|t| pred(&t.0)).cloned().collect(),
        }
    }

    /// Substitute polynomial values for the variables; `values[i]` replaces
    /// variable `i`. Only non-negative exponents are supported.
    pub fn substitute(&self, values: &[Poly<C>]) -> Self {
        let mut acc = Self::zero();
        for (m, c) in &self.terms {
            let mut t = Self::constant(c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                assert!(e >= 0, "substitute requires non-negative exponents");
                if e > 0 {
                    t = t.mul(&values[i].pow(e as u32));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }
}

fn combine_sorted<C: Ring>(v: Vec<(Monomial, C)>) -> Vec<(Monomial, C)> {
    let mut out: Vec<(Monomial, C)> = Vec::with_capacity(v.len());
    for (m, c) in v {
        match out.last_mut() {
            Some(last) if last.0 == m => {
                last.1 = last.1.add(&c);
            }
            _ => out.push((m, c)),
        }
    }
    out.retain(|t| !t.1.is_zero());
    out
}

impl<C: fmt::Debug> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.terms.iter().map(|(m, c)| (c, m)))
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Poly<BigInt>;

    fn x() -> P {
        P::var(0)
    }
    fn y() -> P {
        P::var(1)
    }
    fn k(v: i64) -> P {
        P::constant(BigInt::from(v))
    }

    #[test]
    fn arithmetic_is_canonical() {
        let a = x().add(&y());
        let b = x().sub(&y());
        let p = a.mul(&b);
        let q = x().mul(&x()).sub(&y().mul(&y()));
        assert_eq!(p, q);
        assert!(p.sub(&q).is_zero());
        assert_eq!(a.pow(3).total_degree(), 3);
        assert_eq!(a.pow(2).len(), 3);
    }

    #[test]
    fn partial_and_substitute() {
        // x^3*y + 2x
        let p = x().pow(3).mul(&y()).add(&x().scale(&BigInt::from(2)));
        let px = p.partial(0);
        assert_eq!(px, x().pow(2).mul(&y()).scale(&BigInt::from(3)).add(&k(2)));
        let v = p.substitute(&[k(2), k(5)]);
        assert_eq!(v, k(44));
    }

    #[test]
    fn coefficient_split() {
        let p = x().pow(2).mul(&y()).add(&y()).add(&x());
        let cs = p.coefficients_in(0);
        assert_eq!(cs[&2], y());
        assert_eq!(cs[&1], k(1));
        assert_eq!(cs[&0], y());
    }
}
