use crate::algebra::multipoly::div_rem_univariate;
use crate::algebra::MultiPoly;

use super::CertificateError;

/// `u·a + v·b = g` with `g` the monic gcd.
#[derive(Debug, Clone, PartialEq)]
pub struct Bezout {
    pub u: MultiPoly,
    pub v: MultiPoly,
    pub g: MultiPoly,
}

impl Bezout {
    pub fn is_coprime(&self) -> bool {
        self.g.is_one()
    }

    /// The pair `(u, v)` when the gcd is 1.
    pub fn require_coprime(self) -> Result<(MultiPoly, MultiPoly), CertificateError> {
        if self.g.is_one() {
            Ok((self.u, self.v))
        } else {
            Err(CertificateError::NotCoprime {
                degree: self.g.total_degree(),
            })
        }
    }
}

fn univariate_in(p: &MultiPoly, var: usize) -> bool {
    p.terms()
        .iter()
        .all(|(m, _)| m.is_nonnegative() && m.exp(var) == m.degree())
}

/// Extended Euclidean algorithm in `K[var]`.
pub fn extended_euclid(a: &MultiPoly, b: &MultiPoly, var: usize) -> Result<Bezout, CertificateError> {
    if a.is_zero() && b.is_zero() {
        return Err(CertificateError::BothZero);
    }
    if !univariate_in(a, var) || !univariate_in(b, var) {
        return Err(CertificateError::NotUnivariate(var));
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (MultiPoly::one(), MultiPoly::zero());
    let (mut t0, mut t1) = (MultiPoly::zero(), MultiPoly::one());
    while !r1.is_zero() {
        let (q, r) = div_rem_univariate(&r0, &r1, var)?;
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    let inv = r0.leading_coeff().expect("nonzero gcd").inv()?;
    Ok(Bezout {
        u: s0.scale(&inv),
        v: t0.scale(&inv),
        g: r0.scale(&inv),
    })
}
