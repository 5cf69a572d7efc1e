//! Integer-coefficient polynomials in the parameter symbols.
//!
//! These carry the numerators and denominators of [`FieldElem`]. The gcd is
//! computed recursively: monomial content is split off first, then the
//! polynomial is viewed as univariate in one variable over the integer
//! polynomials in the rest and reduced with a primitive pseudo-remainder
//! sequence.
//!
//! [`FieldElem`]: super::FieldElem

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::poly::Poly;

pub type IntPoly = Poly<BigInt>;

/// Gcd of the integer coefficients (non-negative).
pub fn content(p: &IntPoly) -> BigInt {
    let mut g = BigInt::zero();
    for (_, c) in p.terms() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Exponent-wise minimum over all terms.
fn monomial_content(p: &IntPoly) -> Monomial {
    let mut it = p.terms().iter();
    let Some(first) = it.next() else {
        return Monomial::one();
    };
    it.fold(first.0.clone(), |acc, t| acc.gcd(&t.0))
}

/// Sign making the leading coefficient positive.
pub fn normalize_sign(p: IntPoly) -> IntPoly {
    match p.leading_coeff() {
        Some(c) if c.is_negative() => p.neg(),
        _ => p,
    }
}

pub fn div_integer(p: &IntPoly, k: &BigInt) -> IntPoly {
    if k.is_one() {
        return p.clone();
    }
    Poly::from_terms(p.terms().iter().map(|(m, c)| (m.clone(), c / k)))
}

/// Exact quotient `a / b`, or `None` if `b` does not divide `a`.
pub fn div_exact(a: &IntPoly, b: &IntPoly) -> Option<IntPoly> {
    assert!(!b.is_zero(), "division by zero polynomial");
    if let Some(k) = b.as_constant() {
        if k.is_one() {
            return Some(a.clone());
        }
        return a
            .terms()
            .iter()
            .all(|(_, c)| c.is_multiple_of(&k))
            .then(|| div_integer(a, &k));
    }
    let (lm, lc) = b.leading().expect("nonzero");
    let mut rem = a.clone();
    let mut quot = Vec::new();
    while let Some((m, c)) = rem.leading() {
        if !lm.divides(m) {
            return None;
        }
        let (q, r) = c.div_rem(lc);
        if !r.is_zero() {
            return None;
        }
        let qm = m.div(lm);
        rem = rem.sub(&b.mul_term(&qm, &q));
        quot.push((qm, q));
    }
    Some(Poly::from_terms(quot))
}

/// Greatest common divisor with positive leading coefficient.
pub fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return normalize_sign(b.clone());
    }
    if b.is_zero() {
        return normalize_sign(a.clone());
    }
    if a == b {
        return normalize_sign(a.clone());
    }
    if a.is_constant() || b.is_constant() {
        return Poly::constant(content(a).gcd(&content(b)));
    }
    // Monomial content.
    let ma = monomial_content(a);
    let mb = monomial_content(b);
    let mg = ma.gcd(&mb);
    let a1 = shift(a, &ma);
    let b1 = shift(b, &mb);
    let g = gcd_nomonomial(&a1, &b1);
    normalize_sign(g.mul_term(&mg, &BigInt::one()))
}

pub fn lcm(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_one() {
        return b.clone();
    }
    if b.is_one() {
        return a.clone();
    }
    let g = gcd(a, b);
    div_exact(&a.mul(b), &g).expect("gcd divides")
}

fn shift(p: &IntPoly, m: &Monomial) -> IntPoly {
    if m.is_one() {
        return p.clone();
    }
    p.map_monomials(|n| n.div(m))
}

fn gcd_nomonomial(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_constant() || b.is_constant() {
        return Poly::constant(content(a).gcd(&content(b)));
    }
    if div_exact(a, b).is_some() {
        return normalize_sign(b.clone());
    }
    if div_exact(b, a).is_some() {
        return normalize_sign(a.clone());
    }
    let n = a.num_vars().max(b.num_vars());
    // A variable occurring in only one argument: the gcd divides the
    // content of that argument with respect to it.
    for v in 0..n {
        let ua = a.uses_var(v);
        let ub = b.uses_var(v);
        if ua && !ub {
            return gcd(&content_in(a, v), b);
        }
        if ub && !ua {
            return gcd(a, &content_in(b, v));
        }
    }
    // Main variable: the shared one with the smallest degree.
    let v = (0..n)
        .filter(|&v| a.uses_var(v))
        .min_by_key(|&v| a.degree_in(v).unwrap().max(b.degree_in(v).unwrap()))
        .expect("non-constant polynomial has a variable");
    let ua = to_univariate(a, v);
    let ub = to_univariate(b, v);
    let ca = univariate_content(&ua);
    let cb = univariate_content(&ub);
    let c = gcd(&ca, &cb);
    let mut pa = univariate_divide(&ua, &ca);
    let mut pb = univariate_divide(&ub, &cb);
    if pa.len() < pb.len() {
        std::mem::swap(&mut pa, &mut pb);
    }
    while !pb.is_empty() {
        let r = pseudo_remainder(&pa, &pb);
        pa = pb;
        pb = if r.is_empty() {
            r
        } else {
            let cr = univariate_content(&r);
            univariate_divide(&r, &cr)
        };
    }
    let cpa = univariate_content(&pa);
    let g = from_univariate(&univariate_divide(&pa, &cpa), v);
    normalize_sign(g.mul(&c))
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `var`.
pub fn content_in(p: &IntPoly, var: usize) -> IntPoly {
    univariate_content(&to_univariate(p, var))
}

/// Dense coefficient list in `var` (index = exponent); `var` must occur
/// with non-negative exponents only. Empty for the zero polynomial.
type Univariate = Vec<IntPoly>;

fn to_univariate(p: &IntPoly, var: usize) -> Univariate {
    let cs = p.coefficients_in(var);
    let deg = cs.keys().next_back().copied().unwrap_or(-1);
    let mut out = vec![IntPoly::zero(); (deg + 1) as usize];
    for (e, c) in cs {
        assert!(e >= 0, "negative exponent in gcd input");
        out[e as usize] = c;
    }
    out
}

fn from_univariate(u: &Univariate, var: usize) -> IntPoly {
    let mut acc = IntPoly::zero();
    for (e, c) in u.iter().enumerate() {
        if !c.is_zero() {
            acc = acc.add(&c.mul_term(&Monomial::var(var, e as i32), &BigInt::one()));
        }
    }
    acc
}

fn univariate_content(u: &Univariate) -> IntPoly {
    let mut g = IntPoly::zero();
    for c in u.iter().filter(|c| !c.is_zero()) {
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn univariate_divide(u: &Univariate, c: &IntPoly) -> Univariate {
    if c.is_one() {
        return u.clone();
    }
    u.iter()
        .map(|a| div_exact(a, c).expect("content divides every coefficient"))
        .collect()
}

fn trim(u: &mut Univariate) {
    while u.last().is_some_and(|c| c.is_zero()) {
        u.pop();
    }
}

/// `lc(b)^(deg a - deg b + 1) * a mod b`.
fn pseudo_remainder(a: &Univariate, b: &Univariate) -> Univariate {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    trim(&mut r);
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let k = dr - db;
        for c in r.iter_mut() {
            *c = c.mul(lb);
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + k] = r[i + k].sub(&bc.mul(&lr));
        }
        trim(&mut r);
    }
    r
}

/// Sign of the leading coefficient.
pub fn leading_sign(p: &IntPoly) -> Sign {
    p.leading_coeff().map(|c| c.sign()).unwrap_or(Sign::NoSign)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: usize) -> IntPoly {
        IntPoly::var(i)
    }
    fn k(n: i64) -> IntPoly {
        IntPoly::constant(BigInt::from(n))
    }

    #[test]
    fn gcd_univariate() {
        // (c-1)(c+2) and (c-1)(c-3)
        let c = v(0);
        let a = c.sub(&k(1)).mul(&c.add(&k(2)));
        let b = c.sub(&k(1)).mul(&c.sub(&k(3)));
        assert_eq!(gcd(&a, &b), c.sub(&k(1)));
    }

    #[test]
    fn gcd_with_content_and_sign() {
        let c = v(0);
        let a = c.add(&k(1)).scale(&BigInt::from(-6));
        let b = c.add(&k(1)).mul(&c).scale(&BigInt::from(4));
        assert_eq!(gcd(&a, &b), c.add(&k(1)).scale(&BigInt::from(2)));
    }

    #[test]
    fn gcd_multivariate() {
        let (a, b, c) = (v(0), v(1), v(2));
        let common = a.mul(&b).add(&c.pow(2)).sub(&k(3));
        let p = common.mul(&a.add(&b));
        let q = common.mul(&c.sub(&a).pow(2));
        assert_eq!(gcd(&p, &q), common);
        let r = common.mul(&b);
        assert_eq!(gcd(&p, &r), common);
    }

    #[test]
    fn gcd_coprime_is_one() {
        let (a, b) = (v(0), v(1));
        let p = a.pow(2).add(&b);
        let q = a.sub(&b.pow(3));
        assert!(gcd(&p, &q).is_one());
    }

    #[test]
    fn exact_division() {
        let (a, b) = (v(0), v(1));
        let p = a.add(&b).pow(3);
        assert_eq!(div_exact(&p, &a.add(&b)), Some(a.add(&b).pow(2)));
        assert_eq!(div_exact(&p, &a.sub(&b)), None);
        assert_eq!(div_exact(&k(6), &k(4)), None);
    }
}
