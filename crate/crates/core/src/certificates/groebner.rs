//! Buchberger's algorithm with cofactor tracking, used only to decide
//! whether an ideal is the unit ideal and, if so, to produce the witness.

use std::collections::BTreeSet;

use crate::algebra::{FieldElem, Monomial, MultiPoly, Ring};

use super::{CertificateError, UnitCertificate};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    /// Smallest sugar degree first, ties by lcm.
    Sugar,
    /// Smallest lcm first.
    Normal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerConfig {
    pub max_reductions: usize,
    pub max_degree: i32,
    pub selection: Selection,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig {
            max_reductions: 100_000,
            max_degree: 60,
            selection: Selection::Sugar,
        }
    }
}

struct Elem {
    p: MultiPoly,
    cof: Vec<MultiPoly>,
    sugar: i32,
}

impl Elem {
    fn lm(&self) -> &Monomial {
        self.p.leading_monomial().expect("basis elements are nonzero")
    }

    fn scaled(&self, m: &Monomial, c: &FieldElem) -> (MultiPoly, Vec<MultiPoly>) {
        (
            self.p.mul_term(m, c),
            self.cof.iter().map(|q| q.mul_term(m, c)).collect(),
        )
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Pair {
    key: (i32, Monomial),
    i: usize,
    j: usize,
}

pub fn unit_certificate(gens: &[MultiPoly]) -> Result<UnitCertificate, CertificateError> {
    unit_certificate_with(gens, &GroebnerConfig::default())
}

pub fn unit_certificate_with(
    gens: &[MultiPoly],
    config: &GroebnerConfig,
) -> Result<UnitCertificate, CertificateError> {
    if gens.is_empty() {
        return Err(CertificateError::EmptyInput);
    }
    let n = gens.len();
    let mut run = Run {
        basis: Vec::new(),
        pairs: BTreeSet::new(),
        reductions: 0,
        config,
    };
    for (k, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut cof = vec![MultiPoly::zero(); n];
        cof[k] = MultiPoly::one();
        let sugar = g.total_degree();
        if let Some(cof) = run.insert(g.clone(), cof, sugar)? {
            return UnitCertificate::new(gens.to_vec(), cof);
        }
    }
    while let Some(pair) = run.pairs.pop_first() {
        if run.chain_criterion(&pair) {
            continue;
        }
        let (p, cof, sugar) = run.s_poly(pair.i, pair.j);
        if let Some(cof) = run.insert(p, cof, sugar)? {
            return UnitCertificate::new(gens.to_vec(), cof);
        }
    }
    Err(CertificateError::NotUnitIdeal)
}

struct Run<'a> {
    basis: Vec<Elem>,
    pairs: BTreeSet<Pair>,
    reductions: usize,
    config: &'a GroebnerConfig,
}

impl Run<'_> {
    /// Reduce `p` against the basis and add it. Returns the cofactors of 1
    /// once a constant appears.
    fn insert(
        &mut self,
        p: MultiPoly,
        cof: Vec<MultiPoly>,
        sugar: i32,
    ) -> Result<Option<Vec<MultiPoly>>, CertificateError> {
        let (p, cof) = self.reduce(p, cof)?;
        if p.is_zero() {
            return Ok(None);
        }
        let inv = p.leading_coeff().expect("nonzero").inv()?;
        let p = p.scale(&inv);
        let cof: Vec<MultiPoly> = cof.iter().map(|q| q.scale(&inv)).collect();
        if p.is_constant() {
            return Ok(Some(cof));
        }
        if p.total_degree() > self.config.max_degree {
            return Err(CertificateError::ResourceLimit {
                what: "basis degree",
                limit: self.config.max_degree as usize,
            });
        }
        let new = Elem { p, cof, sugar };
        let k = self.basis.len();
        for (i, e) in self.basis.iter().enumerate() {
            if e.lm().is_coprime(new.lm()) {
                continue;
            }
            let lcm = e.lm().lcm(new.lm());
            let s = (e.sugar + lcm.degree() - e.lm().degree())
                .max(new.sugar + lcm.degree() - new.lm().degree());
            let key = match self.config.selection {
                Selection::Sugar => (s, lcm),
                Selection::Normal => (0, lcm),
            };
            self.pairs.insert(Pair { key, i, j: k });
        }
        self.basis.push(new);
        Ok(None)
    }

    fn lcm(&self, i: usize, j: usize) -> Monomial {
        self.basis[i].lm().lcm(self.basis[j].lm())
    }

    fn pending(&self, a: usize, b: usize) -> bool {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        self.pairs.iter().any(|p| p.i == i && p.j == j)
    }

    /// Buchberger's second criterion: some `k` with `lm(k) | lcm(i, j)` whose
    /// pairs with `i` and `j` are already treated.
    fn chain_criterion(&self, pair: &Pair) -> bool {
        let lcm = self.lcm(pair.i, pair.j);
        (0..self.basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && self.basis[k].lm().divides(&lcm)
                && !self.pending(pair.i, k)
                && !self.pending(pair.j, k)
        })
    }

    fn s_poly(&self, i: usize, j: usize) -> (MultiPoly, Vec<MultiPoly>, i32) {
        let lcm = self.lcm(i, j);
        let (a, b) = (&self.basis[i], &self.basis[j]);
        let ma = lcm.div(a.lm());
        let mb = lcm.div(b.lm());
        let (pa, ca) = a.scaled(&ma, &FieldElem::one());
        let (pb, cb) = b.scaled(&mb, &FieldElem::one());
        let cof = ca.iter().zip(&cb).map(|(x, y)| x.sub(y)).collect();
        let sugar = (a.sugar + ma.degree()).max(b.sugar + mb.degree());
        (pa.sub(&pb), cof, sugar)
    }

    /// Full reduction: every term divisible by a leading monomial is
    /// eliminated.
    fn reduce(
        &mut self,
        mut p: MultiPoly,
        mut cof: Vec<MultiPoly>,
    ) -> Result<(MultiPoly, Vec<MultiPoly>), CertificateError> {
        let mut rem: Vec<(Monomial, FieldElem)> = Vec::new();
        while let Some((m, c)) = p.leading().cloned() {
            let divisor = self.basis.iter().find(|e| e.lm().divides(&m));
            match divisor {
                Some(e) => {
                    self.reductions += 1;
                    if self.reductions > self.config.max_reductions {
                        return Err(CertificateError::ResourceLimit {
                            what: "reduction steps",
                            limit: self.config.max_reductions,
                        });
                    }
                    let q = m.div(e.lm());
                    let (ep, ec) = e.scaled(&q, &c);
                    p = p.sub(&ep);
                    for (a, b) in cof.iter_mut().zip(&ec) {
                        *a = a.sub(b);
                    }
                }
                None => {
                    p = p.sub(&MultiPoly::term(m.clone(), c.clone()));
                    rem.push((m, c));
                }
            }
        }
        Ok((MultiPoly::from_terms(rem), cof))
    }
}
