//! Bezout and Nullstellensatz certificates.

mod euclid;
mod groebner;

pub use euclid::{extended_euclid, Bezout};
pub use groebner::{unit_certificate, unit_certificate_with, GroebnerConfig, Selection};

use crate::algebra::{AlgebraError, MultiPoly};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CertificateError {
    #[error("polynomials are not coprime (gcd has degree {degree})")]
    NotCoprime { degree: i32 },
    #[error("the ideal does not contain 1")]
    NotUnitIdeal,
    #[error("resource limit exceeded: {what} > {limit}")]
    ResourceLimit { what: &'static str, limit: usize },
    #[error("empty generator list")]
    EmptyInput,
    #[error("both inputs are zero")]
    BothZero,
    #[error("input is not univariate in variable {0}")]
    NotUnivariate(usize),
    #[error("cofactors do not combine to 1")]
    InvalidCertificate,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Cofactors `c` with `sum c[i] * g[i] = 1`, checked on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitCertificate {
    generators: Vec<MultiPoly>,
    cofactors: Vec<MultiPoly>,
}

impl UnitCertificate {
    pub fn new(generators: Vec<MultiPoly>, cofactors: Vec<MultiPoly>) -> Result<Self, CertificateError> {
        if generators.len() != cofactors.len() || !combination(&generators, &cofactors).is_one() {
            return Err(CertificateError::InvalidCertificate);
        }
        Ok(UnitCertificate {
            generators,
            cofactors,
        })
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn cofactors(&self) -> &[MultiPoly] {
        &self.cofactors
    }

    pub fn cofactor(&self, i: usize) -> &MultiPoly {
        &self.cofactors[i]
    }

    /// Re-expands the identity; always true for a constructed value.
    pub fn verify(&self) -> bool {
        combination(&self.generators, &self.cofactors).is_one()
    }

    /// Another certificate for the same generators, moved along the Koszul
    /// syzygy `g[j]·e_i − g[i]·e_j` scaled by `h`.
    pub fn shifted(&self, i: usize, j: usize, h: &MultiPoly) -> Result<Self, CertificateError> {
        let mut cof = self.cofactors.clone();
        cof[i] = cof[i].add(&h.mul(&self.generators[j]));
        cof[j] = cof[j].sub(&h.mul(&self.generators[i]));
        Self::new(self.generators.clone(), cof)
    }
}

fn combination(gens: &[MultiPoly], cofs: &[MultiPoly]) -> MultiPoly {
    gens.iter()
        .zip(cofs)
        .fold(MultiPoly::zero(), |acc, (g, c)| acc.add(&g.mul(c)))
}
