//! Exact arithmetic over `K = Q(params)` and polynomial rings on top of it.

pub mod field_elem;
pub mod intpoly;
pub mod monomial;
pub mod multipoly;
pub mod param_field;
pub mod parse;
pub mod poly;
pub mod ratfn;

pub use field_elem::FieldElem;
pub use intpoly::IntPoly;
pub use monomial::Monomial;
pub use multipoly::MultiPoly;
pub use param_field::ParamField;
pub use poly::{Poly, Ring};
pub use ratfn::RatFn;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("no derivative recorded for parameter '{0}'")]
    UnmappedDerivative(String),
    #[error("unknown variable '{0}'")]
    UnknownVariable(String),
    #[error("undeclared symbol '{0}'")]
    UnknownSymbol(String),
    #[error("symbol '{0}' declared twice")]
    DuplicateSymbol(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("'{0}' is not a polynomial")]
    NotPolynomial(String),
}
