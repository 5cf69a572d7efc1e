//! The differential coefficient field `(K, δ)`.

use super::field_elem::FieldElem;
use super::intpoly::IntPoly;
use super::multipoly::MultiPoly;
use super::poly::Ring;
use super::AlgebraError;

/// Parameter symbols of `K = Q(params)` together with a (possibly partial)
/// table of their derivatives.
///
/// A derivative may itself be an adjoined symbol, so `c ↦ c1` declares `c1`
/// as `c'`. Applying δ to a symbol without a table entry is an error.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamField {
    params: Vec<String>,
    derivs: Vec<Option<FieldElem>>,
}

impl ParamField {
    pub fn new<S: Into<String>>(params: impl IntoIterator<Item = S>) -> Result<Self, AlgebraError> {
        let params: Vec<String> = params.into_iter().map(Into::into).collect();
        for (i, p) in params.iter().enumerate() {
            if params[..i].contains(p) {
                return Err(AlgebraError::DuplicateSymbol(p.clone()));
            }
            if !is_identifier(p) {
                return Err(AlgebraError::UnknownSymbol(p.clone()));
            }
        }
        let derivs = vec![None; params.len()];
        Ok(ParamField { params, derivs })
    }

    /// The field `Q` with no parameters.
    pub fn rationals() -> Self {
        ParamField {
            params: Vec::new(),
            derivs: Vec::new(),
        }
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.params.iter().position(|p| p == name)
    }

    pub fn param(&self, name: &str) -> Result<FieldElem, AlgebraError> {
        self.index_of(name)
            .map(FieldElem::param)
            .ok_or_else(|| AlgebraError::UnknownSymbol(name.to_string()))
    }

    /// Records `δ(name) = value`.
    pub fn set_derivative(&mut self, name: &str, value: FieldElem) -> Result<(), AlgebraError> {
        let i = self
            .index_of(name)
            .ok_or_else(|| AlgebraError::UnknownSymbol(name.to_string()))?;
        let n = value.numerator().num_vars().max(value.denominator().num_vars());
        if n > self.params.len() {
            return Err(AlgebraError::UnknownSymbol(format!("p{}", n - 1)));
        }
        self.derivs[i] = Some(value);
        Ok(())
    }

    pub fn with_derivative(mut self, name: &str, value: FieldElem) -> Result<Self, AlgebraError> {
        self.set_derivative(name, value)?;
        Ok(self)
    }

    pub fn derivative(&self, i: usize) -> Option<&FieldElem> {
        self.derivs.get(i).and_then(Option::as_ref)
    }

    /// True when every mapped derivative is zero and every parameter is
    /// mapped, i.e. δ vanishes on `K`.
    pub fn is_trivial_derivation(&self) -> bool {
        self.derivs.iter().all(|d| d.as_ref().is_some_and(Ring::is_zero))
    }

    fn delta_int(&self, p: &IntPoly) -> Result<FieldElem, AlgebraError> {
        let mut acc = FieldElem::zero();
        for i in 0..p.num_vars() {
            if !p.uses_var(i) {
                continue;
            }
            let d = self
                .derivative(i)
                .ok_or_else(|| AlgebraError::UnmappedDerivative(self.name(i)))?;
            if d.is_zero() {
                continue;
            }
            acc = acc.add(&FieldElem::from_poly(p.partial(i)).mul(d));
        }
        Ok(acc)
    }

    /// `δ(e)` by Leibniz and the quotient rule.
    pub fn delta(&self, e: &FieldElem) -> Result<FieldElem, AlgebraError> {
        let dn = self.delta_int(e.numerator())?;
        if e.denominator().is_constant() {
            let den = FieldElem::from_poly(e.denominator().clone());
            return dn.div(&den);
        }
        let dd = self.delta_int(e.denominator())?;
        let den = FieldElem::from_poly(e.denominator().clone());
        let num = FieldElem::from_poly(e.numerator().clone());
        dn.mul(&den).sub(&num.mul(&dd)).div(&den.mul(&den))
    }

    /// Coefficient-wise derivative `p^δ`; curve variables are constants.
    pub fn delta_poly(&self, p: &MultiPoly) -> Result<MultiPoly, AlgebraError> {
        let mut terms = Vec::with_capacity(p.len());
        for (m, c) in p.terms() {
            terms.push((m.clone(), self.delta(c)?));
        }
        Ok(MultiPoly::from_terms(terms))
    }

    pub fn name(&self, i: usize) -> String {
        self.params
            .get(i)
            .cloned()
            .unwrap_or_else(|| format!("p{i}"))
    }

    /// Canonical string of a field element using the declared names.
    pub fn format(&self, e: &FieldElem) -> String {
        e.to_string_with(&self.params)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field() -> ParamField {
        ParamField::new(["c", "c1"])
            .unwrap()
            .with_derivative("c", FieldElem::param(1))
            .unwrap()
    }

    #[test]
    fn leibniz_on_square() {
        let k = field();
        let c = k.param("c").unwrap();
        let d = k.delta(&c.mul(&c)).unwrap();
        assert_eq!(k.format(&d), "2*c*c1");
    }

    #[test]
    fn quotient_rule() {
        let k = field();
        let c = k.param("c").unwrap();
        let d = k.delta(&c.inv().unwrap()).unwrap();
        assert_eq!(k.format(&d), "-c1/(c^2)");
    }

    #[test]
    fn unmapped_symbol_is_an_error() {
        let k = field();
        let c1 = k.param("c1").unwrap();
        assert_eq!(
            k.delta(&c1),
            Err(AlgebraError::UnmappedDerivative("c1".into()))
        );
        // Constants never need a table entry.
        assert!(k.delta(&FieldElem::from_int(7)).unwrap().is_zero());
    }

    #[test]
    fn duplicate_params_rejected() {
        assert!(matches!(
            ParamField::new(["a", "a"]),
            Err(AlgebraError::DuplicateSymbol(_))
        ));
    }
}
