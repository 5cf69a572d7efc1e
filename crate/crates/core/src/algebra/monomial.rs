//! Exponent vectors under graded-lexicographic order.
//!
//! Trailing zero exponents are never stored, so the constant monomial is the
//! empty vector and two equal monomials always have identical storage. This
//! lets polynomials in different numbers of variables share one type.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

pub type Exps = SmallVec<[i32; 4]>;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Exps);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Exps::new())
    }

    pub fn new(exps: impl IntoIterator<Item = i32>) -> Self {
        let mut e: Exps = exps.into_iter().collect();
        trim(&mut e);
        Monomial(e)
    }

    /// `var^exp`.
    pub fn var(var: usize, exp: i32) -> Self {
        let mut e = Exps::from_elem(0, var + 1);
        e[var] = exp;
        trim(&mut e);
        Monomial(e)
    }

    pub fn exp(&self, var: usize) -> i32 {
        self.0.get(var).copied().unwrap_or(0)
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    /// Number of stored exponents; variables beyond this have exponent zero.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (&self.0, &other.0)
        } else {
            (&other.0, &self.0)
        };
        let mut e = long.clone();
        for (a, b) in e.iter_mut().zip(short.iter()) {
            *a += *b;
        }
        trim(&mut e);
        Monomial(e)
    }

    /// Exponent-wise difference; may produce negative exponents.
    pub fn div(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        Monomial::new((0..n).map(|i| self.exp(i) - other.exp(i)))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..self.0.len()).all(|i| self.exp(i) <= other.exp(i))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        Monomial::new((0..n).map(|i| self.exp(i).max(other.exp(i))))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        Monomial::new((0..n).map(|i| self.exp(i).min(other.exp(i))))
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn with_exp(&self, var: usize, exp: i32) -> Monomial {
        let n = self.0.len().max(var + 1);
        Monomial::new((0..n).map(|i| if i == var { exp } else { self.exp(i) }))
    }

    /// Apply an integer-linear change of exponents: new exponent `k` is
    /// `sum_i matrix[k][i] * old_i + shift[k]`.
    pub fn linear_map(&self, matrix: &[&[i32]], shift: &[i32]) -> Monomial {
        Monomial::new(matrix.iter().zip(shift).map(|(row, s)| {
            row.iter()
                .enumerate()
                .map(|(i, &m)| m * self.exp(i))
                .sum::<i32>()
                + s
        }))
    }
}

fn trim(e: &mut Exps) {
    while e.last() == Some(&0) {
        e.pop();
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let n = self.0.len().max(other.0.len());
            for i in 0..n {
                match self.exp(i).cmp(&other.exp(i)) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}
