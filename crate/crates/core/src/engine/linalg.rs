use crate::algebra::intpoly::{self, IntPoly};
use crate::algebra::{FieldElem, Ring};

use super::KSMatrix;

#[derive(Debug, Clone, PartialEq)]
pub struct RankKernel {
    pub rank: usize,
    /// Basis of `{c : Σ_r c_r·row_r = 0}` in `ω` coordinates, each vector
    /// with polynomial entries, content 1 and positive leading sign.
    pub kernel: Vec<Vec<FieldElem>>,
}

fn common_denominator<'a>(v: impl IntoIterator<Item = &'a FieldElem>) -> IntPoly {
    v.into_iter()
        .filter(|e| !e.is_zero())
        .fold(IntPoly::one(), |l, e| intpoly::lcm(&l, e.denominator()))
}

/// Rank by fraction-free elimination after clearing row denominators.
pub fn bareiss_rank(m: &[Vec<FieldElem>]) -> usize {
    let mut a: Vec<Vec<IntPoly>> = m
        .iter()
        .map(|row| {
            let l = common_denominator(row);
            row.iter()
                .map(|e| {
                    if e.is_zero() {
                        IntPoly::zero()
                    } else {
                        let q = intpoly::div_exact(&l, e.denominator()).expect("lcm");
                        e.numerator().mul(&q)
                    }
                })
                .collect()
        })
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = IntPoly::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = a[r][c].mul(&a[i][j]).sub(&a[i][c].mul(&a[r][j]));
                a[i][j] = intpoly::div_exact(&v, &prev).expect("Bareiss division is exact");
            }
            a[i][c] = IntPoly::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Null space of `a` (solutions of `a·v = 0`) by reduced row echelon form.
fn null_space(a: &[Vec<FieldElem>], n: usize) -> Vec<Vec<FieldElem>> {
    let mut a: Vec<Vec<FieldElem>> = a.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("nonzero pivot");
        let pivot: Vec<FieldElem> = a[r].iter().map(|v| v.mul(&inv)).collect();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, p) in row.iter_mut().zip(&pivot) {
                    *v = v.sub(&f.mul(p));
                }
            }
        }
        a[r] = pivot;
        pivots.push(c);
        r += 1;
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![FieldElem::zero(); n];
            v[free] = FieldElem::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = a[row][free].neg();
            }
            normalize_vector(&v)
        })
        .collect()
}

/// Clear denominators, remove the polynomial content and fix the sign.
pub(crate) fn normalize_vector(v: &[FieldElem]) -> Vec<FieldElem> {
    let l = FieldElem::from_poly(common_denominator(v));
    let ints: Vec<FieldElem> = v.iter().map(|e| e.mul(&l)).collect();
    let g = ints
        .iter()
        .filter(|e| !e.is_zero())
        .fold(IntPoly::zero(), |g, e| intpoly::gcd(&g, e.numerator()));
    if g.is_zero() {
        return ints;
    }
    let mut g = FieldElem::from_poly(g);
    if ints.iter().find(|e| !e.is_zero()).is_some_and(FieldElem::is_negative_leading) {
        g = g.neg();
    }
    ints.iter().map(|e| e.div(&g).expect("nonzero content")).collect()
}

pub fn ks_rank_kernel(m: &KSMatrix) -> RankKernel {
    let g = m.size();
    let rank = bareiss_rank(&m.entries);
    let transposed: Vec<Vec<FieldElem>> = (0..m.cols.len())
        .map(|k| (0..g).map(|r| m.entries[r][k].clone()).collect())
        .collect();
    let kernel = null_space(&transposed, g);
    assert_eq!(rank + kernel.len(), g, "rank and kernel dimension disagree");
    RankKernel { rank, kernel }
}
