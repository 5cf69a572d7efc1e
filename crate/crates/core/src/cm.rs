//! Shimura-type bounds for CM abelian varieties.

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CmError {
    #[error("e = {e} does not divide g = {g}")]
    NotDivisible { g: u32, e: u32 },
    #[error("invalid Shimura type: {0}")]
    InvalidType(String),
}

/// Signature pairs `(r_j, s_j)`, one per embedding, with `r_j + s_j = m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShimuraType {
    m: u32,
    pairs: Vec<(u32, u32)>,
}

impl ShimuraType {
    pub fn new(pairs: Vec<(u32, u32)>) -> Result<Self, CmError> {
        let Some(&(r0, s0)) = pairs.first() else {
            return Err(CmError::InvalidType("no pairs".into()));
        };
        let m = r0 + s0;
        if m == 0 {
            return Err(CmError::InvalidType("m = 0".into()));
        }
        if let Some(&(r, s)) = pairs.iter().find(|&&(r, s)| r + s != m) {
            return Err(CmError::InvalidType(format!("({r},{s}) does not sum to m = {m}")));
        }
        Ok(ShimuraType { m, pairs })
    }

    /// Checks the type against a stated `e` and `g`.
    pub fn with_shape(g: u32, e: u32, pairs: Vec<(u32, u32)>) -> Result<Self, CmError> {
        if e == 0 || !g.is_multiple_of(e) {
            return Err(CmError::NotDivisible { g, e });
        }
        if pairs.len() != e as usize {
            return Err(CmError::InvalidType(format!("{} pairs for e = {e}", pairs.len())));
        }
        let t = Self::new(pairs)?;
        if t.g() != g {
            return Err(CmError::InvalidType(format!("pairs sum to {} rather than g = {g}", t.g())));
        }
        Ok(t)
    }

    pub fn e(&self) -> u32 {
        self.pairs.len() as u32
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn g(&self) -> u32 {
        self.e() * self.m
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }
}

/// `2·Σ min(r_j, s_j)`.
pub fn ks_rank_bound(t: &ShimuraType) -> u32 {
    2 * t.pairs.iter().map(|&(r, s)| r.min(s)).sum::<u32>()
}

/// `Σ r_j·s_j`.
pub fn moduli_dimension(t: &ShimuraType) -> u32 {
    t.pairs.iter().map(|&(r, s)| r * s).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankWindow {
    Bounds { lo: u32, hi: u32 },
    /// `g/e` is even and no window is known.
    HypothesisFails { m: u32 },
}

pub fn rank_window(g: u32, e: u32) -> Result<RankWindow, CmError> {
    if e == 0 || !g.is_multiple_of(e) {
        return Err(CmError::NotDivisible { g, e });
    }
    let m = g / e;
    Ok(if m % 2 == 1 {
        RankWindow::Bounds { lo: 1, hi: g - e }
    } else {
        RankWindow::HypothesisFails { m }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(pairs: &[(u32, u32)]) -> ShimuraType {
        ShimuraType::new(pairs.to_vec()).unwrap()
    }

    #[test]
    fn bounds() {
        assert_eq!(ks_rank_bound(&t(&[(1, 2)])), 2);
        assert_eq!(ks_rank_bound(&t(&[(3, 0), (3, 0)])), 0);
        assert_eq!(ks_rank_bound(&t(&[(1, 2), (0, 3)])), 2);
    }

    #[test]
    fn dimensions() {
        assert_eq!(moduli_dimension(&t(&[(1, 2)])), 2);
        assert_eq!(moduli_dimension(&t(&[(0, 3)])), 0);
        assert_eq!(moduli_dimension(&t(&[(1, 1), (2, 0)])), 1);
    }

    #[test]
    fn windows() {
        assert_eq!(rank_window(3, 1), Ok(RankWindow::Bounds { lo: 1, hi: 2 }));
        assert_eq!(rank_window(5, 1), Ok(RankWindow::Bounds { lo: 1, hi: 4 }));
        assert_eq!(rank_window(4, 2), Ok(RankWindow::HypothesisFails { m: 2 }));
        assert_eq!(rank_window(4, 3), Err(CmError::NotDivisible { g: 4, e: 3 }));
    }

    #[test]
    fn invalid_types() {
        assert!(matches!(ShimuraType::new(vec![(1, 2), (1, 1)]), Err(CmError::InvalidType(_))));
        assert!(matches!(ShimuraType::new(vec![]), Err(CmError::InvalidType(_))));
        assert!(matches!(
            ShimuraType::with_shape(3, 1, vec![(1, 1)]),
            Err(CmError::InvalidType(_))
        ));
        assert_eq!(
            ShimuraType::with_shape(3, 2, vec![(1, 2)]),
            Err(CmError::NotDivisible { g: 3, e: 2 })
        );
    }
}
