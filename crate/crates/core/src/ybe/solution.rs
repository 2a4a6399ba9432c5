//! Set-theoretic maps `ř(x, y) = (σ_x(y), τ_y(x))` on a finite set.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::algebra::OpTable;
use crate::error::{Error, Result};

/// `sigma.get(x, y) = σ_x(y)` and `tau.get(y, x) = τ_y(x)`.
///
/// Nothing beyond index range is assumed; bijectivity and the braid
/// relation are computed by the checkers.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "SolutionWire", into = "SolutionWire")]
pub struct SetSolution {
    sigma: OpTable,
    tau: OpTable,
}

#[derive(Serialize, Deserialize)]
struct SolutionWire {
    size: usize,
    sigma: OpTable,
    tau: OpTable,
}

impl TryFrom<SolutionWire> for SetSolution {
    type Error = Error;

    fn try_from(w: SolutionWire) -> Result<Self> {
        if w.sigma.size() != w.size {
            return Err(Error::malformed(
                "sigma",
                format!("size {} != {}", w.sigma.size(), w.size),
            ));
        }
        SetSolution::new(w.sigma, w.tau)
    }
}

impl From<SetSolution> for SolutionWire {
    fn from(s: SetSolution) -> Self {
        SolutionWire {
            size: s.size(),
            sigma: s.sigma,
            tau: s.tau,
        }
    }
}

impl SetSolution {
    pub fn new(sigma: OpTable, tau: OpTable) -> Result<Self> {
        if sigma.size() != tau.size() {
            return Err(Error::malformed(
                "tau",
                format!("size {} differs from sigma size {}", tau.size(), sigma.size()),
            ));
        }
        Ok(SetSolution { sigma, tau })
    }

    /// Builds from closures `σ(x, y) = σ_x(y)` and `τ(y, x) = τ_y(x)`.
    pub fn from_fns(n: usize, sigma: impl Fn(usize, usize) -> usize, tau: impl Fn(usize, usize) -> usize) -> Self {
        SetSolution {
            sigma: OpTable::from_fn(n, sigma),
            tau: OpTable::from_fn(n, tau),
        }
    }

    /// `ř(x, y) = (y, x)`.
    pub fn flip(n: usize) -> Self {
        SetSolution::from_fns(n, |_, y| y, |_, x| x)
    }

    pub fn size(&self) -> usize {
        self.sigma.size()
    }

    /// `σ_x(y)`.
    #[inline]
    pub fn sigma(&self, x: usize, y: usize) -> usize {
        self.sigma.get(x, y)
    }

    /// `τ_y(x)`.
    #[inline]
    pub fn tau(&self, y: usize, x: usize) -> usize {
        self.tau.get(y, x)
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        (self.sigma(x, y), self.tau(y, x))
    }

    pub fn sigma_table(&self) -> &OpTable {
        &self.sigma
    }

    pub fn tau_table(&self) -> &OpTable {
        &self.tau
    }

    pub fn is_non_degenerate(&self) -> bool {
        let n = self.size();
        let bijective = |f: &dyn Fn(usize) -> usize| {
            let mut seen = vec![false; n];
            (0..n).all(|i| !std::mem::replace(&mut seen[f(i)], true))
        };
        (0..n).all(|x| bijective(&|y| self.sigma(x, y)) && bijective(&|y| self.tau(x, y)))
    }

    pub fn is_involutive(&self) -> bool {
        let n = self.size();
        (0..n).cartesian_product(0..n).all(|(x, y)| {
            let (u, v) = self.apply(x, y);
            self.apply(u, v) == (x, y)
        })
    }

    /// Transports the solution along the bijection `perm` of the set.
    pub fn relabel(&self, perm: &[usize]) -> SetSolution {
        SetSolution {
            sigma: self.sigma.relabel(perm),
            tau: self.tau.relabel(perm),
        }
    }

    /// Lexicographically smallest `(σ, τ)` over all relabelings.
    pub fn canonical_form(&self) -> SetSolution {
        let n = self.size();
        (0..n)
            .permutations(n)
            .map(|p| self.relabel(&p))
            .min_by(|a, b| a.sort_key().cmp(&b.sort_key()))
            .expect("at least one permutation")
    }

    pub(crate) fn sort_key(&self) -> (&[usize], &[usize]) {
        (self.sigma.cells(), self.tau.cells())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flip_is_involutive_and_non_degenerate() {
        let s = SetSolution::flip(3);
        assert!(s.is_involutive());
        assert!(s.is_non_degenerate());
        assert_eq!(s.apply(0, 2), (2, 0));
    }

    #[test]
    fn constant_sigma_is_degenerate() {
        let s = SetSolution::from_fns(3, |_, _| 1, |_, x| x);
        assert!(!s.is_non_degenerate());
    }

    #[test]
    fn relabel_conjugates_the_map() {
        let s = SetSolution::from_fns(3, |_, y| (y + 1) % 3, |_, x| (x + 2) % 3);
        let p = [2, 0, 1];
        let t = s.relabel(&p);
        for x in 0..3 {
            for y in 0..3 {
                let (u, v) = s.apply(x, y);
                assert_eq!(t.apply(p[x], p[y]), (p[u], p[v]));
            }
        }
    }

    #[test]
    fn json_shape() {
        let s = SetSolution::flip(2);
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"size":2,"sigma":[[0,1],[0,1]],"tau":[[0,1],[0,1]]}"#);
        assert_eq!(serde_json::from_str::<SetSolution>(&j).unwrap(), s);
    }
}
