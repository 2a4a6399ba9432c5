//! Set-theoretic reflections: maps `k: X → X` with
//! `ř(k×id)ř(k×id) = (k×id)ř(k×id)ř`.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{GroupTable, NearBrace};
use crate::error::{Error, Result};
use crate::report::Check;
use crate::ybe::SetSolution;

/// Largest set on which every one of the `N^N` maps is tried.
pub const DEFAULT_ALL_BOUND: usize = 6;

/// A map `k` given by its table. The flags are computed on construction;
/// any flags present in input JSON are ignored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ReflectionWire", into = "ReflectionWire")]
pub struct ReflectionMap {
    table: Vec<usize>,
    bijective: bool,
    involutive: bool,
}

#[derive(Serialize, Deserialize)]
struct ReflectionWire {
    k: Vec<usize>,
    #[serde(default, skip_deserializing)]
    bijective: bool,
    #[serde(default, skip_deserializing)]
    involutive: bool,
}

impl TryFrom<ReflectionWire> for ReflectionMap {
    type Error = Error;

    fn try_from(w: ReflectionWire) -> Result<Self> {
        ReflectionMap::new(w.k)
    }
}

impl From<ReflectionMap> for ReflectionWire {
    fn from(k: ReflectionMap) -> Self {
        ReflectionWire {
            k: k.table,
            bijective: k.bijective,
            involutive: k.involutive,
        }
    }
}

impl ReflectionMap {
    pub fn new(table: Vec<usize>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::malformed("k", "empty map"));
        }
        if let Some(i) = table.iter().position(|&v| v >= n) {
            return Err(Error::malformed("k", format!("k({i}) = {} out of range", table[i])));
        }
        let mut seen = vec![false; n];
        for &v in &table {
            seen[v] = true;
        }
        let bijective = seen.iter().all(|&s| s);
        let involutive = (0..n).all(|x| table[table[x]] == x);
        Ok(ReflectionMap {
            table,
            bijective,
            involutive,
        })
    }

    pub fn identity(n: usize) -> Self {
        ReflectionMap::new((0..n).collect()).expect("identity is in range")
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn is_bijective(&self) -> bool {
        self.bijective
    }

    pub fn is_involutive(&self) -> bool {
        self.involutive
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReflectionMode {
    /// Compose both sides on every pair.
    Direct,
    /// The component criterion, valid for involutive non-degenerate `ř`.
    Cc1,
    /// `ř(id×k)ř(id×k) = (id×k)ř(id×k)ř`.
    Dual,
}

impl ReflectionMode {
    pub fn as_str(self) -> &'static str {
        match self {
            ReflectionMode::Direct => "direct",
            ReflectionMode::Cc1 => "cc1",
            ReflectionMode::Dual => "dual",
        }
    }
}

impl fmt::Display for ReflectionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for ReflectionMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [ReflectionMode::Direct, ReflectionMode::Cc1, ReflectionMode::Dual]
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown reflection mode `{s}`")))
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ReflectionReport {
    pub mode: ReflectionMode,
    /// Witness is the first failing pair `(x, y)`.
    #[serde(flatten)]
    pub check: Check,
}

impl ReflectionReport {
    pub fn passed(&self) -> bool {
        self.check.passed()
    }
}

fn first_pair(n: usize, mut bad: impl FnMut(usize, usize) -> bool) -> Option<Vec<usize>> {
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| bad(x, y))
        .map(|(x, y)| vec![x, y])
}

fn check_size(sol: &SetSolution, k: &ReflectionMap) -> Result<()> {
    if sol.size() != k.size() {
        return Err(Error::SetMismatch {
            expected: sol.size(),
            found: k.size(),
        });
    }
    Ok(())
}

/// `ř(k×id)ř(k×id)` applied to `(x, y)`.
fn left_side(sol: &SetSolution, k: &ReflectionMap, x: usize, y: usize) -> (usize, usize) {
    let (a, b) = sol.apply(k.apply(x), y);
    sol.apply(k.apply(a), b)
}

/// `(k×id)ř(k×id)ř` applied to `(x, y)`.
fn right_side(sol: &SetSolution, k: &ReflectionMap, x: usize, y: usize) -> (usize, usize) {
    let (a, b) = sol.apply(x, y);
    let (c, d) = sol.apply(k.apply(a), b);
    (k.apply(c), d)
}

fn direct_holds(sol: &SetSolution, k: &ReflectionMap) -> bool {
    let n = sol.size();
    (0..n).all(|x| (0..n).all(|y| left_side(sol, k, x, y) == right_side(sol, k, x, y)))
}

pub fn verify_reflection(sol: &SetSolution, k: &ReflectionMap, mode: ReflectionMode) -> Result<ReflectionReport> {
    check_size(sol, k)?;
    let n = sol.size();
    let witness = match mode {
        ReflectionMode::Direct => first_pair(n, |x, y| left_side(sol, k, x, y) != right_side(sol, k, x, y)),
        ReflectionMode::Cc1 => {
            if !(sol.is_involutive() && sol.is_non_degenerate()) {
                return Err(Error::Hypothesis(
                    "the cc1 criterion needs an involutive non-degenerate solution".into(),
                ));
            }
            let (s, t, k) = (|x, y| sol.sigma(x, y), |y, x| sol.tau(y, x), |x| k.apply(x));
            first_pair(n, |x, y| t(t(y, x), k(s(x, y))) != t(t(y, k(x)), k(s(k(x), y))))
        }
        ReflectionMode::Dual => first_pair(n, |x, y| {
            let lhs = {
                let (a, b) = sol.apply(x, k.apply(y));
                sol.apply(a, k.apply(b))
            };
            let rhs = {
                let (a, b) = sol.apply(x, y);
                let (c, d) = sol.apply(a, k.apply(b));
                (c, k.apply(d))
            };
            lhs != rhs
        }),
    };
    Ok(ReflectionReport {
        mode,
        check: Check::from_witness(witness),
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReflectionFilter {
    All,
    TauEquivariant,
    Central,
}

impl std::str::FromStr for ReflectionFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(ReflectionFilter::All),
            "tau_equivariant" => Ok(ReflectionFilter::TauEquivariant),
            "central" => Ok(ReflectionFilter::Central),
            _ => Err(Error::Parse(format!("unknown reflection filter `{s}`"))),
        }
    }
}

/// Every map `k` with `k(τ_y(x)) = τ_y(k(x))` for all `x, y`, in
/// lexicographic order of tables.
pub fn tau_equivariant_maps(sol: &SetSolution) -> Vec<ReflectionMap> {
    fn go(sol: &SetSolution, k: &mut Vec<usize>, out: &mut Vec<ReflectionMap>) {
        let n = sol.size();
        let x = k.len();
        if x == n {
            out.push(ReflectionMap::new(k.clone()).expect("values in range"));
            return;
        }
        for v in 0..n {
            k.push(v);
            // Constraints whose two sides are both known.
            let ok = (0..=x).all(|a| {
                (0..n).all(|y| {
                    let ta = sol.tau(y, a);
                    ta > x || k[ta] == sol.tau(y, k[a])
                })
            });
            if ok {
                go(sol, k, out);
            }
            k.pop();
        }
    }
    let mut out = Vec::new();
    go(sol, &mut Vec::with_capacity(sol.size()), &mut out);
    out
}

/// `k = τ_c` for each `c` central in `(B, ∘)`, in increasing order of `c`.
pub fn central_maps(sol: &SetSolution, nb: &NearBrace) -> Result<Vec<ReflectionMap>> {
    if nb.size() != sol.size() {
        return Err(Error::SetMismatch {
            expected: sol.size(),
            found: nb.size(),
        });
    }
    let mul = GroupTable::new(nb.mul().clone())?;
    mul.center()
        .into_iter()
        .map(|c| ReflectionMap::new((0..sol.size()).map(|x| sol.tau(c, x)).collect()))
        .collect()
}

fn decode(mut index: usize, n: usize) -> Vec<usize> {
    let mut k = vec![0; n];
    for slot in k.iter_mut().rev() {
        *slot = index % n;
        index /= n;
    }
    k
}

/// Reflections of `sol` selected by `filter`. Every map returned passes the
/// direct check; candidates from the equivariant and central families that
/// fail it are dropped.
pub fn enumerate_reflections(
    sol: &SetSolution,
    filter: ReflectionFilter,
    nb: Option<&NearBrace>,
) -> Result<Vec<ReflectionMap>> {
    enumerate_reflections_with(sol, filter, nb, DEFAULT_ALL_BOUND)
}

pub fn enumerate_reflections_with(
    sol: &SetSolution,
    filter: ReflectionFilter,
    nb: Option<&NearBrace>,
    bound: usize,
) -> Result<Vec<ReflectionMap>> {
    let n = sol.size();
    let candidates = match filter {
        ReflectionFilter::All => {
            if n > bound {
                return Err(Error::BoundExceeded { requested: n, bound });
            }
            let total = n.pow(n as u32);
            return Ok((0..total)
                .into_par_iter()
                .map(|i| ReflectionMap::new(decode(i, n)).expect("values in range"))
                .filter(|k| direct_holds(sol, k))
                .collect());
        }
        ReflectionFilter::TauEquivariant => tau_equivariant_maps(sol),
        ReflectionFilter::Central => {
            let nb = nb.ok_or_else(|| Error::Hypothesis("the central filter needs a structure".into()))?;
            central_maps(sol, nb)?
        }
    };
    Ok(candidates.into_iter().filter(|k| direct_holds(sol, k)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{brace_from_radical_ring, RingTable};
    use crate::ybe::{solution_from_structure, Rule};

    fn k(t: &[usize]) -> ReflectionMap {
        ReflectionMap::new(t.to_vec()).unwrap()
    }

    #[test]
    fn flags_are_recomputed() {
        let m: ReflectionMap = serde_json::from_str(r#"{"k":[1,1,0],"bijective":true,"involutive":true}"#).unwrap();
        assert!(!m.is_bijective() && !m.is_involutive());
        assert_eq!(
            serde_json::to_string(&k(&[1, 0])).unwrap(),
            r#"{"k":[1,0],"bijective":true,"involutive":true}"#
        );
        assert!(serde_json::from_str::<ReflectionMap>(r#"{"k":[0,2]}"#).is_err());
    }

    #[test]
    fn every_map_reflects_the_flip() {
        let all = enumerate_reflections(&SetSolution::flip(2), ReflectionFilter::All, None).unwrap();
        assert_eq!(all.len(), 4);
    }

    #[test]
    fn cc1_is_refused_without_involutivity() {
        let g = GroupTable::symmetric3();
        let sol = solution_from_structure(&NearBrace::trivial(&g), Rule::Gv).unwrap();
        assert!(matches!(
            verify_reflection(&sol, &ReflectionMap::identity(6), ReflectionMode::Cc1),
            Err(Error::Hypothesis(_))
        ));
        assert!(verify_reflection(&sol, &ReflectionMap::identity(6), ReflectionMode::Direct).is_ok());
    }

    #[test]
    fn central_maps_of_an_abelian_brace() {
        let nb = brace_from_radical_ring(&RingTable::multiples_mod(2, 8)).unwrap();
        let sol = solution_from_structure(&nb, Rule::Rump).unwrap();
        let maps = enumerate_reflections(&sol, ReflectionFilter::Central, Some(&nb)).unwrap();
        assert_eq!(maps.len(), 4);
        assert!(matches!(
            enumerate_reflections(&SetSolution::flip(3), ReflectionFilter::Central, Some(&nb)),
            Err(Error::SetMismatch { .. })
        ));
    }

    #[test]
    fn equivariant_maps_contain_identity() {
        let nb = brace_from_radical_ring(&RingTable::multiples_mod(2, 8)).unwrap();
        let sol = solution_from_structure(&nb, Rule::Rump).unwrap();
        let eq = tau_equivariant_maps(&sol);
        assert!(eq.contains(&ReflectionMap::identity(4)));
        for m in &eq {
            assert!(verify_reflection(&sol, m, ReflectionMode::Direct).unwrap().passed());
        }
    }

    #[test]
    fn failures_carry_a_genuine_witness() {
        let nb = brace_from_radical_ring(&RingTable::multiples_mod(2, 8)).unwrap();
        let sol = solution_from_structure(&nb, Rule::Rump).unwrap();
        let mut failures = 0;
        for i in 0..256 {
            let m = ReflectionMap::new(decode(i, 4)).unwrap();
            let rep = verify_reflection(&sol, &m, ReflectionMode::Direct).unwrap();
            if let Some(w) = &rep.check.witness {
                failures += 1;
                assert_ne!(left_side(&sol, &m, w[0], w[1]), right_side(&sol, &m, w[0], w[1]));
            }
        }
        assert!(failures > 0);
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(
            enumerate_reflections_with(&SetSolution::flip(3), ReflectionFilter::All, None, 2),
            Err(Error::BoundExceeded { bound: 2, .. })
        ));
    }
}
