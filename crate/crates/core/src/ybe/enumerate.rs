//! Search for set-theoretic solutions on small sets.
//!
//! Exhaustive mode fills the `n²` cells of `ř` one at a time with a pair
//! `(σ_x(y), τ_y(x))`, pruning with the non-degeneracy and involutivity
//! constraints and with every braid triple whose lookups are already
//! defined. Brace-generated mode maps enumerated structures through
//! [`solution_from_structure`](super::solution_from_structure).

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::construct::{solution_from_arith, Rule};
use super::solution::SetSolution;
use crate::algebra::{enumerate_near_braces_with, EnumerationOptions, Level};
use crate::error::{Error, Result};

/// Exhaustive search refuses larger sets when non-degeneracy is required.
pub const EXHAUSTIVE_BOUND_NON_DEGENERATE: usize = 4;
/// Exhaustive search refuses larger sets when degenerate maps are allowed.
pub const EXHAUSTIVE_BOUND_ANY: usize = 3;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct SolutionFilter {
    pub involutive: bool,
    pub non_degenerate: bool,
}

impl SolutionFilter {
    pub fn accepts(&self, sol: &SetSolution) -> bool {
        (!self.involutive || sol.is_involutive()) && (!self.non_degenerate || sol.is_non_degenerate())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    Exhaustive,
    /// Solutions of all structures of the given level, through the rule
    /// natural to that level.
    BraceGenerated(Level),
}

const UNSET: usize = usize::MAX;

#[derive(Clone)]
struct State {
    n: usize,
    filter: SolutionFilter,
    /// cell `x·n + y` holds `σ_x(y)·n + τ_y(x)`.
    cells: Vec<usize>,
    sigma_used: Vec<u64>,
    tau_used: Vec<u64>,
}

impl State {
    fn new(n: usize, filter: SolutionFilter) -> Self {
        State {
            n,
            filter,
            cells: vec![UNSET; n * n],
            sigma_used: vec![0; n],
            tau_used: vec![0; n],
        }
    }

    #[inline]
    fn r(&self, x: usize, y: usize) -> Option<(usize, usize)> {
        let v = self.cells[x * self.n + y];
        (v != UNSET).then(|| (v / self.n, v % self.n))
    }

    /// Writes `cell ↦ value` if the degeneracy bookkeeping allows it.
    fn put(&mut self, cell: usize, value: usize) -> bool {
        let n = self.n;
        let (x, y) = (cell / n, cell % n);
        let (s, t) = (value / n, value % n);
        if self.filter.non_degenerate {
            if self.sigma_used[x] >> s & 1 == 1 || self.tau_used[y] >> t & 1 == 1 {
                return false;
            }
            self.sigma_used[x] |= 1 << s;
            self.tau_used[y] |= 1 << t;
        }
        self.cells[cell] = value;
        true
    }

    fn clear(&mut self, cell: usize) {
        let n = self.n;
        let v = self.cells[cell];
        if self.filter.non_degenerate {
            let (x, y) = (cell / n, cell % n);
            self.sigma_used[x] &= !(1 << (v / n));
            self.tau_used[y] &= !(1 << (v % n));
        }
        self.cells[cell] = UNSET;
    }

    /// Every braid triple, compared component-wise wherever both sides are
    /// already determined.
    fn braid_consistent(&self) -> bool {
        let n = self.n;
        for eta in 0..n {
            for x in 0..n {
                let left1 = self.r(eta, x);
                for y in 0..n {
                    let right1 = self.r(x, y);
                    // left: (a,b) = ř(η,x); (c,d) = ř(b,y); (e,f) = ř(a,c) → (e,f,d)
                    let (mut l1, mut l2, mut l3) = (None, None, None);
                    if let Some((a, b)) = left1 {
                        if let Some((c, d)) = self.r(b, y) {
                            l3 = Some(d);
                            if let Some((e, f)) = self.r(a, c) {
                                l1 = Some(e);
                                l2 = Some(f);
                            }
                        }
                    }
                    // right: (a,b) = ř(x,y); (c,d) = ř(η,a); (e,f) = ř(d,b) → (c,e,f)
                    let (mut r1, mut r2, mut r3) = (None, None, None);
                    if let Some((a, b)) = right1 {
                        if let Some((c, d)) = self.r(eta, a) {
                            r1 = Some(c);
                            if let Some((e, f)) = self.r(d, b) {
                                r2 = Some(e);
                                r3 = Some(f);
                            }
                        }
                    }
                    let clash = |l: Option<usize>, r: Option<usize>| matches!((l, r), (Some(p), Some(q)) if p != q);
                    if clash(l1, r1) || clash(l2, r2) || clash(l3, r3) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Tries `cell ↦ value` (and its forced partner under involutivity).
    /// On success returns the cells written, to be undone by the caller.
    fn assign(&mut self, cell: usize, value: usize) -> Option<Vec<usize>> {
        if self.filter.involutive && value != cell && self.cells[value] != UNSET {
            return None;
        }
        if !self.put(cell, value) {
            return None;
        }
        let mut written = vec![cell];
        if self.filter.involutive && value != cell {
            if !self.put(value, cell) {
                self.clear(cell);
                return None;
            }
            written.push(value);
        }
        if self.braid_consistent() {
            Some(written)
        } else {
            for &c in written.iter().rev() {
                self.clear(c);
            }
            None
        }
    }

    fn search(&mut self, start: usize, out: &mut Vec<SetSolution>) {
        let n = self.n;
        let Some(cell) = (start..n * n).find(|&c| self.cells[c] == UNSET) else {
            out.push(self.to_solution());
            return;
        };
        for value in 0..n * n {
            if let Some(written) = self.assign(cell, value) {
                self.search(cell + 1, out);
                for &c in written.iter().rev() {
                    self.clear(c);
                }
            }
        }
    }

    fn to_solution(&self) -> SetSolution {
        let n = self.n;
        SetSolution::from_fns(n, |x, y| self.cells[x * n + y] / n, |y, x| self.cells[x * n + y] % n)
    }
}

fn finish(mut sols: Vec<SetSolution>, canonical: bool) -> Vec<SetSolution> {
    if canonical {
        sols = sols.par_iter().map(SetSolution::canonical_form).collect();
    }
    sols.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    sols.dedup();
    sols
}

/// Exhaustive search over all maps `ř` on `0..n` satisfying the braid
/// relation and `filter`, deduplicated up to relabeling when `canonical`.
pub fn enumerate_solutions(n: usize, filter: SolutionFilter, canonical: bool) -> Result<Vec<SetSolution>> {
    enumerate_solutions_in(n, filter, canonical, SearchMode::Exhaustive)
}

pub fn enumerate_solutions_in(
    n: usize,
    filter: SolutionFilter,
    canonical: bool,
    mode: SearchMode,
) -> Result<Vec<SetSolution>> {
    if n == 0 {
        return Err(Error::malformed("size", "size must be at least 1"));
    }
    match mode {
        SearchMode::Exhaustive => {
            let bound = if filter.non_degenerate {
                EXHAUSTIVE_BOUND_NON_DEGENERATE
            } else {
                EXHAUSTIVE_BOUND_ANY
            };
            if n > bound {
                return Err(Error::BoundExceeded { requested: n, bound });
            }
            let root = State::new(n, filter);
            let sols: Vec<SetSolution> = (0..n * n)
                .into_par_iter()
                .flat_map_iter(|value| {
                    let mut st = root.clone();
                    let mut out = Vec::new();
                    if st.assign(0, value).is_some() {
                        st.search(1, &mut out);
                    }
                    out
                })
                .collect();
            Ok(finish(sols, canonical))
        }
        SearchMode::BraceGenerated(level) => {
            let structures = enumerate_near_braces_with(n, level, &EnumerationOptions::default())?;
            let rule = Rule::for_level(level);
            let sols: Vec<SetSolution> = structures
                .par_iter()
                .map(|nb| {
                    let ar = nb.arith().expect("enumerated structures are groups");
                    solution_from_arith(&ar, rule)
                })
                .filter(|s| filter.accepts(s))
                .collect();
            Ok(finish(sols, canonical))
        }
    }
}
