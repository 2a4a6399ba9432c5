//! The set-theoretic braid relation
//! `(ř×id)(id×ř)(ř×id) = (id×ř)(ř×id)(id×ř)` on `X³`, checked directly and
//! through its three component constraints.

use serde::{Deserialize, Serialize};

use super::solution::SetSolution;
use crate::report::Check;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BraidReport {
    pub passed: bool,
    /// Composition of the two sides on every triple `(η, x, y)`.
    pub direct: Check,
    /// `σ_η(σ_x(y)) = σ_{σ_η(x)}(σ_{τ_x(η)}(y))`.
    pub c1: Check,
    /// `τ_y(τ_x(η)) = τ_{τ_y(x)}(τ_{σ_x(y)}(η))`.
    pub c2: Check,
    /// `τ_{σ_{τ_x(η)}(y)}(σ_η(x)) = σ_{τ_{σ_x(y)}(η)}(τ_y(x))`.
    pub c3: Check,
    /// Whether the direct verdict equals `c1 ∧ c2 ∧ c3`.
    pub agree: bool,
}

/// Left side `(ř×id)(id×ř)(ř×id)` applied to `(η, x, y)`.
pub fn braid_left(sol: &SetSolution, eta: usize, x: usize, y: usize) -> [usize; 3] {
    let (a, b) = sol.apply(eta, x);
    let (c, d) = sol.apply(b, y);
    let (e, f) = sol.apply(a, c);
    [e, f, d]
}

/// Right side `(id×ř)(ř×id)(id×ř)` applied to `(η, x, y)`.
pub fn braid_right(sol: &SetSolution, eta: usize, x: usize, y: usize) -> [usize; 3] {
    let (a, b) = sol.apply(x, y);
    let (c, d) = sol.apply(eta, a);
    let (e, f) = sol.apply(d, b);
    [c, e, f]
}

fn first_triple(n: usize, mut bad: impl FnMut(usize, usize, usize) -> bool) -> Option<Vec<usize>> {
    for eta in 0..n {
        for x in 0..n {
            for y in 0..n {
                if bad(eta, x, y) {
                    return Some(vec![eta, x, y]);
                }
            }
        }
    }
    None
}

/// Checks the braid relation over all `n³` triples, both as a direct
/// composition and constraint by constraint. Witnesses are the
/// lexicographically first failing `(η, x, y)`.
pub fn verify_braid(sol: &SetSolution) -> BraidReport {
    let n = sol.size();
    let s = |x, y| sol.sigma(x, y);
    let t = |y, x| sol.tau(y, x);

    let direct = Check::from_witness(first_triple(n, |e, x, y| {
        braid_left(sol, e, x, y) != braid_right(sol, e, x, y)
    }));
    let c1 = Check::from_witness(first_triple(n, |e, x, y| s(e, s(x, y)) != s(s(e, x), s(t(x, e), y))));
    let c2 = Check::from_witness(first_triple(n, |e, x, y| t(y, t(x, e)) != t(t(y, x), t(s(x, y), e))));
    let c3 = Check::from_witness(first_triple(n, |e, x, y| {
        t(s(t(x, e), y), s(e, x)) != s(t(s(x, y), e), t(y, x))
    }));
    let components = c1.passed() && c2.passed() && c3.passed();
    BraidReport {
        passed: direct.passed(),
        agree: direct.passed() == components,
        direct,
        c1,
        c2,
        c3,
    }
}
