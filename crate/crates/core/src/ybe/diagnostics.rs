use serde::{Deserialize, Serialize};

use super::addition::reconstructed_addition_table;
use super::solution::SetSolution;
use crate::algebra::{GroupTable, OpTable};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SolutionDiagnostics {
    pub non_degenerate: bool,
    pub involutive: bool,
    pub invertible: bool,
    /// `σ̂_x(y)` where `ř⁻¹(x, y) = (σ̂_x(y), τ̂_y(x))`.
    pub sigma_hat: Option<OpTable>,
    /// `τ̂_y(x)`, stored like `tau`.
    pub tau_hat: Option<OpTable>,
    pub ide1_ok: bool,
    /// `σ̂_x(y) = x∘(x⁻¹ + y)` with `+` reconstructed from `σ` and `∘`.
    pub mapzz2_form_ok: Option<bool>,
}

/// Inverts `ř` as a bijection of `X × X`, returning `(σ̂, τ̂)`.
pub fn invert(sol: &SetSolution) -> Option<(OpTable, OpTable)> {
    let n = sol.size();
    let mut pre = vec![None; n * n];
    for x in 0..n {
        for y in 0..n {
            let (u, v) = sol.apply(x, y);
            if pre[u * n + v].replace((x, y)).is_some() {
                return None;
            }
        }
    }
    let pre_of = |u: usize, v: usize| pre[u * n + v].expect("injective on a finite set is onto");
    let sigma_hat = OpTable::from_fn(n, |x, y| pre_of(x, y).0);
    let tau_hat = OpTable::from_fn(n, |y, x| pre_of(x, y).1);
    Some((sigma_hat, tau_hat))
}

fn ide1_holds(sol: &SetSolution, sh: &OpTable, th: &OpTable) -> bool {
    let n = sol.size();
    (0..n).all(|x| {
        (0..n).all(|y| {
            let (s, t) = (sol.sigma(x, y), sol.tau(y, x));
            let (hs, ht) = (sh.get(x, y), th.get(y, x));
            sol.sigma(hs, ht) == x && sh.get(s, t) == x && sol.tau(ht, hs) == y && th.get(t, s) == y
        })
    })
}

/// Non-degeneracy, involutivity and the inverse maps of `ř`.
///
/// With `mul` supplied, also tests whether `σ̂_x(y) = x∘(x⁻¹ + y)` for the
/// addition `y + x := x∘σ_{x⁻¹}(y)` reconstructed from `sol`.
pub fn diagnostics(sol: &SetSolution, mul: Option<&GroupTable>) -> Result<SolutionDiagnostics> {
    let n = sol.size();
    if let Some(m) = mul {
        if m.size() != n {
            return Err(Error::SetMismatch {
                expected: n,
                found: m.size(),
            });
        }
    }
    let inverse = invert(sol);
    let ide1_ok = inverse.as_ref().is_some_and(|(sh, th)| ide1_holds(sol, sh, th));
    let mapzz2_form_ok = mul.map(|m| match &inverse {
        None => false,
        Some((sh, _)) => {
            let add = reconstructed_addition_table(sol, m);
            (0..n).all(|x| (0..n).all(|y| sh.get(x, y) == m.op(x, add.get(m.inv(x), y))))
        }
    });
    let (sigma_hat, tau_hat) = match inverse {
        Some((s, t)) => (Some(s), Some(t)),
        None => (None, None),
    };
    Ok(SolutionDiagnostics {
        non_degenerate: sol.is_non_degenerate(),
        involutive: sol.is_involutive(),
        invertible: sigma_hat.is_some() && ide1_ok,
        sigma_hat,
        tau_hat,
        ide1_ok,
        mapzz2_form_ok,
    })
}
