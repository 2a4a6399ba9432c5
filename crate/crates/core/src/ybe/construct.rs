//! Solutions built from braces, skew braces and near braces.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::solution::SetSolution;
use crate::algebra::structure::level_failures;
use crate::algebra::{require_level, Arith, Level, NearBrace};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// `σ_a(b) = a∘b − a` on a left brace.
    Rump,
    /// `σ_a(b) = −a + a∘b` on a left skew brace.
    Gv,
    /// `σ_a(b) = a∘b − a∘0 + 1` on a near brace.
    Near,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::Rump => "rump",
            Rule::Gv => "gv",
            Rule::Near => "near",
        }
    }

    /// The natural rule for a structure of the given level.
    pub fn for_level(level: Level) -> Rule {
        match level {
            Level::LeftBrace => Rule::Rump,
            Level::SkewBrace => Rule::Gv,
            Level::NearBrace | Level::SingularNearBrace => Rule::Near,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rump" => Ok(Rule::Rump),
            "gv" => Ok(Rule::Gv),
            "near" => Ok(Rule::Near),
            _ => Err(Error::Parse(format!("unknown rule `{s}`"))),
        }
    }
}

/// Left skew brace: both groups, `0 = 1`, left distributivity. Commutativity
/// of `+` and right distributivity are not needed.
fn require_left_skew_brace(nb: &NearBrace) -> Result<Arith> {
    let mismatch = |axiom: String, witness: Vec<usize>| Error::LevelMismatch {
        level: "left_skew_brace".into(),
        axiom,
        witness,
    };
    let ar = nb.arith().map_err(|f| mismatch(f.axiom, f.witness))?;
    match level_failures(&ar, Level::LeftBrace)
        .into_iter()
        .find(|f| f.axiom != "add.commutativity")
    {
        Some(f) => Err(mismatch(f.axiom, f.witness)),
        None => Ok(ar),
    }
}

/// Computes `ř(a, b) = (σ_a(b), σ_a(b)⁻¹ ∘ a ∘ b)` with `σ` given by `rule`.
///
/// The structure must satisfy the axioms the rule needs (left brace for
/// `rump`, left skew brace for `gv`, near brace for `near`); otherwise the
/// first missing axiom is returned as [`Error::LevelMismatch`].
pub fn solution_from_structure(nb: &NearBrace, rule: Rule) -> Result<SetSolution> {
    let ar = match rule {
        Rule::Rump => require_level(nb, Level::LeftBrace)?,
        Rule::Gv => require_left_skew_brace(nb)?,
        Rule::Near => require_level(nb, Level::NearBrace)?,
    };
    Ok(solution_from_arith(&ar, rule))
}

pub(crate) fn solution_from_arith(ar: &Arith, rule: Rule) -> SetSolution {
    let n = ar.size();
    let (zero, one) = (ar.zero(), ar.one());
    let sigma = |a: usize, b: usize| match rule {
        Rule::Rump => ar.minus(ar.circ(a, b), a),
        Rule::Gv => ar.plus(ar.neg(a), ar.circ(a, b)),
        Rule::Near => ar.plus(ar.minus(ar.circ(a, b), ar.circ(a, zero)), one),
    };
    SetSolution::from_fns(n, sigma, |b, a| ar.circ(ar.circ(ar.cinv(sigma(a, b)), a), b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{brace_from_radical_ring, GroupTable, OpTable, RingTable};

    #[test]
    fn trivial_brace_gives_the_flip() {
        let nb = NearBrace::trivial(&GroupTable::cyclic(5));
        assert_eq!(solution_from_structure(&nb, Rule::Rump).unwrap(), SetSolution::flip(5));
    }

    #[test]
    fn radical_brace_sends_2_2_to_6_6() {
        let nb = brace_from_radical_ring(&RingTable::multiples_mod(2, 8)).unwrap();
        let s = solution_from_structure(&nb, Rule::Rump).unwrap();
        // indices 1 and 3 stand for the residues 2 and 6.
        assert_eq!(s.apply(1, 1), (3, 3));
    }

    #[test]
    fn gv_on_trivial_skew_brace_is_conjugation() {
        let g = GroupTable::symmetric3();
        let nb = NearBrace::trivial(&g);
        let s = solution_from_structure(&nb, Rule::Gv).unwrap();
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(s.apply(a, b), (b, g.op(g.op(g.inv(b), a), b)));
            }
        }
    }

    #[test]
    fn near_rule_matches_rump_when_zero_is_one() {
        let nb = brace_from_radical_ring(&RingTable::multiples_mod(2, 8)).unwrap();
        assert_eq!(
            solution_from_structure(&nb, Rule::Near).unwrap(),
            solution_from_structure(&nb, Rule::Rump).unwrap()
        );
    }

    #[test]
    fn level_mismatch_names_the_axiom() {
        let add = GroupTable::cyclic(3).table().clone();
        let mul = OpTable::from_fn(3, |a, b| (a + b + 1) % 3);
        let nb = NearBrace::new(add, mul, Level::NearBrace).unwrap();
        match solution_from_structure(&nb, Rule::Rump) {
            Err(Error::LevelMismatch { axiom, .. }) => assert_eq!(axiom, "zero_equals_one"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(solution_from_structure(&nb, Rule::Near).is_ok());
    }
}
