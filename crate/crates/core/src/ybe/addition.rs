//! Recovering the near-brace addition `y + x := x∘σ_{x⁻¹}(y)` from a
//! solution and a group structure `∘` on the same set.

use serde::{Deserialize, Serialize};

use super::construct::{solution_from_arith, Rule};
use super::solution::SetSolution;
use crate::algebra::structure::level_failures;
use crate::algebra::{Arith, GroupTable, Level, OpTable};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AdditionReport {
    /// `add_table.get(y, x) = y + x`.
    pub add_table: OpTable,
    pub associative: bool,
    pub group: bool,
    pub abelian: bool,
    /// `a∘(b+c) = a∘b − a∘0 + a∘c` for all triples (requires `group`).
    pub distributivity_ok: bool,
    /// `φ(a) = −(a∘0)`, present when `+` is a group.
    pub phi_table: Option<Vec<usize>>,
    /// Whether rebuilding the solution from `(+, ∘)` with the near rule gives
    /// back the input exactly. Present when `+` is a group obeying the
    /// near-brace law.
    pub round_trip: Option<bool>,
}

pub(crate) fn reconstructed_addition_table(sol: &SetSolution, mul: &GroupTable) -> OpTable {
    OpTable::from_fn(sol.size(), |y, x| mul.op(x, sol.sigma(mul.inv(x), y)))
}

pub fn reconstruct_addition(sol: &SetSolution, mul: &GroupTable) -> Result<AdditionReport> {
    if mul.size() != sol.size() {
        return Err(Error::SetMismatch {
            expected: sol.size(),
            found: mul.size(),
        });
    }
    let add_table = reconstructed_addition_table(sol, mul);
    let associative = add_table.associativity_witness().is_none();
    let abelian = add_table.commutativity_witness().is_none();
    let (group, distributivity_ok, phi_table, round_trip) = match add_table.to_group() {
        Err(_) => (false, false, None, None),
        Ok(add) => {
            let ar = Arith { add, mul: mul.clone() };
            let dist = !level_failures(&ar, Level::NearBrace)
                .iter()
                .any(|f| f.axiom == "near_distributivity");
            let phi = (0..sol.size()).map(|a| ar.phi(a)).collect();
            let rt = dist.then(|| solution_from_arith(&ar, Rule::Near) == *sol);
            (true, dist, Some(phi), rt)
        }
    };
    Ok(AdditionReport {
        add_table,
        associative,
        group,
        abelian,
        distributivity_ok,
        phi_table,
        round_trip,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{brace_from_radical_ring, RingTable};
    use crate::ybe::solution_from_structure;

    #[test]
    fn recovers_radical_brace_addition() {
        let nb = brace_from_radical_ring(&RingTable::multiples_mod(2, 8)).unwrap();
        let sol = solution_from_structure(&nb, Rule::Rump).unwrap();
        let mul = GroupTable::new(nb.mul().clone()).unwrap();
        let rep = reconstruct_addition(&sol, &mul).unwrap();
        assert_eq!(&rep.add_table, nb.add());
        assert!(rep.group && rep.abelian && rep.distributivity_ok);
        // φ(a) = −a because a∘0 = a in a brace.
        assert_eq!(rep.phi_table, Some(vec![0, 3, 2, 1]));
        assert_eq!(rep.round_trip, Some(true));
    }

    #[test]
    fn flip_with_abelian_circle_gives_circle() {
        let g = GroupTable::cyclic(4);
        let rep = reconstruct_addition(&SetSolution::flip(4), &g).unwrap();
        assert_eq!(&rep.add_table, g.table());
        assert!(rep.abelian && rep.round_trip == Some(true));
    }

    #[test]
    fn flip_with_nonabelian_circle_gives_opposite_group() {
        let g = GroupTable::symmetric3();
        let rep = reconstruct_addition(&SetSolution::flip(6), &g).unwrap();
        // y + x = x∘y.
        assert_eq!(rep.add_table, g.table().transpose());
        assert!(rep.group && !rep.abelian);
    }
}
