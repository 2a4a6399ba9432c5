//! Finite associative rings (no unit required) and the adjoint-group brace
//! `a∘b = a·b + a + b`.

use serde::{Deserialize, Serialize};

use super::structure::{Level, NearBrace};
use super::table::{Failure, OpTable};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "RingWire", into = "RingWire")]
pub struct RingTable {
    add: OpTable,
    times: OpTable,
}

#[derive(Serialize, Deserialize)]
struct RingWire {
    size: usize,
    add: OpTable,
    times: OpTable,
}

impl TryFrom<RingWire> for RingTable {
    type Error = Error;

    fn try_from(w: RingWire) -> Result<Self> {
        if w.add.size() != w.size {
            return Err(Error::malformed("add", format!("size {} != {}", w.add.size(), w.size)));
        }
        RingTable::new(w.add, w.times)
    }
}

impl From<RingTable> for RingWire {
    fn from(r: RingTable) -> Self {
        RingWire {
            size: r.size(),
            add: r.add,
            times: r.times,
        }
    }
}

impl RingTable {
    pub fn new(add: OpTable, times: OpTable) -> Result<Self> {
        if add.size() != times.size() {
            return Err(Error::malformed(
                "times",
                format!("size {} differs from add size {}", times.size(), add.size()),
            ));
        }
        Ok(RingTable { add, times })
    }

    /// `Z/m` restricted to the multiples of `d` (requires `d | m`), with
    /// element `i` standing for `i·d`.
    pub fn multiples_mod(d: usize, m: usize) -> Self {
        assert!(d > 0 && m.is_multiple_of(d), "{d} must divide {m}");
        let n = m / d;
        let add = OpTable::from_fn(n, |a, b| (a + b) % n);
        let times = OpTable::from_fn(n, |a, b| ((a * d) * (b * d) % m) / d);
        RingTable { add, times }
    }

    /// The ring on `(Z/n, +)` whose products all vanish.
    pub fn zero_ring(n: usize) -> Self {
        RingTable {
            add: OpTable::from_fn(n, |a, b| (a + b) % n),
            times: OpTable::from_fn(n, |_, _| 0),
        }
    }

    pub fn size(&self) -> usize {
        self.add.size()
    }

    pub fn add(&self) -> &OpTable {
        &self.add
    }

    pub fn times(&self) -> &OpTable {
        &self.times
    }

    /// Ring axioms, first witness per failing axiom.
    pub fn failures(&self) -> Vec<Failure> {
        let add = match self.add.to_group_named("add") {
            Ok(g) => g,
            Err(f) => return vec![f],
        };
        let n = self.size();
        let mut out = Vec::new();
        if let Some(w) = self.add.commutativity_witness() {
            out.push(Failure::new("add.commutativity", w));
        }
        if let Some(w) = self.times.associativity_witness() {
            out.push(Failure::new("times.associativity", w));
        }
        let t = |a, b| self.times.get(a, b);
        let triples = || (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| [a, b, c])));
        if let Some([a, b, c]) = triples().find(|&[a, b, c]| t(a, add.op(b, c)) != add.op(t(a, b), t(a, c))) {
            out.push(Failure::new("left_distributivity", vec![a, b, c]));
        }
        if let Some([a, b, c]) = triples().find(|&[a, b, c]| t(add.op(a, b), c) != add.op(t(a, c), t(b, c))) {
            out.push(Failure::new("right_distributivity", vec![a, b, c]));
        }
        out
    }
}

/// Builds the left brace `(N, +, ∘)` with `a∘b = a·b + a + b`.
///
/// Fails with [`Error::NotRadical`] naming the first element without a
/// `∘`-inverse, i.e. when the ring is not radical.
pub fn brace_from_radical_ring(ring: &RingTable) -> Result<NearBrace> {
    if let Some(f) = ring.failures().into_iter().next() {
        return Err(Error::Hypothesis(format!(
            "not an associative ring: `{}` fails at {:?}",
            f.axiom, f.witness
        )));
    }
    let n = ring.size();
    let add = ring.add();
    let circ = OpTable::from_fn(n, |a, b| add.get(add.get(ring.times().get(a, b), a), b));
    let zero = add.identity().expect("ring addition is a group");
    for a in 0..n {
        let has_inverse = (0..n).any(|b| circ.get(a, b) == zero && circ.get(b, a) == zero);
        if !has_inverse {
            return Err(Error::NotRadical { element: a });
        }
    }
    NearBrace::new(add.clone(), circ, Level::LeftBrace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::structure::verify_structure;

    #[test]
    fn even_residues_mod_8_give_a_brace() {
        let ring = RingTable::multiples_mod(2, 8);
        assert!(ring.failures().is_empty());
        let nb = brace_from_radical_ring(&ring).unwrap();
        // index 1 is the residue 2: 2·2 + 2 + 2 = 8 ≡ 0.
        assert_eq!(nb.mul().get(1, 1), 0);
        assert!(verify_structure(&nb, Level::LeftBrace).valid);
    }

    #[test]
    fn zero_ring_gives_trivial_brace() {
        let ring = RingTable::zero_ring(5);
        let nb = brace_from_radical_ring(&ring).unwrap();
        assert_eq!(nb.mul(), nb.add());
    }

    #[test]
    fn unital_z2_is_not_radical() {
        let ring = RingTable::multiples_mod(1, 2);
        assert_eq!(brace_from_radical_ring(&ring), Err(Error::NotRadical { element: 1 }));
    }

    #[test]
    fn non_ring_is_refused() {
        let add = OpTable::from_fn(2, |a, b| a ^ b);
        let times = OpTable::from_fn(2, |_, _| 1);
        let ring = RingTable::new(add, times).unwrap();
        assert!(matches!(brace_from_radical_ring(&ring), Err(Error::Hypothesis(_))));
    }
}
