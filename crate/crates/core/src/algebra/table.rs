//! Finite binary operations stored as dense Cayley tables over `0..n`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A binary operation on `0..n`, row-major: `get(a, b)` is `a · b`.
///
/// Construction validates shape and index range. No algebraic law is
/// assumed; see [`OpTable::to_group`].
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct OpTable {
    n: usize,
    cells: Vec<usize>,
}

/// One failed axiom together with the lexicographically first witness.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Failure {
    pub axiom: String,
    pub witness: Vec<usize>,
}

impl Failure {
    pub fn new(axiom: impl Into<String>, witness: Vec<usize>) -> Self {
        Failure {
            axiom: axiom.into(),
            witness,
        }
    }
}

impl OpTable {
    pub fn new(n: usize, cells: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::malformed("table", "size must be at least 1"));
        }
        if cells.len() != n * n {
            return Err(Error::malformed(
                "table",
                format!("expected {} cells, found {}", n * n, cells.len()),
            ));
        }
        if let Some(pos) = cells.iter().position(|&v| v >= n) {
            return Err(Error::malformed(
                "table",
                format!(
                    "entry ({}, {}) = {} is out of range 0..{}",
                    pos / n,
                    pos % n,
                    cells[pos],
                    n
                ),
            ));
        }
        Ok(OpTable { n, cells })
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::malformed(
                "table",
                format!("row {i} has length {}, expected {n}", row.len()),
            ));
        }
        OpTable::new(n, rows.concat())
    }

    /// Builds a table from a closure. Panics if the closure leaves `0..n`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut cells = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let v = f(a, b);
                assert!(v < n, "from_fn produced {v} outside 0..{n}");
                cells.push(v);
            }
        }
        OpTable { n, cells }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.n + b]
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    pub fn transpose(&self) -> OpTable {
        OpTable::from_fn(self.n, |a, b| self.get(b, a))
    }

    /// Transports the operation along the bijection `perm`: the result `t`
    /// satisfies `t(perm[a], perm[b]) = perm[self(a, b)]`.
    pub fn relabel(&self, perm: &[usize]) -> OpTable {
        let n = self.n;
        let mut cells = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                cells[perm[a] * n + perm[b]] = perm[self.get(a, b)];
            }
        }
        OpTable { n, cells }
    }

    pub fn associativity_witness(&self) -> Option<Vec<usize>> {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let ab = self.get(a, b);
                for c in 0..n {
                    if self.get(ab, c) != self.get(a, self.get(b, c)) {
                        return Some(vec![a, b, c]);
                    }
                }
            }
        }
        None
    }

    pub fn commutativity_witness(&self) -> Option<Vec<usize>> {
        let n = self.n;
        for a in 0..n {
            for b in (a + 1)..n {
                if self.get(a, b) != self.get(b, a) {
                    return Some(vec![a, b]);
                }
            }
        }
        None
    }

    /// The two-sided identity, if one exists.
    pub fn identity(&self) -> Option<usize> {
        (0..self.n).find(|&e| (0..self.n).all(|x| self.get(e, x) == x && self.get(x, e) == x))
    }

    /// Checks the group axioms in order (associativity, identity, inverses)
    /// and returns the first failure, with the axiom name prefixed by `name`.
    pub fn to_group_named(&self, name: &str) -> std::result::Result<GroupTable, Failure> {
        if let Some(w) = self.associativity_witness() {
            return Err(Failure::new(format!("{name}.associativity"), w));
        }
        let Some(e) = self.identity() else {
            return Err(Failure::new(format!("{name}.identity"), vec![]));
        };
        let mut inverse = Vec::with_capacity(self.n);
        for a in 0..self.n {
            match (0..self.n).find(|&b| self.get(a, b) == e && self.get(b, a) == e) {
                Some(b) => inverse.push(b),
                None => return Err(Failure::new(format!("{name}.inverse"), vec![a])),
            }
        }
        Ok(GroupTable {
            table: self.clone(),
            identity: e,
            inverse,
        })
    }

    pub fn to_group(&self) -> std::result::Result<GroupTable, Failure> {
        self.to_group_named("op")
    }
}

impl TryFrom<Vec<Vec<usize>>> for OpTable {
    type Error = Error;

    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        OpTable::from_rows(&rows)
    }
}

impl From<OpTable> for Vec<Vec<usize>> {
    fn from(t: OpTable) -> Self {
        t.rows()
    }
}

/// A verified finite group: table, identity and inverse map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupTable {
    table: OpTable,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    pub fn new(table: OpTable) -> Result<Self> {
        table
            .to_group()
            .map_err(|f| Error::malformed("group", format!("`{}` fails at {:?}", f.axiom, f.witness)))
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table.get(a, b)
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn size(&self) -> usize {
        self.table.size()
    }

    pub fn table(&self) -> &OpTable {
        &self.table
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverse
    }

    pub fn is_abelian(&self) -> bool {
        self.table.commutativity_witness().is_none()
    }

    pub fn is_central(&self, c: usize) -> bool {
        (0..self.size()).all(|x| self.op(c, x) == self.op(x, c))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.size()).filter(|&c| self.is_central(c)).collect()
    }

    /// Cyclic group `Z/n` under addition.
    pub fn cyclic(n: usize) -> Self {
        GroupTable::new(OpTable::from_fn(n, |a, b| (a + b) % n)).expect("Z/n is a group")
    }

    /// The symmetric group on three letters, elements numbered by the
    /// lexicographic order of their one-line notation.
    pub fn symmetric3() -> Self {
        use itertools::Itertools;
        let perms: Vec<Vec<usize>> = (0..3).permutations(3).collect();
        let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let table = OpTable::from_fn(6, |a, b| {
            let composed: Vec<usize> = (0..3).map(|i| perms[a][perms[b][i]]).collect();
            index(&composed)
        });
        GroupTable::new(table).expect("S3 is a group")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range_entries() {
        let err = OpTable::from_rows(&[vec![0, 1], vec![1, 2]]).unwrap_err();
        assert!(matches!(err, Error::MalformedTable { .. }));
    }

    #[test]
    fn rejects_ragged_rows() {
        assert!(OpTable::from_rows(&[vec![0, 1], vec![1]]).is_err());
        assert!(OpTable::from_rows(&[]).is_err());
    }

    #[test]
    fn nonassociative_table_reports_first_triple() {
        // a·b = a + b + 1 mod 2 is associative; flipping one cell breaks it.
        let t = OpTable::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        let bad = OpTable::from_rows(&[vec![1, 0], vec![0, 0]]).unwrap();
        assert!(t.associativity_witness().is_none());
        assert_eq!(bad.associativity_witness(), Some(vec![0, 0, 1]));
    }

    #[test]
    fn s3_is_nonabelian_with_trivial_center() {
        let g = GroupTable::symmetric3();
        assert_eq!(g.identity(), 0);
        assert!(!g.is_abelian());
        assert_eq!(g.center(), vec![0]);
        for a in 0..6 {
            assert_eq!(g.op(a, g.inv(a)), 0);
        }
    }

    #[test]
    fn relabel_transports_structure() {
        let g = GroupTable::cyclic(4);
        let perm = [2, 0, 3, 1];
        let t = g.table().relabel(&perm);
        let h = t.to_group().unwrap();
        assert_eq!(h.identity(), perm[0]);
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(h.op(perm[a], perm[b]), perm[g.op(a, b)]);
            }
        }
    }
}
