//! Braces, skew braces and near braces as pairs of Cayley tables, and the
//! exhaustive axiom checker.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::table::{Failure, GroupTable, OpTable};
use crate::error::{Error, Result};

/// Which family of axioms a structure is meant to satisfy.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    /// Abelian `+`, `0 = 1`, `a∘(b+c) = a∘b − a + a∘c`.
    LeftBrace,
    /// Left law plus `(b+c)∘a = b∘a − a + c∘a`; `+` need not commute.
    SkewBrace,
    /// `a∘(b+c) = a∘b − a∘0 + a∘c`; `0` and `1` may differ.
    NearBrace,
    /// Near brace with `a − a∘0 = 1 = −a∘0 + a`.
    SingularNearBrace,
}

impl Level {
    pub const ALL: [Level; 4] = [
        Level::LeftBrace,
        Level::SkewBrace,
        Level::NearBrace,
        Level::SingularNearBrace,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Level::LeftBrace => "left_brace",
            Level::SkewBrace => "skew_brace",
            Level::NearBrace => "near_brace",
            Level::SingularNearBrace => "singular_near_brace",
        }
    }

    pub fn requires_zero_is_one(self) -> bool {
        matches!(self, Level::LeftBrace | Level::SkewBrace)
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Level::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown level `{s}`")))
    }
}

/// A set `0..size` with an addition table, a multiplication table and the
/// level it claims. The claim is never trusted; see [`verify_structure`].
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "NearBraceWire", into = "NearBraceWire")]
pub struct NearBrace {
    add: OpTable,
    mul: OpTable,
    kind: Level,
}

#[derive(Serialize, Deserialize)]
struct NearBraceWire {
    size: usize,
    add: OpTable,
    mul: OpTable,
    kind: Level,
}

impl TryFrom<NearBraceWire> for NearBrace {
    type Error = Error;

    fn try_from(w: NearBraceWire) -> Result<Self> {
        if w.add.size() != w.size {
            return Err(Error::malformed("add", format!("size {} != {}", w.add.size(), w.size)));
        }
        NearBrace::new(w.add, w.mul, w.kind)
    }
}

impl From<NearBrace> for NearBraceWire {
    fn from(nb: NearBrace) -> Self {
        NearBraceWire {
            size: nb.size(),
            add: nb.add,
            mul: nb.mul,
            kind: nb.kind,
        }
    }
}

impl NearBrace {
    pub fn new(add: OpTable, mul: OpTable, kind: Level) -> Result<Self> {
        if add.size() != mul.size() {
            return Err(Error::malformed(
                "mul",
                format!("size {} differs from add size {}", mul.size(), add.size()),
            ));
        }
        Ok(NearBrace { add, mul, kind })
    }

    pub fn size(&self) -> usize {
        self.add.size()
    }

    pub fn add(&self) -> &OpTable {
        &self.add
    }

    pub fn mul(&self) -> &OpTable {
        &self.mul
    }

    pub fn kind(&self) -> Level {
        self.kind
    }

    pub fn with_kind(mut self, kind: Level) -> Self {
        self.kind = kind;
        self
    }

    pub fn relabel(&self, perm: &[usize]) -> NearBrace {
        NearBrace {
            add: self.add.relabel(perm),
            mul: self.mul.relabel(perm),
            kind: self.kind,
        }
    }

    /// The trivial brace on a group: `+ = ∘`.
    pub fn trivial(group: &GroupTable) -> NearBrace {
        let kind = if group.is_abelian() {
            Level::LeftBrace
        } else {
            Level::SkewBrace
        };
        NearBrace {
            add: group.table().clone(),
            mul: group.table().clone(),
            kind,
        }
    }

    /// Both group structures, or the first group-axiom failure.
    pub fn arith(&self) -> std::result::Result<Arith, Failure> {
        let add = self.add.to_group_named("add")?;
        let mul = self.mul.to_group_named("mul")?;
        Ok(Arith { add, mul })
    }
}

/// Validated `(B, +)` and `(B, ∘)` with the derived operations used
/// throughout: subtraction, `∘`-inverses, `φ(a) = −a∘0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arith {
    pub add: GroupTable,
    pub mul: GroupTable,
}

impl Arith {
    #[inline]
    pub fn plus(&self, a: usize, b: usize) -> usize {
        self.add.op(a, b)
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.add.inv(a)
    }

    /// `a − b`, i.e. `a + (−b)`.
    #[inline]
    pub fn minus(&self, a: usize, b: usize) -> usize {
        self.add.op(a, self.add.inv(b))
    }

    #[inline]
    pub fn circ(&self, a: usize, b: usize) -> usize {
        self.mul.op(a, b)
    }

    #[inline]
    pub fn cinv(&self, a: usize) -> usize {
        self.mul.inv(a)
    }

    pub fn zero(&self) -> usize {
        self.add.identity()
    }

    pub fn one(&self) -> usize {
        self.mul.identity()
    }

    pub fn size(&self) -> usize {
        self.add.size()
    }

    pub fn phi(&self, a: usize) -> usize {
        self.neg(self.circ(a, self.zero()))
    }
}

/// A derived fact value in a [`StructureReport`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Derived {
    Bool(bool),
    Element(usize),
    Table(Vec<usize>),
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct StructureReport {
    pub level: Level,
    pub valid: bool,
    pub failures: Vec<Failure>,
    pub derived: BTreeMap<String, Derived>,
}

fn first_triple(n: usize, mut bad: impl FnMut(usize, usize, usize) -> bool) -> Option<Vec<usize>> {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if bad(a, b, c) {
                    return Some(vec![a, b, c]);
                }
            }
        }
    }
    None
}

/// Axioms beyond the two group laws, checked on validated arithmetic.
/// Each failing axiom contributes one entry with its first witness.
pub(crate) fn level_failures(ar: &Arith, level: Level) -> Vec<Failure> {
    let n = ar.size();
    let (zero, one) = (ar.zero(), ar.one());
    let mut out = Vec::new();
    let mut push = |axiom: &str, w: Option<Vec<usize>>| {
        if let Some(w) = w {
            out.push(Failure::new(axiom, w));
        }
    };

    if level.requires_zero_is_one() && zero != one {
        push("zero_equals_one", Some(vec![zero, one]));
    }
    if level == Level::LeftBrace {
        push("add.commutativity", ar.add.table().commutativity_witness());
    }
    match level {
        Level::LeftBrace | Level::SkewBrace => {
            push(
                "left_distributivity",
                first_triple(n, |a, b, c| {
                    ar.circ(a, ar.plus(b, c)) != ar.plus(ar.minus(ar.circ(a, b), a), ar.circ(a, c))
                }),
            );
            if level == Level::SkewBrace {
                push(
                    "right_distributivity",
                    first_triple(n, |a, b, c| {
                        ar.circ(ar.plus(b, c), a) != ar.plus(ar.minus(ar.circ(b, a), a), ar.circ(c, a))
                    }),
                );
            }
        }
        Level::NearBrace | Level::SingularNearBrace => {
            push(
                "near_distributivity",
                first_triple(n, |a, b, c| {
                    ar.circ(a, ar.plus(b, c)) != ar.plus(ar.minus(ar.circ(a, b), ar.circ(a, zero)), ar.circ(a, c))
                }),
            );
        }
    }
    if level == Level::SingularNearBrace {
        push(
            "singular_left",
            (0..n).find(|&a| ar.minus(a, ar.circ(a, zero)) != one).map(|a| vec![a]),
        );
        push(
            "singular_right",
            (0..n)
                .find(|&a| ar.plus(ar.neg(ar.circ(a, zero)), a) != one)
                .map(|a| vec![a]),
        );
        // Consequences that must hold in every singular near brace.
        if ar.circ(zero, zero) != ar.neg(one) {
            push("zero_circ_zero_is_minus_one", Some(vec![zero]));
        }
        if ar.plus(one, one) != ar.cinv(zero) {
            push("one_plus_one_is_circ_inverse_of_zero", Some(vec![one]));
        }
        push(
            "one_plus_a_commutes",
            (0..n).find(|&a| ar.plus(one, a) != ar.plus(a, one)).map(|a| vec![a]),
        );
    }
    out
}

/// Quick yes/no for the enumeration filters; no witness bookkeeping.
pub(crate) fn satisfies(ar: &Arith, level: Level) -> bool {
    level_failures(ar, level).is_empty()
}

fn derived_facts(ar: &Arith, level: Level) -> BTreeMap<String, Derived> {
    let n = ar.size();
    let (zero, one) = (ar.zero(), ar.one());
    let mut d = BTreeMap::new();
    d.insert("zero".into(), Derived::Element(zero));
    d.insert("one".into(), Derived::Element(one));
    d.insert("zero==one".into(), Derived::Bool(zero == one));
    d.insert("add_abelian".into(), Derived::Bool(ar.add.is_abelian()));
    d.insert("mul_abelian".into(), Derived::Bool(ar.mul.is_abelian()));
    d.insert("phi".into(), Derived::Table((0..n).map(|a| ar.phi(a)).collect()));
    d.insert("phi_hat(0)".into(), Derived::Element(ar.phi(zero)));
    d.insert(
        "singular".into(),
        Derived::Bool(
            (0..n).all(|a| ar.minus(a, ar.circ(a, zero)) == one && ar.plus(ar.neg(ar.circ(a, zero)), a) == one),
        ),
    );
    if level == Level::SingularNearBrace {
        d.insert("0∘0 = −1".into(), Derived::Bool(ar.circ(zero, zero) == ar.neg(one)));
        d.insert("1+1 = 0⁻¹".into(), Derived::Bool(ar.plus(one, one) == ar.cinv(zero)));
        d.insert(
            "1+a = a+1".into(),
            Derived::Bool((0..n).all(|a| ar.plus(one, a) == ar.plus(a, one))),
        );
    }
    d
}

/// Exhaustively checks every axiom of `level` on `nb`.
///
/// Group-law failures stop the check (nothing else is well defined without
/// them); every other failing axiom is listed with its first witness.
pub fn verify_structure(nb: &NearBrace, level: Level) -> StructureReport {
    let (failures, derived) = match nb.arith() {
        Err(f) => (vec![f], BTreeMap::new()),
        Ok(ar) => (level_failures(&ar, level), derived_facts(&ar, level)),
    };
    StructureReport {
        level,
        valid: failures.is_empty(),
        failures,
        derived,
    }
}

/// Verifies `nb` at `level` and hands back its arithmetic, or the first
/// missing axiom as an error.
pub fn require_level(nb: &NearBrace, level: Level) -> Result<Arith> {
    let mismatch = |f: &Failure| Error::LevelMismatch {
        level: level.to_string(),
        axiom: f.axiom.clone(),
        witness: f.witness.clone(),
    };
    let ar = nb.arith().map_err(|f| mismatch(&f))?;
    match level_failures(&ar, level).first() {
        Some(f) => Err(mismatch(f)),
        None => Ok(ar),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2_trivial() -> NearBrace {
        NearBrace::trivial(&GroupTable::cyclic(2))
    }

    #[test]
    fn trivial_z2_is_a_left_brace() {
        let r = verify_structure(&z2_trivial(), Level::LeftBrace);
        assert!(r.valid, "{r:?}");
        assert_eq!(r.derived["zero==one"], Derived::Bool(true));
    }

    #[test]
    fn every_level_accepts_a_trivial_abelian_brace() {
        let nb = NearBrace::trivial(&GroupTable::cyclic(4));
        for level in Level::ALL {
            assert!(verify_structure(&nb, level).valid, "{level}");
        }
    }

    #[test]
    fn nonassociative_mul_is_reported_with_witness() {
        let add = GroupTable::cyclic(3).table().clone();
        let mut rows = add.rows();
        rows[1][1] = 0;
        rows[1][2] = 2;
        let mul = OpTable::from_rows(&rows).unwrap();
        let nb = NearBrace::new(add, mul, Level::NearBrace).unwrap();
        let r = verify_structure(&nb, Level::NearBrace);
        assert!(!r.valid);
        assert_eq!(r.failures.len(), 1);
        assert_eq!(r.failures[0].axiom, "mul.associativity");
        assert_eq!(r.failures[0].witness.len(), 3);
    }

    #[test]
    fn shifted_circle_is_a_singular_near_brace_with_zero_ne_one() {
        // a∘b = a + b + 1 on Z/3, so 1_∘ = 2 while 0_+ = 0.
        let add = GroupTable::cyclic(3).table().clone();
        let mul = OpTable::from_fn(3, |a, b| (a + b + 1) % 3);
        let nb = NearBrace::new(add, mul, Level::SingularNearBrace).unwrap();
        let r = verify_structure(&nb, Level::SingularNearBrace);
        assert!(r.valid, "{r:?}");
        assert_eq!(r.derived["zero==one"], Derived::Bool(false));
        assert_eq!(r.derived["0∘0 = −1"], Derived::Bool(true));
        assert_eq!(r.derived["1+1 = 0⁻¹"], Derived::Bool(true));
        assert!(!verify_structure(&nb, Level::LeftBrace).valid);
    }

    #[test]
    fn nonsingular_near_brace_fails_singular_level() {
        // (B,+) Klein four via xor, a∘b = a + b + 1 mod 4 with identity 3.
        let add = OpTable::from_fn(4, |a, b| a ^ b);
        let mul = OpTable::from_fn(4, |a, b| (a + b + 1) % 4);
        let nb = NearBrace::new(add, mul, Level::NearBrace).unwrap();
        assert!(verify_structure(&nb, Level::NearBrace).valid);
        let r = verify_structure(&nb, Level::SingularNearBrace);
        assert!(!r.valid);
        assert_eq!(r.failures[0].axiom, "singular_left");
        assert_eq!(r.derived["singular"], Derived::Bool(false));
    }

    #[test]
    fn require_level_names_missing_axiom() {
        let nb = NearBrace::trivial(&GroupTable::symmetric3());
        assert!(require_level(&nb, Level::SkewBrace).is_ok());
        match require_level(&nb, Level::LeftBrace) {
            Err(Error::LevelMismatch { axiom, .. }) => assert_eq!(axiom, "add.commutativity"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn json_round_trip_and_size_check() {
        let nb = z2_trivial();
        let s = serde_json::to_string(&nb).unwrap();
        assert_eq!(
            s,
            r#"{"size":2,"add":[[0,1],[1,0]],"mul":[[0,1],[1,0]],"kind":"left_brace"}"#
        );
        let back: NearBrace = serde_json::from_str(&s).unwrap();
        assert_eq!(back, nb);
        let bad = r#"{"size":3,"add":[[0,1],[1,0]],"mul":[[0,1],[1,0]],"kind":"left_brace"}"#;
        assert!(serde_json::from_str::<NearBrace>(bad).is_err());
        let out_of_range = r#"{"size":2,"add":[[0,1],[1,5]],"mul":[[0,1],[1,0]],"kind":"left_brace"}"#;
        assert!(serde_json::from_str::<NearBrace>(out_of_range).is_err());
    }
}
