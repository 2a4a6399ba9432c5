//! Exhaustive search for small groups and (near) braces.
//!
//! Group tables come from Latin-square backtracking with the identity row
//! and column fixed and associativity pruned after every completed row.
//! Structures are then filtered pairwise by the level axioms.

use itertools::Itertools;
use rayon::prelude::*;

use super::structure::{satisfies, Arith, Level, NearBrace};
use super::table::{GroupTable, OpTable};
use crate::error::{Error, Result};

pub const DEFAULT_BRACE_BOUND: usize = 6;
pub const DEFAULT_NEAR_BRACE_BOUND: usize = 4;

pub fn default_bound(level: Level) -> usize {
    if level.requires_zero_is_one() {
        DEFAULT_BRACE_BOUND
    } else {
        DEFAULT_NEAR_BRACE_BOUND
    }
}

#[derive(Clone, Debug, Default)]
pub struct EnumerationOptions {
    /// Largest admissible size; `None` uses [`default_bound`].
    pub bound: Option<usize>,
    /// Deduplicate up to simultaneous relabeling of both tables.
    pub canonical: bool,
    /// Order in which candidate entries are tried during backtracking.
    /// Any permutation of `0..n` yields the same set of tables.
    pub candidate_order: Option<Vec<usize>>,
}

const UNSET: usize = usize::MAX;

fn partial_associativity_ok(cells: &[usize], n: usize) -> bool {
    let at = |a: usize, b: usize| cells[a * n + b];
    for x in 0..n {
        for y in 0..n {
            let xy = at(x, y);
            if xy == UNSET {
                continue;
            }
            for z in 0..n {
                let yz = at(y, z);
                if yz == UNSET {
                    continue;
                }
                let (l, r) = (at(xy, z), at(x, yz));
                if l != UNSET && r != UNSET && l != r {
                    return false;
                }
            }
        }
    }
    true
}

struct GroupSearch<'a> {
    n: usize,
    order: &'a [usize],
    cells: Vec<usize>,
    row_used: Vec<u64>,
    col_used: Vec<u64>,
    out: Vec<OpTable>,
}

impl GroupSearch<'_> {
    fn run(&mut self, pos: usize) {
        let n = self.n;
        let inner = n - 1;
        if pos == inner * inner {
            let t = OpTable::new(n, self.cells.clone()).expect("complete table");
            if t.associativity_witness().is_none() {
                self.out.push(t);
            }
            return;
        }
        let (a, b) = (1 + pos / inner, 1 + pos % inner);
        for i in 0..n {
            let v = self.order[i];
            let bit = 1u64 << v;
            if self.row_used[a] & bit != 0 || self.col_used[b] & bit != 0 {
                continue;
            }
            self.cells[a * n + b] = v;
            self.row_used[a] |= bit;
            self.col_used[b] |= bit;
            let row_done = b == n - 1;
            if !row_done || partial_associativity_ok(&self.cells, n) {
                self.run(pos + 1);
            }
            self.row_used[a] &= !bit;
            self.col_used[b] &= !bit;
            self.cells[a * n + b] = UNSET;
        }
    }
}

/// All group tables on `0..n` whose identity is `0`, sorted.
pub fn groups_with_identity_zero(n: usize, candidate_order: Option<&[usize]>) -> Vec<OpTable> {
    assert!((1..=64).contains(&n), "group search supports 1..=64 elements");
    let natural: Vec<usize> = (0..n).collect();
    let order = candidate_order.unwrap_or(&natural);
    let mut cells = vec![UNSET; n * n];
    let mut row_used = vec![0u64; n];
    let mut col_used = vec![0u64; n];
    for x in 0..n {
        cells[x] = x;
        cells[x * n] = x;
        row_used[0] |= 1 << x;
        col_used[0] |= 1 << x;
        row_used[x] |= 1 << x;
        col_used[x] |= 1 << x;
    }
    let mut search = GroupSearch {
        n,
        order,
        cells,
        row_used,
        col_used,
        out: Vec::new(),
    };
    search.run(0);
    let mut out = search.out;
    out.sort();
    out
}

/// All group tables on `0..n` with the given identity, sorted.
pub fn groups_with_identity(n: usize, identity: usize, candidate_order: Option<&[usize]>) -> Vec<OpTable> {
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, identity);
    let mut out: Vec<OpTable> = groups_with_identity_zero(n, candidate_order)
        .iter()
        .map(|t| t.relabel(&swap))
        .collect();
    out.sort();
    out
}

/// Lexicographically smallest `(add, mul)` over all relabelings of `0..n`.
pub fn canonical_form(nb: &NearBrace) -> NearBrace {
    let n = nb.size();
    (0..n)
        .permutations(n)
        .map(|p| nb.relabel(&p))
        .min_by(|x, y| (x.add().cells(), x.mul().cells()).cmp(&(y.add().cells(), y.mul().cells())))
        .expect("at least one permutation")
}

fn sort_key(nb: &NearBrace) -> (Vec<usize>, Vec<usize>) {
    (nb.add().cells().to_vec(), nb.mul().cells().to_vec())
}

/// Every structure of `level` on `0..n` with additive identity `0`, or one
/// representative per isomorphism class when `canonical` is set. The
/// output order is deterministic (sorted by flattened tables).
pub fn enumerate_near_braces(n: usize, level: Level, canonical: bool) -> Result<Vec<NearBrace>> {
    enumerate_near_braces_with(
        n,
        level,
        &EnumerationOptions {
            canonical,
            ..Default::default()
        },
    )
}

pub fn enumerate_near_braces_with(n: usize, level: Level, opts: &EnumerationOptions) -> Result<Vec<NearBrace>> {
    let bound = opts.bound.unwrap_or_else(|| default_bound(level));
    if n > bound {
        return Err(Error::BoundExceeded { requested: n, bound });
    }
    if n == 0 {
        return Err(Error::malformed("size", "size must be at least 1"));
    }
    let order = opts.candidate_order.as_deref();
    if let Some(o) = order {
        let mut sorted = o.to_vec();
        sorted.sort_unstable();
        if sorted != (0..n).collect::<Vec<_>>() {
            return Err(Error::malformed("candidate_order", "must be a permutation of 0..n"));
        }
    }

    let adds: Vec<GroupTable> = groups_with_identity_zero(n, order)
        .into_iter()
        .map(|t| GroupTable::new(t).expect("search yields groups"))
        .collect();
    let mul_identities: Vec<usize> = if level.requires_zero_is_one() {
        vec![0]
    } else {
        (0..n).collect()
    };
    let muls: Vec<GroupTable> = mul_identities
        .iter()
        .flat_map(|&e| groups_with_identity(n, e, order))
        .map(|t| GroupTable::new(t).expect("search yields groups"))
        .collect();

    let mut found: Vec<NearBrace> = adds
        .par_iter()
        .flat_map_iter(|add| {
            muls.iter().filter_map(move |mul| {
                let ar = Arith {
                    add: add.clone(),
                    mul: mul.clone(),
                };
                satisfies(&ar, level)
                    .then(|| NearBrace::new(add.table().clone(), mul.table().clone(), level).expect("same size"))
            })
        })
        .collect();

    if opts.canonical {
        found = found.par_iter().map(canonical_form).collect();
    }
    found.sort_by_key(sort_key);
    if opts.canonical {
        found.dedup();
    }
    Ok(found)
}
