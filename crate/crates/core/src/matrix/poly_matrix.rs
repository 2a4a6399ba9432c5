//! Sparse square matrices of polynomials on a tensor product of small
//! spaces. Basis index of `e_{i₀} ⊗ … ⊗ e_{i_{d−1}}` is the mixed-radix
//! number `i₀ i₁ … i_{d−1}` with the first slot most significant.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::poly::{Poly, Var};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    slots: Vec<usize>,
    dim: usize,
    rows: Vec<BTreeMap<usize, Poly>>,
}

/// `(row, col, value)` triples in row-major order.
pub type Entry = (usize, usize, Poly);

#[derive(Serialize, Deserialize)]
struct MatrixWire {
    dim: usize,
    slots: Vec<usize>,
    entries: Vec<Entry>,
}

impl Serialize for PolyMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixWire {
            dim: self.dim,
            slots: self.slots.clone(),
            entries: self.entries().map(|(r, c, p)| (r, c, p.clone())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PolyMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = MatrixWire::deserialize(d)?;
        let m = PolyMatrix::from_entries(w.slots, w.entries).map_err(serde::de::Error::custom)?;
        if m.dim != w.dim {
            return Err(serde::de::Error::custom(format!(
                "dim {} is not the product of the slots ({})",
                w.dim, m.dim
            )));
        }
        Ok(m)
    }
}

impl PolyMatrix {
    pub fn zero(slots: &[usize]) -> Self {
        let dim = slots.iter().product();
        PolyMatrix {
            slots: slots.to_vec(),
            dim,
            rows: vec![BTreeMap::new(); dim],
        }
    }

    pub fn identity(slots: &[usize]) -> Self {
        let mut m = PolyMatrix::zero(slots);
        for i in 0..m.dim {
            m.rows[i].insert(i, Poly::one());
        }
        m
    }

    /// Builds from triples, summing repeated positions.
    pub fn from_entries(slots: Vec<usize>, entries: impl IntoIterator<Item = Entry>) -> Result<Self> {
        if slots.is_empty() || slots.contains(&0) {
            return Err(Error::Dimension(format!("invalid slot structure {slots:?}")));
        }
        let mut m = PolyMatrix::zero(&slots);
        for (r, c, p) in entries {
            if r >= m.dim || c >= m.dim {
                return Err(Error::Dimension(format!(
                    "entry ({r}, {c}) outside dimension {}",
                    m.dim
                )));
            }
            m.add_at(r, c, &p);
        }
        Ok(m)
    }

    /// `e_{i,j}` on a single space of dimension `n`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = PolyMatrix::zero(&[n]);
        m.rows[i].insert(j, Poly::one());
        m
    }

    /// The permutation operator `Σ e_{x,y} ⊗ e_{y,x}` on `V ⊗ V`.
    pub fn permutation_matrix(n: usize) -> Self {
        let mut m = PolyMatrix::zero(&[n, n]);
        for x in 0..n {
            for y in 0..n {
                m.rows[x * n + y].insert(y * n + x, Poly::one());
            }
        }
        m
    }

    /// The operator sending `e_{i₀}⊗…⊗e_{i_{d−1}}` to the product with slot
    /// `j`'s vector moved to position `perm[j]`.
    pub fn slot_permutation(slots: &[usize], perm: &[usize]) -> Result<Self> {
        let d = slots.len();
        let mut seen = vec![false; d];
        if perm.len() != d || perm.iter().any(|&p| p >= d || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::Dimension(format!("{perm:?} is not a permutation of {d} slots")));
        }
        let mut out_slots = vec![0; d];
        for j in 0..d {
            out_slots[perm[j]] = slots[j];
        }
        let mut m = PolyMatrix::zero(&out_slots);
        let mut digits = vec![0; d];
        let mut out = vec![0; d];
        for col in 0..m.dim {
            split_index(col, slots, &mut digits);
            for j in 0..d {
                out[perm[j]] = digits[j];
            }
            m.rows[join_index(&out, &out_slots)].insert(col, Poly::one());
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn slots(&self) -> &[usize] {
        &self.slots
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&Poly> {
        self.rows[r].get(&c)
    }

    pub fn get_or_zero(&self, r: usize, c: usize) -> Poly {
        self.get(r, c).cloned().unwrap_or_default()
    }

    pub fn row(&self, r: usize) -> &BTreeMap<usize, Poly> {
        &self.rows[r]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Poly) {
        if p.is_zero() {
            self.rows[r].remove(&c);
        } else {
            self.rows[r].insert(c, p);
        }
    }

    fn add_at(&mut self, r: usize, c: usize, p: &Poly) {
        if p.is_zero() {
            return;
        }
        let row = &mut self.rows[r];
        let v = row.entry(c).or_default();
        *v += p;
        if v.is_zero() {
            row.remove(&c);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Poly)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(&c, p)| (r, c, p)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    /// Reinterprets the same array with a different slot structure of equal
    /// total dimension.
    pub fn with_slots(mut self, slots: &[usize]) -> Result<Self> {
        if slots.iter().product::<usize>() != self.dim {
            return Err(Error::Dimension(format!(
                "slots {slots:?} do not multiply to {}",
                self.dim
            )));
        }
        self.slots = slots.to_vec();
        Ok(self)
    }

    fn same_shape(&self, other: &PolyMatrix, what: &str) -> Result<()> {
        if self.slots != other.slots {
            return Err(Error::Dimension(format!(
                "{what}: slot structures {:?} and {:?} differ",
                self.slots, other.slots
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.same_shape(other, "sum")?;
        let mut out = self.clone();
        for (r, c, p) in other.entries() {
            out.add_at(r, c, p);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.dim != other.dim {
            return Err(Error::Dimension(format!(
                "product of {}×{} and {}×{}",
                self.dim, self.dim, other.dim, other.dim
            )));
        }
        let rows = self
            .rows
            .par_iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, Poly> = BTreeMap::new();
                for (&k, a) in row {
                    for (&c, b) in &other.rows[k] {
                        let v = acc.entry(c).or_default();
                        *v += &(a * b);
                    }
                }
                acc.retain(|_, p| !p.is_zero());
                acc
            })
            .collect();
        Ok(PolyMatrix {
            slots: self.slots.clone(),
            dim: self.dim,
            rows,
        })
    }

    pub fn scale(&self, s: &Poly) -> PolyMatrix {
        self.map(|p| p * s)
    }

    pub fn scale_rational(&self, c: &BigRational) -> PolyMatrix {
        self.map(|p| p.scale(c))
    }

    /// Applies `f` to every stored entry, dropping results that vanish.
    pub fn map(&self, f: impl Fn(&Poly) -> Poly + Sync) -> PolyMatrix {
        let rows = self
            .rows
            .par_iter()
            .map(|row| {
                row.iter()
                    .map(|(&c, p)| (c, f(p)))
                    .filter(|(_, p)| !p.is_zero())
                    .collect()
            })
            .collect();
        PolyMatrix {
            slots: self.slots.clone(),
            dim: self.dim,
            rows,
        }
    }

    pub fn substitute(&self, v: Var, value: &Poly) -> PolyMatrix {
        self.map(|p| p.substitute(v, value))
    }

    /// Coefficient matrix of `v^k`.
    pub fn coeff(&self, v: Var, k: u16) -> PolyMatrix {
        self.map(|p| p.coeff(v, k))
    }

    pub fn degree_in(&self, v: Var) -> Option<u16> {
        self.entries().filter_map(|(_, _, p)| p.degree_in(v)).max()
    }

    pub fn is_constant(&self) -> bool {
        self.entries().all(|(_, _, p)| p.constant_value().is_some())
    }

    /// Kronecker product; the slot structures are concatenated.
    pub fn kron(&self, other: &PolyMatrix) -> PolyMatrix {
        let mut slots = self.slots.clone();
        slots.extend_from_slice(&other.slots);
        let m = other.dim;
        let mut out = PolyMatrix::zero(&slots);
        for (r1, c1, a) in self.entries() {
            for (r2, c2, b) in other.entries() {
                out.rows[r1 * m + r2].insert(c1 * m + c2, a * b);
            }
        }
        out
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut out = PolyMatrix::zero(&self.slots);
        for (r, c, p) in self.entries() {
            out.rows[c].insert(r, p.clone());
        }
        out
    }

    /// Transposes the indices belonging to one tensor factor.
    pub fn partial_transpose(&self, slot: usize) -> Result<PolyMatrix> {
        let d = self.slots.len();
        if slot >= d {
            return Err(Error::SlotOutOfRange { slot, slots: d });
        }
        let mut out = PolyMatrix::zero(&self.slots);
        let (mut rd, mut cd) = (vec![0; d], vec![0; d]);
        for (r, c, p) in self.entries() {
            split_index(r, &self.slots, &mut rd);
            split_index(c, &self.slots, &mut cd);
            std::mem::swap(&mut rd[slot], &mut cd[slot]);
            out.rows[join_index(&rd, &self.slots)].insert(join_index(&cd, &self.slots), p.clone());
        }
        Ok(out)
    }

    /// `Some(c)` when the matrix equals `c·I` exactly.
    pub fn scalar_match(&self) -> Option<Poly> {
        let c = self.get_or_zero(0, 0);
        for (r, row) in self.rows.iter().enumerate() {
            match row.len() {
                0 if c.is_zero() => {}
                1 if row.get(&r) == Some(&c) => {}
                _ => return None,
            }
        }
        Some(c)
    }

    /// Places `op` on the factors `targets` (in that order) of the tensor
    /// space `space`, acting as the identity elsewhere.
    pub fn embed(&self, targets: &[usize], space: &[usize]) -> Result<PolyMatrix> {
        let d = space.len();
        if targets.len() != self.slots.len() {
            return Err(Error::Dimension(format!(
                "operator on {} factors placed on {} slots",
                self.slots.len(),
                targets.len()
            )));
        }
        for (i, &t) in targets.iter().enumerate() {
            if t >= d {
                return Err(Error::SlotOutOfRange { slot: t, slots: d });
            }
            if targets[..i].contains(&t) {
                return Err(Error::Dimension(format!("slot {t} targeted twice")));
            }
            if space[t] != self.slots[i] {
                return Err(Error::Dimension(format!(
                    "factor {i} has dimension {} but slot {t} has {}",
                    self.slots[i], space[t]
                )));
            }
        }
        let dim: usize = space.iter().product();
        let rows = (0..dim)
            .into_par_iter()
            .map(|r| {
                let mut digits = vec![0; d];
                split_index(r, space, &mut digits);
                let sub: Vec<usize> = targets.iter().map(|&t| digits[t]).collect();
                let sr = join_index(&sub, &self.slots);
                let mut sd = vec![0; targets.len()];
                let mut row = BTreeMap::new();
                for (&sc, p) in &self.rows[sr] {
                    split_index(sc, &self.slots, &mut sd);
                    let mut cd = digits.clone();
                    for (&t, &v) in targets.iter().zip(&sd) {
                        cd[t] = v;
                    }
                    row.insert(join_index(&cd, space), p.clone());
                }
                row
            })
            .collect();
        Ok(PolyMatrix {
            slots: space.to_vec(),
            dim,
            rows,
        })
    }

    /// Exact inverse of a matrix with constant entries (Gauss-Jordan over
    /// the rationals).
    pub fn inverse_constant(&self) -> Result<PolyMatrix> {
        if let Some(inv) = self.monomial_inverse()? {
            return Ok(inv);
        }
        let n = self.dim;
        let mut a: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); 2 * n]; n];
        for (r, c, p) in self.entries() {
            a[r][c] = p
                .constant_value()
                .ok_or_else(|| Error::Dimension("inverse of a non-constant matrix".into()))?;
        }
        for (i, row) in a.iter_mut().enumerate() {
            row[n + i] = BigRational::one();
        }
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::Singular)?;
            a.swap(col, pivot);
            let inv = a[col][col].recip();
            for v in a[col].iter_mut() {
                *v *= &inv;
            }
            let prow = a[col].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r != col && !row[col].is_zero() {
                    let f = row[col].clone();
                    for (v, p) in row.iter_mut().zip(&prow) {
                        if !p.is_zero() {
                            *v -= &f * p;
                        }
                    }
                }
            }
        }
        let mut out = PolyMatrix::zero(&self.slots);
        for (r, row) in a.iter().enumerate() {
            for (c, v) in row[n..].iter().enumerate() {
                if !v.is_zero() {
                    out.rows[r].insert(c, Poly::constant(v.clone()));
                }
            }
        }
        Ok(out)
    }

    /// Inverse when every row and column holds exactly one constant entry.
    fn monomial_inverse(&self) -> Result<Option<PolyMatrix>> {
        let mut out = PolyMatrix::zero(&self.slots);
        for (r, row) in self.rows.iter().enumerate() {
            let [(&c, p)] = row.iter().collect::<Vec<_>>()[..] else {
                return Ok(None);
            };
            let v = p
                .constant_value()
                .ok_or_else(|| Error::Dimension("inverse of a non-constant matrix".into()))?;
            // a repeated column means the matrix is singular; let elimination say so
            if !out.rows[c].is_empty() {
                return Ok(None);
            }
            out.rows[c].insert(r, Poly::constant(v.recip()));
        }
        Ok(Some(out))
    }

    /// First position (row-major) where the matrices differ.
    pub fn first_difference(&self, other: &PolyMatrix) -> Option<(usize, usize)> {
        if self.dim != other.dim {
            return Some((0, 0));
        }
        (0..self.dim).find_map(|r| {
            if self.rows[r] == other.rows[r] {
                return None;
            }
            let cols = self.rows[r].keys().chain(other.rows[r].keys());
            cols.copied()
                .filter(|&c| self.get(r, c) != other.get(r, c))
                .min()
                .map(|c| (r, c))
        })
    }

    /// One line per nonzero entry, `(row, col): value`.
    pub fn pretty(&self) -> String {
        let mut s = format!("{0}×{0} on {1:?}\n", self.dim, self.slots);
        for (r, c, p) in self.entries() {
            let _ = writeln!(s, "  ({r}, {c}): {p}");
        }
        s
    }
}

/// Mixed-radix digits of `index`, most significant first.
pub fn split_index(mut index: usize, slots: &[usize], out: &mut [usize]) {
    for (d, &n) in out.iter_mut().zip(slots).rev() {
        *d = index % n;
        index /= n;
    }
}

pub fn join_index(digits: &[usize], slots: &[usize]) -> usize {
    digits.iter().zip(slots).fold(0, |acc, (&d, &n)| acc * n + d)
}

impl Add for &PolyMatrix {
    type Output = PolyMatrix;

    fn add(self, rhs: &PolyMatrix) -> PolyMatrix {
        self.try_add(rhs).expect("matching shapes")
    }
}

impl Sub for &PolyMatrix {
    type Output = PolyMatrix;

    fn sub(self, rhs: &PolyMatrix) -> PolyMatrix {
        self.try_sub(rhs).expect("matching shapes")
    }
}

impl Mul for &PolyMatrix {
    type Output = PolyMatrix;

    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        self.try_mul(rhs).expect("matching dimensions")
    }
}

impl Neg for &PolyMatrix {
    type Output = PolyMatrix;

    fn neg(self) -> PolyMatrix {
        self.map(|p| -p)
    }
}
