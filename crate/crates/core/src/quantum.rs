//! RTT and reflection-equation checks for series and polynomial operators
//! built from a linearized solution.
//!
//! Tensor layout: an operator `L` or `𝕂` declared on slots `[N, q…]` acts on
//! an auxiliary space (first slot) and a quantum space (the rest). The
//! exchange relations live on `aux₁ ⊗ aux₂ ⊗ quantum`, where `X₁` occupies
//! slots `0, 2, 3, …`, `X₂` occupies `1, 2, 3, …` and `ř₁₂` occupies `0, 1`.
//!
//! Series are in `μ = 1/λ`: `A(λ) = Σₙ A⁽ⁿ⁾ μⁿ`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{split_index, Poly, PolyMatrix, Var};
use crate::reflection::ReflectionMap;
use crate::report::Verdict;
use crate::rmatrix::{LinearSolution, PropertyCheck};

/// Default truncation depth for series built from polynomials.
pub const DEFAULT_DEPTH: usize = 4;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SeriesOperator {
    depth: usize,
    slots: Vec<usize>,
    coeffs: Vec<PolyMatrix>,
}

#[derive(Deserialize)]
struct SeriesWire {
    depth: usize,
    slots: Vec<usize>,
    coeffs: Vec<PolyMatrix>,
}

impl<'de> Deserialize<'de> for SeriesOperator {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = SeriesWire::deserialize(d)?;
        if w.coeffs.len() != w.depth + 1 {
            return Err(serde::de::Error::custom(format!(
                "depth {} needs {} coefficients, found {}",
                w.depth,
                w.depth + 1,
                w.coeffs.len()
            )));
        }
        SeriesOperator::new(w.slots, w.coeffs).map_err(serde::de::Error::custom)
    }
}

impl SeriesOperator {
    /// Depth is `coeffs.len() − 1`; every coefficient must sit on `slots`.
    pub fn new(slots: Vec<usize>, coeffs: Vec<PolyMatrix>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Dimension("a series needs at least one coefficient".into()));
        }
        if let Some(i) = coeffs.iter().position(|c| c.slots() != slots.as_slice()) {
            return Err(Error::Dimension(format!(
                "coefficient {i} has slots {:?}, expected {slots:?}",
                coeffs[i].slots()
            )));
        }
        Ok(SeriesOperator {
            depth: coeffs.len() - 1,
            slots,
            coeffs,
        })
    }

    pub fn zero(depth: usize, slots: &[usize]) -> Self {
        SeriesOperator {
            depth,
            slots: slots.to_vec(),
            coeffs: vec![PolyMatrix::zero(slots); depth + 1],
        }
    }

    /// `L(λ) = R(λ)/λ = r + μ𝒫` on `aux ⊗ quantum = V ⊗ V`.
    pub fn fundamental(lin: &LinearSolution, depth: usize) -> Self {
        let n = lin.n;
        let mut coeffs = vec![lin.r.clone()];
        coeffs.push(lin.permutation());
        coeffs.resize(depth.max(1) + 1, PolyMatrix::zero(&[n, n]));
        SeriesOperator {
            depth: depth.max(1),
            slots: vec![n, n],
            coeffs,
        }
    }

    /// Coefficients of `μ⁰ … μ^depth` of a matrix polynomial in `μ`.
    pub fn from_mu(m: &PolyMatrix, depth: usize) -> Self {
        SeriesOperator {
            depth,
            slots: m.slots().to_vec(),
            coeffs: (0..=depth).map(|k| m.coeff(Var::Mu, k as u16)).collect(),
        }
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn slots(&self) -> &[usize] {
        &self.slots
    }

    pub fn coeffs(&self) -> &[PolyMatrix] {
        &self.coeffs
    }

    pub fn coeff_mut(&mut self, k: usize) -> &mut PolyMatrix {
        &mut self.coeffs[k]
    }

    /// Coefficient `k`, or `None` when it is zero by convention (negative
    /// or beyond the depth).
    pub fn coeff(&self, k: i64) -> Option<&PolyMatrix> {
        usize::try_from(k).ok().and_then(|k| self.coeffs.get(k))
    }
}

/// Verdict of one series relation at orders `(n, m)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OrderCheck {
    pub n: i64,
    pub m: i64,
    pub status: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<usize>>,
}

impl OrderCheck {
    fn compare(n: i64, m: i64, lhs: &PolyMatrix, rhs: &PolyMatrix) -> Self {
        let witness = lhs.first_difference(rhs).map(|(r, c)| vec![r, c]);
        OrderCheck {
            n,
            m,
            status: Verdict::from_bool(witness.is_none()),
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Verdict::Pass
    }
}

/// Space and slot targets for an exchange relation of an operator on
/// `[N, q…]`.
struct Layout {
    space: Vec<usize>,
    first: Vec<usize>,
    second: Vec<usize>,
}

fn layout(n: usize, slots: &[usize]) -> Result<Layout> {
    if slots.first() != Some(&n) {
        return Err(Error::Dimension(format!(
            "operator slots {slots:?} do not start with the auxiliary dimension {n}"
        )));
    }
    let mut space = vec![n, n];
    space.extend_from_slice(&slots[1..]);
    let quantum: Vec<usize> = (2..space.len()).collect();
    let first = std::iter::once(0).chain(quantum.iter().copied()).collect();
    let second = std::iter::once(1).chain(quantum.iter().copied()).collect();
    Ok(Layout { space, first, second })
}

/// Coefficient `k` of a stored series; `None` (zero) outside the range.
fn at(v: &[PolyMatrix], k: i64) -> Option<&PolyMatrix> {
    usize::try_from(k).ok().and_then(|k| v.get(k))
}

/// Product of optional factors; `None` stands for zero.
fn chain(factors: &[Option<&PolyMatrix>]) -> Option<PolyMatrix> {
    let mut it = factors.iter();
    let mut acc = (*it.next()?)?.clone();
    for f in it {
        acc = &acc * (*f)?;
    }
    Some(acc)
}

/// `Σ ± terms`, each term `None` when it vanishes.
fn signed_sum(zero: &PolyMatrix, terms: Vec<(i64, Option<PolyMatrix>)>) -> PolyMatrix {
    terms.into_iter().fold(zero.clone(), |acc, (sign, t)| match t {
        None => acc,
        Some(t) if sign > 0 => &acc + &t,
        Some(t) => &acc - &t,
    })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RttReport {
    pub max_order: usize,
    /// Matrix form on `aux₁ ⊗ aux₂ ⊗ quantum`; witness is a matrix entry.
    pub matrix: Vec<OrderCheck>,
    /// Generator form; witness is `(i, j, k, l, row, col)` with the last two
    /// indexing the quantum space.
    pub component: Vec<OrderCheck>,
    /// Whether both forms give the same verdict at every order.
    pub agree: bool,
    /// Present when `ř = 𝒫`: whether the generator relations are exactly
    /// the Yangian exchange relations.
    pub yangian: Verdict,
    pub passed: bool,
}

/// Blocks `L_{z,w}` of an operator `Σ e_{z,w} ⊗ L_{z,w}` on `[N, q…]`.
fn blocks(op: &PolyMatrix, n: usize) -> Vec<Vec<PolyMatrix>> {
    let qslots: Vec<usize> = op.slots()[1..].to_vec();
    let q: usize = qslots.iter().product();
    let mut out = vec![vec![PolyMatrix::zero(&qslots); n]; n];
    for (r, c, p) in op.entries() {
        out[r / q][c / q].set(r % q, c % q, p.clone());
    }
    out
}

/// Checks the series expansion of `Ř₁₂(λ₁−λ₂)L₁(λ₁)L₂(λ₂) = L₁(λ₂)L₂(λ₁)Ř₁₂(λ₁−λ₂)`
/// at orders `λ₁⁻ⁿλ₂⁻ᵐ` for `0 ≤ n, m ≤ max_order`.
pub fn check_rtt_series(lin: &LinearSolution, l: &SeriesOperator, max_order: usize) -> Result<RttReport> {
    let n_aux = lin.n;
    let lay = layout(n_aux, &l.slots)?;
    let rc = lin.r_check.embed(&[0, 1], &lay.space)?;
    let l1: Vec<PolyMatrix> = l
        .coeffs
        .iter()
        .map(|c| c.embed(&lay.first, &lay.space))
        .collect::<Result<_>>()?;
    let l2: Vec<PolyMatrix> = l
        .coeffs
        .iter()
        .map(|c| c.embed(&lay.second, &lay.space))
        .collect::<Result<_>>()?;
    let zero = PolyMatrix::zero(&lay.space);

    let orders: Vec<(i64, i64)> = (0..=max_order as i64)
        .flat_map(|n| (0..=max_order as i64).map(move |m| (n, m)))
        .collect();

    let matrix: Vec<OrderCheck> = orders
        .par_iter()
        .map(|&(n, m)| {
            let lhs = signed_sum(
                &zero,
                vec![
                    (1, chain(&[Some(&rc), at(&l1, n + 1), at(&l2, m)])),
                    (-1, chain(&[Some(&rc), at(&l1, n), at(&l2, m + 1)])),
                    (1, chain(&[at(&l1, n), at(&l2, m)])),
                ],
            );
            let rhs = signed_sum(
                &zero,
                vec![
                    (1, chain(&[at(&l1, m), at(&l2, n + 1), Some(&rc)])),
                    (-1, chain(&[at(&l1, m + 1), at(&l2, n), Some(&rc)])),
                    (1, chain(&[at(&l1, m), at(&l2, n)])),
                ],
            );
            OrderCheck::compare(n, m, &lhs, &rhs)
        })
        .collect();

    let gens: Vec<Vec<Vec<PolyMatrix>>> = l.coeffs.iter().map(|c| blocks(c, n_aux)).collect();
    let component: Vec<OrderCheck> = orders
        .par_iter()
        .map(|&(n, m)| {
            let witness = component_residuals(lin, &gens, n, m).find_map(|(ijkl, res)| {
                res.entries().next().map(|(r, c, _)| {
                    let mut w = ijkl.to_vec();
                    w.extend([r, c]);
                    w
                })
            });
            OrderCheck {
                n,
                m,
                status: Verdict::from_bool(witness.is_none()),
                witness,
            }
        })
        .collect();

    let agree = matrix.iter().zip(&component).all(|(a, b)| a.status == b.status);
    let yangian = if lin.r_check == lin.permutation() {
        let same = orders.iter().all(|&(n, m)| {
            component_residuals(lin, &gens, n, m)
                .all(|([z, zh, w, wh], res)| res == yangian_residual(&gens, n, m, [zh, w, z, wh]))
        });
        Verdict::from_bool(same)
    } else {
        Verdict::NotApplicable
    };
    let passed = agree && matrix.iter().all(OrderCheck::passed) && yangian.is_ok();
    Ok(RttReport {
        max_order,
        matrix,
        component,
        agree,
        yangian,
        passed,
    })
}

/// `LHS − RHS` of the generator relations at row `(i, j)`, column `(k, l)`
/// of `aux₁ ⊗ aux₂`, as operators on the quantum space. The left factor
/// `ř₁₂` contributes a sum over preimages `ř(x, y) = (i, j)`.
fn component_residuals<'a>(
    lin: &'a LinearSolution,
    gens: &'a [Vec<Vec<PolyMatrix>>],
    n: i64,
    m: i64,
) -> impl Iterator<Item = ([usize; 4], PolyMatrix)> + 'a {
    let sol = &lin.source;
    let size = lin.n;
    let g = move |k: i64, a: usize, b: usize| usize::try_from(k).ok().and_then(|k| gens.get(k)).map(|c| &c[a][b]);
    let qslots = gens[0][0][0].slots().to_vec();
    (0..size.pow(4)).map(move |idx| {
        let mut d = [0; 4];
        split_index(idx, &[size; 4], &mut d);
        let [i, j, k, l] = d;
        let zero = PolyMatrix::zero(&qslots);
        let mut terms = Vec::new();
        for x in 0..size {
            for y in 0..size {
                if sol.apply(x, y) == (i, j) {
                    terms.push((1, chain(&[g(n + 1, x, k), g(m, y, l)])));
                    terms.push((-1, chain(&[g(n, x, k), g(m + 1, y, l)])));
                }
            }
        }
        terms.push((1, chain(&[g(n, i, k), g(m, j, l)])));
        let (s, t) = (sol.sigma(k, l), sol.tau(l, k));
        terms.push((-1, chain(&[g(m, i, s), g(n + 1, j, t)])));
        terms.push((1, chain(&[g(m + 1, i, s), g(n, j, t)])));
        terms.push((-1, chain(&[g(m, i, k), g(n, j, l)])));
        (d, signed_sum(&zero, terms))
    })
}

/// `[L⁽ⁿ⁺¹⁾_{ij}, L⁽ᵐ⁾_{kl}] − [L⁽ⁿ⁾_{ij}, L⁽ᵐ⁺¹⁾_{kl}] − L⁽ᵐ⁾_{kj}L⁽ⁿ⁾_{il} + L⁽ⁿ⁾_{kj}L⁽ᵐ⁾_{il}`.
fn yangian_residual(gens: &[Vec<Vec<PolyMatrix>>], n: i64, m: i64, [i, j, k, l]: [usize; 4]) -> PolyMatrix {
    let g = |o: i64, a: usize, b: usize| usize::try_from(o).ok().and_then(|o| gens.get(o)).map(|c| &c[a][b]);
    let zero = PolyMatrix::zero(gens[0][0][0].slots());
    signed_sum(
        &zero,
        vec![
            (1, chain(&[g(n + 1, i, j), g(m, k, l)])),
            (-1, chain(&[g(m, k, l), g(n + 1, i, j)])),
            (-1, chain(&[g(n, i, j), g(m + 1, k, l)])),
            (1, chain(&[g(m + 1, k, l), g(n, i, j)])),
            (-1, chain(&[g(m, k, j), g(n, i, l)])),
            (1, chain(&[g(n, k, j), g(m, i, l)])),
        ],
    )
}

/// The matrix `Σ e_{k(x),x}` of a set map acting on basis vectors.
pub fn reflection_matrix(k: &ReflectionMap) -> PolyMatrix {
    let n = k.size();
    let mut m = PolyMatrix::zero(&[n]);
    for x in 0..n {
        m.set(k.apply(x), x, Poly::one());
    }
    m
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReflectionCheckMode {
    Polynomial,
    Constant,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ReflectionEquationReport {
    pub mode: ReflectionCheckMode,
    /// `Ř₁₂(λ₁−λ₂)𝕂₁(λ₁)Ř₁₂(λ₁+λ₂)𝕂₁(λ₂) = 𝕂₁(λ₂)Ř₁₂(λ₁+λ₂)𝕂₁(λ₁)Ř₁₂(λ₁−λ₂)`,
    /// or `ř𝐤₁ř𝐤₁ = 𝐤₁ř𝐤₁ř` in constant mode.
    pub braid_form: PropertyCheck,
    /// Degree in `μ` reversed into a polynomial in `λ`, when the input was
    /// given in `μ`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reversed_mu_degree: Option<u16>,
}

impl ReflectionEquationReport {
    pub fn passed(&self) -> bool {
        self.braid_form.passed()
    }
}

/// Rewrites a matrix in `μ` as a matrix polynomial in `λ`:
/// `K̃(λ) = λ^D K(1/λ)`. Matrices without `μ` are returned unchanged.
pub fn mu_to_lambda(k: &PolyMatrix) -> Result<(PolyMatrix, Option<u16>)> {
    match k.degree_in(Var::Mu) {
        None | Some(0) => Ok((k.clone(), None)),
        Some(d) => {
            if k.degree_in(Var::Lambda).unwrap_or(0) > 0 {
                return Err(Error::Dimension("operator mixes λ and μ".into()));
            }
            let mut out = PolyMatrix::zero(k.slots());
            for (r, c, p) in k.entries() {
                out.set(r, c, p.reverse_in(Var::Mu, d)?.rename(Var::Mu, Var::Lambda));
            }
            Ok((out, Some(d)))
        }
    }
}

/// Both sides of the braid-form reflection equation for `K` on `[N, q…]`.
pub fn reflection_sides(lin: &LinearSolution, k: &PolyMatrix) -> Result<(PolyMatrix, PolyMatrix)> {
    let lay = layout(lin.n, k.slots())?;
    let (l1, l2) = (Poly::var(Var::Lambda1), Poly::var(Var::Lambda2));
    let rch = |p: &Poly| lin.r_check_at(p).embed(&[0, 1], &lay.space);
    let (minus, plus) = (rch(&(&l1 - &l2))?, rch(&(&l1 + &l2))?);
    let k1 = k.substitute(Var::Lambda, &l1).embed(&lay.first, &lay.space)?;
    let k2 = k.substitute(Var::Lambda, &l2).embed(&lay.first, &lay.space)?;
    let lhs = &(&(&minus * &k1) * &plus) * &k2;
    let rhs = &(&(&k2 * &plus) * &k1) * &minus;
    Ok((lhs, rhs))
}

/// Polynomial mode: `k` is a matrix in `λ` (or in `μ`, reversed first) on
/// `aux` or `aux ⊗ quantum`.
pub fn check_reflection_equation(lin: &LinearSolution, k: &PolyMatrix) -> Result<ReflectionEquationReport> {
    let (kl, reversed) = mu_to_lambda(k)?;
    let (lhs, rhs) = reflection_sides(lin, &kl)?;
    Ok(ReflectionEquationReport {
        mode: ReflectionCheckMode::Polynomial,
        braid_form: PropertyCheck::equality(&lhs, &rhs),
        reversed_mu_degree: reversed,
    })
}

/// Constant mode: `ř𝐤₁ř𝐤₁ = 𝐤₁ř𝐤₁ř` for the matrix of a set map.
pub fn check_reflection_constant(lin: &LinearSolution, k: &ReflectionMap) -> Result<ReflectionEquationReport> {
    if k.size() != lin.n {
        return Err(Error::SetMismatch {
            expected: lin.n,
            found: k.size(),
        });
    }
    let k1 = reflection_matrix(k).embed(&[0], &[lin.n, lin.n])?;
    let r = &lin.r_check;
    let lhs = &(&(r * &k1) * r) * &k1;
    let rhs = &(&(&k1 * r) * &k1) * r;
    Ok(ReflectionEquationReport {
        mode: ReflectionCheckMode::Constant,
        braid_form: PropertyCheck::equality(&lhs, &rhs),
        reversed_mu_degree: None,
    })
}

/// Input of the dressing construction.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DressParams {
    /// c-number boundary matrix on `V`, polynomial in `λ` (or constant).
    pub k0: PolyMatrix,
    /// Inhomogeneity: a constant or a polynomial in the `θ` variables.
    pub theta: Poly,
}

impl DressParams {
    pub fn identity(n: usize) -> Self {
        DressParams {
            k0: PolyMatrix::identity(&[n]),
            theta: Poly::zero(),
        }
    }
}

/// A dressed reflection matrix, polynomial in `μ`, with the scalar factors
/// dropped on the way.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Dressed {
    pub k: PolyMatrix,
    pub normalization: Vec<String>,
}

fn require_involutive(lin: &LinearSolution, what: &str) -> Result<()> {
    if !lin.source.is_involutive() {
        return Err(Error::Hypothesis(format!("{what} needs an involutive solution")));
    }
    Ok(())
}

/// `(1−θμ)r + μ𝒫` and `(1+θμ)r₂₁ + μ𝒫`, proportional to `L(λ−θ)` and
/// `L̂(λ+θ)` for the fundamental `L(λ) = r + μ𝒫`.
fn normalized_l_pair(lin: &LinearSolution, theta: &Poly) -> (PolyMatrix, PolyMatrix) {
    let mu = Poly::var(Var::Mu);
    let tm = theta * &mu;
    let p = lin.permutation();
    let a = &lin.r.scale(&(&Poly::one() - &tm)) + &p.scale(&mu);
    let b = &lin.flip_slots(&lin.r).scale(&(&Poly::one() + &tm)) + &p.scale(&mu);
    (a, b)
}

fn l_pair_normalization(theta: &Poly, site: &str) -> Vec<String> {
    let t = if theta.is_zero() {
        String::new()
    } else {
        format!("({theta})")
    };
    let (minus, plus) = if theta.is_zero() {
        ("1".to_string(), "1".to_string())
    } else {
        (format!("1−{t}μ"), format!("1+{t}μ"))
    };
    vec![
        format!("L{site}(λ−θ) = [{minus}]⁻¹·((1−θμ)r + μ𝒫)"),
        format!("L̂{site}(λ+θ) = [{plus}]·[({plus})²−μ²]⁻¹·((1+θμ)r₂₁ + μ𝒫)"),
    ]
}

/// `𝕂(λ|θ) ∝ L(λ−θ)(K₀(λ) ⊗ I)L̂(λ+θ)` as a polynomial in `μ` on `aux ⊗ quantum`.
pub fn dress_reflection(lin: &LinearSolution, params: &DressParams) -> Result<Dressed> {
    require_involutive(lin, "dressing")?;
    let n = lin.n;
    if params.k0.slots() != [n] {
        return Err(Error::Dimension(format!(
            "K0 has slots {:?}, expected [{n}]",
            params.k0.slots()
        )));
    }
    if params.k0.degree_in(Var::Mu).unwrap_or(0) > 0 {
        return Err(Error::Dimension("K0 must be given in λ".into()));
    }
    let mut normalization = l_pair_normalization(&params.theta, "");
    let k0 = match params.k0.degree_in(Var::Lambda) {
        None | Some(0) => params.k0.clone(),
        Some(d) => {
            normalization.push(format!("K0(λ) = λ^{d}·K0′(μ)"));
            let mut out = PolyMatrix::zero(&[n]);
            for (r, c, p) in params.k0.entries() {
                out.set(r, c, p.reverse_in(Var::Lambda, d)?.rename(Var::Lambda, Var::Mu));
            }
            out
        }
    };
    let (a, b) = normalized_l_pair(lin, &params.theta);
    let k = &(&a * &k0.kron(&PolyMatrix::identity(&[n]))) * &b;
    Ok(Dressed { k, normalization })
}

/// `T₁;₂₃ = L₁₃L₁₂`: coefficient `k` is `Σ_{a+b=k} L₁₃⁽ᵃ⁾L₁₂⁽ᵇ⁾`.
pub fn rtt_coproduct(l: &SeriesOperator) -> Result<SeriesOperator> {
    let q = &l.slots[1..];
    let mut space = vec![l.slots[0]];
    space.extend_from_slice(q);
    space.extend_from_slice(q);
    let first: Vec<usize> = std::iter::once(0).chain(1..=q.len()).collect();
    let second: Vec<usize> = std::iter::once(0).chain(q.len() + 1..=2 * q.len()).collect();
    let l12: Vec<PolyMatrix> = l
        .coeffs
        .iter()
        .map(|c| c.embed(&first, &space))
        .collect::<Result<_>>()?;
    let l13: Vec<PolyMatrix> = l
        .coeffs
        .iter()
        .map(|c| c.embed(&second, &space))
        .collect::<Result<_>>()?;
    let depth = 2 * l.depth;
    let coeffs = (0..=depth)
        .into_par_iter()
        .map(|k| {
            let lo = k.saturating_sub(l.depth);
            (lo..=k.min(l.depth)).fold(PolyMatrix::zero(&space), |acc, a| &acc + &(&l13[a] * &l12[k - a]))
        })
        .collect();
    SeriesOperator::new(space, coeffs)
}

/// Re-runs the RTT series check on `T₁;₂₃` after confirming `L` itself.
pub fn coproduct_check_rtt(lin: &LinearSolution, l: &SeriesOperator, max_order: usize) -> Result<RttReport> {
    if !check_rtt_series(lin, l, max_order)?.passed {
        return Err(Error::Hypothesis("L does not satisfy the RTT relation".into()));
    }
    check_rtt_series(lin, &rtt_coproduct(l)?, max_order)
}

/// `T₀;₁₂ = L₀₂(λ−θ₂)𝕂₀₁(λ|θ₁)L̂₀₂(λ+θ₂)` on `aux ⊗ quantum ⊗ quantum`.
pub fn dressed_coproduct(lin: &LinearSolution, dressed: &Dressed, theta2: &Poly) -> Result<Dressed> {
    require_involutive(lin, "dressing")?;
    let n = lin.n;
    if dressed.k.slots() != [n, n] {
        return Err(Error::Dimension(format!(
            "dressed operator has slots {:?}, expected [{n}, {n}]",
            dressed.k.slots()
        )));
    }
    let space = [n, n, n];
    let (a, b) = normalized_l_pair(lin, theta2);
    let k01 = dressed.k.embed(&[0, 1], &space)?;
    let t = &(&a.embed(&[0, 2], &space)? * &k01) * &b.embed(&[0, 2], &space)?;
    let mut normalization = dressed.normalization.clone();
    normalization.extend(
        l_pair_normalization(theta2, "₀₂")
            .into_iter()
            .map(|s| s.replace('θ', "θ₂")),
    );
    Ok(Dressed { k: t, normalization })
}

/// Checks the dressed operator, then its coproduct with one more site.
pub fn coproduct_check_reflection(
    lin: &LinearSolution,
    dressed: &Dressed,
    theta2: &Poly,
) -> Result<ReflectionEquationReport> {
    if !check_reflection_equation(lin, &dressed.k)?.passed() {
        return Err(Error::Hypothesis(
            "the dressed operator fails the reflection equation".into(),
        ));
    }
    check_reflection_equation(lin, &dressed_coproduct(lin, dressed, theta2)?.k)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ReflectionAlgebraReport {
    pub depth: usize,
    /// Orders `λ₁⁻ⁿλ₂⁻ᵐ` with `n + m ≤ depth − 2`.
    pub basic: Vec<OrderCheck>,
    /// `[ř𝕂⁽⁰⁾ř, 𝕂⁽ᵐ⁾] = 0` for `m ≤ depth` (recorded with `n = −2`).
    pub rela1: Vec<OrderCheck>,
    /// The `λ₁¹λ₂⁻ᵐ` relation for `m ≤ depth` (recorded with `n = −1`).
    pub rela2: Vec<OrderCheck>,
    /// The scalar `c` when `𝕂⁽⁰⁾ = c·I`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k0_scalar: Option<String>,
    /// The `m = 1` instance of `rela2`, flagged when `𝕂⁽⁰⁾ ∝ I`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub finite_subalgebra: Option<OrderCheck>,
    pub passed: bool,
}

/// Coefficient of `λ₁⁻ⁿλ₂⁻ᵐ` on both sides of the braid-form reflection
/// equation for `𝕂(λ) = Σ 𝕂⁽ᵃ⁾λ⁻ᵃ` with `Ř(λ) = λř + I`. Negative `n`
/// selects the positive powers `λ₁^{−n}`.
fn reflection_order(rc: &PolyMatrix, k: &[PolyMatrix], zero: &PolyMatrix, n: i64, m: i64) -> (PolyMatrix, PolyMatrix) {
    let g = |a: i64| usize::try_from(a).ok().and_then(|a| k.get(a));
    let r = Some(rc);
    let lhs = signed_sum(
        zero,
        vec![
            (1, chain(&[r, g(n + 2), r, g(m)])),
            (-1, chain(&[r, g(n), r, g(m + 2)])),
            (1, chain(&[r, g(n + 1), g(m)])),
            (-1, chain(&[r, g(n), g(m + 1)])),
            (1, chain(&[g(n + 1), r, g(m)])),
            (1, chain(&[g(n), r, g(m + 1)])),
            (1, chain(&[g(n), g(m)])),
        ],
    );
    let rhs = signed_sum(
        zero,
        vec![
            (1, chain(&[g(m), r, g(n + 2), r])),
            (-1, chain(&[g(m + 2), r, g(n), r])),
            (1, chain(&[g(m), g(n + 1), r])),
            (-1, chain(&[g(m + 1), g(n), r])),
            (1, chain(&[g(m + 1), r, g(n)])),
            (1, chain(&[g(m), r, g(n + 1)])),
            (1, chain(&[g(m), g(n)])),
        ],
    );
    (lhs, rhs)
}

pub fn check_reflection_algebra(lin: &LinearSolution, k: &SeriesOperator) -> Result<ReflectionAlgebraReport> {
    require_involutive(lin, "the reflection algebra")?;
    let depth = k.depth;
    if depth < 2 {
        return Err(Error::Hypothesis(format!(
            "depth {depth} leaves no checkable order (need at least 2)"
        )));
    }
    let lay = layout(lin.n, &k.slots)?;
    let rc = lin.r_check.embed(&[0, 1], &lay.space)?;
    let ks: Vec<PolyMatrix> = k
        .coeffs
        .iter()
        .map(|c| c.embed(&lay.first, &lay.space))
        .collect::<Result<_>>()?;
    let zero = PolyMatrix::zero(&lay.space);
    let run = |(n, m): (i64, i64)| {
        let (lhs, rhs) = reflection_order(&rc, &ks, &zero, n, m);
        OrderCheck::compare(n, m, &lhs, &rhs)
    };
    let d = depth as i64;
    let basic_orders: Vec<(i64, i64)> = (0..=d - 2).flat_map(|n| (0..=d - 2 - n).map(move |m| (n, m))).collect();
    let basic: Vec<OrderCheck> = basic_orders.into_par_iter().map(run).collect();
    let rela1: Vec<OrderCheck> = (0..=d).into_par_iter().map(|m| run((-2, m))).collect();
    let rela2: Vec<OrderCheck> = (0..=d).into_par_iter().map(|m| run((-1, m))).collect();
    let k0_scalar = k.coeffs[0].scalar_match();
    let finite_subalgebra = k0_scalar.as_ref().map(|_| rela2[1].clone());
    let passed = basic.iter().chain(&rela1).chain(&rela2).all(OrderCheck::passed);
    Ok(ReflectionAlgebraReport {
        depth,
        basic,
        rela1,
        rela2,
        k0_scalar: k0_scalar.map(|c| c.pretty()),
        finite_subalgebra,
        passed,
    })
}
