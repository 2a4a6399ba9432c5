//! Multivariate polynomials with exact rational coefficients over a fixed
//! set of seven variables.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub const NVARS: usize = 7;

/// Exponents of `(λ, λ₁, λ₂, θ, θ₁, θ₂, μ)`.
pub type Exponent = [u16; NVARS];

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Var {
    Lambda,
    Lambda1,
    Lambda2,
    Theta,
    Theta1,
    Theta2,
    Mu,
}

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::Lambda,
        Var::Lambda1,
        Var::Lambda2,
        Var::Theta,
        Var::Theta1,
        Var::Theta2,
        Var::Mu,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Key used in JSON monomials.
    pub fn ascii(self) -> &'static str {
        ["l", "l1", "l2", "t", "t1", "t2", "m"][self.index()]
    }

    pub fn symbol(self) -> &'static str {
        ["λ", "λ₁", "λ₂", "θ", "θ₁", "θ₂", "μ"][self.index()]
    }

    fn from_ascii(s: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.ascii() == s)
    }
}

/// A polynomial as a map from exponent vectors to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Exponent, BigRational>,
}

fn ratio(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = Poly::zero();
        p.add_term([0; NVARS], c);
        p
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(ratio(n))
    }

    pub fn frac(num: i64, den: i64) -> Self {
        Poly::constant(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn var(v: Var) -> Self {
        Poly::monomial(v, 1)
    }

    pub fn monomial(v: Var, exp: u16) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = exp;
        let mut p = Poly::zero();
        p.add_term(e, BigRational::one());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exponent, BigRational)>) -> Self {
        let mut p = Poly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponent, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    /// The value if the polynomial has no variables.
    pub fn constant_value(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&[0; NVARS]).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_in(&self, v: Var) -> Option<u16> {
        self.terms.keys().map(|e| e[v.index()]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().map(|&x| x as u32).sum()).max()
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff(&self, v: Var, k: u16) -> Poly {
        let i = v.index();
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[i] == k)
                .map(|(e, c)| {
                    let mut e = *e;
                    e[i] = 0;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Replaces `v` by `value`.
    pub fn substitute(&self, v: Var, value: &Poly) -> Poly {
        let i = v.index();
        let mut powers: Vec<Poly> = vec![Poly::one()];
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            let k = e[i] as usize;
            while powers.len() <= k {
                let next = powers.last().expect("non-empty") * value;
                powers.push(next);
            }
            let mut rest = *e;
            rest[i] = 0;
            let mut term = Poly::zero();
            term.add_term(rest, c.clone());
            out += &(&term * &powers[k]);
        }
        out
    }

    /// `x^d · p(1/x)` where `d` is the degree in `x`: reverses the
    /// coefficient sequence in that variable.
    pub fn reverse_in(&self, v: Var, d: u16) -> Result<Poly> {
        let i = v.index();
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            if e[i] > d {
                return Err(Error::Dimension(format!(
                    "degree {} in {} exceeds {d}",
                    e[i],
                    v.symbol()
                )));
            }
            let mut e = *e;
            e[i] = d - e[i];
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    /// Renames variable `from` to `to` (the target must not already occur).
    pub fn rename(&self, from: Var, to: Var) -> Poly {
        if from == to {
            return self.clone();
        }
        self.substitute(from, &Poly::var(to))
    }

    /// ASCII monomial key, e.g. `l1^2*t^1`; the constant monomial is `1`.
    pub fn monomial_key(e: &Exponent) -> String {
        let parts: Vec<String> = Var::ALL
            .iter()
            .filter(|v| e[v.index()] > 0)
            .map(|v| format!("{}^{}", v.ascii(), e[v.index()]))
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    pub fn parse_monomial_key(key: &str) -> Result<Exponent> {
        let mut e = [0; NVARS];
        if key == "1" {
            return Ok(e);
        }
        for factor in key.split('*') {
            let (name, exp) = factor.split_once('^').unwrap_or((factor, "1"));
            let v =
                Var::from_ascii(name).ok_or_else(|| Error::Parse(format!("unknown variable `{name}` in `{key}`")))?;
            let exp: u16 = exp
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{key}`")))?;
            e[v.index()] += exp;
        }
        Ok(e)
    }

    /// Coefficient as `p/q` (always with a denominator).
    pub fn coeff_string(c: &BigRational) -> String {
        format!("{}/{}", c.numer(), c.denom())
    }

    pub fn parse_coeff(s: &str) -> Result<BigRational> {
        let bad = || Error::Parse(format!("bad coefficient `{s}`"));
        let (n, d) = s.split_once('/').unwrap_or((s, "1"));
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(BigRational::new(n, d))
    }

    /// Human-readable form with Unicode symbols, highest total degree first,
    /// e.g. `−λ²+1`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<(&Exponent, &BigRational)> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().map(|&x| x as u32).sum();
            let db: u32 = b.iter().map(|&x| x as u32).sum();
            db.cmp(&da).then(b.cmp(a))
        });
        let mut out = String::new();
        for (i, (e, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            if neg {
                out.push('−');
            } else if i > 0 {
                out.push('+');
            }
            let a = c.abs();
            let mono = pretty_monomial(e);
            if mono.is_empty() {
                out.push_str(&pretty_rational(&a));
            } else {
                if !a.is_one() {
                    if a.is_integer() {
                        out.push_str(&a.to_string());
                    } else {
                        out.push_str(&format!("({})", pretty_rational(&a)));
                    }
                }
                out.push_str(&mono);
            }
        }
        out
    }
}

fn pretty_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn superscript(n: u16) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|d| DIGITS[d.to_digit(10).expect("decimal digit") as usize])
        .collect()
}

fn pretty_monomial(e: &Exponent) -> String {
    let mut s = String::new();
    for v in Var::ALL {
        match e[v.index()] {
            0 => {}
            1 => s.push_str(v.symbol()),
            k => {
                s.push_str(v.symbol());
                s.push_str(&superscript(k));
            }
        }
    }
    s
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl From<i64> for Poly {
    fn from(n: i64) -> Self {
        Poly::int(n)
    }
}

impl From<BigRational> for Poly {
    fn from(c: BigRational) -> Self {
        Poly::constant(c)
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;

    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Poly {
    type Output = Poly;

    fn sub(mut self, rhs: Poly) -> Poly {
        self -= &rhs;
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        -&self
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = *ea;
                for (x, y) in e.iter_mut().zip(eb) {
                    *x += y;
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;

    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            m.serialize_entry(&Poly::monomial_key(e), &Poly::coeff_string(c))?;
        }
        m.end()
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct PolyVisitor;

        impl<'de> Visitor<'de> for PolyVisitor {
            type Value = Poly;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map from monomial keys to \"p/q\" coefficients")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<Poly, A::Error> {
                let mut p = Poly::zero();
                while let Some((k, v)) = map.next_entry::<String, String>()? {
                    let e = Poly::parse_monomial_key(&k).map_err(de::Error::custom)?;
                    let c = Poly::parse_coeff(&v).map_err(de::Error::custom)?;
                    p.add_term(e, c);
                }
                Ok(p)
            }
        }

        d.deserialize_map(PolyVisitor)
    }
}
