//! Reading artifacts named on the command line, with a digest of every file
//! read.

use std::collections::BTreeMap;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde_json::Value;
use sha2::{Digest, Sha256};
use stybe_core::algebra::{GroupTable, Level, NearBrace, OpTable, RingTable};
use stybe_core::matrix::{Poly, PolyMatrix, Var};
use stybe_core::quantum::{DressParams, Dressed, SeriesOperator};
use stybe_core::reflection::ReflectionMap;
use stybe_core::ybe::{solution_from_structure, Rule, SetSolution};

use crate::args::Opts;
use crate::{CliError, InputDigest};

pub(crate) struct Context {
    pub opts: Opts,
    pub digests: BTreeMap<String, InputDigest>,
}

/// A solution together with the structure it came from, if any.
pub(crate) struct Loaded {
    pub solution: SetSolution,
    pub structure: Option<NearBrace>,
}

/// Anything `--operator` may point at.
pub(crate) enum Operator {
    Matrix(PolyMatrix),
    Dressed(Dressed),
    Series(SeriesOperator),
}

fn parse<T: DeserializeOwned>(v: Value, what: &str) -> Result<T, CliError> {
    serde_json::from_value(v).map_err(|e| CliError::Json {
        path: what.to_string(),
        detail: e.to_string(),
    })
}

fn has(v: &Value, key: &str) -> bool {
    v.get(key).is_some()
}

impl Context {
    pub fn new(opts: Opts) -> Self {
        Context {
            opts,
            digests: BTreeMap::new(),
        }
    }

    fn read(&mut self, flag: &str, path: &Path) -> Result<Value, CliError> {
        let shown = path.display().to_string();
        let bytes = std::fs::read(path).map_err(|source| CliError::Io {
            path: shown.clone(),
            source,
        })?;
        self.digests.insert(
            flag.to_string(),
            InputDigest {
                path: shown.clone(),
                sha256: format!("{:x}", Sha256::digest(&bytes)),
            },
        );
        serde_json::from_slice(&bytes).map_err(|e| CliError::Json {
            path: shown,
            detail: e.to_string(),
        })
    }

    fn required(&mut self, flag: &str) -> Result<Value, CliError> {
        let path = match flag {
            "input" => self.opts.input.clone(),
            "k" => self.opts.k.clone(),
            "mul" => self.opts.mul.clone(),
            "structure" => self.opts.structure.clone(),
            "operator" => self.opts.operator.clone(),
            "params" => self.opts.params.clone(),
            _ => None,
        };
        let path = path.ok_or_else(|| CliError::Usage(format!("--{flag} PATH is required")))?;
        self.read(flag, &path)
    }

    pub fn level(&self) -> Result<Option<Level>, CliError> {
        self.opts
            .level
            .as_deref()
            .map(|s| s.parse().map_err(CliError::from))
            .transpose()
    }

    pub fn bound(&self) -> Result<usize, CliError> {
        self.opts
            .bound
            .ok_or_else(|| CliError::Usage("--bound N (the set size) is required".into()))
    }

    pub fn structure(&mut self) -> Result<NearBrace, CliError> {
        let v = self.required("input")?;
        parse(v, "structure")
    }

    pub fn ring(&mut self) -> Result<RingTable, CliError> {
        let v = self.required("input")?;
        parse(v, "ring")
    }

    /// `--input` holding a solution, or a structure mapped through `--rule`.
    pub fn solution(&mut self) -> Result<Loaded, CliError> {
        let v = self.required("input")?;
        if has(&v, "sigma") {
            if self.opts.rule.is_some() {
                return Err(CliError::Usage("--rule applies to structure inputs only".into()));
            }
            return Ok(Loaded {
                solution: parse(v, "solution")?,
                structure: None,
            });
        }
        if has(&v, "mul") {
            let nb: NearBrace = parse(v, "structure")?;
            let solution = solution_from_structure(&nb, self.rule_for(&nb)?)?;
            return Ok(Loaded {
                solution,
                structure: Some(nb),
            });
        }
        Err(CliError::Usage(
            "--input must be a solution {sigma, tau} or a structure {add, mul}".into(),
        ))
    }

    pub fn rule_for(&self, nb: &NearBrace) -> Result<Rule, CliError> {
        match &self.opts.rule {
            Some(r) => Ok(r.parse()?),
            None => Ok(Rule::for_level(nb.kind())),
        }
    }

    pub fn reflection_map(&mut self) -> Result<ReflectionMap, CliError> {
        let v = self.required("k")?;
        parse(v, "reflection map")
    }

    pub fn has_k(&self) -> bool {
        self.opts.k.is_some()
    }

    /// `--mul` as bare rows or a structure; otherwise the structure behind
    /// `--input`, when there is one.
    pub fn group(&mut self, loaded: &Loaded) -> Result<Option<GroupTable>, CliError> {
        let table = if self.opts.mul.is_some() {
            let v = self.required("mul")?;
            if has(&v, "mul") {
                parse::<NearBrace>(v, "structure")?.mul().clone()
            } else {
                parse::<OpTable>(v, "group table")?
            }
        } else if let Some(nb) = &loaded.structure {
            nb.mul().clone()
        } else {
            return Ok(None);
        };
        Ok(Some(GroupTable::new(table)?))
    }

    /// `--structure`, else the structure behind `--input`.
    pub fn structure_for_filter(&mut self, loaded: &Loaded) -> Result<Option<NearBrace>, CliError> {
        if self.opts.structure.is_some() {
            let v = self.required("structure")?;
            return Ok(Some(parse(v, "structure")?));
        }
        Ok(loaded.structure.clone())
    }

    pub fn operator(&mut self) -> Result<Option<Operator>, CliError> {
        if self.opts.operator.is_none() {
            return Ok(None);
        }
        let v = self.required("operator")?;
        let op = if has(&v, "coeffs") {
            Operator::Series(parse(v, "series operator")?)
        } else if has(&v, "normalization") {
            Operator::Dressed(parse(v, "dressed matrix")?)
        } else {
            Operator::Matrix(parse(v, "matrix")?)
        };
        Ok(Some(op))
    }

    pub fn params(&mut self, n: usize) -> Result<DressParams, CliError> {
        if self.opts.params.is_none() {
            return Ok(DressParams::identity(n));
        }
        let v = self.required("params")?;
        parse(v, "dressing parameters")
    }

    pub fn theta2(&self) -> Result<Poly, CliError> {
        match &self.opts.theta2 {
            None => Ok(Poly::zero()),
            Some(s) => parse_poly_arg(s),
        }
    }
}

/// A rational constant or a single monomial key such as `t2` or `l^2*m`.
fn parse_poly_arg(s: &str) -> Result<Poly, CliError> {
    if let Ok(c) = Poly::parse_coeff(s) {
        return Ok(Poly::constant(c));
    }
    let e = Poly::parse_monomial_key(s)
        .map_err(|_| CliError::Usage(format!("cannot read `{s}` as a rational or a monomial")))?;
    Ok(Var::ALL
        .iter()
        .fold(Poly::one(), |acc, v| &acc * &Poly::monomial(*v, e[v.index()])))
}
