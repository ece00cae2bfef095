//! Parameters of improved one-point codes and the tables built from them.
//!
//! For a Weierstrass semigroup `S` at a rational point, a length `n` and a
//! design distance `d >= 2`, the improved code has dimension at least
//! `n - r_d(S)` and minimum distance at least `d`. Records produced here use
//! `k = n - r_d` and can be pushed through the three standard propagation
//! rules.

mod baseline;
mod reference;
mod table;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::semigroup::{NumericalSemigroup, SemigroupError};

pub use baseline::{compare_baseline, BaselineTable, Improvement, ImprovementStatus};
pub use reference::{ReferenceRow, REFERENCE_ROWS};
pub use table::{
    default_d_range, emit_table, reference_table, render, TableFormat, TableInstance, TableRow,
};

#[derive(Debug, Error)]
pub enum CodeError {
    #[error("design distance {d} too large for length {n} (k = n - r_d < 1)")]
    DesignDistanceTooLarge { n: u64, d: u32 },
    #[error("length must be positive")]
    ZeroLength,
    #[error("rule {rule} needs s < {bound}, got s = {s}")]
    RuleOutOfRange { rule: Rule, s: u64, bound: u64 },
    #[error("unknown propagation rule {0:?} (expected i, ii or iii)")]
    UnknownRule(String),
    #[error("unknown table format {0:?} (expected csv, md or json)")]
    UnknownFormat(String),
    #[error("baseline line {line}: {message}")]
    Baseline { line: usize, message: String },
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// The three propagation rules for linear codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rule {
    /// `[n, k, d] -> [n, k, d - s]`, `s < d`.
    I,
    /// `[n, k, d] -> [n, k - s, d]`, `s < k`.
    Ii,
    /// `[n, k, d] -> [n - s, k - s, d]`, `s < k`.
    Iii,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::I => "i",
            Rule::Ii => "ii",
            Rule::Iii => "iii",
        })
    }
}

impl FromStr for Rule {
    type Err = CodeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "i" => Ok(Rule::I),
            "ii" => Ok(Rule::Ii),
            "iii" => Ok(Rule::Iii),
            _ => Err(CodeError::UnknownRule(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub rule: Rule,
    pub s: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    pub n: u64,
    pub k: u64,
    pub d: u64,
}

impl Params {
    pub fn apply(self, step: Step) -> Result<Params, CodeError> {
        let Params { n, k, d } = self;
        let bound = match step.rule {
            Rule::I => d,
            Rule::Ii | Rule::Iii => k,
        };
        if step.s >= bound {
            return Err(CodeError::RuleOutOfRange {
                rule: step.rule,
                s: step.s,
                bound,
            });
        }
        let s = step.s;
        Ok(match step.rule {
            Rule::I => Params { n, k, d: d - s },
            Rule::Ii => Params { n, k: k - s, d },
            Rule::Iii => Params { n: n - s, k: k - s, d },
        })
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.n, self.k, self.d)
    }
}

/// A q-ary `[n, k, d]` claim together with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeRecord {
    pub q: u32,
    pub n: u64,
    pub k: u64,
    pub d: u64,
    pub label: String,
    /// Generators of the semigroup the root record was computed from.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub semigroup: Option<Vec<u32>>,
    /// Parameters before any propagation step.
    pub root: Params,
    #[serde(default)]
    pub derivation: Vec<Step>,
}

impl CodeRecord {
    pub fn params(&self) -> Params {
        Params {
            n: self.n,
            k: self.k,
            d: self.d,
        }
    }

    /// Replays the derivation chain from the root.
    pub fn replay(&self) -> Result<Params, CodeError> {
        self.derivation
            .iter()
            .try_fold(self.root, |p, &step| p.apply(step))
    }

    pub fn propagate(&self, rule: Rule, s: u64) -> Result<CodeRecord, CodeError> {
        propagate(self, rule, s)
    }
}

impl fmt::Display for CodeRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over GF({})", self.params(), self.q)
    }
}

/// `[n, n - r_d(S), d]` over GF(q).
pub fn improved_params(
    semigroup: &NumericalSemigroup,
    n: u64,
    d: u32,
    q: u32,
) -> Result<CodeRecord, CodeError> {
    if n == 0 {
        return Err(CodeError::ZeroLength);
    }
    let r = semigroup.r(d)?;
    if r >= n {
        return Err(CodeError::DesignDistanceTooLarge { n, d });
    }
    let k = n - r;
    let root = Params { n, k, d: d as u64 };
    Ok(CodeRecord {
        q,
        n,
        k,
        d: d as u64,
        label: format!("{semigroup} d={d}"),
        semigroup: Some(semigroup.generators().to_vec()),
        root,
        derivation: Vec::new(),
    })
}

pub fn propagate(rec: &CodeRecord, rule: Rule, s: u64) -> Result<CodeRecord, CodeError> {
    let step = Step { rule, s };
    let next = rec.params().apply(step)?;
    let mut out = rec.clone();
    out.n = next.n;
    out.k = next.k;
    out.d = next.d;
    out.derivation.push(step);
    Ok(out)
}

/// Largest `d` with `n - r_d >= 1`, if any `d >= 2` qualifies.
pub fn max_design_distance(semigroup: &NumericalSemigroup, n: u64) -> Option<u32> {
    // nu(l) <= l + 1, so r_d >= d - 1 and nothing past d = n can work
    let d_max = n.min(u32::MAX as u64 - 1) as u32;
    if d_max < 2 {
        return None;
    }
    let r = semigroup.r_values(d_max);
    (2..=d_max).rev().find(|&d| r[d as usize] < n)
}
