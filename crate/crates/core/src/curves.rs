//! Catalog of the maximal-curve families A to E.
//!
//! Each family is a plane curve (or a quotient of the Hermitian curve) over
//! GF(q), q = q0^2, with a closed-form genus. The curves are maximal, so the
//! number of rational points is `q + 1 + 2 g q0`. Every instance carries the
//! Weierstrass semigroups known at its distinguished rational points.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::gf::{is_prime, prime_power};
use crate::semigroup::{gcd, NumericalSemigroup, SemigroupError};

/// Label of the unique point at infinity of a plane model.
pub const P_INF: &str = "Pinf";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("q0 = {0} is not a prime power")]
    NotPrimePower(u32),
    #[error("q0 = {0} gives q = q0^2 above 2^16")]
    TooLarge(u32),
    #[error("family A: {0}")]
    FamilyA(String),
    #[error("family B: {0}")]
    FamilyB(String),
    #[error("family C: {0}")]
    FamilyC(String),
    #[error("family D: {0}")]
    FamilyD(String),
    #[error("family E: {0}")]
    FamilyE(String),
    #[error("cannot parse curve parameters {0:?}")]
    Parse(String),
    #[error("unknown instance {0:?}")]
    UnknownInstance(String),
    #[error("{instance} has no point labelled {label:?}")]
    UnknownPoint { instance: String, label: String },
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

/// Which additive subgroup H_s of `{c : c^q0 + c = 0}` a family-C quotient uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Subgroup {
    /// H_s = {0}: the Hermitian curve itself.
    Trivial,
    /// H_s = GF(s) inside GF(q0), characteristic 2.
    Subfield,
    /// Kernel of the absolute trace of GF(q0), s = q0/2, characteristic 2.
    TraceKernel,
    /// q0 = 9, s = 3, H_s = {x : x^3 = alpha x}.
    Eigenspace,
    /// Any other subgroup of order s: parameter level only.
    Unspecified,
}

impl Subgroup {
    fn infer(q0: u32, s: u32) -> Self {
        if s == 1 {
            return Subgroup::Trivial;
        }
        if q0 % 2 == 0 && s.is_power_of_two() {
            let (lq, ls) = (q0.trailing_zeros(), s.trailing_zeros());
            if lq % ls == 0 {
                return Subgroup::Subfield;
            }
            if 2 * s == q0 {
                return Subgroup::TraceKernel;
            }
        }
        if q0 == 9 && s == 3 {
            return Subgroup::Eigenspace;
        }
        Subgroup::Unspecified
    }

    fn name(self) -> &'static str {
        match self {
            Subgroup::Trivial => "trivial",
            Subgroup::Subfield => "subfield",
            Subgroup::TraceKernel => "trace",
            Subgroup::Eigenspace => "eigen",
            Subgroup::Unspecified => "unspecified",
        }
    }
}

impl FromStr for Subgroup {
    type Err = CurveError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "trivial" => Subgroup::Trivial,
            "subfield" => Subgroup::Subfield,
            "trace" => Subgroup::TraceKernel,
            "eigen" => Subgroup::Eigenspace,
            "unspecified" => Subgroup::Unspecified,
            _ => return Err(CurveError::Parse(s.to_string())),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family")]
pub enum FamilyParams {
    /// X^{2m} + X^m + Y^{q0+1} = 0.
    A { q0: u32, m: u32 },
    /// X^{2i+2} + X^{2i} + Y^{q0+1} = 0.
    B { q0: u32, i: u32 },
    /// Quotient of the Hermitian curve by an additive subgroup of order s.
    C { q0: u32, s: u32, subgroup: Subgroup },
    /// Y^m = X^{q0} + X.
    D { q0: u32, m: u32 },
    /// Y^{(q-1)/m} = X (X + 1)^{q0-1}.
    E { q0: u32, m: u32 },
}

impl FamilyParams {
    pub fn c(q0: u32, s: u32) -> Self {
        FamilyParams::C {
            q0,
            s,
            subgroup: Subgroup::infer(q0, s),
        }
    }

    pub fn q0(&self) -> u32 {
        match *self {
            FamilyParams::A { q0, .. }
            | FamilyParams::B { q0, .. }
            | FamilyParams::C { q0, .. }
            | FamilyParams::D { q0, .. }
            | FamilyParams::E { q0, .. } => q0,
        }
    }

    pub fn q(&self) -> u32 {
        self.q0() * self.q0()
    }

    pub fn family(&self) -> char {
        match self {
            FamilyParams::A { .. } => 'A',
            FamilyParams::B { .. } => 'B',
            FamilyParams::C { .. } => 'C',
            FamilyParams::D { .. } => 'D',
            FamilyParams::E { .. } => 'E',
        }
    }

    pub fn validate(&self) -> Result<(), CurveError> {
        let q0 = self.q0();
        let (p, _) = prime_power(q0 as u64).ok_or(CurveError::NotPrimePower(q0))?;
        if (q0 as u64) * (q0 as u64) > crate::gf::MAX_ORDER {
            return Err(CurveError::TooLarge(q0));
        }
        match *self {
            FamilyParams::A { m, .. } => {
                if m <= 2 {
                    return Err(CurveError::FamilyA(format!("m = {m} must exceed 2")));
                }
                if (q0 + 1) % m != 0 {
                    return Err(CurveError::FamilyA(format!(
                        "m = {m} does not divide q0 + 1 = {}",
                        q0 + 1
                    )));
                }
                let delta = (q0 + 1) / m;
                if !(delta > 3 && is_prime(delta as u64)) {
                    return Err(CurveError::FamilyA(format!(
                        "Delta = (q0 + 1)/m = {delta} must be a prime above 3"
                    )));
                }
            }
            FamilyParams::B { i, .. } => {
                if (q0 + 1) % 2 != 0 {
                    return Err(CurveError::FamilyB(format!("q0 = {q0} must be odd")));
                }
                let delta = (q0 + 1) / 2;
                if !(delta > 3 && is_prime(delta as u64)) {
                    return Err(CurveError::FamilyB(format!(
                        "Delta = (q0 + 1)/2 = {delta} must be a prime above 3"
                    )));
                }
                if i < 1 || i > delta - 2 {
                    return Err(CurveError::FamilyB(format!(
                        "i = {i} outside 1..={}",
                        delta - 2
                    )));
                }
            }
            FamilyParams::C { s, subgroup, .. } => {
                if s == 0 || q0 % s != 0 {
                    return Err(CurveError::FamilyC(format!("s = {s} does not divide q0 = {q0}")));
                }
                if prime_power(s as u64).is_some_and(|(sp, _)| sp != p) {
                    return Err(CurveError::FamilyC(format!(
                        "s = {s} is not a power of the characteristic {p}"
                    )));
                }
                let ok = match subgroup {
                    Subgroup::Trivial => s == 1,
                    Subgroup::Subfield => {
                        p == 2
                            && s > 1
                            && s.is_power_of_two()
                            && q0.trailing_zeros() % s.trailing_zeros() == 0
                    }
                    Subgroup::TraceKernel => p == 2 && 2 * s == q0,
                    Subgroup::Eigenspace => q0 == 9 && s == 3,
                    Subgroup::Unspecified => true,
                };
                if !ok {
                    return Err(CurveError::FamilyC(format!(
                        "subgroup {} is not available for q0 = {q0}, s = {s}",
                        subgroup.name()
                    )));
                }
            }
            FamilyParams::D { m, .. } => {
                if m == 0 || (q0 + 1) % m != 0 || m == q0 + 1 {
                    return Err(CurveError::FamilyD(format!(
                        "m = {m} is not a proper divisor of q0 + 1 = {}",
                        q0 + 1
                    )));
                }
            }
            FamilyParams::E { m, .. } => {
                if m == 0 || (q0 * q0 - 1) % m != 0 {
                    return Err(CurveError::FamilyE(format!(
                        "m = {m} does not divide q - 1 = {}",
                        q0 * q0 - 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// Genus by the family's closed form. Assumes `validate` passed.
    pub fn genus(&self) -> u64 {
        let q0 = self.q0() as u64;
        match *self {
            FamilyParams::A { m, .. } => m as u64 * (q0 - 2) / 2 + 1,
            FamilyParams::B { .. } => q0 - 1,
            FamilyParams::C { s, .. } => q0 * (q0 / s as u64 - 1) / 2,
            FamilyParams::D { m, .. } => (q0 - 1) * (m as u64 - 1) / 2,
            FamilyParams::E { m, .. } => {
                let m = m as u64;
                let d = gcd(m, q0 + 1);
                (q0 - 1) * (q0 + 1 - d) / (2 * m)
            }
        }
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyParams::A { q0, m } => write!(f, "A:q0={q0},m={m}"),
            FamilyParams::B { q0, i } => write!(f, "B:q0={q0},i={i}"),
            FamilyParams::C { q0, s, subgroup } => {
                write!(f, "C:q0={q0},s={s}")?;
                if subgroup != Subgroup::infer(q0, s) {
                    write!(f, ",sub={}", subgroup.name())?;
                }
                Ok(())
            }
            FamilyParams::D { q0, m } => write!(f, "D:q0={q0},m={m}"),
            FamilyParams::E { q0, m } => write!(f, "E:q0={q0},m={m}"),
        }
    }
}

impl FromStr for FamilyParams {
    type Err = CurveError;

    /// Parses `"D:q0=7,m=2"` and friends; family C takes an optional
    /// `sub=trivial|subfield|trace|eigen|unspecified`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CurveError::Parse(s.to_string());
        let (family, rest) = s.split_once(':').ok_or_else(bad)?;
        let mut q0 = None;
        let mut other = None;
        let mut sub = None;
        for kv in rest.split(',') {
            let (key, value) = kv.split_once('=').ok_or_else(bad)?;
            let key = key.trim();
            let value = value.trim();
            if key == "sub" {
                sub = Some(value.parse::<Subgroup>()?);
                continue;
            }
            let value: u32 = value.parse().map_err(|_| bad())?;
            match (family.trim(), key) {
                (_, "q0") => q0 = Some(value),
                ("A" | "D" | "E", "m") | ("B", "i") | ("C", "s") => other = Some(value),
                _ => return Err(bad()),
            }
        }
        let (q0, x) = (q0.ok_or_else(bad)?, other.ok_or_else(bad)?);
        if sub.is_some() && family.trim() != "C" {
            return Err(bad());
        }
        Ok(match family.trim() {
            "A" => FamilyParams::A { q0, m: x },
            "B" => FamilyParams::B { q0, i: x },
            "C" => FamilyParams::C {
                q0,
                s: x,
                subgroup: sub.unwrap_or_else(|| Subgroup::infer(q0, x)),
            },
            "D" => FamilyParams::D { q0, m: x },
            "E" => FamilyParams::E { q0, m: x },
            _ => return Err(bad()),
        })
    }
}

/// A coefficient in a plane-model equation, resolved against GF(q) later.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Coefficient {
    One,
    /// `alpha^power`, alpha the first primitive element of the subfield
    /// GF(subfield) in enumeration order of GF(q).
    SubfieldPrimitivePower { subfield: u32, power: u32 },
}

/// An affine model `Y^{y_degree} = sum c_j X^{e_j}` whose coordinate
/// functions have a single common pole at infinity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlaneEquation {
    pub y_degree: u32,
    /// `(exponent, coefficient)`, descending exponents.
    pub x_terms: Vec<(u32, Coefficient)>,
}

impl PlaneEquation {
    pub fn x_degree(&self) -> u32 {
        self.x_terms.iter().map(|t| t.0).max().unwrap_or(0)
    }
}

impl fmt::Display for PlaneEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y^{} =", self.y_degree)?;
        for (n, (e, c)) in self.x_terms.iter().enumerate() {
            let sep = if n == 0 { " " } else { " + " };
            let coef = match c {
                Coefficient::One => String::new(),
                Coefficient::SubfieldPrimitivePower { power, .. } => format!("a^{power}*"),
            };
            match e {
                0 => write!(f, "{sep}{}", if coef.is_empty() { "1".into() } else { coef })?,
                1 => write!(f, "{sep}{coef}X")?,
                _ => write!(f, "{sep}{coef}X^{e}")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exactness {
    /// H(P) equals this semigroup.
    Exact,
    /// H(P) is only known to contain it.
    ContainsOnly,
}

#[derive(Debug, Clone, Serialize)]
pub struct PointSemigroup {
    pub label: String,
    pub semigroup: NumericalSemigroup,
    pub exactness: Exactness,
}

#[derive(Debug, Clone, Serialize)]
pub struct CurveInstance {
    pub name: Option<String>,
    pub params: FamilyParams,
    pub q0: u32,
    pub q: u32,
    pub genus: u64,
    pub points: u64,
    pub plane_model: Option<PlaneEquation>,
    pub semigroups: Vec<PointSemigroup>,
}

impl CurveInstance {
    pub fn new(params: FamilyParams) -> Result<Self, CurveError> {
        params.validate()?;
        let q0 = params.q0();
        let q = params.q();
        let genus = params.genus();
        let points = q as u64 + 1 + 2 * genus * q0 as u64;
        let semigroups = family_semigroups(&params, genus)?;
        Ok(CurveInstance {
            name: None,
            params,
            q0,
            q,
            genus,
            points,
            plane_model: plane_model(&params),
            semigroups,
        })
    }

    /// Length of the one-point codes: every rational point but P.
    pub fn code_length(&self) -> u64 {
        self.points - 1
    }

    pub fn semigroup(&self, label: &str) -> Result<&PointSemigroup, CurveError> {
        self.semigroups
            .iter()
            .find(|s| s.label == label)
            .ok_or_else(|| CurveError::UnknownPoint {
                instance: self.display_name(),
                label: label.to_string(),
            })
    }

    pub fn display_name(&self) -> String {
        self.name.clone().unwrap_or_else(|| self.params.to_string())
    }

    pub fn validate(&self) -> ValidationReport {
        validate_instance(self)
    }
}

fn sg(gens: &[u32]) -> Result<NumericalSemigroup, CurveError> {
    let gens: Vec<u32> = gens.iter().copied().filter(|&g| g > 0).collect();
    Ok(NumericalSemigroup::new(&gens)?)
}

/// `<q0 + 1 - h, q0 + 1 - (h - 1), ..., q0 + 1>`.
fn top_interval(q0: u32, h: u32) -> Vec<u32> {
    (q0 + 1 - h..=q0 + 1).collect()
}

fn exact(label: &str, semigroup: NumericalSemigroup) -> PointSemigroup {
    PointSemigroup {
        label: label.to_string(),
        semigroup,
        exactness: Exactness::Exact,
    }
}

/// Family A: `{q0+1-Delta} + {q0+1-(Delta-1)/2 + t : 0 <= t <= (Delta-1)/2}`.
pub fn family_a_generators(q0: u32, m: u32) -> Vec<u32> {
    let delta = (q0 + 1) / m;
    let half = (delta - 1) / 2;
    let mut gens = vec![q0 + 1 - delta];
    gens.extend(q0 + 1 - half..=q0 + 1);
    gens
}

/// Family B: the `n_j` are the `0 < n < Delta` with
/// `n (i + 1) <= (floor(n i / Delta) + 1) Delta`.
pub fn family_b_offsets(q0: u32, i: u32) -> (Vec<u32>, Vec<u32>, Vec<u32>) {
    let delta = (q0 + 1) / 2;
    let ns: Vec<u32> = (1..delta)
        .filter(|&n| n * (i + 1) <= (n * i / delta + 1) * delta)
        .collect();
    let ms = ns.iter().map(|&n| n * i - delta * (n * i / delta)).collect();
    let ks = ns
        .iter()
        .map(|&n| delta * (n * i / delta + 1) - n * (i + 1))
        .collect();
    (ns, ms, ks)
}

fn family_b_generators(q0: u32, offsets: &[u32]) -> Vec<u32> {
    let delta = (q0 + 1) / 2;
    let mut gens = vec![q0 + 1, q0 + 1 - delta];
    gens.extend(offsets.iter().map(|&o| q0 + 1 - o));
    gens
}

/// All values `i q0 - j (q - 1)/m` in `[0, bound]` with `i, j >= 0` and
/// `i m >= j (q0 + 1)`.
pub fn epp_generators(q0: u32, m: u32, bound: u64) -> Vec<u64> {
    let q0 = q0 as u64;
    let m = m as u64;
    let step = (q0 * q0 - 1) / m;
    let mut out = BTreeSet::new();
    // value >= j (q0 + 1)/m, so j is bounded by bound * m / (q0 + 1)
    let j_max = bound * m / (q0 + 1);
    for j in 0..=j_max {
        let i_min = (j * (q0 + 1)).div_ceil(m);
        let i_max = (bound + j * step) / q0;
        for i in i_min..=i_max {
            let value = i * q0 - j * step;
            if value <= bound {
                out.insert(value);
            }
        }
    }
    out.into_iter().collect()
}

fn family_semigroups(params: &FamilyParams, genus: u64) -> Result<Vec<PointSemigroup>, CurveError> {
    let q0 = params.q0();
    Ok(match *params {
        FamilyParams::A { m, .. } => vec![exact("P", sg(&family_a_generators(q0, m))?)],
        FamilyParams::B { i, .. } => {
            let (ns, ms, ks) = family_b_offsets(q0, i);
            let p1 = sg(&family_b_generators(q0, &ns))?;
            let p3 = sg(&family_b_generators(q0, &ks))?;
            if i == 1 {
                vec![exact("P1", p1), exact("P3", p3)]
            } else {
                let p2 = sg(&family_b_generators(q0, &ms))?;
                [("P1", p1), ("P2", p2), ("P3", p3)]
                    .into_iter()
                    .map(|(label, semigroup)| PointSemigroup {
                        label: label.to_string(),
                        semigroup,
                        exactness: Exactness::ContainsOnly,
                    })
                    .collect()
            }
        }
        FamilyParams::C { s, subgroup, .. } => {
            let mut out = vec![exact(P_INF, sg(&[q0 / s, q0 + 1])?)];
            let second = match subgroup {
                Subgroup::Subfield | Subgroup::TraceKernel if s == 2 && q0 > 2 => {
                    Some(vec![q0 - 1, q0, q0 + 1])
                }
                Subgroup::Subfield | Subgroup::TraceKernel if 2 * s == q0 => {
                    Some(top_interval(q0, q0 / 2))
                }
                _ => None,
            };
            if let Some(gens) = second {
                out.push(exact("P", sg(&gens)?));
            }
            out
        }
        FamilyParams::D { m, .. } => vec![
            exact(P_INF, sg(&[m, q0])?),
            exact("P", sg(&top_interval(q0, (q0 + 1) / m))?),
        ],
        FamilyParams::E { m, .. } => {
            let bound = (4 * genus).max(2 * (q0 as u64 + 1));
            let values: Vec<u32> = epp_generators(q0, m, bound)
                .into_iter()
                .filter(|&v| v > 0)
                .map(|v| v as u32)
                .collect();
            let generated = sg(&values)?;
            let minimal = sg(&generated.minimal_generators())?;
            let exactness = if minimal.genus() as u64 == genus {
                Exactness::Exact
            } else {
                Exactness::ContainsOnly
            };
            vec![PointSemigroup {
                label: P_INF.to_string(),
                semigroup: minimal,
                exactness,
            }]
        }
    })
}

fn plane_model(params: &FamilyParams) -> Option<PlaneEquation> {
    let q0 = params.q0();
    let one = Coefficient::One;
    let x_terms = match *params {
        FamilyParams::D { m, .. } => {
            return Some(PlaneEquation {
                y_degree: m,
                x_terms: vec![(q0, one), (1, one)],
            })
        }
        FamilyParams::C { s, subgroup, .. } => match subgroup {
            Subgroup::Trivial => vec![(q0, one), (1, one)],
            Subgroup::Subfield => {
                // M(X) with M(X^s - X) = X^q0 - X: X^{q0/s} + ... + X^s + X
                let mut terms = Vec::new();
                let mut e = q0 / s;
                while e >= 1 {
                    terms.push((e, one));
                    if e == 1 {
                        break;
                    }
                    e /= s;
                }
                terms
            }
            Subgroup::TraceKernel => vec![(2, one), (1, one)],
            Subgroup::Eigenspace => vec![
                (3, one),
                (
                    1,
                    Coefficient::SubfieldPrimitivePower {
                        subfield: 9,
                        power: 3,
                    },
                ),
            ],
            Subgroup::Unspecified => return None,
        },
        _ => return None,
    };
    Some(PlaneEquation {
        y_degree: q0 + 1,
        x_terms,
    })
}

/// The Hermitian curve `Y^{q0+1} = X^{q0} + X` (family C with s = 1).
pub fn hermitian(q0: u32) -> Result<CurveInstance, CurveError> {
    let mut inst = CurveInstance::new(FamilyParams::c(q0, 1))?;
    inst.name = Some(format!("H{q0}"));
    Ok(inst)
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub instance: String,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

pub fn validate_instance(inst: &CurveInstance) -> ValidationReport {
    let mut checks = Vec::new();
    let q0 = inst.q0 as u64;
    let expected = inst.q as u64 + 1 + 2 * inst.genus * q0;
    checks.push(Check {
        name: "maximality".into(),
        passed: inst.points == expected,
        detail: format!("N = {}, q + 1 + 2 g q0 = {expected}", inst.points),
    });
    let formula = inst.params.genus();
    checks.push(Check {
        name: "genus-formula".into(),
        passed: inst.genus == formula,
        detail: format!("g = {}, family formula {formula}", inst.genus),
    });
    for ps in &inst.semigroups {
        let s = &ps.semigroup;
        if ps.exactness == Exactness::Exact {
            checks.push(Check {
                name: format!("non-gaps-q0-q0+1@{}", ps.label),
                passed: s.contains(q0 as i64) && s.contains(q0 as i64 + 1),
                detail: format!("{s} must contain {q0} and {}", q0 + 1),
            });
            checks.push(Check {
                name: format!("semigroup-genus@{}", ps.label),
                passed: s.genus() as u64 == inst.genus,
                detail: format!("genus of {s} is {}, curve genus {}", s.genus(), inst.genus),
            });
        }
    }
    ValidationReport {
        instance: inst.display_name(),
        checks,
    }
}

/// Built-in instances named after their code tags, with the point counts
/// stated for them.
pub const NAMED: &[(&str, &str, u64)] = &[
    ("B1", "B:q0=9,i=1", 226),
    ("C1", "C:q0=8,s=2", 257),
    ("C2", "C:q0=16,s=8", 513),
    ("C3", "C:q0=16,s=4", 1025),
    ("C4", "C:q0=9,s=3", 244),
    ("D1", "D:q0=7,m=4", 176),
    ("D2", "D:q0=7,m=2", 92),
    ("D3", "D:q0=8,m=3", 177),
    ("D4", "D:q0=9,m=5", 370),
    ("E1", "E:q0=7,m=3", 148),
    ("E2", "E:q0=9,m=4", 226),
    ("E3", "E:q0=16,m=5", 1025),
];

/// A built-in instance by name (`D2`), or a parameter string (`D:q0=7,m=2`),
/// or a Hermitian curve `H<q0>`.
pub fn instance(name: &str) -> Result<CurveInstance, CurveError> {
    if let Some((label, params, _)) = NAMED.iter().find(|n| n.0 == name) {
        let mut inst = CurveInstance::new(params.parse()?)?;
        inst.name = Some(label.to_string());
        return Ok(inst);
    }
    if let Some(q0) = name.strip_prefix('H').and_then(|s| s.parse().ok()) {
        return hermitian(q0);
    }
    if name.contains(':') {
        return CurveInstance::new(name.parse()?);
    }
    Err(CurveError::UnknownInstance(name.to_string()))
}

pub fn catalog() -> Vec<CurveInstance> {
    NAMED
        .iter()
        .map(|(name, _, _)| instance(name).expect("built-in instances are valid"))
        .collect()
}

/// Code tags: tag -> (instance, point label).
pub const CODE_TAGS: &[(&str, &str, &str)] = &[
    ("B1", "B1", "P3"),
    ("C1a", "C1", P_INF),
    ("C1b", "C1", "P"),
    ("C2", "C2", P_INF),
    ("C3", "C3", P_INF),
    ("C4", "C4", P_INF),
    ("D1a", "D1", P_INF),
    ("D1b", "D1", "P"),
    ("D2a", "D2", P_INF),
    ("D2b", "D2", "P"),
    ("D3a", "D3", P_INF),
    ("D3b", "D3", "P"),
    ("D4a", "D4", P_INF),
    ("D4b", "D4", "P"),
    ("E1", "E1", P_INF),
    ("E2", "E2", P_INF),
    ("E3", "E3", P_INF),
];

/// Resolves an code tag such as `D1b` to its instance and semigroup.
pub fn code_tag(tag: &str) -> Result<(CurveInstance, PointSemigroup), CurveError> {
    let (_, inst, label) = CODE_TAGS
        .iter()
        .find(|t| t.0 == tag)
        .ok_or_else(|| CurveError::UnknownInstance(tag.to_string()))?;
    let inst = instance(inst)?;
    let ps = inst.semigroup(label)?.clone();
    Ok((inst, ps))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(inst: &CurveInstance, label: &str) -> Vec<u32> {
        inst.semigroup(label).unwrap().semigroup.minimal_generators()
    }

    #[test]
    fn catalog_instances() {
        let d2 = instance("D2").unwrap();
        assert_eq!((d2.genus, d2.points), (3, 92));
        let c3 = instance("C3").unwrap();
        assert_eq!((c3.genus, c3.points), (24, 1025));
        let e2 = instance("E2").unwrap();
        assert_eq!((e2.genus, e2.points), (8, 226));
        let b1 = instance("B1").unwrap();
        assert_eq!(gens(&b1, "P1"), vec![5, 8, 9]);
        assert_eq!(gens(&b1, "P3"), vec![5, 7, 9]);
        let d3 = instance("D3").unwrap();
        assert_eq!(gens(&d3, P_INF), vec![3, 8]);
        assert_eq!(gens(&d3, "P"), vec![6, 7, 8, 9]);
        let c1 = instance("C1").unwrap();
        assert_eq!(gens(&c1, P_INF), vec![4, 9]);
        assert_eq!(gens(&c1, "P"), vec![7, 8, 9]);
        let c2 = instance("C2").unwrap();
        assert_eq!(gens(&c2, P_INF), vec![2, 17]);
        assert_eq!((c2.genus, c2.points), (8, 513));
        let d1 = instance("D1").unwrap();
        assert!(d1.validate().all_passed());
        assert_eq!((d1.genus, d1.points), (9, 176));
    }

    #[test]
    fn family_e_derivation() {
        let e1 = epp_generators(7, 3, 40);
        for v in [0, 5, 7, 8] {
            assert!(e1.contains(&v));
        }
        let e3 = epp_generators(16, 5, 100);
        for v in [10, 13, 16, 17] {
            assert!(e3.contains(&v));
        }
        for v in (0..=100).step_by(16) {
            assert!(e3.contains(&v));
        }
        assert_eq!(gens(&instance("E1").unwrap(), P_INF), vec![5, 7, 8]);
        assert_eq!(gens(&instance("E2").unwrap(), P_INF), vec![5, 7, 9]);
        assert_eq!(gens(&instance("E3").unwrap(), P_INF), vec![10, 13, 16, 17]);
    }

    #[test]
    fn parameter_errors() {
        let bad = [
            "A:q0=9,m=2",
            "A:q0=9,m=5",
            "B:q0=8,i=1",
            "B:q0=9,i=4",
            "C:q0=9,s=2",
            "C:q0=8,s=3",
            "D:q0=7,m=8",
            "D:q0=7,m=3",
            "E:q0=7,m=5",
            "D:q0=6,m=7",
            "C:q0=8,s=4,sub=eigen",
        ];
        for b in bad {
            let p: FamilyParams = b.parse().unwrap();
            assert!(p.validate().is_err(), "{b}");
        }
        assert!("D:q0=7".parse::<FamilyParams>().is_err());
        assert!("D:q0=7,i=2".parse::<FamilyParams>().is_err());
        assert!("F:q0=7,m=2".parse::<FamilyParams>().is_err());
        assert!(instance("Z9").is_err());
    }

    #[test]
    fn params_round_trip_through_display() {
        for (_, text, _) in NAMED {
            let p: FamilyParams = text.parse().unwrap();
            assert_eq!(p.to_string(), *text);
        }
    }

    #[test]
    fn corrupted_genus_fails_maximality() {
        let mut inst = instance("D1").unwrap();
        inst.genus += 1;
        let report = inst.validate();
        assert!(!report.all_passed());
        assert!(report.failures().any(|c| c.name == "maximality"));
    }

    #[test]
    fn plane_models() {
        let c1 = instance("C1").unwrap();
        assert_eq!(c1.plane_model.unwrap().to_string(), "Y^9 = X^4 + X^2 + X");
        let c2 = instance("C2").unwrap();
        assert_eq!(c2.plane_model.unwrap().to_string(), "Y^17 = X^2 + X");
        let c3 = instance("C3").unwrap();
        assert_eq!(c3.plane_model.unwrap().to_string(), "Y^17 = X^4 + X");
        let c4 = instance("C4").unwrap();
        assert_eq!(c4.plane_model.unwrap().to_string(), "Y^10 = X^3 + a^3*X");
        let d4 = instance("D4").unwrap();
        assert_eq!(d4.plane_model.unwrap().to_string(), "Y^5 = X^9 + X");
        assert!(instance("E1").unwrap().plane_model.is_none());
        assert!(instance("B1").unwrap().plane_model.is_none());
        let h = hermitian(3).unwrap();
        assert_eq!(h.plane_model.as_ref().unwrap().to_string(), "Y^4 = X^3 + X");
        assert_eq!(h.points, 28);
    }
}
