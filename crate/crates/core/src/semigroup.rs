//! Numerical semigroups and the Feng-Rao counts built on them.
//!
//! Members are listed as `rho_1 = 0 < rho_2 < ...` (one-based). `nu(l)`
//! counts ordered pairs `(i, j)`, `i, j >= 1`, with `rho_i + rho_j =
//! rho_{l+1}`; `r(d)` counts the indices `l >= 0` with `nu(l) < d`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("a semigroup needs at least one generator")]
    Empty,
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("generators have gcd {0}, so the gap set is infinite")]
    NotCofinite(u32),
    #[error("rho is indexed from 1")]
    RhoIndexZero,
    #[error("design distance must be at least 2, got {0}")]
    DesignDistanceTooSmall(u32),
    #[error("cannot parse generator list {0:?}")]
    Parse(String),
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A cofinite additive submonoid of the naturals.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct NumericalSemigroup {
    generators: Vec<u32>,
    gaps: Vec<u32>,
    conductor: u32,
    /// Membership for `0..member.len()`; everything beyond is a member.
    member: Vec<bool>,
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{self}")
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self
            .generators
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "<{gens}>")
    }
}

impl TryFrom<Vec<u32>> for NumericalSemigroup {
    type Error = SemigroupError;

    fn try_from(gens: Vec<u32>) -> Result<Self, Self::Error> {
        Self::new(&gens)
    }
}

impl From<NumericalSemigroup> for Vec<u32> {
    fn from(s: NumericalSemigroup) -> Self {
        s.generators
    }
}

impl FromStr for NumericalSemigroup {
    type Err = SemigroupError;

    /// Parses `"a,b,c"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let gens = s
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| SemigroupError::Parse(s.to_string()))?;
        Self::new(&gens)
    }
}

impl NumericalSemigroup {
    pub fn new(gens: &[u32]) -> Result<Self, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::Empty);
        }
        if gens.contains(&0) {
            return Err(SemigroupError::ZeroGenerator);
        }
        let mut generators = gens.to_vec();
        generators.sort_unstable();
        generators.dedup();
        let g = generators.iter().fold(0u64, |acc, &x| gcd(acc, x as u64));
        if g != 1 {
            return Err(SemigroupError::NotCofinite(g as u32));
        }

        // Sieve until a run of `smallest` consecutive members appears; every
        // integer past the start of that run is then a member.
        let smallest = generators[0] as usize;
        let mut member = vec![true];
        let mut run = 1usize;
        let mut n = 0usize;
        while run < smallest {
            n += 1;
            let is_member = generators
                .iter()
                .any(|&x| x as usize <= n && member[n - x as usize]);
            member.push(is_member);
            run = if is_member { run + 1 } else { 0 };
        }
        let conductor = if smallest == 1 { 0 } else { (n + 1 - smallest) as u32 };
        let largest = *generators.last().unwrap();
        let bound = (2 * conductor + 2 * largest + 64) as usize;
        member.resize(bound.max(member.len()), true);
        member.truncate(bound);
        let gaps = (0..conductor).filter(|&x| !member[x as usize]).collect();
        Ok(NumericalSemigroup {
            generators,
            gaps,
            conductor,
            member,
        })
    }

    /// The generators as supplied (sorted, deduplicated).
    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        match self.member.get(n as usize) {
            Some(&m) => m,
            None => true,
        }
    }

    pub fn genus(&self) -> u32 {
        self.gaps.len() as u32
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    /// Smallest `c` with `[c, inf)` inside the semigroup; 0 when there are no gaps.
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// The `i`-th smallest member, `rho(1) == 0`.
    pub fn rho(&self, i: u64) -> Result<u64, SemigroupError> {
        if i == 0 {
            return Err(SemigroupError::RhoIndexZero);
        }
        Ok(self.rho0(i - 1))
    }

    /// Zero-based: `rho0(l) == rho(l + 1)`.
    fn rho0(&self, l: u64) -> u64 {
        let c = self.conductor as u64;
        let g = self.genus() as u64;
        let below = c - g;
        if l >= below {
            return c + (l - below);
        }
        let mut seen = 0;
        for (x, &m) in self.member.iter().enumerate() {
            if m {
                if seen == l {
                    return x as u64;
                }
                seen += 1;
            }
        }
        unreachable!("members below the conductor lie in the bitmap")
    }

    /// Members up to and including `bound`.
    pub fn members_up_to(&self, bound: u64) -> Vec<u64> {
        (0..=bound).filter(|&x| self.contains(x as i64)).collect()
    }

    /// Number of ordered index pairs `(i, j)` with `rho_i + rho_j = rho_{l+1}`.
    pub fn nu(&self, l: u64) -> u64 {
        let target = self.rho0(l);
        (0..=target)
            .filter(|&a| self.contains(a as i64) && self.contains((target - a) as i64))
            .count() as u64
    }

    /// `nu(0), ..., nu(len - 1)`.
    pub fn nu_sequence(&self, len: u64) -> Vec<u64> {
        (0..len).map(|l| self.nu(l)).collect()
    }

    /// Last index that can have `nu < d`. Past `2c - g - 1` the sequence is
    /// `l + 1 - g`, strictly increasing.
    pub fn nu_scan_limit(&self, d: u32) -> u64 {
        2 * self.conductor as u64 + d as u64 + self.genus() as u64
    }

    /// Indices `l >= 0` with `nu(l) < d`, ascending.
    pub fn small_nu_indices(&self, d: u32) -> Result<Vec<u64>, SemigroupError> {
        if d < 2 {
            return Err(SemigroupError::DesignDistanceTooSmall(d));
        }
        Ok((0..=self.nu_scan_limit(d))
            .filter(|&l| self.nu(l) < d as u64)
            .collect())
    }

    /// `r_d = #{ l >= 0 : nu(l) < d }`.
    pub fn r(&self, d: u32) -> Result<u64, SemigroupError> {
        Ok(self.small_nu_indices(d)?.len() as u64)
    }

    /// `r_d` for every `d` in `0..=d_max`, from one pass over the nu sequence.
    pub fn r_values(&self, d_max: u32) -> Vec<u64> {
        let len = self.nu_scan_limit(d_max) + 1;
        let mut hist = vec![0u64; d_max as usize + 1];
        for l in 0..len {
            let nu = self.nu(l);
            if nu < d_max as u64 {
                hist[nu as usize] += 1;
            }
        }
        // r_d counts nu values strictly below d
        let mut out = Vec::with_capacity(hist.len());
        let mut acc = 0;
        for h in &hist {
            out.push(acc);
            acc += h;
        }
        out
    }

    /// The unique minimal generating set.
    pub fn minimal_generators(&self) -> Vec<u32> {
        // every minimal generator is below conductor + multiplicity
        let multiplicity = self.rho0(1) as u32;
        let limit = self.conductor + multiplicity;
        let nonzero = (1..=limit)
            .filter(|&x| self.contains(x as i64))
            .collect::<Vec<_>>();
        nonzero
            .iter()
            .copied()
            .filter(|&x| {
                !nonzero
                    .iter()
                    .take_while(|&&a| 2 * a <= x)
                    .any(|&a| self.contains((x - a) as i64))
            })
            .collect()
    }

    /// Same semigroup, regardless of the generating set used to build it.
    pub fn same_as(&self, other: &Self) -> bool {
        self.conductor == other.conductor && self.gaps == other.gaps
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Oracle: membership by explicit closure of the generator set.
    fn brute_members(gens: &[u32], bound: usize) -> Vec<bool> {
        let mut m = vec![false; bound + 1];
        m[0] = true;
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = x + g as usize;
                if y <= bound && !m[y] {
                    m[y] = true;
                    frontier.push(y);
                }
            }
        }
        m
    }

    /// Oracle: ordered pair count by scanning index pairs of the member list.
    fn brute_nu(gens: &[u32], l: usize) -> u64 {
        let m = brute_members(gens, 2000);
        let rho: Vec<usize> = (0..=2000).filter(|&x| m[x]).collect();
        let t = rho[l];
        let mut count = 0;
        for &a in rho.iter().take_while(|&&a| a <= t) {
            for &b in rho.iter().take_while(|&&b| b <= t) {
                if a + b == t {
                    count += 1;
                }
            }
        }
        count
    }

    fn sg(g: &[u32]) -> NumericalSemigroup {
        NumericalSemigroup::new(g).unwrap()
    }

    #[test]
    fn trivial_semigroup() {
        let s = sg(&[1]);
        assert_eq!(s.genus(), 0);
        assert_eq!(s.conductor(), 0);
        assert!(s.gaps().is_empty());
        assert_eq!(s.r(2).unwrap(), 1);
        assert_eq!(s.minimal_generators(), vec![1]);
    }

    #[test]
    fn two_seven() {
        let s = sg(&[2, 7]);
        assert_eq!(s.gaps(), &[1, 3, 5]);
        assert_eq!(s.genus(), 3);
        assert_eq!(s.conductor(), 6);
        assert!(s.contains(0));
        assert!(!s.contains(5));
        assert!(!s.contains(-4));
        assert_eq!(s.rho(1).unwrap(), 0);
        assert_eq!(s.rho(5).unwrap(), 7);
        assert_eq!(s.nu(0), 1);
        assert_eq!(s.nu(1), 2);
        assert_eq!(s.nu(7), 6);
        assert_eq!(
            s.nu_sequence(12),
            vec![1, 2, 3, 4, 2, 5, 4, 6, 6, 7, 8, 9]
        );
        assert_eq!(s.r(9).unwrap(), 11);
        let table = s.r_values(40);
        for d in 2..=40 {
            assert_eq!(table[d as usize], s.r(d).unwrap());
        }
    }

    #[test]
    fn construction_errors() {
        assert_eq!(sg_err(&[4, 6]), SemigroupError::NotCofinite(2));
        assert_eq!(sg_err(&[]), SemigroupError::Empty);
        assert_eq!(sg_err(&[0, 3]), SemigroupError::ZeroGenerator);
        assert_eq!(sg(&[2, 7]).rho(0).unwrap_err(), SemigroupError::RhoIndexZero);
        assert_eq!(
            sg(&[2, 7]).r(1).unwrap_err(),
            SemigroupError::DesignDistanceTooSmall(1)
        );
    }

    fn sg_err(g: &[u32]) -> SemigroupError {
        NumericalSemigroup::new(g).unwrap_err()
    }

    #[test]
    fn small_examples() {
        assert!(!sg(&[5, 7, 9]).contains(13));
        assert!(!sg(&[5, 7, 9]).contains(11));
        assert_eq!(sg(&[4, 9]).rho(4).unwrap(), 9);
        assert_eq!(sg(&[5, 7, 8]).genus(), 7);
        assert_eq!(sg(&[10, 13, 16, 17]).genus(), 24);
    }

    #[test]
    fn minimal_generators() {
        assert_eq!(sg(&[2, 4, 7]).minimal_generators(), vec![2, 7]);
        assert_eq!(sg(&[5, 7, 8, 10]).minimal_generators(), vec![5, 7, 8]);
        assert_eq!(sg(&[1, 3]).minimal_generators(), vec![1]);
        assert_eq!(sg(&[4, 5, 6, 7, 8]).minimal_generators(), vec![4, 5, 6, 7]);
    }

    /// Values from the brute-force oracle: r_14 over <2,17> is 19 and
    /// r_27 over <4,17> is 46.
    #[test]
    fn larger_r_values() {
        let s = sg(&[2, 17]);
        let nus: Vec<u64> = (0..80).map(|l| brute_nu(&[2, 17], l)).collect();
        let oracle = nus.iter().filter(|&&v| v < 14).count() as u64;
        assert_eq!(oracle, 19);
        assert_eq!(s.r(14).unwrap(), 19);
        let nus: Vec<u64> = (0..150).map(|l| brute_nu(&[4, 17], l)).collect();
        let oracle = nus.iter().filter(|&&v| v < 27).count() as u64;
        assert_eq!(oracle, 46);
        assert_eq!(sg(&[4, 17]).r(27).unwrap(), 46);
    }

    #[test]
    fn parse_from_cli_syntax() {
        let s: NumericalSemigroup = "2, 7".parse().unwrap();
        assert_eq!(s.generators(), &[2, 7]);
        assert!("2,x".parse::<NumericalSemigroup>().is_err());
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, "[2,7]");
        let back: NumericalSemigroup = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn catalog_like_semigroups_match_oracles() {
        let cases: &[&[u32]] = &[
            &[2, 7],
            &[4, 7],
            &[6, 7, 8],
            &[4, 5, 6, 7],
            &[5, 7, 8],
            &[3, 8],
            &[6, 7, 8, 9],
            &[4, 9],
            &[7, 8, 9],
            &[5, 7, 9],
            &[5, 8, 9],
            &[3, 10],
            &[5, 9],
            &[8, 9, 10],
            &[2, 17],
            &[4, 17],
            &[10, 13, 16, 17],
        ];
        for gens in cases {
            let s = sg(gens);
            let m = brute_members(gens, 500);
            for x in 0..500 {
                assert_eq!(s.contains(x as i64), m[x], "{s} at {x}");
            }
            let g = s.genus() as u64;
            let c = s.conductor() as u64;
            assert!(c <= 2 * g);
            // stabilized tail, checked against the pair-scan oracle
            for l in (2 * c).saturating_sub(g + 1)..=2 * c + g {
                assert_eq!(brute_nu(gens, l as usize), l + 1 - g, "{s} l={l}");
                assert_eq!(s.nu(l), l + 1 - g);
            }
            for l in 0..40 {
                assert_eq!(s.nu(l), brute_nu(gens, l as usize), "{s} l={l}");
            }
        }
    }
}
