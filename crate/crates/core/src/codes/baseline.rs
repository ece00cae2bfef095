use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{CodeError, CodeRecord};

const HEADER: [&str; 4] = ["q", "n", "k", "d_best"];

/// Best-known minimum distances keyed by `(q, n, k)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BaselineTable {
    cells: BTreeMap<(u32, u64, u64), u64>,
}

#[derive(Deserialize)]
struct Cell {
    q: u32,
    n: u64,
    k: u64,
    d_best: u64,
}

impl BaselineTable {
    /// Parses `q,n,k,d_best` CSV. Errors name the offending line.
    pub fn parse(text: &str) -> Result<Self, CodeError> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(true)
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let bad = |line: usize, message: String| CodeError::Baseline { line, message };
        let header = reader.headers().map_err(|e| bad(1, e.to_string()))?.clone();
        if header.iter().ne(HEADER) {
            return Err(bad(1, format!("expected header {:?}", HEADER.join(","))));
        }
        let mut cells = BTreeMap::new();
        for row in reader.records() {
            let row = row.map_err(|e| {
                let line = e.position().map_or(0, |p| p.line() as usize);
                bad(line, e.to_string())
            })?;
            let line = row.position().map_or(0, |p| p.line() as usize);
            let cell: Cell = row
                .deserialize(Some(&header))
                .map_err(|e| match e.kind() {
                    csv::ErrorKind::Deserialize { err, .. } => bad(line, err.to_string()),
                    _ => bad(line, e.to_string()),
                })?;
            if cell.d_best == 0 {
                return Err(bad(line, "d_best must be positive".into()));
            }
            cells.insert((cell.q, cell.n, cell.k), cell.d_best);
        }
        Ok(BaselineTable { cells })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, CodeError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn insert(&mut self, q: u32, n: u64, k: u64, d_best: u64) {
        assert!(d_best > 0, "best-known distances are positive");
        self.cells.insert((q, n, k), d_best);
    }

    pub fn get(&self, q: u32, n: u64, k: u64) -> Option<u64> {
        self.cells.get(&(q, n, k)).copied()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ImprovementStatus {
    Improving,
    NonImproving,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Improvement {
    pub q: u32,
    pub n: u64,
    pub k: u64,
    pub d: u64,
    pub label: String,
    pub status: ImprovementStatus,
    /// Largest shortening depth that still beats the baseline.
    pub s_max: Option<u64>,
    /// `(n, k)` of the first baseline cell the scan could not find.
    pub unknown_cell: Option<(u64, u64)>,
}

/// For each record, the largest `s` such that `[n - i, k - i, d]` beats the
/// baseline for every `i <= s`. A missing cell stops the scan and is flagged.
pub fn compare_baseline(records: &[CodeRecord], baseline: &BaselineTable) -> Vec<Improvement> {
    records
        .iter()
        .map(|rec| {
            let mut s_max = None;
            let mut unknown_cell = None;
            for i in 0..rec.k {
                let (n, k) = (rec.n - i, rec.k - i);
                match baseline.get(rec.q, n, k) {
                    Some(best) if best < rec.d => s_max = Some(i),
                    Some(_) => break,
                    None => {
                        unknown_cell = Some((n, k));
                        break;
                    }
                }
            }
            let status = match (s_max, unknown_cell) {
                (Some(_), _) => ImprovementStatus::Improving,
                (None, Some(_)) => ImprovementStatus::Unknown,
                (None, None) => ImprovementStatus::NonImproving,
            };
            Improvement {
                q: rec.q,
                n: rec.n,
                k: rec.k,
                d: rec.d,
                label: rec.label.clone(),
                status,
                s_max,
                unknown_cell,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::improved_params;
    use crate::semigroup::NumericalSemigroup;

    fn d2_record() -> CodeRecord {
        improved_params(&NumericalSemigroup::new(&[2, 7]).unwrap(), 91, 9, 49).unwrap()
    }

    #[test]
    fn shortening_depth() {
        let mut b = BaselineTable::default();
        for i in 0..=10 {
            b.insert(49, 91 - i, 80 - i, 8);
        }
        b.insert(49, 80, 69, 9);
        let rep = compare_baseline(&[d2_record()], &b);
        assert_eq!(rep[0].status, ImprovementStatus::Improving);
        assert_eq!(rep[0].s_max, Some(10));
        assert_eq!(rep[0].unknown_cell, None);
    }

    #[test]
    fn missing_and_beaten() {
        let rep = compare_baseline(&[d2_record()], &BaselineTable::default());
        assert_eq!(rep[0].status, ImprovementStatus::Unknown);
        assert_eq!(rep[0].s_max, None);
        assert_eq!(rep[0].unknown_cell, Some((91, 80)));

        let mut b = BaselineTable::default();
        b.insert(49, 91, 80, 10);
        let rep = compare_baseline(&[d2_record()], &b);
        assert_eq!(rep[0].status, ImprovementStatus::NonImproving);

        // a hole after some improving steps truncates the scan
        let mut b = BaselineTable::default();
        b.insert(49, 91, 80, 7);
        b.insert(49, 90, 79, 8);
        let rep = compare_baseline(&[d2_record()], &b);
        assert_eq!(rep[0].s_max, Some(1));
        assert_eq!(rep[0].unknown_cell, Some((89, 78)));
    }

    #[test]
    fn csv_loading() {
        let t = BaselineTable::parse("q,n,k,d_best\n49,91,80,8\n49,90,79,8\n").unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.get(49, 90, 79), Some(8));
        assert_eq!(t.get(49, 89, 78), None);

        let err = BaselineTable::parse("q,n,k,d_best\n49,91,80,8\n49,x,79,8\n").unwrap_err();
        assert!(matches!(err, CodeError::Baseline { line: 3, .. }), "{err}");
        let err = BaselineTable::parse("q,n,k,d_best\n49,91,80,0\n").unwrap_err();
        assert!(matches!(err, CodeError::Baseline { line: 2, .. }), "{err}");
        let err = BaselineTable::parse("q,n,k,d\n").unwrap_err();
        assert!(matches!(err, CodeError::Baseline { line: 1, .. }));
        let err = BaselineTable::parse("q,n,k,d_best\n49,91,80\n").unwrap_err();
        assert!(matches!(err, CodeError::Baseline { line: 2, .. }), "{err}");
    }
}
