use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::{max_design_distance, reference::REFERENCE_ROWS, CodeError, CodeRecord, Params, Rule, Step};
use crate::curves::{code_tag, CurveError};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Markdown,
    Json,
}

impl FromStr for TableFormat {
    type Err = CodeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(TableFormat::Csv),
            "md" | "markdown" => Ok(TableFormat::Markdown),
            "json" => Ok(TableFormat::Json),
            _ => Err(CodeError::UnknownFormat(s.to_string())),
        }
    }
}

/// One code family entry for `emit_table`.
#[derive(Debug, Clone)]
pub struct TableInstance {
    pub label: String,
    pub semigroup: NumericalSemigroup,
    pub n: u64,
    pub q: u32,
}

impl TableInstance {
    /// The instance behind an code tag, at full length.
    pub fn from_tag(tag: &str) -> Result<Self, CurveError> {
        let (inst, ps) = code_tag(tag)?;
        Ok(TableInstance {
            label: tag.to_string(),
            semigroup: ps.semigroup,
            n: inst.code_length(),
            q: inst.q,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub q: u32,
    pub n: u64,
    pub k: u64,
    pub d: u64,
    pub labels: Vec<String>,
    /// Shortening depth carried over from a reference row, if any.
    pub s: Option<u64>,
    pub record: CodeRecord,
}

impl TableRow {
    fn from_record(record: CodeRecord, labels: Vec<String>, s: Option<u64>) -> Self {
        TableRow {
            q: record.q,
            n: record.n,
            k: record.k,
            d: record.d,
            labels,
            s,
            record,
        }
    }

    pub fn label(&self) -> String {
        self.labels.join("/")
    }

    /// `[n - s, k - s, d]`, when `s` is known and admissible.
    pub fn shortened(&self) -> Option<Params> {
        let s = self.s?;
        self.record
            .params()
            .apply(Step { rule: Rule::Iii, s })
            .ok()
    }
}

fn sort_rows(rows: &mut [TableRow]) {
    rows.sort_by(|a, b| {
        (a.q, a.n, std::cmp::Reverse(a.k), a.d, a.label())
            .cmp(&(b.q, b.n, std::cmp::Reverse(b.k), b.d, b.label()))
    });
}

fn record_for(label: &str, sg: &NumericalSemigroup, n: u64, q: u32, d: u32, r: u64) -> CodeRecord {
    let k = n - r;
    let root = Params { n, k, d: d as u64 };
    CodeRecord {
        q,
        n,
        k,
        d: d as u64,
        label: label.to_string(),
        semigroup: Some(sg.generators().to_vec()),
        root,
        derivation: Vec::new(),
    }
}

/// From 2 up to the largest `d` with `k >= 1`.
pub fn default_d_range(semigroup: &NumericalSemigroup, n: u64) -> Option<RangeInclusive<u32>> {
    max_design_distance(semigroup, n).map(|d| 2..=d)
}

/// One row per `(instance, d)` with `k = n - r_d >= 1`. Values of `d` outside
/// the feasible range are skipped. `None` uses each instance's default range.
pub fn emit_table(instances: &[TableInstance], d_range: Option<RangeInclusive<u32>>) -> Vec<TableRow> {
    let mut rows: Vec<TableRow> = instances
        .par_iter()
        .flat_map_iter(|inst| {
            let range = match &d_range {
                Some(r) => (*r.start()).max(2)..=*r.end(),
                None => default_d_range(&inst.semigroup, inst.n).unwrap_or(RangeInclusive::new(1, 0)),
            };
            let r = if range.is_empty() {
                Vec::new()
            } else {
                inst.semigroup.r_values(*range.end())
            };
            range
                .filter(|&d| r[d as usize] < inst.n)
                .map(|d| {
                    let rec = record_for(&inst.label, &inst.semigroup, inst.n, inst.q, d, r[d as usize]);
                    TableRow::from_record(rec, vec![inst.label.clone()], None)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    sort_rows(&mut rows);
    rows
}

/// Recomputes every reference row over GF(q) from the tagged semigroups.
///
/// Tags on the same row that give the same `k` share an output row; tags that
/// disagree get one row each. The reference `s` is carried along.
pub fn reference_table(q: u32) -> Result<Vec<TableRow>, CurveError> {
    let reference: Vec<_> = REFERENCE_ROWS.iter().filter(|r| r.q == q).collect();
    let mut tags: BTreeMap<&str, (TableInstance, u32)> = BTreeMap::new();
    for row in &reference {
        for &tag in row.tags {
            if let Some(entry) = tags.get_mut(tag) {
                entry.1 = entry.1.max(row.d);
            } else {
                tags.insert(tag, (TableInstance::from_tag(tag)?, row.d));
            }
        }
    }
    let r_tables: BTreeMap<&str, Vec<u64>> = tags
        .par_iter()
        .map(|(&tag, (inst, d_max))| (tag, inst.semigroup.r_values(*d_max)))
        .collect();

    let mut rows = Vec::new();
    for row in reference {
        // computed k -> tags attaining it, in reference order
        let mut groups: Vec<(u64, Vec<String>)> = Vec::new();
        for &tag in row.tags {
            let inst = &tags[tag].0;
            let r = r_tables[tag][row.d as usize];
            let k = inst.n.saturating_sub(r);
            match groups.iter_mut().find(|g| g.0 == k) {
                Some(g) => g.1.push(tag.to_string()),
                None => groups.push((k, vec![tag.to_string()])),
            }
        }
        for (k, labels) in groups {
            if k == 0 {
                continue;
            }
            let inst = &tags[labels[0].as_str()].0;
            let mut rec = record_for(&labels.join("/"), &inst.semigroup, row.n, q, row.d, row.n - k);
            rec.k = k;
            rec.root.k = k;
            rows.push(TableRow::from_record(rec, labels, Some(row.s)));
        }
    }
    sort_rows(&mut rows);
    rows.dedup_by(|a, b| a.record == b.record && a.s == b.s);
    Ok(rows)
}

pub fn render(rows: &[TableRow], format: TableFormat) -> Result<String, CodeError> {
    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            let with_s = rows.iter().any(|r| r.s.is_some());
            out.push_str("q,n,k,d,labels");
            if with_s {
                out.push_str(",s_max");
            }
            out.push('\n');
            for r in rows {
                write!(out, "{},{},{},{},{}", r.q, r.n, r.k, r.d, r.label()).unwrap();
                if with_s {
                    match r.s {
                        Some(s) => write!(out, ",{s}").unwrap(),
                        None => out.push(','),
                    }
                }
                out.push('\n');
            }
        }
        TableFormat::Markdown => {
            out.push_str("| q | n | k | d | s | n-s | k-s | d | code |\n");
            out.push_str("|---|---|---|---|---|---|---|---|---|\n");
            for r in rows {
                let (s, short) = match (r.s, r.shortened()) {
                    (Some(s), Some(p)) => (s.to_string(), format!("{} | {} | {}", p.n, p.k, p.d)),
                    _ => ("-".into(), "- | - | -".into()),
                };
                let code: Vec<String> = r.labels.iter().map(|l| format!("({l})")).collect();
                writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {} | {} |",
                    r.q,
                    r.n,
                    r.k,
                    r.d,
                    s,
                    short,
                    code.join("")
                )
                .unwrap();
            }
        }
        TableFormat::Json => {
            let records: Vec<&CodeRecord> = rows.iter().map(|r| &r.record).collect();
            out = serde_json::to_string_pretty(&records)?;
            out.push('\n');
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d2a() -> TableInstance {
        TableInstance {
            label: "D2a".into(),
            semigroup: NumericalSemigroup::new(&[2, 7]).unwrap(),
            n: 91,
            q: 49,
        }
    }

    #[test]
    fn d2_block_is_linear() {
        let rows = emit_table(&[d2a()], Some(9..=53));
        assert_eq!(rows.len(), 45);
        for r in &rows {
            assert_eq!(r.k, 89 - r.d);
        }
        assert_eq!(rows[0].k, 80);
        assert_eq!(rows[44].k, 36);
    }

    #[test]
    fn c1a_row() {
        let inst = TableInstance::from_tag("C1a").unwrap();
        assert_eq!(inst.n, 256);
        let rows = emit_table(&[inst], Some(15..=15));
        assert_eq!(rows[0].k, 232);
    }

    #[test]
    fn empty_table_is_header_only() {
        let rows = emit_table(&[], None);
        assert_eq!(render(&rows, TableFormat::Csv).unwrap(), "q,n,k,d,labels\n");
        assert_eq!(render(&rows, TableFormat::Json).unwrap(), "[]\n");
        assert_eq!(render(&rows, TableFormat::Markdown).unwrap().lines().count(), 2);
    }

    #[test]
    fn default_range_ends_at_last_feasible_d() {
        let inst = d2a();
        let range = default_d_range(&inst.semigroup, inst.n).unwrap();
        let rows = emit_table(&[inst], None);
        assert_eq!(rows.len() as u32, range.end() - 1);
        assert!(rows.iter().all(|r| r.k >= 1));
        assert_eq!(rows.iter().map(|r| r.d).max().unwrap(), *range.end() as u64);
    }

    #[test]
    fn q64_reference_rows() {
        let rows = reference_table(64).unwrap();
        assert_eq!(rows.len(), 11);
        let csv = render(&rows, TableFormat::Csv).unwrap();
        assert!(csv.starts_with("q,n,k,d,labels,s_max\n"));
        assert!(csv.contains("64,256,232,15,C1a,30\n"));
        let md = render(&rows, TableFormat::Markdown).unwrap();
        assert!(md.contains("| 64 | 256 | 232 | 15 | 30 | 226 | 202 | 15 | (C1a) |"));
    }

    #[test]
    fn sorted_by_length_then_descending_k() {
        let rows = reference_table(49).unwrap();
        for w in rows.windows(2) {
            assert!((w[0].n, std::cmp::Reverse(w[0].k)) <= (w[1].n, std::cmp::Reverse(w[1].k)));
        }
    }

    #[test]
    fn formats_parse() {
        assert_eq!("md".parse::<TableFormat>().unwrap(), TableFormat::Markdown);
        assert!("xml".parse::<TableFormat>().is_err());
    }
}
