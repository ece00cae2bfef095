//! The `fengrao` command line.

use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use crate::codes::{
    compare_baseline, emit_table, improved_params, reference_table, render, BaselineTable,
    CodeError, CodeRecord, Rule, TableFormat, TableInstance,
};
use crate::construct::{
    build_check_matrix, code_dim, enumerate_points, min_distance_exhaustive, ConstructError,
    PlaneModel, DEFAULT_BUDGET,
};
use crate::curves::{catalog, code_tag, instance, CurveError, CurveInstance, Exactness, P_INF};
use crate::semigroup::{NumericalSemigroup, SemigroupError};

#[derive(Debug, Parser)]
#[command(
    name = "fengrao",
    version,
    about = "Weierstrass semigroups of maximal curves and improved AG code parameters"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the built-in curve instances.
    Catalog {
        #[arg(long)]
        json: bool,
    },
    /// Print rho, nu and r_d for a semigroup.
    Semigroup {
        /// Generators, comma separated.
        #[arg(long)]
        gens: String,
        /// Index range for rho/nu, e.g. `0..12` or `0..=11`.
        #[arg(long)]
        nu: Option<String>,
        /// Design distance or range of them.
        #[arg(long)]
        r: Option<String>,
    },
    /// Parameters of one improved code.
    Params {
        /// Instance name (`D2`, `H3`, `D:q0=7,m=2`) or code tag (`D2a`).
        #[arg(long)]
        instance: String,
        #[arg(long)]
        point: Option<String>,
        #[arg(long)]
        d: u32,
        /// Shorten by s positions (rule iii).
        #[arg(long)]
        shorten: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Recompute a reference table, or tabulate chosen tags.
    Table {
        #[arg(long)]
        q: Option<u32>,
        /// Comma separated code tags; replaces the reference rows.
        #[arg(long)]
        tags: Option<String>,
        /// Design distance range for `--tags`.
        #[arg(long)]
        d: Option<String>,
        #[arg(long, default_value = "md")]
        format: String,
    },
    /// Build the code on its plane model and check dimension and distance.
    Verify {
        #[arg(long)]
        instance: String,
        #[arg(long)]
        point: Option<String>,
        #[arg(long)]
        d: u32,
        /// Also compute the exact minimum distance.
        #[arg(long)]
        distance: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Shortening depths against a best-known-codes baseline.
    Compare {
        #[arg(long)]
        baseline: PathBuf,
        #[arg(long)]
        q: Option<u32>,
        /// JSON records, as written by `table --format json`.
        #[arg(long)]
        records: Option<PathBuf>,
    },
    /// Write the parity-check matrix as CSV of field indices.
    Matrix {
        #[arg(long)]
        instance: String,
        #[arg(long)]
        point: Option<String>,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failed(String),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

/// Runs the CLI on `argv` (program name first). Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(rendered.as_bytes());
            } else {
                let _ = err.write_all(rendered.as_bytes());
            }
            return if code == 0 { 0 } else { 2 };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        Command::Catalog { json } => cmd_catalog(json, out),
        Command::Semigroup { gens, nu, r } => cmd_semigroup(&gens, nu.as_deref(), r.as_deref(), out),
        Command::Params {
            instance,
            point,
            d,
            shorten,
            json,
        } => cmd_params(&instance, point.as_deref(), d, shorten, json, out),
        Command::Table { q, tags, d, format } => cmd_table(q, tags.as_deref(), d.as_deref(), &format, out),
        Command::Verify {
            instance,
            point,
            d,
            distance,
            budget,
        } => cmd_verify(&instance, point.as_deref(), d, distance, budget, out),
        Command::Compare {
            baseline,
            q,
            records,
        } => cmd_compare(&baseline, q, records.as_ref(), out),
        Command::Matrix {
            instance,
            point,
            d,
            out: path,
        } => cmd_matrix(&instance, point.as_deref(), d, path.as_ref(), out, err),
    }
}

/// `a`, `a..b` (half open) or `a..=b`.
fn parse_range(flag: &str, s: &str) -> Result<RangeInclusive<u64>, CliError> {
    let bad = || CliError::Usage(format!("{flag}: cannot parse range {s:?}"));
    let num = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
    if let Some((a, b)) = s.split_once("..=") {
        Ok(num(a)?..=num(b)?)
    } else if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (num(a)?, num(b)?);
        if b == 0 {
            return Err(bad());
        }
        Ok(a..=b - 1)
    } else {
        let a = num(s)?;
        Ok(a..=a)
    }
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

#[derive(Serialize)]
struct CatalogEntry<'a> {
    name: String,
    params: String,
    q: u32,
    genus: u64,
    points: u64,
    plane_model: Option<String>,
    semigroups: Vec<CatalogSemigroup<'a>>,
}

#[derive(Serialize)]
struct CatalogSemigroup<'a> {
    label: &'a str,
    generators: Vec<u32>,
    exact: bool,
}

fn cmd_catalog(json: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let instances = catalog();
    if json {
        let entries: Vec<CatalogEntry> = instances
            .iter()
            .map(|inst| CatalogEntry {
                name: inst.display_name(),
                params: inst.params.to_string(),
                q: inst.q,
                genus: inst.genus,
                points: inst.points,
                plane_model: inst.plane_model.as_ref().map(|e| e.to_string()),
                semigroups: inst
                    .semigroups
                    .iter()
                    .map(|ps| CatalogSemigroup {
                        label: &ps.label,
                        generators: ps.semigroup.minimal_generators(),
                        exact: ps.exactness == Exactness::Exact,
                    })
                    .collect(),
            })
            .collect();
        serde_json::to_writer_pretty(&mut *out, &entries)?;
        writeln!(out)?;
        return Ok(());
    }
    for inst in &instances {
        writeln!(
            out,
            "{:<3} {:<14} q={:<4} g={:<3} N={}",
            inst.display_name(),
            inst.params.to_string(),
            inst.q,
            inst.genus,
            inst.points
        )?;
        for ps in &inst.semigroups {
            let gens = NumericalSemigroup::new(&ps.semigroup.minimal_generators())?;
            let note = match ps.exactness {
                Exactness::Exact => "",
                Exactness::ContainsOnly => "  (contained in H(P))",
            };
            writeln!(out, "    {:<5} {gens}{note}", ps.label)?;
        }
        if let Some(eq) = &inst.plane_model {
            writeln!(out, "    model {eq}")?;
        }
    }
    Ok(())
}

fn cmd_semigroup(gens: &str, nu: Option<&str>, r: Option<&str>, out: &mut dyn Write) -> Result<(), CliError> {
    let sg: NumericalSemigroup = gens.parse()?;
    writeln!(out, "semigroup {sg}")?;
    writeln!(out, "genus {}", sg.genus())?;
    writeln!(out, "conductor {}", sg.conductor())?;
    writeln!(out, "gaps {}", join(sg.gaps()))?;
    if let Some(range) = nu {
        let range = parse_range("--nu", range)?;
        let rho: Result<Vec<u64>, _> = range.clone().map(|l| sg.rho(l + 1)).collect();
        writeln!(out, "l   {}", join(range.clone()))?;
        writeln!(out, "rho {}", join(rho?))?;
        writeln!(out, "nu  {}", join(range.map(|l| sg.nu(l))))?;
    }
    if let Some(range) = r {
        for d in parse_range("--r", range)? {
            let d = u32::try_from(d).map_err(|_| CliError::Usage(format!("--r: {d} is too large")))?;
            writeln!(out, "r_{d} = {}", sg.r(d)?)?;
        }
    }
    Ok(())
}

/// Instance plus point label, from either an instance name and `--point`, or
/// an code tag.
fn resolve(name: &str, point: Option<&str>) -> Result<(CurveInstance, String), CliError> {
    match instance(name) {
        Ok(inst) => Ok((inst, point.unwrap_or(P_INF).to_string())),
        Err(CurveError::UnknownInstance(_)) if point.is_none() => {
            let (inst, ps) = code_tag(name)?;
            Ok((inst, ps.label))
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_params(
    name: &str,
    point: Option<&str>,
    d: u32,
    shorten: Option<u64>,
    json: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let (inst, label) = resolve(name, point)?;
    let ps = inst.semigroup(&label)?;
    let mut rec = improved_params(&ps.semigroup, inst.code_length(), d, inst.q)?;
    rec.label = format!("{}/{} {} d={d}", inst.display_name(), label, ps.semigroup);
    if let Some(s) = shorten {
        rec = rec.propagate(Rule::Iii, s)?;
    }
    if json {
        serde_json::to_writer_pretty(&mut *out, &rec)?;
        writeln!(out)?;
    } else {
        writeln!(out, "{rec}")?;
    }
    Ok(())
}

fn cmd_table(
    q: Option<u32>,
    tags: Option<&str>,
    d: Option<&str>,
    format: &str,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let format: TableFormat = format.parse().map_err(|e: CodeError| CliError::Usage(e.to_string()))?;
    let rows = match tags {
        Some(tags) => {
            let instances = tags
                .split(',')
                .map(|t| TableInstance::from_tag(t.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            let instances: Vec<_> = instances
                .into_iter()
                .filter(|i| q.is_none_or(|q| i.q == q))
                .collect();
            let range = d
                .map(|s| parse_range("--d", s))
                .transpose()?
                .map(|r| *r.start() as u32..=*r.end() as u32);
            emit_table(&instances, range)
        }
        None => {
            if d.is_some() {
                return Err(CliError::Usage("--d needs --tags".into()));
            }
            let q = q.ok_or_else(|| CliError::Usage("table needs --q or --tags".into()))?;
            reference_table(q)?
        }
    };
    out.write_all(render(&rows, format)?.as_bytes())?;
    Ok(())
}

#[derive(Debug, Serialize)]
struct VerifyReport {
    n: u64,
    k_expected: u64,
    k_actual: u64,
    d_design: u64,
    d_actual_or_bound: u64,
    status: &'static str,
}

fn cmd_verify(
    name: &str,
    point: Option<&str>,
    d: u32,
    distance: bool,
    budget: u64,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let (inst, label) = resolve(name, point)?;
    if label != P_INF {
        return Err(ConstructError::NoPlaneModel(format!("{} at {label}", inst.display_name())).into());
    }
    let model = PlaneModel::for_instance(&inst)?;
    let pts = enumerate_points(&model)?;
    let m = build_check_matrix(&model, &pts, d)?;
    let n = pts.len() as u64;
    let k_expected = n - model.semigroup().r(d)?;
    let k_actual = code_dim(&m) as u64;
    let exact = if distance {
        Some(min_distance_exhaustive(&m, budget)?)
    } else {
        None
    };
    let status = match exact {
        _ if k_actual != k_expected => "dimension-mismatch",
        Some(w) if w < d as u64 => "distance-below-design",
        Some(_) => "verified",
        None => "dimension-verified",
    };
    let report = VerifyReport {
        n,
        k_expected,
        k_actual,
        d_design: d as u64,
        d_actual_or_bound: exact.unwrap_or(d as u64),
        status,
    };
    serde_json::to_writer_pretty(&mut *out, &report)?;
    writeln!(out)?;
    if status.starts_with("dimension-m") || status.starts_with("distance") {
        return Err(CliError::Failed(format!("verification failed: {status}")));
    }
    Ok(())
}

fn cmd_compare(
    baseline: &PathBuf,
    q: Option<u32>,
    records: Option<&PathBuf>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let baseline = BaselineTable::load(baseline)?;
    let records: Vec<CodeRecord> = match records {
        Some(path) => {
            let recs: Vec<CodeRecord> = serde_json::from_str(&std::fs::read_to_string(path)?)?;
            recs.into_iter()
                .filter(|r| q.is_none_or(|q| r.q == q))
                .collect()
        }
        None => {
            let q = q.ok_or_else(|| CliError::Usage("compare needs --q or --records".into()))?;
            reference_table(q)?.into_iter().map(|r| r.record).collect()
        }
    };
    writeln!(out, "q,n,k,d,label,status,s_max,unknown_n,unknown_k")?;
    for imp in compare_baseline(&records, &baseline) {
        let status = serde_json::to_value(imp.status)?;
        let opt = |x: Option<u64>| x.map_or(String::new(), |v| v.to_string());
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            imp.q,
            imp.n,
            imp.k,
            imp.d,
            imp.label,
            status.as_str().unwrap_or_default(),
            opt(imp.s_max),
            opt(imp.unknown_cell.map(|c| c.0)),
            opt(imp.unknown_cell.map(|c| c.1)),
        )?;
    }
    Ok(())
}

fn cmd_matrix(
    name: &str,
    point: Option<&str>,
    d: u32,
    path: Option<&PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    let (inst, label) = resolve(name, point)?;
    if label != P_INF {
        return Err(ConstructError::NoPlaneModel(format!("{} at {label}", inst.display_name())).into());
    }
    let model = PlaneModel::for_instance(&inst)?;
    let pts = enumerate_points(&model)?;
    let m = build_check_matrix(&model, &pts, d)?;
    let csv = m.to_csv();
    match path {
        Some(p) => {
            std::fs::write(p, csv)?;
            writeln!(
                err,
                "wrote {} x {} check matrix over {} to {}",
                m.row_count(),
                m.n(),
                model.field(),
                p.display()
            )?;
        }
        None => out.write_all(csv.as_bytes())?,
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("fengrao").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("--nu", "0..12").unwrap(), 0..=11);
        assert_eq!(parse_range("--nu", "2..=5").unwrap(), 2..=5);
        assert_eq!(parse_range("--r", "9").unwrap(), 9..=9);
        assert!(parse_range("--r", "x").is_err());
    }

    #[test]
    fn params_line() {
        let (code, out, _) = run_str(&["params", "--instance", "D2", "--point", "Pinf", "--d", "9"]);
        assert_eq!(code, 0);
        assert_eq!(out, "[91, 80, 9] over GF(49)\n");
        let (_, out, _) = run_str(&["params", "--instance", "D2a", "--d", "9", "--shorten", "10"]);
        assert_eq!(out, "[81, 70, 9] over GF(49)\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["params", "--instance", "D2"]).0, 2);
        assert_eq!(run_str(&["params", "--instance", "D2", "--d", "500"]).0, 1);
        assert_eq!(run_str(&["params", "--instance", "Z9", "--d", "5"]).0, 1);
        assert_eq!(run_str(&["table", "--q", "49", "--format", "xml"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
    }
}
