//! Exit criteria. One line per criterion; the process fails if any does.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use fengrao::codes::{improved_params, max_design_distance, Params, Rule, Step, REFERENCE_ROWS};
use fengrao::construct::{
    build_check_matrix, code_dim, enumerate_points, min_distance_exhaustive, PlaneModel, DEFAULT_BUDGET,
};
use fengrao::curves::{catalog, code_tag, epp_generators, instance, Exactness, NAMED};
use fengrao::semigroup::NumericalSemigroup;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn table_reproduction() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    let mut misses: BTreeMap<u32, Vec<String>> = BTreeMap::new();
    let mut per_q: BTreeMap<u32, usize> = BTreeMap::new();
    for row in REFERENCE_ROWS {
        *per_q.entry(row.q).or_default() += 1;
        for &tag in row.tags {
            let (inst, ps) = code_tag(tag).expect("known tag");
            checked += 1;
            let got = improved_params(&ps.semigroup, row.n, row.d, inst.q).map(|r| r.k).ok();
            if inst.code_length() != row.n || got != Some(row.k) {
                misses.entry(row.q).or_default().push(format!(
                    "{tag} [{}, {}, {}] got k={}",
                    row.n,
                    row.k,
                    row.d,
                    got.map_or("-".into(), |k| k.to_string())
                ));
            }
        }
    }
    let elapsed = start.elapsed();
    let rows: usize = per_q.values().sum();
    let mut detail = format!("{rows} rows, {checked} tag checks, {:.2}s", elapsed.as_secs_f64());
    for (q, m) in &misses {
        detail.push_str(&format!(
            "; q={q}: {} tag checks differ over {} rows (first: {})",
            m.len(),
            per_q[q],
            m[0]
        ));
    }
    outcome(misses.is_empty() && elapsed < Duration::from_secs(10), detail)
}

fn propagation_arithmetic() -> Outcome {
    let mut bad = Vec::new();
    for row in REFERENCE_ROWS {
        let root = Params {
            n: row.n,
            k: row.k,
            d: row.d as u64,
        };
        let got = root.apply(Step { rule: Rule::Iii, s: row.s });
        let want = Params {
            n: row.shortened.0,
            k: row.shortened.1,
            d: row.shortened.2,
        };
        if got.ok() != Some(want) {
            bad.push(format!("[{}, {}, {}] s={}", row.n, row.k, row.d, row.s));
        }
    }
    outcome(
        bad.is_empty(),
        format!("{} rows, {} mismatches {:?}", REFERENCE_ROWS.len(), bad.len(), bad.first()),
    )
}

fn catalog_consistency() -> Outcome {
    let mut bad = Vec::new();
    for (inst, &(name, _, stated)) in catalog().iter().zip(NAMED) {
        let report = inst.validate();
        if !report.all_passed() {
            bad.push(format!("{name}: {:?}", report.failures().map(|c| &c.name).collect::<Vec<_>>()));
        }
        if inst.points != inst.q as u64 + 1 + 2 * inst.genus * inst.q0 as u64 || inst.points != stated {
            bad.push(format!("{name}: N = {} vs stated {stated}", inst.points));
        }
        for ps in inst.semigroups.iter().filter(|p| p.exactness == Exactness::Exact) {
            if ps.semigroup.genus() as u64 != inst.genus {
                bad.push(format!("{name}/{}: semigroup genus {}", ps.label, ps.semigroup.genus()));
            }
        }
    }
    let counts: Vec<u64> = catalog().iter().map(|i| i.points).collect();
    outcome(bad.is_empty(), format!("point counts {counts:?}; issues {bad:?}"))
}

fn family_e_derivation() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for (name, q0, m, want, genus) in [
        ("E1", 7u32, 3u32, vec![5u32, 7, 8], 7u32),
        ("E2", 9, 4, vec![5, 7, 9], 8),
        ("E3", 16, 5, vec![10, 13, 16, 17], 24),
    ] {
        let (q0l, ml) = (q0 as u64, m as u64);
        let dd = gcd(ml, q0l + 1);
        let formula = (q0l - 1) * (q0l + 1 - dd) / (2 * ml);
        let bound = (4 * formula).max(2 * (q0l + 1));
        let vals: Vec<u32> = epp_generators(q0, m, bound)
            .into_iter()
            .filter(|&v| v > 0)
            .map(|v| v as u32)
            .collect();
        let sg = NumericalSemigroup::new(&vals).unwrap();
        let gens = sg.minimal_generators();
        let inst_genus = instance(name).unwrap().genus;
        ok &= gens == want && sg.genus() == genus && formula == genus as u64 && inst_genus == formula;
        lines.push(format!("{name} {gens:?} g={}", sg.genus()));
    }
    outcome(ok, lines.join(", "))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

const SMALL_MODELS: [&str; 4] = ["H2", "H3", "D:q0=3,m=2", "D:q0=7,m=2"];

fn dimension_identity() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for name in SMALL_MODELS {
        let inst = instance(name).unwrap();
        let model = PlaneModel::for_instance(&inst).unwrap();
        let pts = enumerate_points(&model).unwrap();
        let n = pts.len() as u64;
        let d_max = max_design_distance(model.semigroup(), n).unwrap();
        for d in 2..=d_max {
            let m = build_check_matrix(&model, &pts, d).unwrap();
            let want = n - model.semigroup().r(d).unwrap();
            checked += 1;
            if code_dim(&m) as u64 != want {
                bad.push(format!("{name} d={d}: {} vs {want}", code_dim(&m)));
            }
        }
    }
    outcome(bad.is_empty(), format!("{checked} (model, d) pairs; mismatches {bad:?}"))
}

fn distance_bound() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for name in SMALL_MODELS {
        let inst = instance(name).unwrap();
        let model = PlaneModel::for_instance(&inst).unwrap();
        let pts = enumerate_points(&model).unwrap();
        let q = model.field().order() as u128;
        let d_max = max_design_distance(model.semigroup(), pts.len() as u64).unwrap();
        for d in 2..=d_max {
            let m = build_check_matrix(&model, &pts, d).unwrap();
            let k = code_dim(&m) as u32;
            if q.checked_pow(k).map_or(true, |size| size > DEFAULT_BUDGET as u128) {
                continue;
            }
            let w = min_distance_exhaustive(&m, DEFAULT_BUDGET).unwrap();
            checked += 1;
            if w < d as u64 {
                bad.push(format!("{name} d={d}: weight {w}"));
            }
        }
    }
    outcome(bad.is_empty() && checked > 0, format!("{checked} codes searched; violations {bad:?}"))
}

/// Ordered pair count over an explicit member list.
fn pair_scan_nu(members: &[u64], l: usize) -> u64 {
    let target = members[l];
    let set: std::collections::BTreeSet<u64> = members.iter().copied().collect();
    members
        .iter()
        .take_while(|&&a| a <= target)
        .filter(|&&a| set.contains(&(target - a)))
        .count() as u64
}

fn oracle_equivalence() -> Outcome {
    let mut bad = Vec::new();
    for u in 2..=40u32 {
        for v in u + 1..=40 {
            if gcd(u as u64, v as u64) != 1 {
                continue;
            }
            let s = NumericalSemigroup::new(&[u, v]).unwrap();
            if s.genus() != (u - 1) * (v - 1) / 2 {
                bad.push(format!("<{u},{v}> genus {}", s.genus()));
            }
        }
    }
    let mut windows = 0;
    for inst in catalog() {
        for ps in &inst.semigroups {
            let s = &ps.semigroup;
            let (g, c) = (s.genus() as i64, s.conductor() as i64);
            // members by reachability from the generators
            let bound = (4 * c + 4 * g + 64) as usize;
            let mut reach = vec![false; bound + 1];
            reach[0] = true;
            for x in 1..=bound {
                reach[x] = s.generators().iter().any(|&gen| x >= gen as usize && reach[x - gen as usize]);
            }
            let members: Vec<u64> = (0..=bound as u64).filter(|&x| reach[x as usize]).collect();
            for l in (2 * c - g - 1).max(0)..=2 * c + g {
                windows += 1;
                let want = (l + 1 - g).max(0) as u64;
                let oracle = pair_scan_nu(&members, l as usize);
                if oracle != want || s.nu(l as u64) != oracle {
                    bad.push(format!("{}/{} l={l}", inst.display_name(), ps.label));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{windows} tail indices checked; mismatches {bad:?}"))
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_fengrao"))
            .args(["table", "--q", "256", "--format", "csv"])
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    let ok = a.status.success() && b.status.success() && a.stdout == b.stdout && !a.stdout.is_empty();
    outcome(ok, format!("{} bytes per run", a.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("table reproduction", table_reproduction),
        ("propagation arithmetic", propagation_arithmetic),
        ("catalog consistency", catalog_consistency),
        ("family E derivation", family_e_derivation),
        ("concrete dimension identity", dimension_identity),
        ("distance bound at desk scale", distance_bound),
        ("oracle equivalence", oracle_equivalence),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        let tag = if o.passed { "PASS" } else { "FAIL" };
        println!("criterion {} [{tag}] {name}: {}", i + 1, o.detail);
        failed += usize::from(!o.passed);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
