//! The acceptance criteria, one PASS/FAIL line each. Runs with a plain
//! `main` so the lines always print; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::Parser;
use slicepd::slicefamily::{build_f, Shape};
use slicepd::witness::check_recursion;
use slicepd::Execution;
use slicepd_cli::{run, Cli, Report};
use slicepd_oracles::seed_from_env;
use slicepd_oracles::suites::{self, SuiteOutcome};

const CERTIFY_SHAPES: [(&str, u64); 5] = [
    ("3x2", 6),
    ("2x3", 6),
    ("2x2x2", 8),
    ("3x3x2", 18),
    ("3x4x2", 24),
];

fn cli(args: &[&str]) -> Report {
    let cli = Cli::try_parse_from(std::iter::once("slicepd").chain(args.iter().copied()))
        .expect("valid arguments");
    run(&cli).expect("command runs")
}

fn count(report: &Report, prefix: &str) -> usize {
    report
        .checks
        .iter()
        .filter(|c| c.name.starts_with(prefix) && c.pass)
        .count()
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    if t < limit {
        Ok(())
    } else {
        Err(format!("took {t:?}, limit {limit:?}"))
    }
}

fn suites_pass(outcomes: &[SuiteOutcome]) -> Result<String, String> {
    let summary: Vec<String> = outcomes.iter().map(SuiteOutcome::summary).collect();
    if outcomes.iter().all(SuiteOutcome::pass) {
        Ok(summary.join("; "))
    } else {
        Err(summary.join("; "))
    }
}

fn criterion_1() -> Result<String, String> {
    let start = Instant::now();
    let r = cli(&["certify", "--shape", "2x2"]);
    let failed: Vec<&str> = r.failed().map(|c| c.name.as_str()).collect();
    if !r.pass() {
        return Err(format!("failed checks: {failed:?}"));
    }
    let expect = [
        ("annihilates F", 3),
        ("witness pairing s o F = 1", 1),
        ("colon membership (exchange)", 4),
        ("colon membership (groebner)", 4),
        ("colon modes agree", 1),
        ("s not in I", 1),
    ];
    for (prefix, n) in expect {
        if count(&r, prefix) != n {
            return Err(format!("expected {n} passing '{prefix}' checks"));
        }
    }
    if r.pd != Some(4) {
        return Err(format!("pd {:?}", r.pd));
    }
    within(Duration::from_secs(1), start)?;
    Ok(format!("pd 4 in {:?}", start.elapsed()))
}

fn criterion_2() -> Result<String, String> {
    let start = Instant::now();
    for (shape, pd) in CERTIFY_SHAPES {
        let r = cli(&["certify", "--shape", shape]);
        if !r.pass() || r.pd != Some(pd) {
            return Err(format!(
                "{shape}: pass {}, pd {:?}, expected {pd}",
                r.pass(),
                r.pd
            ));
        }
    }
    within(Duration::from_secs(30), start)?;
    Ok(format!("pd 6, 6, 8, 18, 24 in {:?}", start.elapsed()))
}

fn criterion_3() -> Result<String, String> {
    let start = Instant::now();
    let r = cli(&["certify", "--shape", "2x2x2x2", "--mode", "exchange"]);
    if !r.pass() {
        return Err(format!(
            "failed checks: {:?}",
            r.failed().map(|c| &c.name).collect::<Vec<_>>()
        ));
    }
    if count(&r, "colon membership (groebner)") > 0
        || r.checks.iter().any(|c| c.name.contains("(groebner)"))
    {
        return Err("a Gröbner check ran in exchange mode".into());
    }
    if count(&r, "colon membership (exchange)") != 16 {
        return Err("expected 16 exchange memberships".into());
    }
    let n = 8;
    if r.pd != Some(1 << (n / 2)) {
        return Err(format!("pd {:?}", r.pd));
    }
    let support = r.support.ok_or("no support count")?;
    if support.multiplicity != n {
        return Err(format!("support multiplicity {}", support.multiplicity));
    }
    within(Duration::from_secs(10), start)?;
    Ok(format!(
        "pd 16 = 2^(8/2), support 8 = N, in {:?}",
        start.elapsed()
    ))
}

fn criterion_4() -> Result<String, String> {
    let start = Instant::now();
    let r = cli(&["resolve", "--shape", "2x2"]);
    if !r.pass() {
        return Err(format!(
            "failed checks: {:?}",
            r.failed().map(|c| &c.name).collect::<Vec<_>>()
        ));
    }
    let betti = r.betti.as_ref().ok_or("no Betti table")?;
    let total = |i: usize| {
        betti
            .iter()
            .filter(|e| e.i == i)
            .map(|e| e.value)
            .sum::<usize>()
    };
    let length = betti.iter().map(|e| e.i).max().unwrap_or(0);
    let certified = cli(&["certify", "--shape", "2x2"]).pd;
    if length != 4 || total(0) != 1 || total(1) != 3 || certified != Some(4) || r.pd != certified {
        return Err(format!(
            "length {length}, b0 {}, b1 {}, certified {certified:?}",
            total(0),
            total(1)
        ));
    }
    within(Duration::from_secs(60), start)?;
    Ok(format!(
        "length 4, b0 = 1, b1 = 3, matches Auslander-Buchsbaum, in {:?}",
        start.elapsed()
    ))
}

fn criterion_5() -> Result<String, String> {
    let mut outcomes = Vec::new();
    for (shape, _) in CERTIFY_SHAPES {
        let s: Shape = shape.parse().unwrap();
        let dims = s.dims().to_vec();
        outcomes.push(suites::recursion(&dims));
        if !check_recursion(&s, &build_f(&s), Execution::default()).pass() {
            return Err(format!("{shape}: library recursion report failed"));
        }
    }
    suites_pass(&outcomes)
}

fn criterion_6() -> Result<String, String> {
    suites_pass(&[
        suites::characteristic_independence(&[2, 2]),
        suites::characteristic_independence(&[2, 2, 2]),
    ])
}

fn criterion_7(seed: u64) -> Result<String, String> {
    suites_pass(&[suites::taylor_bound(seed, 20)])
}

fn criterion_8(seed: u64) -> Result<String, String> {
    suites_pass(&[
        suites::contraction_composition(seed, 500),
        suites::normal_form_checks(seed, 200),
        suites::groebner_permutation(seed, 50),
        suites::membership_oracle(seed, 10),
        suites::support_bound_maximum(20),
    ])
}

fn main() -> ExitCode {
    // `cargo test -- --list` and filters are not meaningful here
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return ExitCode::SUCCESS;
    }
    let seed = seed_from_env(2024);
    type Criterion<'a> = (&'a str, Box<dyn Fn() -> Result<String, String>>);
    let criteria: Vec<Criterion> = vec![
        ("certify 2x2", Box::new(criterion_1)),
        ("certify mid-size shapes", Box::new(criterion_2)),
        ("2x2x2x2 in exchange mode", Box::new(criterion_3)),
        ("direct resolution of 2x2", Box::new(criterion_4)),
        ("recursion suite", Box::new(criterion_5)),
        ("characteristic independence", Box::new(criterion_6)),
        ("Taylor bound", Box::new(move || criterion_7(seed))),
        ("property suites", Box::new(move || criterion_8(seed))),
    ];
    let mut all = true;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail}) [{secs:.2}s]", k + 1),
            Err(detail) => {
                all = false;
                println!("criterion {}: FAIL {name} ({detail}) [{secs:.2}s]", k + 1);
            }
        }
    }
    println!("seed {seed}");
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
