//! Acceptance suite. Runs without the libtest harness so every criterion
//! prints one PASS/FAIL line, then exits nonzero if any failed.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use plethysm_core::cli::record::{Output, ResultRecord};
use plethysm_core::{
    involution_map, lr_coefficient, partitions_of, plethysm_oracle, Engine, Monotonicity, Partition,
    SchurExpansion, ScanBounds, ScanReport,
};

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> Verdict {
    Verdict { passed, detail: detail.into() }
}

/// Counts cases and keeps the first few mismatches.
#[derive(Default)]
struct Cases {
    total: usize,
    bad: Vec<String>,
}

impl Cases {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.total += 1;
        if !ok && self.bad.len() < 5 {
            self.bad.push(what());
        }
    }

    fn verdict(&self, unit: &str, elapsed: Duration, limit: Option<Duration>) -> Verdict {
        let in_time = limit.is_none_or(|l| elapsed <= l);
        let mut detail = format!("{} {unit}, {:.2}s", self.total, elapsed.as_secs_f64());
        if !self.bad.is_empty() {
            detail += &format!("; mismatches: {}", self.bad.join("; "));
        }
        if !in_time {
            detail += "; over time budget";
        }
        verdict(self.bad.is_empty() && in_time && self.total > 0, detail)
    }
}

fn p(text: &str) -> Partition {
    text.parse().unwrap()
}

fn nonempty_up_to(n: usize) -> impl Iterator<Item = Partition> {
    (1..=n).flat_map(partitions_of)
}

fn oracle_equivalence() -> Verdict {
    let start = Instant::now();
    let engine = Engine::new();
    let mut cases = Cases::default();
    for lambda in nonempty_up_to(8) {
        for mu in nonempty_up_to(8 / lambda.size()) {
            let degree = lambda.size() * mu.size();
            let slow = plethysm_oracle(&lambda, &mu, degree).unwrap();
            let fast = engine.plethysm_schur(&lambda, &mu);
            cases.check(slow == *fast, || format!("s_{lambda} o s_{mu}"));
        }
    }
    cases.verdict("pairs", start.elapsed(), Some(Duration::from_secs(300)))
}

fn classical_anchors() -> Verdict {
    let start = Instant::now();
    let engine = Engine::new();
    let mut cases = Cases::default();
    let anchors: [(&str, &str, &[&str]); 4] = [
        ("2", "2", &["4", "2,2"]),
        ("1,1", "2", &["3,1"]),
        ("2", "1,1", &["2,2", "1,1,1,1"]),
        ("1,1", "1,1", &["2,1,1"]),
    ];
    for (lambda, mu, terms) in anchors {
        let (lambda, mu) = (p(lambda), p(mu));
        let want: SchurExpansion = terms.iter().map(|t| (p(t), BigInt::one())).collect();
        // the oracle confirms the expected value before the engine is compared with it
        let derived = plethysm_oracle(&lambda, &mu, lambda.size() * mu.size()).unwrap();
        cases.check(derived == want, || format!("oracle s_{lambda} o s_{mu} = {derived}"));
        let got = engine.plethysm_schur(&lambda, &mu);
        cases.check(*got == want, || format!("engine s_{lambda} o s_{mu} = {got}"));
    }
    cases.verdict("checks", start.elapsed(), None)
}

fn recurrence() -> Verdict {
    let start = Instant::now();
    let engine = Engine::new();
    let mut cases = Cases::default();
    for m in [2, 3] {
        for lambda in nonempty_up_to(4) {
            let n = lambda.size();
            for nu in partitions_of(m * n).filter(|nu| nu.len() <= n) {
                let direct = engine.plethysm_coefficient(&nu, &lambda, &Partition::row(m));
                let via = engine.recurrence_coefficient(&lambda, &nu, m);
                cases.check(via.as_ref() == Ok(&direct), || format!("nu={nu} lambda={lambda} m={m}: {via:?}"));
            }
        }
    }
    cases.verdict("coefficients", start.elapsed(), Some(Duration::from_secs(180)))
}

fn involution() -> Verdict {
    let start = Instant::now();
    let engine = Engine::new();
    let mut cases = Cases::default();
    for lambda in (0..=3).flat_map(partitions_of) {
        for mu in (0..=3).flat_map(partitions_of) {
            for nu in partitions_of(lambda.size() * mu.size()) {
                let a = engine.plethysm_coefficient(&nu, &lambda, &mu);
                let (nu2, lambda2, mu2) = involution_map(&nu, &lambda, &mu);
                let b = engine.plethysm_coefficient(&nu2, &lambda2, &mu2);
                cases.check(a == b, || format!("nu={nu} lambda={lambda} mu={mu}: {a} vs {b}"));
            }
        }
    }
    cases.verdict("triples", start.elapsed(), None)
}

fn growth_identity() -> Verdict {
    let start = Instant::now();
    let engine = Engine::new();
    let mut cases = Cases::default();
    let mut nontrivial = 0;
    for m in [1, 2] {
        for l in 0..=m {
            for lambda in nonempty_up_to(3) {
                for nu in partitions_of((m + 1) * lambda.size()) {
                    for j in 0..=4 {
                        let r = engine.verify_eqn_c(&nu, &lambda, l, m, j);
                        if matches!(&r, Ok(c) if c.lhs.as_ref().is_some_and(|v| !v.is_zero())) {
                            nontrivial += 1;
                        }
                        cases.check(matches!(&r, Ok(c) if c.holds), || {
                            format!("nu={nu} lambda={lambda} l={l} m={m} j={j}: {r:?}")
                        });
                    }
                }
            }
        }
    }
    let mut v = cases.verdict("cases", start.elapsed(), None);
    v.detail += &format!(" ({nontrivial} with nonzero value)");
    v
}

fn scan_space(engine: &Engine) -> ScanReport {
    engine.scan(&ScanBounds::straight(3, vec![2, 3], 12, 5)).unwrap()
}

fn stabilization(report: &ScanReport, elapsed: Duration) -> Verdict {
    let mut cases = Cases::default();
    for cell in &report.cells {
        let r = &cell.report;
        let constant = r.values[6..].iter().all(|v| *v == r.values[6]);
        cases.check(constant && r.values.len() == 13, || {
            format!("sigma={} tau={} l={} m={}: {:?}", r.spec.sigma, r.spec.tau, r.spec.l, r.spec.m, r.values)
        });
    }
    let latest = report.cells.iter().filter_map(|c| c.report.stabilization_index).max();
    let mut v = cases.verdict("sequences", elapsed, None);
    v.detail += &format!(", latest stabilization index {latest:?}");
    v
}

fn monotonicity(report: &ScanReport, cli_records: &[ResultRecord]) -> Verdict {
    let mut cases = Cases::default();
    let mut conjectured = 0;
    let mut flagged = Vec::new();
    for (index, cell) in report.cells.iter().enumerate() {
        let spec = &cell.report.spec;
        let family = Monotonicity::of(spec.l, spec.m);
        if family.is_proven() {
            let inc = cell.report.values.windows(2).all(|w| w[0] <= w[1]);
            cases.check(inc, || format!("sigma={} tau={} l={} m={}", spec.sigma, spec.tau, spec.l, spec.m));
        } else if spec.l == 1 && spec.m == 2 {
            conjectured += 1;
            if !cell.report.weakly_increasing {
                flagged.push(index);
            }
        }
    }
    // every conjectured-family violation must appear as a flagged CLI record
    let emitted: BTreeSet<usize> = cli_records
        .iter()
        .filter_map(|r| match &r.output {
            Output::Cell(c) if c.potential_counterexample => Some(c.index),
            _ => None,
        })
        .collect();
    for &i in &flagged {
        cases.check(emitted.contains(&i), || format!("cell {i} not reported"));
    }
    let described: Vec<String> = flagged
        .iter()
        .map(|&i| {
            let r = &report.cells[i].report;
            format!("sigma={} tau={} values {:?}", r.spec.sigma, r.spec.tau, r.values)
        })
        .collect();
    let mut v = cases.verdict("checks on proven families", Duration::ZERO, None);
    v.detail = format!(
        "{}; {} cells in the l=1,m=2 family, {} potential counterexample(s) reported{}",
        v.detail,
        conjectured,
        flagged.len(),
        if described.is_empty() { String::new() } else { format!(": {}", described.join("; ")) }
    );
    v
}

fn lr_properties() -> Verdict {
    let start = Instant::now();
    let mut cases = Cases::default();
    for total in 0..=8 {
        for a in 0..=total {
            for lambda in partitions_of(a) {
                for mu in partitions_of(total - a) {
                    for nu in partitions_of(total) {
                        let c = lr_coefficient(&nu, &lambda, &mu);
                        cases.check(c == lr_coefficient(&nu, &mu, &lambda), || format!("swap {nu} {lambda} {mu}"));
                        let conj = lr_coefficient(&nu.conjugate(), &lambda.conjugate(), &mu.conjugate());
                        cases.check(c == conj, || format!("conjugate {nu} {lambda} {mu}"));
                    }
                }
            }
        }
    }
    let c = lr_coefficient(&p("3,2,1"), &p("2,1"), &p("2,1"));
    cases.check(c == 2, || format!("c^321_21,21 = {c}"));
    // one extra line of δ, one extra box of content
    for (l, m) in [(0, 2), (0, 1)] {
        for delta in (0..=4).flat_map(partitions_of) {
            for beta in (0..=4).flat_map(partitions_of) {
                for eta in (0..=4).flat_map(partitions_of) {
                    let eta_1 = eta.grow_line(l, m, 1).unwrap();
                    for j in 3..=6 {
                        let before = lr_coefficient(&delta.grow_line(l, m, j).unwrap(), &eta, &beta);
                        let after = lr_coefficient(&delta.grow_line(l, m, j + 1).unwrap(), &eta_1, &beta);
                        cases.check(before == after, || {
                            format!("delta={delta} beta={beta} eta={eta} j={j} parity={}", (l + m) % 2)
                        });
                    }
                }
            }
        }
    }
    cases.verdict("checks", start.elapsed(), None)
}

fn empty_inner_convention() -> Verdict {
    let start = Instant::now();
    let engine = Engine::new();
    let empty = Partition::empty();
    let mut cases = Cases::default();
    for k in 1..=8 {
        let v = engine.plethysm_coefficient(&empty, &Partition::row(k), &empty);
        cases.check(v.is_one(), || format!("a^0_({k}),0 = {v}"));
    }
    let v = engine.plethysm_coefficient(&empty, &empty, &empty);
    cases.check(v.is_zero(), || format!("a^0_0,0 = {v}"));
    for lambda in (0..=6).flat_map(partitions_of) {
        for nu in (0..=6).flat_map(partitions_of) {
            if nu.is_empty() && lambda.len() == 1 {
                continue;
            }
            let v = engine.plethysm_coefficient(&nu, &lambda, &empty);
            cases.check(v.is_zero(), || format!("a^{nu}_{lambda},0 = {v}"));
        }
        let want = if lambda.len() == 1 { SchurExpansion::single(empty.clone()) } else { SchurExpansion::new() };
        let got = engine.plethysm_schur(&lambda, &empty);
        cases.check(*got == want, || format!("s_{lambda} o s_0 = {got}"));
    }
    cases.verdict("checks", start.elapsed(), None)
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_plethysm"))
        .args(args)
        .env("RUST_LOG", "error")
        .output()
        .expect("cli runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn values_of(bytes: &[u8]) -> Vec<String> {
    String::from_utf8_lossy(bytes)
        .lines()
        .map(|l| {
            let r = ResultRecord::from_json_line(l).expect("record parses");
            serde_json::to_string(&r.output).unwrap()
        })
        .collect()
}

fn cli_determinism(cache_dir: &Path) -> (Verdict, Vec<ResultRecord>) {
    let start = Instant::now();
    let mut cases = Cases::default();
    let (c1, first) = run_cli(&["scan"]);
    let (c2, second) = run_cli(&["scan"]);
    cases.check(c1 == 0 && c2 == 0, || format!("exit codes {c1}, {c2}"));
    cases.check(first == second, || "scan output differs between runs".into());

    let cache = cache_dir.join("coefficients.tsv");
    let cache_arg = cache.to_str().unwrap();
    let (c3, cold) = run_cli(&["--cache", cache_arg, "scan"]);
    let (c4, warm) = run_cli(&["--cache", cache_arg, "scan"]);
    cases.check(c3 == 0 && c4 == 0, || format!("cached exit codes {c3}, {c4}"));
    cases.check(cache.exists(), || "cache file not written".into());
    cases.check(values_of(&cold) == values_of(&first), || "cold cache changed values".into());
    cases.check(values_of(&warm) == values_of(&first), || "warm cache changed values".into());

    let (c5, plain) = run_cli(&["verify"]);
    let (c6, cached) = run_cli(&["--cache", cache_arg, "verify"]);
    cases.check(c5 == 0 && c6 == 0, || format!("verify exit codes {c5}, {c6}"));
    cases.check(plain == cached, || "verify output depends on cache".into());

    let records = String::from_utf8_lossy(&first)
        .lines()
        .map(|l| ResultRecord::from_json_line(l).unwrap())
        .collect();
    (cases.verdict("comparisons", start.elapsed(), None), records)
}

fn main() -> ExitCode {
    // libtest flags such as --nocapture are accepted and ignored
    let start = Instant::now();
    let mut verdicts: Vec<(&str, Verdict)> = vec![
        ("oracle equivalence for 1 <= |lambda||mu| <= 8", oracle_equivalence()),
        ("classical anchors", classical_anchors()),
        ("length recurrence, n <= 4, m in {2,3}", recurrence()),
        ("conjugation involution, |lambda|,|mu| <= 3", involution()),
        ("grown-pair recurrence identity, n <= 3, m in {1,2}, j <= 4", growth_identity()),
    ];

    let engine = Engine::new();
    let scan_start = Instant::now();
    let report = scan_space(&engine);
    let scan_time = scan_start.elapsed();
    verdicts.push(("stabilization on [6,12], |tau| <= 3, m in {2,3}", stabilization(&report, scan_time)));

    let dir = tempfile::tempdir().expect("temp dir");
    let (cli, records) = cli_determinism(dir.path());
    verdicts.push(("monotonicity of proven families, conjectured family reported", monotonicity(&report, &records)));
    verdicts.push(("LR symmetry, conjugation and line-growth bijection", lr_properties()));
    verdicts.push(("empty inner partition convention", empty_inner_convention()));

    let total = start.elapsed();
    let mut cli = cli;
    if total > Duration::from_secs(600) {
        cli.passed = false;
        cli.detail += "; suite over 10 minutes";
    }
    cli.detail += &format!("; whole suite {:.1}s", total.as_secs_f64());
    verdicts.push(("CLI determinism and cache transparency", cli));

    let mut failed = 0;
    for (name, v) in &verdicts {
        println!("{} {name}: {}", if v.passed { "PASS" } else { "FAIL" }, v.detail);
        failed += usize::from(!v.passed);
    }
    println!("acceptance: {} passed, {failed} failed", verdicts.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
