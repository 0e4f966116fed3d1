//! The built-in verification suite behind `plethysm verify`.

use num_bigint::BigInt;
use num_traits::One;

use super::record::CheckOutcome;
use crate::engine::Engine;
use crate::expansion::SchurExpansion;
use crate::lr::lr_coefficient;
use crate::oracle::plethysm_oracle;
use crate::partition::{partitions_of, Partition};
use crate::plethysm::involution_map;
use crate::stability::{ScanBounds, DEFAULT_JMAX, DEFAULT_WINDOW};

/// Size limits for each check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyBounds {
    pub oracle_degree: usize,
    pub recurrence_n: usize,
    pub involution_size: usize,
    pub eqn_n: usize,
    pub eqn_j: usize,
    pub lr_total: usize,
    pub bijection_size: usize,
    pub scan_tau: usize,
    pub scan_m: Vec<usize>,
}

impl VerifyBounds {
    pub fn quick() -> Self {
        VerifyBounds {
            oracle_degree: 6,
            recurrence_n: 3,
            involution_size: 3,
            eqn_n: 2,
            eqn_j: 3,
            lr_total: 6,
            bijection_size: 3,
            scan_tau: 2,
            scan_m: vec![2],
        }
    }

    pub fn full() -> Self {
        VerifyBounds {
            oracle_degree: 8,
            recurrence_n: 4,
            involution_size: 3,
            eqn_n: 3,
            eqn_j: 4,
            lr_total: 8,
            bijection_size: 4,
            scan_tau: 3,
            scan_m: vec![2, 3],
        }
    }
}

struct Tally {
    name: &'static str,
    cases: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, cases: 0, first_failure: None }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.first_failure.is_none() {
            self.first_failure = Some(what());
        }
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome {
            name: self.name.to_string(),
            passed: self.first_failure.is_none(),
            cases: self.cases,
            detail: self.first_failure,
        }
    }
}

fn nonempty_up_to(n: usize) -> impl Iterator<Item = Partition> {
    (1..=n).flat_map(partitions_of)
}

pub fn oracle(engine: &Engine, max_degree: usize) -> CheckOutcome {
    let mut t = Tally::new("oracle");
    for lambda in nonempty_up_to(max_degree) {
        for mu in nonempty_up_to(max_degree / lambda.size()) {
            let degree = lambda.size() * mu.size();
            let fast = engine.plethysm_schur(&lambda, &mu);
            let slow = plethysm_oracle(&lambda, &mu, degree);
            t.check(slow.as_ref() == Ok(&*fast), || format!("s_{lambda} o s_{mu}: {fast} vs {slow:?}"));
        }
    }
    t.finish()
}

pub fn anchors(engine: &Engine) -> CheckOutcome {
    let mut t = Tally::new("anchors");
    let one = BigInt::one;
    let cases: [(&str, &str, &[&str]); 4] = [
        ("2", "2", &["4", "2,2"]),
        ("1,1", "2", &["3,1"]),
        ("2", "1,1", &["2,2", "1,1,1,1"]),
        ("1,1", "1,1", &["2,1,1"]),
    ];
    for (lambda, mu, terms) in cases {
        let lambda: Partition = lambda.parse().expect("literal");
        let mu: Partition = mu.parse().expect("literal");
        let want: SchurExpansion = terms.iter().map(|s| (s.parse().expect("literal"), one())).collect();
        let got = engine.plethysm_schur(&lambda, &mu);
        t.check(*got == want, || format!("s_{lambda} o s_{mu} = {got}"));
    }
    t.finish()
}

pub fn recurrence(engine: &Engine, max_n: usize) -> CheckOutcome {
    let mut t = Tally::new("recurrence");
    for m in [2, 3] {
        for lambda in nonempty_up_to(max_n) {
            let n = lambda.size();
            for nu in partitions_of(m * n).filter(|nu| nu.len() <= n) {
                let direct = engine.plethysm_coefficient(&nu, &lambda, &Partition::row(m));
                let r = engine.recurrence_coefficient(&lambda, &nu, m);
                t.check(r.as_ref() == Ok(&direct), || format!("nu={nu} lambda={lambda} m={m}: {r:?}"));
            }
        }
    }
    t.finish()
}

pub fn involution(engine: &Engine, max_size: usize) -> CheckOutcome {
    let mut t = Tally::new("involution");
    for lambda in nonempty_up_to(max_size) {
        for mu in nonempty_up_to(max_size) {
            for nu in partitions_of(lambda.size() * mu.size()) {
                let a = engine.plethysm_coefficient(&nu, &lambda, &mu);
                let (n2, l2, m2) = involution_map(&nu, &lambda, &mu);
                let b = engine.plethysm_coefficient(&n2, &l2, &m2);
                t.check(a == b, || format!("nu={nu} lambda={lambda} mu={mu}: {a} vs {b}"));
            }
        }
    }
    t.finish()
}

pub fn eqn_identity(engine: &Engine, max_n: usize, max_j: usize) -> CheckOutcome {
    let mut t = Tally::new("growth-identity");
    for m in [1, 2] {
        for l in 0..=m {
            for lambda in nonempty_up_to(max_n) {
                for nu in partitions_of((m + 1) * lambda.size()) {
                    for j in 0..=max_j {
                        let r = engine.verify_eqn_c(&nu, &lambda, l, m, j);
                        let ok = matches!(&r, Ok(c) if c.holds);
                        t.check(ok, || format!("nu={nu} lambda={lambda} l={l} m={m} j={j}: {r:?}"));
                    }
                }
            }
        }
    }
    t.finish()
}

pub fn lr_properties(max_total: usize) -> CheckOutcome {
    let mut t = Tally::new("lr-symmetry");
    for total in 0..=max_total {
        for a in 0..=total {
            for lambda in partitions_of(a) {
                for mu in partitions_of(total - a) {
                    for nu in partitions_of(total) {
                        let c = lr_coefficient(&nu, &lambda, &mu);
                        let swapped = lr_coefficient(&nu, &mu, &lambda);
                        let conj = lr_coefficient(&nu.conjugate(), &lambda.conjugate(), &mu.conjugate());
                        t.check(c == swapped && c == conj, || {
                            format!("nu={nu} lambda={lambda} mu={mu}: {c}, {swapped}, {conj}")
                        });
                    }
                }
            }
        }
    }
    let p321: Partition = "3,2,1".parse().expect("literal");
    let p21: Partition = "2,1".parse().expect("literal");
    let c = lr_coefficient(&p321, &p21, &p21);
    t.check(c == 2, || format!("c^(3,2,1)_(2,1),(2,1) = {c}"));
    t.finish()
}

/// Growing `δ` by one more line while growing the content `η` by one box
/// preserves the LR coefficient, for `j` in `3..=6` and both parities.
pub fn lr_growth_bijection(max_size: usize) -> CheckOutcome {
    let mut t = Tally::new("lr-growth");
    for (l, m) in [(0, 2), (0, 1)] {
        for delta in (0..=max_size).flat_map(partitions_of) {
            for beta in (0..=max_size).flat_map(partitions_of) {
                for eta in (0..=max_size).flat_map(partitions_of) {
                    let eta_1 = eta.grow_line(l, m, 1).expect("valid growth");
                    for j in 3..=6 {
                        let d_j = delta.grow_line(l, m, j).expect("valid growth");
                        let d_next = delta.grow_line(l, m, j + 1).expect("valid growth");
                        let before = lr_coefficient(&d_j, &eta, &beta);
                        let after = lr_coefficient(&d_next, &eta_1, &beta);
                        t.check(before == after, || {
                            format!("delta={delta} beta={beta} eta={eta} j={j} l={l} m={m}: {before} vs {after}")
                        });
                    }
                }
            }
        }
    }
    t.finish()
}

pub fn empty_convention(engine: &Engine) -> CheckOutcome {
    let mut t = Tally::new("empty-inner");
    let empty = Partition::empty();
    for k in 1..=6 {
        let v = engine.plethysm_coefficient(&empty, &Partition::row(k), &empty);
        t.check(v.is_one(), || format!("a^0_({k}),0 = {v}"));
    }
    for size in 0..=5 {
        for lambda in partitions_of(size) {
            for nu in (0..=4).flat_map(partitions_of) {
                if nu.is_empty() && lambda.len() == 1 {
                    continue;
                }
                let v = engine.plethysm_coefficient(&nu, &lambda, &empty);
                t.check(v == BigInt::from(0), || format!("a^{nu}_{lambda},0 = {v}"));
            }
        }
    }
    t.finish()
}

/// Stabilization and proven monotonicity on a small scan.
pub fn stabilization(engine: &Engine, max_tau: usize, m_values: &[usize]) -> CheckOutcome {
    let mut t = Tally::new("stabilization");
    let bounds = ScanBounds::straight(max_tau, m_values.to_vec(), DEFAULT_JMAX, DEFAULT_WINDOW);
    match engine.scan(&bounds) {
        Ok(report) => {
            for cell in &report.cells {
                let spec = &cell.report.spec;
                t.check(cell.report.stabilization_index.is_some_and(|j| j <= 6), || {
                    format!("sigma={} tau={} l={} m={}", spec.sigma, spec.tau, spec.l, spec.m)
                });
            }
            for v in report.failures() {
                t.check(false, || format!("cell {} {:?}", v.cell, v.kind));
            }
        }
        Err(e) => t.check(false, || e.to_string()),
    }
    t.finish()
}

pub fn run_all(engine: &Engine, b: &VerifyBounds) -> Vec<CheckOutcome> {
    vec![
        anchors(engine),
        oracle(engine, b.oracle_degree),
        recurrence(engine, b.recurrence_n),
        involution(engine, b.involution_size),
        eqn_identity(engine, b.eqn_n, b.eqn_j),
        lr_properties(b.lr_total),
        lr_growth_bijection(b.bijection_size),
        empty_convention(engine),
        stabilization(engine, b.scan_tau, &b.scan_m),
    ]
}
