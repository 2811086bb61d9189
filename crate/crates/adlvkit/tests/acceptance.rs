//! One line per acceptance criterion. Every comparison below is exact; the
//! tolerance and time budgets are pinned here.

#![allow(clippy::needless_range_loop)]

mod common;

use std::time::{Duration, Instant};

use adlvkit::affine::BasicElement;
use adlvkit::appendixb::{certify, Mode};
use adlvkit::crystal::{crystal_generate, DEFAULT_CAP};
use adlvkit::suite::{
    appendix_battery, build, count_battery, fuzz_properties, run_count_case, superbasic_battery, tensor_battery,
    APPENDIX_TYPES,
};

/// Allowed absolute difference for every integer identity.
const TOLERANCE: i64 = 0;
const BUDGET_COUNTING: Duration = Duration::from_secs(60);
const BUDGET_SUPERBASIC: Duration = Duration::from_secs(120);
const BUDGET_PRUNED: Duration = Duration::from_secs(5);
const BUDGET_EXHAUSTIVE: Duration = Duration::from_secs(300);
const BUDGET_CRYSTAL: Duration = Duration::from_secs(60);
const FUZZ_SAMPLES: usize = 10_000;
const FUZZ_SEED: u64 = 20_240_611;
const CRYSTAL_BOUND: i64 = 12;

fn within(a: i64, b: i64) -> bool {
    (a - b).abs() <= TOLERANCE
}

struct Report {
    lines: Vec<(String, bool, String)>,
}

impl Report {
    fn push(&mut self, name: &str, pass: bool, detail: String) {
        println!("[{}] {name}: {detail}", if pass { "PASS" } else { "FAIL" });
        self.lines.push((name.into(), pass, detail));
    }
}

fn counting_and_dimension(rep: &mut Report) {
    let t0 = Instant::now();
    let cases = count_battery().expect("battery");
    let mut bad_count = Vec::new();
    let mut bad_dim = Vec::new();
    for c in &cases {
        let r = run_count_case(c, None).expect("count");
        if !(within(r.classes as i64, r.crystal as i64) && r.stabilized) {
            bad_count.push(format!("{} b={} mu={:?}: {} vs {}", c.datum, c.b, c.mu, r.classes, r.crystal));
        }
        match (r.max_r, r.dim) {
            (Some(m), Some(d)) if within(m as i64, d) => {}
            _ => bad_dim.push(format!("{} b={} mu={:?}: {:?} vs {:?}", c.datum, c.b, c.mu, r.max_r, r.dim)),
        }
    }
    let el = t0.elapsed();
    rep.push(
        "1 counting identity",
        bad_count.is_empty() && el < BUDGET_COUNTING,
        format!("{} cases in {:.1}s; mismatches {:?}", cases.len(), el.as_secs_f64(), bad_count),
    );
    rep.push("3 global dimension", bad_dim.is_empty(), format!("{} cases; mismatches {:?}", cases.len(), bad_dim));
}

fn superbasic(rep: &mut Report) {
    let t0 = Instant::now();
    let s = superbasic_battery(4, 3).expect("superbasic");
    let el = t0.elapsed();
    rep.push(
        "2 superbasic dimension identity",
        s.violations.is_empty() && s.tuples > 0 && el < BUDGET_SUPERBASIC,
        format!(
            "{} groups, {} tuples, {} points, {} top in {:.1}s; violations {:?}",
            s.groups,
            s.tuples,
            s.points,
            s.top,
            el.as_secs_f64(),
            s.violations.iter().take(3).collect::<Vec<_>>()
        ),
    );
}

/// Levi sets quoted for specific classes, 1-based.
const EXPECTED_J: &[(&str, &str, &[usize])] = &[
    ("A3", "w1", &[1, 2, 3]),
    ("A3", "w1^2", &[1, 3]),
    ("A5", "w1^2", &[1, 2, 4, 5]),
    ("A5", "w1^3", &[1, 3, 5]),
    ("A3:sigma=2", "w1", &[2]),
    ("A5:sigma=2", "w1", &[3]),
    ("B3", "w1", &[3]),
    ("C3", "w3", &[1, 3]),
    ("C4", "w4", &[1, 3]),
    ("C5", "w5", &[1, 3, 5]),
    ("D4", "w1", &[3, 4]),
    ("D4", "w4", &[1, 3]),
    ("D5", "w5", &[1, 3, 4, 5]),
    ("D6", "w6", &[1, 3, 6]),
    ("D5:sigma=2", "w5", &[1, 3]),
    ("D6:sigma=2", "w6", &[1, 3, 5, 6]),
    ("E6", "w1", &[1, 3, 5, 6]),
    ("E7", "w7", &[2, 5, 7]),
];

fn appendix(rep: &mut Report) {
    let mut bad = Vec::new();
    for (label, word, expect) in EXPECTED_J {
        let (spec, d) = build(label).expect("datum");
        let b = BasicElement::parse(&d, word).expect("b");
        let c = certify(&spec, &d, &b, Mode::Pruned).expect("certify");
        if c.j != *expect || !c.verdict {
            bad.push(format!("{label} {word}: {:?}", c.j));
        }
    }
    rep.push("4a quoted Levi sets", bad.is_empty(), format!("{} cases; mismatches {bad:?}", EXPECTED_J.len()));

    let t0 = Instant::now();
    let certs = appendix_battery(APPENDIX_TYPES, Mode::Pruned).expect("battery");
    let el = t0.elapsed();
    let failed: Vec<String> = certs.iter().filter(|c| !c.verdict).map(|c| format!("{} {}", c.datum, c.b)).collect();
    rep.push(
        "4b uniqueness, pruned",
        failed.is_empty() && el < BUDGET_PRUNED,
        format!("{} certifications over {} types in {} ms; failures {failed:?}", certs.len(), APPENDIX_TYPES.len(), el.as_millis()),
    );

    let t0 = Instant::now();
    let certs = appendix_battery(&["E7"], Mode::Exhaustive).expect("E7");
    let el = t0.elapsed();
    let visited = certs.iter().map(|c| c.report.visited).max().unwrap_or(0);
    rep.push(
        "4c uniqueness, E7 exhaustive",
        certs.iter().all(|c| c.verdict) && visited == 2_903_040 && el < BUDGET_EXHAUSTIVE,
        format!("{visited} Weyl elements scanned in {:.1}s", el.as_secs_f64()),
    );
}

fn crystal_oracles(rep: &mut Report) {
    let t0 = Instant::now();
    let mut checked = 0;
    let mut bad = Vec::new();
    for (letter, n) in [('A', 1), ('A', 2), ('A', 3), ('B', 2), ('C', 2), ('D', 4)] {
        let oracle = common::System::dual_of(letter, n);
        let (_, d) = build(&format!("{letter}{n}")).expect("datum");
        for mu in oracle.dominant_upto(CRYSTAL_BOUND) {
            let c = crystal_generate(&d, &mu, DEFAULT_CAP).expect("crystal");
            checked += 1;
            if c.len() as u128 != oracle.weyl_dimension(&mu) {
                bad.push(format!("{letter}{n} {mu:?}: size {} vs {}", c.len(), oracle.weyl_dimension(&mu)));
            }
            if c.character() != oracle.freudenthal(&mu) {
                bad.push(format!("{letter}{n} {mu:?}: character differs"));
            }
        }
    }
    let el = t0.elapsed();
    rep.push(
        "5 crystal oracles",
        bad.is_empty() && checked > 0 && el < BUDGET_CRYSTAL,
        format!("{checked} highest weights in {:.1}s; mismatches {bad:?}", el.as_secs_f64()),
    );
}

fn tensor(rep: &mut Report) {
    let mut n_cases = 0;
    let mut bad = Vec::new();
    for (n, d) in [(3, 2), (2, 3)] {
        for r in tensor_battery(n, d).expect("tensor") {
            n_cases += 1;
            if !within(r.product_count as i64, r.weighted_sum as i64) {
                bad.push(format!("{} mu={:?}: {} vs {}", r.product, r.mu, r.product_count, r.weighted_sum));
            }
        }
    }
    rep.push("6 tensor bookkeeping", bad.is_empty(), format!("{n_cases} tuples; mismatches {bad:?}"));
}

fn fuzz(rep: &mut Report) {
    let t0 = Instant::now();
    for t in fuzz_properties(FUZZ_SAMPLES, FUZZ_SEED).expect("fuzz") {
        rep.push(
            &format!("7 {}", t.name),
            t.violations == 0 && t.samples >= FUZZ_SAMPLES,
            format!("{} samples, {} violations {:?}", t.samples, t.violations, t.first_violation),
        );
    }
    println!("fuzz wall time {:.1}s", t0.elapsed().as_secs_f64());
}

#[test]
fn acceptance_criteria() {
    let mut rep = Report { lines: Vec::new() };
    counting_and_dimension(&mut rep);
    superbasic(&mut rep);
    appendix(&mut rep);
    crystal_oracles(&mut rep);
    tensor(&mut rep);
    fuzz(&mut rep);
    let failed: Vec<&String> = rep.lines.iter().filter(|l| !l.1).map(|l| &l.0).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
