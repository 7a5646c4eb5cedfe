//! The ten acceptance criteria. Each prints one line with its verdict,
//! elapsed time and pinned time limit; the process fails if any criterion
//! fails or overruns its limit.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use prim5::verify::{
    centralizer_check, check_row, run_suite, selftest, CheckOptions, Report, SuiteConfig, Target, LEMMA_INSTANCES,
};

/// Worker threads for suite runs, matching a four-core desktop.
const JOBS: usize = 4;

/// Skips the full suite is allowed to report: rows whose groups need files
/// that are not shipped by default, Th, and rows with no permutation form
/// within bounds.
const DOCUMENTED_SKIPS: [&str; 12] = [
    "T1.10", "T1.11", "T1.12", "T1.13", "T2.12.p7", "T2.13.p3", "T2.14.p11", "T3.05", "T3.06", "T3.07", "T3.10",
    "T3.11",
];

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict { ok, detail: detail.into() }
}

fn suz8_fixture() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/suz8.gens")
}

fn suite(prefixes: &[&str]) -> Vec<Report> {
    run_suite(&SuiteConfig {
        seed: 0,
        jobs: JOBS,
        select: Some(prefixes.iter().map(|s| s.to_string()).collect()),
        suz8_file: None,
    })
    .expect("thread pool")
    .reports
}

fn measured<'a>(r: &'a Report, key: &str) -> &'a str {
    r.measured.get(key).map_or("", String::as_str)
}

fn failures(reports: &[Report]) -> Vec<String> {
    reports.iter().filter(|r| !r.is_pass()).map(|r| r.to_line_without_timing()).collect()
}

fn all_pass(reports: &[Report], expected_count: usize, what: &str) -> Verdict {
    let bad = failures(reports);
    let ok = bad.is_empty() && reports.len() == expected_count;
    let detail = if ok {
        format!("{expected_count} {what} checks pass")
    } else {
        format!("{} of {expected_count} {what} checks ran; not passing: {}", reports.len(), bad.join(" | "))
    };
    verdict(ok, detail)
}

/// Table 1 rows 1–9 with their exact indices, each under 10 s, and row 10
/// from the shipped Suz(8) generators under 60 s.
fn sporadic_rows() -> Verdict {
    let indices = [6, 6, 36, 36, 36, 66, 126, 126, 171];
    let mut problems = Vec::new();
    let opts = CheckOptions { suz8_file: Some(suz8_fixture()), ..CheckOptions::default() };
    for (row, limit) in (1..=10u8).map(|r| (r, if r == 10 { 60 } else { 10 })) {
        let start = Instant::now();
        let r = check_row(1, row, None, &opts);
        let t = start.elapsed();
        let degree = if row == 10 { 1456 } else { indices[row as usize - 1] };
        if !r.is_pass() || measured(&r, "degree") != degree.to_string() || t > Duration::from_secs(limit) {
            problems.push(format!("row {row} in {:.1}s: {}", t.as_secs_f64(), r.to_line_without_timing()));
        }
    }
    if problems.is_empty() {
        verdict(true, "rows 1-9 at indices 6,6,36,36,36,66,126,126,171 and row 10 at 1456")
    } else {
        verdict(false, problems.join(" | "))
    }
}

/// Affine rows at the pinned primes: row 1 at 11, 31; row 2 at 19, 29;
/// row 3 at 2, 3, 7, 13; rows 4–8 at their two smallest valid primes.
fn affine_rows() -> Verdict {
    let reports = suite(&["T2.01.", "T2.02.", "T2.03.", "T2.04.", "T2.05.", "T2.06.", "T2.07.", "T2.08."]);
    all_pass(&reports, 18, "affine")
}

/// Projective rows: a length-5 suborbit exactly when the congruence holds.
fn projective_rows() -> Verdict {
    let reports = suite(&["T2.09.p31", "T2.09.p41", "T2.09.p29.control", "T2.10.p3", "T2.11.p3"]);
    let degrees_ok = [("T2.09.p31", "248"), ("T2.09.p41", "574"), ("T2.10.p3", "6"), ("T2.11.p3", "6")]
        .iter()
        .all(|(id, n)| reports.iter().any(|r| r.check_id == *id && measured(r, "degree") == *n));
    let control_ok = reports
        .iter()
        .any(|r| r.check_id == "T2.09.p29.control" && measured(r, "hasSuborbit5") == "false" && r.is_pass());
    let base = all_pass(&reports, 5, "projective");
    verdict(base.ok && degrees_ok && control_ok, format!("{}; degree-203 control has no length-5 suborbit", base.detail))
}

/// Digraph count equals |N/H| − 1 and symmetric digraphs match involutory cosets.
fn lemma_oracle() -> Verdict {
    let reports = suite(&["LEMMA."]);
    let required = ["A5.6", "S5.6", "PGL2_11.66", "PSL2_29.203", "PSL2_31.248", "PSL2_41.574"];
    let covered = required.iter().all(|n| reports.iter().any(|r| r.check_id == format!("LEMMA.{n}") && r.is_pass()));
    let base = all_pass(&reports, LEMMA_INSTANCES.len(), "oracle");
    verdict(base.ok && covered && reports.len() >= 5, base.detail)
}

/// |N/H| by suborbit counting, agreeing with the normalizer where it runs.
fn norm_quotients() -> Verdict {
    let reports = suite(&["T4.03.p29", "T4.04.p31", "T4.04.p41", "T4.05.p3"]);
    let expected = [("T4.03.p29", "1"), ("T4.04.p31", "2"), ("T4.04.p41", "2"), ("T4.05.p3", "2")];
    let values_ok = expected
        .iter()
        .all(|(id, v)| reports.iter().any(|r| r.check_id == *id && measured(r, "normQuotientViaSuborbits") == *v));
    let base = all_pass(&reports, 4, "quotient");
    verdict(base.ok && values_ok, format!("{}; orders 1, 2, 2, 2", base.detail))
}

/// Centralizer groups at the five pinned instances.
fn centralizers() -> Verdict {
    let cases = [
        (7u64, Target::Lemma61, "Z8xZ2"),
        (23, Target::Lemma61, "Z24xZ2"),
        (7, Target::Row12, "Z2xZ2"),
        (13, Target::Row9, "Z12xZ2"),
        (53, Target::Row10, "Z54xZ2"),
    ];
    let mut bad = Vec::new();
    for (p, target, structure) in cases {
        let r = centralizer_check(p, target, 0);
        if !r.is_pass() || measured(&r, "structure") != structure {
            bad.push(r.to_line_without_timing());
        }
    }
    if bad.is_empty() {
        verdict(true, "Z8xZ2, Z24xZ2, Z2xZ2, Z12xZ2, Z54xZ2")
    } else {
        verdict(false, bad.join(" | "))
    }
}

/// Decomposition patterns at every pinned prime.
fn decompositions() -> Verdict {
    let reports = suite(&["DECOMP."]);
    let pinned: usize = Target::ALL.iter().map(|t| t.pinned_primes().len()).sum();
    all_pass(&reports, pinned, "decomposition")
}

/// Clebsch, Sylvester, Kneser K(9,4), K6 and the PGL(2,11) graph.
fn graphs() -> Verdict {
    let reports = suite(&["T3.01", "T3.02", "T3.03", "T3.04", "T3.09.p3"]);
    let expect = [
        ("T3.01", "identification", "SRG(16,5,0,2)"),
        ("T3.01", "autOrder", "1920"),
        ("T3.02", "identification", "DRG{5,4,2;1,1,4}"),
        ("T3.02", "autOrder", "1440"),
        ("T3.03", "vertices", "66"),
        ("T3.03", "arcTransitive", "true"),
        ("T3.04", "identification", "K(9,4)"),
        ("T3.04", "autOrder", "362880"),
        ("T3.09.p3", "identification", "K6"),
    ];
    let values_ok = expect.iter().all(|(id, k, v)| reports.iter().any(|r| r.check_id == *id && measured(r, k) == *v));
    let base = all_pass(&reports, 5, "graph");
    verdict(base.ok && values_ok, format!("{}; SRG(16,5,0,2), DRG{{5,4,2;1,1,4}}, K(9,4), K6", base.detail))
}

/// Randomized property suites under seeds 0–4.
fn properties() -> Verdict {
    let reports: Vec<Report> = (0..5).flat_map(selftest).collect();
    // Eight properties per seed.
    all_pass(&reports, 5 * 8, "property")
}

/// The default suite: no failures, and only the documented skips.
fn full_suite() -> Verdict {
    let out = run_suite(&SuiteConfig { seed: 0, jobs: JOBS, select: None, suz8_file: None }).expect("thread pool");
    let undocumented: Vec<&str> = out
        .reports
        .iter()
        .filter(|r| !r.is_pass() && !r.is_fail())
        .map(|r| r.check_id.as_str())
        .filter(|id| !DOCUMENTED_SKIPS.contains(id))
        .collect();
    let ok = out.failed() == 0 && undocumented.is_empty();
    let mut detail = format!("{} pass, {} fail, {} skip", out.passed(), out.failed(), out.skipped());
    if !ok {
        detail.push_str(&format!("; failing: {}", failures(&out.reports).join(" | ")));
        detail.push_str(&format!("; undocumented skips: {undocumented:?}"));
    }
    verdict(ok, detail)
}

fn main() {
    type Criterion = (u8, &'static str, u64, fn() -> Verdict);
    let criteria: [Criterion; 10] = [
        (1, "sporadic constructions", 150, sporadic_rows),
        (2, "affine families", 120, affine_rows),
        (3, "projective families", 60, projective_rows),
        (4, "digraph/normalizer oracle", 60, lemma_oracle),
        (5, "norm quotients", 120, norm_quotients),
        (6, "centralizers", 120, centralizers),
        (7, "decompositions", 30, decompositions),
        (8, "graph identifications", 120, graphs),
        (9, "property suites, seeds 0-4", 180, properties),
        (10, "full suite", 600, full_suite),
    ];
    let mut failed = 0;
    for (n, name, limit, run) in criteria {
        let start = Instant::now();
        let v = run();
        let secs = start.elapsed().as_secs_f64();
        let ok = v.ok && secs <= limit as f64;
        failed += usize::from(!ok);
        println!(
            "criterion {n:>2} {}: {name} in {secs:.1}s (limit {limit}s): {}",
            if ok { "PASS" } else { "FAIL" },
            v.detail
        );
    }
    println!("acceptance: {} of 10 criteria pass", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
