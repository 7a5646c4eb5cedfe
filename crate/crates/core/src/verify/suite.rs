//! The full verification suite: a fixed job list, run on a work-stealing
//! pool and merged in check-id order.

use std::path::PathBuf;

use rayon::prelude::*;

use super::checks::{
    cayley_row_check, check_row, double_cover_check, lemma_check, normalizer_of_a4_check, projective_family_check,
    row_check_id, CheckOptions, LEMMA_INSTANCES,
};
use super::report::Report;
use super::symplectic::{centralizer_check, decomposition_check, Target};
use super::table3::graph_check_id;
use crate::atlas::smallest_valid_primes;
use crate::error::{Error, Result};

/// Which checks to run and how.
#[derive(Clone, Debug, Default)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
    /// Check-id prefixes to run; `None` runs everything, an empty list nothing.
    pub select: Option<Vec<String>>,
    pub suz8_file: Option<PathBuf>,
}

/// Reports in check-id order, plus the process exit status.
#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub reports: Vec<Report>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> usize {
        self.reports.iter().filter(|r| r.is_pass()).count()
    }

    pub fn failed(&self) -> usize {
        self.reports.iter().filter(|r| r.is_fail()).count()
    }

    pub fn skipped(&self) -> usize {
        self.reports.len() - self.passed() - self.failed()
    }

    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.failed() > 0)
    }
}

type Job = (String, Box<dyn Fn(&CheckOptions) -> Report + Send + Sync>);

/// Primes at which the affine rows are checked.
pub fn affine_test_primes(row: u8) -> Vec<u64> {
    match row {
        1 => vec![11, 31],
        2 => vec![19, 29],
        3 => vec![2, 3, 7, 13],
        _ => smallest_valid_primes(row, 2).expect("rows 4–8 exist"),
    }
}

fn job(id: String, f: impl Fn(&CheckOptions) -> Report + Send + Sync + 'static) -> Job {
    (id, Box::new(f))
}

/// The default job list with the check id each job reports under.
fn jobs() -> Vec<Job> {
    let mut out: Vec<Job> = Vec::new();
    for row in 1..=13u8 {
        out.push(job(row_check_id(1, row, None), move |o| check_row(1, row, None, o)));
    }
    for row in 1..=8u8 {
        for p in affine_test_primes(row) {
            out.push(job(row_check_id(2, row, Some(p)), move |o| check_row(2, row, Some(p), o)));
            out.push(job(format!("CAYLEY.T2.{row:02}.p{p}"), move |o| cayley_row_check(row, p, o.seed)));
        }
    }
    for (row, p) in [(9u8, 31u64), (9, 41), (10, 3), (10, 7), (11, 3), (11, 7)] {
        out.push(job(row_check_id(2, row, Some(p)), move |o| projective_family_check(row, p, o)));
    }
    out.push(job("T2.09.p29.control".into(), |o| projective_family_check(9, 29, o)));
    for (row, p) in [(12u8, 7u64), (13, 3), (14, 11)] {
        out.push(job(row_check_id(2, row, Some(p)), move |o| check_row(2, row, Some(p), o)));
    }
    for (row, p) in [
        (1u8, None),
        (2, None),
        (3, None),
        (4, None),
        (5, None),
        (6, None),
        (7, None),
        (8, Some(31u64)),
        (9, Some(3)),
        (10, None),
        (11, None),
    ] {
        out.push(job(graph_check_id(row, p), move |o| check_row(3, row, p, o)));
    }
    let maximal: [(u8, u8, Option<u64>); 13] = [
        (4, 1, None),
        (4, 3, Some(29)),
        (4, 4, Some(31)),
        (4, 4, Some(41)),
        (4, 5, Some(3)),
        (4, 9, Some(13)),
        (4, 9, Some(37)),
        (4, 10, Some(53)),
        (5, 1, None),
        (5, 2, None),
        (5, 6, None),
        (5, 7, Some(3)),
        (5, 12, Some(7)),
    ];
    for (t, row, p) in maximal {
        out.push(job(row_check_id(t, row, p), move |o| check_row(t, row, p, o)));
    }
    out.push(job(row_check_id(5, 12, Some(17)), |o| check_row(5, 12, Some(17), o)));
    for name in LEMMA_INSTANCES {
        out.push(job(format!("LEMMA.{name}"), move |o| lemma_check(name, o)));
    }
    for q in [5u64, 7, 9, 11, 13, 17, 19, 23, 25, 29] {
        out.push(job(format!("NORMA4.q{q:02}"), move |o| normalizer_of_a4_check(q, o)));
    }
    for target in Target::ALL {
        for &p in target.pinned_primes() {
            out.push(job(format!("CENT.{target}.p{p}"), move |o| centralizer_check(p, target, o.seed)));
            out.push(job(format!("DECOMP.{target}.p{p}"), move |o| decomposition_check(p, target, o.seed)));
        }
    }
    for p in [7u64, 13, 17, 23] {
        out.push(job(format!("SP6.p{p:02}"), move |o| double_cover_check(p, o.seed)));
    }
    out
}

/// Check ids of the default suite, in report order.
pub fn suite_check_ids() -> Vec<String> {
    let mut ids: Vec<String> = jobs().into_iter().map(|(id, _)| id).collect();
    ids.sort();
    ids
}

fn selected(id: &str, select: &Option<Vec<String>>) -> bool {
    match select {
        None => true,
        Some(prefixes) => prefixes.iter().any(|p| id.starts_with(p.as_str())),
    }
}

/// Runs the selected checks on `jobs` worker threads. Reports are sorted by
/// check id; a report whose id differs from its job id is an internal error.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteOutcome> {
    let opts = CheckOptions {
        seed: config.seed,
        suz8_file: config.suz8_file.clone(),
        ..CheckOptions::default()
    };
    let chosen: Vec<Job> = jobs().into_iter().filter(|(id, _)| selected(id, &config.select)).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::Resource(format!("thread pool: {e}")))?;
    let mut reports: Vec<Report> = pool.install(|| {
        chosen
            .par_iter()
            .map(|(id, f)| {
                let mut r = f(&opts);
                if r.check_id != *id {
                    r.error = Some(format!("job {id} reported as {}", r.check_id));
                    r.check_id = id.clone();
                    r.status = super::report::Status::Fail;
                }
                r
            })
            .collect()
    });
    reports.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    Ok(SuiteOutcome { reports })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_selection_runs_nothing() {
        let out = run_suite(&SuiteConfig {
            select: Some(vec![]),
            ..SuiteConfig::default()
        })
        .unwrap();
        assert!(out.reports.is_empty());
        assert_eq!(out.exit_code(), 0);
    }

    #[test]
    fn check_ids_are_unique() {
        let ids = suite_check_ids();
        let mut dedup = ids.clone();
        dedup.dedup();
        assert_eq!(ids, dedup);
    }
}
