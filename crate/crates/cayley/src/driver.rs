//! Parallel drivers. Work is split per pair (or per identity) and merged in
//! index order, so results do not depend on the thread count.

use std::time::Instant;

use cayley_core::ledger::{check_identity, CheckResult, Identity};
use cayley_core::verify::{assemble_report, pair_table, Collection};
use cayley_core::{Error, ParabolicSetup, Result, VerificationReport};
use rayon::prelude::*;

/// Runs `f` on a pool of `jobs` threads, or on the global pool for `None`.
pub fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(Error::Invalid("--jobs must be at least 1".into())),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::Invalid(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

/// Computes all `|c|²` Ext tables. On failure the error for the first pair
/// in row-major order is returned, whatever order the workers finished in.
pub fn verify(c: &Collection, jobs: Option<usize>) -> Result<VerificationReport> {
    let start = Instant::now();
    let n = c.len();
    let results: Vec<_> = with_jobs(jobs, || {
        (0..n * n)
            .into_par_iter()
            .map(|k| pair_table(c, k / n, k % n))
            .collect()
    })?;
    let tables = results.into_iter().collect::<Result<Vec<_>>>()?;
    let mut report = assemble_report(c, tables)?;
    report.elapsed = Some(start.elapsed());
    Ok(report)
}

/// Checks identities concurrently. A failing evaluation is reported with
/// the name of its identity.
pub fn check_ledger(
    setup: &ParabolicSetup,
    ids: &[Identity],
    jobs: Option<usize>,
) -> Result<Vec<CheckResult>, (String, Error)> {
    let results: Vec<_> = with_jobs(jobs, || ids.par_iter().map(|id| check_identity(setup, id)).collect())
        .map_err(|e| (String::new(), e))?;
    results
        .into_iter()
        .zip(ids)
        .map(|(r, id)| r.map_err(|e| (id.name.clone(), e)))
        .collect()
}
