//! Parallel, resumable census execution.
//!
//! The trace range is split into one task per trace value a. Tasks run on a
//! rayon pool but are collected back in trace order, so the CSV bytes and
//! the summary are identical whatever the thread count. With a checkpoint
//! directory each task's result lands in its own file, written via a
//! temporary name and a rename; a rerun loads whatever parses cleanly and
//! recomputes the rest.

use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use weilforge::error::Error;
use weilforge::numth::{prime_powers_in, PrimePower};
use weilforge::surfaces::{self, CensusCounts};
use weilforge::Result;

pub struct CensusOptions {
    pub q: PrimePower,
    pub q_max: Option<u64>,
    pub checkpoint: Option<PathBuf>,
    pub jobs: Option<usize>,
}

const CSV_HEADER: &str = "q,a,b,class,splitting_degree";

/// One trace value's worth of census: the tallies and the CSV rows, in
/// ascending b order.
#[derive(Serialize, Deserialize)]
struct Partition {
    q: u64,
    a: i64,
    counts: CensusCounts,
    rows: Vec<String>,
}

impl Partition {
    fn plausible(&self, q: u64, a: i64) -> bool {
        self.q == q && self.a == a && self.rows.len() as u64 == self.counts.simple_ordinary
    }
}

fn partition_path(dir: &Path, q: u64, a: i64) -> PathBuf {
    dir.join(format!("census-q{q}-a{a}.json"))
}

fn compute_partition(q: PrimePower, a: i64) -> Partition {
    let mut counts = CensusCounts::empty();
    let mut rows = Vec::new();
    surfaces::visit_ordinary_simple(q, a, a, |a, b, class| {
        counts.record(a, class);
        let degree = class
            .splitting_degree()
            .map(|d| d.to_string())
            .unwrap_or_default();
        rows.push(format!("{},{},{},{},{}", q.q(), a, b, class.label(), degree));
    });
    Partition {
        q: q.q(),
        a,
        counts,
        rows,
    }
}

fn load_or_compute(q: PrimePower, a: i64, checkpoint: Option<&Path>) -> Result<Partition> {
    if let Some(dir) = checkpoint {
        let path = partition_path(dir, q.q(), a);
        if let Ok(text) = std::fs::read_to_string(&path) {
            if let Ok(part) = serde_json::from_str::<Partition>(&text) {
                if part.plausible(q.q(), a) {
                    return Ok(part);
                }
            }
        }
        let part = compute_partition(q, a);
        let tmp = dir.join(format!("census-q{}-a{}.tmp", q.q(), a));
        std::fs::write(&tmp, serde_json::to_string(&part).expect("partitions serialize"))?;
        std::fs::rename(&tmp, &path)?;
        return Ok(part);
    }
    Ok(compute_partition(q, a))
}

fn census_one(pool: &rayon::ThreadPool, q: PrimePower, checkpoint: Option<&Path>) -> Result<(Value, Vec<String>)> {
    let (a_lo, a_hi) = surfaces::a_range(q);
    let parts: Vec<Result<Partition>> = pool.install(|| {
        (a_lo..=a_hi)
            .into_par_iter()
            .map(|a| load_or_compute(q, a, checkpoint))
            .collect()
    });
    let mut counts = CensusCounts::empty();
    let mut rows = Vec::new();
    for part in parts {
        let part = part?;
        counts.absorb(&part.counts);
        rows.extend(part.rows);
    }
    let census = surfaces::assemble_census(q, counts);
    Ok((serde_json::to_value(&census).expect("censuses serialize"), rows))
}

/// Runs the census over the requested field sizes and returns the complete
/// CSV text plus the (schema-less) JSON summary.
pub fn run(options: &CensusOptions) -> Result<(String, Value)> {
    let lo = options.q.q();
    let hi = options.q_max.unwrap_or(lo);
    if hi < lo {
        return Err(Error::Parse(format!("--q-max {hi} lies below --q {lo}")));
    }
    if let Some(dir) = &options.checkpoint {
        std::fs::create_dir_all(dir)?;
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = options.jobs {
        builder = builder.num_threads(jobs);
    }
    let pool = builder.build().map_err(|e| Error::Io(e.to_string()))?;
    let mut csv = String::from(CSV_HEADER);
    csv.push('\n');
    let mut censuses = Vec::new();
    for q in prime_powers_in(lo, hi) {
        let (summary, rows) = census_one(&pool, q, options.checkpoint.as_deref())?;
        for row in rows {
            csv.push_str(&row);
            csv.push('\n');
        }
        censuses.push(summary);
    }
    Ok((csv, json!({ "censuses": censuses })))
}
