//! Seeded instance generation and benchmark sweeps.
//!
//! Randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64`. Only raw `next_u64` output is consumed; bounded draws
//! use rejection sampling below, so a given seed yields the same instance on
//! every platform and can be reproduced from other languages.
//!
//! Generation steps:
//! 1. with `guarantee_feasible`, shuffle `0..n` (Fisher-Yates, swapping
//!    position `i` with a draw in `0..=i` for `i = n-1` down to `1`) and
//!    insert the Hamiltonian cycle through that permutation;
//! 2. list every remaining pair `u < v` lexicographically, shuffle it the
//!    same way and take pairs until `m` edges exist;
//! 3. sort the edges by `(u, v)` and draw one label in `0..q` per edge.

use std::collections::HashSet;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::{Deserialize, Serialize};
use thiserror::Error;
use web_time::{Duration, Instant};

use crate::decomposition::is_biconnected;
use crate::exact::exact_solve;
use crate::heuristics::mvca;
use crate::labelled_graph::{EdgeRecord, LabelledGraph};
use crate::outcome::{Mode, SolveError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("n must be at least 3, got {0}")]
    TooFewVertices(usize),
    #[error("m={m} must lie in [{min}, {max}] for n={n}")]
    EdgeCountOutOfRange {
        n: usize,
        m: usize,
        min: usize,
        max: usize,
    },
    #[error("q must be at least 1")]
    NoLabels,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub n: usize,
    pub m: usize,
    pub q: usize,
    pub seed: u64,
    #[serde(default, rename = "feasible")]
    pub guarantee_feasible: bool,
}

impl GeneratorConfig {
    pub fn validate(&self) -> Result<(), GeneratorError> {
        if self.n < 3 {
            return Err(GeneratorError::TooFewVertices(self.n));
        }
        let max = self.n * (self.n - 1) / 2;
        if self.m < self.n || self.m > max {
            return Err(GeneratorError::EdgeCountOutOfRange {
                n: self.n,
                m: self.m,
                min: self.n,
                max,
            });
        }
        if self.q == 0 {
            return Err(GeneratorError::NoLabels);
        }
        Ok(())
    }
}

/// Uniform draw in `0..bound` by rejection on the top of the `u64` range.
fn below(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    debug_assert!(bound > 0);
    let zone = u64::MAX - (u64::MAX % bound);
    loop {
        let x = rng.next_u64();
        if x < zone {
            return x % bound;
        }
    }
}

fn shuffle<T>(rng: &mut ChaCha8Rng, items: &mut [T]) {
    for i in (1..items.len()).rev() {
        let j = below(rng, i as u64 + 1) as usize;
        items.swap(i, j);
    }
}

pub fn generate(config: &GeneratorConfig) -> Result<LabelledGraph, GeneratorError> {
    config.validate()?;
    let GeneratorConfig { n, m, q, seed, .. } = *config;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(m);
    let mut present = HashSet::with_capacity(m);

    if config.guarantee_feasible {
        let mut perm: Vec<usize> = (0..n).collect();
        shuffle(&mut rng, &mut perm);
        for i in 0..n {
            let (a, b) = (perm[i], perm[(i + 1) % n]);
            let pair = (a.min(b), a.max(b));
            present.insert(pair);
            pairs.push(pair);
        }
    }

    let mut rest: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|p| !present.contains(p))
        .collect();
    shuffle(&mut rng, &mut rest);
    pairs.extend(rest.into_iter().take(m - pairs.len()));
    pairs.sort_unstable();

    let edges = pairs
        .into_iter()
        .map(|(u, v)| EdgeRecord::new(u, v, below(&mut rng, q as u64) as usize))
        .collect();
    Ok(LabelledGraph::new(n, q, edges).expect("generated edges are valid"))
}

/// Sweep description read from a TOML file:
///
/// ```toml
/// repetitions = 3
/// timeout_secs = 10.0
///
/// [[instance]]
/// n = 8
/// m = 14
/// q = 5
/// seed = 1
/// feasible = true
/// ```
///
/// Repetition `r` of an entry uses seed `seed + r`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchSpec {
    #[serde(default = "one")]
    pub repetitions: u64,
    #[serde(default)]
    pub timeout_secs: Option<f64>,
    #[serde(default, rename = "instance")]
    pub instances: Vec<GeneratorConfig>,
}

fn one() -> u64 {
    1
}

impl BenchSpec {
    pub fn from_toml(text: &str) -> Result<Self, toml::de::Error> {
        toml::from_str(text)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RowStatus {
    Ok,
    Infeasible,
    Timeout,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub q: usize,
    pub seed: u64,
    pub mode: String,
    pub status: RowStatus,
    pub exact_size: Option<usize>,
    pub mvca_size: Option<usize>,
    pub gap: Option<usize>,
    pub exact_nodes: Option<u64>,
    pub exact_ms: u64,
    pub mvca_ms: u64,
    pub message: String,
}

#[derive(Debug, Clone, Copy)]
pub struct BenchOptions {
    pub mode: Mode,
    pub time_limit: Option<Duration>,
    /// Zero the timing columns so reports are byte-reproducible.
    pub record_time: bool,
}

fn bench_one(config: &GeneratorConfig, opts: &BenchOptions) -> BenchRow {
    let mut row = BenchRow {
        n: config.n,
        m: config.m,
        q: config.q,
        seed: config.seed,
        mode: opts.mode.to_string(),
        status: RowStatus::Ok,
        exact_size: None,
        mvca_size: None,
        gap: None,
        exact_nodes: None,
        exact_ms: 0,
        mvca_ms: 0,
        message: String::new(),
    };
    let g = match generate(config) {
        Ok(g) => g,
        Err(e) => {
            row.status = RowStatus::Error;
            row.message = e.to_string();
            return row;
        }
    };

    let t0 = Instant::now();
    let exact = exact_solve(&g, opts.mode, opts.time_limit);
    let exact_ms = t0.elapsed().as_millis() as u64;
    let exact = match exact {
        Ok(o) if !o.feasible => {
            row.status = RowStatus::Infeasible;
            row.exact_nodes = Some(o.nodes_explored);
            return row;
        }
        Ok(o) => o,
        Err(SolveError::TimeLimitExceeded(partial)) => {
            row.status = RowStatus::Timeout;
            row.exact_nodes = Some(partial.nodes_explored);
            row.message = "exact search hit the time limit".into();
            return row;
        }
        Err(e) => {
            row.status = RowStatus::Error;
            row.message = e.to_string();
            return row;
        }
    };
    row.exact_size = Some(exact.size);
    row.exact_nodes = Some(exact.nodes_explored);

    let t1 = Instant::now();
    let greedy = mvca(&g, opts.mode);
    let mvca_ms = t1.elapsed().as_millis() as u64;
    match greedy {
        Ok((o, _)) => {
            row.mvca_size = Some(o.size);
            row.gap = Some(o.size - exact.size);
        }
        Err(e) => {
            row.status = RowStatus::Error;
            row.message = e.to_string();
        }
    }
    if opts.record_time {
        row.exact_ms = exact_ms;
        row.mvca_ms = mvca_ms;
    }
    row
}

/// One row per generated instance, in the order of `configs` then
/// repetition. Failures are recorded in the row's status and never abort
/// the sweep.
pub fn bench(configs: &[GeneratorConfig], repetitions: u64, opts: &BenchOptions) -> Vec<BenchRow> {
    let mut rows = Vec::new();
    for config in configs {
        for r in 0..repetitions {
            let cfg = GeneratorConfig {
                seed: config.seed.wrapping_add(r),
                ..*config
            };
            rows.push(bench_one(&cfg, opts));
        }
    }
    rows
}

pub const CSV_HEADER: &str =
    "n,m,q,seed,mode,status,exact_size,mvca_size,gap,exact_nodes,exact_ms,mvca_ms,message";

pub fn write_csv(rows: &[BenchRow]) -> Result<String, csv::Error> {
    let mut writer = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    for row in rows {
        writer.serialize(row)?;
    }
    let body = writer.into_inner().map_err(|e| e.into_error())?;
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    out.push_str(&String::from_utf8(body).expect("csv output is utf-8"));
    Ok(out)
}

/// True when every label together spans a bi-connected graph.
pub fn is_feasible_instance(g: &LabelledGraph) -> bool {
    is_biconnected(&g.induced_subgraph(&g.all_labels()))
}
