//! Solver modes, outcomes and the text report format.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::decomposition::{is_biconnected, is_connected};
use crate::labelled_graph::{LabelSet, PlainGraph};

/// Which spanning property the induced subgraph must have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Minimum labelling spanning bi-connected subgraph (`mlsb`).
    Biconnected,
    /// Minimum labelling spanning tree (`mlst`).
    Connected,
}

impl Mode {
    pub fn accepts(self, g: &PlainGraph) -> bool {
        match self {
            Mode::Biconnected => is_biconnected(g),
            Mode::Connected => is_connected(g),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Biconnected => "mlsb",
            Mode::Connected => "mlst",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "mlsb" => Ok(Mode::Biconnected),
            "mlst" => Ok(Mode::Connected),
            other => Err(format!("unknown mode {other:?}, expected mlsb or mlst")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Exact,
    Mvca,
    Oracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Mvca => "mvca",
            Method::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverOutcome {
    /// Empty when not feasible.
    pub labels: LabelSet,
    pub size: usize,
    pub feasible: bool,
    pub nodes_explored: u64,
    pub elapsed_ms: u64,
    pub mode: Mode,
    pub method: Method,
}

impl SolverOutcome {
    pub(crate) fn infeasible(q: usize, mode: Mode, method: Method, nodes: u64) -> Self {
        SolverOutcome {
            labels: LabelSet::empty(q),
            size: 0,
            feasible: false,
            nodes_explored: nodes,
            elapsed_ms: 0,
            mode,
            method,
        }
    }

    pub(crate) fn found(labels: LabelSet, mode: Mode, method: Method, nodes: u64) -> Self {
        SolverOutcome {
            size: labels.len(),
            labels,
            feasible: true,
            nodes_explored: nodes,
            elapsed_ms: 0,
            mode,
            method,
        }
    }

    /// `key=value` lines: method, mode, feasible, size, labels, nodes and,
    /// when `with_time` is set, time_ms.
    pub fn report(&self, with_time: bool) -> String {
        let mut out = format!(
            "method={}\nmode={}\nfeasible={}\nsize={}\nlabels={}\nnodes={}\n",
            self.method.as_str(),
            self.mode,
            self.feasible,
            self.size,
            self.labels,
            self.nodes_explored,
        );
        out.push_str(&format!(
            "time_ms={}\n",
            if with_time { self.elapsed_ms } else { 0 }
        ));
        out
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("the full label set does not satisfy {0}")]
    Infeasible(Mode),
    /// Carries the best incumbent found, if any (`feasible=false` otherwise).
    #[error("time limit exceeded")]
    TimeLimitExceeded(Box<SolverOutcome>),
    #[error("brute force limited to 20 labels, instance has {0}")]
    TooManyLabels(usize),
    #[error("no feasible label set with at most {0} labels")]
    SizeCapExceeded(usize),
}
