//! Crash-site mapping: deciding whether a sanitizer discrepancy is a
//! false-negative bug or the effect of optimization.

mod debugger;
mod lines;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use debugger::{cached_trace, get_executed_sites, DEFAULT_STEP_BUDGET};
pub use lines::LineTable;

use crate::lang::SourceLoc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Terminal {
    Crash,
    NormalExit,
    Timeout,
}

/// Executed source sites of one run, consecutive repeats collapsed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SiteTrace {
    pub sites: Vec<SourceLoc>,
    pub truncated: bool,
    pub terminal: Terminal,
}

impl SiteTrace {
    pub fn new(sites: Vec<SourceLoc>, truncated: bool, terminal: Terminal) -> Self {
        let mut t = SiteTrace {
            sites: Vec::with_capacity(sites.len()),
            truncated,
            terminal,
        };
        for s in sites {
            t.push(s);
        }
        t
    }

    pub fn push(&mut self, s: SourceLoc) {
        if self.sites.last() != Some(&s) {
            self.sites.push(s);
        }
    }

    pub fn last(&self) -> Option<SourceLoc> {
        self.sites.last().copied()
    }

    pub fn contains(&self, s: SourceLoc) -> bool {
        self.sites.contains(&s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    FnBug,
    OptimizedAway,
    NoDiscrepancy,
    Inconclusive(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::FnBug => f.write_str("FnBug"),
            Verdict::OptimizedAway => f.write_str("OptimizedAway"),
            Verdict::NoDiscrepancy => f.write_str("NoDiscrepancy"),
            Verdict::Inconclusive(r) => write!(f, "Inconclusive({r})"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("trace collection failed: {0}")]
    Debugger(String),
}

/// The discrepancy is a false negative iff the
/// crashing binary's last executed site also runs in the other binary.
pub fn is_bug(trace_c: &SiteTrace, trace_n: &SiteTrace) -> Result<Verdict, OracleError> {
    if trace_c.terminal != Terminal::Crash {
        return Err(OracleError::PreconditionViolated(
            "first trace must end in a crash".into(),
        ));
    }
    if trace_n.terminal != Terminal::NormalExit {
        return Err(OracleError::PreconditionViolated(
            "second trace must end normally".into(),
        ));
    }
    let Some(site) = trace_c.last() else {
        return Ok(Verdict::Inconclusive("crashing trace is empty".into()));
    };
    if trace_c.truncated {
        return Ok(Verdict::Inconclusive("crashing trace truncated".into()));
    }
    if trace_n.contains(site) {
        return Ok(Verdict::FnBug);
    }
    if trace_n.truncated {
        return Ok(Verdict::Inconclusive("non-crashing trace truncated".into()));
    }
    Ok(Verdict::OptimizedAway)
}
