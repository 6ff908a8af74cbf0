//! Reference interpreter for the C subset that stops at the first undefined
//! behavior it evaluates.

mod interp;
pub mod memory;
pub mod printf;
#[cfg(test)]
mod tests;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lang::{Ast, ParseError, SourceLoc};
use crate::matching::UbKind;
use crate::oracle::{SiteTrace, Terminal};

pub const DEFAULT_STEP_LIMIT: u64 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VmOutcome {
    Normal { exit_code: i32, stdout: String },
    Ub { kind: UbKind, site: SourceLoc, detail: String },
    StepLimit,
}

impl VmOutcome {
    pub fn ub(&self) -> Option<(UbKind, SourceLoc)> {
        match self {
            VmOutcome::Ub { kind, site, .. } => Some((*kind, *site)),
            _ => None,
        }
    }
}

#[derive(Debug, Error)]
pub enum VmError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{loc}: unsupported: {msg}")]
    Unsupported { loc: SourceLoc, msg: String },
}

/// What to do when the violation at a particular site is reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Fault {
    /// Execute the site but do not report it.
    Miss,
    /// Behave as if the site had been compiled away.
    Eliminate,
}

#[derive(Clone, Debug, Default)]
pub struct CheckPolicy {
    /// Kinds that stop execution; `None` means all of them.
    pub detect: Option<Vec<UbKind>>,
    pub fault: Option<(SourceLoc, Fault)>,
}

impl CheckPolicy {
    pub fn detects(&self, k: UbKind) -> bool {
        self.detect.as_ref().is_none_or(|d| d.contains(&k))
    }
}

#[derive(Clone, Debug)]
pub struct VmConfig {
    pub step_limit: u64,
    pub policy: CheckPolicy,
    pub trace: bool,
}

impl Default for VmConfig {
    fn default() -> Self {
        VmConfig {
            step_limit: DEFAULT_STEP_LIMIT,
            policy: CheckPolicy::default(),
            trace: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct VmRun {
    pub outcome: VmOutcome,
    /// Program output up to the point execution stopped.
    pub stdout: Vec<u8>,
    /// Profile records written by instrumentation hooks.
    pub log: Vec<u8>,
    pub trace: Option<SiteTrace>,
}

pub fn run(ast: &Ast, cfg: &VmConfig) -> Result<VmRun, VmError> {
    let mut run = interp::execute(ast, cfg)?;
    if let Some(t) = &mut run.trace {
        t.terminal = match run.outcome {
            VmOutcome::Normal { .. } => Terminal::NormalExit,
            VmOutcome::Ub { .. } => Terminal::Crash,
            VmOutcome::StepLimit => Terminal::Timeout,
        };
        t.truncated = run.outcome == VmOutcome::StepLimit;
    }
    Ok(run)
}

pub fn eval_program(ast: &Ast, step_limit: u64) -> Result<VmOutcome, VmError> {
    let cfg = VmConfig {
        step_limit,
        ..VmConfig::default()
    };
    Ok(run(ast, &cfg)?.outcome)
}

pub fn eval_trace(ast: &Ast, step_limit: u64) -> Result<(VmOutcome, SiteTrace), VmError> {
    let cfg = VmConfig {
        step_limit,
        trace: true,
        ..VmConfig::default()
    };
    let r = run(ast, &cfg)?;
    Ok((r.outcome, r.trace.expect("trace requested")))
}

/// Parses and evaluates source text.
pub fn eval_source(src: &str, step_limit: u64) -> Result<VmOutcome, VmError> {
    let ast = crate::lang::parse_program(src)?;
    eval_program(&ast, step_limit)
}
