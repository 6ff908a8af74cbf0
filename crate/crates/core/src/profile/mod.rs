//! Execution profiles: instrument a seed, run it once, and answer liveness,
//! value, memory and scope queries about the run.

mod instrument;
pub mod log;

use std::collections::BTreeMap;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use instrument::{anchor_map, instrument, InstrumentError, Instrumented, ObjStorage, Probe, PRELUDE};

use crate::lang::{NodeId, ScopeId, SourceLoc};
use crate::minivm::{self, VmConfig, VmError, VmOutcome};
use crate::toolchain::Toolchain;
use log::{LogError, Tag};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemObject {
    pub base: u64,
    pub size: u64,
    pub storage: ObjStorage,
    pub alloc_site: SourceLoc,
    pub freed: Option<SourceLoc>,
    /// Declaration the object belongs to, if it is a named variable.
    pub decl: Option<NodeId>,
    /// Log position of the allocation record.
    pub seq: u64,
    pub freed_seq: Option<u64>,
}

impl MemObject {
    pub fn end(&self) -> u64 {
        self.base + self.size
    }
}

/// One dynamic evaluation of a site. Integer operands are stored already
/// wrapped to their C type; addresses as unsigned values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Occurrence {
    pub seq: u64,
    pub operands: Vec<Option<i128>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExecutionProfile {
    pub values: BTreeMap<NodeId, Vec<Occurrence>>,
    pub objects: Vec<MemObject>,
    /// Anchor statement id to the log positions at which it was entered.
    pub anchors: BTreeMap<NodeId, Vec<u64>>,
    pub scopes: BTreeMap<NodeId, ScopeId>,
    pub scope_parent: BTreeMap<ScopeId, ScopeId>,
    /// Operand slots of each site that hold addresses.
    pub pointer_slots: BTreeMap<NodeId, Vec<u8>>,
    pub stdout: String,
}

#[derive(Debug, Error)]
pub enum ProfileError {
    #[error("compilation failed: {0}")]
    CompileFailed(String),
    #[error("profiling run timed out")]
    RunTimeout,
    #[error("profiling run crashed: {0}")]
    RunCrashed(String),
    #[error(transparent)]
    Vm(#[from] VmError),
    #[error(transparent)]
    Log(#[from] LogError),
    #[error("probe {0} is not part of the instrumentation")]
    UnknownProbe(u32),
    #[error("site {0} was never executed")]
    NotLive(NodeId),
    #[error("site {0} operand {1} is not a pointer")]
    NotAPointer(NodeId, usize),
    #[error("no object covers address {0:#x}")]
    NoObject(u64),
    #[error("unknown declaration {0}")]
    UnknownDeclaration(NodeId),
    #[error("{0}")]
    Io(String),
}

/// Result of a memory query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MemRef<'a> {
    Live(&'a MemObject),
    Freed(&'a MemObject),
}

impl<'a> MemRef<'a> {
    pub fn object(self) -> &'a MemObject {
        match self {
            MemRef::Live(o) | MemRef::Freed(o) => o,
        }
    }
}

/// Executes the instrumented program once and builds its profile.
pub fn run_profile(inst: &Instrumented, tc: &Toolchain, timeout: Duration) -> Result<ExecutionProfile, ProfileError> {
    let (stdout, log) = match tc {
        Toolchain::Sim => {
            let run = minivm::run(&inst.ast, &VmConfig::default())?;
            match run.outcome {
                VmOutcome::Normal { stdout, .. } => (stdout, run.log),
                VmOutcome::Ub { kind, site, detail } => {
                    return Err(ProfileError::RunCrashed(format!("{kind} at {site}: {detail}")))
                }
                VmOutcome::StepLimit => return Err(ProfileError::RunTimeout),
            }
        }
        Toolchain::Real(real) => real.run_instrumented(&inst.ast, timeout)?,
    };
    build_profile(inst, &log, stdout)
}

/// Decodes a log written by an instrumented run.
pub fn build_profile(inst: &Instrumented, bytes: &[u8], stdout: String) -> Result<ExecutionProfile, ProfileError> {
    let records = log::decode(bytes)?;
    let mut values: BTreeMap<NodeId, Vec<Occurrence>> = BTreeMap::new();
    let mut open: BTreeMap<NodeId, Occurrence> = BTreeMap::new();
    let mut objects: Vec<MemObject> = Vec::new();
    let mut anchors: BTreeMap<NodeId, Vec<u64>> = BTreeMap::new();
    for (seq, r) in records.iter().enumerate() {
        let seq = seq as u64;
        let probe = inst
            .probes
            .get(r.probe as usize)
            .ok_or(ProfileError::UnknownProbe(r.probe))?;
        match (r.tag, probe) {
            (Tag::Value | Tag::Access, Probe::Operand { site, slot, ty }) => {
                let v = match ty {
                    Some(t) => t.wrap(i128::from(r.a as i64)),
                    None => i128::from(r.a),
                };
                let slots = inst.slot_count(*site);
                let cur = open.entry(*site).or_insert_with(|| Occurrence {
                    seq,
                    operands: vec![None; slots],
                });
                if cur.operands[*slot as usize].is_some() {
                    let done = std::mem::replace(
                        cur,
                        Occurrence {
                            seq,
                            operands: vec![None; slots],
                        },
                    );
                    values.entry(*site).or_default().push(done);
                }
                cur.operands[*slot as usize] = Some(v);
            }
            (Tag::Scope, Probe::Anchor { stmt }) => anchors.entry(*stmt).or_default().push(seq),
            (Tag::Range, Probe::Object { decl, storage, loc }) => {
                let dup = objects.iter().any(|o| {
                    o.decl == Some(*decl) && o.base == r.a && o.size == r.b && o.freed.is_none()
                });
                if !dup && r.b > 0 {
                    objects.push(MemObject {
                        base: r.a,
                        size: r.b,
                        storage: *storage,
                        alloc_site: *loc,
                        freed: None,
                        decl: Some(*decl),
                        seq,
                        freed_seq: None,
                    });
                }
            }
            (Tag::Range, Probe::Heap { loc }) => {
                if r.a != 0 && r.b > 0 {
                    objects.push(MemObject {
                        base: r.a,
                        size: r.b,
                        storage: ObjStorage::Heap,
                        alloc_site: *loc,
                        freed: None,
                        decl: None,
                        seq,
                        freed_seq: None,
                    });
                }
            }
            (Tag::Free, Probe::Free { loc }) => {
                if let Some(o) = objects
                    .iter_mut()
                    .rev()
                    .find(|o| o.storage == ObjStorage::Heap && o.base == r.a && o.freed.is_none())
                {
                    o.freed = Some(*loc);
                    o.freed_seq = Some(seq);
                }
            }
            _ => return Err(ProfileError::UnknownProbe(r.probe)),
        }
    }
    for (site, occ) in open {
        values.entry(site).or_default().push(occ);
    }
    for v in values.values_mut() {
        v.sort_by_key(|o| o.seq);
    }
    Ok(ExecutionProfile {
        values,
        objects,
        anchors,
        scopes: inst.scopes.clone(),
        scope_parent: inst.scope_parent.clone(),
        pointer_slots: inst.pointer_slots(),
        stdout,
    })
}

impl ExecutionProfile {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("profile serializes")
    }
}

pub fn q_liv(p: &ExecutionProfile, site: NodeId) -> bool {
    p.values.get(&site).is_some_and(|v| !v.is_empty())
}

pub fn occurrences(p: &ExecutionProfile, site: NodeId) -> &[Occurrence] {
    p.values.get(&site).map_or(&[], Vec::as_slice)
}

/// Operand values of the `n`th dynamic occurrence (0 is the first).
pub fn q_val(p: &ExecutionProfile, site: NodeId, n: usize) -> Result<&Occurrence, ProfileError> {
    occurrences(p, site).get(n).ok_or(ProfileError::NotLive(site))
}

/// The object an address pointed into at log position `seq`. An address one
/// past the end of an object also resolves to it.
pub fn object_at(p: &ExecutionProfile, addr: u64, seq: u64) -> Option<MemRef<'_>> {
    let pick = |inside: &dyn Fn(&MemObject) -> bool| {
        p.objects
            .iter()
            .filter(|o| o.seq < seq && inside(o))
            .max_by_key(|o| o.seq)
    };
    let o = pick(&|o| o.base <= addr && addr < o.end()).or_else(|| pick(&|o| o.end() == addr))?;
    Some(match o.freed_seq {
        Some(f) if f < seq => MemRef::Freed(o),
        _ => MemRef::Live(o),
    })
}

/// Memory object of an address operand at the first occurrence.
pub fn q_mem(p: &ExecutionProfile, site: NodeId, slot: usize) -> Result<MemRef<'_>, ProfileError> {
    let occ = q_val(p, site, 0)?;
    if !p.pointer_slots.get(&site).is_some_and(|s| s.contains(&(slot as u8))) {
        return Err(ProfileError::NotAPointer(site, slot));
    }
    let addr = occ.operands.get(slot).copied().flatten().ok_or(ProfileError::NotAPointer(site, slot))? as u64;
    object_at(p, addr, occ.seq).ok_or(ProfileError::NoObject(addr))
}

pub fn q_scp(p: &ExecutionProfile, decl: NodeId) -> Result<ScopeId, ProfileError> {
    p.scopes.get(&decl).copied().ok_or(ProfileError::UnknownDeclaration(decl))
}

/// True if scope `inner` is strictly nested inside `outer`.
pub fn scope_strictly_within(p: &ExecutionProfile, inner: ScopeId, outer: ScopeId) -> bool {
    let mut s = inner;
    while let Some(parent) = p.scope_parent.get(&s) {
        if *parent == s {
            break;
        }
        if *parent == outer {
            return true;
        }
        s = *parent;
    }
    false
}

#[cfg(test)]
mod tests;
