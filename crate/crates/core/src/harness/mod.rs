//! The testing loop: seeds in, UB programs out, every program built under
//! the compile matrix, discrepant pairs judged by the oracle, and bugs
//! persisted for replay and reporting.

mod config;
mod reduce;
mod run;
mod store;

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use config::{Budgets, CampaignConfig, ConfigError, Profiler, ReducerHook, SeedSource};
pub use reduce::{interestingness_script, reduce_hook, ReduceError};
pub use run::{judge_pair, load_seeds, replay, run_campaign, Lab, LoadedSeed, ReplayOutcome, Run};
pub use store::{emit_generation, report, Entry, SeedRecord, Store};

use crate::lang::SourceLoc;
use crate::matching::UbKind;
use crate::oracle::Verdict;
use crate::toolchain::{digest, CompilerConfig, OptLevel, RunOutcome, RunStatus, Sanitizer};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("campaign store: {0}")]
    Store(#[from] std::io::Error),
    #[error("{0} already holds a campaign with a different configuration")]
    ConfigMismatch(std::path::PathBuf),
    #[error("no finding matches `{0}`")]
    UnknownFinding(String),
    #[error("program {0} is missing from the store")]
    MissingProgram(String),
    #[error("{0}")]
    Setup(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairDecision {
    Discrepant { crash: Side },
    NoDiscrepancy,
    Skip(String),
}

/// Two runs of one program under one sanitizer are discrepant when exactly
/// one reports and the other exits normally.
pub fn classify_pair(a: &RunOutcome, b: &RunOutcome) -> PairDecision {
    use RunStatus::*;
    match (&a.status, &b.status) {
        (SanReport { .. }, NormalExit(_)) => PairDecision::Discrepant { crash: Side::A },
        (NormalExit(_), SanReport { .. }) => PairDecision::Discrepant { crash: Side::B },
        (SanReport { .. }, SanReport { .. }) | (NormalExit(_), NormalExit(_)) => PairDecision::NoDiscrepancy,
        (Timeout, _) | (_, Timeout) => PairDecision::Skip("timeout".into()),
        (OtherCrash(r), _) | (_, OtherCrash(r)) => PairDecision::Skip(format!("crash without report: {r}")),
    }
}

/// Whether two configurations of one sanitizer are compared: same compiler
/// at different levels, or different compilers at the same level.
pub fn paired(a: &CompilerConfig, b: &CompilerConfig) -> bool {
    a.sanitizer == b.sanitizer
        && a.extra_flags == b.extra_flags
        && ((a.compiler == b.compiler) != (a.opt == b.opt))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub a: CompilerConfig,
    pub b: CompilerConfig,
    pub decision: PairDecision,
    pub verdict: Option<Verdict>,
    pub crash_site: Option<SourceLoc>,
}

impl PairRecord {
    /// `(crashing, non-crashing)` configurations of a discrepant pair.
    pub fn roles(&self) -> Option<(&CompilerConfig, &CompilerConfig)> {
        match self.decision {
            PairDecision::Discrepant { crash: Side::A } => Some((&self.a, &self.b)),
            PairDecision::Discrepant { crash: Side::B } => Some((&self.b, &self.a)),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProgramClass {
    Skipped,
    NoDiscrepancy,
    Discrepant,
}

/// Everything the campaign learned about one generated program.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProgramRecord {
    pub seed_id: String,
    pub kind: UbKind,
    pub index: usize,
    pub program_hash: String,
    pub planted_site: SourceLoc,
    pub class: ProgramClass,
    pub verdict: Option<Verdict>,
    pub pairs: Vec<PairRecord>,
    pub errors: Vec<String>,
}

impl ProgramRecord {
    /// Folds pair results into one classification. A program with any
    /// discrepant pair is discrepant, and its verdict is the strongest one
    /// among those pairs.
    pub fn classify(&mut self) {
        let verdicts: Vec<&Verdict> = self.pairs.iter().filter_map(|p| p.verdict.as_ref()).collect();
        if self.pairs.iter().any(|p| p.roles().is_some()) {
            self.class = ProgramClass::Discrepant;
            self.verdict = Some(
                if verdicts.iter().any(|v| **v == Verdict::FnBug) {
                    Verdict::FnBug
                } else if verdicts.iter().any(|v| **v == Verdict::OptimizedAway) {
                    Verdict::OptimizedAway
                } else {
                    verdicts
                        .iter()
                        .find(|v| matches!(v, Verdict::Inconclusive(_)))
                        .map(|v| (*v).clone())
                        .unwrap_or_else(|| Verdict::Inconclusive("no verdict".into()))
                },
            );
        } else if self.pairs.iter().any(|p| p.decision == PairDecision::NoDiscrepancy) {
            self.class = ProgramClass::NoDiscrepancy;
            self.verdict = Some(Verdict::NoDiscrepancy);
        } else {
            self.class = ProgramClass::Skipped;
            self.verdict = None;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DedupKey {
    pub compiler: String,
    pub sanitizer: Sanitizer,
    pub opt: OptLevel,
    pub kind: UbKind,
    /// Crash line qualified by the program it occurs in.
    pub site: String,
}

/// A confirmed sanitizer false negative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub id: String,
    pub seed_id: String,
    pub kind: UbKind,
    pub cfg_crash: CompilerConfig,
    pub cfg_nocrash: CompilerConfig,
    pub crash_site: SourceLoc,
    pub verdict: Verdict,
    pub program_hash: String,
    pub campaign_seed: u64,
}

impl Finding {
    pub fn from_pair(rec: &ProgramRecord, pair: &PairRecord, campaign_seed: u64) -> Option<Finding> {
        let (c, n) = pair.roles()?;
        if pair.verdict != Some(Verdict::FnBug) {
            return None;
        }
        let id = digest(format!("{}|{c}|{n}", rec.program_hash).as_bytes())[..16].to_string();
        Some(Finding {
            id,
            seed_id: rec.seed_id.clone(),
            kind: rec.kind,
            cfg_crash: c.clone(),
            cfg_nocrash: n.clone(),
            crash_site: pair.crash_site?,
            verdict: Verdict::FnBug,
            program_hash: rec.program_hash.clone(),
            campaign_seed,
        })
    }

    /// The missed report is attributed to the non-crashing configuration.
    pub fn dedup_key(&self) -> DedupKey {
        DedupKey {
            compiler: self.cfg_nocrash.compiler.clone(),
            sanitizer: self.cfg_nocrash.sanitizer,
            opt: self.cfg_nocrash.opt,
            kind: self.kind,
            site: format!("{}:{}", &self.program_hash[..16.min(self.program_hash.len())], self.crash_site.line),
        }
    }
}

/// Keeps the first finding of every key, preserving order.
pub fn dedup(findings: Vec<Finding>) -> Vec<Finding> {
    let mut seen = HashSet::new();
    findings.into_iter().filter(|f| seen.insert(f.dedup_key())).collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub generated: usize,
    pub skipped: usize,
    pub no_discrepancy: usize,
    pub discrepant: usize,
    pub fn_bug: usize,
    pub optimized_away: usize,
    pub inconclusive: usize,
}

impl Tally {
    fn add(&mut self, r: &ProgramRecord) {
        self.generated += 1;
        match r.class {
            ProgramClass::Skipped => self.skipped += 1,
            ProgramClass::NoDiscrepancy => self.no_discrepancy += 1,
            ProgramClass::Discrepant => {
                self.discrepant += 1;
                match r.verdict {
                    Some(Verdict::FnBug) => self.fn_bug += 1,
                    Some(Verdict::OptimizedAway) => self.optimized_away += 1,
                    _ => self.inconclusive += 1,
                }
            }
        }
    }

    /// Every program lands in exactly one bucket.
    pub fn conserved(&self) -> bool {
        self.generated == self.skipped + self.no_discrepancy + self.discrepant
            && self.discrepant == self.fn_bug + self.optimized_away + self.inconclusive
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub campaign_seed: u64,
    pub seeds: usize,
    pub seed_errors: usize,
    /// Matched sites for which no program could be synthesized.
    pub sites_skipped: usize,
    pub totals: Tally,
    pub per_kind: BTreeMap<UbKind, Tally>,
    /// Deduplicated findings.
    pub findings: usize,
    pub findings_per_sanitizer: BTreeMap<Sanitizer, usize>,
    pub findings_per_opt: BTreeMap<OptLevel, usize>,
    pub findings_per_kind: BTreeMap<UbKind, usize>,
    /// Failed builds, runs and traces, counted per program.
    pub errors: usize,
}

impl CampaignReport {
    /// Folds the progress log and findings into a report.
    pub fn fold<'a>(
        campaign_seed: u64,
        entries: impl IntoIterator<Item = &'a Entry>,
        findings: &[Finding],
    ) -> CampaignReport {
        let mut r = CampaignReport {
            campaign_seed,
            ..Default::default()
        };
        for e in entries {
            match e {
                Entry::Seed(s) => {
                    r.seeds += 1;
                    r.seed_errors += usize::from(s.error.is_some());
                    r.sites_skipped += s.sites_skipped;
                }
                Entry::Program(p) => {
                    r.totals.add(p);
                    r.per_kind.entry(p.kind).or_default().add(p);
                    r.errors += p.errors.len();
                }
            }
        }
        for f in findings {
            r.findings += 1;
            *r.findings_per_sanitizer.entry(f.cfg_nocrash.sanitizer).or_default() += 1;
            *r.findings_per_opt.entry(f.cfg_nocrash.opt).or_default() += 1;
            *r.findings_per_kind.entry(f.kind).or_default() += 1;
        }
        r
    }

    pub fn conserved(&self) -> bool {
        self.totals.conserved() && self.per_kind.values().all(Tally::conserved)
    }
}

impl fmt::Display for CampaignReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = &self.totals;
        writeln!(f, "campaign seed     {}", self.campaign_seed)?;
        writeln!(f, "seeds             {} ({} rejected)", self.seeds, self.seed_errors)?;
        writeln!(f, "programs          {}", t.generated)?;
        writeln!(f, "  skipped         {}", t.skipped)?;
        writeln!(f, "  no discrepancy  {}", t.no_discrepancy)?;
        writeln!(f, "  discrepant      {}", t.discrepant)?;
        writeln!(f, "    FnBug         {}", t.fn_bug)?;
        writeln!(f, "    OptimizedAway {}", t.optimized_away)?;
        writeln!(f, "    Inconclusive  {}", t.inconclusive)?;
        writeln!(f, "findings          {}", self.findings)?;
        writeln!(f, "errors            {}", self.errors)?;
        writeln!(f)?;
        writeln!(f, "{:<20} {:>6} {:>6} {:>6} {:>6} {:>6}", "kind", "gen", "skip", "same", "bug", "opt")?;
        for (k, t) in &self.per_kind {
            writeln!(
                f,
                "{:<20} {:>6} {:>6} {:>6} {:>6} {:>6}",
                k.name(),
                t.generated,
                t.skipped,
                t.no_discrepancy,
                t.fn_bug,
                t.optimized_away
            )?;
        }
        if !self.findings_per_opt.is_empty() {
            writeln!(f)?;
            let opts: Vec<String> = self.findings_per_opt.iter().map(|(o, n)| format!("{o}={n}")).collect();
            let sans: Vec<String> = self.findings_per_sanitizer.iter().map(|(s, n)| format!("{s}={n}")).collect();
            writeln!(f, "findings by level      {}", opts.join(" "))?;
            writeln!(f, "findings by sanitizer  {}", sans.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
