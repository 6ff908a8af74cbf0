use std::collections::{BTreeMap, HashSet};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::mpsc;
use std::time::Duration;

use rayon::prelude::*;

use super::reduce::reduce_hook;
use super::store::{emit_generation, Entry, SeedRecord, Store};
use super::{
    classify_pair, dedup, paired, CampaignConfig, CampaignReport, Finding, HarnessError, PairDecision, PairRecord,
    ProgramClass, ProgramRecord, Profiler, SeedSource, Side,
};
use crate::matching::UbKind;
use crate::oracle::{cached_trace, get_executed_sites, is_bug, OracleError, SiteTrace, Verdict};
use crate::seedgen;
use crate::synth::{program_id, rng_for, synthesize, Seed, UbProgram};
use crate::toolchain::{
    compile, execute, run_command, sanitizers_for, sim_trace, Binary, CompilerConfig, FnInjection, RealToolchain,
    RunOutcome, Toolchain,
};

/// Where programs are built and run: simulated configurations go to the
/// interpreter, the rest to real compilers.
pub struct Lab {
    pub real: Option<RealToolchain>,
    pub injection: FnInjection,
    pub step_budget: u64,
    /// Build products and cached traces, per program.
    pub work: PathBuf,
    pub profiler: Toolchain,
    pub profile_timeout: Duration,
}

/// One execution of a program under one configuration.
pub struct Run {
    pub cfg: CompilerConfig,
    pub outcome: RunOutcome,
    trace: Option<SiteTrace>,
    binary: Option<Binary>,
}

impl Lab {
    /// A lab with only the simulated toolchain.
    pub fn sim(work: impl Into<PathBuf>, injection: FnInjection) -> Lab {
        Lab {
            real: None,
            injection,
            step_budget: crate::oracle::DEFAULT_STEP_BUDGET,
            work: work.into(),
            profiler: Toolchain::Sim,
            profile_timeout: Duration::from_secs(30),
        }
    }

    /// Discovers real tools when `matrix` needs them.
    pub fn new(
        matrix: &[CompilerConfig],
        profiler: Profiler,
        injection: Option<&Path>,
        budgets: &super::Budgets,
        work: impl Into<PathBuf>,
    ) -> Result<Lab, HarnessError> {
        let injection = match injection {
            Some(p) => std::fs::read_to_string(p)
                .map_err(|e| HarnessError::Setup(format!("cannot read {}: {e}", p.display())))?
                .parse()
                .map_err(|e| HarnessError::Setup(format!("{e}")))?,
            None => FnInjection::default(),
        };
        let mut lab = Lab::sim(work, injection);
        lab.step_budget = budgets.step_budget;
        lab.profile_timeout = Duration::from_secs(budgets.profile_timeout_secs);
        if profiler == Profiler::Real || matrix.iter().any(|c| !c.is_sim()) {
            let mut tc = RealToolchain::discover();
            tc.timeouts = budgets.timeouts();
            for c in matrix.iter().filter(|c| !c.is_sim()) {
                if tc.compiler(&c.compiler).is_none() {
                    return Err(HarnessError::Setup(format!("compiler `{}` not found", c.compiler)));
                }
            }
            if profiler == Profiler::Real {
                if tc.compilers.is_empty() {
                    return Err(HarnessError::Setup("no compiler available for profiling".into()));
                }
                lab.profiler = Toolchain::Real(tc.clone());
            }
            lab.real = Some(tc);
        }
        Ok(lab)
    }

    pub fn for_campaign(cfg: &CampaignConfig) -> Result<Lab, HarnessError> {
        Lab::new(
            &cfg.matrix,
            cfg.profiler,
            cfg.injection.as_deref(),
            &cfg.budgets,
            cfg.output.join("work"),
        )
    }

    /// Builds and runs `source` (stored at `path`) under `cfg`.
    pub fn run(&self, path: &Path, source: &str, cfg: &CompilerConfig) -> Result<Run, String> {
        if cfg.is_sim() {
            let (outcome, trace) = sim_trace(source, cfg, &self.injection).map_err(|e| e.to_string())?;
            return Ok(Run {
                cfg: cfg.clone(),
                outcome,
                trace: Some(trace),
                binary: None,
            });
        }
        let tc = self.real.as_ref().ok_or("no real toolchain configured")?;
        let dir = self.work.join(program_id(source)).join("build");
        let bin = compile(tc, path, cfg, &dir).map_err(|e| e.to_string())?;
        let outcome = execute(&bin, tc.timeouts.execute).map_err(|e| e.to_string())?;
        Ok(Run {
            cfg: cfg.clone(),
            outcome,
            trace: None,
            binary: Some(bin),
        })
    }

    /// Executed sites of a run, from the interpreter or the debugger.
    pub fn trace(&self, prog_id: &str, run: &Run) -> Result<SiteTrace, OracleError> {
        if let Some(t) = &run.trace {
            return Ok(t.clone());
        }
        let bin = run.binary.as_ref().expect("real runs keep their binary");
        let tc = self.real.as_ref().expect("real runs have a toolchain");
        let gdb = tc
            .debugger
            .as_ref()
            .ok_or_else(|| OracleError::Debugger("no debugger available".into()))?;
        cached_trace(&self.work, prog_id, bin, |b| {
            get_executed_sites(b, gdb, self.step_budget, tc.timeouts.debugger)
        })
    }

    /// Runs both configurations and judges the pair.
    pub fn judge(&self, path: &Path, source: &str, a: &CompilerConfig, b: &CompilerConfig) -> Result<PairRecord, String> {
        let ra = self.run(path, source, a)?;
        let rb = self.run(path, source, b)?;
        let rec = judge_pair(self, &program_id(source), &ra, &rb);
        self.clean(source);
        Ok(rec)
    }

    fn clean(&self, source: &str) {
        let _ = std::fs::remove_dir_all(self.work.join(program_id(source)).join("build"));
    }
}

/// Classifies a pair of runs and, when they disagree, asks the oracle.
pub fn judge_pair(lab: &Lab, prog_id: &str, a: &Run, b: &Run) -> PairRecord {
    let decision = classify_pair(&a.outcome, &b.outcome);
    let mut rec = PairRecord {
        a: a.cfg.clone(),
        b: b.cfg.clone(),
        decision: decision.clone(),
        verdict: None,
        crash_site: None,
    };
    let PairDecision::Discrepant { crash } = decision else { return rec };
    let (c, n) = match crash {
        Side::A => (a, b),
        Side::B => (b, a),
    };
    let traces = lab.trace(prog_id, c).and_then(|tc| Ok((tc, lab.trace(prog_id, n)?)));
    rec.verdict = Some(match traces {
        Ok((tc, tn)) => {
            rec.crash_site = tc.last();
            is_bug(&tc, &tn).unwrap_or_else(|e| Verdict::Inconclusive(e.to_string()))
        }
        Err(e) => Verdict::Inconclusive(e.to_string()),
    });
    rec
}

/// Runs `program` under every matching configuration and judges all pairs.
fn judge_program(lab: &Lab, matrix: &[CompilerConfig], p: &UbProgram, path: &Path) -> (Vec<PairRecord>, Vec<String>) {
    let sans = sanitizers_for(p.kind);
    let cfgs: Vec<&CompilerConfig> = matrix.iter().filter(|c| sans.contains(&c.sanitizer)).collect();
    let runs: Vec<Result<Run, String>> = cfgs
        .par_iter()
        .map(|c| {
            std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| lab.run(path, &p.source, c)))
                .unwrap_or_else(|_| Err("run panicked".into()))
        })
        .collect();
    let errors: Vec<String> = runs
        .iter()
        .zip(&cfgs)
        .filter_map(|(r, c)| r.as_ref().err().map(|e| format!("{c}: {e}")))
        .collect();
    let prog_id = p.id();
    let mut pairs = Vec::new();
    for i in 0..cfgs.len() {
        for j in i + 1..cfgs.len() {
            if !paired(cfgs[i], cfgs[j]) {
                continue;
            }
            pairs.push(match (&runs[i], &runs[j]) {
                (Ok(a), Ok(b)) => judge_pair(lab, &prog_id, a, b),
                (Err(e), _) | (_, Err(e)) => PairRecord {
                    a: cfgs[i].clone(),
                    b: cfgs[j].clone(),
                    decision: PairDecision::Skip(e.clone()),
                    verdict: None,
                    crash_site: None,
                },
            });
        }
    }
    lab.clean(&p.source);
    (pairs, errors)
}

/// A seed id with its source, or the reason it is unavailable.
pub type LoadedSeed = (String, Result<String, String>);

pub fn load_seeds(src: &SeedSource, limit: Option<usize>, timeout: Duration) -> Result<Vec<LoadedSeed>, HarnessError> {
    let limit = limit.unwrap_or(usize::MAX);
    Ok(match src {
        SeedSource::Dir(dir) => {
            let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
                .map_err(|e| HarnessError::Setup(format!("cannot read seed directory {}: {e}", dir.display())))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "c"))
                .collect();
            files.sort();
            files
                .into_iter()
                .take(limit)
                .map(|p| {
                    let id = p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
                    (id, std::fs::read_to_string(&p).map_err(|e| e.to_string()))
                })
                .collect()
        }
        SeedSource::Bundled(n) => seedgen::bundled_seeds()
            .take((*n).min(limit))
            .map(|(id, s)| (id.to_string(), Ok(s.to_string())))
            .collect(),
        SeedSource::Builtin { start, count } => (*start..*start + (*count).min(limit) as u64)
            .into_par_iter()
            .map(|n| (format!("gen{n}"), Ok(seedgen::generate(n).1)))
            .collect(),
        SeedSource::Command { argv, count } => (0..(*count).min(limit))
            .map(|n| {
                let args: Vec<String> = argv.iter().map(|a| a.replace("{n}", &n.to_string())).collect();
                let mut cmd = Command::new(&args[0]);
                cmd.args(&args[1..]);
                let seed = match run_command(&mut cmd, timeout) {
                    Ok(o) if o.timed_out => Err("seed generator timed out".to_string()),
                    Ok(o) if o.code == Some(0) => Ok(String::from_utf8_lossy(&o.stdout).into_owned()),
                    Ok(o) => Err(format!("seed generator failed: {}", String::from_utf8_lossy(&o.stderr))),
                    Err(e) => Err(e.to_string()),
                };
                (format!("cmd{n:05}"), seed)
            })
            .collect(),
    })
}

#[derive(Default)]
struct SeedOutcome {
    records: Vec<ProgramRecord>,
    findings: Vec<Finding>,
    seed: Option<SeedRecord>,
    sources: BTreeMap<String, String>,
}

struct Ctx<'a> {
    cfg: &'a CampaignConfig,
    lab: &'a Lab,
    kinds: Vec<UbKind>,
    logged: HashSet<(String, String)>,
}

fn process_seed(ctx: &Ctx, id: &str, src: &Result<String, String>) -> SeedOutcome {
    let mut out = SeedOutcome::default();
    let mut record = SeedRecord {
        seed_id: id.to_string(),
        programs: 0,
        sites_skipped: 0,
        error: None,
    };
    let seed = match src.as_ref().map_err(Clone::clone).and_then(|s| Seed::new(id, s).map_err(|e| e.to_string())) {
        Ok(s) => s,
        Err(e) => {
            record.error = Some(e);
            out.seed = Some(record);
            return out;
        }
    };
    let work = ctx.cfg.output.join("work");
    for &kind in &ctx.kinds {
        let mut rng = rng_for(ctx.cfg.campaign_seed, id, kind);
        let mut gen = match synthesize(&seed, kind, &ctx.lab.profiler, ctx.lab.profile_timeout, &mut rng) {
            Ok((_, g)) => g,
            Err(e) => {
                record.error = Some(format!("{kind}: {e}"));
                break;
            }
        };
        if let Some(max) = ctx.cfg.budgets.max_programs_per_kind {
            gen.programs.truncate(max);
        }
        record.sites_skipped += gen.skipped.len();
        record.programs += gen.programs.len();
        if let Err(e) = emit_generation(&work, id, kind, &gen.programs) {
            record.error = Some(format!("writing programs: {e}"));
            break;
        }
        let judged: Vec<(ProgramRecord, String)> = gen
            .programs
            .par_iter()
            .enumerate()
            .filter_map(|(index, p)| {
                let (hash, path) = match Store::put_program(&ctx.cfg.output, p) {
                    Ok(x) => x,
                    Err(e) => {
                        let mut r = blank(p, index, String::new());
                        r.errors.push(format!("store: {e}"));
                        return Some((r, p.source.clone()));
                    }
                };
                if ctx.logged.contains(&(id.to_string(), hash.clone())) {
                    return None;
                }
                let (pairs, errors) = judge_program(ctx.lab, &ctx.cfg.matrix, p, &path);
                let mut r = blank(p, index, hash);
                r.pairs = pairs;
                r.errors = errors;
                r.classify();
                Some((r, p.source.clone()))
            })
            .collect();
        for (r, source) in judged {
            let found: Vec<Finding> = r
                .pairs
                .iter()
                .filter_map(|pair| Finding::from_pair(&r, pair, ctx.cfg.campaign_seed))
                .collect();
            if !found.is_empty() {
                out.sources.insert(r.program_hash.clone(), source);
            }
            out.findings.extend(dedup(found));
            out.records.push(r);
        }
    }
    out.seed = Some(record);
    out
}

fn blank(p: &UbProgram, index: usize, hash: String) -> ProgramRecord {
    ProgramRecord {
        seed_id: p.seed_id.clone(),
        kind: p.kind,
        index,
        program_hash: hash,
        planted_site: p.planted_site,
        class: ProgramClass::Skipped,
        verdict: None,
        pairs: Vec::new(),
        errors: Vec::new(),
    }
}

fn commit(store: &mut Store, cfg: &CampaignConfig, out: SeedOutcome) -> std::io::Result<()> {
    for r in out.records {
        store.log(Entry::Program(r))?;
    }
    for f in out.findings {
        let id = f.id.clone();
        let source = out.sources.get(&f.program_hash).cloned();
        let fresh = store.add_finding(f.clone())?;
        if let (true, Some(hook), Some(source)) = (fresh, cfg.reducer.as_ref(), source) {
            let timeout = Duration::from_secs(cfg.budgets.reduce_timeout_secs);
            match reduce_hook(Some(hook), &f, &source, cfg.injection.as_deref(), timeout) {
                Ok(Some(reduced)) => {
                    store.put_reduced(&id, &reduced)?;
                }
                Ok(None) => {}
                Err(e) => {
                    let path = store.root.join("reduced").join(format!("{id}.error"));
                    std::fs::create_dir_all(path.parent().expect("has parent"))?;
                    std::fs::write(path, e.to_string())?;
                }
            }
        }
    }
    if let Some(s) = out.seed {
        store.log(Entry::Seed(s))?;
    }
    Ok(())
}

/// The settings a resumed campaign must share with the original run.
fn identity(cfg: &CampaignConfig) -> String {
    let mut c = cfg.clone();
    c.workers = 1;
    c.budgets = Default::default();
    c.reducer = None;
    c.to_toml()
}

/// Runs the campaign, resuming from whatever `cfg.output` already holds.
/// Seeds are processed in parallel but committed in seed order, so the
/// findings kept by deduplication do not depend on scheduling.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignReport, HarnessError> {
    cfg.validate()?;
    std::fs::create_dir_all(&cfg.output)?;
    let cfg_path = cfg.output.join("config.toml");
    match std::fs::read_to_string(&cfg_path) {
        Ok(text) => {
            let old: CampaignConfig = toml::from_str(&text).map_err(super::ConfigError::from)?;
            if identity(&old) != identity(cfg) {
                return Err(HarnessError::ConfigMismatch(cfg.output.clone()));
            }
        }
        Err(_) => std::fs::write(&cfg_path, cfg.to_toml())?,
    }
    let mut store = Store::open(&cfg.output)?;
    let lab = Lab::for_campaign(cfg)?;
    let seeds = load_seeds(
        &cfg.seeds,
        cfg.budgets.max_seeds,
        Duration::from_secs(cfg.budgets.execute_timeout_secs),
    )?;
    let done: Vec<bool> = seeds.iter().map(|(id, _)| store.seed_done(id)).collect();
    let logged: HashSet<(String, String)> = store
        .entries()
        .iter()
        .filter_map(|e| match e {
            Entry::Program(p) => Some((p.seed_id.clone(), p.program_hash.clone())),
            Entry::Seed(_) => None,
        })
        .collect();
    let ctx = Ctx {
        cfg,
        lab: &lab,
        kinds: cfg.effective_kinds(),
        logged,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| HarnessError::Setup(e.to_string()))?;
    let (tx, rx) = mpsc::channel::<(usize, SeedOutcome)>();
    let written = std::thread::scope(|s| {
        let store = &mut store;
        let writer = s.spawn(move || -> std::io::Result<()> {
            let mut pending = BTreeMap::new();
            let mut next = 0;
            for (i, out) in rx {
                pending.insert(i, out);
                while let Some(out) = pending.remove(&next) {
                    commit(store, cfg, out)?;
                    next += 1;
                }
            }
            Ok(())
        });
        pool.install(|| {
            seeds.par_iter().enumerate().for_each_with(tx, |tx, (i, (id, src))| {
                let out = if done[i] { SeedOutcome::default() } else { process_seed(&ctx, id, src) };
                let _ = tx.send((i, out));
            })
        });
        writer.join().expect("writer thread")
    });
    written?;
    let report = store.report(cfg.campaign_seed);
    std::fs::write(
        cfg.output.join("report.json"),
        serde_json::to_string_pretty(&report).expect("report serializes"),
    )?;
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct ReplayOutcome {
    pub finding: Finding,
    pub pair: PairRecord,
    pub reproduced: bool,
}

/// Reruns a stored finding's pair from scratch.
pub fn replay(dir: &Path, finding_id: &str) -> Result<ReplayOutcome, HarnessError> {
    let text = std::fs::read_to_string(dir.join("config.toml"))?;
    let cfg: CampaignConfig = toml::from_str(&text).map_err(super::ConfigError::from)?;
    let store = Store::open(dir)?;
    let matches: Vec<&Finding> = store.findings().iter().filter(|f| f.id.starts_with(finding_id)).collect();
    let [finding] = matches[..] else {
        return Err(HarnessError::UnknownFinding(finding_id.to_string()));
    };
    let program = store
        .get_program(&finding.program_hash)
        .map_err(|_| HarnessError::MissingProgram(finding.program_hash.clone()))?;
    let scratch = tempfile::tempdir()?;
    let lab = Lab::new(
        &cfg.matrix,
        Profiler::Sim,
        cfg.injection.as_deref(),
        &cfg.budgets,
        scratch.path(),
    )?;
    let path = store.program_path(&finding.program_hash);
    let mut pair = lab
        .judge(&path, &program.source, &finding.cfg_crash, &finding.cfg_nocrash)
        .map_err(HarnessError::Setup)?;
    let reproduced = pair.decision == (PairDecision::Discrepant { crash: Side::A }) && pair.verdict == Some(Verdict::FnBug);
    if !reproduced && !(finding.cfg_crash.is_sim() && finding.cfg_nocrash.is_sim()) {
        pair.verdict = Some(Verdict::Inconclusive("flaky replay".into()));
    }
    Ok(ReplayOutcome {
        finding: finding.clone(),
        pair,
        reproduced,
    })
}
