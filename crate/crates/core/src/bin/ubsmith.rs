use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use ubsmith::harness::{self, CampaignConfig, Lab};
use ubsmith::matching::UbKind;
use ubsmith::oracle::Verdict;
use ubsmith::synth::{rng_for, synthesize, Seed};
use ubsmith::toolchain::{CompilerConfig, Toolchain};

#[derive(Parser)]
#[command(name = "ubsmith", version, about = "Single-UB program synthesis and sanitizer differential testing")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Expect {
    FnBug,
    OptimizedAway,
    NoDiscrepancy,
}

#[derive(Subcommand)]
enum Cmd {
    /// Plant UB of one kind (or `all`) into a seed program.
    Generate {
        seed: PathBuf,
        #[arg(long, short)]
        kind: String,
        /// Work directory receiving `<seed-id>/gen/<kind>/<n>.c`.
        #[arg(long, default_value = "work")]
        out: PathBuf,
        #[arg(long, default_value_t = 0)]
        campaign_seed: u64,
    },
    /// Build a program under two configurations and judge the outcome.
    Oracle {
        prog: PathBuf,
        /// Two configurations, `compiler:opt:sanitizer,compiler:opt:sanitizer`.
        #[arg(long)]
        pair: String,
        /// Fault injection rules for simulated configurations.
        #[arg(long)]
        injection: Option<PathBuf>,
        /// Exit with status 1 unless the verdict is this one.
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Run a campaign described by a TOML file.
    Campaign {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Rerun a stored finding.
    Replay {
        finding_id: String,
        #[arg(long, default_value = ".")]
        campaign: PathBuf,
    },
    /// Summarize a campaign directory.
    Report {
        dir: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

fn parse_kinds(s: &str) -> Result<Vec<UbKind>, String> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(UbKind::ALL.to_vec());
    }
    s.split(',').map(|k| k.trim().parse::<UbKind>().map_err(|e| e.to_string())).collect()
}

fn generate(seed: PathBuf, kind: &str, out: PathBuf, campaign_seed: u64) -> Result<(), String> {
    let src = std::fs::read_to_string(&seed).map_err(|e| format!("{}: {e}", seed.display()))?;
    let id = seed.file_stem().map_or("seed".into(), |s| s.to_string_lossy().into_owned());
    let seed = Seed::new(id.as_str(), &src).map_err(|e| e.to_string())?;
    for kind in parse_kinds(kind)? {
        let mut rng = rng_for(campaign_seed, &id, kind);
        let (_, gen) = synthesize(&seed, kind, &Toolchain::Sim, Duration::from_secs(30), &mut rng).map_err(|e| e.to_string())?;
        let paths = harness::emit_generation(&out, &id, kind, &gen.programs).map_err(|e| e.to_string())?;
        println!("{kind}: {} programs, {} sites skipped", paths.len(), gen.skipped.len());
        for (p, path) in gen.programs.iter().zip(&paths) {
            println!("  {} planted at {}", path.display(), p.planted_site);
        }
    }
    Ok(())
}

fn oracle(prog: PathBuf, pair: &str, injection: Option<PathBuf>, expect: Option<Expect>) -> Result<bool, String> {
    let cfgs: Vec<CompilerConfig> = pair
        .split(',')
        .map(|c| c.parse().map_err(|e: ubsmith::toolchain::ToolchainError| e.to_string()))
        .collect::<Result<_, _>>()?;
    let [a, b] = &cfgs[..] else {
        return Err("--pair takes exactly two configurations".into());
    };
    let source = std::fs::read_to_string(&prog).map_err(|e| format!("{}: {e}", prog.display()))?;
    let scratch = tempfile::tempdir().map_err(|e| e.to_string())?;
    let lab = Lab::new(&cfgs, harness::Profiler::Sim, injection.as_deref(), &Default::default(), scratch.path())
        .map_err(|e| e.to_string())?;
    let rec = lab.judge(&prog, &source, a, b)?;
    println!("decision: {:?}", rec.decision);
    if let Some(v) = &rec.verdict {
        println!("verdict: {v}");
    }
    if let Some(s) = rec.crash_site {
        println!("crash site: {s}");
    }
    Ok(match expect {
        None => true,
        Some(Expect::FnBug) => rec.verdict == Some(Verdict::FnBug),
        Some(Expect::OptimizedAway) => rec.verdict == Some(Verdict::OptimizedAway),
        Some(Expect::NoDiscrepancy) => rec.decision == harness::PairDecision::NoDiscrepancy,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Generate {
            seed,
            kind,
            out,
            campaign_seed,
        } => generate(seed, &kind, out, campaign_seed).map(|_| true),
        Cmd::Oracle {
            prog,
            pair,
            injection,
            expect,
        } => oracle(prog, &pair, injection, expect),
        Cmd::Campaign { config, workers } => CampaignConfig::load(&config)
            .map_err(|e| e.to_string())
            .and_then(|mut cfg| {
                if let Some(w) = workers {
                    cfg.workers = w;
                }
                let r = harness::run_campaign(&cfg).map_err(|e| e.to_string())?;
                print!("{r}");
                println!("output: {}", cfg.output.display());
                Ok(true)
            }),
        Cmd::Replay { finding_id, campaign } => harness::replay(&campaign, &finding_id)
            .map(|r| {
                println!("finding {} ({}, {} vs {})", r.finding.id, r.finding.kind, r.finding.cfg_crash, r.finding.cfg_nocrash);
                println!("decision: {:?}", r.pair.decision);
                if let Some(v) = &r.pair.verdict {
                    println!("verdict: {v}");
                }
                println!("reproduced: {}", r.reproduced);
                r.reproduced
            })
            .map_err(|e| e.to_string()),
        Cmd::Report { dir, json } => harness::report(&dir)
            .map(|r| {
                if json {
                    println!("{}", serde_json::to_string_pretty(&r).expect("report serializes"));
                } else {
                    print!("{r}");
                }
                true
            })
            .map_err(|e| e.to_string()),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
