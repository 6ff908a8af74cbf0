use std::path::{Path, PathBuf};
use std::time::Duration;

use ubsmith::harness::{self, reduce_hook, CampaignConfig, Finding, Lab, ReduceError, ReducerHook, SeedSource};
use ubsmith::lang::SourceLoc;
use ubsmith::matching::UbKind;
use ubsmith::oracle::Verdict;
use ubsmith::seedgen::bundled_seeds;
use ubsmith::synth::{rng_for, synthesize, Seed, UbProgram};
use ubsmith::toolchain::{CompilerConfig, Toolchain};

const MISS: &str = "miss kind=BufOverflowArray opt=O2 prob=1\n";
const TIMEOUT: Duration = Duration::from_secs(120);

/// Deletes lines from the end while the interestingness test keeps passing.
const LINE_DELETER: &str = r#"s=$1; f=$2; i=$(wc -l < "$f")
while [ "$i" -ge 1 ]; do
  cp "$f" "$f.bak"; sed -i "${i}d" "$f"
  "$s" >/dev/null 2>&1 || mv "$f.bak" "$f"
  i=$((i - 1))
done
rm -f "$f.bak""#;

fn checker() -> Option<PathBuf> {
    Some(PathBuf::from(env!("CARGO_BIN_EXE_ubsmith")))
}

fn cfg(s: &str) -> CompilerConfig {
    s.parse().unwrap()
}

fn array_program(seed_id: &str) -> UbProgram {
    let src = bundled_seeds().find(|(id, _)| *id == seed_id).unwrap().1;
    let seed = Seed::new(seed_id, src).unwrap();
    let kind = UbKind::BufOverflowArray;
    let (_, gen) = synthesize(&seed, kind, &Toolchain::Sim, TIMEOUT, &mut rng_for(0, seed_id, kind)).unwrap();
    gen.programs.into_iter().next().unwrap()
}

fn finding(p: &UbProgram) -> Finding {
    Finding {
        id: "f".into(),
        seed_id: p.seed_id.clone(),
        kind: p.kind,
        cfg_crash: cfg("sim:O0:asan"),
        cfg_nocrash: cfg("sim:O2:asan"),
        crash_site: p.planted_site,
        verdict: Verdict::FnBug,
        program_hash: p.id(),
        campaign_seed: 0,
    }
}

fn injection(dir: &Path) -> PathBuf {
    let path = dir.join("inject.txt");
    std::fs::write(&path, MISS).unwrap();
    path
}

fn shell(script: &str) -> ReducerHook {
    ReducerHook {
        argv: vec!["sh".into(), "-c".into(), script.into(), "reducer".into()],
        checker: checker(),
    }
}

fn verdict(dir: &Path, source: &str, inj: &Path) -> Option<Verdict> {
    let (a, b) = (cfg("sim:O0:asan"), cfg("sim:O2:asan"));
    let lab = Lab::new(&[a.clone(), b.clone()], harness::Profiler::Sim, Some(inj), &Default::default(), dir.join("work")).unwrap();
    let path = dir.join("check.c");
    std::fs::write(&path, source).unwrap();
    lab.judge(&path, source, &a, &b).unwrap().verdict
}

#[test]
fn no_hook_means_no_reduction() {
    let p = array_program("fig6");
    assert!(reduce_hook(None, &finding(&p), &p.source, None, TIMEOUT).unwrap().is_none());
}

#[test]
fn identity_reducer_returns_the_program_unchanged() {
    let dir = tempfile::tempdir().unwrap();
    let p = array_program("fig6");
    let inj = injection(dir.path());
    let out = reduce_hook(Some(&shell("exit 0")), &finding(&p), &p.source, Some(&inj), TIMEOUT).unwrap();
    assert_eq!(out.as_deref(), Some(p.source.as_str()));
}

#[test]
fn line_deletion_shrinks_and_keeps_the_bug() {
    let dir = tempfile::tempdir().unwrap();
    let p = array_program("matrix");
    let inj = injection(dir.path());
    assert_eq!(verdict(dir.path(), &p.source, &inj), Some(Verdict::FnBug));
    let reduced = reduce_hook(Some(&shell(LINE_DELETER)), &finding(&p), &p.source, Some(&inj), TIMEOUT)
        .unwrap()
        .unwrap();
    assert!(reduced.lines().count() < p.source.lines().count(), "{reduced}");
    assert_eq!(verdict(dir.path(), &reduced, &inj), Some(Verdict::FnBug));
}

#[test]
fn reducer_that_breaks_the_program_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let p = array_program("fig6");
    let inj = injection(dir.path());
    let f = finding(&p);
    let wipe = shell(r#": > "$2""#);
    assert!(matches!(reduce_hook(Some(&wipe), &f, &p.source, Some(&inj), TIMEOUT), Err(ReduceError::ReducerFailed(_))));
    let failing = shell("exit 3");
    assert!(reduce_hook(Some(&failing), &f, &p.source, Some(&inj), TIMEOUT).is_err());
}

#[test]
fn campaign_stores_reduced_findings() {
    let dir = tempfile::tempdir().unwrap();
    let matrix = vec![cfg("sim:O0:asan"), cfg("sim:O2:asan")];
    let mut c = CampaignConfig::new(SeedSource::Bundled(2), matrix, dir.path().join("out"));
    c.kinds = vec![UbKind::BufOverflowArray];
    c.injection = Some(injection(dir.path()));
    c.reducer = Some(shell(LINE_DELETER));
    let r = harness::run_campaign(&c).unwrap();
    assert!(r.findings > 0);
    let store = harness::Store::open(&c.output).unwrap();
    for f in store.findings() {
        let reduced = std::fs::read_to_string(c.output.join("reduced").join(format!("{}.c", f.id))).unwrap();
        let original = store.get_program(&f.program_hash).unwrap().source;
        assert!(reduced.len() < original.len());
        assert_ne!(f.crash_site, SourceLoc::new(0, 0));
    }
}
