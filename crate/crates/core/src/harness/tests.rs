use super::*;
use crate::toolchain::RunOutcome;

fn outcome(status: RunStatus) -> RunOutcome {
    RunOutcome {
        status,
        stderr_digest: String::new(),
        stdout: String::new(),
    }
}

fn reported() -> RunOutcome {
    outcome(RunStatus::SanReport {
        kind_text: "x".into(),
        site: None,
    })
}

fn cfg(s: &str) -> CompilerConfig {
    s.parse().unwrap()
}

#[test]
fn pair_classification() {
    let normal = outcome(RunStatus::NormalExit(0));
    assert_eq!(classify_pair(&reported(), &normal), PairDecision::Discrepant { crash: Side::A });
    assert_eq!(classify_pair(&normal, &reported()), PairDecision::Discrepant { crash: Side::B });
    assert_eq!(classify_pair(&reported(), &reported()), PairDecision::NoDiscrepancy);
    assert!(matches!(classify_pair(&outcome(RunStatus::Timeout), &normal), PairDecision::Skip(_)));
    assert!(matches!(
        classify_pair(&reported(), &outcome(RunStatus::OtherCrash("signal 11".into()))),
        PairDecision::Skip(_)
    ));
}

#[test]
fn pairing_policy() {
    assert!(paired(&cfg("gcc:O0:asan"), &cfg("gcc:O2:asan")));
    assert!(paired(&cfg("gcc:O2:asan"), &cfg("clang:O2:asan")));
    assert!(!paired(&cfg("gcc:O0:asan"), &cfg("clang:O2:asan")));
    assert!(!paired(&cfg("gcc:O0:asan"), &cfg("gcc:O2:ubsan")));
}

fn finding(nocrash: &str, kind: UbKind, hash: &str, line: u32) -> Finding {
    Finding {
        id: format!("{hash}{nocrash}"),
        seed_id: "s".into(),
        kind,
        cfg_crash: cfg("sim:O0:asan"),
        cfg_nocrash: cfg(nocrash),
        crash_site: SourceLoc::new(line, 3),
        verdict: Verdict::FnBug,
        program_hash: hash.into(),
        campaign_seed: 0,
    }
}

#[test]
fn dedup_is_first_wins() {
    let a = finding("sim:O2:asan", UbKind::BufOverflowArray, "aa", 4);
    let mut b = a.clone();
    b.id = "other".into();
    b.cfg_crash = cfg("sim:O1:asan");
    let c = finding("sim:O3:asan", UbKind::BufOverflowArray, "aa", 4);
    let kept = dedup(vec![a.clone(), b, c.clone()]);
    assert_eq!(kept, vec![a, c]);
    assert!(dedup(Vec::new()).is_empty());
}

fn record(pairs: Vec<(PairDecision, Option<Verdict>)>) -> ProgramRecord {
    let mut r = ProgramRecord {
        seed_id: "s".into(),
        kind: UbKind::DivideByZero,
        index: 0,
        program_hash: "h".into(),
        planted_site: SourceLoc::new(1, 1),
        class: ProgramClass::Skipped,
        verdict: None,
        pairs: pairs
            .into_iter()
            .map(|(decision, verdict)| PairRecord {
                a: cfg("sim:O0:ubsan"),
                b: cfg("sim:O2:ubsan"),
                decision,
                verdict,
                crash_site: None,
            })
            .collect(),
        errors: Vec::new(),
    };
    r.classify();
    r
}

#[test]
fn program_classification_is_exclusive() {
    let disc = PairDecision::Discrepant { crash: Side::A };
    let r = record(vec![
        (disc.clone(), Some(Verdict::OptimizedAway)),
        (disc.clone(), Some(Verdict::FnBug)),
        (PairDecision::NoDiscrepancy, None),
    ]);
    assert_eq!((r.class, r.verdict), (ProgramClass::Discrepant, Some(Verdict::FnBug)));
    let r = record(vec![(PairDecision::NoDiscrepancy, None), (PairDecision::Skip("t".into()), None)]);
    assert_eq!(r.class, ProgramClass::NoDiscrepancy);
    let r = record(vec![(PairDecision::Skip("t".into()), None)]);
    assert_eq!(r.class, ProgramClass::Skipped);
    assert_eq!(record(Vec::new()).class, ProgramClass::Skipped);
    let entries: Vec<Entry> = [
        record(vec![(disc.clone(), Some(Verdict::Inconclusive("x".into())))]),
        record(vec![(disc, Some(Verdict::OptimizedAway))]),
        record(vec![(PairDecision::NoDiscrepancy, None)]),
        record(Vec::new()),
    ]
    .into_iter()
    .map(Entry::Program)
    .collect();
    let rep = CampaignReport::fold(3, &entries, &[]);
    assert!(rep.conserved());
    assert_eq!(rep.totals.generated, 4);
    assert_eq!(rep.totals.inconclusive, 1);
}

fn sim_matrix() -> Vec<CompilerConfig> {
    ["sim:O0:asan", "sim:O2:asan", "sim:O0:ubsan", "sim:O2:ubsan", "sim:O0:msan", "sim:O2:msan"]
        .iter()
        .map(|s| cfg(s))
        .collect()
}

#[test]
fn empty_seed_directory_gives_empty_report() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::create_dir(dir.path().join("seeds")).unwrap();
    let c = CampaignConfig::new(SeedSource::Dir(dir.path().join("seeds")), sim_matrix(), dir.path().join("out"));
    let r = run_campaign(&c).unwrap();
    assert_eq!(r.totals, Tally::default());
    assert_eq!(r.findings, 0);
    assert_eq!(report(&dir.path().join("out")).unwrap(), r);
}

#[test]
fn division_without_injection_has_no_discrepancy() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::create_dir(dir.path().join("seeds")).unwrap();
    std::fs::write(
        dir.path().join("seeds/one.c"),
        "int main() {\n  int x = 21;\n  int y = 7;\n  int r = x / y;\n  return r - 3;\n}\n",
    )
    .unwrap();
    let mut c = CampaignConfig::new(
        SeedSource::Dir(dir.path().join("seeds")),
        vec![cfg("sim:O0:ubsan"), cfg("sim:O2:ubsan")],
        dir.path().join("out"),
    );
    c.kinds = vec![UbKind::DivideByZero];
    let r = run_campaign(&c).unwrap();
    assert_eq!(r.totals.generated, 1);
    assert_eq!(r.totals.no_discrepancy, 1);
    assert_eq!(r.findings, 0);
    assert!(dir.path().join("out/work/one/gen/DivideByZero/0.c").exists());
    assert!(dir.path().join("out/work/one/gen/DivideByZero/0.meta").exists());
}

fn injected_campaign(root: &std::path::Path, workers: usize, rules: &str) -> CampaignConfig {
    std::fs::write(root.join("inj.txt"), rules).unwrap();
    let mut c = CampaignConfig::new(SeedSource::Bundled(4), sim_matrix(), root.join("out"));
    c.injection = Some(root.join("inj.txt"));
    c.workers = workers;
    c.campaign_seed = 11;
    c
}

#[test]
fn injected_misses_become_replayable_findings() {
    let dir = tempfile::tempdir().unwrap();
    let c = injected_campaign(dir.path(), 3, "miss kind=BufOverflowArray opt=O2 san=asan prob=1\n");
    let r = run_campaign(&c).unwrap();
    assert!(r.conserved());
    assert!(r.totals.fn_bug > 0);
    assert_eq!(r.per_kind[&UbKind::BufOverflowArray].fn_bug, r.totals.fn_bug);
    assert_eq!(r.findings, r.totals.fn_bug);
    let store = Store::open(&c.output).unwrap();
    for f in store.findings() {
        assert_eq!(f.cfg_nocrash, cfg("sim:O2:asan"));
        assert_eq!(f.campaign_seed, 11);
        let p = store.get_program(&f.program_hash).unwrap();
        assert_eq!(f.crash_site, p.planted_site);
        let rep = replay(&c.output, &f.id[..10]).unwrap();
        assert!(rep.reproduced, "{rep:?}");
    }
    assert!(matches!(replay(&c.output, "zzzz"), Err(HarnessError::UnknownFinding(_))));
}

#[test]
fn interrupted_campaign_resumes_to_the_same_findings() {
    let rules = "miss kind=DivideByZero opt=O2 prob=0.5\neliminate kind=BufOverflowPointer opt=O2 prob=0.5\n";
    let full = tempfile::tempdir().unwrap();
    let c = injected_campaign(full.path(), 2, rules);
    let want = run_campaign(&c).unwrap();

    let part = tempfile::tempdir().unwrap();
    let mut c2 = injected_campaign(part.path(), 4, rules);
    c2.budgets.max_seeds = Some(2);
    run_campaign(&c2).unwrap();
    // Simulate a kill in the middle of a write.
    let log = part.path().join("out/progress.jsonl");
    let mut text = std::fs::read_to_string(&log).unwrap();
    let cut = text.len() - 40;
    text.truncate(cut);
    std::fs::write(&log, text).unwrap();
    c2.budgets.max_seeds = None;
    let got = run_campaign(&c2).unwrap();
    assert_eq!(got, want);
    let ids = |d: &std::path::Path| {
        let s = Store::open(&d.join("out")).unwrap();
        s.findings().iter().map(|f| f.id.clone()).collect::<Vec<_>>()
    };
    assert_eq!(ids(part.path()), ids(full.path()));

    let mut other = c2.clone();
    other.campaign_seed = 12;
    assert!(matches!(run_campaign(&other), Err(HarnessError::ConfigMismatch(_))));
}
