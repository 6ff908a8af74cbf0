use std::collections::HashSet;
use std::time::Duration;

use proptest::prelude::*;
use similar::{ChangeTag, TextDiff};

use ubsmith::harness::{
    dedup, CampaignReport, Entry, Finding, PairDecision, PairRecord, ProgramClass, ProgramRecord, Side,
};
use ubsmith::lang::visit::{walk_stmt, Visitor};
use ubsmith::lang::{canonicalize, parse_program, print_program, SourceLoc, Stmt};
use ubsmith::matching::{get_matched_exprs, UbKind};
use ubsmith::minivm::{self, eval_trace, VmConfig, VmOutcome, DEFAULT_STEP_LIMIT};
use ubsmith::oracle::{is_bug, SiteTrace, Terminal, Verdict};
use ubsmith::seedgen;
use ubsmith::synth::{rng_for, synthesize, Seed, UbProgram};
use ubsmith::toolchain::{sanitizers_for, sim_trace, CompilerConfig, FnInjection, Toolchain};

fn seed_source() -> impl Strategy<Value = String> {
    any::<u32>().prop_map(|n| seedgen::generate(u64::from(n)).1)
}

fn kind() -> impl Strategy<Value = UbKind> {
    proptest::sample::select(UbKind::ALL.to_vec())
}

fn programs(src: &str, kind: UbKind) -> (Seed, Vec<UbProgram>) {
    let seed = Seed::new("p", src).unwrap();
    let (_, gen) = synthesize(&seed, kind, &Toolchain::Sim, Duration::from_secs(30), &mut rng_for(3, "p", kind)).unwrap();
    (seed, gen.programs)
}

struct StmtLocs(Vec<SourceLoc>);

impl Visitor for StmtLocs {
    fn visit_stmt(&mut self, s: &Stmt) {
        self.0.push(s.loc);
        walk_stmt(self, s)
    }
}

fn stmt_locs(src: &str) -> Vec<SourceLoc> {
    let mut v = StmtLocs(Vec::new());
    ubsmith::lang::visit::walk_ast(&mut v, &parse_program(src).unwrap());
    v.0
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn printing_round_trips(src in seed_source()) {
        let a = parse_program(&src).unwrap();
        let printed = print_program(&a);
        let b = parse_program(&printed).unwrap();
        prop_assert!(a.same_shape(&b));
        prop_assert_eq!(print_program(&b), printed);
    }

    #[test]
    fn statement_locations_never_decrease(src in seed_source()) {
        let locs = stmt_locs(&print_program(&canonicalize(&src).unwrap()));
        for w in locs.windows(2) {
            prop_assert!((w[0].line, w[0].offset) <= (w[1].line, w[1].offset), "{:?}", w);
        }
    }

    #[test]
    fn matching_is_deterministic_and_kind_pure(src in seed_source(), k in kind()) {
        let ast = canonicalize(&src).unwrap();
        let a = get_matched_exprs(&ast, k);
        prop_assert_eq!(&a, &get_matched_exprs(&ast, k));
        for s in &a {
            prop_assert_eq!(s.kind, k);
            prop_assert!(s.construct.legal_for(k), "{:?}", s);
        }
    }

    #[test]
    fn synthesized_programs_keep_their_contract(src in seed_source(), k in kind()) {
        let (seed, ps) = programs(&src, k);
        let seed_text = seed.source();
        let seed_run = minivm::run(&seed.ast, &VmConfig::default()).unwrap();
        for p in ps.iter().take(4) {
            let ast = parse_program(&p.source).unwrap();
            let (out, trace) = eval_trace(&ast, DEFAULT_STEP_LIMIT).unwrap();
            prop_assert_eq!(out.ub(), Some((p.kind, p.planted_site)), "{}", p.source);
            // The reported violation was executed.
            prop_assert!(trace.contains(p.planted_site));

            // Output before the violation matches the seed's.
            let run = minivm::run(&ast, &VmConfig::default()).unwrap();
            prop_assert!(seed_run.stdout.starts_with(&run.stdout));

            // Only inserted lines plus one rewritten line differ.
            let diff = TextDiff::from_lines(&seed_text, &p.source);
            let removed = diff.iter_all_changes().filter(|c| c.tag() == ChangeTag::Delete).count();
            let added = diff.iter_all_changes().filter(|c| c.tag() == ChangeTag::Insert).count();
            let inserted = p.shadow.matches(';').count() + 2 * p.shadow.matches('{').count();
            prop_assert!(removed <= 1, "{}", diff.unified_diff());
            prop_assert!(added <= inserted + removed, "{}", diff.unified_diff());

            // Lines above the first change keep their locations.
            let first = diff
                .iter_all_changes()
                .position(|c| c.tag() != ChangeTag::Equal)
                .unwrap() as u32 + 1;
            let before = |locs: Vec<SourceLoc>| locs.into_iter().filter(|l| l.line < first).collect::<Vec<_>>();
            prop_assert_eq!(before(stmt_locs(&seed_text)), before(stmt_locs(&p.source)));

            // The simulated toolchain reports what the interpreter executed.
            let cfg: CompilerConfig = format!("sim:O0:{}", sanitizers_for(k)[0]).parse().unwrap();
            let (_, sim) = sim_trace(&p.source, &cfg, &FnInjection::default()).unwrap();
            prop_assert_eq!(sim.sites, trace.sites);
        }
    }

    #[test]
    fn interpreter_reports_only_executed_sites(src in seed_source()) {
        let (out, trace) = eval_trace(&parse_program(&src).unwrap(), DEFAULT_STEP_LIMIT).unwrap();
        if let VmOutcome::Ub { site, .. } = out {
            prop_assert!(trace.contains(site));
        }
    }
}

fn trace() -> impl Strategy<Value = SiteTrace> {
    proptest::collection::vec((1u32..10, 1u32..4), 0..16)
        .prop_map(|v| SiteTrace::new(v.into_iter().map(|(l, c)| SourceLoc::new(l, c)).collect(), false, Terminal::NormalExit))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 10_000, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn fn_bug_iff_crash_site_ran_in_the_other_binary(mut c in trace(), n in trace()) {
        c.terminal = Terminal::Crash;
        let v = is_bug(&c, &n).unwrap();
        prop_assert_eq!(v == Verdict::FnBug, c.last().is_some_and(|s| n.contains(s)));
        prop_assert_ne!(v, Verdict::NoDiscrepancy);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 512, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn truncation_never_yields_a_wrong_answer(mut c in trace(), mut n in trace(), tc in any::<bool>(), tn in any::<bool>()) {
        c.terminal = Terminal::Crash;
        c.truncated = tc;
        n.truncated = tn;
        let v = is_bug(&c, &n).unwrap();
        if tc {
            prop_assert!(matches!(v, Verdict::Inconclusive(_)));
        }
        if v == Verdict::OptimizedAway {
            prop_assert!(!tn && !c.last().is_some_and(|s| n.contains(s)));
        }
    }

    #[test]
    fn wrong_terminals_are_rejected(c in trace(), n in trace()) {
        prop_assert!(is_bug(&c, &n).is_err());
    }

    #[test]
    fn reports_conserve_programs(recs in proptest::collection::vec(record(), 0..40)) {
        let entries: Vec<Entry> = recs.into_iter().map(Entry::Program).collect();
        let rep = CampaignReport::fold(0, &entries, &[]);
        prop_assert!(rep.conserved());
        prop_assert_eq!(rep.totals.generated, entries.len());
    }

    #[test]
    fn dedup_keeps_first_of_each_key(fs in proptest::collection::vec(finding(), 0..30)) {
        let kept = dedup(fs.clone());
        let keys: HashSet<_> = kept.iter().map(Finding::dedup_key).collect();
        prop_assert_eq!(keys.len(), kept.len());
        let all: HashSet<_> = fs.iter().map(Finding::dedup_key).collect();
        prop_assert_eq!(&keys, &all);
        for f in &kept {
            let first = fs.iter().find(|g| g.dedup_key() == f.dedup_key()).unwrap();
            prop_assert_eq!(first, f);
        }
        prop_assert_eq!(dedup(kept.clone()), kept);
    }
}

fn cfg(s: &str) -> CompilerConfig {
    s.parse().unwrap()
}

fn decision() -> impl Strategy<Value = (PairDecision, Option<Verdict>)> {
    prop_oneof![
        Just((PairDecision::NoDiscrepancy, None)),
        Just((PairDecision::Skip("timeout".into()), None)),
        Just((PairDecision::Discrepant { crash: Side::A }, Some(Verdict::FnBug))),
        Just((PairDecision::Discrepant { crash: Side::B }, Some(Verdict::OptimizedAway))),
        Just((PairDecision::Discrepant { crash: Side::A }, Some(Verdict::Inconclusive("t".into())))),
    ]
}

fn record() -> impl Strategy<Value = ProgramRecord> {
    (kind(), proptest::collection::vec(decision(), 0..4)).prop_map(|(kind, pairs)| {
        let mut r = ProgramRecord {
            seed_id: "s".into(),
            kind,
            index: 0,
            program_hash: "h".into(),
            planted_site: SourceLoc::new(1, 1),
            class: ProgramClass::Skipped,
            verdict: None,
            pairs: pairs
                .into_iter()
                .map(|(decision, verdict)| PairRecord {
                    a: cfg("sim:O0:asan"),
                    b: cfg("sim:O2:asan"),
                    decision,
                    verdict,
                    crash_site: None,
                })
                .collect(),
            errors: Vec::new(),
        };
        r.classify();
        r
    })
}

fn finding() -> impl Strategy<Value = Finding> {
    (
        kind(),
        proptest::sample::select(vec!["sim:O1:asan", "sim:O2:asan", "sim:O2:ubsan", "sim:O3:asan"]),
        0u8..3,
        1u32..4,
        any::<u16>(),
    )
        .prop_map(|(kind, nocrash, prog, line, id)| Finding {
            id: format!("{id:04x}"),
            seed_id: "s".into(),
            kind,
            cfg_crash: cfg("sim:O0:asan"),
            cfg_nocrash: cfg(nocrash),
            crash_site: SourceLoc::new(line, 1),
            verdict: Verdict::FnBug,
            program_hash: format!("{prog:064}"),
            campaign_seed: 0,
        })
}
