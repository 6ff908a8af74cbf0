//! Checks against installed compilers. Each test returns early when the
//! tools it needs are missing.

use std::process::Command;
use std::time::Duration;

use ubsmith::harness::{Lab, PairDecision, Profiler};
use ubsmith::matching::UbKind;
use ubsmith::minivm::{eval_program, VmOutcome, DEFAULT_STEP_LIMIT};
use ubsmith::oracle::Verdict;
use ubsmith::seedgen::bundled_seeds;
use ubsmith::synth::{rng_for, synthesize, Seed};
use ubsmith::toolchain::{run_command, CompilerConfig, RealToolchain, Toolchain};

const TIMEOUT: Duration = Duration::from_secs(60);

#[test]
fn interpreter_output_matches_compiled_seeds() {
    let tc = RealToolchain::discover();
    let Some(cc) = tc.compilers.first() else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let dir = tempfile::tempdir().unwrap();
    for (id, src) in bundled_seeds() {
        let seed = Seed::new(id, src).unwrap();
        let Ok(VmOutcome::Normal { exit_code, stdout }) = eval_program(&seed.ast, DEFAULT_STEP_LIMIT) else {
            panic!("{id} is not UB-free in the interpreter");
        };
        let c = dir.path().join(format!("{id}.c"));
        let exe = dir.path().join(id);
        std::fs::write(&c, seed.source()).unwrap();
        let built = run_command(Command::new(&cc.path).arg("-w").arg("-O0").arg(&c).arg("-o").arg(&exe), TIMEOUT).unwrap();
        assert_eq!(built.code, Some(0), "{id}: {}", String::from_utf8_lossy(&built.stderr));
        let ran = run_command(&mut Command::new(&exe), TIMEOUT).unwrap();
        assert_eq!(String::from_utf8_lossy(&ran.stdout), stdout, "{id} ({})", cc.id);
        assert_eq!(ran.code, Some(exit_code & 0xff), "{id} ({})", cc.id);
    }
}

#[test]
fn real_pair_reaches_a_verdict() {
    let (o0, o2): (CompilerConfig, CompilerConfig) = ("gcc:O0:ubsan".parse().unwrap(), "gcc:O2:ubsan".parse().unwrap());
    let tc = RealToolchain::discover();
    if !tc.supports(&o0) || tc.debugger.is_none() {
        eprintln!("gcc or gdb not found; skipping");
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let kind = UbKind::DivideByZero;
    let prog = bundled_seeds()
        .filter_map(|(id, src)| {
            let seed = Seed::new(id, src).ok()?;
            let (_, g) = synthesize(&seed, kind, &Toolchain::Sim, TIMEOUT, &mut rng_for(0, id, kind)).ok()?;
            g.programs.into_iter().next()
        })
        .next()
        .expect("some bundled seed divides");
    let lab = Lab::new(&[o0.clone(), o2.clone()], Profiler::Sim, None, &Default::default(), dir.path().join("work")).unwrap();
    let path = dir.path().join("p.c");
    std::fs::write(&path, &prog.source).unwrap();
    let rec = lab.judge(&path, &prog.source, &o0, &o2).unwrap();
    match rec.decision {
        PairDecision::NoDiscrepancy => {}
        PairDecision::Discrepant { .. } => assert!(matches!(
            rec.verdict,
            Some(Verdict::FnBug | Verdict::OptimizedAway | Verdict::Inconclusive(_))
        )),
        PairDecision::Skip(why) => panic!("pair skipped: {why}"),
    }
}
