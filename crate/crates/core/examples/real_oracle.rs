//! Compiles a planted buffer overflow with gcc at two optimization levels
//! and asks the debugger-based oracle about any discrepancy. Needs gcc
//! with ASan and gdb.
use std::time::Duration;

use ubsmith::harness::{Lab, Profiler};
use ubsmith::matching::UbKind;
use ubsmith::synth::{rng_for, synthesize, Seed};
use ubsmith::toolchain::{CompilerConfig, RealToolchain, Toolchain};

fn main() {
    let cfgs: Vec<CompilerConfig> = ["gcc:O0:asan", "gcc:O2:asan"].iter().map(|s| s.parse().unwrap()).collect();
    let tc = RealToolchain::discover();
    if !tc.supports(&cfgs[0]) || tc.debugger.is_none() {
        println!("gcc with ASan and gdb are required");
        return;
    }
    let seed = Seed::new("fig4", include_str!("../seeds/fig4.c")).unwrap();
    let kind = UbKind::BufOverflowPointer;
    let (_, gen) = synthesize(&seed, kind, &Toolchain::Sim, Duration::from_secs(10), &mut rng_for(0, "fig4", kind)).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let lab = Lab::new(&cfgs, Profiler::Sim, None, &Default::default(), dir.path().join("work")).unwrap();
    for (n, p) in gen.programs.iter().enumerate() {
        let path = dir.path().join(format!("{n}.c"));
        std::fs::write(&path, &p.source).unwrap();
        let rec = lab.judge(&path, &p.source, &cfgs[0], &cfgs[1]).unwrap();
        println!("planted at {}: {:?} verdict {:?}", p.planted_site, rec.decision, rec.verdict);
    }
}
