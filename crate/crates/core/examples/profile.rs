//! Instruments a seed for buffer-overflow synthesis and prints what the
//! profiling run recorded.
use std::time::Duration;

use ubsmith::matching::UbKind;
use ubsmith::profile::{instrument, run_profile};
use ubsmith::synth::Seed;
use ubsmith::toolchain::Toolchain;

fn main() {
    let seed = Seed::new("fig4", include_str!("../seeds/fig4.c")).expect("seed parses");
    let kind = UbKind::BufOverflowPointer;
    let inst = instrument(&seed.ast, kind, &seed.sites(kind)).expect("instrumentation");
    let prof = run_profile(&inst, &Toolchain::Sim, Duration::from_secs(10)).expect("profile");
    println!("memory objects:");
    for o in &prof.objects {
        println!("  {o:?}");
    }
    println!("site values (first occurrence):");
    for (site, occ) in &prof.values {
        println!("  node {site}: {:?} ({} occurrences)", occ[0].operands, occ.len());
    }
    println!("stdout: {:?}", prof.stdout);
}
