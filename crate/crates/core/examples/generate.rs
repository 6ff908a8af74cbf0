//! Plants every kind of UB into a bundled seed and confirms each program
//! in the interpreter.
use std::time::Duration;

use ubsmith::matching::UbKind;
use ubsmith::minivm::{eval_source, DEFAULT_STEP_LIMIT};
use ubsmith::synth::{rng_for, synthesize, Seed};
use ubsmith::toolchain::Toolchain;

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "fig4".into());
    let (id, src) = ubsmith::seedgen::bundled_seeds()
        .find(|(id, _)| *id == name)
        .unwrap_or_else(|| panic!("no bundled seed named {name}"));
    let seed = Seed::new(id, src).expect("seed parses");
    let mut last = None;
    for kind in UbKind::ALL {
        let (_, mut gen) = synthesize(&seed, kind, &Toolchain::Sim, Duration::from_secs(10), &mut rng_for(0, id, kind))
            .expect("synthesis");
        println!("{kind}: {} program(s), {} site(s) skipped", gen.programs.len(), gen.skipped.len());
        for p in &gen.programs {
            let confirmed = eval_source(&p.source, DEFAULT_STEP_LIMIT).ok().and_then(|o| o.ub()) == Some((kind, p.planted_site));
            println!("  at {} via `{}` confirmed={confirmed}", p.planted_site, p.shadow);
        }
        last = gen.programs.pop().or(last);
    }
    if let Some(p) = last {
        println!("\nlast program ({}):\n{}", p.kind, p.source);
    }
}
