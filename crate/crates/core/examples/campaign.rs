//! A small simulated campaign with injected sanitizer misses, followed by
//! a replay of every finding.
use ubsmith::harness::{self, CampaignConfig, SeedSource, Store};

fn main() {
    let dir = tempfile::tempdir().unwrap();
    let rules = dir.path().join("inject.txt");
    std::fs::write(&rules, "miss kind=BufOverflowPointer opt=O2 prob=0.3\neliminate kind=DivideByZero opt=O2 prob=0.5\n").unwrap();
    let matrix = ["sim:O0:asan", "sim:O2:asan", "sim:O0:ubsan", "sim:O2:ubsan", "sim:O0:msan", "sim:O2:msan"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    let mut cfg = CampaignConfig::new(SeedSource::Bundled(12), matrix, dir.path().join("out"));
    cfg.injection = Some(rules);
    cfg.campaign_seed = 2024;
    println!("{}", cfg.to_toml());
    let report = harness::run_campaign(&cfg).unwrap();
    print!("{report}");
    let store = Store::open(&cfg.output).unwrap();
    for f in store.findings() {
        let r = harness::replay(&cfg.output, &f.id).unwrap();
        println!("{} {} at {}: reproduced={}", f.id, f.kind, f.crash_site, r.reproduced);
    }
}
