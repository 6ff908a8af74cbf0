//! Judges simulated sanitizer discrepancies: one missed report and one
//! check removed by optimization.
use ubsmith::harness::Lab;
use ubsmith::toolchain::{CompilerConfig, FnInjection};

const PROGRAM: &str = "#include <stdio.h>\nint main() {\n  int a[5];\n  int i = 5;\n  a[i] = 1;\n  printf(\"done\\n\");\n  return 0;\n}\n";

fn main() {
    let o0: CompilerConfig = "sim:O0:asan".parse().unwrap();
    let o2: CompilerConfig = "sim:O2:asan".parse().unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.c");
    std::fs::write(&path, PROGRAM).unwrap();
    for rules in ["", "miss kind=BufOverflowArray opt=O2\n", "eliminate kind=BufOverflowArray opt=O2\n"] {
        let inj: FnInjection = rules.parse().unwrap();
        let lab = Lab::sim(dir.path().join("work"), inj);
        let rec = lab.judge(&path, PROGRAM, &o0, &o2).unwrap();
        println!("rules {:?}: {:?}, verdict {:?}", rules.trim(), rec.decision, rec.verdict);
    }
}
