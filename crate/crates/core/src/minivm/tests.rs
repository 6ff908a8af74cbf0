use super::*;
use crate::lang::parse_program;

fn outcome(src: &str) -> VmOutcome {
    eval_source(src, DEFAULT_STEP_LIMIT).unwrap()
}

fn ub(src: &str) -> (UbKind, u32) {
    match outcome(src) {
        VmOutcome::Ub { kind, site, .. } => (kind, site.line),
        other => panic!("expected UB, got {other:?}"),
    }
}

const FIG2: &str = "struct a { int x; };
struct a b[2];
struct a *c = b, *d = b;
int k = 0;
int main() {
  *c = *b;
  k = 2;
  *c = *(d + k);
  return c->x;
}
";

#[test]
fn trivial_program_exits_zero() {
    assert_eq!(
        outcome("int main() { return 0; }"),
        VmOutcome::Normal {
            exit_code: 0,
            stdout: String::new()
        }
    );
    assert_eq!(
        outcome("int main() { printf(\"%d\\n\", 3 * 7); return 300; }"),
        VmOutcome::Normal {
            exit_code: 44,
            stdout: "21\n".into()
        }
    );
}

#[test]
fn struct_pointer_overflow() {
    assert_eq!(ub(FIG2), (UbKind::BufOverflowPointer, 8));
    let benign = FIG2.replace("  k = 2;\n", "");
    assert!(matches!(outcome(&benign), VmOutcome::Normal { exit_code: 0, .. }));
}

#[test]
fn array_index_overflow() {
    let src = "int a[5];\nint x = 1;\nint main() {\n  x = 5;\n  a[x] = 1;\n  return 0;\n}\n";
    assert_eq!(ub(src), (UbKind::BufOverflowArray, 5));
    let inner = "struct s { int a[2]; int b; };\nstruct s v;\nint main() {\n  int i = 2;\n  v.a[i] = 1;\n  return 0;\n}\n";
    assert_eq!(ub(inner), (UbKind::BufOverflowArray, 5));
}

#[test]
fn each_kind_is_detected() {
    let cases: &[(&str, UbKind, u32)] = &[
        ("int main() {\n  int *p = malloc(8);\n  free(p);\n  return *p;\n}\n", UbKind::UseAfterFree, 4),
        (
            "int a, b;\nint main() {\n  int *s = &a;\n  for (b = 0; b <= 3; b++) {\n    int i = *s;\n    s = &i;\n  }\n  *s = b;\n  return 0;\n}\n",
            UbKind::UseAfterScope,
            8,
        ),
        ("int *p;\nint main() {\n  return *p;\n}\n", UbKind::NullPtrDeref, 3),
        ("int main() {\n  int x = 2147483647;\n  x = x + 1;\n  return 0;\n}\n", UbKind::IntegerOverflow, 3),
        ("int main() {\n  int y = 32;\n  return 1 << y;\n}\n", UbKind::ShiftOverflow, 3),
        ("int main() {\n  int y = 0;\n  return 7 % y;\n}\n", UbKind::DivideByZero, 3),
        ("int main() {\n  int x;\n  if (x) return 1;\n  return 0;\n}\n", UbKind::UseOfUninitMemory, 3),
    ];
    for (src, kind, line) in cases {
        assert_eq!(ub(src), (*kind, *line), "{src}");
    }
}

#[test]
fn defined_edge_cases_are_quiet() {
    for src in [
        "int main() { unsigned x = 4294967295u; x = x + 1; return x; }",
        "int main() { char c = 127; c++; return 0; }",
        "int main() { int x = -2147483647 - 1; return x < 0 ? 0 : 1; }",
        "int main() { unsigned y = 31; return (1u << y) != 0 ? 0 : 1; }",
        "int main() { int x; x = 3; if (x) return 0; return 1; }",
        "int main() { int *p = 0; if (p) return *p; return 0; }",
    ] {
        assert!(matches!(outcome(src), VmOutcome::Normal { exit_code: 0, .. }), "{src}");
    }
}

#[test]
fn trace_records_statements_in_order() {
    let ast = parse_program("int main() {\n  int x = 1;\n  x = x + 2;\n  return x;\n}\n").unwrap();
    let (out, trace) = eval_trace(&ast, DEFAULT_STEP_LIMIT).unwrap();
    assert!(matches!(out, VmOutcome::Normal { exit_code: 3, .. }));
    let lines: Vec<u32> = trace.sites.iter().map(|s| s.line).collect();
    assert_eq!(lines.first(), Some(&2));
    assert_eq!(lines.last(), Some(&4));
    assert!(lines.windows(2).all(|w| w[0] <= w[1]));
    assert_eq!(trace.terminal, crate::oracle::Terminal::NormalExit);
}

#[test]
fn loops_and_calls() {
    let src = "int f(int n) { return n <= 1 ? 1 : n * f(n - 1); }\nint main() {\n  int s = 0;\n  for (int i = 0; i < 10; i++) {\n    if (i == 7) break;\n    if (i % 2) continue;\n    s += i;\n  }\n  while (s < 100) s = s * 2;\n  printf(\"%d %d\", s, f(5));\n  return 0;\n}\n";
    assert_eq!(
        outcome(src),
        VmOutcome::Normal {
            exit_code: 0,
            stdout: "192 120".into()
        }
    );
}

#[test]
fn step_limit_stops_infinite_loops() {
    assert_eq!(outcome_limited("int main() { while (1) {} }", 1000), VmOutcome::StepLimit);
}

fn outcome_limited(src: &str, limit: u64) -> VmOutcome {
    eval_source(src, limit).unwrap()
}

#[test]
fn missed_site_continues_leniently() {
    let ast = parse_program(FIG2).unwrap();
    let cfg = VmConfig {
        policy: CheckPolicy {
            detect: None,
            fault: Some((crate::lang::SourceLoc::new(8, 8), Fault::Miss)),
        },
        trace: true,
        ..VmConfig::default()
    };
    let r = run(&ast, &cfg).unwrap();
    assert!(matches!(r.outcome, VmOutcome::Normal { .. }), "{:?}", r.outcome);
    let t = r.trace.unwrap();
    assert!(t.sites.iter().any(|s| s.line == 8));
}
