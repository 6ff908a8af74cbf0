use super::*;
use crate::minivm::{eval_program, eval_source, VmOutcome};
use crate::profile::{instrument, run_profile};

const FIG6: &str = "int main() {\n  int a[5];\n  int x = 1;\n  a[x] = 1;\n  return 0;\n}\n";

const FIG4: &str = "struct a {\n  int x;\n};\nstruct a b[2];\nstruct a *c = b, *d = b;\nint k = 0;\n\
int main() {\n  *c = *b;\n  *c = *(d + k);\n  return c->x;\n}\n";

fn profiled(seed: &Seed, kind: UbKind) -> ExecutionProfile {
    let inst = instrument(&seed.ast, kind, &seed.sites(kind)).unwrap();
    run_profile(&inst, &Toolchain::Sim, Duration::from_secs(5)).unwrap()
}

fn gen(src: &str, kind: UbKind) -> Generation {
    let seed = Seed::new("t", src).unwrap();
    let prof = profiled(&seed, kind);
    generate(&seed, kind, &prof, &mut rng_for(7, "t", kind))
}

fn confirm(p: &UbProgram) {
    let out = eval_source(&p.source, 1_000_000).unwrap();
    assert_eq!(out.ub(), Some((p.kind, p.planted_site)), "{}\n{out:?}", p.source);
}

#[test]
fn array_subscript_reaches_first_element_past_the_end() {
    let seed = Seed::new("fig6", FIG6).unwrap();
    let kind = UbKind::BufOverflowArray;
    let prof = profiled(&seed, kind);
    let site = &seed.sites(kind)[0];
    let sh = syn_shadow_stmt(&seed, site, &prof, &mut rng_for(0, "fig6", kind)).unwrap();
    assert_eq!(sh.decls.len(), 1);
    assert_eq!(sh.decls[0].value, Some(4));
    assert_eq!(sh.rewrite, Rewrite::Offset(vec![(1, "x_hat".into())]));
    let out = generate(&seed, kind, &prof, &mut rng_for(0, "fig6", kind));
    assert_eq!(out.programs.len(), 1);
    let p = &out.programs[0];
    assert!(p.source.contains("  long x_hat;\n  x_hat = 4;\n  a[x + x_hat] = 1;\n"), "{}", p.source);
    assert_eq!(p.planted_site, SourceLoc::new(6, 3));
    confirm(p);
}

#[test]
fn pointer_overflow_shifts_by_two_elements() {
    let out = gen(FIG4, UbKind::BufOverflowPointer);
    let p = out
        .programs
        .iter()
        .find(|p| p.source.contains("*(d + k + k_hat)"))
        .expect("the `*(d + k)` site is synthesized");
    assert!(p.source.contains("k_hat = 2;"), "{}", p.source);
    let line = p.source.lines().position(|l| l.contains("*(d + k + k_hat)")).unwrap() + 1;
    assert_eq!(p.planted_site.line as usize, line);
    confirm(p);
    for p in &out.programs {
        confirm(p);
    }
}

#[test]
fn overflow_index_prefers_smallest_whole_element() {
    assert_eq!(overflow_index(0x1000, 0x1000, 20, 4), Some(5));
    assert_eq!(overflow_distance(0x1000, 0x1000, 20, 4, 5), 4);
    assert_eq!(overflow_index(0x1008, 0x1000, 8, 4), Some(0));
    // 40-byte elements would overrun by 40; straddle the end instead.
    assert_eq!(overflow_index(0x1000, 0x1000, 100, 40), Some(2));
    assert_eq!(overflow_index(0x1000, 0x1000, 120, 40), None);
    assert_eq!(overflow_index(0x2000, 0x1000, 8, 4), None);
}

#[test]
fn divisor_is_cancelled() {
    let src = "int main() {\n  int x = 21;\n  int y = 7;\n  int r = x / y;\n  return r;\n}\n";
    let out = gen(src, UbKind::DivideByZero);
    assert_eq!(out.programs.len(), 1);
    let p = &out.programs[0];
    assert!(p.source.contains("y_hat = -7;"), "{}", p.source);
    assert!(p.source.contains("x / (y + y_hat)"), "{}", p.source);
    confirm(p);
}

#[test]
fn every_kind_on_a_small_seed() {
    let src = "#include <stdlib.h>\nint g;\nint main() {\n  int a[4];\n  int i;\n  int *p = &a[0];\n  int *h = malloc(8);\n\
               for (i = 0; i < 4; i++) {\n    a[i] = i * 3 + 1;\n  }\n  h[0] = 5;\n  h[1] = 6;\n\
               int s = *p;\n  int t = *h;\n  if (s < t) {\n    g = s << 2;\n  }\n  g += t / a[1];\n\
               free(h);\n  return g % 7;\n}\n";
    let mut total = 0;
    for kind in UbKind::ALL {
        let out = gen(src, kind);
        for p in &out.programs {
            confirm(p);
        }
        assert!(!out.programs.is_empty(), "{kind}: {:?}", out.skipped);
        total += out.programs.len();
    }
    assert!(total >= 9);
}

#[test]
fn effect_kinds_respect_isolation() {
    // `p` is read again in the anchor, so nulling it first would move the UB.
    let src = "int main() {\n  int x = 1;\n  int *p = &x;\n  int y = *p + *p;\n  return y;\n}\n";
    let out = gen(src, UbKind::NullPtrDeref);
    assert!(out.programs.is_empty());
    assert_eq!(out.skipped.len(), 2);
    let src = "int main() {\n  int x = 1;\n  int *p = &x;\n  int y = *p;\n  return y;\n}\n";
    for kind in [UbKind::NullPtrDeref, UbKind::UseAfterScope] {
        let out = gen(src, kind);
        assert_eq!(out.programs.len(), 1, "{kind}");
        confirm(&out.programs[0]);
    }
    let uas = &gen(src, UbKind::UseAfterScope).programs[0];
    assert!(uas.source.contains("  {\n    int p_hat;\n    p = &p_hat;\n  }\n"), "{}", uas.source);
}

#[test]
fn heap_pointer_is_freed_at_its_base() {
    let src = "#include <stdlib.h>\nint main() {\n  int *h = malloc(16);\n  h[2] = 4;\n  int v = *(h + 2);\n  free(h);\n  return v;\n}\n";
    let out = gen(src, UbKind::UseAfterFree);
    assert_eq!(out.programs.len(), 1, "{:?}", out.skipped);
    let p = &out.programs[0];
    assert!(p.source.contains("free((char *)(h + 2) - 8);"), "{}", p.source);
    confirm(p);
}

#[test]
fn integer_overflow_forms() {
    let src = "int main() {\n  int x = 5;\n  int y = 3;\n  int z = x * y;\n  x += y;\n  x++;\n  y--;\n  return z + x;\n}\n";
    let out = gen(src, UbKind::IntegerOverflow);
    assert!(out.programs.len() >= 4, "{:?}", out.skipped);
    for p in &out.programs {
        confirm(p);
    }
    assert!(out.programs.iter().any(|p| p.source.contains("x += 1 + x_hat;")));
    assert!(out.programs.iter().any(|p| p.source.contains("y -= 1 + y_hat;")));
}

#[test]
fn uninitialized_condition() {
    let src = "int main() {\n  int n = 3;\n  while (n > 0) {\n    n--;\n  }\n  if (n) {\n    return 1;\n  }\n  return 0;\n}\n";
    let out = gen(src, UbKind::UseOfUninitMemory);
    assert_eq!(out.programs.len(), 2);
    assert!(out.programs[0].source.contains("while ((n > 0) + n_hat)"), "{}", out.programs[0].source);
    assert!(out.programs[1].source.contains("if (n + n_hat1)") || out.programs[1].source.contains("if (n + n_hat)"));
    for p in &out.programs {
        confirm(p);
    }
}

#[test]
fn fresh_names_avoid_seed_identifiers() {
    let src = "int main() {\n  int x_hat = 2;\n  int a[3];\n  int x = x_hat;\n  a[x] = 0;\n  return 0;\n}\n";
    let out = gen(src, UbKind::BufOverflowArray);
    assert_eq!(out.programs.len(), 1);
    assert!(out.programs[0].source.contains("long x_hat1;"));
    confirm(&out.programs[0]);
}

#[test]
fn shift_amount_reaches_width() {
    let src = "int main() {\n  int v = 1;\n  int s = 3;\n  v <<= s;\n  return v >> 1;\n}\n";
    let out = gen(src, UbKind::ShiftOverflow);
    assert_eq!(out.programs.len(), 2);
    assert!(out.programs[0].source.contains("s_hat = 29;"));
    for p in &out.programs {
        confirm(p);
    }
}

#[test]
fn removing_inserted_lines_restores_the_seed() {
    let seed = Seed::new("fig6", FIG6).unwrap();
    let p = &gen(FIG6, UbKind::BufOverflowArray).programs[0];
    let stripped: String = p
        .source
        .lines()
        .filter(|l| !l.contains("x_hat;") && !l.contains("x_hat = "))
        .map(|l| format!("{}\n", l.replace(" + x_hat", "")))
        .collect();
    assert_eq!(stripped, seed.source());
}

#[test]
fn unreached_sites_are_skipped() {
    let src = "int main() {\n  int a[2];\n  int i = 0;\n  if (i) {\n    a[i] = 1;\n  }\n  return 0;\n}\n";
    let out = gen(src, UbKind::BufOverflowArray);
    assert!(out.programs.is_empty());
    assert!(out.skipped[0].1.contains("never executed"));
    let none = gen("int main() {\n  return 0;\n}\n", UbKind::BufOverflowArray);
    assert!(none.programs.is_empty() && none.skipped.is_empty());
}

#[test]
fn sidecar_round_trip() {
    let p = gen(FIG6, UbKind::BufOverflowArray).programs.remove(0);
    let back = UbProgram::from_sidecar(p.source.clone(), &p.to_sidecar()).unwrap();
    assert_eq!(back, p);
    assert!(UbProgram::from_sidecar(String::new(), "kind=div\n").is_err());
}

#[test]
fn monte_carlo_is_reproducible() {
    let src = "int main() {\n  int x = 5;\n  int y = 3;\n  return x * y;\n}\n";
    let a = gen(src, UbKind::IntegerOverflow);
    let b = gen(src, UbKind::IntegerOverflow);
    assert_eq!(a.programs, b.programs);
    let seed = Seed::new("t", src).unwrap();
    let prog = Seed::new("p", &a.programs[0].source).unwrap();
    assert!(matches!(eval_program(&seed.ast, 1000).unwrap(), VmOutcome::Normal { .. }));
    assert!(eval_program(&prog.ast, 1000).unwrap().ub().is_some());
}
