use super::*;
use crate::lang::{canonicalize, print_program, ExprKind, ScopeId};
use crate::matching::{get_matched_exprs, UbKind};

const FIG4: &str = "struct a { int x; };
struct a b[2];
struct a *c = b, *d = b;
int k = 0;
int main() {
  *c = *b;
  *c = *(d + k);
  return c->x;
}
";

fn profile_of(src: &str, kind: UbKind) -> (crate::lang::Ast, Instrumented, ExecutionProfile) {
    let ast = canonicalize(src).unwrap();
    let sites = get_matched_exprs(&ast, kind);
    let inst = instrument(&ast, kind, &sites).unwrap();
    let p = run_profile(&inst, &Toolchain::Sim, Duration::from_secs(10)).unwrap();
    (ast, inst, p)
}

#[test]
fn fig4_logs_ranges_and_accesses() {
    let (ast, inst, p) = profile_of(FIG4, UbKind::BufOverflowPointer);
    let text = print_program(&inst.ast);
    assert!(text.contains("__ubs_range(0, &b, sizeof b)"), "{text}");
    assert!(text.contains("__ubs_addr("), "{text}");
    let sites = get_matched_exprs(&ast, UbKind::BufOverflowPointer);
    let target = sites.last().unwrap();
    let b = p.objects.iter().find(|o| o.storage == ObjStorage::Global && o.size == 8).unwrap();
    let occ = q_val(&p, target.node_id, 0).unwrap();
    assert_eq!(occ.operands[0], Some(i128::from(b.base)));
    assert_eq!(q_mem(&p, target.node_id, 0).unwrap(), MemRef::Live(b));
}

#[test]
fn empty_site_list_logs_only_objects() {
    let ast = canonicalize(FIG4).unwrap();
    let inst = instrument(&ast, UbKind::BufOverflowPointer, &[]).unwrap();
    assert!(inst.probes.iter().all(|p| matches!(p, Probe::Object { .. })));
    let p = run_profile(&inst, &Toolchain::Sim, Duration::from_secs(10)).unwrap();
    assert!(p.values.is_empty());
    assert_eq!(p.objects.len(), 4);
}

#[test]
fn values_and_liveness() {
    let src = "int a[5];\nint x = 1;\nint main() {\n  int s = 0;\n  for (int i = 0; i < 5; i++) {\n    s = s + a[i];\n  }\n  if (s > 100) {\n    a[x] = 3 + 4;\n  }\n  a[x] = 1;\n  return s;\n}\n";
    let (ast, _, p) = profile_of(src, UbKind::BufOverflowArray);
    let sites = get_matched_exprs(&ast, UbKind::BufOverflowArray);
    assert_eq!(sites.len(), 3);
    assert!(q_liv(&p, sites[0].node_id));
    assert_eq!(occurrences(&p, sites[0].node_id).len(), 5);
    assert!(!q_liv(&p, sites[1].node_id));
    assert!(matches!(q_val(&p, sites[1].node_id, 0), Err(ProfileError::NotLive(_))));
    assert_eq!(q_val(&p, sites[2].node_id, 0).unwrap().operands[1], Some(1));
    let (ast, _, p) = profile_of("int main() {\n  int s = 3 + 4;\n  return s - 7;\n}\n", UbKind::IntegerOverflow);
    let sites = get_matched_exprs(&ast, UbKind::IntegerOverflow);
    assert_eq!(q_val(&p, sites[0].node_id, 0).unwrap().operands, vec![Some(3), Some(4)]);
    assert!(matches!(q_mem(&p, sites[0].node_id, 0), Err(ProfileError::NotAPointer(..))));
}

#[test]
fn heap_and_freed_objects() {
    let src = "int main() {\n  int *p = malloc(8);\n  int *q = p + 1;\n  *q = 1;\n  free(p);\n  return 0;\n}\n";
    let (ast, _, p) = profile_of(src, UbKind::UseAfterFree);
    let _ = ast;
    let heap: Vec<&MemObject> = p.objects.iter().filter(|o| o.storage == ObjStorage::Heap).collect();
    assert_eq!(heap.len(), 1);
    assert_eq!(heap[0].size, 8);
    assert!(heap[0].freed.is_some());
    let inside = object_at(&p, heap[0].base + 4, heap[0].seq + 1).unwrap();
    assert_eq!(inside, MemRef::Live(heap[0]));
    let after = object_at(&p, heap[0].base + 4, u64::MAX).unwrap();
    assert_eq!(after, MemRef::Freed(heap[0]));
}

#[test]
fn scopes_follow_nesting() {
    let src = "int a, b;\nint main() {\n  int *s = &a;\n  int t = 0, u = 1;\n  for (b = 0; b <= 3; b++) {\n    int i = *s;\n    t = i;\n  }\n  return t + u;\n}\n";
    let (ast, _, p) = profile_of(src, UbKind::UseAfterScope);
    let sema = crate::lang::analyze(&ast).unwrap();
    let id = |n: &str| sema.decls.values().find(|d| d.name == n).unwrap().id;
    assert_eq!(q_scp(&p, id("a")).unwrap(), ScopeId::GLOBAL);
    let main_scope = q_scp(&p, id("s")).unwrap();
    let inner = q_scp(&p, id("i")).unwrap();
    assert!(scope_strictly_within(&p, inner, main_scope));
    assert!(!scope_strictly_within(&p, main_scope, inner));
    assert_eq!(q_scp(&p, id("t")).unwrap(), q_scp(&p, id("u")).unwrap());
    assert!(matches!(q_scp(&p, 99_999), Err(ProfileError::UnknownDeclaration(_))));
}

#[test]
fn instrumentation_is_transparent_and_deterministic() {
    let src = "int g[3] = {1, 2, 3};\nint f(int *p, int n) {\n  int s = 0;\n  while (n > 0) {\n    n--;\n    s += p[n] << 1;\n  }\n  return s / 2;\n}\nint main() {\n  int x = f(g, 3);\n  printf(\"%d\\n\", x);\n  return 0;\n}\n";
    for kind in UbKind::ALL {
        let (ast, inst, p) = profile_of(src, kind);
        let plain = crate::minivm::eval_program(&ast, crate::minivm::DEFAULT_STEP_LIMIT).unwrap();
        let VmOutcome::Normal { stdout, .. } = plain else { panic!("{plain:?}") };
        assert_eq!(p.stdout, stdout, "{kind}");
        let again = run_profile(&inst, &Toolchain::Sim, Duration::from_secs(10)).unwrap();
        assert_eq!(p.to_json(), again.to_json());
    }
}

#[test]
fn incdec_and_compound_operands_are_logged() {
    let src = "int main() {\n  int x = 5;\n  int y = 2;\n  x++;\n  x *= y;\n  return x;\n}\n";
    let (ast, inst, p) = profile_of(src, UbKind::IntegerOverflow);
    let sites = get_matched_exprs(&ast, UbKind::IntegerOverflow);
    assert_eq!(sites.len(), 2);
    assert_eq!(q_val(&p, sites[0].node_id, 0).unwrap().operands, vec![Some(5)]);
    assert_eq!(q_val(&p, sites[1].node_id, 0).unwrap().operands, vec![Some(6), Some(2)]);
    let text = print_program(&inst.ast);
    assert!(text.contains("(*__ubs_valp("), "{text}");
    assert!(crate::lang::parse_program(&text).unwrap().same_shape(&inst.ast));
    assert!(find_call(&inst.ast, "__ubs_valp"));
}

fn find_call(ast: &crate::lang::Ast, name: &str) -> bool {
    let mut hit = false;
    let mut a = ast.clone();
    crate::lang::visit::for_each_expr_mut(&mut a, &mut |e| {
        if matches!(&e.kind, ExprKind::Call { callee, .. } if callee == name) {
            hit = true;
        }
    });
    hit
}
