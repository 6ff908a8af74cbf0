use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lang::sema::*;
use crate::lang::visit::{expr_children, expr_children_mut};
use crate::lang::*;
use crate::matching::{Construct, MatchSite, UbKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ObjStorage {
    Stack,
    Global,
    Heap,
}

/// What a probe number in the log stands for.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Probe {
    /// Operand `slot` of a matched site. `ty` is `None` for addresses.
    Operand {
        site: NodeId,
        slot: u8,
        ty: Option<IntTy>,
    },
    /// Entry into the statement enclosing one or more sites.
    Anchor { stmt: NodeId },
    Object {
        decl: NodeId,
        storage: ObjStorage,
        loc: SourceLoc,
    },
    Heap { loc: SourceLoc },
    Free { loc: SourceLoc },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InstrumentError {
    #[error(transparent)]
    Lang(#[from] ParseError),
    #[error("site {0} is not a matched expression of this program")]
    UnknownSite(NodeId),
    #[error("no enclosing statement found for site {0}")]
    AnchorNotFound(NodeId),
}

/// An instrumented program together with the meaning of its probes.
#[derive(Clone, Debug)]
pub struct Instrumented {
    pub ast: Ast,
    pub probes: Vec<Probe>,
    pub sites: Vec<MatchSite>,
    /// Site id to its anchor statement id.
    pub anchors: BTreeMap<NodeId, NodeId>,
    pub scopes: BTreeMap<NodeId, ScopeId>,
    pub scope_parent: BTreeMap<ScopeId, ScopeId>,
}

impl Instrumented {
    pub fn slot_count(&self, site: NodeId) -> usize {
        self.probes
            .iter()
            .filter(|p| matches!(p, Probe::Operand { site: s, .. } if *s == site))
            .count()
    }

    pub fn pointer_slots(&self) -> BTreeMap<NodeId, Vec<u8>> {
        let mut out: BTreeMap<NodeId, Vec<u8>> = BTreeMap::new();
        for p in &self.probes {
            if let Probe::Operand { site, slot, ty: None } = p {
                out.entry(*site).or_default().push(*slot);
            }
        }
        out
    }
}

/// Maps every expression inside a function body to its anchor: the nearest
/// enclosing statement whose parent is a block.
pub fn anchor_map(ast: &Ast) -> HashMap<NodeId, NodeId> {
    fn exprs(e: &Expr, anchor: NodeId, out: &mut HashMap<NodeId, NodeId>) {
        out.insert(e.id, anchor);
        for c in expr_children(e) {
            exprs(c, anchor, out);
        }
    }
    fn init(i: &Initializer, anchor: NodeId, out: &mut HashMap<NodeId, NodeId>) {
        match i {
            Initializer::Expr(e) => exprs(e, anchor, out),
            Initializer::List(l) => l.iter().for_each(|i| init(i, anchor, out)),
        }
    }
    fn decl(d: &Decl, anchor: NodeId, out: &mut HashMap<NodeId, NodeId>) {
        for dc in &d.declarators {
            if let Some(i) = &dc.init {
                init(i, anchor, out);
            }
        }
    }
    fn stmt(s: &Stmt, anchor: NodeId, out: &mut HashMap<NodeId, NodeId>) {
        match &s.kind {
            StmtKind::Expr(e) | StmtKind::Return(Some(e)) => exprs(e, anchor, out),
            StmtKind::Decl(d) => decl(d, anchor, out),
            StmtKind::Block(b) => block(b, out),
            StmtKind::If { cond, then, els } => {
                exprs(cond, anchor, out);
                stmt(then, anchor, out);
                if let Some(e) = els {
                    stmt(e, anchor, out);
                }
            }
            StmtKind::While { cond, body } => {
                exprs(cond, anchor, out);
                stmt(body, anchor, out);
            }
            StmtKind::For {
                init,
                cond,
                step,
                body,
            } => {
                match init {
                    Some(ForInit::Decl(d)) => decl(d, anchor, out),
                    Some(ForInit::Expr(e)) => exprs(e, anchor, out),
                    None => {}
                }
                for e in [cond, step].into_iter().flatten() {
                    exprs(e, anchor, out);
                }
                stmt(body, anchor, out);
            }
            _ => {}
        }
    }
    fn block(b: &Block, out: &mut HashMap<NodeId, NodeId>) {
        for s in &b.stmts {
            stmt(s, s.id, out);
        }
    }
    let mut out = HashMap::new();
    for f in ast.functions() {
        if let Some(b) = &f.body {
            block(b, &mut out);
        }
    }
    out
}

/// Adds logging hooks for the given sites plus object, heap and free events.
pub fn instrument(ast: &Ast, kind: UbKind, sites: &[MatchSite]) -> Result<Instrumented, InstrumentError> {
    let sema = analyze(ast)?;
    let matched: HashMap<NodeId, Construct> = crate::matching::matched_with(ast, &sema, kind)
        .into_iter()
        .map(|m| (m.node_id, m.construct))
        .collect();
    let amap = anchor_map(ast);
    let mut anchors = BTreeMap::new();
    for s in sites {
        if matched.get(&s.node_id) != Some(&s.construct) {
            return Err(InstrumentError::UnknownSite(s.node_id));
        }
        let a = amap
            .get(&s.node_id)
            .ok_or(InstrumentError::AnchorNotFound(s.node_id))?;
        anchors.insert(s.node_id, *a);
    }
    let mut out = ast.clone();
    let mut ins = Inserter {
        sema: &sema,
        next_id: out.next_id,
        probes: Vec::new(),
        sites: sites.iter().map(|s| (s.node_id, s.construct)).collect(),
        anchor_probe: HashMap::new(),
        anchor_set: anchors.values().copied().collect(),
    };
    let globals: Vec<(NodeId, String, SourceLoc)> = ast
        .globals()
        .filter_map(|s| match &s.kind {
            StmtKind::Decl(d) => Some(d),
            _ => None,
        })
        .flat_map(|d| d.declarators.iter().map(|dc| (dc.id, dc.name.clone(), dc.loc)))
        .collect();
    for item in &mut out.items {
        let Item::Func(f) = item else { continue };
        let Some(body) = &mut f.body else { continue };
        let mut prologue = Vec::new();
        if f.name == "main" {
            for (id, name, loc) in &globals {
                prologue.push(ins.range_stmt(*id, name, ObjStorage::Global, *loc));
            }
        }
        for p in &f.params {
            prologue.push(ins.range_stmt(p.id, &p.name, ObjStorage::Stack, p.loc));
        }
        ins.block(body);
        prologue.append(&mut body.stmts);
        body.stmts = prologue;
    }
    out.next_id = ins.next_id;
    let probes = ins.probes;
    relocate(&mut out);
    Ok(Instrumented {
        ast: out,
        probes,
        sites: sites.to_vec(),
        anchors,
        scopes: sema.decls.iter().map(|(id, d)| (*id, d.scope)).collect(),
        scope_parent: sema.scope_parent.clone(),
    })
}

struct Inserter<'a> {
    sema: &'a Sema,
    next_id: NodeId,
    probes: Vec<Probe>,
    sites: HashMap<NodeId, Construct>,
    anchor_probe: HashMap<NodeId, u32>,
    anchor_set: HashSet<NodeId>,
}

impl Inserter<'_> {
    fn id(&mut self) -> NodeId {
        let id = self.next_id;
        self.next_id += 1;
        id
    }

    fn probe(&mut self, p: Probe) -> u32 {
        self.probes.push(p);
        (self.probes.len() - 1) as u32
    }

    fn expr(&mut self, kind: ExprKind) -> Expr {
        Expr {
            id: self.id(),
            loc: SourceLoc::default(),
            kind,
        }
    }

    fn lit(&mut self, v: u32) -> Expr {
        self.expr(ExprKind::IntLit {
            value: u64::from(v),
            text: v.to_string(),
        })
    }

    fn call(&mut self, callee: &str, args: Vec<Expr>) -> Expr {
        self.expr(ExprKind::Call {
            callee: callee.to_string(),
            args,
        })
    }

    fn hook(&mut self, name: &str, probe: u32, e: Expr) -> Expr {
        let p = self.lit(probe);
        self.call(name, vec![p, e])
    }

    fn stmt(&mut self, e: Expr) -> Stmt {
        Stmt {
            id: self.id(),
            loc: SourceLoc::default(),
            kind: StmtKind::Expr(e),
        }
    }

    fn range_stmt(&mut self, decl: NodeId, name: &str, storage: ObjStorage, loc: SourceLoc) -> Stmt {
        let p = self.probe(Probe::Object { decl, storage, loc });
        let p = self.lit(p);
        let a = self.expr(ExprKind::Ident(name.to_string()));
        let addr = self.expr(ExprKind::Unary {
            op: UnOp::AddrOf,
            operand: Box::new(a),
        });
        let b = self.expr(ExprKind::Ident(name.to_string()));
        let size = self.expr(ExprKind::SizeofExpr(Box::new(b)));
        let c = self.call(HOOK_RANGE, vec![p, addr, size]);
        self.stmt(c)
    }

    fn block(&mut self, b: &mut Block) {
        let old = std::mem::take(&mut b.stmts);
        for mut s in old {
            if self.anchor_set.contains(&s.id) {
                let p = match self.anchor_probe.get(&s.id) {
                    Some(p) => *p,
                    None => {
                        let p = self.probe(Probe::Anchor { stmt: s.id });
                        self.anchor_probe.insert(s.id, p);
                        p
                    }
                };
                let lit = self.lit(p);
                let c = self.call(HOOK_ENTER, vec![lit]);
                let st = self.stmt(c);
                b.stmts.push(st);
            }
            self.walk_stmt(&mut s);
            let decls: Vec<(NodeId, String, SourceLoc)> = match &s.kind {
                StmtKind::Decl(d) => d
                    .declarators
                    .iter()
                    .map(|dc| (dc.id, dc.name.clone(), dc.loc))
                    .collect(),
                _ => Vec::new(),
            };
            b.stmts.push(s);
            for (id, name, loc) in decls {
                let st = self.range_stmt(id, &name, ObjStorage::Stack, loc);
                b.stmts.push(st);
            }
        }
    }

    fn walk_init(&mut self, i: &mut Initializer) {
        match i {
            Initializer::Expr(e) => self.walk_expr(e),
            Initializer::List(l) => l.iter_mut().for_each(|i| self.walk_init(i)),
        }
    }

    fn walk_decl(&mut self, d: &mut Decl) {
        for dc in &mut d.declarators {
            if let Some(i) = &mut dc.init {
                self.walk_init(i);
            }
        }
    }

    fn walk_stmt(&mut self, s: &mut Stmt) {
        match &mut s.kind {
            StmtKind::Expr(e) | StmtKind::Return(Some(e)) => self.walk_expr(e),
            StmtKind::Decl(d) => self.walk_decl(d),
            StmtKind::Block(b) => self.block(b),
            StmtKind::If { cond, then, els } => {
                self.walk_expr(cond);
                self.walk_stmt(then);
                if let Some(e) = els {
                    self.walk_stmt(e);
                }
            }
            StmtKind::While { cond, body } => {
                self.walk_expr(cond);
                self.walk_stmt(body);
            }
            StmtKind::For {
                init,
                cond,
                step,
                body,
            } => {
                match init {
                    Some(ForInit::Decl(d)) => self.walk_decl(d),
                    Some(ForInit::Expr(e)) => self.walk_expr(e),
                    None => {}
                }
                if let Some(c) = cond {
                    self.walk_expr(c);
                }
                if let Some(c) = step {
                    self.walk_expr(c);
                }
                self.walk_stmt(body);
            }
            _ => {}
        }
    }

    fn int_ty(&self, e: &Expr) -> Option<IntTy> {
        self.sema.type_of(e).as_int()
    }

    /// Replaces `slot` with `hook(probe, slot)`.
    fn wrap(&mut self, slot: &mut Expr, hook: &str, site: NodeId, n: u8, ty: Option<IntTy>) {
        let p = self.probe(Probe::Operand { site, slot: n, ty });
        let inner = std::mem::replace(slot, Expr {
            id: 0,
            loc: SourceLoc::default(),
            kind: ExprKind::Ident(String::new()),
        });
        *slot = self.hook(hook, p, inner);
    }

    /// Replaces lvalue `slot` with `(*__ubs_valp(probe, &slot))`.
    fn wrap_lvalue(&mut self, slot: &mut Expr, site: NodeId, n: u8) {
        let ty = self.int_ty(slot);
        let p = self.probe(Probe::Operand { site, slot: n, ty });
        let inner = std::mem::replace(slot, Expr {
            id: 0,
            loc: SourceLoc::default(),
            kind: ExprKind::Ident(String::new()),
        });
        let addr = self.expr(ExprKind::Unary {
            op: UnOp::AddrOf,
            operand: Box::new(inner),
        });
        let call = self.hook(HOOK_VALP, p, addr);
        let deref = self.expr(ExprKind::Unary {
            op: UnOp::Deref,
            operand: Box::new(call),
        });
        *slot = self.expr(ExprKind::Paren(Box::new(deref)));
    }

    fn walk_expr(&mut self, e: &mut Expr) {
        if let Some(Construct::IfCond | Construct::WhileCond) = self.sites.get(&e.id).copied() {
            let site = e.id;
            for c in expr_children_mut(e) {
                self.walk_expr(c);
            }
            let ty = self.int_ty(e);
            self.wrap(e, HOOK_VAL, site, 0, ty);
            return;
        }
        for c in expr_children_mut(e) {
            self.walk_expr(c);
        }
        let site = e.id;
        let construct = self.sites.get(&site).copied();
        let sema = self.sema;
        match (&mut e.kind, construct) {
            (ExprKind::Index { base, index }, Some(Construct::Subscript)) => {
                self.wrap(base, HOOK_ADDR, site, 0, None);
                let t = sema.type_of(index).as_int();
                self.wrap(index, HOOK_VAL, site, 1, t);
            }
            (ExprKind::Unary { operand, .. }, Some(Construct::Deref)) => {
                self.wrap(operand, HOOK_ADDR, site, 0, None);
            }
            (
                ExprKind::Binary { lhs, rhs, .. },
                Some(Construct::Arith(_) | Construct::Shift(_) | Construct::Div(_)),
            ) => {
                let (lt, rt) = (sema.type_of(lhs).as_int(), sema.type_of(rhs).as_int());
                self.wrap(lhs, HOOK_VAL, site, 0, lt);
                self.wrap(rhs, HOOK_VAL, site, 1, rt);
            }
            (
                ExprKind::Assign { lhs, rhs, .. },
                Some(Construct::CompoundArith(_) | Construct::CompoundShift(_) | Construct::CompoundDiv(_)),
            ) => {
                let rt = sema.type_of(rhs).as_int();
                self.wrap_lvalue(lhs, site, 0);
                self.wrap(rhs, HOOK_VAL, site, 1, rt);
            }
            (ExprKind::Unary { operand, .. }, Some(Construct::IncDec(_))) => {
                self.wrap_lvalue(operand, site, 0);
            }
            (ExprKind::Call { callee, args }, _) if callee == "malloc" => {
                let p = self.probe(Probe::Heap { loc: e.loc });
                let lit = self.lit(p);
                *callee = HOOK_MALLOC.to_string();
                args.insert(0, lit);
            }
            (ExprKind::Call { callee, args }, _) if callee == "free" => {
                let p = self.probe(Probe::Free { loc: e.loc });
                let inner = args.remove(0);
                let w = self.hook(HOOK_FREED, p, inner);
                args.insert(0, w);
            }
            _ => {}
        }
    }
}

/// C definitions of the hooks for real compilers. Records go to the file
/// named by `UBS_PROFILE_LOG`.
pub const PRELUDE: &str = r#"#include <stdio.h>
#include <stdlib.h>
static FILE *__ubs_file;
static void __ubs_log(unsigned char tag, unsigned probe, unsigned long long a, unsigned long long b) {
  if (!__ubs_file) {
    const char *path = getenv("UBS_PROFILE_LOG");
    __ubs_file = fopen(path ? path : "/dev/null", "wb");
    if (!__ubs_file) abort();
  }
  fputc(tag, __ubs_file);
  fwrite(&probe, 4, 1, __ubs_file);
  fwrite(&a, 8, 1, __ubs_file);
  if (tag == 1) fwrite(&b, 8, 1, __ubs_file);
}
#define __ubs_val(p, e) ({ __typeof__(e) __ubs_v = (e); __ubs_log(2, (p), (unsigned long long)(long long)__ubs_v, 0); __ubs_v; })
#define __ubs_valp(p, e) ({ __typeof__(e) __ubs_v = (e); __ubs_log(2, (p), (unsigned long long)(long long)*__ubs_v, 0); __ubs_v; })
#define __ubs_addr(p, e) ({ __typeof__((e) + 0) __ubs_v = (e); __ubs_log(3, (p), (unsigned long long)__ubs_v, 0); __ubs_v; })
#define __ubs_freed(p, e) ({ __typeof__((e) + 0) __ubs_v = (e); __ubs_log(4, (p), (unsigned long long)__ubs_v, 0); __ubs_v; })
#define __ubs_malloc(p, n) ({ unsigned long __ubs_n = (n); void *__ubs_m = malloc(__ubs_n); __ubs_log(1, (p), (unsigned long long)__ubs_m, __ubs_n); __ubs_m; })
#define __ubs_range(p, a, s) __ubs_log(1, (p), (unsigned long long)(a), (s))
#define __ubs_enter(p) __ubs_log(5, (p), 0, 0)
"#;
