use crate::lang::visit::{expr_children_mut, for_each_expr_mut};
use crate::lang::*;
use crate::matching::MatchSite;

use super::{Effect, Rewrite, Seed, ShadowStmt, SynthError, UbProgram};

/// The seed with a shadow statement applied.
#[derive(Clone, Debug)]
pub struct Inserted {
    pub ast: Ast,
    /// Node whose evaluation is the planted UB.
    pub planted: NodeId,
    /// Target expression before and after the rewrite.
    pub before: String,
    pub after: String,
}

struct Builder {
    next: NodeId,
}

impl Builder {
    fn id(&mut self) -> NodeId {
        let id = self.next;
        self.next += 1;
        id
    }

    fn expr(&mut self, kind: ExprKind) -> Expr {
        Expr {
            id: self.id(),
            loc: SourceLoc::default(),
            kind,
        }
    }

    fn ident(&mut self, name: &str) -> Expr {
        self.expr(ExprKind::Ident(name.to_string()))
    }

    fn lit(&mut self, v: u64, suffix: &str) -> Expr {
        self.expr(ExprKind::IntLit {
            value: v,
            text: format!("{v}{suffix}"),
        })
    }

    fn paren(&mut self, e: Expr) -> Expr {
        self.expr(ExprKind::Paren(Box::new(e)))
    }

    fn unary(&mut self, op: UnOp, e: Expr) -> Expr {
        self.expr(ExprKind::Unary {
            op,
            operand: Box::new(e),
        })
    }

    fn binary(&mut self, op: BinOp, lhs: Expr, rhs: Expr) -> Expr {
        self.expr(ExprKind::Binary {
            op,
            lhs: Box::new(lhs),
            rhs: Box::new(rhs),
        })
    }

    fn assign(&mut self, lhs: Expr, rhs: Expr) -> Expr {
        self.expr(ExprKind::Assign {
            op: None,
            lhs: Box::new(lhs),
            rhs: Box::new(rhs),
        })
    }

    fn stmt(&mut self, kind: StmtKind) -> Stmt {
        Stmt {
            id: self.id(),
            loc: SourceLoc::default(),
            kind,
        }
    }

    fn expr_stmt(&mut self, e: Expr) -> Stmt {
        self.stmt(StmtKind::Expr(e))
    }

    fn decl(&mut self, ty: &Type, name: &str) -> Stmt {
        let tn = TypeName::for_type(ty);
        let declarator = Declarator {
            id: self.id(),
            loc: SourceLoc::default(),
            name: name.to_string(),
            ptr_quals: tn.ptr_quals,
            dims: Vec::new(),
            init: None,
        };
        self.stmt(StmtKind::Decl(Decl {
            base: tn.base,
            declarators: vec![declarator],
        }))
    }

    /// Copy of a seed expression with fresh ids.
    fn copy(&mut self, e: &Expr) -> Expr {
        let mut e = e.clone();
        self.renumber(&mut e);
        e
    }

    fn renumber(&mut self, e: &mut Expr) {
        e.id = self.id();
        for c in expr_children_mut(e) {
            self.renumber(c);
        }
    }

    fn constant(&mut self, v: i128, ty: IntTy) -> Expr {
        let suffix = suffix(v.unsigned_abs(), ty);
        if v >= 0 {
            return self.lit(v as u64, suffix);
        }
        let mag = v.unsigned_abs();
        if mag > i64::MAX as u128 {
            // The magnitude of the minimum has no literal of the signed type.
            let one = self.lit(1, "");
            let m = self.lit((mag - 1) as u64, suffix);
            let neg = self.unary(UnOp::Neg, m);
            let sub = self.binary(BinOp::Sub, neg, one);
            return self.paren(sub);
        }
        let m = self.lit(mag as u64, suffix);
        self.unary(UnOp::Neg, m)
    }
}

fn suffix(mag: u128, ty: IntTy) -> &'static str {
    match (ty.signed(), ty.bytes() > 4 || mag > u32::MAX as u128) {
        (false, false) => "U",
        (false, true) => "UL",
        (true, _) if mag > i32::MAX as u128 => "L",
        (true, _) => "",
    }
}

/// Spelling of a constant as emitted.
pub(super) fn const_text(v: i128, ty: IntTy) -> String {
    let mut b = Builder { next: 0 };
    expr_to_string(&b.constant(v, ty))
}

/// Binds looser than `+`, so needs parentheses as an addend.
fn loose(e: &Expr) -> bool {
    match &e.kind {
        ExprKind::Assign { .. } | ExprKind::Cond { .. } => true,
        ExprKind::Binary { op, .. } => op.precedence() < BinOp::Add.precedence(),
        _ => false,
    }
}

impl Builder {
    /// `e + aux`, parenthesized when `wrap` is set.
    fn offset(&mut self, e: Expr, aux: &str, wrap: bool) -> Expr {
        if wrap {
            if let ExprKind::Paren(inner) = &e.kind {
                if matches!(inner.kind, ExprKind::Binary { op: BinOp::Add | BinOp::Sub, .. }) {
                    let ExprKind::Paren(inner) = e.kind else { unreachable!() };
                    let a = self.ident(aux);
                    let sum = self.binary(BinOp::Add, *inner, a);
                    return Expr {
                        kind: ExprKind::Paren(Box::new(sum)),
                        ..e
                    };
                }
            }
        }
        let lhs = if loose(&e) { self.paren(e) } else { e };
        let a = self.ident(aux);
        let sum = self.binary(BinOp::Add, lhs, a);
        if wrap {
            self.paren(sum)
        } else {
            sum
        }
    }

    fn rewrite(&mut self, e: &mut Expr, rw: &Rewrite) -> NodeId {
        let placeholder = || Expr {
            id: 0,
            loc: SourceLoc::default(),
            kind: ExprKind::Ident(String::new()),
        };
        match rw {
            Rewrite::Keep => e.id,
            Rewrite::Offset(slots) => {
                for (slot, aux) in slots {
                    let (child, wrap) = match (&mut e.kind, slot) {
                        (ExprKind::Index { base, .. }, 0) => (base, true),
                        (ExprKind::Index { index, .. }, _) => (index, false),
                        (ExprKind::Unary { operand, .. }, _) => (operand, true),
                        (ExprKind::Binary { lhs, .. }, 0) => (lhs, true),
                        (ExprKind::Binary { rhs, .. }, _) => (rhs, true),
                        (ExprKind::Assign { lhs, .. }, 0) => (lhs, true),
                        (ExprKind::Assign { rhs, .. }, _) => (rhs, false),
                        _ => unreachable!("offset rewrite on a non-operator"),
                    };
                    let old = std::mem::replace(child.as_mut(), placeholder());
                    **child = self.offset(old, aux, wrap);
                }
                e.id
            }
            Rewrite::Step(aux) => {
                let ExprKind::Unary { op, operand } = std::mem::replace(&mut e.kind, ExprKind::Ident(String::new())) else {
                    unreachable!("step rewrite on a non-increment")
                };
                let bin = if matches!(op, UnOp::PreInc | UnOp::PostInc) { BinOp::Add } else { BinOp::Sub };
                let one = self.lit(1, "");
                let a = self.ident(aux);
                let rhs = self.binary(BinOp::Add, one, a);
                e.kind = ExprKind::Assign {
                    op: Some(bin),
                    lhs: operand,
                    rhs: Box::new(rhs),
                };
                e.id
            }
            Rewrite::CondPlus(aux) => {
                let old = std::mem::replace(e, placeholder());
                let lhs = if matches!(
                    old.kind,
                    ExprKind::Ident(_) | ExprKind::IntLit { .. } | ExprKind::Paren(_) | ExprKind::Call { .. }
                ) {
                    old
                } else {
                    self.paren(old)
                };
                let a = self.ident(aux);
                *e = self.binary(BinOp::Add, lhs, a);
                e.id
            }
        }
    }

    fn prelude(&mut self, shadow: &ShadowStmt) -> Vec<Stmt> {
        let mut out = Vec::new();
        for a in &shadow.decls {
            out.push(self.decl(&Type::Int(a.ty), &a.name));
        }
        for a in &shadow.decls {
            if let Some(v) = a.value {
                let lhs = self.ident(&a.name);
                let rhs = self.constant(v, a.ty);
                let asg = self.assign(lhs, rhs);
                out.push(self.expr_stmt(asg));
            }
        }
        match &shadow.effect {
            Some(Effect::Null { ptr }) => {
                let lhs = self.copy(ptr);
                let zero = self.lit(0, "");
                let asg = self.assign(lhs, zero);
                out.push(self.expr_stmt(asg));
            }
            Some(Effect::Scope { ptr, pointee, tmp }) => {
                let decl = self.decl(pointee, tmp);
                let lhs = self.copy(ptr);
                let t = self.ident(tmp);
                let addr = self.unary(UnOp::AddrOf, t);
                let asg = self.assign(lhs, addr);
                let set = self.expr_stmt(asg);
                let block = Block {
                    id: self.id(),
                    loc: SourceLoc::default(),
                    stmts: vec![decl, set],
                };
                out.push(self.stmt(StmtKind::Block(block)));
            }
            Some(Effect::Free { ptr, offset }) => {
                let p = self.copy(ptr);
                let arg = if *offset == 0 {
                    p
                } else {
                    let inner = self.paren(p);
                    let cast = self.expr(ExprKind::Cast {
                        ty: TypeName::for_type(&Type::ptr_to(Type::Int(IntTy::Char))),
                        expr: Box::new(inner),
                    });
                    let off = self.lit(*offset, "");
                    self.binary(BinOp::Sub, cast, off)
                };
                let call = self.expr(ExprKind::Call {
                    callee: "free".to_string(),
                    args: vec![arg],
                });
                out.push(self.expr_stmt(call));
            }
            None => {}
        }
        out
    }
}

fn splice(stmts: &mut Vec<Stmt>, anchor: NodeId, new: &mut Vec<Stmt>) -> bool {
    if let Some(i) = stmts.iter().position(|s| s.id == anchor) {
        let tail = stmts.split_off(i);
        stmts.append(new);
        stmts.extend(tail);
        return true;
    }
    stmts.iter_mut().any(|s| splice_stmt(s, anchor, new))
}

fn splice_stmt(s: &mut Stmt, anchor: NodeId, new: &mut Vec<Stmt>) -> bool {
    match &mut s.kind {
        StmtKind::Block(b) => splice(&mut b.stmts, anchor, new),
        StmtKind::If { then, els, .. } => {
            splice_stmt(then, anchor, new) || els.as_mut().is_some_and(|e| splice_stmt(e, anchor, new))
        }
        StmtKind::While { body, .. } | StmtKind::For { body, .. } => splice_stmt(body, anchor, new),
        _ => false,
    }
}

/// Places the shadow statement's lines before its anchor and rewrites the
/// target. The result is relocated to its printed layout; seed node ids are
/// kept.
pub fn insert(ast: &Ast, shadow: &ShadowStmt) -> Result<Inserted, SynthError> {
    let mut out = ast.clone();
    let mut b = Builder { next: out.next_id };
    let mut found = None;
    for_each_expr_mut(&mut out, &mut |e| {
        if found.is_none() && e.id == shadow.site {
            let before = expr_to_string(e);
            let planted = b.rewrite(e, &shadow.rewrite);
            found = Some((planted, before, expr_to_string(e)));
        }
    });
    let (planted, before, after) = found.ok_or(SynthError::SiteNotFound(shadow.site))?;
    let mut lines = b.prelude(shadow);
    let mut placed = false;
    for item in &mut out.items {
        if let Item::Func(f) = item {
            if let Some(body) = &mut f.body {
                if splice(&mut body.stmts, shadow.anchor, &mut lines) {
                    placed = true;
                    break;
                }
            }
        }
    }
    if !placed {
        return Err(SynthError::AnchorNotFound(shadow.anchor));
    }
    out.next_id = b.next;
    relocate(&mut out);
    Ok(Inserted {
        ast: out,
        planted,
        before,
        after,
    })
}

/// Inserts, prints, and checks that the text parses back to the same tree.
pub(super) fn emit(seed: &Seed, site: &MatchSite, shadow: &ShadowStmt) -> Result<UbProgram, SynthError> {
    let ins = insert(&seed.ast, shadow)?;
    let source = print_program(&ins.ast);
    let back = parse_program(&source).map_err(SynthError::Reparse)?;
    if !back.same_shape(&ins.ast) {
        return Err(SynthError::Reparse(ParseError::new(0, 0, "printed program changes shape")));
    }
    let planted_site = locate(&ins.ast, ins.planted).map_err(|_| SynthError::SiteNotFound(ins.planted))?;
    Ok(UbProgram {
        kind: shadow.kind,
        planted_site,
        seed_id: seed.id.clone(),
        site: site.node_id,
        construct: site.construct,
        shadow: format!("{} | {} -> {}", shadow.text(), ins.before, ins.after),
        source,
    })
}
