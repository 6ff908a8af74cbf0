//! Tree traversal helpers.

use super::ast::*;

pub trait Visitor: Sized {
    fn visit_item(&mut self, item: &Item) {
        walk_item(self, item)
    }
    fn visit_func(&mut self, f: &FuncDef) {
        walk_func(self, f)
    }
    fn visit_block(&mut self, b: &Block) {
        walk_block(self, b)
    }
    fn visit_stmt(&mut self, s: &Stmt) {
        walk_stmt(self, s)
    }
    fn visit_decl(&mut self, d: &Decl) {
        walk_decl(self, d)
    }
    fn visit_declarator(&mut self, d: &Declarator) {
        walk_declarator(self, d)
    }
    fn visit_expr(&mut self, e: &Expr) {
        walk_expr(self, e)
    }
}

pub fn walk_ast<V: Visitor>(v: &mut V, ast: &Ast) {
    for item in &ast.items {
        v.visit_item(item);
    }
}

pub fn walk_item<V: Visitor>(v: &mut V, item: &Item) {
    match item {
        Item::Include { .. } | Item::Struct(_) => {}
        Item::Global(s) => v.visit_stmt(s),
        Item::Func(f) => v.visit_func(f),
    }
}

pub fn walk_func<V: Visitor>(v: &mut V, f: &FuncDef) {
    if let Some(b) = &f.body {
        v.visit_block(b);
    }
}

pub fn walk_block<V: Visitor>(v: &mut V, b: &Block) {
    for s in &b.stmts {
        v.visit_stmt(s);
    }
}

pub fn walk_stmt<V: Visitor>(v: &mut V, s: &Stmt) {
    match &s.kind {
        StmtKind::Expr(e) => v.visit_expr(e),
        StmtKind::Decl(d) => v.visit_decl(d),
        StmtKind::Block(b) => v.visit_block(b),
        StmtKind::If { cond, then, els } => {
            v.visit_expr(cond);
            v.visit_stmt(then);
            if let Some(e) = els {
                v.visit_stmt(e);
            }
        }
        StmtKind::While { cond, body } => {
            v.visit_expr(cond);
            v.visit_stmt(body);
        }
        StmtKind::For {
            init,
            cond,
            step,
            body,
        } => {
            match init {
                Some(ForInit::Decl(d)) => v.visit_decl(d),
                Some(ForInit::Expr(e)) => v.visit_expr(e),
                None => {}
            }
            if let Some(c) = cond {
                v.visit_expr(c);
            }
            if let Some(st) = step {
                v.visit_expr(st);
            }
            v.visit_stmt(body);
        }
        StmtKind::Return(Some(e)) => v.visit_expr(e),
        StmtKind::Return(None) | StmtKind::Break | StmtKind::Continue | StmtKind::Empty => {}
    }
}

pub fn walk_decl<V: Visitor>(v: &mut V, d: &Decl) {
    for dc in &d.declarators {
        v.visit_declarator(dc);
    }
}

pub fn walk_declarator<V: Visitor>(v: &mut V, d: &Declarator) {
    if let Some(init) = &d.init {
        walk_init(v, init);
    }
}

fn walk_init<V: Visitor>(v: &mut V, init: &Initializer) {
    match init {
        Initializer::Expr(e) => v.visit_expr(e),
        Initializer::List(items) => {
            for i in items {
                walk_init(v, i);
            }
        }
    }
}

pub fn walk_expr<V: Visitor>(v: &mut V, e: &Expr) {
    for c in expr_children(e) {
        v.visit_expr(c);
    }
}

/// Direct subexpressions in evaluation-agnostic source order.
pub fn expr_children(e: &Expr) -> Vec<&Expr> {
    match &e.kind {
        ExprKind::IntLit { .. }
        | ExprKind::CharLit { .. }
        | ExprKind::StrLit(_)
        | ExprKind::Ident(_)
        | ExprKind::SizeofType(_) => vec![],
        ExprKind::Paren(x) | ExprKind::SizeofExpr(x) => vec![x],
        ExprKind::Unary { operand, .. } => vec![operand],
        ExprKind::Binary { lhs, rhs, .. } | ExprKind::Assign { lhs, rhs, .. } => vec![lhs, rhs],
        ExprKind::Cond { cond, then, els } => vec![cond, then, els],
        ExprKind::Call { args, .. } => args.iter().collect(),
        ExprKind::Index { base, index } => vec![base, index],
        ExprKind::Member { base, .. } => vec![base],
        ExprKind::Cast { expr, .. } => vec![expr],
    }
}

pub fn expr_children_mut(e: &mut Expr) -> Vec<&mut Expr> {
    match &mut e.kind {
        ExprKind::IntLit { .. }
        | ExprKind::CharLit { .. }
        | ExprKind::StrLit(_)
        | ExprKind::Ident(_)
        | ExprKind::SizeofType(_) => vec![],
        ExprKind::Paren(x) | ExprKind::SizeofExpr(x) => vec![x],
        ExprKind::Unary { operand, .. } => vec![operand],
        ExprKind::Binary { lhs, rhs, .. } | ExprKind::Assign { lhs, rhs, .. } => vec![lhs, rhs],
        ExprKind::Cond { cond, then, els } => vec![cond, then, els],
        ExprKind::Call { args, .. } => args.iter_mut().collect(),
        ExprKind::Index { base, index } => vec![base, index],
        ExprKind::Member { base, .. } => vec![base],
        ExprKind::Cast { expr, .. } => vec![expr],
    }
}

/// Pre-order walk over an expression tree.
pub fn walk_expr_tree<'a>(e: &'a Expr, f: &mut impl FnMut(&'a Expr)) {
    f(e);
    for c in expr_children(e) {
        walk_expr_tree(c, f);
    }
}

/// Mutable walk over every statement-level expression (pre-order over
/// statements), used by rewriting passes.
pub fn for_each_expr_mut(ast: &mut Ast, f: &mut impl FnMut(&mut Expr)) {
    fn expr(e: &mut Expr, f: &mut impl FnMut(&mut Expr)) {
        f(e);
        for c in expr_children_mut(e) {
            expr(c, f);
        }
    }
    fn init(i: &mut Initializer, f: &mut impl FnMut(&mut Expr)) {
        match i {
            Initializer::Expr(e) => expr(e, f),
            Initializer::List(items) => items.iter_mut().for_each(|i| init(i, f)),
        }
    }
    fn decl(d: &mut Decl, f: &mut impl FnMut(&mut Expr)) {
        for dc in &mut d.declarators {
            if let Some(i) = &mut dc.init {
                init(i, f);
            }
        }
    }
    fn stmt(s: &mut Stmt, f: &mut impl FnMut(&mut Expr)) {
        match &mut s.kind {
            StmtKind::Expr(e) => expr(e, f),
            StmtKind::Decl(d) => decl(d, f),
            StmtKind::Block(b) => b.stmts.iter_mut().for_each(|s| stmt(s, f)),
            StmtKind::If { cond, then, els } => {
                expr(cond, f);
                stmt(then, f);
                if let Some(e) = els {
                    stmt(e, f);
                }
            }
            StmtKind::While { cond, body } => {
                expr(cond, f);
                stmt(body, f);
            }
            StmtKind::For {
                init: fi,
                cond,
                step,
                body,
            } => {
                match fi {
                    Some(ForInit::Decl(d)) => decl(d, f),
                    Some(ForInit::Expr(e)) => expr(e, f),
                    None => {}
                }
                if let Some(c) = cond {
                    expr(c, f);
                }
                if let Some(c) = step {
                    expr(c, f);
                }
                stmt(body, f);
            }
            StmtKind::Return(Some(e)) => expr(e, f),
            _ => {}
        }
    }
    for item in &mut ast.items {
        match item {
            Item::Global(s) => stmt(s, f),
            Item::Func(func) => {
                if let Some(b) = &mut func.body {
                    b.stmts.iter_mut().for_each(|s| stmt(s, f));
                }
            }
            _ => {}
        }
    }
}

/// Calls `f` on every identifier spelling in the unit: declared names,
/// parameters, functions, struct tags and fields, and uses.
pub fn for_each_name(ast: &Ast, f: &mut impl FnMut(&str)) {
    struct Names<'f, F: FnMut(&str)>(&'f mut F);
    impl<F: FnMut(&str)> Visitor for Names<'_, F> {
        fn visit_func(&mut self, func: &FuncDef) {
            (self.0)(&func.name);
            for p in &func.params {
                (self.0)(&p.name);
            }
            walk_func(self, func);
        }
        fn visit_declarator(&mut self, d: &Declarator) {
            (self.0)(&d.name);
            walk_declarator(self, d);
        }
        fn visit_expr(&mut self, e: &Expr) {
            match &e.kind {
                ExprKind::Ident(n) => (self.0)(n),
                ExprKind::Call { callee, .. } => (self.0)(callee),
                ExprKind::Member { field, .. } => (self.0)(field),
                _ => {}
            }
            walk_expr(self, e);
        }
    }
    for item in &ast.items {
        if let Item::Struct(s) = item {
            f(&s.name);
            for fld in &s.fields {
                f(&fld.declarator.name);
            }
        }
    }
    walk_ast(&mut Names(f), ast);
}

/// Calls `f` on the id and location of every node.
pub fn for_each_meta_mut(ast: &mut Ast, f: &mut impl FnMut(&mut NodeId, &mut SourceLoc)) {
    fn expr(e: &mut Expr, f: &mut impl FnMut(&mut NodeId, &mut SourceLoc)) {
        f(&mut e.id, &mut e.loc);
        for c in expr_children_mut(e) {
            expr(c, f);
        }
    }
    fn init(i: &mut Initializer, f: &mut impl FnMut(&mut NodeId, &mut SourceLoc)) {
        match i {
            Initializer::Expr(e) => expr(e, f),
            Initializer::List(items) => items.iter_mut().for_each(|i| init(i, f)),
        }
    }
    fn decl(d: &mut Decl, f: &mut impl FnMut(&mut NodeId, &mut SourceLoc)) {
        for dc in &mut d.declarators {
            f(&mut dc.id, &mut dc.loc);
            if let Some(i) = &mut dc.init {
                init(i, f);
            }
        }
    }
    fn block(b: &mut Block, f: &mut impl FnMut(&mut NodeId, &mut SourceLoc)) {
        f(&mut b.id, &mut b.loc);
        b.stmts.iter_mut().for_each(|s| stmt(s, f));
    }
    fn stmt(s: &mut Stmt, f: &mut impl FnMut(&mut NodeId, &mut SourceLoc)) {
        f(&mut s.id, &mut s.loc);
        match &mut s.kind {
            StmtKind::Expr(e) => expr(e, f),
            StmtKind::Decl(d) => decl(d, f),
            StmtKind::Block(b) => block(b, f),
            StmtKind::If { cond, then, els } => {
                expr(cond, f);
                stmt(then, f);
                if let Some(e) = els {
                    stmt(e, f);
                }
            }
            StmtKind::While { cond, body } => {
                expr(cond, f);
                stmt(body, f);
            }
            StmtKind::For {
                init: fi,
                cond,
                step,
                body,
            } => {
                match fi {
                    Some(ForInit::Decl(d)) => decl(d, f),
                    Some(ForInit::Expr(e)) => expr(e, f),
                    None => {}
                }
                if let Some(c) = cond {
                    expr(c, f);
                }
                if let Some(c) = step {
                    expr(c, f);
                }
                stmt(body, f);
            }
            StmtKind::Return(Some(e)) => expr(e, f),
            _ => {}
        }
    }
    for item in &mut ast.items {
        match item {
            Item::Include { id, loc, .. } => f(id, loc),
            Item::Struct(s) => {
                f(&mut s.id, &mut s.loc);
                for fld in &mut s.fields {
                    f(&mut fld.id, &mut fld.loc);
                    f(&mut fld.declarator.id, &mut fld.declarator.loc);
                }
            }
            Item::Global(s) => stmt(s, f),
            Item::Func(func) => {
                f(&mut func.id, &mut func.loc);
                for p in &mut func.params {
                    f(&mut p.id, &mut p.loc);
                }
                if let Some(b) = &mut func.body {
                    block(b, f);
                }
            }
        }
    }
}
