//! Deterministic pretty-printer: one statement per line, two-space indent.
//!
//! The printer defines the layout of every emitted program, so the
//! locations it records are the ones later stages (profiling, crash-site
//! comparison) refer to.

use std::collections::BTreeMap;

use super::ast::*;

pub struct Printer {
    out: String,
    line: u32,
    col: u32,
    locs: BTreeMap<NodeId, SourceLoc>,
}

impl Printer {
    fn new() -> Self {
        Printer {
            out: String::new(),
            line: 1,
            col: 1,
            locs: BTreeMap::new(),
        }
    }

    fn w(&mut self, s: &str) {
        for c in s.chars() {
            if c == '\n' {
                self.line += 1;
                self.col = 1;
            } else {
                self.col += 1;
            }
        }
        self.out.push_str(s);
    }

    fn mark(&mut self, id: NodeId) {
        self.locs.insert(id, SourceLoc::new(self.line, self.col));
    }

    fn indent(&mut self, n: usize) {
        for _ in 0..n {
            self.w("  ");
        }
    }

    fn item(&mut self, item: &Item) {
        match item {
            Item::Include { id, text, .. } => {
                self.mark(*id);
                self.w(text);
                self.w("\n");
            }
            Item::Struct(s) => {
                self.mark(s.id);
                self.w(&format!("struct {} {{\n", s.name));
                for f in &s.fields {
                    self.indent(1);
                    self.mark(f.id);
                    self.base(&f.base);
                    self.w(" ");
                    self.declarator(&f.declarator);
                    self.w(";\n");
                }
                self.w("};\n");
            }
            Item::Global(s) => self.stmt(s, 0),
            Item::Func(f) => {
                self.mark(f.id);
                self.type_name(&f.ret);
                self.w(" ");
                self.w(&f.name);
                self.w("(");
                for (i, p) in f.params.iter().enumerate() {
                    if i > 0 {
                        self.w(", ");
                    }
                    self.mark(p.id);
                    self.base(&p.base);
                    self.w(" ");
                    self.stars(&p.ptr_quals);
                    self.w(&p.name);
                }
                self.w(")");
                match &f.body {
                    None => self.w(";\n"),
                    Some(b) => {
                        self.w(" ");
                        self.block(b, 0);
                        self.w("\n");
                    }
                }
            }
        }
    }

    fn base(&mut self, b: &BaseType) {
        for q in &b.quals {
            self.w(q);
            self.w(" ");
        }
        self.w(&b.spelling);
    }

    fn stars(&mut self, levels: &[Vec<String>]) {
        for q in levels {
            self.w("*");
            if !q.is_empty() {
                self.w(" ");
                self.w(&q.join(" "));
                self.w(" ");
            }
        }
    }

    fn type_name(&mut self, t: &TypeName) {
        self.base(&t.base);
        if !t.ptr_quals.is_empty() {
            self.w(" ");
            for (i, q) in t.ptr_quals.iter().enumerate() {
                self.w("*");
                if !q.is_empty() {
                    self.w(" ");
                    self.w(&q.join(" "));
                    if i + 1 < t.ptr_quals.len() {
                        self.w(" ");
                    }
                }
            }
        }
    }

    fn declarator(&mut self, d: &Declarator) {
        self.mark(d.id);
        self.stars(&d.ptr_quals);
        self.w(&d.name);
        for n in &d.dims {
            self.w(&format!("[{n}]"));
        }
        if let Some(init) = &d.init {
            self.w(" = ");
            self.init(init);
        }
    }

    fn init(&mut self, i: &Initializer) {
        match i {
            Initializer::Expr(e) => self.expr(e),
            Initializer::List(items) => {
                self.w("{");
                for (k, it) in items.iter().enumerate() {
                    if k > 0 {
                        self.w(", ");
                    }
                    self.init(it);
                }
                self.w("}");
            }
        }
    }

    fn decl(&mut self, d: &Decl) {
        self.base(&d.base);
        self.w(" ");
        for (i, dc) in d.declarators.iter().enumerate() {
            if i > 0 {
                self.w(", ");
            }
            self.declarator(dc);
        }
    }

    fn block(&mut self, b: &Block, ind: usize) {
        self.mark(b.id);
        self.w("{\n");
        for s in &b.stmts {
            self.stmt(s, ind + 1);
        }
        self.indent(ind);
        self.w("}");
    }

    /// Body of if/while/for: braces stay on the header line.
    fn body(&mut self, s: &Stmt, ind: usize) -> bool {
        if let StmtKind::Block(b) = &s.kind {
            self.w(" ");
            self.mark(s.id);
            self.block(b, ind);
            true
        } else {
            self.w("\n");
            self.stmt(s, ind + 1);
            false
        }
    }

    fn stmt(&mut self, s: &Stmt, ind: usize) {
        self.indent(ind);
        self.stmt_inline(s, ind);
    }

    fn stmt_inline(&mut self, s: &Stmt, ind: usize) {
        self.mark(s.id);
        match &s.kind {
            StmtKind::Expr(e) => {
                self.expr(e);
                self.w(";\n");
            }
            StmtKind::Decl(d) => {
                self.decl(d);
                self.w(";\n");
            }
            StmtKind::Block(b) => {
                self.block(b, ind);
                self.w("\n");
            }
            StmtKind::If { cond, then, els } => {
                self.w("if (");
                self.expr(cond);
                self.w(")");
                let braced = self.body(then, ind);
                match els {
                    None => {
                        if braced {
                            self.w("\n");
                        }
                    }
                    Some(e) => {
                        if braced {
                            self.w(" else");
                        } else {
                            self.indent(ind);
                            self.w("else");
                        }
                        match &e.kind {
                            StmtKind::If { .. } => {
                                self.w(" ");
                                self.stmt_inline(e, ind);
                            }
                            _ => {
                                if self.body(e, ind) {
                                    self.w("\n");
                                }
                            }
                        }
                    }
                }
            }
            StmtKind::While { cond, body } => {
                self.w("while (");
                self.expr(cond);
                self.w(")");
                if self.body(body, ind) {
                    self.w("\n");
                }
            }
            StmtKind::For {
                init,
                cond,
                step,
                body,
            } => {
                self.w("for (");
                match init {
                    Some(ForInit::Decl(d)) => self.decl(d),
                    Some(ForInit::Expr(e)) => self.expr(e),
                    None => {}
                }
                self.w(";");
                if let Some(c) = cond {
                    self.w(" ");
                    self.expr(c);
                }
                self.w(";");
                if let Some(c) = step {
                    self.w(" ");
                    self.expr(c);
                }
                self.w(")");
                if self.body(body, ind) {
                    self.w("\n");
                }
            }
            StmtKind::Return(e) => {
                self.w("return");
                if let Some(e) = e {
                    self.w(" ");
                    self.expr(e);
                }
                self.w(";\n");
            }
            StmtKind::Break => self.w("break;\n"),
            StmtKind::Continue => self.w("continue;\n"),
            StmtKind::Empty => self.w(";\n"),
        }
    }

    fn expr(&mut self, e: &Expr) {
        self.mark(e.id);
        match &e.kind {
            ExprKind::IntLit { text, .. } => self.w(text),
            ExprKind::CharLit { text, .. } => self.w(text),
            ExprKind::StrLit(s) => {
                self.w("\"");
                self.w(s);
                self.w("\"");
            }
            ExprKind::Ident(n) => self.w(n),
            ExprKind::Paren(x) => {
                self.w("(");
                self.expr(x);
                self.w(")");
            }
            ExprKind::Unary { op, operand } => {
                if op.is_postfix() {
                    self.expr(operand);
                    self.w(op.symbol());
                } else {
                    let sym = op.symbol();
                    self.w(sym);
                    let last = sym.chars().last().unwrap_or(' ');
                    if matches!(last, '+' | '-' | '&') && first_char(operand) == last {
                        self.w(" ");
                    }
                    self.expr(operand);
                }
            }
            ExprKind::Binary { op, lhs, rhs } => {
                self.expr(lhs);
                self.w(" ");
                self.w(op.symbol());
                self.w(" ");
                self.expr(rhs);
            }
            ExprKind::Assign { op, lhs, rhs } => {
                self.expr(lhs);
                match op {
                    None => self.w(" = "),
                    Some(op) => {
                        self.w(" ");
                        self.w(op.symbol());
                        self.w("= ");
                    }
                }
                self.expr(rhs);
            }
            ExprKind::Cond { cond, then, els } => {
                self.expr(cond);
                self.w(" ? ");
                self.expr(then);
                self.w(" : ");
                self.expr(els);
            }
            ExprKind::Call { callee, args } => {
                self.w(callee);
                self.w("(");
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        self.w(", ");
                    }
                    self.expr(a);
                }
                self.w(")");
            }
            ExprKind::Index { base, index } => {
                self.expr(base);
                self.w("[");
                self.expr(index);
                self.w("]");
            }
            ExprKind::Member { base, field, arrow } => {
                self.expr(base);
                self.w(if *arrow { "->" } else { "." });
                self.w(field);
            }
            ExprKind::Cast { ty, expr } => {
                self.w("(");
                self.type_name(ty);
                self.w(")");
                self.expr(expr);
            }
            ExprKind::SizeofType(t) => {
                self.w("sizeof(");
                self.type_name(t);
                self.w(")");
            }
            ExprKind::SizeofExpr(x) => {
                if matches!(x.kind, ExprKind::Paren(_)) {
                    self.w("sizeof");
                } else {
                    self.w("sizeof ");
                }
                self.expr(x);
            }
        }
    }
}

fn first_char(e: &Expr) -> char {
    match &e.kind {
        ExprKind::IntLit { text, .. } | ExprKind::CharLit { text, .. } => {
            text.chars().next().unwrap_or('0')
        }
        ExprKind::StrLit(_) => '"',
        ExprKind::Ident(n) => n.chars().next().unwrap_or('_'),
        ExprKind::Paren(_) | ExprKind::Cast { .. } => '(',
        ExprKind::Unary { op, operand } => {
            if op.is_postfix() {
                first_char(operand)
            } else {
                op.symbol().chars().next().unwrap_or(' ')
            }
        }
        ExprKind::Binary { lhs, .. } | ExprKind::Assign { lhs, .. } => first_char(lhs),
        ExprKind::Cond { cond, .. } => first_char(cond),
        ExprKind::Call { callee, .. } => callee.chars().next().unwrap_or('_'),
        ExprKind::Index { base, .. } | ExprKind::Member { base, .. } => first_char(base),
        ExprKind::SizeofType(_) | ExprKind::SizeofExpr(_) => 's',
    }
}

/// Prints a unit; also returns the printed location of every node.
pub fn print_with_locs(ast: &Ast) -> (String, BTreeMap<NodeId, SourceLoc>) {
    let mut p = Printer::new();
    for item in &ast.items {
        p.item(item);
    }
    (p.out, p.locs)
}

/// Prints a single expression in isolation.
pub fn expr_to_string(e: &Expr) -> String {
    let mut p = Printer::new();
    p.expr(e);
    p.out
}

/// Prints a type name as it would appear in a cast.
pub fn type_name_to_string(t: &TypeName) -> String {
    let mut p = Printer::new();
    p.type_name(t);
    p.out
}
