//! The C subset: lexing, parsing, scope resolution and printing.

pub mod ast;
pub mod lexer;
pub mod parser;
pub mod printer;
pub mod sema;
pub mod types;
pub mod visit;

use std::collections::BTreeMap;

use thiserror::Error;

pub use ast::*;
pub use printer::{expr_to_string, print_with_locs, type_name_to_string};
pub use sema::{analyze, DeclInfo, ScopeId, Sema, Storage};
pub use types::{IntTy, Layouts, Type};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("{line}:{offset}: {message}")]
pub struct ParseError {
    pub line: u32,
    pub offset: u32,
    pub message: String,
}

impl ParseError {
    pub fn new(line: u32, offset: u32, message: impl Into<String>) -> Self {
        ParseError {
            line,
            offset,
            message: message.into(),
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum LangError {
    #[error("unknown node {0}")]
    UnknownNode(NodeId),
}

/// Parses a unit and checks that every identifier resolves.
pub fn parse_program(source: &str) -> Result<Ast, ParseError> {
    let ast = parser::Parser::new(source)?.parse_unit()?;
    analyze(&ast)?;
    Ok(ast)
}

pub fn print_program(ast: &Ast) -> String {
    print_with_locs(ast).0
}

/// Parses and re-lays out a unit so that its locations describe the
/// printer's output rather than the original text.
pub fn canonicalize(source: &str) -> Result<Ast, ParseError> {
    let mut ast = parse_program(source)?;
    relocate(&mut ast);
    Ok(ast)
}

/// Rewrites every stored location to match `print_program(ast)`. Node ids are
/// kept.
pub fn relocate(ast: &mut Ast) {
    let (_, locs) = print_with_locs(ast);
    visit::for_each_meta_mut(ast, &mut |id, loc| {
        if let Some(l) = locs.get(id) {
            *loc = *l;
        }
    });
}

/// Every node id with its stored location.
pub fn node_table(ast: &Ast) -> BTreeMap<NodeId, SourceLoc> {
    let mut out = BTreeMap::new();
    let mut copy = ast.clone();
    visit::for_each_meta_mut(&mut copy, &mut |id, loc| {
        out.insert(*id, *loc);
    });
    out
}

pub fn locate(ast: &Ast, id: NodeId) -> Result<SourceLoc, LangError> {
    find_loc(ast, id).ok_or(LangError::UnknownNode(id))
}

fn find_loc(ast: &Ast, target: NodeId) -> Option<SourceLoc> {
    let mut found = None;
    let mut copy = ast.clone();
    visit::for_each_meta_mut(&mut copy, &mut |id, loc| {
        if *id == target && found.is_none() {
            found = Some(*loc);
        }
    });
    found
}

/// Finds the expression with the given id.
pub fn find_expr(ast: &Ast, target: NodeId) -> Option<&Expr> {
    struct F<'a> {
        target: NodeId,
        found: Option<&'a Expr>,
    }
    impl<'a> F<'a> {
        fn expr(&mut self, e: &'a Expr) {
            if self.found.is_some() {
                return;
            }
            if e.id == self.target {
                self.found = Some(e);
                return;
            }
            for c in visit::expr_children(e) {
                self.expr(c);
            }
        }
        fn init(&mut self, i: &'a Initializer) {
            match i {
                Initializer::Expr(e) => self.expr(e),
                Initializer::List(l) => l.iter().for_each(|i| self.init(i)),
            }
        }
        fn decl(&mut self, d: &'a Decl) {
            for dc in &d.declarators {
                if let Some(i) = &dc.init {
                    self.init(i);
                }
            }
        }
        fn stmt(&mut self, s: &'a Stmt) {
            match &s.kind {
                StmtKind::Expr(e) | StmtKind::Return(Some(e)) => self.expr(e),
                StmtKind::Decl(d) => self.decl(d),
                StmtKind::Block(b) => b.stmts.iter().for_each(|s| self.stmt(s)),
                StmtKind::If { cond, then, els } => {
                    self.expr(cond);
                    self.stmt(then);
                    if let Some(e) = els {
                        self.stmt(e);
                    }
                }
                StmtKind::While { cond, body } => {
                    self.expr(cond);
                    self.stmt(body);
                }
                StmtKind::For {
                    init,
                    cond,
                    step,
                    body,
                } => {
                    match init {
                        Some(ForInit::Decl(d)) => self.decl(d),
                        Some(ForInit::Expr(e)) => self.expr(e),
                        None => {}
                    }
                    if let Some(c) = cond {
                        self.expr(c);
                    }
                    if let Some(c) = step {
                        self.expr(c);
                    }
                    self.stmt(body);
                }
                _ => {}
            }
        }
    }
    let mut f = F {
        target,
        found: None,
    };
    for item in &ast.items {
        match item {
            Item::Global(s) => f.stmt(s),
            Item::Func(func) => {
                if let Some(b) = &func.body {
                    b.stmts.iter().for_each(|s| f.stmt(s));
                }
            }
            _ => {}
        }
    }
    f.found
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_program_locations() {
        let ast = parse_program("int main(){return 0;}").unwrap();
        assert_eq!(ast.functions().count(), 1);
        let f = ast.function("main").unwrap();
        let ret = &f.body.as_ref().unwrap().stmts[0];
        assert!(matches!(ret.kind, StmtKind::Return(Some(_))));
        assert_eq!(ret.loc, SourceLoc::new(1, 12));
        assert_eq!(locate(&ast, f.id).unwrap(), SourceLoc::new(1, 1));
        assert_eq!(locate(&ast, 9999), Err(LangError::UnknownNode(9999)));
    }

    #[test]
    fn empty_unit_prints_empty() {
        let ast = parse_program("").unwrap();
        assert_eq!(print_program(&ast), "");
    }

    #[test]
    fn undeclared_identifier_is_rejected() {
        let e = parse_program("int main(){ return y; }").unwrap_err();
        assert_eq!((e.line, e.offset), (1, 20));
    }

    #[test]
    fn unsupported_constructs_are_rejected() {
        for src in [
            "union u { int a; };",
            "typedef int t;",
            "int main(){ goto l; }",
            "int f(int a, ...);",
            "#define X 1\nint main(){return 0;}",
            "float x;",
        ] {
            assert!(parse_program(src).is_err(), "{src}");
        }
    }

    #[test]
    fn round_trip_preserves_shape() {
        let src = "#include <stdio.h>\nstruct S { int a; char *p; };\nint g[3] = {1, 2, 3};\n\
                   int f(int x, int *y) { if (x > 0) return *y; else { x = -x; } return x; }\n\
                   int main(void) { struct S s; int i; for (i = 0; i < 3; i++) g[i] += f(i, &g[0]);\n\
                   s.a = sizeof(int); s.p = 0; while (s.a) s.a--; printf(\"%d\\n\", g[1] << 2); return 0; }";
        let a = parse_program(src).unwrap();
        let printed = print_program(&a);
        let b = parse_program(&printed).unwrap();
        assert!(a.same_shape(&b), "{printed}");
        assert_eq!(print_program(&b), printed);
    }

    #[test]
    fn relocate_matches_reparse() {
        let src = "int main() { int a[5]; int x = 1; a[x] = 1; return a[1]; }";
        let a = canonicalize(src).unwrap();
        let b = parse_program(&print_program(&a)).unwrap();
        assert_eq!(
            node_table(&a).values().collect::<Vec<_>>(),
            node_table(&b).values().collect::<Vec<_>>()
        );
    }
}
