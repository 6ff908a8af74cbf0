//! Scope resolution and expression typing.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::ast::*;
use super::types::{IntTy, Layouts, Type};
use super::ParseError;

/// Identifies a lexical scope: 0 is file scope, otherwise the node id of the
/// block (or `for` statement) that opens it.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct ScopeId(pub NodeId);

impl ScopeId {
    pub const GLOBAL: ScopeId = ScopeId(0);
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Storage {
    Global,
    Local,
    Param,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeclInfo {
    pub id: NodeId,
    pub name: String,
    pub ty: Type,
    pub scope: ScopeId,
    pub storage: Storage,
    pub loc: SourceLoc,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuncSig {
    pub ret: Type,
    pub params: Vec<Type>,
}

/// Names of the runtime hooks inserted by instrumentation.
pub const HOOK_VAL: &str = "__ubs_val";
pub const HOOK_VALP: &str = "__ubs_valp";
pub const HOOK_ADDR: &str = "__ubs_addr";
pub const HOOK_MALLOC: &str = "__ubs_malloc";
pub const HOOK_FREED: &str = "__ubs_freed";
pub const HOOK_RANGE: &str = "__ubs_range";
pub const HOOK_ENTER: &str = "__ubs_enter";

pub fn is_builtin(name: &str) -> bool {
    matches!(name, "printf" | "malloc" | "free") || name.starts_with("__ubs_")
}

#[derive(Clone, Debug, Default)]
pub struct Sema {
    pub layouts: Layouts,
    pub decls: BTreeMap<NodeId, DeclInfo>,
    /// Identifier expression id to declaration id.
    pub uses: HashMap<NodeId, NodeId>,
    pub types: HashMap<NodeId, Type>,
    pub scope_parent: BTreeMap<ScopeId, ScopeId>,
    pub funcs: BTreeMap<String, FuncSig>,
    /// Statement id to the innermost scope it appears in.
    pub stmt_scope: HashMap<NodeId, ScopeId>,
}

impl Sema {
    pub fn type_of(&self, e: &Expr) -> &Type {
        self.types.get(&e.id).unwrap_or(&Type::Void)
    }

    pub fn decl_of(&self, ident_expr: NodeId) -> Option<&DeclInfo> {
        self.uses.get(&ident_expr).and_then(|d| self.decls.get(d))
    }

    /// True if `inner` is `outer` or nested inside it.
    pub fn scope_within(&self, inner: ScopeId, outer: ScopeId) -> bool {
        let mut s = inner;
        loop {
            if s == outer {
                return true;
            }
            match self.scope_parent.get(&s) {
                Some(p) if *p != s => s = *p,
                _ => return false,
            }
        }
    }

    pub fn size_of(&self, t: &Type) -> u64 {
        self.layouts.size_of(t)
    }
}

struct Resolver {
    sema: Sema,
    scopes: Vec<(ScopeId, HashMap<String, NodeId>)>,
}

type R<T> = Result<T, ParseError>;

fn err<T>(loc: SourceLoc, msg: impl Into<String>) -> R<T> {
    Err(ParseError::new(loc.line, loc.offset, msg))
}

pub fn analyze(ast: &Ast) -> R<Sema> {
    let mut r = Resolver {
        sema: Sema::default(),
        scopes: vec![(ScopeId::GLOBAL, HashMap::new())],
    };
    r.sema.scope_parent.insert(ScopeId::GLOBAL, ScopeId::GLOBAL);
    for item in &ast.items {
        match item {
            Item::Include { .. } => {}
            Item::Struct(s) => {
                if r.sema.layouts.structs.contains_key(&s.name) {
                    return err(s.loc, format!("redefinition of struct {}", s.name));
                }
                let mut fields = Vec::new();
                for f in &s.fields {
                    let ty = f.declarator.ty(&f.base.ty);
                    r.check_complete(&ty, f.loc)?;
                    fields.push((f.declarator.name.clone(), ty));
                }
                r.sema.layouts.add_struct(&s.name, &fields);
            }
            Item::Global(s) => {
                r.sema.stmt_scope.insert(s.id, ScopeId::GLOBAL);
                if let StmtKind::Decl(d) = &s.kind {
                    r.decl(d, Storage::Global)?;
                }
            }
            Item::Func(f) => r.func(f)?,
        }
    }
    Ok(r.sema)
}

impl Resolver {
    fn current_scope(&self) -> ScopeId {
        self.scopes.last().map(|s| s.0).unwrap_or(ScopeId::GLOBAL)
    }

    fn push_scope(&mut self, id: NodeId) {
        let parent = self.current_scope();
        self.sema.scope_parent.insert(ScopeId(id), parent);
        self.scopes.push((ScopeId(id), HashMap::new()));
    }

    fn lookup(&self, name: &str) -> Option<NodeId> {
        self.scopes.iter().rev().find_map(|(_, m)| m.get(name).copied())
    }

    fn check_complete(&self, ty: &Type, loc: SourceLoc) -> R<()> {
        match ty {
            Type::Struct(n) if !self.sema.layouts.structs.contains_key(n) => {
                err(loc, format!("unknown struct `{n}`"))
            }
            Type::Array(e, _) => self.check_complete(e, loc),
            Type::Void => err(loc, "object of type void"),
            _ => Ok(()),
        }
    }

    fn bind(&mut self, id: NodeId, name: &str, ty: Type, storage: Storage, loc: SourceLoc) -> R<()> {
        let scope = self.current_scope();
        let top = &mut self.scopes.last_mut().expect("scope stack").1;
        if top.contains_key(name) {
            return err(loc, format!("redeclaration of `{name}`"));
        }
        top.insert(name.to_string(), id);
        self.sema.decls.insert(
            id,
            DeclInfo {
                id,
                name: name.to_string(),
                ty,
                scope,
                storage,
                loc,
            },
        );
        Ok(())
    }

    fn func(&mut self, f: &FuncDef) -> R<()> {
        let sig = FuncSig {
            ret: f.ret.ty(),
            params: f.params.iter().map(Param::ty).collect(),
        };
        if is_builtin(&f.name) {
            return err(f.loc, format!("`{}` is reserved", f.name));
        }
        if !(sig.ret.is_scalar() || sig.ret == Type::Void) {
            return err(f.loc, "functions must return an integer, a pointer, or void");
        }
        if let Some(prev) = self.sema.funcs.get(&f.name) {
            if *prev != sig {
                return err(f.loc, format!("conflicting declaration of `{}`", f.name));
            }
        }
        self.sema.funcs.insert(f.name.clone(), sig);
        let Some(body) = &f.body else {
            return Ok(());
        };
        self.push_scope(body.id);
        for p in &f.params {
            let ty = p.ty();
            if !ty.is_scalar() {
                return err(p.loc, "parameters must be integers or pointers");
            }
            self.bind(p.id, &p.name, ty, Storage::Param, p.loc)?;
        }
        for s in &body.stmts {
            self.stmt(s)?;
        }
        self.scopes.pop();
        Ok(())
    }

    fn block(&mut self, b: &Block) -> R<()> {
        self.push_scope(b.id);
        for s in &b.stmts {
            self.stmt(s)?;
        }
        self.scopes.pop();
        Ok(())
    }

    fn decl(&mut self, d: &Decl, storage: Storage) -> R<()> {
        for dc in &d.declarators {
            let ty = dc.ty(&d.base.ty);
            self.check_complete(&ty, dc.loc)?;
            if let Some(init) = &dc.init {
                self.init(init)?;
            }
            // The declared name is visible only after its own initializer.
            self.bind(dc.id, &dc.name, ty, storage, dc.loc)?;
        }
        Ok(())
    }

    fn init(&mut self, i: &Initializer) -> R<()> {
        match i {
            Initializer::Expr(e) => self.expr(e).map(|_| ()),
            Initializer::List(items) => items.iter().try_for_each(|i| self.init(i)),
        }
    }

    fn stmt(&mut self, s: &Stmt) -> R<()> {
        self.sema.stmt_scope.insert(s.id, self.current_scope());
        match &s.kind {
            StmtKind::Expr(e) => {
                self.expr(e)?;
            }
            StmtKind::Decl(d) => self.decl(d, Storage::Local)?,
            StmtKind::Block(b) => self.block(b)?,
            StmtKind::If { cond, then, els } => {
                self.cond(cond)?;
                self.stmt(then)?;
                if let Some(e) = els {
                    self.stmt(e)?;
                }
            }
            StmtKind::While { cond, body } => {
                self.cond(cond)?;
                self.stmt(body)?;
            }
            StmtKind::For {
                init,
                cond,
                step,
                body,
            } => {
                self.push_scope(s.id);
                match init {
                    Some(ForInit::Decl(d)) => self.decl(d, Storage::Local)?,
                    Some(ForInit::Expr(e)) => {
                        self.expr(e)?;
                    }
                    None => {}
                }
                if let Some(c) = cond {
                    self.cond(c)?;
                }
                if let Some(c) = step {
                    self.expr(c)?;
                }
                self.stmt(body)?;
                self.scopes.pop();
            }
            StmtKind::Return(Some(e)) => {
                self.expr(e)?;
            }
            StmtKind::Return(None) | StmtKind::Break | StmtKind::Continue | StmtKind::Empty => {}
        }
        Ok(())
    }

    fn cond(&mut self, e: &Expr) -> R<()> {
        let t = self.expr(e)?;
        if !t.decay().is_scalar() {
            return err(e.loc, "condition must be scalar");
        }
        Ok(())
    }

    fn set(&mut self, e: &Expr, t: Type) -> R<Type> {
        self.sema.types.insert(e.id, t.clone());
        Ok(t)
    }

    fn expr(&mut self, e: &Expr) -> R<Type> {
        let t = match &e.kind {
            ExprKind::IntLit { value, text } => Type::Int(literal_type(*value, text)),
            ExprKind::CharLit { .. } => Type::Int(IntTy::Int),
            ExprKind::StrLit(_) => Type::ptr_to(Type::Int(IntTy::Char)),
            ExprKind::Ident(name) => match self.lookup(name) {
                Some(d) => {
                    self.sema.uses.insert(e.id, d);
                    self.sema.decls[&d].ty.clone()
                }
                None => return err(e.loc, format!("use of undeclared identifier `{name}`")),
            },
            ExprKind::Paren(x) => self.expr(x)?,
            ExprKind::Unary { op, operand } => {
                let ot = self.expr(operand)?;
                match op {
                    UnOp::Neg | UnOp::Plus | UnOp::BitNot => match ot {
                        Type::Int(i) => Type::Int(i.promote()),
                        _ => return err(e.loc, "arithmetic on non-integer"),
                    },
                    UnOp::Not => Type::Int(IntTy::Int),
                    UnOp::Deref => match ot.decay() {
                        Type::Ptr(t) if *t != Type::Void => *t,
                        _ => return err(e.loc, "dereference of non-pointer"),
                    },
                    UnOp::AddrOf => Type::ptr_to(ot),
                    _ => {
                        if !ot.is_scalar() {
                            return err(e.loc, "increment of non-scalar");
                        }
                        ot
                    }
                }
            }
            ExprKind::Binary { op, lhs, rhs } => {
                let lt = self.expr(lhs)?.decay();
                let rt = self.expr(rhs)?.decay();
                binary_type(*op, &lt, &rt).ok_or_else(|| {
                    ParseError::new(e.loc.line, e.loc.offset, format!("invalid operands to `{}`", op.symbol()))
                })?
            }
            ExprKind::Assign { op, lhs, rhs } => {
                let lt = self.expr(lhs)?;
                let rt = self.expr(rhs)?.decay();
                if lt.is_array() {
                    return err(e.loc, "assignment to array");
                }
                if let Some(op) = op {
                    if binary_type(*op, &lt, &rt).is_none() {
                        return err(e.loc, "invalid compound assignment");
                    }
                }
                lt
            }
            ExprKind::Cond { cond, then, els } => {
                self.expr(cond)?;
                let a = self.expr(then)?.decay();
                let b = self.expr(els)?.decay();
                match (&a, &b) {
                    (Type::Int(x), Type::Int(y)) => Type::Int(IntTy::common(*x, *y)),
                    (Type::Ptr(_), _) => a,
                    (_, Type::Ptr(_)) => b,
                    _ => a,
                }
            }
            ExprKind::Call { callee, args } => {
                let mut arg_types = Vec::with_capacity(args.len());
                for a in args {
                    arg_types.push(self.expr(a)?.decay());
                }
                self.call_type(e, callee, args, &arg_types)?
            }
            ExprKind::Index { base, index } => {
                let bt = self.expr(base)?.decay();
                let it = self.expr(index)?;
                if !it.is_int() {
                    return err(e.loc, "array index is not an integer");
                }
                match bt {
                    Type::Ptr(t) if *t != Type::Void => *t,
                    _ => return err(e.loc, "subscript of non-array"),
                }
            }
            ExprKind::Member { base, field, arrow } => {
                let bt = self.expr(base)?;
                let sname = match (&bt.decay(), arrow) {
                    (Type::Struct(s), false) => s.clone(),
                    (Type::Ptr(t), true) => match t.as_ref() {
                        Type::Struct(s) => s.clone(),
                        _ => return err(e.loc, "member access on non-struct"),
                    },
                    _ => return err(e.loc, "member access on non-struct"),
                };
                let layout = &self.sema.layouts.structs[&sname];
                match layout.field(field) {
                    Some(f) => f.ty.clone(),
                    None => return err(e.loc, format!("struct {sname} has no field `{field}`")),
                }
            }
            ExprKind::Cast { ty, expr } => {
                self.expr(expr)?;
                let t = ty.ty();
                if let Type::Struct(n) = &t {
                    return err(e.loc, format!("cast to struct {n}"));
                }
                t
            }
            ExprKind::SizeofType(t) => {
                self.check_complete(&t.ty(), e.loc)?;
                Type::Int(IntTy::ULong)
            }
            ExprKind::SizeofExpr(x) => {
                self.expr(x)?;
                Type::Int(IntTy::ULong)
            }
        };
        self.set(e, t)
    }

    fn call_type(&self, e: &Expr, callee: &str, args: &[Expr], arg_types: &[Type]) -> R<Type> {
        let arity = |n: usize| -> R<()> {
            if args.len() != n {
                return err(e.loc, format!("`{callee}` expects {n} argument(s)"));
            }
            Ok(())
        };
        let t = match callee {
            "printf" => {
                if args.is_empty() || !matches!(args[0].kind, ExprKind::StrLit(_)) {
                    return err(e.loc, "printf needs a literal format string");
                }
                Type::Int(IntTy::Int)
            }
            "malloc" => {
                arity(1)?;
                Type::ptr_to(Type::Void)
            }
            "free" => {
                arity(1)?;
                if !arg_types[0].is_ptr() {
                    return err(e.loc, "free of non-pointer");
                }
                Type::Void
            }
            HOOK_VAL | HOOK_FREED | HOOK_VALP => {
                arity(2)?;
                arg_types[1].clone()
            }
            HOOK_ADDR => {
                arity(2)?;
                arg_types[1].decay()
            }
            HOOK_MALLOC => {
                arity(2)?;
                Type::ptr_to(Type::Void)
            }
            HOOK_RANGE => {
                arity(3)?;
                Type::Void
            }
            HOOK_ENTER => {
                arity(1)?;
                Type::Void
            }
            name => {
                let Some(sig) = self.sema.funcs.get(name) else {
                    return err(e.loc, format!("call to undeclared function `{name}`"));
                };
                if sig.params.len() != args.len() {
                    return err(e.loc, format!("`{name}` expects {} argument(s)", sig.params.len()));
                }
                sig.ret.clone()
            }
        };
        if args.iter().skip(1).any(|a| matches!(a.kind, ExprKind::StrLit(_)))
            || (callee != "printf" && args.iter().any(|a| matches!(a.kind, ExprKind::StrLit(_))))
        {
            return err(e.loc, "string literals are only supported as printf formats");
        }
        Ok(t)
    }
}

fn binary_type(op: BinOp, lt: &Type, rt: &Type) -> Option<Type> {
    use BinOp::*;
    match op {
        Lt | Gt | Le | Ge | Eq | Ne | And | Or => {
            if lt.is_scalar() && rt.is_scalar() {
                Some(Type::Int(IntTy::Int))
            } else {
                None
            }
        }
        Add => match (lt, rt) {
            (Type::Int(a), Type::Int(b)) => Some(Type::Int(IntTy::common(*a, *b))),
            (Type::Ptr(_), Type::Int(_)) => Some(lt.clone()),
            (Type::Int(_), Type::Ptr(_)) => Some(rt.clone()),
            _ => None,
        },
        Sub => match (lt, rt) {
            (Type::Int(a), Type::Int(b)) => Some(Type::Int(IntTy::common(*a, *b))),
            (Type::Ptr(_), Type::Int(_)) => Some(lt.clone()),
            (Type::Ptr(_), Type::Ptr(_)) => Some(Type::Int(IntTy::Long)),
            _ => None,
        },
        Shl | Shr => match (lt, rt) {
            (Type::Int(a), Type::Int(_)) => Some(Type::Int(a.promote())),
            _ => None,
        },
        Mul | Div | Rem | BitAnd | BitXor | BitOr => match (lt, rt) {
            (Type::Int(a), Type::Int(b)) => Some(Type::Int(IntTy::common(*a, *b))),
            _ => None,
        },
    }
}

/// C rules for the type of an integer constant.
pub fn literal_type(value: u64, text: &str) -> IntTy {
    let lower = text.to_ascii_lowercase();
    let unsigned = lower.contains('u');
    let longs = lower.matches('l').count();
    let decimal = !(lower.starts_with("0x") || (lower.len() > 1 && lower.starts_with('0')));
    let candidates: &[IntTy] = match (unsigned, longs, decimal) {
        (false, 0, true) => &[IntTy::Int, IntTy::Long, IntTy::ULong],
        (false, 0, false) => &[IntTy::Int, IntTy::UInt, IntTy::Long, IntTy::ULong],
        (true, 0, _) => &[IntTy::UInt, IntTy::ULong],
        (false, 1, true) => &[IntTy::Long, IntTy::ULong],
        (false, 1, false) => &[IntTy::Long, IntTy::ULong],
        (true, 1, _) => &[IntTy::ULong],
        (false, _, _) => &[IntTy::LongLong, IntTy::ULongLong],
        (true, _, _) => &[IntTy::ULongLong],
    };
    candidates
        .iter()
        .copied()
        .find(|t| t.contains(i128::from(value)))
        .unwrap_or(IntTy::ULongLong)
}
