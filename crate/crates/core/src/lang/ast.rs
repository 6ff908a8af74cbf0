use std::fmt;

use serde::{Deserialize, Serialize};

use super::types::{IntTy, Type};

pub type NodeId = u32;

/// Position of a construct: 1-based line and 1-based column of its first token.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct SourceLoc {
    pub line: u32,
    pub offset: u32,
}

impl SourceLoc {
    pub fn new(line: u32, offset: u32) -> Self {
        SourceLoc { line, offset }
    }
}

impl fmt::Display for SourceLoc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.offset)
    }
}

/// Base type as written: qualifier/storage words plus the type words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseType {
    /// `static`, `const`, `volatile` in source order.
    pub quals: Vec<String>,
    /// Type words as written, e.g. `unsigned long`, `uint32_t`, `struct a`.
    pub spelling: String,
    pub ty: Type,
}

impl BaseType {
    pub fn int(i: IntTy) -> Self {
        BaseType {
            quals: Vec::new(),
            spelling: i.c_name().to_string(),
            ty: Type::Int(i),
        }
    }

    pub fn of(ty: &Type) -> Self {
        let spelling = match ty {
            Type::Void => "void".to_string(),
            Type::Int(i) => i.c_name().to_string(),
            Type::Struct(s) => format!("struct {s}"),
            _ => unreachable!("base types are void, integer or struct"),
        };
        BaseType {
            quals: Vec::new(),
            spelling,
            ty: ty.clone(),
        }
    }
}

/// Type in a cast or `sizeof`: base type plus pointer levels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeName {
    pub base: BaseType,
    pub ptr_quals: Vec<Vec<String>>,
}

impl TypeName {
    pub fn ty(&self) -> Type {
        let mut t = self.base.ty.clone();
        for _ in &self.ptr_quals {
            t = Type::ptr_to(t);
        }
        t
    }

    /// Spelling for an arbitrary non-array type.
    pub fn for_type(ty: &Type) -> Self {
        let mut levels = 0;
        let mut t = ty;
        while let Type::Ptr(inner) = t {
            levels += 1;
            t = inner;
        }
        TypeName {
            base: BaseType::of(t),
            ptr_quals: vec![Vec::new(); levels],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum UnOp {
    Neg,
    Plus,
    Not,
    BitNot,
    Deref,
    AddrOf,
    PreInc,
    PreDec,
    PostInc,
    PostDec,
}

impl UnOp {
    pub fn symbol(self) -> &'static str {
        match self {
            UnOp::Neg => "-",
            UnOp::Plus => "+",
            UnOp::Not => "!",
            UnOp::BitNot => "~",
            UnOp::Deref => "*",
            UnOp::AddrOf => "&",
            UnOp::PreInc | UnOp::PostInc => "++",
            UnOp::PreDec | UnOp::PostDec => "--",
        }
    }

    pub fn is_postfix(self) -> bool {
        matches!(self, UnOp::PostInc | UnOp::PostDec)
    }

    pub fn is_incdec(self) -> bool {
        matches!(
            self,
            UnOp::PreInc | UnOp::PreDec | UnOp::PostInc | UnOp::PostDec
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BinOp {
    Mul,
    Div,
    Rem,
    Add,
    Sub,
    Shl,
    Shr,
    Lt,
    Gt,
    Le,
    Ge,
    Eq,
    Ne,
    BitAnd,
    BitXor,
    BitOr,
    And,
    Or,
}

impl BinOp {
    pub fn symbol(self) -> &'static str {
        use BinOp::*;
        match self {
            Mul => "*",
            Div => "/",
            Rem => "%",
            Add => "+",
            Sub => "-",
            Shl => "<<",
            Shr => ">>",
            Lt => "<",
            Gt => ">",
            Le => "<=",
            Ge => ">=",
            Eq => "==",
            Ne => "!=",
            BitAnd => "&",
            BitXor => "^",
            BitOr => "|",
            And => "&&",
            Or => "||",
        }
    }

    /// Binding strength; larger binds tighter.
    pub fn precedence(self) -> u8 {
        use BinOp::*;
        match self {
            Mul | Div | Rem => 13,
            Add | Sub => 12,
            Shl | Shr => 11,
            Lt | Gt | Le | Ge => 10,
            Eq | Ne => 9,
            BitAnd => 8,
            BitXor => 7,
            BitOr => 6,
            And => 5,
            Or => 4,
        }
    }

    pub fn is_compoundable(self) -> bool {
        use BinOp::*;
        matches!(
            self,
            Mul | Div | Rem | Add | Sub | Shl | Shr | BitAnd | BitXor | BitOr
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expr {
    pub id: NodeId,
    pub loc: SourceLoc,
    pub kind: ExprKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExprKind {
    /// Integer literal; `text` is the spelling, including suffixes.
    IntLit { value: u64, text: String },
    /// Character literal, spelled with its quotes.
    CharLit { value: i64, text: String },
    /// String literal body, escapes kept as written.
    StrLit(String),
    Ident(String),
    Paren(Box<Expr>),
    Unary { op: UnOp, operand: Box<Expr> },
    Binary { op: BinOp, lhs: Box<Expr>, rhs: Box<Expr> },
    /// `lhs = rhs` or compound `lhs op= rhs`.
    Assign { op: Option<BinOp>, lhs: Box<Expr>, rhs: Box<Expr> },
    Cond { cond: Box<Expr>, then: Box<Expr>, els: Box<Expr> },
    Call { callee: String, args: Vec<Expr> },
    Index { base: Box<Expr>, index: Box<Expr> },
    Member { base: Box<Expr>, field: String, arrow: bool },
    Cast { ty: TypeName, expr: Box<Expr> },
    SizeofType(TypeName),
    SizeofExpr(Box<Expr>),
}

impl Expr {
    /// Strips any number of enclosing parentheses.
    pub fn unparen(&self) -> &Expr {
        match &self.kind {
            ExprKind::Paren(e) => e.unparen(),
            _ => self,
        }
    }

    /// True if evaluating the expression has no side effects (no assignment,
    /// increment, or call).
    pub fn is_pure(&self) -> bool {
        let mut pure = true;
        super::visit::walk_expr_tree(self, &mut |e| match &e.kind {
            ExprKind::Assign { .. } | ExprKind::Call { .. } => pure = false,
            ExprKind::Unary { op, .. } if op.is_incdec() => pure = false,
            _ => {}
        });
        pure
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Initializer {
    Expr(Expr),
    List(Vec<Initializer>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Declarator {
    pub id: NodeId,
    pub loc: SourceLoc,
    pub name: String,
    /// One entry per `*`, holding the qualifiers written after it.
    pub ptr_quals: Vec<Vec<String>>,
    pub dims: Vec<u64>,
    pub init: Option<Initializer>,
}

impl Declarator {
    pub fn ty(&self, base: &Type) -> Type {
        let mut t = base.clone();
        for _ in &self.ptr_quals {
            t = Type::ptr_to(t);
        }
        for d in self.dims.iter().rev() {
            t = Type::Array(Box::new(t), *d);
        }
        t
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decl {
    pub base: BaseType,
    pub declarators: Vec<Declarator>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub id: NodeId,
    pub loc: SourceLoc,
    pub stmts: Vec<Stmt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ForInit {
    Decl(Decl),
    Expr(Expr),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stmt {
    pub id: NodeId,
    pub loc: SourceLoc,
    pub kind: StmtKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StmtKind {
    Expr(Expr),
    Decl(Decl),
    Block(Block),
    If {
        cond: Expr,
        then: Box<Stmt>,
        els: Option<Box<Stmt>>,
    },
    While {
        cond: Expr,
        body: Box<Stmt>,
    },
    For {
        init: Option<ForInit>,
        cond: Option<Expr>,
        step: Option<Expr>,
        body: Box<Stmt>,
    },
    Return(Option<Expr>),
    Break,
    Continue,
    Empty,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Param {
    pub id: NodeId,
    pub loc: SourceLoc,
    pub base: BaseType,
    pub ptr_quals: Vec<Vec<String>>,
    pub name: String,
}

impl Param {
    pub fn ty(&self) -> Type {
        let mut t = self.base.ty.clone();
        for _ in &self.ptr_quals {
            t = Type::ptr_to(t);
        }
        t
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuncDef {
    pub id: NodeId,
    pub loc: SourceLoc,
    pub ret: TypeName,
    pub name: String,
    pub params: Vec<Param>,
    /// `None` for a prototype.
    pub body: Option<Block>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Field {
    pub id: NodeId,
    pub loc: SourceLoc,
    pub base: BaseType,
    pub declarator: Declarator,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructDef {
    pub id: NodeId,
    pub loc: SourceLoc,
    pub name: String,
    pub fields: Vec<Field>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Item {
    /// A preprocessor line kept verbatim (only `#include`).
    Include { id: NodeId, loc: SourceLoc, text: String },
    Struct(StructDef),
    Global(Stmt),
    Func(FuncDef),
}

impl Item {
    pub fn id(&self) -> NodeId {
        match self {
            Item::Include { id, .. } => *id,
            Item::Struct(s) => s.id,
            Item::Global(s) => s.id,
            Item::Func(f) => f.id,
        }
    }

    pub fn loc(&self) -> SourceLoc {
        match self {
            Item::Include { loc, .. } => *loc,
            Item::Struct(s) => s.loc,
            Item::Global(s) => s.loc,
            Item::Func(f) => f.loc,
        }
    }
}

/// A translation unit of the C subset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ast {
    pub items: Vec<Item>,
    pub next_id: NodeId,
}

impl Default for Ast {
    fn default() -> Self {
        Ast {
            items: Vec::new(),
            next_id: 1,
        }
    }
}

impl Ast {
    pub fn fresh_id(&mut self) -> NodeId {
        let id = self.next_id;
        self.next_id += 1;
        id
    }

    pub fn globals(&self) -> impl Iterator<Item = &Stmt> {
        self.items.iter().filter_map(|i| match i {
            Item::Global(s) => Some(s),
            _ => None,
        })
    }

    pub fn functions(&self) -> impl Iterator<Item = &FuncDef> {
        self.items.iter().filter_map(|i| match i {
            Item::Func(f) if f.body.is_some() => Some(f),
            _ => None,
        })
    }

    pub fn function(&self, name: &str) -> Option<&FuncDef> {
        self.functions().find(|f| f.name == name)
    }

    pub fn function_mut(&mut self, name: &str) -> Option<&mut FuncDef> {
        self.items.iter_mut().find_map(|i| match i {
            Item::Func(f) if f.body.is_some() && f.name == name => Some(f),
            _ => None,
        })
    }

    /// Every identifier spelled anywhere in the unit.
    pub fn identifiers(&self) -> std::collections::BTreeSet<String> {
        let mut out = std::collections::BTreeSet::new();
        super::visit::for_each_name(self, &mut |n| {
            out.insert(n.to_string());
        });
        out
    }

    /// Copy with all ids and locations zeroed, for structural comparison.
    pub fn stripped(&self) -> Ast {
        let mut a = self.clone();
        super::visit::for_each_meta_mut(&mut a, &mut |id, loc| {
            *id = 0;
            *loc = SourceLoc::default();
        });
        a.next_id = 0;
        a
    }

    /// Structural equality, ignoring node ids and source locations.
    pub fn same_shape(&self, other: &Ast) -> bool {
        self.stripped() == other.stripped()
    }
}
