//! Static enumeration of the code constructs that can host each kind of UB.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::lang::visit::expr_children;
use crate::lang::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum UbKind {
    BufOverflowArray,
    BufOverflowPointer,
    UseAfterFree,
    UseAfterScope,
    NullPtrDeref,
    IntegerOverflow,
    ShiftOverflow,
    DivideByZero,
    UseOfUninitMemory,
}

impl UbKind {
    pub const ALL: [UbKind; 9] = [
        UbKind::BufOverflowArray,
        UbKind::BufOverflowPointer,
        UbKind::UseAfterFree,
        UbKind::UseAfterScope,
        UbKind::NullPtrDeref,
        UbKind::IntegerOverflow,
        UbKind::ShiftOverflow,
        UbKind::DivideByZero,
        UbKind::UseOfUninitMemory,
    ];

    pub fn name(self) -> &'static str {
        match self {
            UbKind::BufOverflowArray => "BufOverflowArray",
            UbKind::BufOverflowPointer => "BufOverflowPointer",
            UbKind::UseAfterFree => "UseAfterFree",
            UbKind::UseAfterScope => "UseAfterScope",
            UbKind::NullPtrDeref => "NullPtrDeref",
            UbKind::IntegerOverflow => "IntegerOverflow",
            UbKind::ShiftOverflow => "ShiftOverflow",
            UbKind::DivideByZero => "DivideByZero",
            UbKind::UseOfUninitMemory => "UseOfUninitMemory",
        }
    }

    pub fn is_buffer_overflow(self) -> bool {
        matches!(self, UbKind::BufOverflowArray | UbKind::BufOverflowPointer)
    }
}

impl fmt::Display for UbKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, thiserror::Error)]
#[error("unknown UB kind `{0}`")]
pub struct UnknownKind(pub String);

impl FromStr for UbKind {
    type Err = UnknownKind;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_lowercase();
        let alias = match norm.as_str() {
            "array" | "bufarray" => "bufoverflowarray",
            "pointer" | "bufpointer" => "bufoverflowpointer",
            "uaf" => "useafterfree",
            "uas" => "useafterscope",
            "null" | "nullderef" => "nullptrderef",
            "intoverflow" | "overflow" => "integeroverflow",
            "shift" => "shiftoverflow",
            "div" | "divzero" => "dividebyzero",
            "uninit" => "useofuninitmemory",
            other => other,
        };
        UbKind::ALL
            .into_iter()
            .find(|k| k.name().to_ascii_lowercase() == alias)
            .ok_or_else(|| UnknownKind(s.to_string()))
    }
}

/// The syntactic form a site matched.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Construct {
    /// `a[x]`
    Subscript,
    /// `*p`
    Deref,
    /// `x op y` for `+ - *`
    Arith(BinOp),
    /// `x op= y`
    CompoundArith(BinOp),
    /// `++x`, `x--`, ...
    IncDec(UnOp),
    /// `x << y` or `x >> y`
    Shift(BinOp),
    CompoundShift(BinOp),
    /// `x / y` or `x % y`
    Div(BinOp),
    CompoundDiv(BinOp),
    /// Condition of `if`.
    IfCond,
    /// Condition of `while`.
    WhileCond,
}

impl Construct {
    /// Whether this form belongs to the construct column of `kind`.
    pub fn legal_for(self, kind: UbKind) -> bool {
        use Construct::*;
        match kind {
            UbKind::BufOverflowArray => self == Subscript,
            UbKind::BufOverflowPointer
            | UbKind::UseAfterFree
            | UbKind::UseAfterScope
            | UbKind::NullPtrDeref => self == Deref,
            UbKind::IntegerOverflow => matches!(
                self,
                Arith(BinOp::Add | BinOp::Sub | BinOp::Mul)
                    | CompoundArith(BinOp::Add | BinOp::Sub | BinOp::Mul)
                    | IncDec(_)
            ),
            UbKind::ShiftOverflow => matches!(
                self,
                Shift(BinOp::Shl | BinOp::Shr) | CompoundShift(BinOp::Shl | BinOp::Shr)
            ),
            UbKind::DivideByZero => matches!(
                self,
                Div(BinOp::Div | BinOp::Rem) | CompoundDiv(BinOp::Div | BinOp::Rem)
            ),
            UbKind::UseOfUninitMemory => matches!(self, IfCond | WhileCond),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchSite {
    pub node_id: NodeId,
    pub kind: UbKind,
    pub loc: SourceLoc,
    pub construct: Construct,
}

/// Every expression in function bodies whose form can host `kind`, in
/// source order.
pub fn get_matched_exprs(ast: &Ast, kind: UbKind) -> Vec<MatchSite> {
    match analyze(ast) {
        Ok(sema) => matched_with(ast, &sema, kind),
        Err(_) => Vec::new(),
    }
}

pub fn matched_with(ast: &Ast, sema: &Sema, kind: UbKind) -> Vec<MatchSite> {
    let mut m = Matcher {
        sema,
        kind,
        out: Vec::new(),
    };
    for f in ast.functions() {
        if let Some(b) = &f.body {
            for s in &b.stmts {
                m.stmt(s);
            }
        }
    }
    m.out
}

struct Matcher<'a> {
    sema: &'a Sema,
    kind: UbKind,
    out: Vec<MatchSite>,
}

impl Matcher<'_> {
    fn push(&mut self, e: &Expr, construct: Construct) {
        debug_assert!(construct.legal_for(self.kind));
        self.out.push(MatchSite {
            node_id: e.id,
            kind: self.kind,
            loc: e.loc,
            construct,
        });
    }

    fn stmt(&mut self, s: &Stmt) {
        match &s.kind {
            StmtKind::Expr(e) | StmtKind::Return(Some(e)) => self.expr(e),
            StmtKind::Decl(d) => self.decl(d),
            StmtKind::Block(b) => b.stmts.iter().for_each(|s| self.stmt(s)),
            StmtKind::If { cond, then, els } => {
                if self.kind == UbKind::UseOfUninitMemory && self.cond_ok(cond) {
                    self.push(cond, Construct::IfCond);
                }
                self.expr(cond);
                self.stmt(then);
                if let Some(e) = els {
                    self.stmt(e);
                }
            }
            StmtKind::While { cond, body } => {
                if self.kind == UbKind::UseOfUninitMemory && self.cond_ok(cond) {
                    self.push(cond, Construct::WhileCond);
                }
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
            StmtKind::Return(None) | StmtKind::Break | StmtKind::Continue | StmtKind::Empty => {}
        }
    }

    fn decl(&mut self, d: &Decl) {
        fn init(m: &mut Matcher<'_>, i: &Initializer) {
            match i {
                Initializer::Expr(e) => m.expr(e),
                Initializer::List(l) => l.iter().for_each(|i| init(m, i)),
            }
        }
        for dc in &d.declarators {
            if let Some(i) = &dc.init {
                init(self, i);
            }
        }
    }

    /// Conditions are rewritten to `x + x̂`, which needs an integer.
    fn cond_ok(&self, e: &Expr) -> bool {
        self.sema.type_of(e).is_int()
    }

    fn signed_result(&self, e: &Expr) -> bool {
        self.sema.type_of(e).as_int().is_some_and(IntTy::signed)
    }

    fn expr(&mut self, e: &Expr) {
        let ty = |x: &Expr| self.sema.type_of(x).decay();
        match (&e.kind, self.kind) {
            (ExprKind::SizeofExpr(_) | ExprKind::SizeofType(_), _) => return,
            (ExprKind::Unary { op: UnOp::AddrOf, operand }, _) => {
                // `&a[i]` and `&*p` compute addresses without accessing.
                match &operand.unparen().kind {
                    ExprKind::Index { base, index } => {
                        self.expr(base);
                        self.expr(index);
                    }
                    ExprKind::Unary {
                        op: UnOp::Deref,
                        operand: inner,
                    } => self.expr(inner),
                    _ => self.expr(operand),
                }
                return;
            }
            (ExprKind::Index { .. }, UbKind::BufOverflowArray)
                if !self.sema.type_of(e).is_array() =>
            {
                self.push(e, Construct::Subscript)
            }
            (
                ExprKind::Unary {
                    op: UnOp::Deref, ..
                },
                UbKind::BufOverflowPointer
                | UbKind::UseAfterFree
                | UbKind::UseAfterScope
                | UbKind::NullPtrDeref,
            ) => self.push(e, Construct::Deref),
            (ExprKind::Binary { op, lhs, rhs }, k) => {
                let ints = ty(lhs).is_int() && ty(rhs).is_int();
                match (op, k) {
                    (BinOp::Add | BinOp::Sub | BinOp::Mul, UbKind::IntegerOverflow)
                        if ints && self.signed_result(e) =>
                    {
                        self.push(e, Construct::Arith(*op))
                    }
                    (BinOp::Shl | BinOp::Shr, UbKind::ShiftOverflow) => {
                        self.push(e, Construct::Shift(*op))
                    }
                    (BinOp::Div | BinOp::Rem, UbKind::DivideByZero) => {
                        self.push(e, Construct::Div(*op))
                    }
                    _ => {}
                }
            }
            (
                ExprKind::Assign {
                    op: Some(op),
                    lhs,
                    rhs,
                },
                k,
            ) => {
                let lt = ty(lhs);
                let rt = ty(rhs);
                if let (Some(a), Some(b)) = (lt.as_int(), rt.as_int()) {
                    let common = IntTy::common(a.promote(), b.promote());
                    match (op, k) {
                        (BinOp::Add | BinOp::Sub | BinOp::Mul, UbKind::IntegerOverflow)
                            if common.signed() =>
                        {
                            self.push(e, Construct::CompoundArith(*op))
                        }
                        (BinOp::Shl | BinOp::Shr, UbKind::ShiftOverflow) => {
                            self.push(e, Construct::CompoundShift(*op))
                        }
                        (BinOp::Div | BinOp::Rem, UbKind::DivideByZero) => {
                            self.push(e, Construct::CompoundDiv(*op))
                        }
                        _ => {}
                    }
                }
            }
            (ExprKind::Unary { op, operand }, UbKind::IntegerOverflow) if op.is_incdec() => {
                // Narrow operands are incremented in `int` and cannot overflow.
                if let Some(t) = ty(operand).as_int() {
                    if t.signed() && t.promote() == t {
                        self.push(e, Construct::IncDec(*op));
                    }
                }
            }
            _ => {}
        }
        for c in expr_children(e) {
            self.expr(c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG4: &str = "struct a { int x };\nstruct a b[2];\nstruct a *c = b, *d = b;\nint k = 0;\n\
                        int main() {\n  *c = *b;\n  *c = *(d+k);\n  return c->x;\n}\n";

    fn texts(src: &str, kind: UbKind) -> Vec<String> {
        let ast = parse_program(src).unwrap();
        get_matched_exprs(&ast, kind)
            .iter()
            .map(|s| expr_to_string(find_expr(&ast, s.node_id).unwrap()))
            .collect()
    }

    #[test]
    fn fig6_has_one_subscript() {
        let src = "int main() { int a[5]; int x = 1; a[x] = 1; return 0; }";
        assert_eq!(texts(src, UbKind::BufOverflowArray), vec!["a[x]"]);
    }

    #[test]
    fn fig4_pointer_dereferences() {
        let t = texts(FIG4, UbKind::BufOverflowPointer);
        assert_eq!(t, vec!["*c", "*b", "*c", "*(d + k)"]);
        let distinct: std::collections::BTreeSet<_> = t.into_iter().collect();
        assert_eq!(distinct.len(), 3);
    }

    #[test]
    fn pointer_free_program_has_no_uaf_sites() {
        let src = "int main() { int x = 3; x = x * 2; return x; }";
        assert!(texts(src, UbKind::UseAfterFree).is_empty());
    }

    #[test]
    fn unsigned_arithmetic_is_not_an_overflow_site() {
        let src = "int main() { unsigned u = 1; int i = 2; char c = 1; u = u + 1; i = i - 1; i += 2; c++; i++; return i * 3; }";
        assert_eq!(
            texts(src, UbKind::IntegerOverflow),
            vec!["i - 1", "i += 2", "i++", "i * 3"]
        );
    }

    #[test]
    fn address_of_and_sizeof_are_skipped() {
        let src = "int main() { int a[3]; int *p = &a[1]; int n = sizeof(a[0]); p = &*p; return a[n / 4] + *p; }";
        assert_eq!(texts(src, UbKind::BufOverflowArray), vec!["a[n / 4]"]);
        assert_eq!(texts(src, UbKind::NullPtrDeref), vec!["*p"]);
        assert_eq!(texts(src, UbKind::DivideByZero), vec!["n / 4"]);
    }

    #[test]
    fn conditions_for_uninit() {
        let src = "int main() { int x = 1; if (x) x = 2; while (x > 0) x--; for (; x;) break; return 0; }";
        assert_eq!(texts(src, UbKind::UseOfUninitMemory), vec!["x", "x > 0"]);
    }

    #[test]
    fn kinds_parse_from_text() {
        for k in UbKind::ALL {
            assert_eq!(k.name().parse::<UbKind>().unwrap(), k);
        }
        assert_eq!("uaf".parse::<UbKind>().unwrap(), UbKind::UseAfterFree);
        assert!("nonsense".parse::<UbKind>().is_err());
    }
}
