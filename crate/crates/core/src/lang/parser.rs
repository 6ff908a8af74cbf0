use super::ast::*;
use super::lexer::{tokenize, Tok, Token};
use super::types::{IntTy, Type};
use super::ParseError;

const QUALIFIERS: &[&str] = &["static", "const", "volatile"];
const INT_WORDS: &[&str] = &["void", "char", "short", "int", "long", "signed", "unsigned"];
const UNSUPPORTED: &[&str] = &[
    "union", "typedef", "goto", "switch", "case", "default", "do", "enum", "float", "double",
    "register", "auto", "extern", "inline", "_Bool", "restrict",
];

pub(super) fn stdint_type(name: &str) -> Option<IntTy> {
    Some(match name {
        "int8_t" => IntTy::SChar,
        "uint8_t" => IntTy::UChar,
        "int16_t" => IntTy::Short,
        "uint16_t" => IntTy::UShort,
        "int32_t" => IntTy::Int,
        "uint32_t" => IntTy::UInt,
        "int64_t" => IntTy::Long,
        "uint64_t" => IntTy::ULong,
        "size_t" | "uintptr_t" => IntTy::ULong,
        "intptr_t" => IntTy::Long,
        _ => return None,
    })
}

pub struct Parser {
    toks: Vec<Token>,
    pos: usize,
    next_id: NodeId,
}

impl Parser {
    pub fn new(src: &str) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: tokenize(src)?,
            pos: 0,
            next_id: 1,
        })
    }

    fn id(&mut self) -> NodeId {
        let id = self.next_id;
        self.next_id += 1;
        id
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, n: usize) -> &Tok {
        &self.toks[(self.pos + n).min(self.toks.len() - 1)].tok
    }

    fn loc(&self) -> SourceLoc {
        self.toks[self.pos].loc
    }

    fn advance(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        let l = self.loc();
        Err(ParseError::new(l.line, l.offset, msg))
    }

    fn is_punct(&self, p: &str) -> bool {
        matches!(self.peek(), Tok::Punct(q) if *q == p)
    }

    fn is_word(&self, w: &str) -> bool {
        matches!(self.peek(), Tok::Ident(q) if q == w)
    }

    fn eat_punct(&mut self, p: &str) -> bool {
        if self.is_punct(p) {
            self.advance();
            true
        } else {
            false
        }
    }

    fn expect_punct(&mut self, p: &str) -> Result<(), ParseError> {
        if self.eat_punct(p) {
            Ok(())
        } else {
            self.err(format!("expected `{p}`, found {}", describe(self.peek())))
        }
    }

    fn expect_ident(&mut self) -> Result<String, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) if !is_reserved(&name) => {
                self.advance();
                Ok(name)
            }
            t => self.err(format!("expected identifier, found {}", describe(&t))),
        }
    }

    fn check_unsupported(&self) -> Result<(), ParseError> {
        if let Tok::Ident(w) = self.peek() {
            if UNSUPPORTED.contains(&w.as_str()) {
                return self.err(format!("`{w}` is outside the supported C subset"));
            }
        }
        Ok(())
    }

    fn starts_type(&self) -> bool {
        match self.peek() {
            Tok::Ident(w) => {
                QUALIFIERS.contains(&w.as_str())
                    || INT_WORDS.contains(&w.as_str())
                    || w == "struct"
                    || stdint_type(w).is_some()
            }
            _ => false,
        }
    }

    pub fn parse_unit(mut self) -> Result<Ast, ParseError> {
        let mut items = Vec::new();
        loop {
            match self.peek().clone() {
                Tok::Eof => break,
                Tok::Directive(text) => {
                    let loc = self.loc();
                    self.advance();
                    items.push(Item::Include {
                        id: self.id(),
                        loc,
                        text,
                    });
                }
                _ => items.push(self.parse_item()?),
            }
        }
        Ok(Ast {
            items,
            next_id: self.next_id,
        })
    }

    fn parse_item(&mut self) -> Result<Item, ParseError> {
        self.check_unsupported()?;
        let loc = self.loc();
        if self.is_word("struct")
            && matches!(self.peek_at(1), Tok::Ident(_))
            && matches!(self.peek_at(2), Tok::Punct("{"))
        {
            return self.parse_struct_def().map(Item::Struct);
        }
        if !self.starts_type() {
            return self.err(format!("expected declaration, found {}", describe(self.peek())));
        }
        let id = self.id();
        let base = self.parse_base_type()?;
        // Function definition or prototype?
        let save = self.pos;
        let mut ptrs = Vec::new();
        while self.eat_punct("*") {
            ptrs.push(self.parse_ptr_quals());
        }
        if matches!(self.peek(), Tok::Ident(_)) && matches!(self.peek_at(1), Tok::Punct("(")) {
            let name = self.expect_ident()?;
            self.expect_punct("(")?;
            let params = self.parse_params()?;
            let body = if self.eat_punct(";") {
                None
            } else {
                Some(self.parse_block()?)
            };
            return Ok(Item::Func(FuncDef {
                id,
                loc,
                ret: TypeName {
                    base,
                    ptr_quals: ptrs,
                },
                name,
                params,
                body,
            }));
        }
        self.pos = save;
        let decl = self.parse_declarators(base)?;
        self.expect_punct(";")?;
        Ok(Item::Global(Stmt {
            id,
            loc,
            kind: StmtKind::Decl(decl),
        }))
    }

    fn parse_struct_def(&mut self) -> Result<StructDef, ParseError> {
        let loc = self.loc();
        let id = self.id();
        self.advance();
        let name = self.expect_ident()?;
        self.expect_punct("{")?;
        let mut fields = Vec::new();
        while !self.is_punct("}") {
            self.check_unsupported()?;
            let floc = self.loc();
            let fid = self.id();
            if !self.starts_type() {
                return self.err("expected field declaration");
            }
            let base = self.parse_base_type()?;
            loop {
                let declarator = self.parse_declarator(false)?;
                fields.push(Field {
                    id: fid,
                    loc: floc,
                    base: base.clone(),
                    declarator,
                });
                if !self.eat_punct(",") {
                    break;
                }
            }
            // The final field may omit its semicolon.
            if !self.eat_punct(";") && !self.is_punct("}") {
                return self.err("expected `;` after field");
            }
        }
        self.expect_punct("}")?;
        self.expect_punct(";")?;
        if fields.is_empty() {
            return Err(ParseError::new(loc.line, loc.offset, "empty struct"));
        }
        // Fields sharing one declaration get distinct ids.
        for i in 1..fields.len() {
            if fields[i].id == fields[i - 1].id {
                fields[i].id = self.id();
            }
        }
        Ok(StructDef {
            id,
            loc,
            name,
            fields,
        })
    }

    fn parse_params(&mut self) -> Result<Vec<Param>, ParseError> {
        let mut params = Vec::new();
        if self.is_word("void") && matches!(self.peek_at(1), Tok::Punct(")")) {
            self.advance();
            self.advance();
            return Ok(params);
        }
        if self.eat_punct(")") {
            return Ok(params);
        }
        loop {
            if self.is_punct("...") {
                return self.err("variadic functions are outside the supported C subset");
            }
            self.check_unsupported()?;
            let loc = self.loc();
            if !self.starts_type() {
                return self.err("expected parameter type");
            }
            let base = self.parse_base_type()?;
            let mut ptr_quals = Vec::new();
            while self.eat_punct("*") {
                ptr_quals.push(self.parse_ptr_quals());
            }
            let name = self.expect_ident()?;
            if self.is_punct("[") {
                return self.err("array parameters are outside the supported C subset");
            }
            params.push(Param {
                id: self.id(),
                loc,
                base,
                ptr_quals,
                name,
            });
            if self.eat_punct(")") {
                break;
            }
            self.expect_punct(",")?;
        }
        Ok(params)
    }

    fn parse_ptr_quals(&mut self) -> Vec<String> {
        let mut q = Vec::new();
        while let Tok::Ident(w) = self.peek() {
            if w == "const" || w == "volatile" {
                q.push(w.clone());
                self.advance();
            } else {
                break;
            }
        }
        q
    }

    fn parse_base_type(&mut self) -> Result<BaseType, ParseError> {
        let start = self.loc();
        let mut quals = Vec::new();
        let mut words: Vec<String> = Vec::new();
        let mut ty: Option<Type> = None;
        loop {
            self.check_unsupported()?;
            let Tok::Ident(w) = self.peek().clone() else {
                break;
            };
            if QUALIFIERS.contains(&w.as_str()) {
                quals.push(w);
                self.advance();
            } else if w == "struct" {
                if !words.is_empty() || ty.is_some() {
                    return self.err("unexpected `struct`");
                }
                self.advance();
                let name = self.expect_ident()?;
                words.push(format!("struct {name}"));
                ty = Some(Type::Struct(name));
            } else if INT_WORDS.contains(&w.as_str()) && ty.is_none() {
                words.push(w);
                self.advance();
            } else if let (Some(it), true) = (stdint_type(&w), words.is_empty() && ty.is_none()) {
                words.push(w);
                ty = Some(Type::Int(it));
                self.advance();
            } else {
                break;
            }
        }
        let ty = match ty {
            Some(t) => t,
            None => int_from_words(&words)
                .ok_or_else(|| ParseError::new(start.line, start.offset, "invalid type specifier"))?,
        };
        Ok(BaseType {
            quals,
            spelling: words.join(" "),
            ty,
        })
    }

    fn parse_declarators(&mut self, base: BaseType) -> Result<Decl, ParseError> {
        let mut declarators = vec![self.parse_declarator(true)?];
        while self.eat_punct(",") {
            declarators.push(self.parse_declarator(true)?);
        }
        Ok(Decl { base, declarators })
    }

    fn parse_declarator(&mut self, allow_init: bool) -> Result<Declarator, ParseError> {
        let loc = self.loc();
        let mut ptr_quals = Vec::new();
        while self.eat_punct("*") {
            ptr_quals.push(self.parse_ptr_quals());
        }
        if self.is_punct("(") {
            return self.err("function pointers are outside the supported C subset");
        }
        let name = self.expect_ident()?;
        let mut dims = Vec::new();
        while self.eat_punct("[") {
            match self.peek().clone() {
                Tok::Int { value, .. } if value > 0 => {
                    self.advance();
                    dims.push(value);
                }
                _ => return self.err("array dimension must be a positive integer literal"),
            }
            self.expect_punct("]")?;
        }
        let init = if allow_init && self.eat_punct("=") {
            Some(self.parse_initializer()?)
        } else {
            None
        };
        Ok(Declarator {
            id: self.id(),
            loc,
            name,
            ptr_quals,
            dims,
            init,
        })
    }

    fn parse_initializer(&mut self) -> Result<Initializer, ParseError> {
        if self.eat_punct("{") {
            let mut items = Vec::new();
            while !self.is_punct("}") {
                items.push(self.parse_initializer()?);
                if !self.eat_punct(",") {
                    break;
                }
            }
            self.expect_punct("}")?;
            Ok(Initializer::List(items))
        } else {
            Ok(Initializer::Expr(self.parse_assign()?))
        }
    }

    fn parse_block(&mut self) -> Result<Block, ParseError> {
        let loc = self.loc();
        self.expect_punct("{")?;
        let id = self.id();
        let mut stmts = Vec::new();
        while !self.is_punct("}") {
            if matches!(self.peek(), Tok::Eof) {
                return self.err("unexpected end of input in block");
            }
            stmts.push(self.parse_stmt()?);
        }
        self.advance();
        Ok(Block { id, loc, stmts })
    }

    fn parse_stmt(&mut self) -> Result<Stmt, ParseError> {
        self.check_unsupported()?;
        let loc = self.loc();
        if matches!(self.peek(), Tok::Directive(_)) {
            return self.err("preprocessor lines are only allowed at file scope");
        }
        if self.is_punct("{") {
            let b = self.parse_block()?;
            return Ok(Stmt {
                id: self.id(),
                loc,
                kind: StmtKind::Block(b),
            });
        }
        if self.eat_punct(";") {
            return Ok(self.stmt(loc, StmtKind::Empty));
        }
        if let Tok::Ident(w) = self.peek().clone() {
            match w.as_str() {
                "if" => {
                    self.advance();
                    self.expect_punct("(")?;
                    let cond = self.parse_expr()?;
                    self.expect_punct(")")?;
                    let then = Box::new(self.parse_stmt()?);
                    let els = if self.is_word("else") {
                        self.advance();
                        Some(Box::new(self.parse_stmt()?))
                    } else {
                        None
                    };
                    return Ok(self.stmt(loc, StmtKind::If { cond, then, els }));
                }
                "while" => {
                    self.advance();
                    self.expect_punct("(")?;
                    let cond = self.parse_expr()?;
                    self.expect_punct(")")?;
                    let body = Box::new(self.parse_stmt()?);
                    return Ok(self.stmt(loc, StmtKind::While { cond, body }));
                }
                "for" => {
                    self.advance();
                    self.expect_punct("(")?;
                    let init = if self.eat_punct(";") {
                        None
                    } else if self.starts_type() {
                        let base = self.parse_base_type()?;
                        let d = self.parse_declarators(base)?;
                        self.expect_punct(";")?;
                        Some(ForInit::Decl(d))
                    } else {
                        let e = self.parse_expr()?;
                        self.expect_punct(";")?;
                        Some(ForInit::Expr(e))
                    };
                    let cond = if self.is_punct(";") {
                        None
                    } else {
                        Some(self.parse_expr()?)
                    };
                    self.expect_punct(";")?;
                    let step = if self.is_punct(")") {
                        None
                    } else {
                        Some(self.parse_expr()?)
                    };
                    self.expect_punct(")")?;
                    let body = Box::new(self.parse_stmt()?);
                    return Ok(self.stmt(
                        loc,
                        StmtKind::For {
                            init,
                            cond,
                            step,
                            body,
                        },
                    ));
                }
                "return" => {
                    self.advance();
                    let e = if self.is_punct(";") {
                        None
                    } else {
                        Some(self.parse_expr()?)
                    };
                    self.expect_punct(";")?;
                    return Ok(self.stmt(loc, StmtKind::Return(e)));
                }
                "break" | "continue" => {
                    self.advance();
                    self.expect_punct(";")?;
                    let k = if w == "break" {
                        StmtKind::Break
                    } else {
                        StmtKind::Continue
                    };
                    return Ok(self.stmt(loc, k));
                }
                "else" => return self.err("`else` without `if`"),
                _ => {}
            }
        }
        if self.starts_type() {
            let base = self.parse_base_type()?;
            let d = self.parse_declarators(base)?;
            self.expect_punct(";")?;
            return Ok(self.stmt(loc, StmtKind::Decl(d)));
        }
        let e = self.parse_expr()?;
        self.expect_punct(";")?;
        Ok(self.stmt(loc, StmtKind::Expr(e)))
    }

    fn stmt(&mut self, loc: SourceLoc, kind: StmtKind) -> Stmt {
        Stmt {
            id: self.id(),
            loc,
            kind,
        }
    }

    fn expr(&mut self, loc: SourceLoc, kind: ExprKind) -> Expr {
        Expr {
            id: self.id(),
            loc,
            kind,
        }
    }

    fn parse_expr(&mut self) -> Result<Expr, ParseError> {
        let e = self.parse_assign()?;
        if self.is_punct(",") {
            return self.err("the comma operator is outside the supported C subset");
        }
        Ok(e)
    }

    fn parse_assign(&mut self) -> Result<Expr, ParseError> {
        let lhs = self.parse_cond()?;
        let op = match self.peek() {
            Tok::Punct("=") => None,
            Tok::Punct(p) => match compound_op(p) {
                Some(op) => Some(op),
                None => return Ok(lhs),
            },
            _ => return Ok(lhs),
        };
        self.advance();
        let rhs = self.parse_assign()?;
        let loc = lhs.loc;
        Ok(self.expr(
            loc,
            ExprKind::Assign {
                op,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
            },
        ))
    }

    fn parse_cond(&mut self) -> Result<Expr, ParseError> {
        let cond = self.parse_binary(0)?;
        if !self.eat_punct("?") {
            return Ok(cond);
        }
        let then = self.parse_expr()?;
        self.expect_punct(":")?;
        let els = self.parse_cond()?;
        let loc = cond.loc;
        Ok(self.expr(
            loc,
            ExprKind::Cond {
                cond: Box::new(cond),
                then: Box::new(then),
                els: Box::new(els),
            },
        ))
    }

    fn parse_binary(&mut self, min_prec: u8) -> Result<Expr, ParseError> {
        let mut lhs = self.parse_unary()?;
        loop {
            let op = match self.peek() {
                Tok::Punct(p) => match binary_op(p) {
                    Some(op) => op,
                    None => break,
                },
                _ => break,
            };
            let prec = op.precedence();
            if prec < min_prec {
                break;
            }
            self.advance();
            let rhs = self.parse_binary(prec + 1)?;
            let loc = lhs.loc;
            lhs = self.expr(
                loc,
                ExprKind::Binary {
                    op,
                    lhs: Box::new(lhs),
                    rhs: Box::new(rhs),
                },
            );
        }
        Ok(lhs)
    }

    fn starts_type_at(&self, n: usize) -> bool {
        match self.peek_at(n) {
            Tok::Ident(w) => {
                QUALIFIERS.contains(&w.as_str())
                    || INT_WORDS.contains(&w.as_str())
                    || w == "struct"
                    || stdint_type(w).is_some()
            }
            _ => false,
        }
    }

    fn parse_type_name(&mut self) -> Result<TypeName, ParseError> {
        let base = self.parse_base_type()?;
        let mut ptr_quals = Vec::new();
        while self.eat_punct("*") {
            ptr_quals.push(self.parse_ptr_quals());
        }
        Ok(TypeName { base, ptr_quals })
    }

    fn parse_unary(&mut self) -> Result<Expr, ParseError> {
        let loc = self.loc();
        let op = match self.peek() {
            Tok::Punct("-") => Some(UnOp::Neg),
            Tok::Punct("+") => Some(UnOp::Plus),
            Tok::Punct("!") => Some(UnOp::Not),
            Tok::Punct("~") => Some(UnOp::BitNot),
            Tok::Punct("*") => Some(UnOp::Deref),
            Tok::Punct("&") => Some(UnOp::AddrOf),
            Tok::Punct("++") => Some(UnOp::PreInc),
            Tok::Punct("--") => Some(UnOp::PreDec),
            _ => None,
        };
        if let Some(op) = op {
            self.advance();
            let operand = self.parse_unary()?;
            return Ok(self.expr(
                loc,
                ExprKind::Unary {
                    op,
                    operand: Box::new(operand),
                },
            ));
        }
        if self.is_word("sizeof") {
            self.advance();
            if self.is_punct("(") && self.starts_type_at(1) {
                self.advance();
                let tn = self.parse_type_name()?;
                self.expect_punct(")")?;
                return Ok(self.expr(loc, ExprKind::SizeofType(tn)));
            }
            let e = self.parse_unary()?;
            return Ok(self.expr(loc, ExprKind::SizeofExpr(Box::new(e))));
        }
        if self.is_punct("(") && self.starts_type_at(1) {
            self.advance();
            let ty = self.parse_type_name()?;
            self.expect_punct(")")?;
            let e = self.parse_unary()?;
            return Ok(self.expr(
                loc,
                ExprKind::Cast {
                    ty,
                    expr: Box::new(e),
                },
            ));
        }
        self.parse_postfix()
    }

    fn parse_postfix(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.parse_primary()?;
        loop {
            let loc = e.loc;
            if self.eat_punct("[") {
                let index = self.parse_expr()?;
                self.expect_punct("]")?;
                e = self.expr(
                    loc,
                    ExprKind::Index {
                        base: Box::new(e),
                        index: Box::new(index),
                    },
                );
            } else if self.is_punct("(") {
                let callee = match &e.kind {
                    ExprKind::Ident(n) => n.clone(),
                    _ => return self.err("only direct calls are supported"),
                };
                self.advance();
                let mut args = Vec::new();
                if !self.eat_punct(")") {
                    loop {
                        args.push(self.parse_assign()?);
                        if self.eat_punct(")") {
                            break;
                        }
                        self.expect_punct(",")?;
                    }
                }
                e = self.expr(loc, ExprKind::Call { callee, args });
            } else if self.is_punct(".") || self.is_punct("->") {
                let arrow = self.is_punct("->");
                self.advance();
                let field = self.expect_ident()?;
                e = self.expr(
                    loc,
                    ExprKind::Member {
                        base: Box::new(e),
                        field,
                        arrow,
                    },
                );
            } else if self.is_punct("++") || self.is_punct("--") {
                let op = if self.is_punct("++") {
                    UnOp::PostInc
                } else {
                    UnOp::PostDec
                };
                self.advance();
                e = self.expr(
                    loc,
                    ExprKind::Unary {
                        op,
                        operand: Box::new(e),
                    },
                );
            } else {
                break;
            }
        }
        Ok(e)
    }

    fn parse_primary(&mut self) -> Result<Expr, ParseError> {
        let loc = self.loc();
        match self.peek().clone() {
            Tok::Int { value, text } => {
                self.advance();
                Ok(self.expr(loc, ExprKind::IntLit { value, text }))
            }
            Tok::Char { value, text } => {
                self.advance();
                Ok(self.expr(loc, ExprKind::CharLit { value, text }))
            }
            Tok::Str(s) => {
                self.advance();
                if matches!(self.peek(), Tok::Str(_)) {
                    return self.err("adjacent string literals are not supported");
                }
                Ok(self.expr(loc, ExprKind::StrLit(s)))
            }
            Tok::Ident(name) => {
                if is_reserved(&name) {
                    self.check_unsupported()?;
                    return self.err(format!("unexpected keyword `{name}`"));
                }
                self.advance();
                Ok(self.expr(loc, ExprKind::Ident(name)))
            }
            Tok::Punct("(") => {
                self.advance();
                let inner = self.parse_expr()?;
                self.expect_punct(")")?;
                Ok(self.expr(loc, ExprKind::Paren(Box::new(inner))))
            }
            t => self.err(format!("expected expression, found {}", describe(&t))),
        }
    }
}

fn int_from_words(words: &[String]) -> Option<Type> {
    let mut signed = None;
    let (mut chars, mut shorts, mut ints, mut longs, mut voids) = (0, 0, 0, 0, 0);
    for w in words {
        match w.as_str() {
            "signed" => {
                if signed.replace(true).is_some() {
                    return None;
                }
            }
            "unsigned" => {
                if signed.replace(false).is_some() {
                    return None;
                }
            }
            "char" => chars += 1,
            "short" => shorts += 1,
            "int" => ints += 1,
            "long" => longs += 1,
            "void" => voids += 1,
            _ => return None,
        }
    }
    if voids == 1 && words.len() == 1 {
        return Some(Type::Void);
    }
    if voids > 0 || chars > 1 || shorts > 1 || ints > 1 || longs > 2 {
        return None;
    }
    let unsigned = signed == Some(false);
    let it = if chars == 1 {
        if shorts + ints + longs > 0 {
            return None;
        }
        match signed {
            None => IntTy::Char,
            Some(true) => IntTy::SChar,
            Some(false) => IntTy::UChar,
        }
    } else if shorts == 1 {
        if longs > 0 {
            return None;
        }
        if unsigned {
            IntTy::UShort
        } else {
            IntTy::Short
        }
    } else if longs == 2 {
        if unsigned {
            IntTy::ULongLong
        } else {
            IntTy::LongLong
        }
    } else if longs == 1 {
        if unsigned {
            IntTy::ULong
        } else {
            IntTy::Long
        }
    } else if ints == 1 || signed.is_some() {
        if unsigned {
            IntTy::UInt
        } else {
            IntTy::Int
        }
    } else {
        return None;
    };
    Some(Type::Int(it))
}

fn is_reserved(w: &str) -> bool {
    QUALIFIERS.contains(&w)
        || INT_WORDS.contains(&w)
        || UNSUPPORTED.contains(&w)
        || matches!(
            w,
            "struct" | "if" | "else" | "while" | "for" | "return" | "break" | "continue" | "sizeof"
        )
}

fn binary_op(p: &str) -> Option<BinOp> {
    use BinOp::*;
    Some(match p {
        "*" => Mul,
        "/" => Div,
        "%" => Rem,
        "+" => Add,
        "-" => Sub,
        "<<" => Shl,
        ">>" => Shr,
        "<" => Lt,
        ">" => Gt,
        "<=" => Le,
        ">=" => Ge,
        "==" => Eq,
        "!=" => Ne,
        "&" => BitAnd,
        "^" => BitXor,
        "|" => BitOr,
        "&&" => And,
        "||" => Or,
        _ => return None,
    })
}

fn compound_op(p: &str) -> Option<BinOp> {
    use BinOp::*;
    Some(match p {
        "*=" => Mul,
        "/=" => Div,
        "%=" => Rem,
        "+=" => Add,
        "-=" => Sub,
        "<<=" => Shl,
        ">>=" => Shr,
        "&=" => BitAnd,
        "^=" => BitXor,
        "|=" => BitOr,
        _ => return None,
    })
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Int { text, .. } => format!("`{text}`"),
        Tok::Char { text, .. } => text.clone(),
        Tok::Str(s) => format!("\"{s}\""),
        Tok::Punct(p) => format!("`{p}`"),
        Tok::Directive(d) => format!("`{d}`"),
        Tok::Eof => "end of input".into(),
    }
}
