use std::collections::HashMap;

use super::memory::{Memory, ObjId, ObjKind, ObjState, NULL_PAGE};
use super::printf::{self, Arg};
use super::{Fault, VmConfig, VmError, VmOutcome, VmRun};
use crate::lang::lexer::unescape;
use crate::lang::sema::*;
use crate::lang::*;
use crate::matching::UbKind;
use crate::oracle::{SiteTrace, Terminal};
use crate::profile::log::{self, Record, Tag};

const MAX_DEPTH: usize = 4000;

#[derive(Clone, Copy, Debug)]
struct Val {
    n: i128,
    prov: Option<ObjId>,
    init: bool,
}

impl Val {
    fn int(n: i128) -> Val {
        Val {
            n,
            prov: None,
            init: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Via {
    Direct,
    Index,
    Deref,
    Arrow,
}

#[derive(Clone, Copy, Debug)]
struct Place {
    addr: u64,
    prov: Option<ObjId>,
    via: Via,
    loc: SourceLoc,
    /// A subscript on an array-typed base fell outside its bound.
    array_oob: bool,
}

enum Stop {
    Ub {
        kind: UbKind,
        loc: SourceLoc,
        detail: String,
    },
    StepLimit,
    Error(VmError),
}

impl From<VmError> for Stop {
    fn from(e: VmError) -> Self {
        Stop::Error(e)
    }
}

type R<T> = Result<T, Stop>;

enum Flow {
    Next,
    Break,
    Continue,
    Return(Option<Val>),
}

#[derive(Default)]
struct Frame {
    vars: HashMap<NodeId, ObjId>,
    /// Stack slots by declaration, reused when a block is re-entered.
    slots: HashMap<NodeId, ObjId>,
    scopes: Vec<Vec<ObjId>>,
    ret: Option<Type>,
}

struct Vm<'a> {
    sema: Sema,
    funcs: HashMap<&'a str, &'a FuncDef>,
    mem: Memory,
    globals: HashMap<NodeId, ObjId>,
    statics: HashMap<NodeId, ObjId>,
    static_decls: std::collections::HashSet<NodeId>,
    frames: Vec<Frame>,
    steps: u64,
    limit: u64,
    stdout: Vec<u8>,
    log: Vec<u8>,
    trace: Option<SiteTrace>,
    cfg: &'a VmConfig,
    lenient: bool,
    eliminated: Option<SourceLoc>,
    in_static_init: bool,
}

fn unsupported<T>(loc: SourceLoc, msg: impl Into<String>) -> R<T> {
    Err(Stop::Error(VmError::Unsupported {
        loc,
        msg: msg.into(),
    }))
}

pub(super) fn execute(ast: &Ast, cfg: &VmConfig) -> Result<VmRun, VmError> {
    let sema = analyze(ast)?;
    let mut funcs = HashMap::new();
    for f in ast.functions() {
        funcs.insert(f.name.as_str(), f);
    }
    let mut static_decls = std::collections::HashSet::new();
    collect_statics(ast, &mut static_decls);
    let mut vm = Vm {
        sema,
        funcs,
        mem: Memory::new(),
        globals: HashMap::new(),
        statics: HashMap::new(),
        static_decls,
        frames: Vec::new(),
        steps: 0,
        limit: cfg.step_limit,
        stdout: Vec::new(),
        log: Vec::new(),
        trace: cfg
            .trace
            .then(|| SiteTrace::new(Vec::new(), false, Terminal::NormalExit)),
        cfg,
        lenient: false,
        eliminated: None,
        in_static_init: false,
    };
    let result = vm.program(ast);
    let outcome = match result {
        Ok(code) => VmOutcome::Normal {
            exit_code: code,
            stdout: String::from_utf8_lossy(&vm.stdout).into_owned(),
        },
        Err(Stop::Ub { kind, loc, detail }) => VmOutcome::Ub {
            kind,
            site: loc,
            detail,
        },
        Err(Stop::StepLimit) => VmOutcome::StepLimit,
        Err(Stop::Error(e)) => return Err(e),
    };
    let mut trace = vm.trace.take();
    if let (Some(t), Some(gone)) = (&mut trace, vm.eliminated) {
        let kept: Vec<SourceLoc> = t.sites.iter().copied().filter(|s| *s != gone).collect();
        *t = SiteTrace::new(kept, t.truncated, t.terminal);
    }
    Ok(VmRun {
        outcome,
        stdout: vm.stdout,
        log: vm.log,
        trace,
    })
}

fn collect_statics(ast: &Ast, out: &mut std::collections::HashSet<NodeId>) {
    struct S<'a>(&'a mut std::collections::HashSet<NodeId>);
    impl crate::lang::visit::Visitor for S<'_> {
        fn visit_decl(&mut self, d: &Decl) {
            if d.base.quals.iter().any(|q| q == "static") {
                for dc in &d.declarators {
                    self.0.insert(dc.id);
                }
            }
            crate::lang::visit::walk_decl(self, d);
        }
    }
    for f in ast.functions() {
        crate::lang::visit::walk_func(&mut S(out), f);
    }
}

impl<'a> Vm<'a> {
    fn program(&mut self, ast: &'a Ast) -> R<i32> {
        self.in_static_init = true;
        for g in ast.globals() {
            if let StmtKind::Decl(d) = &g.kind {
                for dc in &d.declarators {
                    let ty = self.sema.decls[&dc.id].ty.clone();
                    let size = self.sema.size_of(&ty);
                    let id = self.mem.alloc(size, ObjKind::Global, true);
                    self.globals.insert(dc.id, id);
                    if let Some(init) = &dc.init {
                        let p = self.obj_place(id, dc.loc);
                        self.initialize(p, &ty, init)?;
                    }
                }
            }
        }
        self.in_static_init = false;
        let Some(main) = self.funcs.get("main").copied() else {
            return unsupported(SourceLoc::new(1, 1), "no `main` function");
        };
        let ret = self.call_function(main, Vec::new(), main.loc)?;
        Ok((ret.map_or(0, |v| v.n) as i64 & 0xff) as i32)
    }

    fn tick(&mut self) -> R<()> {
        self.steps += 1;
        if self.steps > self.limit {
            return Err(Stop::StepLimit);
        }
        Ok(())
    }

    fn site(&mut self, loc: SourceLoc) {
        if self.in_static_init {
            return;
        }
        if let Some(t) = &mut self.trace {
            t.push(loc);
        }
    }

    /// Reports a violation; `Ok` means execution continues with lenient
    /// semantics.
    fn violate(&mut self, kind: UbKind, loc: SourceLoc, detail: impl FnOnce() -> String) -> R<()> {
        if self.lenient {
            return Ok(());
        }
        if let Some((at, fault)) = self.cfg.policy.fault {
            if at == loc {
                self.lenient = true;
                if fault == Fault::Eliminate {
                    self.eliminated = Some(loc);
                }
                return Ok(());
            }
        }
        if !self.cfg.policy.detects(kind) {
            return Ok(());
        }
        Err(Stop::Ub {
            kind,
            loc,
            detail: detail(),
        })
    }

    fn ty(&self, e: &Expr) -> Type {
        self.sema.type_of(e).clone()
    }

    fn obj_place(&self, id: ObjId, loc: SourceLoc) -> Place {
        Place {
            addr: self.mem.objs[id].base,
            prov: Some(id),
            via: Via::Direct,
            loc,
            array_oob: false,
        }
    }

    fn lookup(&self, decl: NodeId) -> Option<ObjId> {
        self.frames
            .last()
            .and_then(|f| f.vars.get(&decl))
            .or_else(|| self.statics.get(&decl))
            .or_else(|| self.globals.get(&decl))
            .copied()
    }

    // ---- memory access ----

    /// Returns the object and offset if the access is valid.
    fn check_access(&mut self, p: &Place, len: u64) -> R<Option<(ObjId, usize)>> {
        if p.via != Via::Direct {
            self.site(p.loc);
        }
        let oob_kind = if p.via == Via::Index {
            UbKind::BufOverflowArray
        } else {
            UbKind::BufOverflowPointer
        };
        if p.addr < NULL_PAGE {
            self.violate(UbKind::NullPtrDeref, p.loc, || {
                format!("access of {len} bytes at null address {:#x}", p.addr)
            })?;
            return Ok(None);
        }
        let obj = p
            .prov
            .or_else(|| self.mem.find(p.addr))
            .filter(|id| self.mem.objs.get(*id).is_some());
        let Some(id) = obj else {
            self.violate(oob_kind, p.loc, || format!("access at {:#x} outside any object", p.addr))?;
            return Ok(None);
        };
        let (state, base, size) = {
            let o = &self.mem.objs[id];
            (o.state, o.base, o.size)
        };
        match state {
            ObjState::Freed => {
                self.violate(UbKind::UseAfterFree, p.loc, || "access to freed heap memory".into())?;
                return Ok(None);
            }
            ObjState::Dead => {
                self.violate(UbKind::UseAfterScope, p.loc, || "access to out-of-scope stack memory".into())?;
                return Ok(None);
            }
            ObjState::Live => {}
        }
        if !self.mem.objs[id].contains(p.addr, len) {
            self.violate(oob_kind, p.loc, || {
                format!(
                    "access of {len} bytes at offset {} of a {size}-byte object",
                    p.addr as i128 - base as i128
                )
            })?;
            return Ok(None);
        }
        if p.array_oob {
            self.violate(UbKind::BufOverflowArray, p.loc, || "index out of array bounds".into())?;
        }
        Ok(Some((id, (p.addr - base) as usize)))
    }

    fn load(&mut self, p: &Place, ty: &Type) -> R<Val> {
        let len = self.sema.size_of(ty);
        let (bytes, init, prov) = match self.check_access(p, len)? {
            Some((id, off)) => {
                let o = &self.mem.objs[id];
                let end = off + len as usize;
                (
                    o.bytes[off..end].to_vec(),
                    o.init[off..end].iter().all(|b| *b),
                    o.ptrs.get(&(off as u64)).copied(),
                )
            }
            None => {
                let (b, i) = self.mem.read_loose(p.addr, len);
                (b, i, None)
            }
        };
        let mut raw = [0u8; 16];
        raw[..bytes.len()].copy_from_slice(&bytes);
        let unsigned = u128::from_le_bytes(raw) as i128;
        let n = match ty {
            Type::Int(t) => t.wrap(unsigned),
            Type::Ptr(_) => unsigned,
            _ => return unsupported(p.loc, format!("load of type {ty}")),
        };
        let prov = match ty {
            Type::Ptr(_) => prov.or_else(|| self.mem.find(n as u64)),
            _ => None,
        };
        Ok(Val { n, prov, init })
    }

    fn store(&mut self, p: &Place, ty: &Type, v: Val) -> R<()> {
        let len = self.sema.size_of(ty);
        let bytes = ((v.n as u128).to_le_bytes())[..len as usize].to_vec();
        match self.check_access(p, len)? {
            Some((id, off)) => {
                let o = &mut self.mem.objs[id];
                let end = off + len as usize;
                o.bytes[off..end].copy_from_slice(&bytes);
                o.init[off..end].iter_mut().for_each(|b| *b = v.init);
                let stale: Vec<u64> = o.ptrs.range(off as u64..end as u64).map(|(k, _)| *k).collect();
                for k in stale {
                    o.ptrs.remove(&k);
                }
                if let (Type::Ptr(_), Some(pr)) = (ty, v.prov) {
                    o.ptrs.insert(off as u64, pr);
                }
            }
            None => self.mem.write_loose(p.addr, &bytes),
        }
        Ok(())
    }

    fn copy(&mut self, dst: &Place, src: &Place, len: u64) -> R<()> {
        let from = self.check_access(src, len)?;
        let (bytes, init, ptrs) = match from {
            Some((id, off)) => {
                let o = &self.mem.objs[id];
                let end = off + len as usize;
                let ptrs: Vec<(u64, ObjId)> = o
                    .ptrs
                    .range(off as u64..end as u64)
                    .map(|(k, v)| (*k - off as u64, *v))
                    .collect();
                (o.bytes[off..end].to_vec(), o.init[off..end].to_vec(), ptrs)
            }
            None => {
                let (b, i) = self.mem.read_loose(src.addr, len);
                (b, vec![i; len as usize], Vec::new())
            }
        };
        match self.check_access(dst, len)? {
            Some((id, off)) => {
                let o = &mut self.mem.objs[id];
                let end = off + len as usize;
                o.bytes[off..end].copy_from_slice(&bytes);
                o.init[off..end].copy_from_slice(&init);
                let stale: Vec<u64> = o.ptrs.range(off as u64..end as u64).map(|(k, _)| *k).collect();
                for k in stale {
                    o.ptrs.remove(&k);
                }
                for (k, v) in ptrs {
                    o.ptrs.insert(k + off as u64, v);
                }
            }
            None => self.mem.write_loose(dst.addr, &bytes),
        }
        Ok(())
    }

    /// Fills a fresh object region with zeros marked initialized.
    fn zero_fill(&mut self, p: &Place, len: u64) {
        if let Some(id) = p.prov {
            let o = &mut self.mem.objs[id];
            if o.contains(p.addr, len) {
                let off = (p.addr - o.base) as usize;
                o.bytes[off..off + len as usize].fill(0);
                o.init[off..off + len as usize].fill(true);
            }
        }
    }

    fn initialize(&mut self, p: Place, ty: &Type, init: &Initializer) -> R<()> {
        match init {
            Initializer::Expr(e) => match ty {
                Type::Struct(_) => {
                    let src = self.place(e)?;
                    let len = self.sema.size_of(ty);
                    self.copy(&p, &src, len)
                }
                Type::Array(..) => unsupported(e.loc, "array initialized from an expression"),
                _ => {
                    let v = self.rvalue(e)?;
                    let v = self.convert(v, &self.ty(e).decay(), ty);
                    self.store(&p, ty, v)
                }
            },
            Initializer::List(items) => {
                let len = self.sema.size_of(ty);
                self.zero_fill(&p, len);
                match ty {
                    Type::Array(elem, n) => {
                        let es = self.sema.size_of(elem);
                        for (k, item) in items.iter().enumerate().take(*n as usize) {
                            let sub = Place {
                                addr: p.addr + k as u64 * es,
                                ..p
                            };
                            self.initialize(sub, elem, item)?;
                        }
                        Ok(())
                    }
                    Type::Struct(name) => {
                        let fields = self.sema.layouts.structs[name].fields.clone();
                        for (f, item) in fields.iter().zip(items) {
                            let sub = Place {
                                addr: p.addr + f.offset,
                                ..p
                            };
                            self.initialize(sub, &f.ty, item)?;
                        }
                        Ok(())
                    }
                    _ => match items.first() {
                        Some(first) => self.initialize(p, ty, first),
                        None => Ok(()),
                    },
                }
            }
        }
    }

    // ---- statements ----

    fn call_function(&mut self, f: &'a FuncDef, args: Vec<Val>, loc: SourceLoc) -> R<Option<Val>> {
        if self.frames.len() >= MAX_DEPTH {
            return Err(Stop::StepLimit);
        }
        let Some(body) = &f.body else {
            return unsupported(loc, format!("`{}` has no definition", f.name));
        };
        let mut frame = Frame {
            ret: Some(f.ret.ty()),
            ..Frame::default()
        };
        let mut params = Vec::new();
        for (p, v) in f.params.iter().zip(args) {
            let ty = p.ty();
            let id = self.mem.alloc(self.sema.size_of(&ty), ObjKind::Stack, false);
            frame.vars.insert(p.id, id);
            params.push((id, ty, v));
        }
        frame.scopes.push(params.iter().map(|p| p.0).collect());
        self.frames.push(frame);
        for (id, ty, v) in params {
            let pl = self.obj_place(id, loc);
            self.store(&pl, &ty, v)?;
        }
        let flow = self.block(body)?;
        let frame = self.frames.pop().expect("frame");
        for scope in frame.scopes {
            self.kill(&scope);
        }
        let is_main = f.name == "main";
        Ok(match flow {
            Flow::Return(v) => v,
            _ if is_main => Some(Val::int(0)),
            _ => None,
        })
    }

    fn kill(&mut self, objs: &[ObjId]) {
        for id in objs {
            if self.mem.objs[*id].state == ObjState::Live {
                self.mem.objs[*id].state = ObjState::Dead;
            }
        }
    }

    fn frame(&mut self) -> &mut Frame {
        self.frames.last_mut().expect("active frame")
    }

    fn block(&mut self, b: &'a Block) -> R<Flow> {
        self.frame().scopes.push(Vec::new());
        let mut flow = Flow::Next;
        for s in &b.stmts {
            flow = self.stmt(s)?;
            if !matches!(flow, Flow::Next) {
                break;
            }
        }
        let scope = self.frame().scopes.pop().unwrap_or_default();
        self.kill(&scope);
        Ok(flow)
    }

    fn truth(&mut self, e: &Expr) -> R<bool> {
        let v = self.rvalue(e)?;
        self.site(e.loc);
        if !v.init {
            self.violate(UbKind::UseOfUninitMemory, e.loc, || {
                "branch on uninitialized value".into()
            })?;
        }
        Ok(v.n != 0)
    }

    fn local_decl(&mut self, d: &Decl) -> R<()> {
        for dc in &d.declarators {
            self.tick()?;
            let ty = self.sema.decls[&dc.id].ty.clone();
            if self.static_decls.contains(&dc.id) {
                if let Some(id) = self.statics.get(&dc.id).copied() {
                    self.frame().vars.insert(dc.id, id);
                    continue;
                }
                let id = self.mem.alloc(self.sema.size_of(&ty), ObjKind::Global, true);
                self.statics.insert(dc.id, id);
                self.frame().vars.insert(dc.id, id);
                if let Some(init) = &dc.init {
                    let p = self.obj_place(id, dc.loc);
                    let saved = std::mem::replace(&mut self.in_static_init, true);
                    self.initialize(p, &ty, init)?;
                    self.in_static_init = saved;
                }
                continue;
            }
            let id = match self.frame().slots.get(&dc.id).copied() {
                Some(id) => {
                    let o = &mut self.mem.objs[id];
                    o.state = ObjState::Live;
                    o.init.fill(false);
                    o.ptrs.clear();
                    id
                }
                None => {
                    let id = self.mem.alloc(self.sema.size_of(&ty), ObjKind::Stack, false);
                    self.frame().slots.insert(dc.id, id);
                    id
                }
            };
            if let Some(init) = &dc.init {
                // The declared name is not visible inside its own initializer.
                let p = self.obj_place(id, dc.loc);
                self.initialize(p, &ty, init)?;
            }
            let f = self.frame();
            f.vars.insert(dc.id, id);
            if let Some(s) = f.scopes.last_mut() {
                s.push(id);
            }
        }
        Ok(())
    }

    fn stmt(&mut self, s: &'a Stmt) -> R<Flow> {
        self.tick()?;
        if !matches!(s.kind, StmtKind::Block(_)) {
            self.site(s.loc);
        }
        match &s.kind {
            StmtKind::Expr(e) => {
                self.effect(e)?;
                Ok(Flow::Next)
            }
            StmtKind::Decl(d) => {
                self.local_decl(d)?;
                Ok(Flow::Next)
            }
            StmtKind::Block(b) => self.block(b),
            StmtKind::If { cond, then, els } => {
                if self.truth(cond)? {
                    self.stmt(then)
                } else if let Some(e) = els {
                    self.stmt(e)
                } else {
                    Ok(Flow::Next)
                }
            }
            StmtKind::While { cond, body } => {
                while self.truth(cond)? {
                    match self.stmt(body)? {
                        Flow::Break => break,
                        Flow::Return(v) => return Ok(Flow::Return(v)),
                        Flow::Next | Flow::Continue => {}
                    }
                }
                Ok(Flow::Next)
            }
            StmtKind::For {
                init,
                cond,
                step,
                body,
            } => {
                self.frame().scopes.push(Vec::new());
                let r = self.for_loop(init, cond, step, body);
                let scope = self.frame().scopes.pop().unwrap_or_default();
                self.kill(&scope);
                r
            }
            StmtKind::Return(e) => {
                let v = match e {
                    Some(e) => {
                        let v = self.rvalue(e)?;
                        let ret = self.frame().ret.clone().unwrap_or(Type::Void);
                        Some(self.convert(v, &self.ty(e).decay(), &ret))
                    }
                    None => None,
                };
                Ok(Flow::Return(v))
            }
            StmtKind::Break => Ok(Flow::Break),
            StmtKind::Continue => Ok(Flow::Continue),
            StmtKind::Empty => Ok(Flow::Next),
        }
    }

    fn for_loop(
        &mut self,
        init: &'a Option<ForInit>,
        cond: &Option<Expr>,
        step: &Option<Expr>,
        body: &'a Stmt,
    ) -> R<Flow> {
        match init {
            Some(ForInit::Decl(d)) => self.local_decl(d)?,
            Some(ForInit::Expr(e)) => self.effect(e)?,
            None => {}
        }
        loop {
            if let Some(c) = cond {
                if !self.truth(c)? {
                    break;
                }
            }
            match self.stmt(body)? {
                Flow::Break => break,
                Flow::Return(v) => return Ok(Flow::Return(v)),
                Flow::Next | Flow::Continue => {}
            }
            if let Some(st) = step {
                self.effect(st)?;
            }
        }
        Ok(Flow::Next)
    }

    /// Evaluates an expression for its side effects.
    fn effect(&mut self, e: &Expr) -> R<()> {
        match self.ty(e) {
            Type::Struct(_) if !matches!(e.kind, ExprKind::Assign { .. }) => {
                self.place(e)?;
            }
            _ => {
                self.rvalue(e)?;
            }
        }
        Ok(())
    }

    // ---- expressions ----

    fn convert(&self, v: Val, from: &Type, to: &Type) -> Val {
        match to {
            Type::Int(t) => Val {
                n: t.wrap(v.n),
                prov: None,
                init: v.init,
            },
            Type::Ptr(_) => Val {
                n: IntTy::ULong.wrap(v.n),
                prov: if from.is_ptr() {
                    v.prov
                } else {
                    self.mem.find(IntTy::ULong.wrap(v.n) as u64)
                },
                init: v.init,
            },
            _ => v,
        }
    }

    fn place(&mut self, e: &Expr) -> R<Place> {
        self.tick()?;
        match &e.kind {
            ExprKind::Ident(name) => {
                let Some(decl) = self.sema.uses.get(&e.id).copied() else {
                    return unsupported(e.loc, format!("unresolved `{name}`"));
                };
                let Some(id) = self.lookup(decl) else {
                    return unsupported(e.loc, format!("`{name}` has no storage"));
                };
                Ok(self.obj_place(id, e.loc))
            }
            ExprKind::Paren(x) => self.place(x),
            ExprKind::Unary {
                op: UnOp::Deref,
                operand,
            } => {
                let v = self.rvalue(operand)?;
                if !v.init {
                    self.site(e.loc);
                    self.violate(UbKind::UseOfUninitMemory, e.loc, || {
                        "dereference of uninitialized pointer".into()
                    })?;
                }
                Ok(Place {
                    addr: v.n as u64,
                    prov: v.prov,
                    via: Via::Deref,
                    loc: e.loc,
                    array_oob: false,
                })
            }
            ExprKind::Index { base, index } => {
                let b = self.rvalue(base)?;
                let i = self.rvalue(index)?;
                if !(b.init && i.init) {
                    self.site(e.loc);
                    self.violate(UbKind::UseOfUninitMemory, e.loc, || {
                        "subscript with uninitialized operand".into()
                    })?;
                }
                let es = self.sema.size_of(&self.ty(e)) as i128;
                let array_oob = match self.sema.type_of(base) {
                    Type::Array(_, n) => i.n < 0 || i.n >= i128::from(*n),
                    _ => false,
                };
                Ok(Place {
                    addr: IntTy::ULong.wrap(b.n + i.n * es) as u64,
                    prov: b.prov,
                    via: Via::Index,
                    loc: e.loc,
                    array_oob,
                })
            }
            ExprKind::Member { base, field, arrow } => {
                let (bp, sname) = if *arrow {
                    let v = self.rvalue(base)?;
                    let sname = match self.sema.type_of(base).decay() {
                        Type::Ptr(t) => match *t {
                            Type::Struct(s) => s,
                            _ => return unsupported(e.loc, "arrow on non-struct"),
                        },
                        _ => return unsupported(e.loc, "arrow on non-pointer"),
                    };
                    (
                        Place {
                            addr: v.n as u64,
                            prov: v.prov,
                            via: Via::Arrow,
                            loc: e.loc,
                            array_oob: false,
                        },
                        sname,
                    )
                } else {
                    let p = self.place(base)?;
                    let Type::Struct(s) = self.ty(base) else {
                        return unsupported(e.loc, "member of non-struct");
                    };
                    (p, s)
                };
                let off = self.sema.layouts.structs[&sname]
                    .field(field)
                    .map(|f| f.offset)
                    .unwrap_or(0);
                Ok(Place {
                    addr: bp.addr.wrapping_add(off),
                    ..bp
                })
            }
            _ => unsupported(e.loc, "expression is not an lvalue"),
        }
    }

    fn rvalue(&mut self, e: &Expr) -> R<Val> {
        self.tick()?;
        let ty = self.ty(e);
        match &e.kind {
            ExprKind::IntLit { value, .. } => Ok(Val::int(match &ty {
                Type::Int(t) => t.wrap(i128::from(*value)),
                _ => i128::from(*value),
            })),
            ExprKind::CharLit { value, .. } => Ok(Val::int(i128::from(*value))),
            ExprKind::StrLit(_) => unsupported(e.loc, "string literal outside printf"),
            ExprKind::Ident(_)
            | ExprKind::Index { .. }
            | ExprKind::Member { .. }
            | ExprKind::Unary {
                op: UnOp::Deref, ..
            } => {
                let p = self.place(e)?;
                match &ty {
                    Type::Array(..) => Ok(Val {
                        n: i128::from(p.addr),
                        prov: p.prov,
                        init: true,
                    }),
                    Type::Struct(_) => unsupported(e.loc, "struct used as a value"),
                    _ => self.load(&p, &ty),
                }
            }
            ExprKind::Paren(x) => self.rvalue(x),
            ExprKind::Unary { op, operand } => self.unary(e, *op, operand, &ty),
            ExprKind::Binary { op, lhs, rhs } => self.binary(e, *op, lhs, rhs, &ty),
            ExprKind::Assign { op, lhs, rhs } => self.assign(e, *op, lhs, rhs),
            ExprKind::Cond { cond, then, els } => {
                let branch = if self.truth(cond)? { then } else { els };
                let v = self.rvalue(branch)?;
                Ok(self.convert(v, &self.ty(branch).decay(), &ty))
            }
            ExprKind::Call { callee, args } => self.call(e, callee, args),
            ExprKind::Cast { expr, .. } => {
                let v = self.rvalue(expr)?;
                Ok(self.convert(v, &self.ty(expr).decay(), &ty))
            }
            ExprKind::SizeofType(t) => Ok(Val::int(i128::from(self.sema.size_of(&t.ty())))),
            ExprKind::SizeofExpr(x) => Ok(Val::int(i128::from(self.sema.size_of(self.sema.type_of(x))))),
        }
    }

    fn unary(&mut self, e: &Expr, op: UnOp, x: &Expr, ty: &Type) -> R<Val> {
        match op {
            UnOp::AddrOf => {
                let p = self.place(x)?;
                Ok(Val {
                    n: i128::from(p.addr),
                    prov: p.prov,
                    init: true,
                })
            }
            UnOp::Not => {
                let v = self.rvalue(x)?;
                Ok(Val {
                    n: i128::from(v.n == 0),
                    prov: None,
                    init: v.init,
                })
            }
            UnOp::Neg | UnOp::Plus | UnOp::BitNot => {
                let v = self.rvalue(x)?;
                let Type::Int(t) = *ty else {
                    return unsupported(e.loc, "arithmetic on non-integer");
                };
                let a = t.wrap(v.n);
                let n = match op {
                    UnOp::Neg => {
                        let exact = -a;
                        if t.signed() && v.init {
                            self.site(e.loc);
                            if !t.contains(exact) {
                                self.violate(UbKind::IntegerOverflow, e.loc, || {
                                    format!("negation of {a} overflows {}", t.c_name())
                                })?;
                            }
                        }
                        t.wrap(exact)
                    }
                    UnOp::BitNot => t.wrap(!a),
                    _ => a,
                };
                Ok(Val {
                    n,
                    prov: None,
                    init: v.init,
                })
            }
            UnOp::PreInc | UnOp::PreDec | UnOp::PostInc | UnOp::PostDec => {
                let t = self.ty(x);
                let p = self.place(x)?;
                let cur = self.load(&p, &t)?;
                let delta: i128 = if matches!(op, UnOp::PreInc | UnOp::PostInc) { 1 } else { -1 };
                let new = match &t {
                    Type::Ptr(inner) => Val {
                        n: IntTy::ULong.wrap(cur.n + delta * self.sema.size_of(inner) as i128),
                        ..cur
                    },
                    Type::Int(it) => {
                        let exact = cur.n + delta;
                        if it.signed() && it.promote() == *it && cur.init {
                            self.site(e.loc);
                            if !it.contains(exact) {
                                self.violate(UbKind::IntegerOverflow, e.loc, || {
                                    format!("{} {} 1 overflows {}", cur.n, if delta > 0 { "+" } else { "-" }, it.c_name())
                                })?;
                            }
                        }
                        Val {
                            n: it.wrap(exact),
                            ..cur
                        }
                    }
                    _ => return unsupported(e.loc, "increment of non-scalar"),
                };
                self.store(&p, &t, new)?;
                Ok(if matches!(op, UnOp::PreInc | UnOp::PreDec) { new } else { cur })
            }
            UnOp::Deref => unreachable!("handled as an lvalue"),
        }
    }

    fn binary(&mut self, e: &Expr, op: BinOp, l: &Expr, r: &Expr, ty: &Type) -> R<Val> {
        if matches!(op, BinOp::And | BinOp::Or) {
            let a = self.truth(l)?;
            let res = match op {
                BinOp::And => a && self.truth(r)?,
                _ => a || self.truth(r)?,
            };
            return Ok(Val::int(i128::from(res)));
        }
        let lt = self.ty(l).decay();
        let rt = self.ty(r).decay();
        let a = self.rvalue(l)?;
        let b = self.rvalue(r)?;
        self.arith(op, a, &lt, b, &rt, ty, e.loc)
    }

    /// Applies a binary operator to already-evaluated operands.
    #[allow(clippy::too_many_arguments)]
    fn arith(&mut self, op: BinOp, a: Val, lt: &Type, b: Val, rt: &Type, ty: &Type, loc: SourceLoc) -> R<Val> {
        use BinOp::*;
        let init = a.init && b.init;
        // Pointer arithmetic and comparisons.
        if lt.is_ptr() || rt.is_ptr() {
            let n = match (op, lt, rt) {
                (Add, Type::Ptr(t), Type::Int(_)) | (Sub, Type::Ptr(t), Type::Int(_)) => {
                    let s = self.sema.size_of(t) as i128;
                    let d = if op == Add { b.n * s } else { -b.n * s };
                    return Ok(Val {
                        n: IntTy::ULong.wrap(a.n + d),
                        prov: a.prov,
                        init,
                    });
                }
                (Add, Type::Int(_), Type::Ptr(t)) => {
                    let s = self.sema.size_of(t) as i128;
                    return Ok(Val {
                        n: IntTy::ULong.wrap(b.n + a.n * s),
                        prov: b.prov,
                        init,
                    });
                }
                (Sub, Type::Ptr(t), Type::Ptr(_)) => {
                    let s = self.sema.size_of(t).max(1) as i128;
                    IntTy::Long.wrap(IntTy::Long.wrap(a.n - b.n) / s)
                }
                (Lt, ..) => i128::from(a.n < b.n),
                (Gt, ..) => i128::from(a.n > b.n),
                (Le, ..) => i128::from(a.n <= b.n),
                (Ge, ..) => i128::from(a.n >= b.n),
                (Eq, ..) => i128::from(a.n == b.n),
                (Ne, ..) => i128::from(a.n != b.n),
                _ => return unsupported(loc, "invalid pointer arithmetic"),
            };
            return Ok(Val {
                n,
                prov: None,
                init,
            });
        }
        let (Type::Int(li), Type::Int(ri)) = (lt, rt) else {
            return unsupported(loc, "arithmetic on non-integers");
        };
        let out = |n: i128| Val {
            n,
            prov: None,
            init,
        };
        match op {
            Lt | Gt | Le | Ge | Eq | Ne => {
                let c = IntTy::common(*li, *ri);
                let (x, y) = (c.wrap(a.n), c.wrap(b.n));
                let r = match op {
                    Lt => x < y,
                    Gt => x > y,
                    Le => x <= y,
                    Ge => x >= y,
                    Eq => x == y,
                    _ => x != y,
                };
                Ok(out(i128::from(r)))
            }
            Shl | Shr => {
                let p = li.promote();
                let x = p.wrap(a.n);
                let s = ri.promote().wrap(b.n);
                let bits = i128::from(p.bits());
                if init {
                    self.site(loc);
                }
                let mut amount = s;
                if init && (s < 0 || s >= bits) {
                    self.violate(UbKind::ShiftOverflow, loc, || {
                        format!("shift exponent {s} is out of range for {}", p.c_name())
                    })?;
                    amount = s & (bits - 1);
                }
                let amount = amount.clamp(0, bits - 1) as u32;
                if op == Shr {
                    return Ok(out(p.wrap(x >> amount)));
                }
                let exact = x << amount;
                if init && p.signed() && (x < 0 || !p.contains(exact)) {
                    self.violate(UbKind::ShiftOverflow, loc, || {
                        format!("left shift of {x} by {amount} places cannot be represented in {}", p.c_name())
                    })?;
                }
                Ok(out(p.wrap(exact)))
            }
            _ => {
                let Type::Int(c) = *ty else {
                    return unsupported(loc, "arithmetic result is not an integer");
                };
                let (x, y) = (c.wrap(a.n), c.wrap(b.n));
                let checked = c.signed() && init;
                if checked || matches!(op, Div | Rem) && init {
                    self.site(loc);
                }
                let exact = match op {
                    Add => x + y,
                    Sub => x - y,
                    Mul => x.checked_mul(y).unwrap_or_else(|| x.wrapping_mul(y)),
                    Div | Rem => {
                        if y == 0 {
                            if init {
                                self.violate(UbKind::DivideByZero, loc, || "division by zero".into())?;
                            }
                            return Ok(out(0));
                        }
                        if c.signed() && x == c.min_value() && y == -1 {
                            if init {
                                self.violate(UbKind::IntegerOverflow, loc, || {
                                    format!("{x} {} -1 overflows {}", op.symbol(), c.c_name())
                                })?;
                            }
                            return Ok(out(if op == Div { x } else { 0 }));
                        }
                        if op == Div {
                            x / y
                        } else {
                            x % y
                        }
                    }
                    BitAnd => x & y,
                    BitXor => x ^ y,
                    BitOr => x | y,
                    _ => unreachable!("handled above"),
                };
                if checked && matches!(op, Add | Sub | Mul) && !c.contains(exact) {
                    self.violate(UbKind::IntegerOverflow, loc, || {
                        format!("{x} {} {y} overflows {}", op.symbol(), c.c_name())
                    })?;
                }
                Ok(out(c.wrap(exact)))
            }
        }
    }

    fn assign(&mut self, e: &Expr, op: Option<BinOp>, lhs: &Expr, rhs: &Expr) -> R<Val> {
        let lt = self.ty(lhs);
        let rt = self.ty(rhs).decay();
        if let Type::Struct(_) = lt {
            let src = self.place(rhs)?;
            let dst = self.place(lhs)?;
            let len = self.sema.size_of(&lt);
            self.copy(&dst, &src, len)?;
            return Ok(Val::int(0));
        }
        let r = self.rvalue(rhs)?;
        let p = self.place(lhs)?;
        let v = match op {
            None => self.convert(r, &rt, &lt),
            Some(bop) => {
                let cur = self.load(&p, &lt)?;
                let res_ty = match (&lt, &rt, bop) {
                    (Type::Ptr(_), ..) => lt.clone(),
                    (Type::Int(a), _, BinOp::Shl | BinOp::Shr) => Type::Int(a.promote()),
                    (Type::Int(a), Type::Int(b), _) => Type::Int(IntTy::common(*a, *b)),
                    _ => return unsupported(e.loc, "invalid compound assignment"),
                };
                let res = self.arith(bop, cur, &lt, r, &rt, &res_ty, e.loc)?;
                self.convert(res, &res_ty, &lt)
            }
        };
        self.store(&p, &lt, v)?;
        Ok(v)
    }

    fn record(&mut self, tag: Tag, probe: &Expr, a: u64, b: u64) {
        let probe = match probe.kind {
            ExprKind::IntLit { value, .. } => value as u32,
            _ => 0,
        };
        log::encode(&mut self.log, &Record { tag, probe, a, b });
    }

    fn call(&mut self, e: &Expr, callee: &str, args: &[Expr]) -> R<Val> {
        match callee {
            "printf" => self.printf(e, args),
            "malloc" | HOOK_MALLOC => {
                let size_arg = &args[args.len() - 1];
                let v = self.rvalue(size_arg)?;
                let size = IntTy::ULong.wrap(v.n) as u64;
                if size > 1 << 28 {
                    return unsupported(e.loc, format!("allocation of {size} bytes"));
                }
                let id = self.mem.alloc(size, ObjKind::Heap, false);
                let base = self.mem.objs[id].base;
                if callee == HOOK_MALLOC {
                    self.record(Tag::Range, &args[0], base, size);
                }
                Ok(Val {
                    n: i128::from(base),
                    prov: Some(id),
                    init: true,
                })
            }
            "free" => {
                let v = self.rvalue(&args[0])?;
                self.free(e, v)?;
                Ok(Val::int(0))
            }
            HOOK_VAL | HOOK_ADDR | HOOK_FREED => {
                let v = self.rvalue(&args[1])?;
                let tag = match callee {
                    HOOK_VAL => Tag::Value,
                    HOOK_ADDR => Tag::Access,
                    _ => Tag::Free,
                };
                self.record(tag, &args[0], v.n as u64, 0);
                Ok(v)
            }
            HOOK_VALP => {
                let p = self.rvalue(&args[1])?;
                let Type::Ptr(inner) = self.ty(&args[1]).decay() else {
                    return unsupported(e.loc, "value probe needs a pointer");
                };
                let place = Place {
                    addr: p.n as u64,
                    prov: p.prov,
                    via: Via::Direct,
                    loc: e.loc,
                    array_oob: false,
                };
                let v = self.load(&place, &inner)?;
                self.record(Tag::Value, &args[0], v.n as u64, 0);
                Ok(p)
            }
            HOOK_RANGE => {
                let a = self.rvalue(&args[1])?;
                let s = self.rvalue(&args[2])?;
                self.record(Tag::Range, &args[0], a.n as u64, s.n as u64);
                Ok(Val::int(0))
            }
            HOOK_ENTER => {
                self.record(Tag::Scope, &args[0], 0, 0);
                Ok(Val::int(0))
            }
            name => {
                let Some(f) = self.funcs.get(name).copied() else {
                    return unsupported(e.loc, format!("call to undefined `{name}`"));
                };
                let mut vals = Vec::with_capacity(args.len());
                for (a, p) in args.iter().zip(&f.params) {
                    let v = self.rvalue(a)?;
                    vals.push(self.convert(v, &self.ty(a).decay(), &p.ty()));
                }
                let ret = self.call_function(f, vals, e.loc)?;
                Ok(ret.unwrap_or(Val {
                    n: 0,
                    prov: None,
                    init: false,
                }))
            }
        }
    }

    fn free(&mut self, e: &Expr, v: Val) -> R<()> {
        if v.n == 0 {
            return Ok(());
        }
        let addr = v.n as u64;
        let target = v
            .prov
            .or_else(|| self.mem.find(addr))
            .filter(|id| self.mem.objs[*id].kind == ObjKind::Heap && self.mem.objs[*id].base == addr);
        self.site(e.loc);
        match target {
            Some(id) if self.mem.objs[id].state == ObjState::Freed => {
                self.violate(UbKind::UseAfterFree, e.loc, || "double free".into())
            }
            Some(id) => {
                self.mem.objs[id].state = ObjState::Freed;
                Ok(())
            }
            None if self.lenient => Ok(()),
            None => unsupported(e.loc, format!("free of {addr:#x}, which is not a heap block")),
        }
    }

    fn printf(&mut self, e: &Expr, args: &[Expr]) -> R<Val> {
        let ExprKind::StrLit(body) = &args[0].kind else {
            return unsupported(e.loc, "printf format must be a literal");
        };
        let Some(fmt) = unescape(body) else {
            return unsupported(e.loc, "bad format string");
        };
        let specs = match printf::specs(&fmt) {
            Ok(s) => s,
            Err(m) => return unsupported(e.loc, m),
        };
        if specs.len() != args.len() - 1 {
            return unsupported(e.loc, "printf argument count does not match its format");
        }
        let mut vals = Vec::new();
        for (a, spec) in args[1..].iter().zip(&specs) {
            let v = self.rvalue(a)?;
            if !v.init {
                self.site(a.loc);
                self.violate(UbKind::UseOfUninitMemory, a.loc, || {
                    "uninitialized value passed to printf".into()
                })?;
            }
            if spec.conv == b's' {
                let mut s = Vec::new();
                let mut p = v.n as u64;
                loop {
                    let (b, _) = self.mem.read_loose(p, 1);
                    if b[0] == 0 || s.len() > 4096 {
                        break;
                    }
                    s.push(b[0]);
                    p += 1;
                }
                vals.push(Arg::Str(s));
            } else {
                vals.push(Arg::Int(v.n));
            }
        }
        match printf::format(&fmt, &vals) {
            Ok(out) => {
                let n = out.len();
                self.stdout.extend_from_slice(&out);
                Ok(Val::int(n as i128))
            }
            Err(m) => unsupported(e.loc, m),
        }
    }
}
