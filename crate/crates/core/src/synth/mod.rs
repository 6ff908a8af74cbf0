//! Shadow-statement synthesis: force the first evaluation of a live site in a
//! UB-free seed to violate its no-UB condition, and emit the result.

mod emit;
#[cfg(test)]
mod tests;

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Duration;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

pub use emit::{insert, Inserted};

use crate::lang::visit::{walk_ast, walk_expr, walk_stmt, Visitor};
use crate::lang::*;
use crate::matching::{matched_with, Construct, MatchSite, UbKind};
use crate::profile::{
    self, instrument, q_liv, q_mem, q_scp, q_val, ExecutionProfile, InstrumentError, MemRef, ObjStorage,
    ProfileError,
};
use crate::toolchain::Toolchain;

pub const MONTE_CARLO_DRAWS: usize = 64;

/// Largest number of bytes an access may reach past the end of its object.
pub const REDZONE_LIMIT: i128 = 32;

#[derive(Debug, Error)]
pub enum SynthError {
    #[error("site {0} was never executed")]
    NotLive(NodeId),
    #[error("no eligible target: {0}")]
    NoEligibleTarget(String),
    #[error("no overflowing operands within {0} draws")]
    SynthesisBudgetExhausted(usize),
    #[error("anchor statement {0} not found")]
    AnchorNotFound(NodeId),
    #[error("site {0} not found")]
    SiteNotFound(NodeId),
    #[error("emitted program does not re-parse: {0}")]
    Reparse(ParseError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Profile(#[from] ProfileError),
    #[error(transparent)]
    Instrument(#[from] InstrumentError),
}

/// An auxiliary variable. Variables without a value stay uninitialized.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuxVar {
    pub name: String,
    pub ty: IntTy,
    pub value: Option<i128>,
}

/// A statement inserted before the anchor that changes program state.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Effect {
    /// `p = 0;`
    Null { ptr: Expr },
    /// `{ T tmp; p = &tmp; }`
    Scope { ptr: Expr, pointee: Type, tmp: String },
    /// `free((char *)(p) - offset);`
    Free { ptr: Expr, offset: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rewrite {
    Keep,
    /// Operand `slot` of the target becomes `operand + aux`.
    Offset(Vec<(u8, String)>),
    /// `x++` becomes `x += 1 + aux`, `x--` becomes `x -= 1 + aux`.
    Step(String),
    /// Condition `c` becomes `(c) + aux`.
    CondPlus(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShadowStmt {
    pub kind: UbKind,
    pub site: NodeId,
    pub anchor: NodeId,
    pub decls: Vec<AuxVar>,
    pub effect: Option<Effect>,
    pub rewrite: Rewrite,
}

impl ShadowStmt {
    /// The inserted lines, joined by spaces.
    pub fn text(&self) -> String {
        let mut out = Vec::new();
        for a in &self.decls {
            out.push(format!("{} {};", a.ty.c_name(), a.name));
        }
        for a in &self.decls {
            if let Some(v) = a.value {
                out.push(format!("{} = {};", a.name, emit::const_text(v, a.ty)));
            }
        }
        match &self.effect {
            Some(Effect::Null { ptr }) => out.push(format!("{} = 0;", expr_to_string(ptr))),
            Some(Effect::Scope { ptr, pointee, tmp }) => out.push(format!(
                "{{ {} {tmp}; {} = &{tmp}; }}",
                type_name_to_string(&TypeName::for_type(pointee)),
                expr_to_string(ptr)
            )),
            Some(Effect::Free { ptr, offset: 0 }) => out.push(format!("free({});", expr_to_string(ptr))),
            Some(Effect::Free { ptr, offset }) => {
                out.push(format!("free((char *)({}) - {offset});", expr_to_string(ptr)))
            }
            None => {}
        }
        out.join(" ")
    }
}

/// A program with exactly one planted UB.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UbProgram {
    pub source: String,
    pub kind: UbKind,
    pub planted_site: SourceLoc,
    pub seed_id: String,
    /// Id of the matched expression in the seed.
    pub site: NodeId,
    pub construct: Construct,
    pub shadow: String,
}

impl UbProgram {
    /// Content address of the program text.
    pub fn id(&self) -> String {
        program_id(&self.source)
    }

    pub fn to_sidecar(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "kind={}", self.kind);
        let _ = writeln!(s, "planted_site={}", self.planted_site);
        let _ = writeln!(s, "seed_id={}", self.seed_id);
        let _ = writeln!(s, "site={}", self.site);
        let _ = writeln!(s, "construct={}", serde_json::to_string(&self.construct).expect("construct"));
        let _ = writeln!(s, "shadow={}", self.shadow.replace('\n', " "));
        s
    }

    pub fn from_sidecar(source: String, text: &str) -> Result<UbProgram, SidecarError> {
        let mut map = HashMap::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let (k, v) = line.split_once('=').ok_or_else(|| SidecarError(format!("bad line `{line}`")))?;
            map.insert(k.trim(), v.trim());
        }
        let get = |k: &str| map.get(k).copied().ok_or_else(|| SidecarError(format!("missing `{k}`")));
        let bad = |k: &str| SidecarError(format!("bad `{k}`"));
        let (line, col) = get("planted_site")?.split_once(':').ok_or_else(|| bad("planted_site"))?;
        Ok(UbProgram {
            source,
            kind: UbKind::from_str(get("kind")?).map_err(|_| bad("kind"))?,
            planted_site: SourceLoc::new(
                line.parse().map_err(|_| bad("planted_site"))?,
                col.parse().map_err(|_| bad("planted_site"))?,
            ),
            seed_id: get("seed_id")?.to_string(),
            site: get("site")?.parse().map_err(|_| bad("site"))?,
            construct: serde_json::from_str(get("construct")?).map_err(|_| bad("construct"))?,
            shadow: get("shadow")?.to_string(),
        })
    }
}

#[derive(Debug, Error)]
#[error("sidecar: {0}")]
pub struct SidecarError(pub String);

pub fn program_id(source: &str) -> String {
    crate::toolchain::digest(source.as_bytes())[..16].to_string()
}

/// A canonicalized seed with the static facts synthesis needs.
#[derive(Clone, Debug)]
pub struct Seed {
    pub id: String,
    pub ast: Ast,
    pub sema: Sema,
    anchors: HashMap<NodeId, NodeId>,
    names: BTreeSet<String>,
}

impl Seed {
    pub fn new(id: impl Into<String>, source: &str) -> Result<Seed, ParseError> {
        Seed::from_ast(id, canonicalize(source)?)
    }

    /// `ast` must already be laid out as printed (see [`canonicalize`]).
    pub fn from_ast(id: impl Into<String>, ast: Ast) -> Result<Seed, ParseError> {
        let sema = analyze(&ast)?;
        Ok(Seed {
            id: id.into(),
            anchors: profile::anchor_map(&ast),
            names: ast.identifiers(),
            sema,
            ast,
        })
    }

    pub fn source(&self) -> String {
        print_program(&self.ast)
    }

    pub fn sites(&self, kind: UbKind) -> Vec<MatchSite> {
        matched_with(&self.ast, &self.sema, kind)
    }

    pub fn anchor_of(&self, site: NodeId) -> Option<NodeId> {
        self.anchors.get(&site).copied()
    }
}

/// Independent generator per (campaign seed, seed, kind).
pub fn rng_for(campaign_seed: u64, seed_id: &str, kind: UbKind) -> ChaCha8Rng {
    let h = Sha256::digest(format!("{campaign_seed}|{seed_id}|{kind}").as_bytes());
    ChaCha8Rng::from_seed(h.into())
}

struct Names<'a> {
    taken: &'a BTreeSet<String>,
    fresh: Vec<String>,
}

impl Names<'_> {
    fn fresh(&mut self, stem: &str) -> String {
        let mut n = 0;
        loop {
            let name = if n == 0 { format!("{stem}_hat") } else { format!("{stem}_hat{n}") };
            if !self.taken.contains(&name) && !self.fresh.contains(&name) {
                self.fresh.push(name.clone());
                return name;
            }
            n += 1;
        }
    }
}

/// Name of the last identifier in `e`, used as a readable stem.
fn stem(e: &Expr) -> String {
    let mut out = None;
    crate::lang::visit::walk_expr_tree(e, &mut |x| {
        if let ExprKind::Ident(n) = &x.kind {
            out = Some(n.clone());
        }
    });
    out.unwrap_or_else(|| "x".to_string())
}

/// Smallest element index `v` such that the access `p + v*elem` ends past
/// the object, limited to `REDZONE_LIMIT` bytes of overrun. Falls back to an
/// access straddling the end when a whole element would reach too far.
pub fn overflow_index(p: u64, base: u64, size: u64, elem: u64) -> Option<i128> {
    let (p, end, e) = (i128::from(p), i128::from(base) + i128::from(size), i128::from(elem));
    if e == 0 || p < i128::from(base) || p > end {
        return None;
    }
    let v = (end - p + e - 1).div_euclid(e);
    if p + v * e + e - end <= REDZONE_LIMIT {
        return Some(v);
    }
    let past = p + v * e - end;
    (past > 0 && past <= REDZONE_LIMIT).then_some(v - 1)
}

/// Bytes an access at element `v` reaches past the end of the object.
pub fn overflow_distance(p: u64, base: u64, size: u64, elem: u64, v: i128) -> i128 {
    i128::from(p) + v * i128::from(elem) + i128::from(elem) - (i128::from(base) + i128::from(size))
}

fn apply(op: BinOp, a: i128, b: i128) -> i128 {
    match op {
        BinOp::Add => a + b,
        BinOp::Sub => a - b,
        BinOp::Mul => a * b,
        _ => unreachable!("arithmetic operator"),
    }
}

/// Value of an auxiliary of type `ty` such that `y + aux` evaluates to `v`.
fn delta(ty: IntTy, v: i128, y: i128) -> Option<i128> {
    if ty.signed() {
        ty.contains(v - y).then_some(v - y)
    } else {
        Some(ty.wrap(v - y))
    }
}

/// Operands `(v0, v1)` of type `ty` whose exact result overflows, reachable
/// from `(x, y)` by representable offsets.
fn search_pair<R: Rng + ?Sized>(op: BinOp, ty: IntTy, x: i128, y: i128, rng: &mut R) -> Option<(i128, i128)> {
    let (lo, hi) = (ty.min_value(), ty.max_value());
    let ok = |v0: i128, v1: i128| !ty.contains(apply(op, v0, v1)) && ty.contains(v0 - x) && ty.contains(v1 - y);
    for _ in 0..MONTE_CARLO_DRAWS {
        let (v0, v1) = (rng.gen_range(lo..=hi), rng.gen_range(lo..=hi));
        if ok(v0, v1) {
            return Some((v0, v1));
        }
    }
    let preferred = match op {
        BinOp::Sub => [(lo, hi), (hi, lo)],
        _ => [(hi, hi), (lo, lo)],
    };
    preferred
        .into_iter()
        .chain([(lo, hi), (hi, lo), (x, hi), (x, lo), (hi, y), (lo, y)])
        .find(|&(a, b)| ok(a, b))
}

/// Right operand `v1` of type `ty` with `x op v1` overflowing, reachable from
/// `y` by a representable offset.
fn search_rhs<R: Rng + ?Sized>(op: BinOp, ty: IntTy, x: i128, y: i128, rng: &mut R) -> Option<i128> {
    let (lo, hi) = (ty.min_value(), ty.max_value());
    let ok = |v: i128| !ty.contains(apply(op, x, v)) && ty.contains(v - y);
    (0..MONTE_CARLO_DRAWS)
        .map(|_| rng.gen_range(lo..=hi))
        .chain([hi, lo, hi - 1, lo + 1, -1, 2, -2])
        .find(|&v| ok(v))
}

/// Builds the shadow statement for one live site, from the first dynamic
/// occurrence of its operands.
pub fn syn_shadow_stmt<R: Rng + ?Sized>(
    seed: &Seed,
    site: &MatchSite,
    profile: &ExecutionProfile,
    rng: &mut R,
) -> Result<ShadowStmt, SynthError> {
    let id = site.node_id;
    if !q_liv(profile, id) {
        return Err(SynthError::NotLive(id));
    }
    let anchor = seed.anchor_of(id).ok_or(SynthError::SiteNotFound(id))?;
    let target = find_expr(&seed.ast, id).ok_or(SynthError::SiteNotFound(id))?;
    let occ = q_val(profile, id, 0)?;
    let operand = |slot: usize| {
        occ.operands
            .get(slot)
            .copied()
            .flatten()
            .ok_or_else(|| SynthError::NoEligibleTarget(format!("operand {slot} was not logged")))
    };
    let mut names = Names {
        taken: &seed.names,
        fresh: Vec::new(),
    };
    let sema = &seed.sema;
    let int_of = |e: &Expr| sema.type_of(e).decay().as_int();
    let mut shadow = ShadowStmt {
        kind: site.kind,
        site: id,
        anchor,
        decls: Vec::new(),
        effect: None,
        rewrite: Rewrite::Keep,
    };
    let no_target = |why: &str| SynthError::NoEligibleTarget(why.to_string());
    match site.kind {
        UbKind::BufOverflowArray | UbKind::BufOverflowPointer => {
            let obj = match q_mem(profile, id, 0)? {
                MemRef::Live(o) => o,
                MemRef::Freed(_) => return Err(no_target("object already freed")),
            };
            let p = operand(0)? as u64;
            let elem = sema.size_of(sema.type_of(target));
            let v = overflow_index(p, obj.base, obj.size, elem)
                .ok_or_else(|| no_target("no overflow within the redzone"))?;
            let (slot, child, value) = match &target.kind {
                ExprKind::Index { index, .. } => (1, index.as_ref(), v - operand(1)?),
                ExprKind::Unary { operand: ptr, .. } => (0, ptr.as_ref(), v),
                _ => return Err(SynthError::SiteNotFound(id)),
            };
            let name = names.fresh(&stem(child));
            shadow.decls.push(AuxVar {
                name: name.clone(),
                ty: IntTy::Long,
                value: Some(value),
            });
            shadow.rewrite = Rewrite::Offset(vec![(slot, name)]);
        }
        UbKind::IntegerOverflow => match (&site.construct, &target.kind) {
            (Construct::Arith(op), ExprKind::Binary { lhs, rhs, .. }) => {
                let ty = int_of(target).ok_or_else(|| no_target("not an integer"))?;
                let (x, y) = (operand(0)?, operand(1)?);
                let (v0, v1) =
                    search_pair(*op, ty, x, y, rng).ok_or(SynthError::SynthesisBudgetExhausted(MONTE_CARLO_DRAWS))?;
                let xn = names.fresh(&stem(lhs));
                let yn = names.fresh(&stem(rhs));
                shadow.decls.push(AuxVar {
                    name: xn.clone(),
                    ty,
                    value: Some(v0 - x),
                });
                shadow.decls.push(AuxVar {
                    name: yn.clone(),
                    ty,
                    value: Some(v1 - y),
                });
                shadow.rewrite = Rewrite::Offset(vec![(0, xn), (1, yn)]);
            }
            (Construct::CompoundArith(op), ExprKind::Assign { lhs, rhs, .. }) => {
                let (lt, rt) = (
                    int_of(lhs).ok_or_else(|| no_target("not an integer"))?,
                    int_of(rhs).ok_or_else(|| no_target("not an integer"))?,
                );
                let ty = IntTy::common(lt.promote(), rt.promote());
                let (x, y) = (operand(0)?, operand(1)?);
                let v1 = search_rhs(*op, ty, x, y, rng).ok_or(SynthError::SynthesisBudgetExhausted(MONTE_CARLO_DRAWS))?;
                let name = names.fresh(&stem(rhs));
                shadow.decls.push(AuxVar {
                    name: name.clone(),
                    ty,
                    value: Some(v1 - y),
                });
                shadow.rewrite = Rewrite::Offset(vec![(1, name)]);
            }
            (Construct::IncDec(u), ExprKind::Unary { operand: lv, .. }) => {
                let ty = int_of(lv).ok_or_else(|| no_target("not an integer"))?;
                let op = if matches!(u, UnOp::PreInc | UnOp::PostInc) { BinOp::Add } else { BinOp::Sub };
                let v1 = search_rhs(op, ty, operand(0)?, 1, rng)
                    .ok_or(SynthError::SynthesisBudgetExhausted(MONTE_CARLO_DRAWS))?;
                let name = names.fresh(&stem(lv));
                shadow.decls.push(AuxVar {
                    name: name.clone(),
                    ty,
                    value: Some(v1 - 1),
                });
                shadow.rewrite = Rewrite::Step(name);
            }
            _ => return Err(SynthError::SiteNotFound(id)),
        },
        UbKind::ShiftOverflow | UbKind::DivideByZero => {
            let (ExprKind::Binary { lhs, rhs, .. } | ExprKind::Assign { lhs, rhs, .. }) = &target.kind else {
                return Err(SynthError::SiteNotFound(id));
            };
            let lt = int_of(lhs).ok_or_else(|| no_target("not an integer"))?;
            let ty = int_of(rhs).ok_or_else(|| no_target("not an integer"))?.promote();
            let y = operand(1)?;
            let value = if site.kind == UbKind::ShiftOverflow {
                let n = i128::from(lt.promote().bits());
                delta(ty, n, y).or_else(|| delta(ty, -1, y))
            } else {
                delta(ty, 0, y)
            }
            .ok_or_else(|| no_target("offset not representable"))?;
            let name = names.fresh(&stem(rhs));
            shadow.decls.push(AuxVar {
                name: name.clone(),
                ty,
                value: Some(value),
            });
            shadow.rewrite = Rewrite::Offset(vec![(1, name)]);
        }
        UbKind::UseOfUninitMemory => {
            let name = names.fresh(&stem(target));
            shadow.decls.push(AuxVar {
                name: name.clone(),
                ty: IntTy::Int,
                value: None,
            });
            shadow.rewrite = Rewrite::CondPlus(name);
        }
        UbKind::NullPtrDeref | UbKind::UseAfterScope | UbKind::UseAfterFree => {
            let ExprKind::Unary { operand: ptr, .. } = &target.kind else {
                return Err(SynthError::SiteNotFound(id));
            };
            let ptr = ptr.unparen();
            let anchors = profile.anchors.get(&anchor).map_or(&[][..], Vec::as_slice);
            let first_entry = anchors.first().is_some_and(|a| *a < occ.seq);
            let same_entry = anchors.get(1).is_none_or(|a| occ.seq < *a);
            if !(first_entry && same_entry) {
                return Err(no_target("site not reached in the anchor's first execution"));
            }
            let stmt = find_stmt(&seed.ast, anchor).ok_or(SynthError::AnchorNotFound(anchor))?;
            let uaf = site.kind == UbKind::UseAfterFree;
            let roots = if uaf {
                if !simple_pointer(ptr) {
                    return Err(no_target("pointer expression reads memory"));
                }
                idents(sema, ptr)
            } else {
                let root = lvalue_root(sema, ptr).ok_or_else(|| no_target("pointer is not a variable"))?;
                if !sema.type_of(ptr).is_ptr() || const_pointer(&seed.ast, root) {
                    return Err(no_target("pointer cannot be assigned"));
                }
                q_scp(profile, root)?;
                BTreeSet::from([root])
            };
            check_isolated(seed, stmt, id, &roots, uaf)?;
            let ptr = ptr.clone();
            shadow.effect = Some(match site.kind {
                UbKind::NullPtrDeref => Effect::Null { ptr },
                UbKind::UseAfterScope => {
                    let pointee = sema
                        .type_of(&ptr)
                        .pointee()
                        .cloned()
                        .filter(|t| matches!(t, Type::Int(_) | Type::Ptr(_) | Type::Struct(_)))
                        .ok_or_else(|| no_target("pointee is not an object type"))?;
                    let tmp = names.fresh(&stem(&ptr));
                    Effect::Scope { ptr, pointee, tmp }
                }
                _ => {
                    let obj = match q_mem(profile, id, 0)? {
                        MemRef::Live(o) if o.storage == ObjStorage::Heap => o,
                        _ => return Err(no_target("pointer does not reach a live heap object")),
                    };
                    Effect::Free {
                        ptr,
                        offset: operand(0)? as u64 - obj.base,
                    }
                }
            });
        }
    }
    Ok(shadow)
}

/// Declaration at the root of `p`, `s.p` or `s.t.p`.
fn lvalue_root(sema: &Sema, e: &Expr) -> Option<NodeId> {
    match &e.kind {
        ExprKind::Ident(_) => sema.decl_of(e.id).map(|d| d.id),
        ExprKind::Member { base, arrow: false, .. } => lvalue_root(sema, base),
        ExprKind::Paren(inner) => lvalue_root(sema, inner),
        _ => None,
    }
}

/// Built only from variables, direct members, literals and arithmetic.
fn simple_pointer(e: &Expr) -> bool {
    match &e.kind {
        ExprKind::Ident(_) | ExprKind::IntLit { .. } | ExprKind::CharLit { .. } => true,
        ExprKind::Member { base, arrow: false, .. } => simple_pointer(base),
        ExprKind::Paren(x) | ExprKind::Cast { expr: x, .. } => simple_pointer(x),
        ExprKind::Unary {
            op: UnOp::Neg | UnOp::Plus,
            operand,
        } => simple_pointer(operand),
        ExprKind::Binary {
            op: BinOp::Add | BinOp::Sub | BinOp::Mul,
            lhs,
            rhs,
        } => simple_pointer(lhs) && simple_pointer(rhs),
        _ => false,
    }
}

fn idents(sema: &Sema, e: &Expr) -> BTreeSet<NodeId> {
    let mut out = BTreeSet::new();
    crate::lang::visit::walk_expr_tree(e, &mut |x| {
        if let Some(d) = sema.decl_of(x.id) {
            out.insert(d.id);
        }
    });
    out
}

fn const_pointer(ast: &Ast, decl: NodeId) -> bool {
    struct V {
        decl: NodeId,
        found: bool,
    }
    impl Visitor for V {
        fn visit_declarator(&mut self, d: &Declarator) {
            if d.id == self.decl {
                self.found = d.ptr_quals.last().is_some_and(|q| q.iter().any(|w| w == "const"));
            }
            crate::lang::visit::walk_declarator(self, d);
        }
    }
    let mut v = V { decl, found: false };
    walk_ast(&mut v, ast);
    let param = ast.functions().flat_map(|f| &f.params).find(|p| p.id == decl);
    v.found || param.is_some_and(|p| p.ptr_quals.last().is_some_and(|q| q.iter().any(|w| w == "const")))
}

fn find_stmt(ast: &Ast, id: NodeId) -> Option<&Stmt> {
    struct V<'a> {
        id: NodeId,
        found: Option<&'a Stmt>,
    }
    fn go<'a>(v: &mut V<'a>, s: &'a Stmt) {
        if v.found.is_some() {
            return;
        }
        if s.id == v.id {
            v.found = Some(s);
            return;
        }
        match &s.kind {
            StmtKind::Block(b) => b.stmts.iter().for_each(|s| go(v, s)),
            StmtKind::If { then, els, .. } => {
                go(v, then);
                if let Some(e) = els {
                    go(v, e);
                }
            }
            StmtKind::While { body, .. } | StmtKind::For { body, .. } => go(v, body),
            _ => {}
        }
    }
    let mut v = V { id, found: None };
    for f in ast.functions() {
        for s in &f.body.as_ref().expect("definition").stmts {
            go(&mut v, s);
        }
    }
    v.found
}

/// Rejects anchors where code other than the target could observe the
/// effect statement before the target runs.
fn check_isolated(seed: &Seed, anchor: &Stmt, target: NodeId, roots: &BTreeSet<NodeId>, uaf: bool) -> Result<(), SynthError> {
    struct Scan<'a> {
        sema: &'a Sema,
        ast: &'a Ast,
        target: NodeId,
        roots: &'a BTreeSet<NodeId>,
        mentions: bool,
        declares: bool,
        user_calls: bool,
        accesses: bool,
    }
    impl Visitor for Scan<'_> {
        fn visit_declarator(&mut self, d: &Declarator) {
            self.declares |= self.roots.contains(&d.id);
            crate::lang::visit::walk_declarator(self, d);
        }
        fn visit_expr(&mut self, e: &Expr) {
            if e.id == self.target {
                return;
            }
            match &e.kind {
                ExprKind::Ident(_) => {
                    self.mentions |= self.sema.decl_of(e.id).is_some_and(|d| self.roots.contains(&d.id));
                }
                ExprKind::Call { callee, .. } => {
                    self.accesses = true;
                    self.user_calls |= self.ast.function(callee).is_some();
                }
                ExprKind::Unary { op: UnOp::Deref, .. } | ExprKind::Index { .. } | ExprKind::Member { arrow: true, .. } => {
                    self.accesses = true
                }
                _ => {}
            }
            walk_expr(self, e);
        }
    }
    let mut s = Scan {
        sema: &seed.sema,
        ast: &seed.ast,
        target,
        roots,
        mentions: false,
        declares: false,
        user_calls: false,
        accesses: false,
    };
    walk_stmt(&mut s, anchor);
    let reject = |why: &str| Err(SynthError::NoEligibleTarget(why.to_string()));
    if s.declares {
        return reject("pointer declared in the anchor");
    }
    if s.mentions {
        return reject("pointer used elsewhere in the anchor");
    }
    if uaf && s.accesses {
        return reject("anchor has other memory accesses");
    }
    let global = roots
        .iter()
        .any(|r| seed.sema.decls.get(r).is_some_and(|d| d.storage == Storage::Global));
    if global && s.user_calls {
        return reject("anchor calls functions that may read the pointer");
    }
    if address_taken(seed, roots) {
        return reject("pointer variable has its address taken");
    }
    Ok(())
}

fn address_taken(seed: &Seed, roots: &BTreeSet<NodeId>) -> bool {
    struct V<'a> {
        sema: &'a Sema,
        roots: &'a BTreeSet<NodeId>,
        found: bool,
    }
    impl Visitor for V<'_> {
        fn visit_expr(&mut self, e: &Expr) {
            if let ExprKind::Unary { op: UnOp::AddrOf, operand } = &e.kind {
                let mut x = operand.as_ref();
                loop {
                    match &x.kind {
                        ExprKind::Paren(i) => x = i,
                        ExprKind::Member { base, arrow: false, .. } | ExprKind::Index { base, .. } => x = base,
                        _ => break,
                    }
                }
                self.found |= self.sema.decl_of(x.id).is_some_and(|d| self.roots.contains(&d.id));
            }
            walk_expr(self, e);
        }
    }
    let mut v = V {
        sema: &seed.sema,
        roots,
        found: false,
    };
    walk_ast(&mut v, &seed.ast);
    v.found
}

/// Programs for every live site of `kind`, plus the reasons other sites were
/// skipped.
#[derive(Clone, Debug, Default)]
pub struct Generation {
    pub programs: Vec<UbProgram>,
    pub skipped: Vec<(MatchSite, String)>,
}

pub fn generate<R: Rng + ?Sized>(seed: &Seed, kind: UbKind, profile: &ExecutionProfile, rng: &mut R) -> Generation {
    let mut out = Generation::default();
    for site in seed.sites(kind) {
        let made = syn_shadow_stmt(seed, &site, profile, rng).and_then(|sh| emit::emit(seed, &site, &sh));
        match made {
            Ok(p) => out.programs.push(p),
            Err(e) => out.skipped.push((site, e.to_string())),
        }
    }
    out
}

/// Instruments, profiles and generates for one kind.
pub fn synthesize<R: Rng + ?Sized>(
    seed: &Seed,
    kind: UbKind,
    tc: &Toolchain,
    timeout: Duration,
    rng: &mut R,
) -> Result<(Option<ExecutionProfile>, Generation), SynthError> {
    let sites = seed.sites(kind);
    if sites.is_empty() {
        return Ok((None, Generation::default()));
    }
    let inst = instrument(&seed.ast, kind, &sites)?;
    let prof = profile::run_profile(&inst, tc, timeout)?;
    let gen = generate(seed, kind, &prof, rng);
    Ok((Some(prof), gen))
}
