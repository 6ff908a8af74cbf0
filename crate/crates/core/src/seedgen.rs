//! Random UB-free seed programs rich in arrays, pointers, heap blocks and
//! arithmetic, in the C subset the rest of the crate understands.
//!
//! Values are kept small by reducing every update modulo 1000, indices are
//! chosen from statically known lengths, and each candidate is run through
//! the interpreter; candidates that hit UB or the step limit are discarded.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lang::parse_program;
use crate::minivm::{eval_program, VmOutcome};

const STEP_LIMIT: u64 = 400_000;

const HELPERS: &str = "int mix_add(int a, int b) {
  return (a + b) & 1023;
}

int mix_sub(int a, int b) {
  return (a - b) & 1023;
}

int mix_mul(int a, int b) {
  return (a * b) & 1023;
}

int mix_shl(int a, int b) {
  return ((a & 255) << (b & 7)) & 1023;
}

int mix_div(int a, int b) {
  if (b % 2) {
    return a / (b % 7 + 8);
  }
  return a % (b % 5 + 6);
}

";

#[derive(Clone, Debug)]
struct Array {
    name: String,
    len: u64,
    elem: &'static str,
}

/// A pointer into an array with at least `room` elements from it onward.
#[derive(Clone, Debug)]
struct Ptr {
    name: String,
    room: u64,
}

struct Gen {
    rng: ChaCha8Rng,
    out: String,
    depth: usize,
    ints: Vec<String>,
    arrays: Vec<Array>,
    ptrs: Vec<Ptr>,
    counter: usize,
    funcs: Vec<String>,
}

impl Gen {
    fn fresh(&mut self, stem: &str) -> String {
        self.counter += 1;
        format!("{stem}_{}", self.counter)
    }

    fn line(&mut self, s: &str) {
        for _ in 0..self.depth {
            self.out.push_str("  ");
        }
        self.out.push_str(s);
        self.out.push('\n');
    }

    fn int(&mut self) -> String {
        self.ints.choose(&mut self.rng).expect("int variables").clone()
    }

    fn small(&mut self) -> i64 {
        self.rng.gen_range(1..10)
    }

    /// A bounded integer expression. Arithmetic goes through the shared
    /// `mix_*` helpers, the way generated seeds wrap their math.
    fn expr(&mut self) -> String {
        let x = self.int();
        let y = self.int();
        let k = self.small();
        match self.rng.gen_range(0..8) {
            0 => format!("mix_add({x}, {y})"),
            1 => format!("mix_sub({x}, {y})"),
            2 => format!("mix_mul({x}, {k})"),
            3 => format!("mix_shl({x}, {y})"),
            4 => format!("mix_div({x}, {y})"),
            5 if !self.arrays.is_empty() => {
                let a = self.arrays.choose(&mut self.rng).expect("arrays").clone();
                let i = self.rng.gen_range(0..a.len);
                format!("mix_add({x}, {}[{i}])", a.name)
            }
            _ if !self.ptrs.is_empty() => {
                let p = self.ptrs.choose(&mut self.rng).expect("pointers").clone();
                let off = self.rng.gen_range(0..p.room);
                if off == 0 {
                    format!("mix_sub({y}, *{})", p.name)
                } else {
                    format!("mix_add({y}, *({} + {off}))", p.name)
                }
            }
            _ => format!("mix_add({x}, {k})"),
        }
    }

    fn assign(&mut self) {
        let x = self.int();
        let e = self.expr();
        self.line(&format!("{x} = {e};"));
    }

    fn stmt(&mut self, budget: usize) {
        let choice = self.rng.gen_range(0..20);
        match choice {
            0..=2 => self.assign(),
            3 if !self.arrays.is_empty() => {
                let a = self.arrays.choose(&mut self.rng).expect("arrays").clone();
                let i = self.rng.gen_range(0..a.len);
                let e = self.expr();
                self.line(&format!("{}[{i}] = ({e}) & 127;", a.name));
            }
            4 if !self.arrays.is_empty() => {
                let a = self.arrays.choose(&mut self.rng).expect("arrays").clone();
                let x = self.int();
                let k = self.small();
                self.line(&format!("for (i = 0; i < {}; i++) {{", a.len));
                self.depth += 1;
                self.line(&format!("{}[i] = mix_add({}[i], {x} ^ {k}) & 127;", a.name, a.name));
                self.line(&format!("{x} = mix_add({x}, {}[i]);", a.name));
                self.depth -= 1;
                self.line("}");
            }
            5 if !self.ptrs.is_empty() => {
                let p = self.ptrs.choose(&mut self.rng).expect("pointers").clone();
                let off = self.rng.gen_range(0..p.room);
                let e = self.expr();
                if off == 0 {
                    self.line(&format!("*{} = ({e}) & 127;", p.name));
                } else {
                    self.line(&format!("*({} + {off}) = ({e}) & 127;", p.name));
                }
            }
            6 if !self.arrays.is_empty() && !self.ptrs.is_empty() => {
                let idx = self.rng.gen_range(0..self.ptrs.len());
                let a = self.arrays.choose(&mut self.rng).expect("arrays").clone();
                if a.elem == "int" {
                    let at = self.rng.gen_range(0..a.len);
                    let name = self.ptrs[idx].name.clone();
                    self.line(&format!("{name} = &{}[{at}];", a.name));
                    self.ptrs[idx].room = self.ptrs[idx].room.min(a.len - at);
                } else {
                    self.assign();
                }
            }
            7 if budget > 2 && self.depth < 3 => {
                let x = self.int();
                let y = self.int();
                let cmp = ["<", ">", "<=", "!=", "=="].choose(&mut self.rng).expect("ops");
                self.line(&format!("if ({x} {cmp} {y}) {{"));
                self.depth += 1;
                self.block(budget / 2);
                self.depth -= 1;
                if self.rng.gen_bool(0.5) {
                    self.line("} else {");
                    self.depth += 1;
                    self.block(budget / 3);
                    self.depth -= 1;
                }
                self.line("}");
            }
            8 if budget > 2 && self.depth < 3 => {
                let n = self.fresh("n");
                let x = self.int();
                self.line(&format!("int {n} = 2 + ({x} & 3);"));
                self.line(&format!("while ({n} > 0) {{"));
                self.depth += 1;
                self.ints.push(n.clone());
                self.block(budget / 2);
                self.ints.retain(|v| *v != n);
                self.line(&format!("{n}--;"));
                self.depth -= 1;
                self.line("}");
            }
            9 => {
                let x = self.int();
                let k = self.small();
                match self.rng.gen_range(0..4) {
                    0 => self.line(&format!("{x} += {k};")),
                    1 => self.line(&format!("{x} -= {k};")),
                    2 => self.line(&format!("{x} *= {k};")),
                    _ => self.line(&format!("{x}++;")),
                }
                self.line(&format!("{x} &= 1023;"));
            }
            10 if self.depth < 3 => {
                // A heap block used and released within one scope.
                let h = self.fresh("h");
                let len = self.rng.gen_range(2..7u64);
                let x = self.int();
                self.line("{");
                self.depth += 1;
                self.line(&format!("int *{h} = malloc({len} * sizeof(int));"));
                self.line(&format!("for (i = 0; i < {len}; i++) {{"));
                let m = self.rng.gen_range(1..5);
                self.line(&format!("  {h}[i] = mix_mul(i, {m}) ^ ({x} & 7);"));
                self.line("}");
                let at = self.rng.gen_range(0..len);
                self.line(&format!("{x} = ({x} + *({h} + {at})) & 1023;"));
                let p = self.fresh("hp");
                self.line(&format!("int *{p} = {h} + {};", len - 1));
                self.line(&format!("{x} = ({x} - *{p}) & 1023;"));
                self.line(&format!("free({h});"));
                self.depth -= 1;
                self.line("}");
            }
            11 if self.depth < 3 => {
                // A pointer to a block-local copy.
                let t = self.fresh("t");
                let q = self.fresh("q");
                let x = self.int();
                self.line("{");
                self.depth += 1;
                self.line(&format!("int {t} = {x};"));
                self.line(&format!("int *{q} = &{t};"));
                let d = self.rng.gen_range(1..50);
                self.line(&format!("*{q} = mix_add(*{q}, {d});"));
                self.line(&format!("{x} = {t};"));
                self.depth -= 1;
                self.line("}");
            }
            12 if !self.funcs.is_empty() && !self.arrays.is_empty() => {
                let f = self.funcs.choose(&mut self.rng).expect("funcs").clone();
                let ints: Vec<&Array> = self.arrays.iter().filter(|a| a.elem == "int").collect();
                if let Some(a) = ints.choose(&mut self.rng).map(|a| (*a).clone()) {
                    let x = self.int();
                    let n = self.rng.gen_range(1..=a.len);
                    self.line(&format!("{x} = mix_add({x}, {f}({}, {n}));", a.name));
                } else {
                    self.assign();
                }
            }
            13 => {
                let x = self.int();
                let y = self.int();
                self.line(&format!("if ({x} & 3) {{"));
                self.line(&format!("  {y} = mix_sub({y}, {x});"));
                self.line("}");
            }
            14 if !self.ptrs.is_empty() => {
                let p = self.ptrs.choose(&mut self.rng).expect("pointers").clone();
                let x = self.int();
                if p.room > 1 {
                    let i = self.rng.gen_range(0..p.room);
                    self.line(&format!("{x} = mix_add({x}, {}[{i}]);", p.name));
                } else {
                    self.line(&format!("{x} = mix_mul({x}, *{});", p.name));
                }
            }
            15..=16 if !self.ptrs.is_empty() && !self.arrays.is_empty() => {
                let a = self.arrays.choose(&mut self.rng).expect("arrays").clone();
                let q = self.fresh("q");
                let x = self.int();
                self.line(&format!("{}*{q};", if a.elem == "int" { "int " } else { "char " }));
                self.line(&format!("for ({q} = {}; {q} < {} + {}; {q}++) {{", a.name, a.name, a.len));
                self.line(&format!("  {x} = mix_add({x}, *{q});"));
                self.line("}");
            }
            17 if !self.ptrs.is_empty() => {
                let p = self.ptrs.choose(&mut self.rng).expect("pointers").clone();
                if p.room > 1 {
                    let i = self.rng.gen_range(1..p.room);
                    self.line(&format!("*{} = *({} + {i});", p.name, p.name));
                } else {
                    self.line(&format!("*{} = *{} & 63;", p.name, p.name));
                }
            }
            _ => self.assign(),
        }
    }

    fn block(&mut self, budget: usize) {
        let n = budget.clamp(1, 4);
        for _ in 0..n {
            self.stmt(budget.saturating_sub(n));
        }
    }

    fn function(&mut self, id: usize) {
        let name = format!("func_{id}");
        let k = self.small();
        let c = self.rng.gen_range(0..100);
        let _ = writeln!(self.out, "int {name}(int *p, int n) {{");
        let _ = writeln!(self.out, "  int i;\n  int acc = {c};");
        let _ = writeln!(self.out, "  for (i = 0; i < n; i++) {{");
        match self.rng.gen_range(0..3) {
            0 => {
                let _ = writeln!(self.out, "    acc = mix_add(acc, p[i] ^ {k});");
            }
            1 => {
                let _ = writeln!(self.out, "    acc = mix_add(mix_mul(acc, {k}), *(p + i));");
            }
            _ => {
                let _ = writeln!(self.out, "    if (p[i] > (acc & 63)) {{\n      acc = mix_add(acc, p[i]);\n    }}");
            }
        }
        let _ = writeln!(self.out, "  }}\n  return acc;\n}}\n");
        self.funcs.push(name);
    }
}

/// Source text of a candidate; not yet checked for UB.
fn candidate(seed: u64) -> String {
    let mut g = Gen {
        rng: ChaCha8Rng::seed_from_u64(seed),
        out: String::new(),
        depth: 0,
        ints: Vec::new(),
        arrays: Vec::new(),
        ptrs: Vec::new(),
        counter: 0,
        funcs: Vec::new(),
    };
    g.out.push_str("#include <stdio.h>\n#include <stdlib.h>\n\n");
    let with_struct = g.rng.gen_bool(0.5);
    if with_struct {
        g.out.push_str("struct rec {\n  int key;\n  int vals[3];\n  long total;\n};\n\n");
        let n = g.rng.gen_range(2..4);
        let _ = writeln!(g.out, "struct rec recs[{n}];");
    }
    let globals = g.rng.gen_range(1..3);
    for i in 0..globals {
        let len = g.rng.gen_range(3..9);
        let name = format!("g_arr{i}");
        let init: Vec<String> = (0..len).map(|_| g.rng.gen_range(0..50).to_string()).collect();
        let _ = writeln!(g.out, "int {name}[{len}] = {{{}}};", init.join(", "));
        g.arrays.push(Array {
            name,
            len,
            elem: "int",
        });
    }
    g.out.push_str(HELPERS);
    let gx = format!("g_{}", g.rng.gen_range(0..100));
    let _ = writeln!(g.out, "int {gx} = {};", g.rng.gen_range(0..30));
    g.ints.push(gx);
    let gp = "g_ptr".to_string();
    let first = g.arrays[0].clone();
    let _ = writeln!(g.out, "int *{gp} = {};\n", first.name);
    g.ptrs.push(Ptr {
        name: gp,
        room: first.len,
    });
    let nfuncs = g.rng.gen_range(0..3);
    for i in 0..nfuncs {
        g.function(i + 1);
    }
    g.out.push_str("int main() {\n");
    g.depth = 1;
    g.line("int i;");
    for _ in 0..g.rng.gen_range(2..4) {
        let v = g.fresh("v");
        let init = g.rng.gen_range(0..40);
        let ty = ["int", "int", "long", "short"].choose(&mut g.rng).expect("types");
        g.line(&format!("{ty} {v} = {init};"));
        g.ints.push(v);
    }
    let len = g.rng.gen_range(3..8);
    let arr = g.fresh("arr");
    g.line(&format!("int {arr}[{len}];"));
    g.line(&format!("for (i = 0; i < {len}; i++) {{"));
    let m = g.small();
    g.line(&format!("  {arr}[i] = i ^ {m};"));
    g.line("}");
    g.arrays.push(Array {
        name: arr.clone(),
        len,
        elem: "int",
    });
    let buf = g.fresh("buf");
    let blen = g.rng.gen_range(4..10);
    g.line(&format!("char {buf}[{blen}];"));
    g.line(&format!("for (i = 0; i < {blen}; i++) {{"));
    g.line(&format!("  {buf}[i] = 'a' | i;"));
    g.line("}");
    g.arrays.push(Array {
        name: buf,
        len: blen,
        elem: "char",
    });
    let p = g.fresh("p");
    let at = g.rng.gen_range(0..len);
    g.line(&format!("int *{p} = &{arr}[{at}];"));
    g.ptrs.push(Ptr { name: p, room: len - at });
    if with_struct {
        let r = g.fresh("r");
        g.line(&format!("struct rec *{r} = &recs[1];"));
        let x = g.int();
        g.line(&format!("{r}->key = {x} % 100;"));
        g.line(&format!("{r}->vals[2] = {r}->key + 1;"));
        g.line(&format!("{r}->total = {r}->vals[2] * 3;"));
        let rp = g.fresh("rp");
        g.line(&format!("int *{rp} = {r}->vals;"));
        g.ptrs.push(Ptr { name: rp, room: 3 });
    }
    let budget = g.rng.gen_range(8..16);
    for _ in 0..budget {
        g.stmt(6);
    }
    let ints = g.ints.clone();
    let fmt: Vec<&str> = ints.iter().map(|_| "%d").collect();
    let args: Vec<String> = ints.iter().map(|v| format!("(int){v}")).collect();
    g.line(&format!("printf(\"{}\\n\", {});", fmt.join(" "), args.join(", ")));
    let a = g.arrays.last().expect("arrays").clone();
    g.line(&format!("printf(\"%d\\n\", {}[{}]);", a.name, a.len - 1));
    g.line("return 0;");
    g.out.push_str("}\n");
    g.out
}

/// The first UB-free candidate at or after `seed`, with the seed that
/// produced it.
pub fn generate(seed: u64) -> (u64, String) {
    let mut s = seed;
    loop {
        let src = candidate(s);
        if let Ok(ast) = parse_program(&src) {
            if let Ok(VmOutcome::Normal { .. }) = eval_program(&ast, STEP_LIMIT) {
                return (s, src);
            }
        }
        s = s.wrapping_add(1 << 32);
    }
}

/// Seeds shipped with the crate: hand-written programs followed by output of
/// [`generate`] for seeds `0..48`.
pub const BUNDLED: &[(&str, &str)] = &[
    ("fig4", include_str!("../seeds/fig4.c")),
    ("fig6", include_str!("../seeds/fig6.c")),
    ("list", include_str!("../seeds/list.c")),
    ("matrix", include_str!("../seeds/matrix.c")),
    ("recursion", include_str!("../seeds/recursion.c")),
    ("ring", include_str!("../seeds/ring.c")),
    ("scope_loop", include_str!("../seeds/scope_loop.c")),
    ("scopes", include_str!("../seeds/scopes.c")),
    ("sort", include_str!("../seeds/sort.c")),
    ("strings", include_str!("../seeds/strings.c")),
    ("gen_00", include_str!("../seeds/gen_00.c")),
    ("gen_01", include_str!("../seeds/gen_01.c")),
    ("gen_02", include_str!("../seeds/gen_02.c")),
    ("gen_03", include_str!("../seeds/gen_03.c")),
    ("gen_04", include_str!("../seeds/gen_04.c")),
    ("gen_05", include_str!("../seeds/gen_05.c")),
    ("gen_06", include_str!("../seeds/gen_06.c")),
    ("gen_07", include_str!("../seeds/gen_07.c")),
    ("gen_08", include_str!("../seeds/gen_08.c")),
    ("gen_09", include_str!("../seeds/gen_09.c")),
    ("gen_10", include_str!("../seeds/gen_10.c")),
    ("gen_11", include_str!("../seeds/gen_11.c")),
    ("gen_12", include_str!("../seeds/gen_12.c")),
    ("gen_13", include_str!("../seeds/gen_13.c")),
    ("gen_14", include_str!("../seeds/gen_14.c")),
    ("gen_15", include_str!("../seeds/gen_15.c")),
    ("gen_16", include_str!("../seeds/gen_16.c")),
    ("gen_17", include_str!("../seeds/gen_17.c")),
    ("gen_18", include_str!("../seeds/gen_18.c")),
    ("gen_19", include_str!("../seeds/gen_19.c")),
    ("gen_20", include_str!("../seeds/gen_20.c")),
    ("gen_21", include_str!("../seeds/gen_21.c")),
    ("gen_22", include_str!("../seeds/gen_22.c")),
    ("gen_23", include_str!("../seeds/gen_23.c")),
    ("gen_24", include_str!("../seeds/gen_24.c")),
    ("gen_25", include_str!("../seeds/gen_25.c")),
    ("gen_26", include_str!("../seeds/gen_26.c")),
    ("gen_27", include_str!("../seeds/gen_27.c")),
    ("gen_28", include_str!("../seeds/gen_28.c")),
    ("gen_29", include_str!("../seeds/gen_29.c")),
    ("gen_30", include_str!("../seeds/gen_30.c")),
    ("gen_31", include_str!("../seeds/gen_31.c")),
    ("gen_32", include_str!("../seeds/gen_32.c")),
    ("gen_33", include_str!("../seeds/gen_33.c")),
    ("gen_34", include_str!("../seeds/gen_34.c")),
    ("gen_35", include_str!("../seeds/gen_35.c")),
    ("gen_36", include_str!("../seeds/gen_36.c")),
    ("gen_37", include_str!("../seeds/gen_37.c")),
    ("gen_38", include_str!("../seeds/gen_38.c")),
    ("gen_39", include_str!("../seeds/gen_39.c")),
    ("gen_40", include_str!("../seeds/gen_40.c")),
    ("gen_41", include_str!("../seeds/gen_41.c")),
    ("gen_42", include_str!("../seeds/gen_42.c")),
    ("gen_43", include_str!("../seeds/gen_43.c")),
    ("gen_44", include_str!("../seeds/gen_44.c")),
    ("gen_45", include_str!("../seeds/gen_45.c")),
    ("gen_46", include_str!("../seeds/gen_46.c")),
    ("gen_47", include_str!("../seeds/gen_47.c")),
];

/// Bundled seeds as `(id, source)` pairs.
pub fn bundled_seeds() -> impl Iterator<Item = (&'static str, &'static str)> {
    BUNDLED.iter().copied()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_seeds_are_defined_and_deterministic() {
        for s in 0..20 {
            let (used, src) = generate(s);
            assert_eq!(generate(s), (used, src.clone()));
            let ast = parse_program(&src).unwrap();
            assert!(matches!(eval_program(&ast, STEP_LIMIT).unwrap(), VmOutcome::Normal { .. }));
        }
    }

    #[test]
    fn bundled_generated_seeds_match_the_generator() {
        for (id, src) in bundled_seeds().filter(|(id, _)| id.starts_with("gen_")) {
            let n: u64 = id[4..].parse().unwrap();
            assert_eq!(generate(n).1, src, "{id}");
        }
        assert!(BUNDLED.len() >= 50);
    }

    #[test]
    fn most_candidates_are_accepted() {
        let ok = (0..40)
            .filter(|s| matches!(parse_program(&candidate(*s)).map(|a| eval_program(&a, STEP_LIMIT)), Ok(Ok(VmOutcome::Normal { .. }))))
            .count();
        assert!(ok >= 30, "{ok}/40");
    }
}
