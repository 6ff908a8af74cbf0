use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Duration;

use super::lines::LineTable;
use super::{OracleError, SiteTrace, Terminal};
use crate::lang::SourceLoc;
use crate::toolchain::{run_command, sanitizer_env, Binary};

/// Drives gdb one instruction at a time from `main`, printing every program
/// counter inside the executable. Calls that leave the executable run at full
/// speed until they return.
const STEPPER: &str = r#"
import gdb

OUT = open(__OUT__, "w")
BUDGET = __BUDGET__
state = {"end": None}

def on_exit(ev):
    if state["end"] is None:
        state["end"] = "EXIT %d" % getattr(ev, "exit_code", -1)

def on_stop(ev):
    if isinstance(ev, gdb.SignalEvent) and ev.stop_signal not in ("SIGTRAP",):
        state["end"] = "SIGNAL " + ev.stop_signal

gdb.events.exited.connect(on_exit)
gdb.events.stop.connect(on_stop)
for cmd in ("set pagination off", "set confirm off", "set startup-with-shell off",
            "set disable-randomization on", "set print thread-events off"):
    gdb.execute(cmd)
gdb.execute("tbreak main", to_string=True)
gdb.execute("run", to_string=True)
bias = int(gdb.parse_and_eval("(unsigned long)&main")) - __MAIN__
lo, hi = __LO__ + bias, __HI__ + bias
steps = 0
while state["end"] is None:
    if steps >= BUDGET:
        state["end"] = "BUDGET"
        break
    try:
        pc = int(gdb.selected_frame().pc())
    except gdb.error:
        break
    steps += 1
    try:
        if lo <= pc < hi:
            OUT.write("%x\n" % (pc - bias))
            gdb.execute("stepi", to_string=True)
        else:
            ret = int(gdb.parse_and_eval("*(unsigned long *)$sp"))
            if lo <= ret < hi:
                gdb.execute("tbreak *%d" % ret, to_string=True)
                gdb.execute("continue", to_string=True)
            else:
                gdb.execute("stepi", to_string=True)
    except gdb.error:
        break
if state["end"] is None:
    state["end"] = "EXIT -1"
OUT.write(state["end"] + "\n")
OUT.close()
if state["end"] != "BUDGET" and not state["end"].startswith("EXIT"):
    gdb.execute("kill", to_string=True)
gdb.execute("quit", to_string=True)
"#;

pub const DEFAULT_STEP_BUDGET: u64 = 2_000_000;

/// Executed source sites of `bin`, recorded by single-stepping under
/// `debugger`. A run that reports a sanitizer error or dies by a signal ends
/// in a crash.
pub fn get_executed_sites(
    bin: &Binary,
    debugger: &Path,
    step_budget: u64,
    timeout: Duration,
) -> Result<SiteTrace, OracleError> {
    let io = |e: std::io::Error| OracleError::Debugger(e.to_string());
    let source_name = bin
        .source
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default();
    let table = LineTable::load(&bin.path, &source_name)?;
    if table.is_empty() {
        return Err(OracleError::Debugger("binary has no line information for its source".into()));
    }
    let main = table
        .main
        .ok_or_else(|| OracleError::Debugger("binary has no `main` symbol".into()))?;
    let dir = tempfile::tempdir().map_err(io)?;
    let out_path = dir.path().join("pcs.txt");
    let script = STEPPER
        .replace("__OUT__", &format!("{:?}", out_path.to_string_lossy()))
        .replace("__BUDGET__", &step_budget.to_string())
        .replace("__MAIN__", &main.to_string())
        .replace("__LO__", &table.text.0.to_string())
        .replace("__HI__", &table.text.1.to_string());
    let script_path = dir.path().join("stepper.py");
    std::fs::write(&script_path, script).map_err(io)?;
    let mut cmd = Command::new(debugger);
    cmd.args(["-nx", "-batch", "-q", "-x"])
        .arg(&script_path)
        .arg("--args")
        .arg(&bin.path)
        .envs(sanitizer_env());
    let res = run_command(&mut cmd, timeout).map_err(io)?;
    let text = std::fs::read_to_string(&out_path).unwrap_or_default();
    let mut lines: Vec<&str> = text.lines().collect();
    let end = lines.pop().unwrap_or("");
    if res.timed_out && !end.starts_with("EXIT") && !end.starts_with("SIGNAL") && end != "BUDGET" {
        let sites = map_pcs(&table, &lines);
        return Ok(SiteTrace::new(sites, true, Terminal::Timeout));
    }
    let stderr = String::from_utf8_lossy(&res.stderr);
    let reported = ["ERROR: AddressSanitizer", "runtime error: ", "WARNING: MemorySanitizer"]
        .iter()
        .any(|m| stderr.contains(m));
    let (terminal, truncated) = match end {
        "BUDGET" => (Terminal::Timeout, true),
        e if e.starts_with("SIGNAL") => (Terminal::Crash, false),
        e if e.starts_with("EXIT") => (if reported { Terminal::Crash } else { Terminal::NormalExit }, false),
        _ => {
            return Err(OracleError::Debugger(format!(
                "debugger did not finish: {}",
                String::from_utf8_lossy(&res.stdout).lines().last().unwrap_or("")
            )))
        }
    };
    Ok(SiteTrace::new(map_pcs(&table, &lines), truncated, terminal))
}

fn map_pcs(table: &LineTable, lines: &[&str]) -> Vec<SourceLoc> {
    lines
        .iter()
        .filter_map(|l| u64::from_str_radix(l.trim(), 16).ok())
        .filter_map(|pc| table.lookup(pc))
        .collect()
}

/// Trace of `bin`, read from `<work>/<prog-id>/<config-id>.trace` when a
/// previous run stored it there.
pub fn cached_trace(
    work: &Path,
    prog_id: &str,
    bin: &Binary,
    collect: impl FnOnce(&Binary) -> Result<SiteTrace, OracleError>,
) -> Result<SiteTrace, OracleError> {
    let path: PathBuf = work.join(prog_id).join(format!("{}.trace", bin.cfg.id()));
    if let Ok(text) = std::fs::read_to_string(&path) {
        if let Ok(t) = serde_json::from_str(&text) {
            return Ok(t);
        }
    }
    let trace = collect(bin)?;
    if let Some(dir) = path.parent() {
        let _ = std::fs::create_dir_all(dir);
    }
    let _ = std::fs::write(&path, serde_json::to_string(&trace).expect("trace serializes"));
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toolchain::{compile, CompilerConfig, OptLevel, RealToolchain, Sanitizer};

    const PROG: &str = "struct a {\n  int x;\n};\nstruct a b[2];\nstruct a *c = b, *d = b;\nint k = 0;\n\
int main() {\n  *c = *b;\n  k = 2;\n  *c = *(d + k);\n  return c->x;\n}\n";

    fn toolchain() -> Option<RealToolchain> {
        let tc = RealToolchain::discover();
        (tc.debugger.is_some() && tc.compiler("gcc").is_some()).then_some(tc)
    }

    #[test]
    fn crash_site_is_last_executed_site() {
        let Some(tc) = toolchain() else { return };
        let dir = tempfile::tempdir().unwrap();
        let src = dir.path().join("fig2.c");
        std::fs::write(&src, PROG).unwrap();
        let gdb = tc.debugger.clone().unwrap();
        let asan = compile(&tc, &src, &CompilerConfig::new("gcc", OptLevel::O0, Sanitizer::ASan), dir.path()).unwrap();
        let t = get_executed_sites(&asan, &gdb, DEFAULT_STEP_BUDGET, Duration::from_secs(120)).unwrap();
        assert_eq!(t.terminal, Terminal::Crash);
        assert_eq!(t.last().map(|s| s.line), Some(10), "{t:?}");
        let plain = compile(&tc, &src, &CompilerConfig::new("gcc", OptLevel::O0, Sanitizer::UBSan), dir.path()).unwrap();
        let n = get_executed_sites(&plain, &gdb, DEFAULT_STEP_BUDGET, Duration::from_secs(120)).unwrap();
        assert_eq!(n.terminal, Terminal::NormalExit);
        assert!(n.sites.iter().any(|s| s.line == 10));
        assert!(n.sites.iter().any(|s| s.line == 11));
        let first = cached_trace(dir.path(), "p", &plain, |_| Ok(n.clone())).unwrap();
        let again = cached_trace(dir.path(), "p", &plain, |_| unreachable!("served from the cache")).unwrap();
        assert_eq!(first, again);
    }
}
