//! Compilers, sanitizers and debuggers behind one interface, plus a
//! simulated toolchain that executes programs on the reference interpreter.

mod process;
mod sim;

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::lang::{print_program, Ast, SourceLoc};
use crate::matching::UbKind;
use crate::profile::{ProfileError, PRELUDE};

pub use process::{run_command, CommandOutput};
pub use sim::{sim_trace, FnInjection, InjectionAction, InjectionRule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sanitizer {
    ASan,
    UBSan,
    MSan,
}

impl Sanitizer {
    pub const ALL: [Sanitizer; 3] = [Sanitizer::ASan, Sanitizer::UBSan, Sanitizer::MSan];

    pub fn name(self) -> &'static str {
        match self {
            Sanitizer::ASan => "asan",
            Sanitizer::UBSan => "ubsan",
            Sanitizer::MSan => "msan",
        }
    }

    /// UB kinds this sanitizer is expected to catch.
    pub fn kinds(self) -> Vec<UbKind> {
        UbKind::ALL
            .into_iter()
            .filter(|k| sanitizers_for(*k).contains(&self))
            .collect()
    }

    fn flags(self) -> &'static [&'static str] {
        match self {
            Sanitizer::ASan => &["-fsanitize=address", "-fno-omit-frame-pointer"],
            Sanitizer::UBSan => &["-fsanitize=undefined", "-fno-sanitize-recover=all"],
            Sanitizer::MSan => &["-fsanitize=memory", "-fno-sanitize-recover=all"],
        }
    }
}

impl fmt::Display for Sanitizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Sanitizer {
    type Err = ToolchainError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "asan" | "address" => Ok(Sanitizer::ASan),
            "ubsan" | "undefined" => Ok(Sanitizer::UBSan),
            "msan" | "memory" => Ok(Sanitizer::MSan),
            _ => Err(ToolchainError::BadConfig(format!("unknown sanitizer `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OptLevel {
    O0,
    O1,
    Os,
    O2,
    O3,
}

impl OptLevel {
    pub const ALL: [OptLevel; 5] = [OptLevel::O0, OptLevel::O1, OptLevel::Os, OptLevel::O2, OptLevel::O3];

    pub fn flag(self) -> &'static str {
        match self {
            OptLevel::O0 => "-O0",
            OptLevel::O1 => "-O1",
            OptLevel::Os => "-Os",
            OptLevel::O2 => "-O2",
            OptLevel::O3 => "-O3",
        }
    }
}

impl fmt::Display for OptLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.flag()[1..])
    }
}

impl FromStr for OptLevel {
    type Err = ToolchainError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim_start_matches('-');
        OptLevel::ALL
            .into_iter()
            .find(|o| o.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| ToolchainError::BadConfig(format!("unknown optimization level `{s}`")))
    }
}

/// Which sanitizers each UB kind is expected to be caught by.
pub fn sanitizers_for(kind: UbKind) -> Vec<Sanitizer> {
    use UbKind::*;
    match kind {
        BufOverflowArray => vec![Sanitizer::ASan, Sanitizer::UBSan],
        BufOverflowPointer | UseAfterFree | UseAfterScope => vec![Sanitizer::ASan],
        NullPtrDeref | IntegerOverflow | ShiftOverflow | DivideByZero => vec![Sanitizer::UBSan],
        UseOfUninitMemory => vec![Sanitizer::MSan],
    }
}

/// One cell of the compile matrix, written `compiler:opt:sanitizer` with
/// optional extra flags after a fourth colon.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct CompilerConfig {
    pub compiler: String,
    pub opt: OptLevel,
    pub sanitizer: Sanitizer,
    pub extra_flags: Vec<String>,
}

impl CompilerConfig {
    pub fn new(compiler: &str, opt: OptLevel, sanitizer: Sanitizer) -> Self {
        CompilerConfig {
            compiler: compiler.to_string(),
            opt,
            sanitizer,
            extra_flags: Vec::new(),
        }
    }

    pub fn is_sim(&self) -> bool {
        self.compiler == "sim" || self.compiler.starts_with("sim-")
    }

    /// File-name friendly identifier.
    pub fn id(&self) -> String {
        let base = format!("{}-{}-{}", self.compiler, self.opt, self.sanitizer);
        if self.extra_flags.is_empty() {
            base
        } else {
            format!("{base}-{}", &digest(self.extra_flags.join(" ").as_bytes())[..8])
        }
    }
}

impl fmt::Display for CompilerConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.compiler, self.opt, self.sanitizer)?;
        if !self.extra_flags.is_empty() {
            write!(f, ":{}", self.extra_flags.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for CompilerConfig {
    type Err = ToolchainError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.trim().splitn(4, ':').collect();
        let (compiler, opt, san) = match parts[..] {
            [c, o, s] | [c, o, s, _] => (c, o, s),
            _ => {
                return Err(ToolchainError::BadConfig(format!(
                    "expected `compiler:opt:sanitizer`, got `{s}`"
                )))
            }
        };
        if compiler.is_empty() {
            return Err(ToolchainError::BadConfig(format!("missing compiler in `{s}`")));
        }
        let mut cfg = CompilerConfig::new(compiler, opt.parse()?, san.parse()?);
        if let Some(flags) = parts.get(3) {
            cfg.extra_flags = flags.split_whitespace().map(str::to_string).collect();
        }
        Ok(cfg)
    }
}

impl TryFrom<String> for CompilerConfig {
    type Error = ToolchainError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<CompilerConfig> for String {
    fn from(c: CompilerConfig) -> String {
        c.to_string()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RunStatus {
    SanReport { kind_text: String, site: Option<SourceLoc> },
    NormalExit(i32),
    Timeout,
    OtherCrash(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunOutcome {
    pub status: RunStatus,
    /// Hex SHA-256 of stderr.
    pub stderr_digest: String,
    pub stdout: String,
}

impl RunOutcome {
    pub fn is_report(&self) -> bool {
        matches!(self.status, RunStatus::SanReport { .. })
    }
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Debug, Error)]
pub enum ToolchainError {
    #[error("compilation failed: {0}")]
    CompileFailed(String),
    #[error("tool not found: {0}")]
    ToolMissing(String),
    #[error("{0} is not supported by {1}")]
    Unsupported(Sanitizer, String),
    #[error("invalid configuration: {0}")]
    BadConfig(String),
    #[error(transparent)]
    Vm(#[from] crate::minivm::VmError),
    #[error(transparent)]
    Parse(#[from] crate::lang::ParseError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    Gcc,
    Clang,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Compiler {
    pub id: String,
    pub path: PathBuf,
    pub family: Family,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timeouts {
    pub compile: Duration,
    pub execute: Duration,
    pub debugger: Duration,
}

impl Default for Timeouts {
    fn default() -> Self {
        Timeouts {
            compile: Duration::from_secs(60),
            execute: Duration::from_secs(10),
            debugger: Duration::from_secs(120),
        }
    }
}

/// Real compilers and debugger found on this machine.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RealToolchain {
    pub compilers: Vec<Compiler>,
    pub debugger: Option<PathBuf>,
    pub timeouts: Timeouts,
}

pub enum Toolchain {
    Sim,
    Real(RealToolchain),
}

fn which(name: &str) -> Option<PathBuf> {
    let path = std::env::var_os("PATH")?;
    std::env::split_paths(&path)
        .map(|d| d.join(name))
        .find(|p| p.is_file())
}

fn family_of(path: &Path) -> Family {
    let name = path.file_name().map(|n| n.to_string_lossy().to_string()).unwrap_or_default();
    if name.contains("clang") {
        Family::Clang
    } else {
        Family::Gcc
    }
}

impl RealToolchain {
    /// Compilers come from `UBF_CC_<ID>` variables (id lowercased), falling
    /// back to `gcc` and `clang` on `PATH`; the debugger from `UBF_DEBUGGER`
    /// or `gdb` on `PATH`.
    pub fn discover() -> RealToolchain {
        let mut compilers = Vec::new();
        let mut vars: Vec<(String, String)> = std::env::vars()
            .filter_map(|(k, v)| k.strip_prefix("UBF_CC_").map(|id| (id.to_ascii_lowercase(), v)))
            .collect();
        vars.sort();
        for (id, v) in vars {
            let path = PathBuf::from(v);
            if path.is_file() {
                compilers.push(Compiler {
                    family: family_of(&path),
                    id,
                    path,
                });
            }
        }
        if compilers.is_empty() {
            for name in ["gcc", "clang"] {
                if let Some(path) = which(name) {
                    compilers.push(Compiler {
                        id: name.to_string(),
                        family: family_of(&path),
                        path,
                    });
                }
            }
        }
        let debugger = std::env::var_os("UBF_DEBUGGER")
            .map(PathBuf::from)
            .filter(|p| p.is_file())
            .or_else(|| which("gdb"));
        RealToolchain {
            compilers,
            debugger,
            timeouts: Timeouts::default(),
        }
    }

    pub fn compiler(&self, id: &str) -> Option<&Compiler> {
        self.compilers.iter().find(|c| c.id == id)
    }

    /// Whether `cfg` can be built here.
    pub fn supports(&self, cfg: &CompilerConfig) -> bool {
        match self.compiler(&cfg.compiler) {
            Some(c) => !(cfg.sanitizer == Sanitizer::MSan && c.family == Family::Gcc),
            None => false,
        }
    }

    /// Compiles the instrumented program without sanitizers and runs it with
    /// the profile log redirected to a temporary file.
    pub fn run_instrumented(&self, ast: &Ast, timeout: Duration) -> Result<(String, Vec<u8>), ProfileError> {
        let cc = self
            .compilers
            .first()
            .ok_or_else(|| ProfileError::CompileFailed("no compiler available".into()))?;
        let dir = tempfile::tempdir().map_err(|e| ProfileError::Io(e.to_string()))?;
        let src = dir.path().join("profile.c");
        let bin = dir.path().join("profile");
        let log = dir.path().join("profile.log");
        std::fs::write(&src, format!("{PRELUDE}{}", print_program(ast))).map_err(|e| ProfileError::Io(e.to_string()))?;
        let mut cmd = std::process::Command::new(&cc.path);
        cmd.args(["-g", "-O0", "-w", "-o"]).arg(&bin).arg(&src);
        let out = run_command(&mut cmd, self.timeouts.compile).map_err(|e| ProfileError::Io(e.to_string()))?;
        if out.code != Some(0) {
            return Err(ProfileError::CompileFailed(String::from_utf8_lossy(&out.stderr).into_owned()));
        }
        let mut run = std::process::Command::new(&bin);
        run.env("UBS_PROFILE_LOG", &log);
        let out = run_command(&mut run, timeout).map_err(|e| ProfileError::Io(e.to_string()))?;
        if out.timed_out {
            return Err(ProfileError::RunTimeout);
        }
        if out.code.is_none() {
            return Err(ProfileError::RunCrashed(String::from_utf8_lossy(&out.stderr).into_owned()));
        }
        let bytes = std::fs::read(&log).unwrap_or_default();
        Ok((String::from_utf8_lossy(&out.stdout).into_owned(), bytes))
    }
}

/// A compiled program.
#[derive(Clone, Debug)]
pub struct Binary {
    pub path: PathBuf,
    pub source: PathBuf,
    pub cfg: CompilerConfig,
    /// The exact command line used.
    pub flags: Vec<String>,
}

pub fn compile(tc: &RealToolchain, source: &Path, cfg: &CompilerConfig, workdir: &Path) -> Result<Binary, ToolchainError> {
    let cc = tc
        .compiler(&cfg.compiler)
        .ok_or_else(|| ToolchainError::ToolMissing(cfg.compiler.clone()))?;
    if cfg.sanitizer == Sanitizer::MSan && cc.family == Family::Gcc {
        return Err(ToolchainError::Unsupported(cfg.sanitizer, cfg.compiler.clone()));
    }
    std::fs::create_dir_all(workdir)?;
    let out = workdir.join(cfg.id());
    let mut flags: Vec<String> = vec!["-g".into(), "-w".into(), cfg.opt.flag().into()];
    flags.extend(cfg.sanitizer.flags().iter().map(|s| s.to_string()));
    flags.extend(cfg.extra_flags.iter().cloned());
    let mut cmd = std::process::Command::new(&cc.path);
    cmd.args(&flags).arg("-o").arg(&out).arg(source);
    let res = run_command(&mut cmd, tc.timeouts.compile)?;
    if res.timed_out {
        return Err(ToolchainError::CompileFailed("compiler timed out".into()));
    }
    if res.code != Some(0) {
        return Err(ToolchainError::CompileFailed(String::from_utf8_lossy(&res.stderr).into_owned()));
    }
    Ok(Binary {
        path: out,
        source: source.to_path_buf(),
        cfg: cfg.clone(),
        flags,
    })
}

/// Runtime options that make every sanitizer report fatal.
pub fn sanitizer_env() -> [(&'static str, &'static str); 3] {
    [
        ("ASAN_OPTIONS", "detect_leaks=0:halt_on_error=1:abort_on_error=0"),
        ("UBSAN_OPTIONS", "halt_on_error=1:print_stacktrace=0"),
        ("MSAN_OPTIONS", "halt_on_error=1"),
    ]
}

pub fn execute(bin: &Binary, timeout: Duration) -> Result<RunOutcome, ToolchainError> {
    let mut cmd = std::process::Command::new(&bin.path);
    cmd.envs(sanitizer_env());
    let out = run_command(&mut cmd, timeout)?;
    let file = bin.source.file_name().map(|f| f.to_string_lossy().to_string()).unwrap_or_default();
    Ok(classify(&out, &file))
}

/// Maps a finished process to exactly one outcome.
pub fn classify(out: &CommandOutput, source_file: &str) -> RunOutcome {
    let stderr = String::from_utf8_lossy(&out.stderr);
    let status = if out.timed_out {
        RunStatus::Timeout
    } else if let Some(kind_text) = report_kind(&stderr).filter(|k| k != "SEGV") {
        RunStatus::SanReport {
            kind_text,
            site: report_site(&stderr, source_file),
        }
    } else {
        match out.code {
            Some(c) if !stderr.contains("Sanitizer") => RunStatus::NormalExit(c),
            Some(c) => RunStatus::OtherCrash(format!("exit code {c}")),
            None => RunStatus::OtherCrash(format!("signal {}", out.signal.unwrap_or(0))),
        }
    };
    RunOutcome {
        status,
        stderr_digest: digest(&out.stderr),
        stdout: String::from_utf8_lossy(&out.stdout).into_owned(),
    }
}

fn report_kind(stderr: &str) -> Option<String> {
    if let Some(i) = stderr.find("ERROR: AddressSanitizer: ") {
        let rest = &stderr[i + "ERROR: AddressSanitizer: ".len()..];
        return Some(rest.split_whitespace().next().unwrap_or("unknown").to_string());
    }
    if let Some(i) = stderr.find("runtime error: ") {
        let rest = &stderr[i + "runtime error: ".len()..];
        return Some(rest.lines().next().unwrap_or("").trim().to_string());
    }
    if stderr.contains("MemorySanitizer") {
        let kind = stderr
            .lines()
            .find_map(|l| l.split("MemorySanitizer: ").nth(1))
            .and_then(|r| r.split_whitespace().next())
            .unwrap_or("use-of-uninitialized-value");
        return Some(kind.to_string());
    }
    None
}

/// First `file:line:col` in the report that names the program's source file.
fn report_site(stderr: &str, source_file: &str) -> Option<SourceLoc> {
    if source_file.is_empty() {
        return None;
    }
    for line in stderr.lines() {
        let mut rest = line;
        while let Some(i) = rest.find(source_file) {
            let after = &rest[i + source_file.len()..];
            let mut nums = after.strip_prefix(':').map(|a| a.split(':')).into_iter().flatten();
            let ln = nums.next().and_then(|s| s.parse::<u32>().ok());
            let col = nums
                .next()
                .map(|s| s.chars().take_while(char::is_ascii_digit).collect::<String>())
                .and_then(|s| s.parse::<u32>().ok());
            if let Some(ln) = ln {
                return Some(SourceLoc::new(ln, col.unwrap_or(0)));
            }
            rest = after;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sanitizer_table() {
        assert_eq!(sanitizers_for(UbKind::BufOverflowArray), vec![Sanitizer::ASan, Sanitizer::UBSan]);
        assert_eq!(sanitizers_for(UbKind::UseOfUninitMemory), vec![Sanitizer::MSan]);
        let mut all: Vec<Sanitizer> = UbKind::ALL.into_iter().flat_map(sanitizers_for).collect();
        all.sort();
        all.dedup();
        assert_eq!(all, Sanitizer::ALL.to_vec());
        assert_eq!(
            Sanitizer::ASan.kinds(),
            vec![
                UbKind::BufOverflowArray,
                UbKind::BufOverflowPointer,
                UbKind::UseAfterFree,
                UbKind::UseAfterScope
            ]
        );
    }

    #[test]
    fn config_round_trip() {
        let c: CompilerConfig = "gcc:O2:asan".parse().unwrap();
        assert_eq!(c, CompilerConfig::new("gcc", OptLevel::O2, Sanitizer::ASan));
        assert_eq!(c.to_string().parse::<CompilerConfig>().unwrap(), c);
        assert!("gcc:O9:asan".parse::<CompilerConfig>().is_err());
        assert!("gcc:O2".parse::<CompilerConfig>().is_err());
    }

    fn out(code: Option<i32>, stderr: &str) -> CommandOutput {
        CommandOutput {
            code,
            signal: None,
            timed_out: false,
            stdout: Vec::new(),
            stderr: stderr.as_bytes().to_vec(),
        }
    }

    #[test]
    fn classifies_reports() {
        let asan = "==1==ERROR: AddressSanitizer: stack-buffer-overflow on address 0x7ff\n\
                    READ of size 4 at 0x7ff thread T0\n    #0 0x401 in main /tmp/w/a.c:8:8\n";
        let r = classify(&out(Some(1), asan), "a.c");
        assert_eq!(
            r.status,
            RunStatus::SanReport {
                kind_text: "stack-buffer-overflow".into(),
                site: Some(SourceLoc::new(8, 8))
            }
        );
        let ub = "/tmp/w/a.c:5:11: runtime error: signed integer overflow: 2147483647 + 1 cannot be represented in type 'int'\n";
        let r = classify(&out(Some(1), ub), "a.c");
        assert!(matches!(r.status, RunStatus::SanReport { site: Some(s), .. } if s == SourceLoc::new(5, 11)));
        assert_eq!(classify(&out(Some(0), ""), "a.c").status, RunStatus::NormalExit(0));
        assert_eq!(classify(&out(Some(3), ""), "a.c").status, RunStatus::NormalExit(3));
        let mut t = out(None, "");
        t.timed_out = true;
        assert_eq!(classify(&t, "a.c").status, RunStatus::Timeout);
        let mut s = out(None, "");
        s.signal = Some(11);
        assert_eq!(classify(&s, "a.c").status, RunStatus::OtherCrash("signal 11".into()));
    }
}
