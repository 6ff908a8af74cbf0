use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matching::UbKind;
use crate::oracle::DEFAULT_STEP_BUDGET;
use crate::toolchain::{sanitizers_for, CompilerConfig, Sanitizer, Timeouts};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {0}: {1}")]
    Read(PathBuf, std::io::Error),
    #[error("malformed campaign file: {0}")]
    Syntax(#[from] toml::de::Error),
    #[error("invalid campaign: {0}")]
    Invalid(String),
}

/// Where seed programs come from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeedSource {
    /// Every `*.c` file in a directory, in file-name order.
    Dir(PathBuf),
    /// The first `n` seeds shipped with the crate.
    Bundled(usize),
    /// Seeds `start..start + count` of the built-in generator.
    Builtin {
        #[serde(default)]
        start: u64,
        count: usize,
    },
    /// An external generator run `count` times; `{n}` in an argument is
    /// replaced by the invocation number and stdout is the seed.
    Command { argv: Vec<String>, count: usize },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Profiler {
    /// Profiles on the reference interpreter.
    #[default]
    Sim,
    /// Compiles and runs the instrumented seed with the first real compiler.
    Real,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Budgets {
    pub max_seeds: Option<usize>,
    pub max_programs_per_kind: Option<usize>,
    pub compile_timeout_secs: u64,
    pub execute_timeout_secs: u64,
    pub debugger_timeout_secs: u64,
    pub profile_timeout_secs: u64,
    pub reduce_timeout_secs: u64,
    /// Instructions the debugger may single-step per trace.
    pub step_budget: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        let t = Timeouts::default();
        Budgets {
            max_seeds: None,
            max_programs_per_kind: None,
            compile_timeout_secs: t.compile.as_secs(),
            execute_timeout_secs: t.execute.as_secs(),
            debugger_timeout_secs: t.debugger.as_secs(),
            profile_timeout_secs: 30,
            reduce_timeout_secs: 600,
            step_budget: DEFAULT_STEP_BUDGET,
        }
    }
}

impl Budgets {
    pub fn timeouts(&self) -> Timeouts {
        Timeouts {
            compile: Duration::from_secs(self.compile_timeout_secs),
            execute: Duration::from_secs(self.execute_timeout_secs),
            debugger: Duration::from_secs(self.debugger_timeout_secs),
        }
    }
}

/// External test-case reducer, invoked as `argv... <script> <file.c>` in a
/// scratch directory, creduce style.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReducerHook {
    pub argv: Vec<String>,
    /// Binary whose `oracle` subcommand the interestingness script calls.
    /// Defaults to the running executable.
    #[serde(default)]
    pub checker: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CampaignConfig {
    pub seeds: SeedSource,
    /// Empty means every kind some matrix entry can detect.
    #[serde(default)]
    pub kinds: Vec<UbKind>,
    pub matrix: Vec<CompilerConfig>,
    #[serde(default = "default_workers")]
    pub workers: usize,
    #[serde(default)]
    pub budgets: Budgets,
    pub output: PathBuf,
    #[serde(default)]
    pub reducer: Option<ReducerHook>,
    #[serde(default)]
    pub campaign_seed: u64,
    #[serde(default)]
    pub profiler: Profiler,
    /// Injection rules for simulated configurations.
    #[serde(default)]
    pub injection: Option<PathBuf>,
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

impl CampaignConfig {
    /// A configuration with defaults for everything but the essentials.
    pub fn new(seeds: SeedSource, matrix: Vec<CompilerConfig>, output: impl Into<PathBuf>) -> Self {
        CampaignConfig {
            seeds,
            kinds: Vec::new(),
            matrix,
            workers: default_workers(),
            budgets: Budgets::default(),
            output: output.into(),
            reducer: None,
            campaign_seed: 0,
            profiler: Profiler::Sim,
            injection: None,
        }
    }

    /// Reads a TOML campaign file; relative paths are taken from the file's
    /// directory.
    pub fn load(path: &Path) -> Result<CampaignConfig, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Read(path.to_path_buf(), e))?;
        let mut cfg: CampaignConfig = toml::from_str(&text)?;
        let base = path.parent().unwrap_or(Path::new("."));
        cfg.rebase(base);
        cfg.validate()?;
        Ok(cfg)
    }

    fn rebase(&mut self, base: &Path) {
        let fix = |p: &mut PathBuf| {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        };
        fix(&mut self.output);
        if let SeedSource::Dir(d) = &mut self.seeds {
            fix(d);
        }
        if let Some(i) = &mut self.injection {
            fix(i);
        }
        if let Some(c) = self.reducer.as_mut().and_then(|r| r.checker.as_mut()) {
            fix(c);
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("campaign config serializes")
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let bad = |m: String| Err(ConfigError::Invalid(m));
        if self.matrix.is_empty() {
            return bad("the compiler matrix is empty".into());
        }
        let mut per_san: BTreeMap<Sanitizer, usize> = BTreeMap::new();
        for c in &self.matrix {
            *per_san.entry(c.sanitizer).or_default() += 1;
        }
        for (san, n) in &per_san {
            if *n < 2 {
                return bad(format!("sanitizer {san} has {n} configuration; at least 2 are needed to form pairs"));
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for c in &self.matrix {
            if !seen.insert(c) {
                return bad(format!("configuration {c} is listed twice"));
            }
        }
        for k in &self.kinds {
            if !sanitizers_for(*k).iter().any(|s| per_san.contains_key(s)) {
                return bad(format!("no configuration in the matrix can detect {k}"));
            }
        }
        if self.workers == 0 {
            return bad("workers must be at least 1".into());
        }
        match &self.seeds {
            SeedSource::Command { argv, .. } if argv.is_empty() => bad("seed command is empty".into()),
            _ => Ok(()),
        }
    }

    /// Kinds this campaign exercises.
    pub fn effective_kinds(&self) -> Vec<UbKind> {
        if !self.kinds.is_empty() {
            return self.kinds.clone();
        }
        UbKind::ALL
            .into_iter()
            .filter(|k| sanitizers_for(*k).iter().any(|s| self.matrix.iter().any(|c| c.sanitizer == *s)))
            .collect()
    }

    pub fn needs_real_toolchain(&self) -> bool {
        self.profiler == Profiler::Real || self.matrix.iter().any(|c| !c.is_sim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FILE: &str = r#"
campaign_seed = 9
kinds = ["BufOverflowArray", "DivideByZero"]
matrix = ["sim:O0:asan", "sim:O2:asan", "sim:O0:ubsan", "sim:O2:ubsan"]
workers = 2
output = "out"

[seeds]
dir = "seeds"

[budgets]
max_seeds = 3
"#;

    #[test]
    fn loads_and_rebases() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.toml");
        std::fs::write(&path, FILE).unwrap();
        let cfg = CampaignConfig::load(&path).unwrap();
        assert_eq!(cfg.output, dir.path().join("out"));
        assert_eq!(cfg.seeds, SeedSource::Dir(dir.path().join("seeds")));
        assert_eq!(cfg.kinds, vec![UbKind::BufOverflowArray, UbKind::DivideByZero]);
        assert_eq!(cfg.budgets.max_seeds, Some(3));
        assert_eq!(cfg.budgets.step_budget, DEFAULT_STEP_BUDGET);
        let back: CampaignConfig = toml::from_str(&cfg.to_toml()).unwrap();
        assert_eq!(back, cfg);
    }

    #[test]
    fn rejects_single_config_sanitizers() {
        let mut cfg = CampaignConfig::new(
            SeedSource::Bundled(1),
            vec!["sim:O0:asan".parse().unwrap(), "sim:O2:asan".parse().unwrap()],
            "out",
        );
        assert!(cfg.validate().is_ok());
        cfg.matrix.push("sim:O0:msan".parse().unwrap());
        assert!(cfg.validate().is_err());
        cfg.matrix.pop();
        cfg.kinds = vec![UbKind::DivideByZero];
        assert!(cfg.validate().is_err());
        cfg.kinds.clear();
        assert_eq!(
            cfg.effective_kinds(),
            vec![UbKind::BufOverflowArray, UbKind::BufOverflowPointer, UbKind::UseAfterFree, UbKind::UseAfterScope]
        );
    }

    #[test]
    fn seed_sources_parse() {
        let cmd: CampaignConfig = toml::from_str(
            "matrix = []\noutput = \"o\"\n[seeds.command]\nargv = [\"csmith\", \"--seed\", \"{n}\"]\ncount = 4\n",
        )
        .unwrap();
        assert!(matches!(cmd.seeds, SeedSource::Command { count: 4, .. }));
        let b: CampaignConfig = toml::from_str("matrix = []\noutput = \"o\"\n[seeds.builtin]\ncount = 4\n").unwrap();
        assert_eq!(b.seeds, SeedSource::Builtin { start: 0, count: 4 });
    }
}
