use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{digest, CompilerConfig, OptLevel, RunOutcome, RunStatus, Sanitizer, ToolchainError};
use crate::lang::{parse_program, SourceLoc};
use crate::matching::UbKind;
use crate::minivm::{self, CheckPolicy, Fault, VmConfig, VmOutcome};
use crate::oracle::SiteTrace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum InjectionAction {
    /// The sanitizer silently misses the violation.
    Miss,
    /// The violating code is treated as optimized out.
    Eliminate,
}

/// One line of an injection file. `None` fields match anything.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InjectionRule {
    pub action: InjectionAction,
    pub kind: Option<UbKind>,
    pub opt: Option<OptLevel>,
    pub compiler: Option<String>,
    pub sanitizer: Option<Sanitizer>,
    /// Prefix of the program's source digest.
    pub prog: Option<String>,
    pub prob: f64,
}

/// Rules are tried in order and the first match decides, so no case is both
/// missed and eliminated.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct FnInjection {
    pub rules: Vec<InjectionRule>,
}

impl FromStr for FnInjection {
    type Err = ToolchainError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut rules = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |m: String| ToolchainError::BadConfig(format!("injection line {}: {m}", n + 1));
            let mut words = line.split_whitespace();
            let action = match words.next() {
                Some("miss") => InjectionAction::Miss,
                Some("eliminate") => InjectionAction::Eliminate,
                Some(w) => return Err(bad(format!("unknown action `{w}`"))),
                None => continue,
            };
            let mut rule = InjectionRule {
                action,
                kind: None,
                opt: None,
                compiler: None,
                sanitizer: None,
                prog: None,
                prob: 1.0,
            };
            for w in words {
                let (k, v) = w.split_once('=').ok_or_else(|| bad(format!("expected key=value, got `{w}`")))?;
                if v == "*" {
                    continue;
                }
                match k {
                    "kind" => rule.kind = Some(v.parse().map_err(|e| bad(format!("{e}")))?),
                    "opt" => rule.opt = Some(v.parse()?),
                    "cc" => rule.compiler = Some(v.to_string()),
                    "san" => rule.sanitizer = Some(v.parse()?),
                    "prog" => rule.prog = Some(v.to_ascii_lowercase()),
                    "prob" => {
                        rule.prob = v.parse().map_err(|_| bad(format!("bad probability `{v}`")))?;
                        if !(0.0..=1.0).contains(&rule.prob) {
                            return Err(bad(format!("probability {v} outside [0, 1]")));
                        }
                    }
                    _ => return Err(bad(format!("unknown key `{k}`"))),
                }
            }
            rules.push(rule);
        }
        Ok(FnInjection { rules })
    }
}

impl FnInjection {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.rules {
            out.push_str(match r.action {
                InjectionAction::Miss => "miss",
                InjectionAction::Eliminate => "eliminate",
            });
            if let Some(k) = r.kind {
                out.push_str(&format!(" kind={k}"));
            }
            if let Some(o) = r.opt {
                out.push_str(&format!(" opt={o}"));
            }
            if let Some(c) = &r.compiler {
                out.push_str(&format!(" cc={c}"));
            }
            if let Some(s) = r.sanitizer {
                out.push_str(&format!(" san={s}"));
            }
            if let Some(p) = &r.prog {
                out.push_str(&format!(" prog={p}"));
            }
            out.push_str(&format!(" prob={}\n", r.prob));
        }
        out
    }

    /// What happens to a violation of `kind` at `site` in the given program
    /// and configuration.
    pub fn decide(&self, kind: UbKind, cfg: &CompilerConfig, prog: &str, site: SourceLoc) -> Option<InjectionAction> {
        self.rules.iter().find_map(|r| {
            let hit = r.kind.is_none_or(|k| k == kind)
                && r.opt.is_none_or(|o| o == cfg.opt)
                && r.compiler.as_ref().is_none_or(|c| *c == cfg.compiler)
                && r.sanitizer.is_none_or(|s| s == cfg.sanitizer)
                && r.prog.as_ref().is_none_or(|p| prog.starts_with(p.as_str()))
                && unit_hash(prog, cfg, kind, site) < r.prob;
            hit.then_some(r.action)
        })
    }
}

/// Uniform value in [0, 1) derived from the case.
fn unit_hash(prog: &str, cfg: &CompilerConfig, kind: UbKind, site: SourceLoc) -> f64 {
    let h = Sha256::digest(format!("{prog}|{cfg}|{kind}|{site}").as_bytes());
    let n = u64::from_le_bytes(h[..8].try_into().expect("8 bytes"));
    (n >> 11) as f64 / (1u64 << 53) as f64
}

/// Runs a program as if built with `cfg`: the interpreter stands in for the
/// compiled binary, checking only the kinds the sanitizer covers.
pub fn sim_trace(source: &str, cfg: &CompilerConfig, inj: &FnInjection) -> Result<(RunOutcome, SiteTrace), ToolchainError> {
    let ast = parse_program(source)?;
    let prog = digest(source.as_bytes());
    let mut vm = VmConfig {
        trace: true,
        policy: CheckPolicy {
            detect: Some(cfg.sanitizer.kinds()),
            fault: None,
        },
        ..VmConfig::default()
    };
    let mut run = minivm::run(&ast, &vm)?;
    if let VmOutcome::Ub { kind, site, .. } = run.outcome {
        if let Some(action) = inj.decide(kind, cfg, &prog, site) {
            let fault = match action {
                InjectionAction::Miss => Fault::Miss,
                InjectionAction::Eliminate => Fault::Eliminate,
            };
            vm.policy.fault = Some((site, fault));
            run = minivm::run(&ast, &vm)?;
        }
    }
    let status = match &run.outcome {
        VmOutcome::Normal { exit_code, .. } => RunStatus::NormalExit(*exit_code),
        VmOutcome::Ub { kind, site, .. } => RunStatus::SanReport {
            kind_text: kind.to_string(),
            site: Some(*site),
        },
        VmOutcome::StepLimit => RunStatus::Timeout,
    };
    let stderr = match &run.outcome {
        VmOutcome::Ub { kind, site, detail } => format!("sim: {kind} at {site}: {detail}\n"),
        _ => String::new(),
    };
    let trace = run.trace.expect("trace requested");
    Ok((
        RunOutcome {
            status,
            stderr_digest: digest(stderr.as_bytes()),
            stdout: String::from_utf8_lossy(&run.stdout).into_owned(),
        },
        trace,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_injection_file() {
        let text = "# comment\nmiss kind=BufOverflowPointer opt=O2 prob=0.5\neliminate kind=div opt=* prob=1 prog=ab12\n";
        let inj: FnInjection = text.parse().unwrap();
        assert_eq!(inj.rules.len(), 2);
        assert_eq!(inj.rules[0].action, InjectionAction::Miss);
        assert_eq!(inj.rules[0].opt, Some(OptLevel::O2));
        assert_eq!(inj.rules[1].kind, Some(UbKind::DivideByZero));
        assert_eq!(inj.rules[1].opt, None);
        let again: FnInjection = inj.to_text().parse().unwrap();
        assert_eq!(again, inj);
        assert!("drop kind=div".parse::<FnInjection>().is_err());
        assert!("miss prob=2".parse::<FnInjection>().is_err());
    }

    #[test]
    fn first_matching_rule_wins() {
        let inj: FnInjection = "miss opt=O2\neliminate opt=O2".parse().unwrap();
        let cfg = CompilerConfig::new("sim", OptLevel::O2, Sanitizer::ASan);
        let site = SourceLoc::new(1, 1);
        assert_eq!(inj.decide(UbKind::UseAfterFree, &cfg, "ff", site), Some(InjectionAction::Miss));
        let o0 = CompilerConfig::new("sim", OptLevel::O0, Sanitizer::ASan);
        assert_eq!(inj.decide(UbKind::UseAfterFree, &o0, "ff", site), None);
    }

    #[test]
    fn probability_is_roughly_uniform() {
        let inj: FnInjection = "miss prob=0.3".parse().unwrap();
        let cfg = CompilerConfig::new("sim", OptLevel::O1, Sanitizer::UBSan);
        let hits = (0..2000)
            .filter(|i| inj.decide(UbKind::DivideByZero, &cfg, &format!("{i:x}"), SourceLoc::new(3, 4)).is_some())
            .count();
        assert!((500..700).contains(&hits), "{hits}");
    }

    const PROG: &str = "int main() {\n  int a[2];\n  int i = 2;\n  a[i] = 1;\n  return 0;\n}\n";

    #[test]
    fn sim_outcomes_follow_injection() {
        let cfg = CompilerConfig::new("sim", OptLevel::O2, Sanitizer::ASan);
        let site = SourceLoc::new(4, 3);
        let (out, trace) = sim_trace(PROG, &cfg, &FnInjection::default()).unwrap();
        assert_eq!(
            out.status,
            RunStatus::SanReport {
                kind_text: "BufOverflowArray".into(),
                site: Some(site)
            }
        );
        assert_eq!(trace.last(), Some(site));
        let (out, trace) = sim_trace(PROG, &cfg, &"miss".parse().unwrap()).unwrap();
        assert_eq!(out.status, RunStatus::NormalExit(0));
        assert!(trace.contains(site));
        let (out, trace) = sim_trace(PROG, &cfg, &"eliminate".parse().unwrap()).unwrap();
        assert_eq!(out.status, RunStatus::NormalExit(0));
        assert!(!trace.contains(site));
        let msan = CompilerConfig::new("sim", OptLevel::O0, Sanitizer::MSan);
        let (out, _) = sim_trace(PROG, &msan, &FnInjection::default()).unwrap();
        assert_eq!(out.status, RunStatus::NormalExit(0));
    }
}
