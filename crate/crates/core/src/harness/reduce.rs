use std::path::Path;
use std::process::Command;
use std::time::Duration;

use thiserror::Error;

use super::{Finding, ReducerHook};
use crate::toolchain::run_command;

#[derive(Debug, Error)]
pub enum ReduceError {
    #[error("reducer failed: {0}")]
    ReducerFailed(String),
}

fn quote(s: &str) -> String {
    format!("'{}'", s.replace('\'', r"'\''"))
}

/// Shell script that succeeds while `file_name` still shows the finding's
/// discrepancy with an FnBug verdict.
pub fn interestingness_script(checker: &Path, file_name: &str, f: &Finding, injection: Option<&Path>) -> String {
    let mut cmd = format!(
        "exec {} oracle {} --pair {} --expect fn-bug",
        quote(&checker.to_string_lossy()),
        quote(file_name),
        quote(&format!("{},{}", f.cfg_crash, f.cfg_nocrash)),
    );
    if let Some(inj) = injection {
        cmd.push_str(&format!(" --injection {}", quote(&inj.to_string_lossy())));
    }
    format!("#!/bin/sh\n{cmd}\n")
}

/// Runs the configured reducer over `source`. With no hook this does
/// nothing; otherwise the result has been checked to still be interesting.
pub fn reduce_hook(
    hook: Option<&ReducerHook>,
    f: &Finding,
    source: &str,
    injection: Option<&Path>,
    timeout: Duration,
) -> Result<Option<String>, ReduceError> {
    let Some(hook) = hook else { return Ok(None) };
    let fail = |m: String| ReduceError::ReducerFailed(m);
    let io = |e: std::io::Error| ReduceError::ReducerFailed(e.to_string());
    let checker = match &hook.checker {
        Some(c) => c.clone(),
        None => std::env::current_exe().map_err(io)?,
    };
    let dir = tempfile::tempdir().map_err(io)?;
    let file = "program.c";
    std::fs::write(dir.path().join(file), source).map_err(io)?;
    let script = dir.path().join("interesting.sh");
    std::fs::write(&script, interestingness_script(&checker, file, f, injection)).map_err(io)?;
    #[cfg(unix)]
    {
        use std::os::unix::fs::PermissionsExt;
        std::fs::set_permissions(&script, std::fs::Permissions::from_mode(0o755)).map_err(io)?;
    }
    let (program, args) = hook.argv.split_first().ok_or_else(|| fail("empty reducer command".into()))?;
    let mut cmd = Command::new(program);
    cmd.args(args).arg(&script).arg(file).current_dir(dir.path());
    let out = run_command(&mut cmd, timeout).map_err(io)?;
    if out.timed_out {
        return Err(fail("reducer timed out".into()));
    }
    if out.code != Some(0) {
        return Err(fail(String::from_utf8_lossy(&out.stderr).into_owned()));
    }
    let reduced = std::fs::read_to_string(dir.path().join(file)).map_err(io)?;
    let mut check = Command::new(&script);
    check.current_dir(dir.path());
    let ok = run_command(&mut check, timeout).map_err(io)?;
    if ok.code != Some(0) {
        return Err(fail("reduced program no longer shows the discrepancy".into()));
    }
    Ok(Some(reduced))
}
