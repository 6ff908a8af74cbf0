use std::io::Read;
use std::process::{Command, Stdio};
use std::time::Duration;

use wait_timeout::ChildExt;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommandOutput {
    /// Exit code, or `None` if the process was killed by a signal.
    pub code: Option<i32>,
    pub signal: Option<i32>,
    pub timed_out: bool,
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
}

/// Runs a command to completion or until `timeout`, capturing both streams.
pub fn run_command(cmd: &mut Command, timeout: Duration) -> std::io::Result<CommandOutput> {
    let mut child = cmd
        .stdin(Stdio::null())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()?;
    let mut out_pipe = child.stdout.take().expect("piped stdout");
    let mut err_pipe = child.stderr.take().expect("piped stderr");
    let out_reader = std::thread::spawn(move || {
        let mut buf = Vec::new();
        let _ = out_pipe.read_to_end(&mut buf);
        buf
    });
    let err_reader = std::thread::spawn(move || {
        let mut buf = Vec::new();
        let _ = err_pipe.read_to_end(&mut buf);
        buf
    });
    let (status, timed_out) = match child.wait_timeout(timeout)? {
        Some(s) => (s, false),
        None => {
            let _ = child.kill();
            (child.wait()?, true)
        }
    };
    let stdout = out_reader.join().unwrap_or_default();
    let stderr = err_reader.join().unwrap_or_default();
    #[cfg(unix)]
    let signal = std::os::unix::process::ExitStatusExt::signal(&status);
    #[cfg(not(unix))]
    let signal = None;
    Ok(CommandOutput {
        code: status.code(),
        signal,
        timed_out,
        stdout,
        stderr,
    })
}

#[cfg(all(test, unix))]
mod tests {
    use super::*;

    #[test]
    fn captures_and_times_out() {
        let out = run_command(Command::new("sh").args(["-c", "echo hi; echo err >&2; exit 3"]), Duration::from_secs(5)).unwrap();
        assert_eq!((out.code, out.stdout.as_slice(), out.stderr.as_slice()), (Some(3), &b"hi\n"[..], &b"err\n"[..]));
        let slow = run_command(Command::new("sleep").arg("5"), Duration::from_millis(100)).unwrap();
        assert!(slow.timed_out);
    }
}
