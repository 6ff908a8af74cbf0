use std::collections::HashSet;
use std::fs::{self, File, OpenOptions};
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use super::{CampaignReport, DedupKey, Finding, ProgramRecord};
use crate::matching::UbKind;
use crate::synth::UbProgram;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedRecord {
    pub seed_id: String,
    pub programs: usize,
    pub sites_skipped: usize,
    pub error: Option<String>,
}

/// One line of the progress log.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Entry {
    Program(ProgramRecord),
    /// Written after all of a seed's programs.
    Seed(SeedRecord),
}

/// On-disk state of a campaign:
///
/// ```text
/// <root>/config.toml        configuration the campaign was started with
/// <root>/progress.jsonl     one Entry per line
/// <root>/findings.jsonl     deduplicated findings, one per line
/// <root>/programs/<hash>.c  program store, with a .meta sidecar
/// <root>/reduced/<id>.c     reducer output
/// <root>/work/              generation layout and trace cache
/// ```
pub struct Store {
    pub root: PathBuf,
    progress: File,
    findings: File,
    entries: Vec<Entry>,
    found: Vec<Finding>,
    keys: HashSet<DedupKey>,
    done_seeds: HashSet<String>,
    logged: HashSet<(String, String)>,
}

/// Drops a torn final line left by an interrupted write.
fn repair(path: &Path) -> io::Result<()> {
    let Ok(bytes) = fs::read(path) else { return Ok(()) };
    if bytes.is_empty() || bytes.ends_with(b"\n") {
        return Ok(());
    }
    let keep = bytes.iter().rposition(|b| *b == b'\n').map_or(0, |i| i + 1);
    OpenOptions::new().write(true).open(path)?.set_len(keep as u64)
}

fn read_lines<T: DeserializeOwned>(path: &Path) -> io::Result<Vec<T>> {
    let Ok(text) = fs::read_to_string(path) else { return Ok(Vec::new()) };
    let complete = match text.rfind('\n') {
        Some(i) => &text[..=i],
        None => "",
    };
    complete
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e)))
        .collect()
}

fn append_line<T: Serialize>(f: &mut File, v: &T) -> io::Result<()> {
    let mut line = serde_json::to_string(v).map_err(io::Error::other)?;
    line.push('\n');
    f.write_all(line.as_bytes())?;
    f.flush()
}

/// Writes through a temporary name so readers never see half a file.
fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let dir = path.parent().unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.persist(path).map(|_| ()).map_err(|e| e.error)
}

impl Store {
    /// Opens or creates the store under `root`, loading what a previous run
    /// left behind.
    pub fn open(root: &Path) -> io::Result<Store> {
        fs::create_dir_all(root.join("programs"))?;
        let progress_path = root.join("progress.jsonl");
        let findings_path = root.join("findings.jsonl");
        repair(&progress_path)?;
        repair(&findings_path)?;
        let entries: Vec<Entry> = read_lines(&progress_path)?;
        let found: Vec<Finding> = read_lines(&findings_path)?;
        let open = |p: &Path| OpenOptions::new().create(true).append(true).open(p);
        let mut s = Store {
            root: root.to_path_buf(),
            progress: open(&progress_path)?,
            findings: open(&findings_path)?,
            entries: Vec::new(),
            found: Vec::new(),
            keys: HashSet::new(),
            done_seeds: HashSet::new(),
            logged: HashSet::new(),
        };
        for e in entries {
            s.note(&e);
            s.entries.push(e);
        }
        for f in found {
            s.keys.insert(f.dedup_key());
            s.found.push(f);
        }
        Ok(s)
    }

    fn note(&mut self, e: &Entry) {
        match e {
            Entry::Seed(r) => {
                self.done_seeds.insert(r.seed_id.clone());
            }
            Entry::Program(p) => {
                self.logged.insert((p.seed_id.clone(), p.program_hash.clone()));
            }
        }
    }

    pub fn seed_done(&self, seed_id: &str) -> bool {
        self.done_seeds.contains(seed_id)
    }

    pub fn program_logged(&self, seed_id: &str, hash: &str) -> bool {
        self.logged.contains(&(seed_id.to_string(), hash.to_string()))
    }

    pub fn log(&mut self, e: Entry) -> io::Result<()> {
        if let Entry::Program(p) = &e {
            if self.program_logged(&p.seed_id, &p.program_hash) {
                return Ok(());
            }
        }
        append_line(&mut self.progress, &e)?;
        self.note(&e);
        self.entries.push(e);
        Ok(())
    }

    /// Persists `f` unless a finding with the same key exists. Returns
    /// whether it was new.
    pub fn add_finding(&mut self, f: Finding) -> io::Result<bool> {
        if !self.keys.insert(f.dedup_key()) {
            return Ok(false);
        }
        append_line(&mut self.findings, &f)?;
        self.found.push(f);
        Ok(true)
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn findings(&self) -> &[Finding] {
        &self.found
    }

    pub fn program_path(&self, hash: &str) -> PathBuf {
        self.root.join("programs").join(format!("{hash}.c"))
    }

    /// Adds a program to the content-addressed store.
    pub fn put_program(root: &Path, p: &UbProgram) -> io::Result<(String, PathBuf)> {
        let hash = crate::toolchain::digest(p.source.as_bytes());
        let path = root.join("programs").join(format!("{hash}.c"));
        if !path.exists() {
            write_atomic(&path.with_extension("meta"), p.to_sidecar().as_bytes())?;
            write_atomic(&path, p.source.as_bytes())?;
        }
        Ok((hash, path))
    }

    pub fn get_program(&self, hash: &str) -> io::Result<UbProgram> {
        let path = self.program_path(hash);
        let source = fs::read_to_string(&path)?;
        let meta = fs::read_to_string(path.with_extension("meta"))?;
        UbProgram::from_sidecar(source, &meta).map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e.to_string()))
    }

    pub fn put_reduced(&self, finding_id: &str, source: &str) -> io::Result<PathBuf> {
        let path = self.root.join("reduced").join(format!("{finding_id}.c"));
        write_atomic(&path, source.as_bytes())?;
        Ok(path)
    }

    pub fn report(&self, campaign_seed: u64) -> CampaignReport {
        CampaignReport::fold(campaign_seed, &self.entries, &self.found)
    }
}

/// Writes programs as `<work>/<seed-id>/gen/<kind>/<n>.c` with a `.meta`
/// sidecar next to each.
pub fn emit_generation(work: &Path, seed_id: &str, kind: UbKind, programs: &[UbProgram]) -> io::Result<Vec<PathBuf>> {
    let dir = work.join(seed_id).join("gen").join(kind.name());
    programs
        .iter()
        .enumerate()
        .map(|(n, p)| {
            let path = dir.join(format!("{n}.c"));
            write_atomic(&path.with_extension("meta"), p.to_sidecar().as_bytes())?;
            write_atomic(&path, p.source.as_bytes())?;
            Ok(path)
        })
        .collect()
}

/// Report of the campaign stored in `dir`.
pub fn report(dir: &Path) -> Result<CampaignReport, super::HarnessError> {
    if !dir.join("progress.jsonl").exists() {
        return Err(super::HarnessError::Setup(format!("{} holds no campaign", dir.display())));
    }
    let cfg_text = fs::read_to_string(dir.join("config.toml")).unwrap_or_default();
    let campaign_seed = toml::from_str::<super::CampaignConfig>(&cfg_text).map_or(0, |c| c.campaign_seed);
    let entries: Vec<Entry> = read_lines(&dir.join("progress.jsonl"))?;
    let findings: Vec<Finding> = read_lines(&dir.join("findings.jsonl"))?;
    Ok(CampaignReport::fold(campaign_seed, &entries, &findings))
}
