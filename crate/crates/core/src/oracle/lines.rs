use std::borrow::Cow;
use std::path::Path;

use object::{Object, ObjectSection, ObjectSymbol, SectionKind};

use super::OracleError;
use crate::lang::SourceLoc;

/// Address ranges of a binary's line table that belong to one source file.
#[derive(Clone, Debug, Default)]
pub struct LineTable {
    /// `(start, end, loc)`, sorted by start.
    ranges: Vec<(u64, u64, SourceLoc)>,
    /// Link-time address of `main`.
    pub main: Option<u64>,
    /// Link-time span of the executable sections.
    pub text: (u64, u64),
}

fn dwarf_err(e: gimli::Error) -> OracleError {
    OracleError::Debugger(format!("DWARF: {e}"))
}

impl LineTable {
    /// Reads the line program of `binary`, keeping rows whose file name is
    /// `source_name`.
    pub fn load(binary: &Path, source_name: &str) -> Result<LineTable, OracleError> {
        let data = std::fs::read(binary).map_err(|e| OracleError::Debugger(e.to_string()))?;
        let file = object::File::parse(&*data).map_err(|e| OracleError::Debugger(e.to_string()))?;
        let endian = if file.is_little_endian() {
            gimli::RunTimeEndian::Little
        } else {
            gimli::RunTimeEndian::Big
        };
        let load = |id: gimli::SectionId| -> Result<Cow<[u8]>, gimli::Error> {
            Ok(file
                .section_by_name(id.name())
                .and_then(|s| s.uncompressed_data().ok())
                .unwrap_or(Cow::Borrowed(&[])))
        };
        let sections = gimli::DwarfSections::load(load).map_err(dwarf_err)?;
        let dwarf = sections.borrow(|s| gimli::EndianSlice::new(s, endian));
        let mut rows: Vec<(u64, Option<SourceLoc>, bool)> = Vec::new();
        let mut ranges = Vec::new();
        let mut units = dwarf.units();
        while let Some(header) = units.next().map_err(dwarf_err)? {
            let unit = dwarf.unit(header).map_err(dwarf_err)?;
            let Some(program) = unit.line_program.clone() else { continue };
            let mut it = program.rows();
            while let Some((header, row)) = it.next_row().map_err(dwarf_err)? {
                let ours = match row.file(header) {
                    Some(f) => {
                        let name = dwarf.attr_string(&unit, f.path_name()).map_err(dwarf_err)?;
                        let name = String::from_utf8_lossy(name.slice());
                        Path::new(name.as_ref()).file_name().is_some_and(|n| n == source_name)
                    }
                    None => false,
                };
                let loc = match (ours, row.line()) {
                    (true, Some(l)) => {
                        let col = match row.column() {
                            gimli::ColumnType::LeftEdge => 0,
                            gimli::ColumnType::Column(c) => c.get() as u32,
                        };
                        Some(SourceLoc::new(l.get() as u32, col))
                    }
                    _ => None,
                };
                rows.push((row.address(), loc, row.end_sequence()));
                if row.end_sequence() {
                    for w in rows.windows(2) {
                        if let (Some(loc), false) = (w[0].1, w[0].2) {
                            if w[1].0 > w[0].0 {
                                ranges.push((w[0].0, w[1].0, loc));
                            }
                        }
                    }
                    rows.clear();
                }
            }
        }
        ranges.sort_by_key(|r| r.0);
        let main = file.symbols().find(|s| s.name() == Ok("main")).map(|s| s.address());
        let mut text = (u64::MAX, 0);
        for s in file.sections().filter(|s| s.kind() == SectionKind::Text) {
            text.0 = text.0.min(s.address());
            text.1 = text.1.max(s.address() + s.size());
        }
        Ok(LineTable { ranges, main, text })
    }

    pub fn lookup(&self, addr: u64) -> Option<SourceLoc> {
        let i = self.ranges.partition_point(|r| r.0 <= addr);
        let (start, end, loc) = *self.ranges.get(i.checked_sub(1)?)?;
        (start <= addr && addr < end).then_some(loc)
    }

    pub fn is_empty(&self) -> bool {
        self.ranges.is_empty()
    }
}
