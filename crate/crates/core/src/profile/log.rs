//! Binary profile log: `tag (1) | probe (4, LE) | payload (8 or 16, LE)`.

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[repr(u8)]
pub enum Tag {
    /// Payload: base address, size.
    Range = 1,
    /// Payload: integer operand, sign-extended to 64 bits.
    Value = 2,
    /// Payload: pointer operand.
    Access = 3,
    /// Payload: address passed to `free`.
    Free = 4,
    /// Statement entry; payload unused.
    Scope = 5,
}

impl Tag {
    pub fn from_byte(b: u8) -> Option<Tag> {
        Some(match b {
            1 => Tag::Range,
            2 => Tag::Value,
            3 => Tag::Access,
            4 => Tag::Free,
            5 => Tag::Scope,
            _ => return None,
        })
    }

    pub fn payload_len(self) -> usize {
        match self {
            Tag::Range => 16,
            _ => 8,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Record {
    pub tag: Tag,
    pub probe: u32,
    pub a: u64,
    /// Second payload word; only meaningful for `Range`.
    pub b: u64,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LogError {
    #[error("bad tag {tag} at byte {pos}")]
    BadTag { tag: u8, pos: usize },
    #[error("truncated record at byte {0}")]
    Truncated(usize),
}

pub fn encode(out: &mut Vec<u8>, r: &Record) {
    out.push(r.tag as u8);
    out.extend_from_slice(&r.probe.to_le_bytes());
    out.extend_from_slice(&r.a.to_le_bytes());
    if r.tag == Tag::Range {
        out.extend_from_slice(&r.b.to_le_bytes());
    }
}

pub fn decode(bytes: &[u8]) -> Result<Vec<Record>, LogError> {
    let mut out = Vec::new();
    let mut i = 0;
    let word = |at: usize| u64::from_le_bytes(bytes[at..at + 8].try_into().expect("8 bytes"));
    while i < bytes.len() {
        let tag = Tag::from_byte(bytes[i]).ok_or(LogError::BadTag { tag: bytes[i], pos: i })?;
        if i + 5 + tag.payload_len() > bytes.len() {
            return Err(LogError::Truncated(i));
        }
        let probe = u32::from_le_bytes(bytes[i + 1..i + 5].try_into().expect("4 bytes"));
        let a = word(i + 5);
        let b = if tag == Tag::Range { word(i + 13) } else { 0 };
        out.push(Record { tag, probe, a, b });
        i += 5 + tag.payload_len();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_round_trip() {
        let recs = vec![
            Record { tag: Tag::Range, probe: 7, a: 0x1000, b: 8 },
            Record { tag: Tag::Value, probe: 1, a: (-3i64) as u64, b: 0 },
            Record { tag: Tag::Scope, probe: 2, a: 0, b: 0 },
        ];
        let mut buf = Vec::new();
        recs.iter().for_each(|r| encode(&mut buf, r));
        assert_eq!(buf.len(), 21 + 13 + 13);
        assert_eq!(decode(&buf).unwrap(), recs);
        assert_eq!(decode(&buf[..buf.len() - 1]), Err(LogError::Truncated(34)));
    }
}
