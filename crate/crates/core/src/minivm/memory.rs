use std::collections::BTreeMap;

/// Addresses below this are treated as null dereferences.
pub const NULL_PAGE: u64 = 0x1000;
const FIRST_BASE: u64 = 0x10000;
const GAP: u64 = 64;

pub type ObjId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObjState {
    Live,
    Freed,
    /// Out of scope; storage kept so stale pointers stay classifiable.
    Dead,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObjKind {
    Global,
    Stack,
    Heap,
}

#[derive(Clone, Debug)]
pub struct Obj {
    pub base: u64,
    pub size: u64,
    pub bytes: Vec<u8>,
    pub init: Vec<bool>,
    /// Provenance of pointers stored in this object, keyed by offset.
    pub ptrs: BTreeMap<u64, ObjId>,
    pub state: ObjState,
    pub kind: ObjKind,
}

impl Obj {
    pub fn contains(&self, addr: u64, len: u64) -> bool {
        addr >= self.base && addr.saturating_add(len) <= self.base + self.size
    }
}

/// Flat, never-reused address space of objects.
#[derive(Debug, Default)]
pub struct Memory {
    pub objs: Vec<Obj>,
    next: u64,
}

impl Memory {
    pub fn new() -> Self {
        Memory {
            objs: Vec::new(),
            next: FIRST_BASE,
        }
    }

    pub fn alloc(&mut self, size: u64, kind: ObjKind, initialized: bool) -> ObjId {
        let base = self.next;
        self.next = (base + size.max(1) + GAP + 15) & !15;
        let n = size as usize;
        self.objs.push(Obj {
            base,
            size,
            bytes: vec![0; n],
            init: vec![initialized; n],
            ptrs: BTreeMap::new(),
            state: ObjState::Live,
            kind,
        });
        self.objs.len() - 1
    }

    /// The object whose storage (live or not) covers `addr`.
    pub fn find(&self, addr: u64) -> Option<ObjId> {
        let i = self.objs.partition_point(|o| o.base <= addr);
        if i == 0 {
            return None;
        }
        let o = &self.objs[i - 1];
        (addr < o.base + o.size.max(1)).then_some(i - 1)
    }

    /// Reads `len` bytes starting at `addr`, resolving each byte through
    /// whatever object covers it; uncovered bytes read as zero.
    pub fn read_loose(&self, addr: u64, len: u64) -> (Vec<u8>, bool) {
        let mut out = Vec::with_capacity(len as usize);
        let mut all_init = true;
        for k in 0..len {
            let a = addr.wrapping_add(k);
            match self.find(a) {
                Some(id) if a - self.objs[id].base < self.objs[id].size => {
                    let o = &self.objs[id];
                    let off = (a - o.base) as usize;
                    out.push(o.bytes[off]);
                    all_init &= o.init[off];
                }
                _ => out.push(0),
            }
        }
        (out, all_init)
    }

    pub fn write_loose(&mut self, addr: u64, data: &[u8]) {
        for (k, b) in data.iter().enumerate() {
            let a = addr.wrapping_add(k as u64);
            if let Some(id) = self.find(a) {
                let o = &mut self.objs[id];
                if a - o.base < o.size {
                    let off = (a - o.base) as usize;
                    o.bytes[off] = *b;
                    o.init[off] = true;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn objects_are_separated_and_found() {
        let mut m = Memory::new();
        let a = m.alloc(8, ObjKind::Stack, false);
        let b = m.alloc(4, ObjKind::Heap, false);
        let (ba, bb) = (m.objs[a].base, m.objs[b].base);
        assert!(bb >= ba + 8 + GAP);
        assert_eq!(m.find(ba + 7), Some(a));
        assert_eq!(m.find(ba + 8), None);
        assert_eq!(m.find(bb), Some(b));
        assert_eq!(m.find(NULL_PAGE), None);
        m.write_loose(ba + 6, &[1, 2, 3, 4]);
        assert_eq!(m.objs[a].bytes[6..], [1, 2]);
        assert_eq!(m.read_loose(ba + 6, 4).0, vec![1, 2, 0, 0]);
    }
}
