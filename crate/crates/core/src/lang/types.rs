use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Integer types of the subset, LP64 layout.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IntTy {
    Char,
    SChar,
    UChar,
    Short,
    UShort,
    Int,
    UInt,
    Long,
    ULong,
    LongLong,
    ULongLong,
}

impl IntTy {
    pub fn bits(self) -> u32 {
        use IntTy::*;
        match self {
            Char | SChar | UChar => 8,
            Short | UShort => 16,
            Int | UInt => 32,
            Long | ULong | LongLong | ULongLong => 64,
        }
    }

    pub fn bytes(self) -> u64 {
        u64::from(self.bits() / 8)
    }

    pub fn signed(self) -> bool {
        use IntTy::*;
        matches!(self, Char | SChar | Short | Int | Long | LongLong)
    }

    fn rank(self) -> u8 {
        use IntTy::*;
        match self {
            Char | SChar | UChar => 1,
            Short | UShort => 2,
            Int | UInt => 3,
            Long | ULong => 4,
            LongLong | ULongLong => 5,
        }
    }

    pub fn to_unsigned(self) -> IntTy {
        use IntTy::*;
        match self {
            Char | SChar | UChar => UChar,
            Short | UShort => UShort,
            Int | UInt => UInt,
            Long | ULong => ULong,
            LongLong | ULongLong => ULongLong,
        }
    }

    /// Integer promotion.
    pub fn promote(self) -> IntTy {
        if self.rank() < IntTy::Int.rank() {
            IntTy::Int
        } else {
            self
        }
    }

    /// Usual arithmetic conversions on two (already integer) operand types.
    pub fn common(a: IntTy, b: IntTy) -> IntTy {
        let (a, b) = (a.promote(), b.promote());
        if a == b {
            return a;
        }
        if a.signed() == b.signed() {
            return if a.rank() >= b.rank() { a } else { b };
        }
        let (s, u) = if a.signed() { (a, b) } else { (b, a) };
        if u.rank() >= s.rank() {
            u
        } else if s.bits() > u.bits() {
            s
        } else {
            s.to_unsigned()
        }
    }

    pub fn min_value(self) -> i128 {
        if self.signed() {
            -(1i128 << (self.bits() - 1))
        } else {
            0
        }
    }

    pub fn max_value(self) -> i128 {
        if self.signed() {
            (1i128 << (self.bits() - 1)) - 1
        } else {
            (1i128 << self.bits()) - 1
        }
    }

    pub fn contains(self, v: i128) -> bool {
        v >= self.min_value() && v <= self.max_value()
    }

    /// Reduces `v` modulo 2^bits into the type's range.
    pub fn wrap(self, v: i128) -> i128 {
        let bits = self.bits();
        let m = 1i128 << bits;
        let mut r = v.rem_euclid(m);
        if self.signed() && r >= m / 2 {
            r -= m;
        }
        r
    }

    pub fn c_name(self) -> &'static str {
        use IntTy::*;
        match self {
            Char => "char",
            SChar => "signed char",
            UChar => "unsigned char",
            Short => "short",
            UShort => "unsigned short",
            Int => "int",
            UInt => "unsigned int",
            Long => "long",
            ULong => "unsigned long",
            LongLong => "long long",
            ULongLong => "unsigned long long",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Type {
    Void,
    Int(IntTy),
    Ptr(Box<Type>),
    Array(Box<Type>, u64),
    Struct(String),
}

impl Type {
    pub fn ptr_to(t: Type) -> Type {
        Type::Ptr(Box::new(t))
    }

    pub fn is_int(&self) -> bool {
        matches!(self, Type::Int(_))
    }

    pub fn is_ptr(&self) -> bool {
        matches!(self, Type::Ptr(_))
    }

    pub fn is_array(&self) -> bool {
        matches!(self, Type::Array(..))
    }

    pub fn is_scalar(&self) -> bool {
        matches!(self, Type::Int(_) | Type::Ptr(_))
    }

    pub fn as_int(&self) -> Option<IntTy> {
        match self {
            Type::Int(i) => Some(*i),
            _ => None,
        }
    }

    /// Pointee of a pointer, element of an array.
    pub fn pointee(&self) -> Option<&Type> {
        match self {
            Type::Ptr(t) | Type::Array(t, _) => Some(t),
            _ => None,
        }
    }

    /// Array-to-pointer decay; other types unchanged.
    pub fn decay(&self) -> Type {
        match self {
            Type::Array(t, _) => Type::Ptr(t.clone()),
            t => t.clone(),
        }
    }
}

impl fmt::Display for Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Type::Void => write!(f, "void"),
            Type::Int(i) => write!(f, "{}", i.c_name()),
            Type::Ptr(t) => write!(f, "{t} *"),
            Type::Array(t, n) => write!(f, "{t} [{n}]"),
            Type::Struct(s) => write!(f, "struct {s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldLayout {
    pub name: String,
    pub ty: Type,
    pub offset: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructLayout {
    pub name: String,
    pub fields: Vec<FieldLayout>,
    pub size: u64,
    pub align: u64,
}

impl StructLayout {
    pub fn field(&self, name: &str) -> Option<&FieldLayout> {
        self.fields.iter().find(|f| f.name == name)
    }
}

/// Struct layouts of one translation unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Layouts {
    pub structs: BTreeMap<String, StructLayout>,
}

impl Layouts {
    pub fn size_of(&self, t: &Type) -> u64 {
        match t {
            Type::Void => 1,
            Type::Int(i) => i.bytes(),
            Type::Ptr(_) => 8,
            Type::Array(e, n) => self.size_of(e) * n,
            Type::Struct(s) => self.structs.get(s).map_or(0, |l| l.size),
        }
    }

    pub fn align_of(&self, t: &Type) -> u64 {
        match t {
            Type::Void => 1,
            Type::Int(i) => i.bytes(),
            Type::Ptr(_) => 8,
            Type::Array(e, _) => self.align_of(e),
            Type::Struct(s) => self.structs.get(s).map_or(1, |l| l.align),
        }
    }

    pub fn add_struct(&mut self, name: &str, fields: &[(String, Type)]) {
        let mut offset: u64 = 0;
        let mut align: u64 = 1;
        let mut out = Vec::with_capacity(fields.len());
        for (fname, ty) in fields {
            let a = self.align_of(ty);
            offset = offset.div_ceil(a) * a;
            out.push(FieldLayout {
                name: fname.clone(),
                ty: ty.clone(),
                offset,
            });
            offset += self.size_of(ty);
            align = align.max(a);
        }
        let size = offset.div_ceil(align).max(1) * align;
        self.structs.insert(
            name.to_string(),
            StructLayout {
                name: name.to_string(),
                fields: out,
                size,
                align,
            },
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conversions() {
        use IntTy::*;
        assert_eq!(IntTy::common(Char, Short), Int);
        assert_eq!(IntTy::common(Int, UInt), UInt);
        assert_eq!(IntTy::common(UInt, Long), Long);
        assert_eq!(IntTy::common(ULong, LongLong), ULongLong);
        assert_eq!(IntTy::common(UChar, UShort), Int);
    }

    #[test]
    fn wrapping() {
        assert_eq!(IntTy::Int.wrap(1i128 << 31), -(1i128 << 31));
        assert_eq!(IntTy::UChar.wrap(-1), 255);
        assert_eq!(IntTy::Char.wrap(200), -56);
    }

    #[test]
    fn struct_layout() {
        let mut l = Layouts::default();
        l.add_struct(
            "s",
            &[
                ("a".into(), Type::Int(IntTy::Char)),
                ("b".into(), Type::Int(IntTy::Int)),
                ("c".into(), Type::Int(IntTy::Short)),
            ],
        );
        let s = &l.structs["s"];
        assert_eq!(s.fields[1].offset, 4);
        assert_eq!(s.size, 12);
    }
}
