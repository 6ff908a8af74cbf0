use crate::lang::IntTy;

/// One formatted argument as the VM sees it.
#[derive(Clone, Debug)]
pub enum Arg {
    Int(i128),
    Str(Vec<u8>),
}

/// Conversion character plus length modifier for the argument at `index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Spec {
    pub conv: u8,
    pub len: IntTy,
}

/// Lists the conversions that consume an argument, in order.
pub fn specs(fmt: &[u8]) -> Result<Vec<Spec>, String> {
    let mut out = Vec::new();
    walk(fmt, &mut |piece| {
        if let Piece::Conv { spec, .. } = piece {
            out.push(spec);
        }
    })?;
    Ok(out)
}

enum Piece<'a> {
    Lit(&'a [u8]),
    Conv {
        spec: Spec,
        flags: &'a [u8],
        width: Option<usize>,
        prec: Option<usize>,
    },
}

fn walk<'a>(fmt: &'a [u8], f: &mut impl FnMut(Piece<'a>)) -> Result<(), String> {
    let mut i = 0;
    while i < fmt.len() {
        if fmt[i] != b'%' {
            let start = i;
            while i < fmt.len() && fmt[i] != b'%' {
                i += 1;
            }
            f(Piece::Lit(&fmt[start..i]));
            continue;
        }
        i += 1;
        if fmt.get(i) == Some(&b'%') {
            f(Piece::Lit(b"%"));
            i += 1;
            continue;
        }
        let fs = i;
        while i < fmt.len() && b"-+ 0#".contains(&fmt[i]) {
            i += 1;
        }
        let flags = &fmt[fs..i];
        let num = |i: &mut usize| -> Option<usize> {
            let s = *i;
            while *i < fmt.len() && fmt[*i].is_ascii_digit() {
                *i += 1;
            }
            (s < *i).then(|| std::str::from_utf8(&fmt[s..*i]).ok()?.parse().ok())?
        };
        let width = num(&mut i);
        let prec = if fmt.get(i) == Some(&b'.') {
            i += 1;
            Some(num(&mut i).unwrap_or(0))
        } else {
            None
        };
        let mut mods = String::new();
        while i < fmt.len() && b"hlzjt".contains(&fmt[i]) {
            mods.push(fmt[i] as char);
            i += 1;
        }
        let Some(&conv) = fmt.get(i) else {
            return Err("incomplete conversion".into());
        };
        i += 1;
        let unsigned = matches!(conv, b'u' | b'x' | b'X' | b'o');
        let len = match (mods.as_str(), unsigned) {
            ("", false) => IntTy::Int,
            ("", true) => IntTy::UInt,
            ("hh", false) => IntTy::SChar,
            ("hh", true) => IntTy::UChar,
            ("h", false) => IntTy::Short,
            ("h", true) => IntTy::UShort,
            ("l" | "z" | "j" | "t", false) => IntTy::Long,
            ("l" | "z" | "j" | "t", true) => IntTy::ULong,
            ("ll", false) => IntTy::LongLong,
            ("ll", true) => IntTy::ULongLong,
            (m, _) => return Err(format!("unsupported length modifier `{m}`")),
        };
        if !matches!(conv, b'd' | b'i' | b'u' | b'x' | b'X' | b'o' | b'c' | b's') {
            return Err(format!("unsupported conversion `%{}`", conv as char));
        }
        f(Piece::Conv {
            spec: Spec { conv, len },
            flags,
            width,
            prec,
        });
    }
    Ok(())
}

/// Formats like C `printf` for the supported conversions.
pub fn format(fmt: &[u8], args: &[Arg]) -> Result<Vec<u8>, String> {
    let mut out = Vec::new();
    let mut next = 0;
    let mut failure = None;
    walk(fmt, &mut |piece| match piece {
        Piece::Lit(s) => out.extend_from_slice(s),
        Piece::Conv {
            spec,
            flags,
            width,
            prec,
        } => {
            let Some(arg) = args.get(next) else {
                failure = Some("too few printf arguments".to_string());
                return;
            };
            next += 1;
            let body = match (spec.conv, arg) {
                (b's', Arg::Str(s)) => {
                    let n = prec.unwrap_or(s.len()).min(s.len());
                    Body::Plain(s[..n].to_vec())
                }
                (b'c', Arg::Int(v)) => Body::Plain(vec![IntTy::UChar.wrap(*v) as u8]),
                (_, Arg::Int(v)) => number(spec, *v, flags, prec),
                _ => {
                    failure = Some("printf argument does not match its conversion".into());
                    return;
                }
            };
            pad(&mut out, body, flags, width);
        }
    })?;
    match failure {
        Some(f) => Err(f),
        None => Ok(out),
    }
}

enum Body {
    Plain(Vec<u8>),
    /// Zero padding goes between sign and digits.
    ZeroPad(&'static str, String),
}

fn number(spec: Spec, v: i128, flags: &[u8], prec: Option<usize>) -> Body {
    let v = spec.len.wrap(v);
    let (neg, mag) = (v < 0, v.unsigned_abs());
    let mut digits = match spec.conv {
        b'x' => format!("{mag:x}"),
        b'X' => format!("{mag:X}"),
        b'o' => format!("{mag:o}"),
        _ => mag.to_string(),
    };
    if let Some(p) = prec {
        if p == 0 && mag == 0 {
            digits.clear();
        }
        while digits.len() < p {
            digits.insert(0, '0');
        }
    }
    if flags.contains(&b'#') && mag != 0 {
        match spec.conv {
            b'x' => digits.insert_str(0, "0x"),
            b'X' => digits.insert_str(0, "0X"),
            b'o' if !digits.starts_with('0') => digits.insert(0, '0'),
            _ => {}
        }
    }
    let sign = if neg {
        "-"
    } else if matches!(spec.conv, b'd' | b'i') && flags.contains(&b'+') {
        "+"
    } else if matches!(spec.conv, b'd' | b'i') && flags.contains(&b' ') {
        " "
    } else {
        ""
    };
    let zero = flags.contains(&b'0') && !flags.contains(&b'-') && prec.is_none();
    if zero {
        Body::ZeroPad(sign, digits)
    } else {
        Body::Plain(format!("{sign}{digits}").into_bytes())
    }
}

fn pad(out: &mut Vec<u8>, body: Body, flags: &[u8], width: Option<usize>) {
    let w = width.unwrap_or(0);
    let body = match body {
        Body::ZeroPad(sign, digits) => {
            out.extend_from_slice(sign.as_bytes());
            let len = sign.len() + digits.len();
            out.extend(std::iter::repeat_n(b'0', w.saturating_sub(len)));
            out.extend_from_slice(digits.as_bytes());
            return;
        }
        Body::Plain(b) => b,
    };
    let fill = w.saturating_sub(body.len());
    if flags.contains(&b'-') {
        out.extend_from_slice(&body);
        out.extend(std::iter::repeat_n(b' ', fill));
    } else {
        out.extend(std::iter::repeat_n(b' ', fill));
        out.extend_from_slice(&body);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(fmt: &str, args: &[i128]) -> String {
        let args: Vec<Arg> = args.iter().map(|v| Arg::Int(*v)).collect();
        String::from_utf8(format(fmt.as_bytes(), &args).unwrap()).unwrap()
    }

    // Expected strings are what glibc prints for the same calls.
    #[test]
    fn matches_c_formatting() {
        assert_eq!(f("%d %i|%5d|%-5d|%05d", &[-3, 4, 42, 42, -42]), "-3 4|   42|42   |-0042");
        assert_eq!(f("%u %x %X %o", &[-1, 255, 255, 8]), "4294967295 ff FF 10");
        assert_eq!(f("%lu %ld %lld", &[-1, -1, i128::from(i64::MIN)]), "18446744073709551615 -1 -9223372036854775808");
        assert_eq!(f("%hhd %hu %c%%", &[300, 70000, 65]), "44 4464 A%");
        assert_eq!(f("%#x %+d % d %.3d", &[26, 5, 5, 7]), "0x1a +5  5 007");
        assert_eq!(f("[%c]", &[0]), "[\0]");
    }

    #[test]
    fn rejects_unsupported() {
        assert!(format(b"%f", &[Arg::Int(1)]).is_err());
        assert!(format(b"%d", &[]).is_err());
        assert_eq!(specs(b"a %d %s %%").unwrap().len(), 2);
    }
}
