use super::ast::SourceLoc;
use super::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int { value: u64, text: String },
    Char { value: i64, text: String },
    Str(String),
    Punct(&'static str),
    Directive(String),
    Eof,
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub loc: SourceLoc,
}

const PUNCTS: &[&str] = &[
    "<<=", ">>=", "...", "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=", "&&", "||", "+=",
    "-=", "*=", "/=", "%=", "&=", "^=", "|=", "(", ")", "[", "]", "{", "}", ";", ",", ".", "?",
    ":", "+", "-", "*", "/", "%", "&", "|", "^", "!", "~", "<", ">", "=",
];

pub fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let mut line = 1u32;
    let mut col = 1u32;
    let mut at_line_start = true;

    macro_rules! bump {
        () => {{
            if chars[i] == '\n' {
                line += 1;
                col = 1;
                at_line_start = true;
            } else {
                col += 1;
            }
            i += 1;
        }};
    }

    while i < chars.len() {
        let c = chars[i];
        if c == '\n' || c.is_whitespace() {
            bump!();
            continue;
        }
        if c == '/' && chars.get(i + 1) == Some(&'/') {
            while i < chars.len() && chars[i] != '\n' {
                bump!();
            }
            continue;
        }
        if c == '/' && chars.get(i + 1) == Some(&'*') {
            let (sl, sc) = (line, col);
            bump!();
            bump!();
            loop {
                if i + 1 >= chars.len() {
                    return Err(ParseError::new(sl, sc, "unterminated comment"));
                }
                if chars[i] == '*' && chars[i + 1] == '/' {
                    bump!();
                    bump!();
                    break;
                }
                bump!();
            }
            continue;
        }
        let loc = SourceLoc::new(line, col);
        if c == '#' {
            if !at_line_start {
                return Err(ParseError::new(line, col, "stray '#'"));
            }
            let start = i;
            while i < chars.len() && chars[i] != '\n' {
                bump!();
            }
            let text: String = chars[start..i].iter().collect::<String>().trim_end().to_string();
            let body = text[1..].trim_start();
            if !body.starts_with("include") {
                return Err(ParseError::new(
                    loc.line,
                    loc.offset,
                    format!("unsupported preprocessor directive `{text}`"),
                ));
            }
            out.push(Token {
                tok: Tok::Directive(text),
                loc,
            });
            continue;
        }
        at_line_start = false;
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                bump!();
            }
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                loc,
            });
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric()) {
                bump!();
            }
            let text: String = chars[start..i].iter().collect();
            let value = parse_int_literal(&text)
                .ok_or_else(|| ParseError::new(loc.line, loc.offset, format!("bad integer literal `{text}`")))?;
            out.push(Token {
                tok: Tok::Int { value, text },
                loc,
            });
            continue;
        }
        if c == '\'' {
            let start = i;
            bump!();
            while i < chars.len() && chars[i] != '\'' {
                if chars[i] == '\\' {
                    bump!();
                }
                if i < chars.len() {
                    bump!();
                }
            }
            if i >= chars.len() {
                return Err(ParseError::new(loc.line, loc.offset, "unterminated character literal"));
            }
            bump!();
            let text: String = chars[start..i].iter().collect();
            let body = &text[1..text.len() - 1];
            let bytes = unescape(body)
                .ok_or_else(|| ParseError::new(loc.line, loc.offset, "bad character literal"))?;
            if bytes.len() != 1 {
                return Err(ParseError::new(loc.line, loc.offset, "multi-character literal"));
            }
            out.push(Token {
                tok: Tok::Char {
                    value: i64::from(bytes[0] as i8),
                    text,
                },
                loc,
            });
            continue;
        }
        if c == '"' {
            bump!();
            let start = i;
            while i < chars.len() && chars[i] != '"' {
                if chars[i] == '\n' {
                    return Err(ParseError::new(loc.line, loc.offset, "newline in string literal"));
                }
                if chars[i] == '\\' {
                    bump!();
                }
                if i < chars.len() {
                    bump!();
                }
            }
            if i >= chars.len() {
                return Err(ParseError::new(loc.line, loc.offset, "unterminated string literal"));
            }
            let body: String = chars[start..i].iter().collect();
            bump!();
            if unescape(&body).is_none() {
                return Err(ParseError::new(loc.line, loc.offset, "bad escape in string literal"));
            }
            out.push(Token {
                tok: Tok::Str(body),
                loc,
            });
            continue;
        }
        let rest: String = chars[i..chars.len().min(i + 3)].iter().collect();
        match PUNCTS.iter().find(|p| rest.starts_with(**p)) {
            Some(p) => {
                for _ in 0..p.len() {
                    bump!();
                }
                out.push(Token {
                    tok: Tok::Punct(p),
                    loc,
                });
            }
            None => {
                return Err(ParseError::new(loc.line, loc.offset, format!("unexpected character `{c}`")));
            }
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        loc: SourceLoc::new(line, col),
    });
    Ok(out)
}

fn parse_int_literal(text: &str) -> Option<u64> {
    let lower = text.to_ascii_lowercase();
    let digits = lower.trim_end_matches(['u', 'l']);
    let suffix = &lower[digits.len()..];
    if !matches!(suffix, "" | "u" | "l" | "ul" | "lu" | "ll" | "ull" | "llu") {
        return None;
    }
    if let Some(hex) = digits.strip_prefix("0x") {
        u64::from_str_radix(hex, 16).ok()
    } else if digits.len() > 1 && digits.starts_with('0') {
        u64::from_str_radix(&digits[1..], 8).ok()
    } else {
        digits.parse().ok()
    }
}

/// Decodes C escapes in a literal body.
pub fn unescape(body: &str) -> Option<Vec<u8>> {
    let mut out = Vec::new();
    let b = body.as_bytes();
    let mut i = 0;
    while i < b.len() {
        if b[i] != b'\\' {
            out.push(b[i]);
            i += 1;
            continue;
        }
        i += 1;
        let c = *b.get(i)?;
        i += 1;
        match c {
            b'n' => out.push(b'\n'),
            b't' => out.push(b'\t'),
            b'r' => out.push(b'\r'),
            b'\\' => out.push(b'\\'),
            b'\'' => out.push(b'\''),
            b'"' => out.push(b'"'),
            b'?' => out.push(b'?'),
            b'a' => out.push(7),
            b'b' => out.push(8),
            b'f' => out.push(12),
            b'v' => out.push(11),
            b'x' => {
                let start = i;
                while i < b.len() && b[i].is_ascii_hexdigit() {
                    i += 1;
                }
                let s = std::str::from_utf8(&b[start..i]).ok()?;
                out.push(u8::from_str_radix(s, 16).ok()?);
            }
            b'0'..=b'7' => {
                let start = i - 1;
                while i < b.len() && i - start < 3 && (b'0'..=b'7').contains(&b[i]) {
                    i += 1;
                }
                let s = std::str::from_utf8(&b[start..i]).ok()?;
                out.push(u8::from_str_radix(s, 8).ok()?);
            }
            _ => return None,
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals_and_columns() {
        let toks = tokenize("int x = 0x1fUL;\n  y <<= 'a';").unwrap();
        assert_eq!(toks[3].tok, Tok::Int { value: 31, text: "0x1fUL".into() });
        assert_eq!(toks[5].loc, SourceLoc::new(2, 3));
        assert_eq!(toks[6].tok, Tok::Punct("<<="));
        assert!(matches!(toks[7].tok, Tok::Char { value: 97, .. }));
    }

    #[test]
    fn comments_skipped_and_includes_kept() {
        let toks = tokenize("#include <stdio.h>\n/* c */ int // x\n a;").unwrap();
        assert_eq!(toks[0].tok, Tok::Directive("#include <stdio.h>".into()));
        assert_eq!(toks[1].loc, SourceLoc::new(2, 9));
        assert!(tokenize("#define X 1\n").is_err());
    }
}
