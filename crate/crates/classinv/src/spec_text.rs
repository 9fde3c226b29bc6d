//! Text form of module specs: `2*[3,1] + S2(V) + L3(V) + V`.

use std::fmt::Write as _;

use classinv_core::{ModuleSpec, Partition};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("spec error at position {position}: {message}")]
pub struct SpecParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.pos).copied()
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, SpecParseError> {
        Err(SpecParseError { position: self.pos, message: message.into() })
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, literal: &str) -> Result<(), SpecParseError> {
        self.skip_ws();
        if self.text[self.pos..].starts_with(literal) {
            self.pos += literal.len();
            Ok(())
        } else {
            self.fail(format!("expected `{literal}`"))
        }
    }

    fn int(&mut self) -> Result<Option<u32>, SpecParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        match self.text[start..self.pos].parse() {
            Ok(v) => Ok(Some(v)),
            Err(_) => Err(SpecParseError { position: start, message: "integer out of range".into() }),
        }
    }

    fn require_int(&mut self) -> Result<u32, SpecParseError> {
        match self.int()? {
            Some(v) => Ok(v),
            None => self.fail("expected an integer"),
        }
    }
}

/// Parses `term ('+' term)*` with `term := [INT '*'] atom` and
/// `atom := 'V' | 'S' INT '(V)' | 'L' INT '(V)' | '[' INT (',' INT)* ']'`.
/// The empty string is the zero module.
pub fn parse_module_spec(text: &str, n: usize) -> Result<ModuleSpec, SpecParseError> {
    let mut cur = Cursor { text, pos: 0 };
    let mut components = Vec::new();
    cur.skip_ws();
    if cur.peek().is_none() {
        return Ok(ModuleSpec::zero(n));
    }
    loop {
        let (lambda, k) = term(&mut cur, n)?;
        components.push((lambda, k));
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some(b'+') => cur.pos += 1,
            Some(_) => return cur.fail("expected `+` or end of input"),
        }
    }
    ModuleSpec::new(n, components).map_err(|e| SpecParseError { position: 0, message: e.to_string() })
}

fn term(cur: &mut Cursor<'_>, n: usize) -> Result<(Partition, u32), SpecParseError> {
    cur.skip_ws();
    let start = cur.pos;
    let k = match cur.int()? {
        Some(k) => {
            if !cur.eat(b'*') {
                return cur.fail("expected `*` after a multiplicity");
            }
            k
        }
        None => 1,
    };
    cur.skip_ws();
    let atom_start = cur.pos;
    let lambda = match cur.peek() {
        Some(b'V') => {
            cur.pos += 1;
            Partition::row(1)
        }
        Some(b'S') => {
            cur.pos += 1;
            let m = cur.require_int()?;
            cur.expect("(V)")?;
            Partition::row(m)
        }
        Some(b'L') => {
            cur.pos += 1;
            let m = cur.require_int()?;
            cur.expect("(V)")?;
            Partition::column(m as usize)
        }
        Some(b'[') => {
            cur.pos += 1;
            let mut parts = Vec::new();
            if !cur.eat(b']') {
                loop {
                    parts.push(cur.require_int()?);
                    if cur.eat(b']') {
                        break;
                    }
                    if !cur.eat(b',') {
                        return cur.fail("expected `,` or `]`");
                    }
                }
            }
            Partition::new(parts)
                .map_err(|e| SpecParseError { position: atom_start, message: e.to_string() })?
        }
        Some(_) => return cur.fail("expected `V`, `S<m>(V)`, `L<m>(V)` or `[...]`"),
        None => return cur.fail("unexpected end of input"),
    };
    if lambda.len() > n {
        return Err(SpecParseError {
            position: if k == 1 { atom_start } else { start },
            message: format!("weight {lambda} has {} parts, more than n = {n}", lambda.len()),
        });
    }
    Ok((lambda, k))
}

/// Inverse of [`parse_module_spec`] up to normalization.
pub fn format_module_spec(spec: &ModuleSpec) -> String {
    let mut out = String::new();
    for (i, (lambda, k)) in spec.components().iter().enumerate() {
        if i > 0 {
            out.push_str(" + ");
        }
        if *k != 1 {
            let _ = write!(out, "{k}*");
        }
        out.push_str(&atom_text(lambda));
    }
    out
}

fn atom_text(lambda: &Partition) -> String {
    let parts = lambda.parts();
    if parts.len() == 1 && parts[0] == 1 {
        "V".into()
    } else if parts.len() <= 1 {
        format!("S{}(V)", lambda.size())
    } else if parts.iter().all(|&x| x == 1) {
        format!("L{}(V)", parts.len())
    } else {
        lambda.to_string()
    }
}
