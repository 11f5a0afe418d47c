//! Group and element literals.
//!
//! ```text
//! group   := "0" | factor ( "x" factor )*
//! factor  := ("Z" | "z") "/" digits          -- modulus >= 2
//! element := integer | "(" integer ( "," integer )* ")"
//! ```
//!
//! Whitespace is ignored everywhere. Positions in error messages are
//! 1-based character columns.

use crate::error::{Error, Result};
use crate::group::{FinAbGroup, GroupElement};

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        let chars = text
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i + 1, c))
            .collect();
        Cursor {
            chars,
            pos: 0,
            text,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.text.chars().count() + 1, |&(i, _)| i)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.column(),
            message: message.into(),
        }
    }

    fn unexpected(&self, wanted: &str) -> Error {
        match self.peek() {
            Some(c) => self.error(format!("expected {wanted}, found '{c}'")),
            None => self.error(format!("expected {wanted}, found end of input")),
        }
    }

    fn eat(&mut self, accept: impl Fn(char) -> bool) -> bool {
        if self.peek().is_some_and(accept) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<(usize, String)> {
        let start = self.column();
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.pos += 1;
        }
        if s.is_empty() {
            return Err(self.unexpected("a decimal number"));
        }
        Ok((start, s))
    }

    fn integer(&mut self) -> Result<i64> {
        let negative = self.eat(|c| c == '-');
        let (start, s) = self.digits()?;
        let value: i64 = s.parse().map_err(|_| Error::Parse {
            position: start,
            message: format!("integer '{s}' is out of range"),
        })?;
        Ok(if negative { -value } else { value })
    }

    fn at_end(&self) -> bool {
        self.pos == self.chars.len()
    }
}

/// Parses `Z/m1 x Z/m2 x …`. The literal `0` denotes the trivial group.
pub fn parse_group(text: &str) -> Result<FinAbGroup> {
    let mut cur = Cursor::new(text);
    if cur.at_end() {
        return Err(cur.error("empty group literal"));
    }
    if cur.chars.len() == 1 && cur.peek() == Some('0') {
        return Ok(FinAbGroup::trivial());
    }
    let mut moduli = Vec::new();
    loop {
        if !cur.eat(|c| c == 'Z' || c == 'z') {
            return Err(cur.unexpected("'Z'"));
        }
        if !cur.eat(|c| c == '/') {
            return Err(cur.unexpected("'/'"));
        }
        let (start, s) = cur.digits()?;
        let m: u64 = s.parse().map_err(|_| Error::Parse {
            position: start,
            message: format!("modulus '{s}' is out of range"),
        })?;
        if m < 2 {
            return Err(Error::Parse {
                position: start,
                message: format!("modulus '{s}' must be at least 2"),
            });
        }
        moduli.push(m);
        if cur.at_end() {
            break;
        }
        if !cur.eat(|c| c == 'x' || c == 'X' || c == '×') {
            return Err(cur.unexpected("'x' or end of input"));
        }
    }
    FinAbGroup::new(moduli)
}

/// Parses `(a1,…,ak)`, or a bare integer for rank-one groups, reducing each
/// coordinate modulo its factor.
pub fn parse_element(text: &str, group: &FinAbGroup) -> Result<GroupElement> {
    let mut cur = Cursor::new(text);
    if cur.at_end() {
        return Err(cur.error("empty element literal"));
    }
    let mut coords = Vec::new();
    if cur.eat(|c| c == '(') {
        if !cur.eat(|c| c == ')') {
            loop {
                coords.push(cur.integer()?);
                if cur.eat(|c| c == ')') {
                    break;
                }
                if !cur.eat(|c| c == ',') {
                    return Err(cur.unexpected("',' or ')'"));
                }
            }
        }
    } else {
        coords.push(cur.integer()?);
    }
    if !cur.at_end() {
        return Err(cur.unexpected("end of input"));
    }
    if coords.len() != group.rank() {
        return Err(Error::Parse {
            position: 1,
            message: format!(
                "element has {} coordinates but {group} has rank {}",
                coords.len(),
                group.rank()
            ),
        });
    }
    group.element(&coords)
}
