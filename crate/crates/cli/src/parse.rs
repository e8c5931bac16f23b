//! Input grammars: Seifert expressions in text or JSON form, and `γ` lists.
//!
//! ```text
//! expr   := "{" int ";" int ";" [ pair ("," pair)* ] "}"
//! pair   := "(" int "," int ")"
//! gammas := rational ("," rational)*
//! rational := int [ "/" int ]
//! ```
//!
//! Whitespace is allowed between tokens. A JSON object
//! `{"b": int, "g": int, "fibers": [[a, b], …]}` is accepted wherever an
//! expression is.

use std::fmt;
use std::str::FromStr;

use serde_json::Value;
use sfcontact::seifert::SeifertData;
use sfcontact::{BigInt, Rational};

/// Syntax error at a 1-based character column of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let before = &self.src[..self.pos];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().unwrap_or("").chars().count() + 1;
        ParseError { line, column, message: message.into() }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn eat(&mut self, want: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(want) {
            self.pos += want.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        if self.eat(want) {
            Ok(())
        } else {
            Err(self.error(match self.peek() {
                Some(c) => format!("expected '{want}', found '{c}'"),
                None => format!("expected '{want}', found end of input"),
            }))
        }
    }

    fn int(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.peek(), Some('-' | '+')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return Err(self.error(match self.peek() {
                Some(c) => format!("expected an integer, found '{c}'"),
                None => "expected an integer, found end of input".to_string(),
            }));
        }
        Ok(BigInt::from_str(&self.src[start..self.pos]).expect("validated digits"))
    }

    fn end(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.error(format!("unexpected '{c}' after the end of the input"))),
        }
    }
}

/// Parse a Seifert expression in either form. Validity of the fibers
/// (`α > 0`, `gcd(α, β) = 1`) is not checked here.
pub fn parse_seifert(text: &str) -> Result<SeifertData<BigInt>, ParseError> {
    let mut c = Cursor::new(text);
    c.expect('{')?;
    c.skip_ws();
    if c.peek() == Some('"') {
        return parse_json(text);
    }
    let b = c.int()?;
    c.expect(';')?;
    let g = c.int()?;
    c.expect(';')?;
    let mut fibers = Vec::new();
    if !c.eat('}') {
        loop {
            c.expect('(')?;
            let alpha = c.int()?;
            c.expect(',')?;
            let beta = c.int()?;
            c.expect(')')?;
            fibers.push((alpha, beta));
            if c.eat('}') {
                break;
            }
            c.expect(',')?;
        }
    }
    c.end()?;
    Ok(SeifertData::new(b, g, fibers))
}

fn parse_json(text: &str) -> Result<SeifertData<BigInt>, ParseError> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| ParseError { line: e.line(), column: e.column(), message: e.to_string() })?;
    let at_start = |message: String| ParseError { line: 1, column: 1, message };
    let obj = value.as_object().ok_or_else(|| at_start("expected a JSON object".into()))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "b" | "g" | "fibers") {
            return Err(at_start(format!("unknown key \"{key}\"")));
        }
    }
    let int = |v: Option<&Value>, what: &str| -> Result<BigInt, ParseError> {
        match v {
            Some(Value::Number(n)) => {
                BigInt::from_str(&n.to_string()).map_err(|_| at_start(format!("{what} must be an integer")))
            }
            Some(_) => Err(at_start(format!("{what} must be an integer"))),
            None => Err(at_start(format!("missing \"{what}\""))),
        }
    };
    let b = int(obj.get("b"), "b")?;
    let g = int(obj.get("g"), "g")?;
    let mut fibers = Vec::new();
    match obj.get("fibers") {
        None => {}
        Some(Value::Array(items)) => {
            for (i, item) in items.iter().enumerate() {
                match item.as_array().map(Vec::as_slice) {
                    Some([a, be]) => fibers.push((int(Some(a), "α")?, int(Some(be), "β")?)),
                    _ => return Err(at_start(format!("fiber {i} must be a pair [α, β]"))),
                }
            }
        }
        Some(_) => return Err(at_start("\"fibers\" must be an array".into())),
    }
    Ok(SeifertData::new(b, g, fibers))
}

/// Parse a comma-separated list of rationals such as `1/2, 1/3, 1/5`.
/// Range checks are left to the caller.
pub fn parse_gammas(text: &str) -> Result<Vec<Rational>, ParseError> {
    let mut c = Cursor::new(text);
    let mut out = Vec::new();
    loop {
        let num = c.int()?;
        let den = if c.eat('/') {
            let at = c.pos;
            let den = c.int()?;
            if den == BigInt::from(0) {
                c.pos = at;
                c.skip_ws();
                return Err(c.error("zero denominator"));
            }
            den
        } else {
            BigInt::from(1)
        };
        out.push(Rational::new(num, den));
        c.skip_ws();
        if c.peek().is_none() {
            return Ok(out);
        }
        c.expect(',')?;
    }
}
