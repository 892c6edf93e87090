//! Tokenizer for the supported Java subset.

use super::ParseFailure;

#[derive(Debug, Clone, PartialEq)]
pub enum Tok {
    /// Identifiers and keywords alike; the parser decides by text.
    Ident(String),
    Int(String),
    Float(String),
    Char(String),
    Str(String),
    /// Operators and separators. `>>` and `>>>` are never produced; the
    /// expression parser glues adjacent `>` tokens back together.
    Op(&'static str),
    At,
    Eof,
}

#[derive(Debug, Clone)]
pub struct Token {
    pub tok: Tok,
    pub line: u32,
    pub col: u32,
    /// Byte offsets into the source text.
    pub start: usize,
    pub end: usize,
}

const OPERATORS: &[&str] = &[
    "<<=", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=", ">=", "+=", "-=", "*=",
    "/=", "&=", "|=", "^=", "%=", "<<", "(", ")", "{", "}", "[", "]", ";", ",", ".", "=", ">",
    "<", "!", "~", "?", ":", "+", "-", "*", "/", "&", "|", "^", "%",
];

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    line: u32,
    col: u32,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek_at(&self, n: usize) -> Option<char> {
        self.src[self.pos..].chars().nth(n)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn fail(&self, message: impl Into<String>) -> ParseFailure {
        ParseFailure::new(self.line, self.col, message)
    }
}

pub fn tokenize(src: &str) -> Result<Vec<Token>, ParseFailure> {
    let mut cur = Cursor {
        src,
        pos: 0,
        line: 1,
        col: 1,
    };
    let mut out = Vec::new();
    loop {
        skip_trivia(&mut cur)?;
        let (line, col, start) = (cur.line, cur.col, cur.pos);
        let Some(c) = cur.peek() else {
            out.push(Token {
                tok: Tok::Eof,
                line,
                col,
                start,
                end: start,
            });
            return Ok(out);
        };
        let tok = if is_ident_start(c) {
            while cur.peek().is_some_and(is_ident_part) {
                cur.bump();
            }
            Tok::Ident(src[start..cur.pos].to_string())
        } else if c.is_ascii_digit() || (c == '.' && cur.peek_at(1).is_some_and(|d| d.is_ascii_digit())) {
            lex_number(&mut cur)?
        } else if c == '"' {
            lex_string(&mut cur)?
        } else if c == '\'' {
            lex_char(&mut cur)?
        } else if c == '@' {
            cur.bump();
            Tok::At
        } else {
            let rest = cur.rest();
            let Some(op) = OPERATORS.iter().find(|op| rest.starts_with(**op)) else {
                return Err(cur.fail(format!("unexpected character {c:?}")));
            };
            for _ in 0..op.len() {
                cur.bump();
            }
            Tok::Op(op)
        };
        out.push(Token {
            tok,
            line,
            col,
            start,
            end: cur.pos,
        });
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_' || c == '$'
}

fn is_ident_part(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '$'
}

fn skip_trivia(cur: &mut Cursor<'_>) -> Result<(), ParseFailure> {
    loop {
        match cur.peek() {
            Some(c) if c.is_whitespace() || c == '\u{feff}' => {
                cur.bump();
            }
            Some('/') if cur.peek_at(1) == Some('/') => {
                while cur.peek().is_some_and(|c| c != '\n') {
                    cur.bump();
                }
            }
            Some('/') if cur.peek_at(1) == Some('*') => {
                let (line, col) = (cur.line, cur.col);
                cur.bump();
                cur.bump();
                loop {
                    if cur.rest().starts_with("*/") {
                        cur.bump();
                        cur.bump();
                        break;
                    }
                    if cur.bump().is_none() {
                        return Err(ParseFailure::new(line, col, "unterminated block comment"));
                    }
                }
            }
            _ => return Ok(()),
        }
    }
}

fn lex_number(cur: &mut Cursor<'_>) -> Result<Tok, ParseFailure> {
    let start = cur.pos;
    let mut float = false;
    if cur.rest().starts_with("0x") || cur.rest().starts_with("0X") {
        cur.bump();
        cur.bump();
        while cur.peek().is_some_and(|c| c.is_ascii_hexdigit() || c == '_') {
            cur.bump();
        }
    } else if cur.rest().starts_with("0b") || cur.rest().starts_with("0B") {
        cur.bump();
        cur.bump();
        while cur.peek().is_some_and(|c| c == '0' || c == '1' || c == '_') {
            cur.bump();
        }
    } else {
        while cur.peek().is_some_and(|c| c.is_ascii_digit() || c == '_') {
            cur.bump();
        }
        if cur.peek() == Some('.') && cur.peek_at(1).is_none_or(|c| c.is_ascii_digit() || !is_ident_start(c)) {
            float = true;
            cur.bump();
            while cur.peek().is_some_and(|c| c.is_ascii_digit() || c == '_') {
                cur.bump();
            }
        }
        if matches!(cur.peek(), Some('e' | 'E')) {
            float = true;
            cur.bump();
            if matches!(cur.peek(), Some('+' | '-')) {
                cur.bump();
            }
            if !cur.peek().is_some_and(|c| c.is_ascii_digit()) {
                return Err(cur.fail("malformed exponent"));
            }
            while cur.peek().is_some_and(|c| c.is_ascii_digit()) {
                cur.bump();
            }
        }
    }
    match cur.peek() {
        Some('l' | 'L') => {
            cur.bump();
        }
        Some('f' | 'F' | 'd' | 'D') => {
            float = true;
            cur.bump();
        }
        _ => {}
    }
    if cur.peek().is_some_and(is_ident_part) {
        return Err(cur.fail("malformed numeric literal"));
    }
    let text = cur.src[start..cur.pos].to_string();
    Ok(if float { Tok::Float(text) } else { Tok::Int(text) })
}

fn lex_string(cur: &mut Cursor<'_>) -> Result<Tok, ParseFailure> {
    let (line, col) = (cur.line, cur.col);
    if cur.rest().starts_with("\"\"\"") {
        let start = cur.pos;
        for _ in 0..3 {
            cur.bump();
        }
        loop {
            if cur.rest().starts_with("\\") {
                cur.bump();
                cur.bump();
                continue;
            }
            if cur.rest().starts_with("\"\"\"") {
                for _ in 0..3 {
                    cur.bump();
                }
                return Ok(Tok::Str(cur.src[start..cur.pos].to_string()));
            }
            if cur.bump().is_none() {
                return Err(ParseFailure::new(line, col, "unterminated text block"));
            }
        }
    }
    let start = cur.pos;
    cur.bump();
    loop {
        match cur.bump() {
            Some('\\') => {
                cur.bump();
            }
            Some('"') => return Ok(Tok::Str(cur.src[start..cur.pos].to_string())),
            Some('\n') | None => return Err(ParseFailure::new(line, col, "unterminated string literal")),
            Some(_) => {}
        }
    }
}

fn lex_char(cur: &mut Cursor<'_>) -> Result<Tok, ParseFailure> {
    let (line, col) = (cur.line, cur.col);
    let start = cur.pos;
    cur.bump();
    loop {
        match cur.bump() {
            Some('\\') => {
                cur.bump();
            }
            Some('\'') => return Ok(Tok::Char(cur.src[start..cur.pos].to_string())),
            Some('\n') | None => return Err(ParseFailure::new(line, col, "unterminated character literal")),
            Some(_) => {}
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(src: &str) -> Vec<Tok> {
        tokenize(src).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn generics_close_as_single_angles() {
        let toks = kinds("Map<String, List<A>> m;");
        let closes = toks.iter().filter(|t| **t == Tok::Op(">")).count();
        assert_eq!(closes, 2);
    }

    #[test]
    fn comments_and_literals() {
        let toks = kinds("/* a */ x = 0x1F + 1.5e3f + 'c' + \"s\\\"\"; // tail");
        assert_eq!(toks[0], Tok::Ident("x".into()));
        assert!(toks.contains(&Tok::Int("0x1F".into())));
        assert!(toks.contains(&Tok::Float("1.5e3f".into())));
        assert!(toks.contains(&Tok::Char("'c'".into())));
        assert!(toks.contains(&Tok::Str("\"s\\\"\"".into())));
    }

    #[test]
    fn positions_are_one_based() {
        let toks = tokenize("a\n  b").unwrap();
        assert_eq!((toks[1].line, toks[1].col), (2, 3));
    }

    #[test]
    fn unterminated_comment_fails() {
        let err = tokenize("class A { /* open").unwrap_err();
        assert_eq!(err.line, 1);
    }

    #[test]
    fn method_call_on_int_literal_is_not_float() {
        let toks = kinds("1.toString");
        assert_eq!(toks[0], Tok::Int("1".into()));
    }
}
