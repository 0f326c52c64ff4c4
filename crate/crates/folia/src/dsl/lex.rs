use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(String),
    Punct(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier `{}`", s),
            Tok::Int(s) => write!(f, "integer `{}`", s),
            Tok::Punct(c) => write!(f, "`{}`", c),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

/// Parse or semantic error with a source position and, for syntax errors,
/// the tokens that would have been accepted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
    pub expected: Vec<&'static str>,
}

impl ParseError {
    pub fn new(pos: Pos, message: impl Into<String>) -> Self {
        ParseError { pos, message: message.into(), expected: Vec::new() }
    }

    pub fn expecting(pos: Pos, message: impl Into<String>, expected: Vec<&'static str>) -> Self {
        ParseError { pos, message: message.into(), expected }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.pos, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(" or "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

pub struct Lexer {
    tokens: Vec<(Tok, Pos)>,
    cursor: usize,
}

const PUNCT: &str = "+-*/^()=;,";

pub fn lex(input: &str) -> Result<Lexer, ParseError> {
    let mut tokens = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        if c == '#' {
            // comment to end of line
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                chars.next();
                col += 1;
            }
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    s.push(c);
                    chars.next();
                    col += 1;
                } else {
                    break;
                }
            }
            tokens.push((Tok::Ident(s), pos));
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    s.push(c);
                    chars.next();
                    col += 1;
                } else {
                    break;
                }
            }
            tokens.push((Tok::Int(s), pos));
            continue;
        }
        if PUNCT.contains(c) {
            chars.next();
            col += 1;
            tokens.push((Tok::Punct(c), pos));
            continue;
        }
        return Err(ParseError::new(pos, format!("unexpected character `{}`", c)));
    }
    tokens.push((Tok::Eof, Pos { line, col }));
    Ok(Lexer { tokens, cursor: 0 })
}

impl Lexer {
    pub fn peek(&self) -> &Tok {
        &self.tokens[self.cursor].0
    }

    pub fn pos(&self) -> Pos {
        self.tokens[self.cursor].1
    }

    pub fn next(&mut self) -> (Tok, Pos) {
        let t = self.tokens[self.cursor].clone();
        if self.cursor + 1 < self.tokens.len() {
            self.cursor += 1;
        }
        t
    }

    pub fn eat_punct(&mut self, c: char) -> Result<(), ParseError> {
        match self.peek() {
            Tok::Punct(p) if *p == c => {
                self.next();
                Ok(())
            }
            other => Err(ParseError::expecting(
                self.pos(),
                format!("found {}", other),
                vec![match c {
                    ';' => "`;`",
                    '=' => "`=`",
                    '(' => "`(`",
                    ')' => "`)`",
                    ',' => "`,`",
                    _ => "punctuation",
                }],
            )),
        }
    }

    pub fn eat_ident(&mut self) -> Result<(String, Pos), ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                let pos = self.pos();
                self.next();
                Ok((s, pos))
            }
            other => Err(ParseError::expecting(
                self.pos(),
                format!("found {}", other),
                vec!["identifier"],
            )),
        }
    }
}
