//! Whitespace-delimited tokens with positions. Comments come back whole so
//! the parser can read section headings out of them.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tok<'a> {
    Word(&'a str),
    /// Text between `$(` and `$)`.
    Comment(&'a str),
}

pub struct Lexer<'a> {
    src: &'a str,
    at: usize,
    line: usize,
    col: usize,
}

/// The only lexical failure: a comment without its `$)`.
#[derive(Debug)]
pub struct Unterminated(pub Pos);

impl<'a> Lexer<'a> {
    pub fn new(src: &'a str) -> Self {
        Lexer { src, at: 0, line: 1, col: 1 }
    }

    pub fn pos(&self) -> Pos {
        Pos { line: self.line, col: self.col }
    }

    fn advance(&mut self, upto: usize) {
        for c in self.src[self.at..upto].chars() {
            if c == '\n' {
                self.line += 1;
                self.col = 1;
            } else {
                self.col += 1;
            }
        }
        self.at = upto;
    }

    fn skip_space(&mut self) {
        let rest = &self.src[self.at..];
        let n = rest.len() - rest.trim_start().len();
        self.advance(self.at + n);
    }

    fn word(&mut self) -> Option<(&'a str, Pos)> {
        self.skip_space();
        if self.at >= self.src.len() {
            return None;
        }
        let start = self.at;
        let pos = self.pos();
        let rest = &self.src[start..];
        let len = rest.find(char::is_whitespace).unwrap_or(rest.len());
        self.at += len;
        self.col += rest[..len].chars().count();
        Some((&self.src[start..start + len], pos))
    }

    pub fn next_tok(&mut self) -> Result<Option<(Tok<'a>, Pos)>, Unterminated> {
        let Some((w, pos)) = self.word() else {
            return Ok(None);
        };
        if w != "$(" {
            return Ok(Some((Tok::Word(w), pos)));
        }
        let body_start = self.at;
        loop {
            match self.word() {
                Some(("$)", _)) => {
                    let body_end = self.at - 2;
                    return Ok(Some((Tok::Comment(&self.src[body_start..body_end]), pos)));
                }
                Some(_) => {}
                None => return Err(Unterminated(pos)),
            }
        }
    }
}
