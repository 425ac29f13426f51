//! Parsing a `.mm` file into statements with resolved scopes and frames.

use std::collections::{HashMap, HashSet};

use crate::error::{MmError, SyntaxError};
use crate::lexer::{Lexer, Pos, Tok};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StatementKind {
    /// `$f`
    Floating,
    /// `$e`
    Essential,
    /// `$a`
    Axiom,
    /// `$p`
    Provable,
}

impl StatementKind {
    pub fn is_assertion(self) -> bool {
        matches!(self, StatementKind::Axiom | StatementKind::Provable)
    }

    pub fn is_hypothesis(self) -> bool {
        !self.is_assertion()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Proof {
    /// Label list; `?` entries are kept as written.
    Normal(Vec<String>),
    /// Parenthesised label header plus the concatenated letter stream.
    Compressed { labels: Vec<String>, letters: String },
}

/// Mandatory hypotheses (statement indices, database order) and the
/// disjoint-variable pairs restricted to mandatory variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Frame {
    pub hyps: Vec<usize>,
    pub disjoint: Vec<(u32, u32)>,
}

#[derive(Clone, Debug)]
pub struct Statement {
    pub label: String,
    pub kind: StatementKind,
    /// Symbol ids: typecode first, then the math string.
    pub math: Vec<u32>,
    pub pos: Pos,
    /// Nearest preceding section heading.
    pub group: Option<String>,
    /// Present for `$a` and `$p`.
    pub frame: Option<Frame>,
    pub proof: Option<Proof>,
}

#[derive(Clone, Debug, Default)]
pub struct MmDatabase {
    symbols: Vec<String>,
    symbol_ix: HashMap<String, u32>,
    constants: Vec<u32>,
    variables: Vec<u32>,
    statements: Vec<Statement>,
    labels: HashMap<String, usize>,
}

impl MmDatabase {
    pub fn statements(&self) -> &[Statement] {
        &self.statements
    }

    pub fn statement(&self, ix: usize) -> &Statement {
        &self.statements[ix]
    }

    pub fn lookup(&self, label: &str) -> Option<usize> {
        self.labels.get(label).copied()
    }

    pub fn get(&self, label: &str) -> Result<(usize, &Statement), MmError> {
        let ix = self.lookup(label).ok_or_else(|| MmError::UnknownLabel(label.to_string()))?;
        Ok((ix, &self.statements[ix]))
    }

    pub fn symbol(&self, id: u32) -> &str {
        &self.symbols[id as usize]
    }

    pub fn constants(&self) -> impl Iterator<Item = &str> {
        self.constants.iter().map(|&c| self.symbol(c))
    }

    /// Every variable ever declared, in declaration order.
    pub fn variables(&self) -> impl Iterator<Item = &str> {
        self.variables.iter().map(|&v| self.symbol(v))
    }

    pub fn typecode(&self, ix: usize) -> &str {
        self.symbol(self.statements[ix].math[0])
    }

    /// The statement's math string as text (typecode included).
    pub fn math_text(&self, ix: usize) -> String {
        let s = &self.statements[ix];
        s.math.iter().map(|&m| self.symbol(m)).collect::<Vec<_>>().join(" ")
    }

    /// Mandatory hypotheses of an assertion, by label.
    pub fn frame(&self, label: &str) -> Result<&Frame, MmError> {
        let (_, s) = self.get(label)?;
        s.frame.as_ref().ok_or_else(|| MmError::NotAssertion(label.to_string()))
    }

    pub fn frame_labels(&self, label: &str) -> Result<Vec<&str>, MmError> {
        Ok(self.frame(label)?.hyps.iter().map(|&h| self.statements[h].label.as_str()).collect())
    }

    fn intern(&mut self, s: &str) -> u32 {
        if let Some(&id) = self.symbol_ix.get(s) {
            return id;
        }
        let id = self.symbols.len() as u32;
        self.symbols.push(s.to_string());
        self.symbol_ix.insert(s.to_string(), id);
        id
    }
}

/// Scope bookkeeping: lengths of the active lists when the block opened.
struct Mark {
    vars: usize,
    hyps: usize,
    disjoint: usize,
}

#[derive(Default)]
struct Scope {
    constants: HashSet<u32>,
    /// Active variables in declaration order.
    vars: Vec<u32>,
    var_set: HashSet<u32>,
    /// `var -> $f statement`, active only.
    floats: HashMap<u32, usize>,
    /// Active `$f` and `$e` statements in database order.
    hyps: Vec<usize>,
    disjoint: Vec<(u32, u32)>,
    marks: Vec<Mark>,
}

/// A word and where it starts.
type Located<'a> = (&'a str, Pos);

struct Parser<'a> {
    lx: Lexer<'a>,
    db: MmDatabase,
    sc: Scope,
    group: Option<String>,
}

fn err(pos: Pos, kind: SyntaxError) -> MmError {
    MmError::Syntax { line: pos.line, col: pos.col, kind }
}

fn valid_label(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || matches!(c, '-' | '_' | '.'))
}

/// Title of a decorated section comment, if `body` is one.
pub(crate) fn heading(body: &str) -> Option<String> {
    const RULES: [&str; 3] = ["####", "#*#*", "=-=-"];
    let mut lines = body.lines().map(str::trim);
    while let Some(l) = lines.next() {
        if RULES.iter().any(|r| l.starts_with(r)) {
            let title = lines.by_ref().find(|l| !l.is_empty())?;
            if RULES.iter().any(|r| title.starts_with(r)) {
                return None;
            }
            return Some(title.to_string());
        }
        if !l.is_empty() {
            return None;
        }
    }
    None
}

impl<'a> Parser<'a> {
    fn next(&mut self) -> Result<Option<(Tok<'a>, Pos)>, MmError> {
        self.lx.next_tok().map_err(|u| err(u.0, SyntaxError::UnterminatedComment))
    }

    /// Next word inside a statement; comments are skipped.
    fn word(&mut self, open: Pos) -> Result<(&'a str, Pos), MmError> {
        loop {
            match self.next()? {
                Some((Tok::Word(w), p)) => return Ok((w, p)),
                Some((Tok::Comment(_), _)) => {}
                None => return Err(err(open, SyntaxError::UnterminatedStatement)),
            }
        }
    }

    /// Words up to (not including) one of `ends`; returns the terminator.
    fn words_until(&mut self, open: Pos, ends: &[&str]) -> Result<(Vec<Located<'a>>, &'a str), MmError> {
        let mut out = Vec::new();
        loop {
            let (w, p) = self.word(open)?;
            if ends.contains(&w) {
                return Ok((out, w));
            }
            if w.starts_with('$') {
                return Err(err(p, SyntaxError::UnexpectedKeyword(w.to_string())));
            }
            out.push((w, p));
        }
    }

    fn math(&mut self, open: Pos, ends: &[&str]) -> Result<(Vec<u32>, &'a str), MmError> {
        let (ws, end) = self.words_until(open, ends)?;
        let Some(&(tc, tp)) = ws.first() else {
            return Err(err(open, SyntaxError::MissingTypecode));
        };
        let mut math = Vec::with_capacity(ws.len());
        for (i, (w, p)) in ws.into_iter().enumerate() {
            let id = self.db.symbol_ix.get(w).copied();
            let ok = id.is_some_and(|id| {
                self.sc.constants.contains(&id) || (i > 0 && self.sc.var_set.contains(&id))
            });
            if !ok {
                let kind = if i == 0 {
                    SyntaxError::TypecodeNotConstant(tc.to_string())
                } else {
                    SyntaxError::Undeclared(w.to_string())
                };
                return Err(err(if i == 0 { tp } else { p }, kind));
            }
            math.push(id.unwrap());
        }
        Ok((math, end))
    }

    fn push_statement(&mut self, label: &str, pos: Pos, kind: StatementKind, math: Vec<u32>) -> usize {
        let ix = self.db.statements.len();
        self.db.labels.insert(label.to_string(), ix);
        self.db.statements.push(Statement {
            label: label.to_string(),
            kind,
            math,
            pos,
            group: self.group.clone(),
            frame: None,
            proof: None,
        });
        ix
    }

    fn frame_for(&self, math: &[u32], pos: Pos) -> Result<Frame, MmError> {
        let mut mandatory: HashSet<u32> = HashSet::new();
        let mut collect = |m: &[u32]| {
            for &s in &m[1..] {
                if self.sc.var_set.contains(&s) {
                    mandatory.insert(s);
                }
            }
        };
        collect(math);
        for &h in &self.sc.hyps {
            let st = &self.db.statements[h];
            if st.kind == StatementKind::Essential {
                collect(&st.math);
            }
        }
        for &v in &mandatory {
            if !self.sc.floats.contains_key(&v) {
                return Err(err(pos, SyntaxError::NoFloating(self.db.symbol(v).to_string())));
            }
        }
        let hyps = self
            .sc
            .hyps
            .iter()
            .copied()
            .filter(|&h| {
                let st = &self.db.statements[h];
                st.kind == StatementKind::Essential || mandatory.contains(&st.math[1])
            })
            .collect();
        let disjoint = self
            .sc
            .disjoint
            .iter()
            .copied()
            .filter(|(a, b)| mandatory.contains(a) && mandatory.contains(b))
            .collect();
        Ok(Frame { hyps, disjoint })
    }

    fn labelled(&mut self, label: &'a str, lpos: Pos) -> Result<(), MmError> {
        if !valid_label(label) {
            return Err(err(lpos, SyntaxError::UnexpectedToken(label.to_string())));
        }
        if self.db.labels.contains_key(label) {
            return Err(err(lpos, SyntaxError::DuplicateLabel(label.to_string())));
        }
        let (kw, kpos) = self.word(lpos)?;
        match kw {
            "$f" => {
                let (ws, _) = self.words_until(kpos, &["$."])?;
                if ws.len() != 2 {
                    return Err(err(kpos, SyntaxError::BadFloating));
                }
                let (tc, v) = (ws[0].0, ws[1].0);
                let tc_id = self.db.symbol_ix.get(tc).copied();
                if !tc_id.is_some_and(|id| self.sc.constants.contains(&id)) {
                    return Err(err(ws[0].1, SyntaxError::TypecodeNotConstant(tc.to_string())));
                }
                let v_id = self.db.symbol_ix.get(v).copied();
                let Some(v_id) = v_id.filter(|id| self.sc.var_set.contains(id)) else {
                    return Err(err(ws[1].1, SyntaxError::Undeclared(v.to_string())));
                };
                if self.sc.floats.contains_key(&v_id) {
                    return Err(err(ws[1].1, SyntaxError::DuplicateFloating(v.to_string())));
                }
                let ix =
                    self.push_statement(label, lpos, StatementKind::Floating, vec![tc_id.unwrap(), v_id]);
                self.sc.floats.insert(v_id, ix);
                self.sc.hyps.push(ix);
            }
            "$e" => {
                let (math, _) = self.math(kpos, &["$."])?;
                let ix = self.push_statement(label, lpos, StatementKind::Essential, math);
                self.sc.hyps.push(ix);
            }
            "$a" => {
                let (math, _) = self.math(kpos, &["$."])?;
                let frame = self.frame_for(&math, lpos)?;
                let ix = self.push_statement(label, lpos, StatementKind::Axiom, math);
                self.db.statements[ix].frame = Some(frame);
            }
            "$p" => {
                let (math, _) = self.math(kpos, &["$="])?;
                let frame = self.frame_for(&math, lpos)?;
                let (ws, _) = self.words_until(kpos, &["$."])?;
                let proof = parse_proof(&ws).map_err(|k| err(kpos, k))?;
                let ix = self.push_statement(label, lpos, StatementKind::Provable, math);
                self.db.statements[ix].frame = Some(frame);
                self.db.statements[ix].proof = Some(proof);
            }
            "$=" | "$." => return Err(err(kpos, SyntaxError::UnexpectedKeyword(kw.to_string()))),
            other => return Err(err(kpos, SyntaxError::UnexpectedToken(other.to_string()))),
        }
        Ok(())
    }

    fn run(mut self) -> Result<MmDatabase, MmError> {
        let mut last = self.lx.pos();
        while let Some((tok, pos)) = self.next()? {
            last = pos;
            let w = match tok {
                Tok::Comment(body) => {
                    if let Some(h) = heading(body) {
                        self.group = Some(h);
                    }
                    continue;
                }
                Tok::Word(w) => w,
            };
            match w {
                "$[" => return Err(err(pos, SyntaxError::InclusionUnsupported)),
                "${" => self.sc.marks.push(Mark {
                    vars: self.sc.vars.len(),
                    hyps: self.sc.hyps.len(),
                    disjoint: self.sc.disjoint.len(),
                }),
                "$}" => {
                    let m = self.sc.marks.pop().ok_or_else(|| err(pos, SyntaxError::UnmatchedClose))?;
                    for v in self.sc.vars.drain(m.vars..) {
                        self.sc.var_set.remove(&v);
                    }
                    for h in self.sc.hyps.drain(m.hyps..) {
                        let st = &self.db.statements[h];
                        if st.kind == StatementKind::Floating {
                            self.sc.floats.remove(&st.math[1]);
                        }
                    }
                    self.sc.disjoint.truncate(m.disjoint);
                }
                "$c" => {
                    if !self.sc.marks.is_empty() {
                        return Err(err(pos, SyntaxError::ConstantInBlock));
                    }
                    let (ws, _) = self.words_until(pos, &["$."])?;
                    for (c, p) in ws {
                        if self.db.symbol_ix.contains_key(c) || self.db.labels.contains_key(c) {
                            return Err(err(p, SyntaxError::Redeclared(c.to_string())));
                        }
                        let id = self.db.intern(c);
                        self.sc.constants.insert(id);
                        self.db.constants.push(id);
                    }
                }
                "$v" => {
                    let (ws, _) = self.words_until(pos, &["$."])?;
                    for (v, p) in ws {
                        let id = self.db.intern(v);
                        if self.sc.constants.contains(&id) || !self.sc.var_set.insert(id) {
                            return Err(err(p, SyntaxError::Redeclared(v.to_string())));
                        }
                        self.sc.vars.push(id);
                        if !self.db.variables.contains(&id) {
                            self.db.variables.push(id);
                        }
                    }
                }
                "$d" => {
                    let (ws, _) = self.words_until(pos, &["$."])?;
                    let mut ids = Vec::new();
                    for (v, p) in ws {
                        match self.db.symbol_ix.get(v) {
                            Some(id) if self.sc.var_set.contains(id) => ids.push(*id),
                            _ => return Err(err(p, SyntaxError::Undeclared(v.to_string()))),
                        }
                    }
                    for i in 0..ids.len() {
                        for j in i + 1..ids.len() {
                            let (a, b) = (ids[i].min(ids[j]), ids[i].max(ids[j]));
                            self.sc.disjoint.push((a, b));
                        }
                    }
                }
                w if w.starts_with('$') => {
                    return Err(err(pos, SyntaxError::UnexpectedKeyword(w.to_string())))
                }
                label => self.labelled(label, pos)?,
            }
        }
        if !self.sc.marks.is_empty() {
            return Err(err(last, SyntaxError::UnclosedBlock));
        }
        Ok(self.db)
    }
}

fn parse_proof(ws: &[(&str, Pos)]) -> Result<Proof, SyntaxError> {
    if ws.first().map(|w| w.0) != Some("(") {
        if ws.is_empty() {
            return Err(SyntaxError::EmptyProof);
        }
        return Ok(Proof::Normal(ws.iter().map(|w| w.0.to_string()).collect()));
    }
    let close = ws.iter().position(|w| w.0 == ")").ok_or(SyntaxError::UnclosedProofHeader)?;
    Ok(Proof::Compressed {
        labels: ws[1..close].iter().map(|w| w.0.to_string()).collect(),
        letters: ws[close + 1..].iter().map(|w| w.0).collect(),
    })
}

/// Parses a single-file database.
pub fn parse_mm(text: &str) -> Result<MmDatabase, MmError> {
    Parser { lx: Lexer::new(text), db: MmDatabase::default(), sc: Scope::default(), group: None }.run()
}
