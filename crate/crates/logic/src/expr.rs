//! Boolean expressions over single-letter variables, their text form and
//! the complexity order used for enumeration.

use std::cmp::Ordering;
use std::fmt;

use crate::error::ParseError;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoolExpr {
    Var(char),
    Not(Box<BoolExpr>),
    And(Box<BoolExpr>, Box<BoolExpr>),
    Or(Box<BoolExpr>, Box<BoolExpr>),
}

use BoolExpr::{And, Not, Or, Var};

impl BoolExpr {
    pub fn var(c: char) -> Self {
        Var(c)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(e: BoolExpr) -> Self {
        Not(Box::new(e))
    }

    pub fn and(a: BoolExpr, b: BoolExpr) -> Self {
        And(Box::new(a), Box::new(b))
    }

    pub fn or(a: BoolExpr, b: BoolExpr) -> Self {
        Or(Box::new(a), Box::new(b))
    }

    pub fn is_atomic(&self) -> bool {
        matches!(self, Var(_))
    }

    /// Variables have depth 0; each connective adds one.
    pub fn depth(&self) -> u32 {
        match self {
            Var(_) => 0,
            Not(a) => 1 + a.depth(),
            And(a, b) | Or(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Variables plus connectives.
    pub fn symbols(&self) -> usize {
        match self {
            Var(_) => 1,
            Not(a) => 1 + a.symbols(),
            And(a, b) | Or(a, b) => 1 + a.symbols() + b.symbols(),
        }
    }

    /// Variable occurrences, left to right.
    pub fn leaves(&self) -> Vec<char> {
        let mut out = Vec::new();
        self.push_leaves(&mut out);
        out
    }

    fn push_leaves(&self, out: &mut Vec<char>) {
        match self {
            Var(c) => out.push(*c),
            Not(a) => a.push_leaves(out),
            And(a, b) | Or(a, b) => {
                a.push_leaves(out);
                b.push_leaves(out);
            }
        }
    }

    /// Distinct variables in order of first occurrence.
    pub fn variables(&self) -> Vec<char> {
        let mut out: Vec<char> = Vec::new();
        for c in self.leaves() {
            if !out.contains(&c) {
                out.push(c);
            }
        }
        out
    }

    /// Preorder shape with variables erased: ∧ < ∨ < ¬ < variable.
    fn skeleton(&self, out: &mut Vec<u8>) {
        match self {
            And(a, b) => {
                out.push(0);
                a.skeleton(out);
                b.skeleton(out);
            }
            Or(a, b) => {
                out.push(1);
                a.skeleton(out);
                b.skeleton(out);
            }
            Not(a) => {
                out.push(2);
                a.skeleton(out);
            }
            Var(_) => out.push(3),
        }
    }

    pub fn key(&self) -> ExprKey {
        let mut skeleton = Vec::new();
        self.skeleton(&mut skeleton);
        ExprKey { depth: self.depth(), symbols: self.symbols(), leaves: self.leaves(), skeleton }
    }

    pub fn eval(&self, value: &impl Fn(char) -> bool) -> bool {
        match self {
            Var(c) => value(*c),
            Not(a) => !a.eval(value),
            And(a, b) => a.eval(value) && b.eval(value),
            Or(a, b) => a.eval(value) || b.eval(value),
        }
    }

    /// Unicode rendering in the style `(¬a ∧ a)`, `¬(¬a)`.
    pub fn to_unicode(&self) -> String {
        fn operand(e: &BoolExpr) -> String {
            match e {
                And(..) | Or(..) => format!("({})", e.to_unicode()),
                _ => e.to_unicode(),
            }
        }
        match self {
            Var(c) => c.to_string(),
            Not(a) if a.is_atomic() => format!("¬{}", a.to_unicode()),
            Not(a) => format!("¬({})", a.to_unicode()),
            And(a, b) => format!("{} ∧ {}", operand(a), operand(b)),
            Or(a, b) => format!("{} ∨ {}", operand(a), operand(b)),
        }
    }
}

/// Sort key: depth, then symbol count, then the variable sequence, then the
/// connective skeleton. Two expressions with equal keys are identical.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExprKey {
    pub depth: u32,
    pub symbols: usize,
    pub leaves: Vec<char>,
    pub skeleton: Vec<u8>,
}

pub fn complexity_cmp(a: &BoolExpr, b: &BoolExpr) -> Ordering {
    a.key().cmp(&b.key())
}

impl fmt::Display for BoolExpr {
    /// ASCII form: `!` binds tightest, binary operands other than variables
    /// and negations are parenthesised.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn operand(e: &BoolExpr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match e {
                And(..) | Or(..) => write!(f, "({e})"),
                _ => write!(f, "{e}"),
            }
        }
        match self {
            Var(c) => write!(f, "{c}"),
            Not(a) if a.is_atomic() => write!(f, "!{a}"),
            Not(a) => write!(f, "!({a})"),
            And(a, b) | Or(a, b) => {
                operand(a, f)?;
                f.write_str(if matches!(self, And(..)) { "&" } else { "|" })?;
                operand(b, f)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoolEquation {
    pub lhs: BoolExpr,
    pub rhs: BoolExpr,
}

impl BoolEquation {
    pub fn new(lhs: BoolExpr, rhs: BoolExpr) -> Self {
        BoolEquation { lhs, rhs }
    }

    /// Distinct variables of both sides in order of first occurrence.
    pub fn variables(&self) -> Vec<char> {
        let mut out = self.lhs.variables();
        for c in self.rhs.variables() {
            if !out.contains(&c) {
                out.push(c);
            }
        }
        out
    }

    pub fn to_unicode(&self) -> String {
        let side = |e: &BoolExpr| {
            if e.is_atomic() {
                e.to_unicode()
            } else {
                format!("({})", e.to_unicode())
            }
        };
        format!("{} = {}", side(&self.lhs), side(&self.rhs))
    }
}

impl fmt::Display for BoolEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |e: &BoolExpr, f: &mut fmt::Formatter<'_>| {
            if e.is_atomic() {
                write!(f, "{e}")
            } else {
                write!(f, "({e})")
            }
        };
        side(&self.lhs, f)?;
        f.write_str("=")?;
        side(&self.rhs, f)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    at: usize,
}

impl Parser<'_> {
    fn skip(&mut self) {
        while self.src.get(self.at).is_some_and(u8::is_ascii_whitespace) {
            self.at += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip();
        self.src.get(self.at).copied()
    }

    fn fail<T>(&self, what: &'static str) -> Result<T, ParseError> {
        Err(ParseError { offset: self.at, expected: what })
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.at += 1;
            Ok(())
        } else {
            self.fail(match c {
                b')' => "`)`",
                _ => "`=`",
            })
        }
    }

    fn operand(&mut self) -> Result<BoolExpr, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_lowercase() => {
                self.at += 1;
                Ok(Var(c as char))
            }
            Some(b'!') => {
                self.at += 1;
                Ok(BoolExpr::not(self.operand()?))
            }
            Some(b'(') => {
                self.at += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            _ => self.fail("a variable, `!` or `(`"),
        }
    }

    fn expr(&mut self) -> Result<BoolExpr, ParseError> {
        let a = self.operand()?;
        match self.peek() {
            Some(b'&') => {
                self.at += 1;
                Ok(BoolExpr::and(a, self.operand()?))
            }
            Some(b'|') => {
                self.at += 1;
                Ok(BoolExpr::or(a, self.operand()?))
            }
            _ => Ok(a),
        }
    }

    fn end(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(b'&' | b'|') => self.fail("parentheses around a nested binary operand"),
            Some(_) => self.fail("end of input"),
        }
    }
}

impl std::str::FromStr for BoolExpr {
    type Err = ParseError;

    /// Variables are lowercase letters; `!`, `&`, `|`; a binary operand that
    /// is itself binary must be parenthesised.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut p = Parser { src: s.as_bytes(), at: 0 };
        let e = p.expr()?;
        p.end()?;
        Ok(e)
    }
}

impl std::str::FromStr for BoolEquation {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut p = Parser { src: s.as_bytes(), at: 0 };
        let lhs = p.expr()?;
        p.expect(b'=')?;
        let rhs = p.expr()?;
        p.end()?;
        Ok(BoolEquation { lhs, rhs })
    }
}
