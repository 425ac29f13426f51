//! Truth tables, satisfying assignments and semantic implication.

use crate::error::LogicError;
use crate::expr::{BoolEquation, BoolExpr};

/// Most variables a table can hold (one bit per row in a `u64`).
pub const MAX_VARIABLES: usize = 6;

/// Ordered, duplicate-free list of variable letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet(Vec<char>);

impl Alphabet {
    pub fn new(letters: impl IntoIterator<Item = char>) -> Result<Self, LogicError> {
        let mut v: Vec<char> = Vec::new();
        for c in letters {
            if !c.is_ascii_lowercase() || v.contains(&c) {
                return Err(LogicError::BadAlphabet(c));
            }
            v.push(c);
        }
        if v.is_empty() {
            return Err(LogicError::EmptyAlphabet);
        }
        if v.len() > MAX_VARIABLES {
            return Err(LogicError::AlphabetTooLarge(v.len()));
        }
        Ok(Alphabet(v))
    }

    /// `a`, `b`, ... of the given size.
    pub fn first(n: usize) -> Result<Self, LogicError> {
        Alphabet::new((b'a'..).take(n).map(char::from))
    }

    pub fn letters(&self) -> &[char] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn rows(&self) -> usize {
        1 << self.0.len()
    }

    fn position(&self, c: char) -> Option<usize> {
        self.0.iter().position(|&x| x == c)
    }

    /// Assignment for a row: first letter is the most significant bit.
    pub fn assignment(&self, row: usize) -> Vec<bool> {
        let n = self.0.len();
        (0..n).map(|i| row >> (n - 1 - i) & 1 == 1).collect()
    }

    fn check(&self, e: &BoolExpr) -> Result<(), LogicError> {
        match e.leaves().into_iter().find(|&c| self.position(c).is_none()) {
            Some(c) => Err(LogicError::UndeclaredVariable(c)),
            None => Ok(()),
        }
    }
}

/// Bit `r` holds the value on row `r`; rows count in binary, all-false first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TruthTable {
    pub rows: usize,
    pub bits: u64,
}

impl TruthTable {
    fn mask(rows: usize) -> u64 {
        if rows == 64 {
            u64::MAX
        } else {
            (1u64 << rows) - 1
        }
    }

    pub fn get(&self, row: usize) -> bool {
        self.bits >> row & 1 == 1
    }

    pub fn to_vec(&self) -> Vec<bool> {
        (0..self.rows).map(|r| self.get(r)).collect()
    }

    pub fn complement(&self) -> TruthTable {
        TruthTable { rows: self.rows, bits: !self.bits & Self::mask(self.rows) }
    }

    pub fn count(&self) -> u32 {
        self.bits.count_ones()
    }
}

fn table_unchecked(e: &BoolExpr, alphabet: &Alphabet, columns: &[u64]) -> u64 {
    match e {
        BoolExpr::Var(c) => columns[alphabet.position(*c).expect("checked")],
        BoolExpr::Not(a) => !table_unchecked(a, alphabet, columns),
        BoolExpr::And(a, b) => table_unchecked(a, alphabet, columns) & table_unchecked(b, alphabet, columns),
        BoolExpr::Or(a, b) => table_unchecked(a, alphabet, columns) | table_unchecked(b, alphabet, columns),
    }
}

/// Column of each variable as a bit vector over rows.
fn columns(alphabet: &Alphabet) -> Vec<u64> {
    let n = alphabet.len();
    (0..n)
        .map(|i| (0..alphabet.rows()).filter(|r| r >> (n - 1 - i) & 1 == 1).fold(0u64, |acc, r| acc | 1 << r))
        .collect()
}

pub fn truth_table(e: &BoolExpr, alphabet: &Alphabet) -> Result<TruthTable, LogicError> {
    alphabet.check(e)?;
    let rows = alphabet.rows();
    Ok(TruthTable { rows, bits: table_unchecked(e, alphabet, &columns(alphabet)) & TruthTable::mask(rows) })
}

/// Rows on which both sides agree.
pub fn equation_table(eq: &BoolEquation, alphabet: &Alphabet) -> Result<TruthTable, LogicError> {
    let l = truth_table(&eq.lhs, alphabet)?;
    let r = truth_table(&eq.rhs, alphabet)?;
    Ok(TruthTable { rows: l.rows, bits: !(l.bits ^ r.bits) & TruthTable::mask(l.rows) })
}

pub fn is_tautology(eq: &BoolEquation, alphabet: &Alphabet) -> Result<bool, LogicError> {
    let t = equation_table(eq, alphabet)?;
    Ok(t.count() as usize == t.rows)
}

/// Satisfying assignments, all-true first and counting down.
pub fn sat_instances(eq: &BoolEquation, alphabet: &Alphabet) -> Result<Vec<Vec<bool>>, LogicError> {
    let t = equation_table(eq, alphabet)?;
    Ok((0..t.rows).rev().filter(|&r| t.get(r)).map(|r| alphabet.assignment(r)).collect())
}

/// True when the assumption is satisfiable and every assignment satisfying
/// it also satisfies the statement.
pub fn implies_under(
    assumption: &BoolEquation,
    statement: &BoolEquation,
    alphabet: &Alphabet,
) -> Result<bool, LogicError> {
    let a = equation_table(assumption, alphabet)?;
    let s = equation_table(statement, alphabet)?;
    Ok(a.bits != 0 && a.bits & !s.bits == 0)
}

/// Indices into `candidates` implied by `assumption`.
pub fn implication_row(
    assumption: &BoolEquation,
    candidates: &[BoolEquation],
    alphabet: &Alphabet,
) -> Result<Vec<usize>, LogicError> {
    let mut out = Vec::new();
    for (i, c) in candidates.iter().enumerate() {
        if implies_under(assumption, c, alphabet)? {
            out.push(i);
        }
    }
    Ok(out)
}

/// `matrix[i]` is the implication row of `statements[i]` over `statements`.
pub fn implication_matrix(
    statements: &[BoolEquation],
    alphabet: &Alphabet,
) -> Result<Vec<Vec<usize>>, LogicError> {
    statements.iter().map(|s| implication_row(s, statements, alphabet)).collect()
}
