//! Canonical enumeration of equations in order of complexity.

use crate::error::LogicError;
use crate::expr::{BoolEquation, BoolExpr, ExprKey};
use crate::table::{equation_table, Alphabet, TruthTable};

/// Per-side bound: an expression is admitted when both limits hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Complexity {
    pub depth: u32,
    pub symbols: usize,
}

/// Every expression over `alphabet` within the bound, sorted by key.
pub fn enumerate_expressions(alphabet: &Alphabet, bound: Complexity) -> Vec<BoolExpr> {
    // by_size[n]: expressions with exactly n symbols.
    let mut by_size: Vec<Vec<BoolExpr>> = vec![Vec::new()];
    for n in 1..=bound.symbols {
        let mut level: Vec<BoolExpr> = Vec::new();
        if n == 1 {
            level.extend(alphabet.letters().iter().map(|&c| BoolExpr::var(c)));
        } else {
            for e in &by_size[n - 1] {
                level.push(BoolExpr::not(e.clone()));
            }
            for i in 1..n - 1 {
                for a in &by_size[i] {
                    for b in &by_size[n - 1 - i] {
                        level.push(BoolExpr::and(a.clone(), b.clone()));
                        level.push(BoolExpr::or(a.clone(), b.clone()));
                    }
                }
            }
        }
        level.retain(|e| e.depth() <= bound.depth);
        by_size.push(level);
    }
    let mut all: Vec<(ExprKey, BoolExpr)> = by_size.into_iter().flatten().map(|e| (e.key(), e)).collect();
    all.sort_by(|x, y| x.0.cmp(&y.0));
    all.into_iter().map(|(_, e)| e).collect()
}

/// Whether the variables of `eq`, read left to right across both sides,
/// first appear in alphabet order. Every equation has exactly one
/// canonical renaming.
pub fn is_canonical(eq: &BoolEquation, alphabet: &Alphabet) -> bool {
    let vars = eq.variables();
    vars.len() <= alphabet.len() && vars.iter().zip(alphabet.letters()).all(|(a, b)| a == b)
}

/// Equations `lhs = rhs` with `lhs` strictly simpler than `rhs`, in
/// canonical variable naming, ordered by right side then left side.
pub fn enumerate_equations(alphabet: &Alphabet, bound: Complexity) -> Vec<BoolEquation> {
    let exprs = enumerate_expressions(alphabet, bound);
    let mut out = Vec::new();
    for (j, rhs) in exprs.iter().enumerate() {
        for lhs in &exprs[..j] {
            let eq = BoolEquation::new(lhs.clone(), rhs.clone());
            if is_canonical(&eq, alphabet) {
                out.push(eq);
            }
        }
    }
    out
}

/// One enumerated equation with its truth-table verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusEntry {
    pub equation: BoolEquation,
    pub table: TruthTable,
    pub tautology: bool,
}

/// Count of equations and tautologies at one (depth, symbols) level of the
/// right-hand side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusLevel {
    pub depth: u32,
    pub symbols: usize,
    pub equations: usize,
    pub tautologies: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub entries: Vec<CensusEntry>,
    pub levels: Vec<CensusLevel>,
}

impl Census {
    pub fn tautologies(&self) -> impl Iterator<Item = &BoolEquation> {
        self.entries.iter().filter(|e| e.tautology).map(|e| &e.equation)
    }

    pub fn non_tautologies(&self) -> impl Iterator<Item = &BoolEquation> {
        self.entries.iter().filter(|e| !e.tautology).map(|e| &e.equation)
    }
}

pub fn census(alphabet: &Alphabet, bound: Complexity) -> Result<Census, LogicError> {
    let mut entries = Vec::new();
    let mut levels: Vec<CensusLevel> = Vec::new();
    for eq in enumerate_equations(alphabet, bound) {
        let table = equation_table(&eq, alphabet)?;
        let tautology = table.count() as usize == table.rows;
        let (depth, symbols) = (eq.rhs.depth(), eq.rhs.symbols());
        match levels.last_mut() {
            Some(l) if l.depth == depth && l.symbols == symbols => {
                l.equations += 1;
                l.tautologies += tautology as usize;
            }
            _ => levels.push(CensusLevel { depth, symbols, equations: 1, tautologies: tautology as usize }),
        }
        entries.push(CensusEntry { equation: eq, table, tautology });
    }
    Ok(Census { entries, levels })
}
