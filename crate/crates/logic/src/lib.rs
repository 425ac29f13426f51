//! Boolean statements: canonical enumeration by complexity, truth-table
//! census and implication, and multiway rewriting under the axioms of
//! Boolean algebra.

pub mod enumerate;
pub mod error;
pub mod expr;
pub mod rewrite;
pub mod table;

pub use enumerate::{
    census, enumerate_equations, enumerate_expressions, is_canonical, Census, CensusEntry, CensusLevel,
    Complexity,
};
pub use error::{LogicError, ParseError};
pub use expr::{complexity_cmp, BoolEquation, BoolExpr, ExprKey};
pub use rewrite::{boolean_axioms, multiway_graph, rewrite_step, MultiwayGraph, RewriteRule, RuleApp};
pub use table::{
    equation_table, implication_matrix, implication_row, implies_under, is_tautology, sat_instances,
    truth_table, Alphabet, TruthTable,
};
