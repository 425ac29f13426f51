//! Metamath `.mm` databases: parsing with full scoping, proof decoding and
//! extraction of theorem-dependency corpora.
//!
//! Proofs are not verified. Extraction only needs frames (to number the
//! steps of compressed proofs) and the label stream of each proof.

pub mod database;
pub mod error;
pub mod extract;
pub mod lexer;
pub mod proof;

pub use database::{parse_mm, Frame, MmDatabase, Proof, Statement, StatementKind};
pub use error::{MmError, ProofError, SyntaxError};
pub use extract::{assertion, extract_dependencies, ExtractOptions, MmAssertion, UNKNOWN_GROUP};
pub use proof::{decompress_proof, expand_proof, proof_steps, Step};
