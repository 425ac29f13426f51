use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyntaxError {
    #[error("unterminated comment")]
    UnterminatedComment,
    #[error("unterminated statement")]
    UnterminatedStatement,
    #[error("`$[` file inclusion is not supported")]
    InclusionUnsupported,
    #[error("`$}}` without matching `${{`")]
    UnmatchedClose,
    #[error("`${{` never closed")]
    UnclosedBlock,
    #[error("`$c` inside a block")]
    ConstantInBlock,
    #[error("token `{0}` used before declaration")]
    Undeclared(String),
    #[error("token `{0}` declared twice")]
    Redeclared(String),
    #[error("typecode `{0}` is not a declared constant")]
    TypecodeNotConstant(String),
    #[error("statement has no typecode")]
    MissingTypecode,
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("`$f` needs exactly a typecode and a variable")]
    BadFloating,
    #[error("variable `{0}` already has an active `$f`")]
    DuplicateFloating(String),
    #[error("variable `{0}` has no active `$f`")]
    NoFloating(String),
    #[error("unexpected keyword `{0}`")]
    UnexpectedKeyword(String),
    #[error("unexpected token `{0}`")]
    UnexpectedToken(String),
    #[error("empty proof")]
    EmptyProof,
    #[error("compressed proof header missing `)`")]
    UnclosedProofHeader,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofError {
    #[error("`{0}` has no proof")]
    NotProvable(String),
    #[error("proof step {step} index {index} out of range")]
    IndexOutOfRange { step: usize, index: usize },
    #[error("malformed letter stream at character {0}")]
    BadLetter(usize),
    #[error("letter stream ends inside a number")]
    TrailingPrefix,
    #[error("`Z` with no preceding step")]
    DanglingZ,
    #[error("proof step `{0}` is not an active label")]
    UnknownStep(String),
    #[error("proof stack underflow at step {0}")]
    StackUnderflow(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MmError {
    #[error("{line}:{col}: {kind}")]
    Syntax { line: usize, col: usize, kind: SyntaxError },
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("`{0}` is not an assertion")]
    NotAssertion(String),
    #[error("in proof of `{label}`: {kind}")]
    Proof { label: String, kind: ProofError },
    #[error("proof of `{from}` references later statement `{to}`")]
    ForwardReference { from: String, to: String },
    #[error(transparent)]
    Corpus(#[from] theoremnet_core::corpus::BuildError),
}
