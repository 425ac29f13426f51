use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at offset {offset}: expected {expected}")]
pub struct ParseError {
    pub offset: usize,
    pub expected: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogicError {
    #[error("variable `{0}` is not in the alphabet")]
    UndeclaredVariable(char),
    #[error("alphabet is empty")]
    EmptyAlphabet,
    #[error("`{0}` is not a lowercase letter or is repeated")]
    BadAlphabet(char),
    #[error("{0} variables exceed the truth-table limit")]
    AlphabetTooLarge(usize),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
