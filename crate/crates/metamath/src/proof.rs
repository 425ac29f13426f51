//! Proof label streams: normal proofs as written, compressed proofs decoded.

use crate::database::{MmDatabase, Proof, StatementKind};
use crate::error::{MmError, ProofError};

/// One step of a proof, resolved to a statement index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    Stmt(usize),
    /// `?` in the source.
    Unknown,
}

/// A compressed-proof instruction before label resolution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Code {
    /// 1-based index into hypotheses, header labels, then saved steps.
    Num(usize),
    Save,
    Unknown,
}

fn codes(letters: &str) -> Result<Vec<Code>, ProofError> {
    let mut out = Vec::new();
    let mut acc = 0usize;
    let mut pending = false;
    for (i, c) in letters.bytes().enumerate() {
        match c {
            b'U'..=b'Y' => {
                acc = acc * 5 + (c - b'U' + 1) as usize;
                pending = true;
            }
            b'A'..=b'T' => {
                out.push(Code::Num(acc * 20 + (c - b'A' + 1) as usize));
                acc = 0;
                pending = false;
            }
            b'Z' if !pending => {
                if !matches!(out.last(), Some(Code::Num(_) | Code::Unknown)) {
                    return Err(ProofError::DanglingZ);
                }
                out.push(Code::Save);
            }
            b'?' if !pending => out.push(Code::Unknown),
            _ => return Err(ProofError::BadLetter(i)),
        }
    }
    if pending {
        return Err(ProofError::TrailingPrefix);
    }
    Ok(out)
}

fn resolve(db: &MmDatabase, label: &str) -> Result<Step, ProofError> {
    if label == "?" {
        return Ok(Step::Unknown);
    }
    db.lookup(label).map(Step::Stmt).ok_or_else(|| ProofError::UnknownStep(label.to_string()))
}

fn arity(db: &MmDatabase, step: Step) -> usize {
    match step {
        Step::Stmt(ix) => db.statement(ix).frame.as_ref().map_or(0, |f| f.hyps.len()),
        Step::Unknown => 0,
    }
}

/// What a decoded stream element refers to.
enum Item {
    Plain(Step),
    /// Reuse of the n-th saved subproof (0-based).
    Saved(usize),
}

/// Shared decoder. `visit` receives each element in order; `Save` marks
/// are reported as `None`.
fn walk(
    db: &MmDatabase,
    ix: usize,
    mut visit: impl FnMut(usize, Option<&Item>) -> Result<(), ProofError>,
) -> Result<(), MmError> {
    let st = db.statement(ix);
    let wrap = |kind| MmError::Proof { label: st.label.clone(), kind };
    let mut run = || -> Result<(), ProofError> {
        match &st.proof {
            None => Err(ProofError::NotProvable(st.label.clone())),
            Some(Proof::Normal(labels)) => {
                for (i, l) in labels.iter().enumerate() {
                    visit(i, Some(&Item::Plain(resolve(db, l)?)))?;
                }
                Ok(())
            }
            Some(Proof::Compressed { labels, letters }) => {
                let hyps = &st.frame.as_ref().expect("provable has a frame").hyps;
                let header = labels.iter().map(|l| resolve(db, l)).collect::<Result<Vec<_>, _>>()?;
                let fixed = hyps.len() + header.len();
                let mut saved = 0usize;
                for (i, code) in codes(letters)?.into_iter().enumerate() {
                    let item = match code {
                        Code::Save => {
                            saved += 1;
                            visit(i, None)?;
                            continue;
                        }
                        Code::Unknown => Item::Plain(Step::Unknown),
                        Code::Num(n) if n <= hyps.len() => Item::Plain(Step::Stmt(hyps[n - 1])),
                        Code::Num(n) if n <= fixed => Item::Plain(header[n - hyps.len() - 1]),
                        Code::Num(n) if n - fixed <= saved => Item::Saved(n - fixed - 1),
                        Code::Num(n) => return Err(ProofError::IndexOutOfRange { step: i, index: n }),
                    };
                    visit(i, Some(&item))?;
                }
                Ok(())
            }
        }
    };
    run().map_err(wrap)
}

/// The proof as a label stream. Reuse of a saved subproof appears as the
/// label at that subproof's root, once per reuse.
pub fn proof_steps(db: &MmDatabase, ix: usize) -> Result<Vec<Step>, MmError> {
    let mut out = Vec::new();
    let mut roots: Vec<Step> = Vec::new();
    walk(db, ix, |_, item| {
        match item {
            None => roots.push(*out.last().expect("save follows a step")),
            Some(Item::Plain(s)) => out.push(*s),
            Some(Item::Saved(k)) => out.push(roots[*k]),
        }
        Ok(())
    })?;
    Ok(out)
}

fn labels_of(db: &MmDatabase, steps: &[Step]) -> Vec<String> {
    steps
        .iter()
        .map(|s| match s {
            Step::Stmt(ix) => db.statement(*ix).label.clone(),
            Step::Unknown => "?".to_string(),
        })
        .collect()
}

/// [`proof_steps`] by label.
pub fn decompress_proof(db: &MmDatabase, label: &str) -> Result<Vec<String>, MmError> {
    let (ix, _) = db.get(label)?;
    Ok(labels_of(db, &proof_steps(db, ix)?))
}

/// The full normal-form proof: saved subproofs are copied out in full.
pub fn expand_proof(db: &MmDatabase, label: &str) -> Result<Vec<String>, MmError> {
    let (ix, _) = db.get(label)?;
    let mut out: Vec<Step> = Vec::new();
    // Start offset in `out` of each subtree on the proof stack.
    let mut stack: Vec<usize> = Vec::new();
    let mut saved: Vec<(usize, usize)> = Vec::new();
    walk(db, ix, |i, item| {
        match item {
            None => {
                let start = *stack.last().ok_or(ProofError::StackUnderflow(i))?;
                saved.push((start, out.len()));
            }
            Some(Item::Saved(k)) => {
                let (a, b) = saved[*k];
                stack.push(out.len());
                out.extend_from_within(a..b);
            }
            Some(Item::Plain(s)) => {
                let k = arity(db, *s);
                if stack.len() < k {
                    return Err(ProofError::StackUnderflow(i));
                }
                let start = if k == 0 { out.len() } else { stack[stack.len() - k] };
                stack.truncate(stack.len() - k);
                out.push(*s);
                stack.push(start);
            }
        }
        Ok(())
    })?;
    Ok(labels_of(db, &out))
}

pub(crate) fn is_hypothesis(db: &MmDatabase, ix: usize) -> bool {
    matches!(db.statement(ix).kind, StatementKind::Floating | StatementKind::Essential)
}
