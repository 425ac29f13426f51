use std::collections::BTreeMap;

use theoremnet_core::{CorpusBuilder, DependencyCorpus, NodeKind};

use crate::database::{MmDatabase, StatementKind};
use crate::error::MmError;
use crate::proof::{is_hypothesis, proof_steps, Step};

/// Group assigned to statements before the first section heading.
pub const UNKNOWN_GROUP: &str = "unknown";

/// The typecode of provable assertions.
pub const PROVABLE_TYPECODE: &str = "|-";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExtractOptions {
    /// Keep syntax constructors (`$a`/`$p` whose typecode is not `|-`)
    /// as nodes and edges.
    pub include_syntax: bool,
}

/// Direct references made by one assertion's proof.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MmAssertion {
    pub label: String,
    pub kind: StatementKind,
    /// Referenced assertion labels with multiplicities, in database order.
    pub referenced: Vec<(String, u32)>,
    pub hypothesis_uses: u64,
}

fn included(db: &MmDatabase, ix: usize, opts: ExtractOptions) -> bool {
    db.statement(ix).kind.is_assertion() && (opts.include_syntax || db.typecode(ix) == PROVABLE_TYPECODE)
}

/// Referenced statement index -> multiplicity, plus hypothesis uses.
fn references(
    db: &MmDatabase,
    ix: usize,
    opts: ExtractOptions,
) -> Result<(BTreeMap<usize, u32>, u64), MmError> {
    let mut refs = BTreeMap::new();
    let mut hyps = 0u64;
    if db.statement(ix).kind != StatementKind::Provable {
        return Ok((refs, hyps));
    }
    for step in proof_steps(db, ix)? {
        let Step::Stmt(j) = step else { continue };
        if j >= ix {
            return Err(MmError::ForwardReference {
                from: db.statement(ix).label.clone(),
                to: db.statement(j).label.clone(),
            });
        }
        if is_hypothesis(db, j) {
            hyps += 1;
        } else if included(db, j, opts) {
            *refs.entry(j).or_insert(0u32) += 1;
        }
    }
    Ok((refs, hyps))
}

pub fn assertion(db: &MmDatabase, label: &str, opts: ExtractOptions) -> Result<MmAssertion, MmError> {
    let (ix, st) = db.get(label)?;
    if !st.kind.is_assertion() {
        return Err(MmError::NotAssertion(label.to_string()));
    }
    let (refs, hypothesis_uses) = references(db, ix, opts)?;
    Ok(MmAssertion {
        label: st.label.clone(),
        kind: st.kind,
        referenced: refs.into_iter().map(|(j, m)| (db.statement(j).label.clone(), m)).collect(),
        hypothesis_uses,
    })
}

/// One node per assertion (`$a` as axiom, `$p` as theorem) and one edge
/// per distinct assertion referenced in a proof, weighted by use count.
pub fn extract_dependencies(db: &MmDatabase, opts: ExtractOptions) -> Result<DependencyCorpus, MmError> {
    let mut b = CorpusBuilder::new();
    let mut node_of = vec![usize::MAX; db.statements().len()];
    for (ix, st) in db.statements().iter().enumerate() {
        if !included(db, ix, opts) {
            continue;
        }
        let kind = match st.kind {
            StatementKind::Axiom => NodeKind::Axiom,
            _ => NodeKind::Theorem,
        };
        let group = st.group.as_deref().unwrap_or(UNKNOWN_GROUP);
        let node = b.add_node(&st.label, kind, Some(group))?;
        node_of[ix] = node;
        let (refs, _) = references(db, ix, opts)?;
        for (j, m) in refs {
            b.add_edge_ix(node, node_of[j], m)?;
        }
    }
    Ok(b.build()?)
}
