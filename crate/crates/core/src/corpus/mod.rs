//! The dependency-corpus data model.
//!
//! A corpus is an ordered list of axioms and theorems plus "proof references"
//! edges. Edges point from the citing proof to the cited result, and every
//! edge goes from a later node to an earlier one, so presentation order is a
//! topological order and the graph is acyclic by construction.

mod aggregate;
mod format;

use std::borrow::Borrow;
use std::collections::HashMap;
use std::fmt;

pub use aggregate::{book_aggregate, GroupEdge, GroupGraph, GroupNode, NO_GROUP};
pub use format::{export, parse_auto, parse_edge_list, parse_json, ExportFormat, ParseError, ParseErrorKind};

use crate::error::{Error, Result};

/// Label of an axiom or theorem (`CN1`, `1.47`, `pythag`, ...).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(String);

impl NodeId {
    /// Returns `None` for empty labels or labels containing whitespace.
    pub fn new(label: impl Into<String>) -> Option<Self> {
        let label = label.into();
        if label.is_empty() || label.chars().any(char::is_whitespace) {
            None
        } else {
            Some(NodeId(label))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl Borrow<str> for NodeId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for NodeId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Axiom,
    Theorem,
}

impl NodeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            NodeKind::Axiom => "axiom",
            NodeKind::Theorem => "theorem",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "axiom" => Some(NodeKind::Axiom),
            "theorem" => Some(NodeKind::Theorem),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub id: NodeId,
    pub kind: NodeKind,
    pub group: Option<String>,
    /// Unrecognised `key=value` metadata, kept in input order.
    pub extra: Vec<(String, String)>,
}

impl Node {
    pub fn is_axiom(&self) -> bool {
        self.kind == NodeKind::Axiom
    }
}

/// One outgoing reference: the cited node's index and how often it is cited.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dep {
    pub target: usize,
    pub mult: u32,
}

/// Owned view of one edge, used by exporters and tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepEdge {
    pub from: NodeId,
    pub to: NodeId,
    pub multiplicity: u32,
}

/// An immutable, validated dependency DAG.
///
/// Node indices equal ordinals. `deps(i)` is sorted by ascending target
/// ordinal; `users(i)` lists the citing nodes in ascending ordinal.
#[derive(Clone)]
pub struct DependencyCorpus {
    nodes: Vec<Node>,
    index: HashMap<NodeId, usize>,
    deps: Vec<Vec<Dep>>,
    users: Vec<Vec<usize>>,
    edge_count: usize,
}

impl PartialEq for DependencyCorpus {
    fn eq(&self, other: &Self) -> bool {
        self.nodes == other.nodes && self.deps == other.deps
    }
}

impl Eq for DependencyCorpus {}

impl fmt::Debug for DependencyCorpus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DependencyCorpus")
            .field("nodes", &self.nodes.len())
            .field("edges", &self.edge_count)
            .finish()
    }
}

impl DependencyCorpus {
    pub fn empty() -> Self {
        CorpusBuilder::new().build().expect("empty corpus is valid")
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Number of distinct (from, to) edges.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sum of all edge multiplicities.
    pub fn reference_count(&self) -> u64 {
        self.deps.iter().flatten().map(|d| d.mult as u64).sum()
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node(&self, ix: usize) -> &Node {
        &self.nodes[ix]
    }

    pub fn id(&self, ix: usize) -> &NodeId {
        &self.nodes[ix].id
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    /// Like [`index_of`](Self::index_of) but with an error naming the label.
    pub fn ix(&self, id: &str) -> Result<usize> {
        self.index_of(id).ok_or_else(|| Error::UnknownNode(id.to_string()))
    }

    pub fn deps(&self, ix: usize) -> &[Dep] {
        &self.deps[ix]
    }

    pub fn users(&self, ix: usize) -> &[usize] {
        &self.users[ix]
    }

    pub fn is_axiom(&self, ix: usize) -> bool {
        self.nodes[ix].is_axiom()
    }

    pub fn axioms(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.is_axiom(i))
    }

    pub fn theorems(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| !self.is_axiom(i))
    }

    pub fn axiom_count(&self) -> usize {
        self.axioms().count()
    }

    /// All edges as `(from, to, mult)` index triples, sorted by (from, to).
    pub fn edge_indices(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.deps.iter().enumerate().flat_map(|(f, ds)| ds.iter().map(move |d| (f, d.target, d.mult)))
    }

    pub fn edges(&self) -> impl Iterator<Item = DepEdge> + '_ {
        self.edge_indices().map(|(f, t, m)| DepEdge {
            from: self.id(f).clone(),
            to: self.id(t).clone(),
            multiplicity: m,
        })
    }

    /// A corpus with the same nodes and a replacement edge set.
    ///
    /// Edges must satisfy the ordering invariant; they are validated again.
    pub fn with_edges(&self, edges: impl IntoIterator<Item = (usize, usize, u32)>) -> Self {
        let mut deps = vec![Vec::new(); self.len()];
        for (f, t, m) in edges {
            assert!(t < f, "edge {f}->{t} violates ordinal order");
            deps[f].push(Dep { target: t, mult: m });
        }
        Self::from_parts(self.nodes.clone(), self.index.clone(), deps)
    }

    /// The sub-corpus induced by `members` (node order preserved).
    pub fn induced(&self, members: impl IntoIterator<Item = usize>) -> Self {
        let mut keep: Vec<usize> = members.into_iter().collect();
        keep.sort_unstable();
        keep.dedup();
        let mut remap = vec![usize::MAX; self.len()];
        for (new, &old) in keep.iter().enumerate() {
            remap[old] = new;
        }
        let nodes: Vec<Node> = keep.iter().map(|&i| self.nodes[i].clone()).collect();
        let index = nodes.iter().enumerate().map(|(i, n)| (n.id.clone(), i)).collect();
        let deps = keep
            .iter()
            .map(|&old| {
                self.deps[old]
                    .iter()
                    .filter(|d| remap[d.target] != usize::MAX)
                    .map(|d| Dep { target: remap[d.target], mult: d.mult })
                    .collect()
            })
            .collect();
        Self::from_parts(nodes, index, deps)
    }

    fn from_parts(nodes: Vec<Node>, index: HashMap<NodeId, usize>, mut deps: Vec<Vec<Dep>>) -> Self {
        let mut users = vec![Vec::new(); nodes.len()];
        let mut edge_count = 0;
        for (f, ds) in deps.iter_mut().enumerate() {
            ds.sort_unstable_by_key(|d| d.target);
            for d in ds.iter() {
                users[d.target].push(f);
            }
            edge_count += ds.len();
        }
        DependencyCorpus { nodes, index, deps, users, edge_count }
    }

    /// Checks the soft invariants; an empty list means the corpus is clean.
    pub fn validate(&self) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        for (i, n) in self.nodes.iter().enumerate() {
            match (n.kind, self.deps[i].is_empty()) {
                (NodeKind::Axiom, false) => out.push(Diagnostic::AxiomWithDependencies {
                    node: n.id.clone(),
                    count: self.deps[i].len(),
                }),
                (NodeKind::Theorem, true) => out.push(Diagnostic::NonAxiomLeaf { node: n.id.clone() }),
                _ => {}
            }
        }
        out
    }
}

/// A soft-invariant violation reported by [`DependencyCorpus::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagnostic {
    NonAxiomLeaf { node: NodeId },
    AxiomWithDependencies { node: NodeId, count: usize },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::NonAxiomLeaf { node } => {
                write!(f, "non-axiom leaf: theorem `{node}` references nothing")
            }
            Diagnostic::AxiomWithDependencies { node, count } => {
                write!(f, "axiom with dependencies: `{node}` references {count} node(s)")
            }
        }
    }
}

/// Why a node or edge was rejected by [`CorpusBuilder`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuildError {
    InvalidId(String),
    DuplicateNode(String),
    UndeclaredNode(String),
    SelfEdge(String),
    ForwardEdge { from: String, to: String },
    DuplicateEdge { from: String, to: String },
    ZeroMultiplicity { from: String, to: String },
}

impl std::error::Error for BuildError {}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::InvalidId(s) => write!(f, "invalid node id {s:?}"),
            BuildError::DuplicateNode(s) => write!(f, "duplicate node `{s}`"),
            BuildError::UndeclaredNode(s) => write!(f, "edge references undeclared node `{s}`"),
            BuildError::SelfEdge(s) => write!(f, "self edge on `{s}`"),
            BuildError::ForwardEdge { from, to } => {
                write!(f, "forward edge `{from}` -> `{to}`: `{to}` is not declared before `{from}`")
            }
            BuildError::DuplicateEdge { from, to } => {
                write!(f, "duplicate edge `{from}` -> `{to}`")
            }
            BuildError::ZeroMultiplicity { from, to } => {
                write!(f, "edge `{from}` -> `{to}` has multiplicity 0")
            }
        }
    }
}

/// Incremental constructor enforcing the hard invariants.
#[derive(Default)]
pub struct CorpusBuilder {
    nodes: Vec<Node>,
    index: HashMap<NodeId, usize>,
    deps: Vec<Vec<Dep>>,
}

impl CorpusBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, id: &str) -> bool {
        self.index.contains_key(id)
    }

    pub fn add_node(&mut self, id: &str, kind: NodeKind, group: Option<&str>) -> Result<usize, BuildError> {
        self.add_node_with(id, kind, group.map(str::to_string), Vec::new())
    }

    pub fn add_node_with(
        &mut self,
        id: &str,
        kind: NodeKind,
        group: Option<String>,
        extra: Vec<(String, String)>,
    ) -> Result<usize, BuildError> {
        let nid = NodeId::new(id).ok_or_else(|| BuildError::InvalidId(id.to_string()))?;
        if self.index.contains_key(id) {
            return Err(BuildError::DuplicateNode(id.to_string()));
        }
        let ix = self.nodes.len();
        self.index.insert(nid.clone(), ix);
        self.nodes.push(Node { id: nid, kind, group, extra });
        self.deps.push(Vec::new());
        Ok(ix)
    }

    pub fn add_edge(&mut self, from: &str, to: &str, mult: u32) -> Result<(), BuildError> {
        let f = *self.index.get(from).ok_or_else(|| BuildError::UndeclaredNode(from.to_string()))?;
        let t = *self.index.get(to).ok_or_else(|| BuildError::UndeclaredNode(to.to_string()))?;
        self.add_edge_ix(f, t, mult)
    }

    pub fn add_edge_ix(&mut self, f: usize, t: usize, mult: u32) -> Result<(), BuildError> {
        let name = |i: usize| self.nodes[i].id.to_string();
        if f == t {
            return Err(BuildError::SelfEdge(name(f)));
        }
        if t > f {
            return Err(BuildError::ForwardEdge { from: name(f), to: name(t) });
        }
        if mult == 0 {
            return Err(BuildError::ZeroMultiplicity { from: name(f), to: name(t) });
        }
        if self.deps[f].iter().any(|d| d.target == t) {
            return Err(BuildError::DuplicateEdge { from: name(f), to: name(t) });
        }
        self.deps[f].push(Dep { target: t, mult });
        Ok(())
    }

    /// Adds `mult` to an existing edge, or creates it.
    pub fn bump_edge_ix(&mut self, f: usize, t: usize, mult: u32) -> Result<(), BuildError> {
        if let Some(d) = self.deps[f].iter_mut().find(|d| d.target == t) {
            d.mult += mult;
            Ok(())
        } else {
            self.add_edge_ix(f, t, mult)
        }
    }

    pub fn build(self) -> Result<DependencyCorpus, BuildError> {
        Ok(DependencyCorpus::from_parts(self.nodes, self.index, self.deps))
    }
}
