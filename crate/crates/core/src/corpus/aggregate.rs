use super::DependencyCorpus;

/// Label used for nodes that carry no group.
pub const NO_GROUP: &str = "(none)";

#[derive(Clone, Debug, PartialEq)]
pub struct GroupNode {
    pub name: String,
    /// Number of theorems (axioms excluded) in the group.
    pub theorems: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GroupEdge {
    pub from: usize,
    pub to: usize,
    /// Multiplicity-weighted references from `from` into `to`.
    pub references: u64,
    /// `references` divided by all references made by `from`; 0 when `from` makes none.
    pub weight: f64,
}

/// Groups in order of first appearance plus every ordered pair of groups
/// (self-loops included).
#[derive(Clone, Debug, PartialEq)]
pub struct GroupGraph {
    pub nodes: Vec<GroupNode>,
    pub edges: Vec<GroupEdge>,
}

impl GroupGraph {
    pub fn group(&self, name: &str) -> Option<usize> {
        self.nodes.iter().position(|g| g.name == name)
    }

    pub fn edge(&self, from: &str, to: &str) -> Option<&GroupEdge> {
        let (f, t) = (self.group(from)?, self.group(to)?);
        self.edges.iter().find(|e| e.from == f && e.to == t)
    }
}

pub fn book_aggregate(c: &DependencyCorpus) -> GroupGraph {
    let mut nodes: Vec<GroupNode> = Vec::new();
    let mut of = Vec::with_capacity(c.len());
    for n in c.nodes() {
        let name = n.group.as_deref().unwrap_or(NO_GROUP);
        let g = match nodes.iter().position(|g| g.name == name) {
            Some(g) => g,
            None => {
                nodes.push(GroupNode { name: name.to_string(), theorems: 0 });
                nodes.len() - 1
            }
        };
        if !n.is_axiom() {
            nodes[g].theorems += 1;
        }
        of.push(g);
    }
    let k = nodes.len();
    let mut refs = vec![0u64; k * k];
    for (f, t, m) in c.edge_indices() {
        refs[of[f] * k + of[t]] += m as u64;
    }
    let mut edges = Vec::with_capacity(k * k);
    for f in 0..k {
        let total: u64 = refs[f * k..(f + 1) * k].iter().sum();
        for t in 0..k {
            let r = refs[f * k + t];
            edges.push(GroupEdge {
                from: f,
                to: t,
                references: r,
                weight: if total == 0 { 0.0 } else { r as f64 / total as f64 },
            });
        }
    }
    GroupGraph { nodes, edges }
}
