//! Counts for fully unfolded proofs.
//!
//! Unfolding replaces every cited result by a copy of its own proof tree,
//! `m` times for a reference of multiplicity `m`, until only axioms remain.
//! The leaves of that tree form the theorem's axiom sequence. All counts here
//! come from dynamic programming over the DAG; nothing is unfolded.

use crate::corpus::DependencyCorpus;
use crate::error::{Error, Result};
use crate::graphops::{past_set, rank};
use crate::scalar::Count;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionTally<N> {
    pub root: usize,
    /// Length of the unfolded axiom sequence.
    pub leaf_total: N,
    /// `(axiom, occurrences)` for each axiom in the past cone, ordinal order.
    pub leaf_by_axiom: Vec<(usize, N)>,
    /// Node count of the unfolded tree, root and leaves included.
    pub tree_nodes: N,
    /// Distinct results proved once each: the past-cone size.
    pub memo_steps: usize,
}

fn from_u32<N: Count>(m: u32) -> N {
    N::from_u32(m).expect("every count type holds a u32")
}

fn overflow(c: &DependencyCorpus, x: usize) -> Error {
    Error::Overflow(c.id(x).to_string())
}

/// `m·v + acc` with overflow reported against node `x`.
fn mul_add<N: Count>(acc: &N, m: u32, v: &N, c: &DependencyCorpus, x: usize) -> Result<N> {
    from_u32::<N>(m).checked_mul(v).and_then(|p| acc.checked_add(&p)).ok_or_else(|| overflow(c, x))
}

/// Axiom-sequence length of every node: 1 for an axiom, `Σ m·L(d)` otherwise.
/// A theorem citing nothing has no axiom leaves.
pub fn leaf_totals<N: Count>(c: &DependencyCorpus) -> Result<Vec<N>> {
    let mut l: Vec<N> = Vec::with_capacity(c.len());
    for x in 0..c.len() {
        let mut v = if c.is_axiom(x) { N::one() } else { N::zero() };
        if !c.is_axiom(x) {
            for d in c.deps(x) {
                v = mul_add(&v, d.mult, &l[d.target], c, x)?;
            }
        }
        l.push(v);
    }
    Ok(l)
}

/// Unfolded tree size of every node: 1 for an axiom, `1 + Σ m·T(d)` otherwise.
pub fn tree_steps_all<N: Count>(c: &DependencyCorpus) -> Result<Vec<N>> {
    let mut t: Vec<N> = Vec::with_capacity(c.len());
    for x in 0..c.len() {
        let mut v = N::one();
        if !c.is_axiom(x) {
            for d in c.deps(x) {
                v = mul_add(&v, d.mult, &t[d.target], c, x)?;
            }
        }
        t.push(v);
    }
    Ok(t)
}

pub fn tree_steps<N: Count>(c: &DependencyCorpus, id: &str) -> Result<N> {
    Ok(expansion_tally::<N>(c, id)?.tree_nodes)
}

pub fn memo_steps(c: &DependencyCorpus, id: &str) -> Result<usize> {
    Ok(past_set(c, c.ix(id)?, None).count())
}

/// Full tally for one root.
///
/// Works top-down over the past cone: `w(y)` is the number of copies of `y`
/// in the unfolded tree, so the leaf count of axiom `a` is `w(a)` and the tree
/// size is `Σ w(y)`.
pub fn expansion_tally<N: Count>(c: &DependencyCorpus, id: &str) -> Result<ExpansionTally<N>> {
    let root = c.ix(id)?;
    let cone = past_set(c, root, None);
    let mut w: Vec<N> = vec![N::zero(); c.len()];
    w[root] = N::one();
    let mut tree_nodes = N::one();
    let order: Vec<usize> = cone.iter().collect();
    // Root first, then the cone in descending ordinal: every citing node is
    // finished before the nodes it cites.
    for x in std::iter::once(root).chain(order.iter().rev().copied()) {
        if x != root {
            tree_nodes = tree_nodes.checked_add(&w[x]).ok_or_else(|| overflow(c, x))?;
        }
        if c.is_axiom(x) {
            continue;
        }
        let wx = w[x].clone();
        for d in c.deps(x) {
            w[d.target] = mul_add(&w[d.target], d.mult, &wx, c, d.target)?;
        }
    }
    let mut leaf_total = N::zero();
    let mut leaf_by_axiom = Vec::new();
    for a in order.iter().copied().filter(|&a| c.is_axiom(a)) {
        leaf_total = leaf_total.checked_add(&w[a]).ok_or_else(|| overflow(c, a))?;
        leaf_by_axiom.push((a, w[a].clone()));
    }
    if c.is_axiom(root) {
        leaf_total = N::one();
        leaf_by_axiom.push((root, N::one()));
    }
    Ok(ExpansionTally { root, leaf_total, leaf_by_axiom, tree_nodes, memo_steps: order.len() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpansionMetric {
    LeafTotal,
    TreeSteps,
}

/// All theorems by descending metric, ties by ordinal.
pub fn expansion_ranking<N: Count>(c: &DependencyCorpus, metric: ExpansionMetric) -> Result<Vec<(usize, N)>> {
    let all = match metric {
        ExpansionMetric::LeafTotal => leaf_totals::<N>(c)?,
        ExpansionMetric::TreeSteps => tree_steps_all::<N>(c)?,
    };
    Ok(rank(all).into_iter().filter(|&(x, _)| !c.is_axiom(x)).collect())
}
