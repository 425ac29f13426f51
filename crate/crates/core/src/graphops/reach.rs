//! Cones, reachability, transitive reduction and closure.

use crate::bits::{BitMatrix, BitSet};
use crate::corpus::{Dep, DependencyCorpus};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Toward the axioms: everything the root relies on.
    Past,
    /// Toward later results: everything relying on the root.
    Future,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeResult {
    pub root: usize,
    pub direction: Direction,
    /// Ascending ordinals, root excluded.
    pub members: Vec<usize>,
    /// Edges `(from, to)` among members and root, sorted.
    pub induced_edges: Vec<(usize, usize)>,
}

impl ConeResult {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub fn direct_deps<'a>(c: &'a DependencyCorpus, id: &str) -> Result<&'a [Dep]> {
    Ok(c.deps(c.ix(id)?))
}

/// Past cone of `root` as a bitset; `cut` nodes are kept but not expanded.
pub(crate) fn past_set(c: &DependencyCorpus, root: usize, cut: Option<&BitSet>) -> BitSet {
    let mut seen = BitSet::new(c.len());
    let mut stack = vec![root];
    while let Some(x) = stack.pop() {
        if cut.is_some_and(|s| s.contains(x)) {
            continue;
        }
        for d in c.deps(x) {
            if seen.insert(d.target) {
                stack.push(d.target);
            }
        }
    }
    seen
}

pub(crate) fn future_set(c: &DependencyCorpus, root: usize) -> BitSet {
    let mut seen = BitSet::new(c.len());
    let mut stack = vec![root];
    while let Some(x) = stack.pop() {
        for &u in c.users(x) {
            if seen.insert(u) {
                stack.push(u);
            }
        }
    }
    seen
}

/// Edges of `c` among `members ∪ {root}`; `cut` nodes contribute no outgoing edges.
pub(crate) fn induced(
    c: &DependencyCorpus,
    root: usize,
    members: &BitSet,
    cut: Option<&BitSet>,
) -> Vec<(usize, usize)> {
    let inside = |x: usize| x == root || members.contains(x);
    let mut out = Vec::new();
    for f in std::iter::once(root).chain(members.iter()) {
        if cut.is_some_and(|s| s.contains(f)) {
            continue;
        }
        for d in c.deps(f) {
            if inside(d.target) {
                out.push((f, d.target));
            }
        }
    }
    out.sort_unstable();
    out
}

pub(crate) fn cone_from(
    c: &DependencyCorpus,
    root: usize,
    direction: Direction,
    set: BitSet,
    cut: Option<&BitSet>,
) -> ConeResult {
    ConeResult { root, direction, members: set.iter().collect(), induced_edges: induced(c, root, &set, cut) }
}

pub fn past_cone(c: &DependencyCorpus, id: &str) -> Result<ConeResult> {
    let root = c.ix(id)?;
    Ok(cone_from(c, root, Direction::Past, past_set(c, root, None), None))
}

pub fn future_cone(c: &DependencyCorpus, id: &str) -> Result<ConeResult> {
    let root = c.ix(id)?;
    Ok(cone_from(c, root, Direction::Future, future_set(c, root), None))
}

/// All-pairs reachability: row `x` holds the past cone of `x`.
///
/// Built in one ordinal sweep; also records which edges survive transitive
/// reduction, since both fall out of the same pass.
pub struct Reachability {
    past: BitMatrix,
    reduced: Vec<(usize, usize)>,
}

impl Reachability {
    pub fn new(c: &DependencyCorpus) -> Self {
        let n = c.len();
        let mut past = BitMatrix::new(n, n);
        let mut reduced = Vec::new();
        for x in 0..n {
            // Descending targets: a later dep can only reach an earlier one, so
            // any dep already covered is implied by a longer path.
            for d in c.deps(x).iter().rev() {
                if past.contains(x, d.target) {
                    continue;
                }
                reduced.push((x, d.target));
                past.union_rows(x, d.target);
                past.insert(x, d.target);
            }
        }
        reduced.sort_unstable();
        Reachability { past, reduced }
    }

    pub fn len(&self) -> usize {
        self.past.rows()
    }

    pub fn is_empty(&self) -> bool {
        self.past.rows() == 0
    }

    /// Does `from` (transitively) depend on `to`?
    pub fn reaches(&self, from: usize, to: usize) -> bool {
        self.past.contains(from, to)
    }

    pub fn past_row(&self, x: usize) -> &[u64] {
        self.past.row(x)
    }

    pub fn past_set(&self, x: usize) -> BitSet {
        self.past.row_set(x)
    }

    pub fn past_size(&self, x: usize) -> usize {
        self.past.row_count(x)
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.past
    }

    /// Number of edges in the transitive closure.
    pub fn closure_edge_count(&self) -> usize {
        self.past.total_count()
    }

    pub fn reduced_edges(&self) -> &[(usize, usize)] {
        &self.reduced
    }

    /// Future-cone sizes for every node, from column counts of the matrix.
    pub fn future_sizes(&self) -> Vec<usize> {
        let mut out = vec![0usize; self.len()];
        for x in 0..self.len() {
            for t in self.past.row_iter(x) {
                out[t] += 1;
            }
        }
        out
    }
}

/// Row `x` holds the future cone of `x`; built by a reverse ordinal sweep.
pub fn future_reach(c: &DependencyCorpus) -> BitMatrix {
    let n = c.len();
    let mut fut = BitMatrix::new(n, n);
    for x in (0..n).rev() {
        for &u in c.users(x) {
            fut.union_rows(x, u);
            fut.insert(x, u);
        }
    }
    fut
}

/// Minimal edge set with the same reachability; multiplicities become 1.
pub fn transitive_reduction(c: &DependencyCorpus) -> DependencyCorpus {
    let r = Reachability::new(c);
    c.with_edges(r.reduced_edges().iter().map(|&(f, t)| (f, t, 1)))
}

/// Every reachable pair as an edge. Quadratic in size; prefer
/// [`Reachability`] for large corpora.
pub fn transitive_closure(c: &DependencyCorpus) -> DependencyCorpus {
    let r = Reachability::new(c);
    let edges: Vec<_> = (0..c.len()).flat_map(|x| r.past.row_iter(x).map(move |t| (x, t, 1))).collect();
    c.with_edges(edges)
}
