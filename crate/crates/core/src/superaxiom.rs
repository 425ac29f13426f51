//! Promoting a theorem to an axiom and measuring what it saves.

use num_rational::Ratio;
use rayon::prelude::*;

use crate::bits::BitSet;
use crate::corpus::DependencyCorpus;
use crate::error::{Error, Result};
use crate::graphops::{cone_from, depths, future_set, past_set, ConeResult, Direction, Reachability};

/// Past cone of `id` after cutting the outgoing edges of every node in `cut`.
pub fn cone_with_superaxioms(c: &DependencyCorpus, id: &str, cut: &[&str]) -> Result<ConeResult> {
    let root = c.ix(id)?;
    let mut set = BitSet::new(c.len());
    for s in cut {
        set.insert(c.ix(s)?);
    }
    Ok(cone_from(c, root, Direction::Past, past_set(c, root, Some(&set)), Some(&set)))
}

/// The cone of one theorem with and without the extra axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperaxiomEffect {
    pub before: ConeResult,
    pub after: ConeResult,
}

impl SuperaxiomEffect {
    pub fn nodes_saved(&self) -> usize {
        self.before.members.len() - self.after.members.len()
    }

    pub fn edges_saved(&self) -> usize {
        self.before.induced_edges.len() - self.after.induced_edges.len()
    }
}

pub fn superaxiom_effect(c: &DependencyCorpus, id: &str, cut: &[&str]) -> Result<SuperaxiomEffect> {
    let root = c.ix(id)?;
    Ok(SuperaxiomEffect {
        before: cone_from(c, root, Direction::Past, past_set(c, root, None), None),
        after: cone_with_superaxioms(c, id, cut)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperaxiomReport {
    pub candidate: usize,
    /// Cone-size reduction per node (0 outside the candidate's future cone).
    pub shortening: Vec<u32>,
    /// Mean over all theorems, unaffected ones included.
    pub avg_shortening: Ratio<u64>,
    pub max_shortening: u32,
    pub argmax_shortening: Vec<usize>,
    pub depth_reduction: Vec<u32>,
    pub avg_depth_reduction: Ratio<u64>,
    pub max_depth_reduction: u32,
    pub argmax_depth_reduction: Vec<usize>,
}

/// Precomputed reachability and depths shared by every candidate.
pub struct SuperaxiomScanner<'a> {
    corpus: &'a DependencyCorpus,
    reach: Reachability,
    depth: Vec<u32>,
    theorems: u64,
}

fn summarize(c: &DependencyCorpus, values: &[u32], theorems: u64) -> (Ratio<u64>, u32, Vec<usize>) {
    let total: u64 = values.iter().map(|&v| v as u64).sum();
    let max = values.iter().copied().max().unwrap_or(0);
    let argmax = if max == 0 {
        Vec::new()
    } else {
        (0..values.len()).filter(|&x| values[x] == max && !c.is_axiom(x)).collect()
    };
    (Ratio::new(total, theorems.max(1)), max, argmax)
}

impl<'a> SuperaxiomScanner<'a> {
    pub fn new(corpus: &'a DependencyCorpus) -> Self {
        SuperaxiomScanner {
            corpus,
            reach: Reachability::new(corpus),
            depth: depths(corpus),
            theorems: corpus.theorems().count() as u64,
        }
    }

    pub fn report(&self, id: &str) -> Result<SuperaxiomReport> {
        let s = self.corpus.ix(id)?;
        if self.corpus.is_axiom(s) {
            return Err(Error::NotTheorem(id.to_string()));
        }
        Ok(self.report_ix(s))
    }

    /// Recomputes reach and depth only inside the candidate's future cone;
    /// everything else is unchanged by cutting the candidate's edges.
    fn report_ix(&self, s: usize) -> SuperaxiomReport {
        let c = self.corpus;
        let n = c.len();
        let future = future_set(c, s);
        let words = n.div_ceil(64);
        let mut slot = vec![usize::MAX; n];
        let mut rows: Vec<Vec<u64>> = Vec::new();
        let mut new_depth = vec![0u32; n];
        let mut shortening = vec![0u32; n];
        let mut depth_reduction = vec![0u32; n];

        for x in future.iter() {
            let mut row = vec![0u64; words];
            let mut d_new = 0u32;
            for d in c.deps(x) {
                let t = d.target;
                row[t / 64] |= 1 << (t % 64);
                let below = if t == s {
                    0
                } else if future.contains(t) {
                    for (a, b) in row.iter_mut().zip(&rows[slot[t]]) {
                        *a |= *b;
                    }
                    new_depth[t]
                } else {
                    for (a, b) in row.iter_mut().zip(self.reach.past_row(t)) {
                        *a |= *b;
                    }
                    self.depth[t]
                };
                d_new = d_new.max(below + 1);
            }
            let size: usize = row.iter().map(|w| w.count_ones() as usize).sum();
            shortening[x] = (self.reach.past_size(x) - size) as u32;
            new_depth[x] = d_new;
            depth_reduction[x] = self.depth[x] - d_new;
            slot[x] = rows.len();
            rows.push(row);
        }
        let (avg_s, max_s, arg_s) = summarize(c, &shortening, self.theorems);
        let (avg_d, max_d, arg_d) = summarize(c, &depth_reduction, self.theorems);
        SuperaxiomReport {
            candidate: s,
            shortening,
            avg_shortening: avg_s,
            max_shortening: max_s,
            argmax_shortening: arg_s,
            depth_reduction,
            avg_depth_reduction: avg_d,
            max_depth_reduction: max_d,
            argmax_depth_reduction: arg_d,
        }
    }

    /// One report per theorem, in ordinal order.
    pub fn scan_all(&self) -> Vec<SuperaxiomReport> {
        let cands: Vec<usize> = self.corpus.theorems().collect();
        cands.par_iter().map(|&s| self.report_ix(s)).collect()
    }
}

pub fn shortening_scan(c: &DependencyCorpus, candidate: &str) -> Result<SuperaxiomReport> {
    SuperaxiomScanner::new(c).report(candidate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{CorpusBuilder, NodeKind};

    /// D is the axiom; A cites B cites C cites D.
    fn chain() -> DependencyCorpus {
        let mut b = CorpusBuilder::new();
        b.add_node("D", NodeKind::Axiom, None).unwrap();
        for id in ["C", "B", "A"] {
            b.add_node(id, NodeKind::Theorem, None).unwrap();
        }
        b.add_edge("C", "D", 1).unwrap();
        b.add_edge("B", "C", 1).unwrap();
        b.add_edge("A", "B", 1).unwrap();
        b.build().unwrap()
    }

    #[test]
    fn chain_depth_and_shortening() {
        let c = chain();
        let r = shortening_scan(&c, "C").unwrap();
        assert_eq!(r.depth_reduction, vec![0, 0, 1, 1]);
        assert_eq!(r.shortening, vec![0, 0, 1, 1]);
        assert_eq!(r.avg_shortening, Ratio::new(2, 3));
        assert_eq!(r.argmax_shortening, vec![2, 3]);

        // Orientation check: with C promoted, A's depth drops from 3 to 2
        // measured in edges from A to the nearest leaf (A→B→C).
        let d = crate::graphops::depths(&c);
        assert_eq!(d[3] - r.depth_reduction[3], 2);
    }

    #[test]
    fn empty_cut_is_plain_cone() {
        let c = chain();
        let e = superaxiom_effect(&c, "A", &[]).unwrap();
        assert_eq!(e.before, e.after);
        let e = superaxiom_effect(&c, "A", &["B"]).unwrap();
        assert_eq!(e.after.members, vec![2]);
        assert_eq!((e.nodes_saved(), e.edges_saved()), (2, 2));
    }

    #[test]
    fn cut_covering_direct_deps() {
        // t cites p and q directly; both promoted, so the cone is just {p, q}.
        let mut b = CorpusBuilder::new();
        b.add_node("a", NodeKind::Axiom, None).unwrap();
        b.add_node("p", NodeKind::Theorem, None).unwrap();
        b.add_node("q", NodeKind::Theorem, None).unwrap();
        b.add_node("t", NodeKind::Theorem, None).unwrap();
        b.add_edge("p", "a", 1).unwrap();
        b.add_edge("q", "p", 1).unwrap();
        b.add_edge("t", "p", 1).unwrap();
        b.add_edge("t", "q", 1).unwrap();
        let c = b.build().unwrap();
        let cone = cone_with_superaxioms(&c, "t", &["p", "q"]).unwrap();
        assert_eq!(cone.members, vec![1, 2]);
        assert_eq!(cone.induced_edges, vec![(3, 1), (3, 2)]);
    }

    #[test]
    fn axioms_are_not_candidates() {
        assert!(matches!(shortening_scan(&chain(), "D"), Err(Error::NotTheorem(_))));
    }

    #[test]
    fn unreferenced_candidate_changes_nothing() {
        let c = chain();
        let r = shortening_scan(&c, "A").unwrap();
        assert!(r.shortening.iter().all(|&v| v == 0));
        assert_eq!(r.max_shortening, 0);
        assert!(r.argmax_shortening.is_empty());
    }
}
