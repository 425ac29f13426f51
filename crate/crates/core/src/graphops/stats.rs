//! Degree, popularity and axiom-dependence statistics.

use std::collections::BTreeMap;

use crate::bits::BitSet;
use crate::corpus::DependencyCorpus;
use crate::error::{Error, Result};
use crate::scalar::{real, Real};

use super::reach::{future_set, Reachability};

#[derive(Clone, Debug, PartialEq)]
pub struct DegreeStats<R> {
    /// Mean number of distinct referenced nodes, over all nodes.
    pub mean: R,
    /// Mean multiplicity-weighted reference count, over all nodes.
    pub mean_weighted: R,
    pub max: usize,
    pub argmax: Vec<usize>,
    pub max_weighted: u64,
    pub argmax_weighted: Vec<usize>,
    /// `histogram[k]` = number of nodes with out-degree `k`.
    pub histogram: Vec<usize>,
}

pub fn degree_stats<R: Real>(c: &DependencyCorpus) -> DegreeStats<R> {
    let n = c.len();
    let deg: Vec<usize> = (0..n).map(|i| c.deps(i).len()).collect();
    let wdeg: Vec<u64> = (0..n).map(|i| c.deps(i).iter().map(|d| d.mult as u64).sum()).collect();
    let max = deg.iter().copied().max().unwrap_or(0);
    let max_weighted = wdeg.iter().copied().max().unwrap_or(0);
    let mut histogram = vec![0; max + 1];
    for &d in &deg {
        histogram[d] += 1;
    }
    let mean = |total: f64| if n == 0 { R::zero() } else { real(total / n as f64) };
    DegreeStats {
        mean: mean(c.edge_count() as f64),
        mean_weighted: mean(c.reference_count() as f64),
        max,
        argmax: (0..n).filter(|&i| n > 0 && deg[i] == max).collect(),
        max_weighted,
        argmax_weighted: (0..n).filter(|&i| wdeg[i] == max_weighted).collect(),
        histogram,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Popularity {
    /// Number of distinct proofs citing the node.
    Direct,
    /// Total citations, counting multiplicity.
    DirectWeighted,
    /// Future-cone size.
    Indirect,
}

/// `(node, count)` for every node, descending by count, ties by ordinal.
pub fn popularity(c: &DependencyCorpus, mode: Popularity) -> Vec<(usize, u64)> {
    let counts: Vec<u64> = match mode {
        Popularity::Direct => (0..c.len()).map(|i| c.users(i).len() as u64).collect(),
        Popularity::DirectWeighted => {
            let mut v = vec![0u64; c.len()];
            for (_, t, m) in c.edge_indices() {
                v[t] += m as u64;
            }
            v
        }
        Popularity::Indirect => Reachability::new(c).future_sizes().into_iter().map(|s| s as u64).collect(),
    };
    rank(counts)
}

pub(crate) fn rank<T: Ord + Clone>(counts: Vec<T>) -> Vec<(usize, T)> {
    let mut out: Vec<(usize, T)> = counts.into_iter().enumerate().collect();
    out.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    out
}

/// Axioms each node depends on, as sets over axiom positions
/// (`position` = rank of the axiom among axioms in ordinal order).
#[derive(Clone, Debug)]
pub struct AxiomDependence {
    pub axioms: Vec<usize>,
    pub sets: Vec<BitSet>,
}

impl AxiomDependence {
    pub fn new(c: &DependencyCorpus) -> Self {
        let axioms: Vec<usize> = c.axioms().collect();
        let k = axioms.len();
        let mut sets: Vec<BitSet> = Vec::with_capacity(c.len());
        let mut pos = 0;
        for x in 0..c.len() {
            let mut s = BitSet::new(k);
            if c.is_axiom(x) {
                s.insert(pos);
                pos += 1;
            }
            for d in c.deps(x) {
                s.union_with(&sets[d.target]);
            }
            sets.push(s);
        }
        AxiomDependence { axioms, sets }
    }

    /// Axiom ordinals in the past cone of `x`.
    pub fn of(&self, x: usize) -> Vec<usize> {
        self.sets[x].iter().map(|p| self.axioms[p]).filter(|&a| a != x).collect()
    }
}

pub fn axiom_dependence(c: &DependencyCorpus, id: &str) -> Result<Vec<usize>> {
    let x = c.ix(id)?;
    Ok(AxiomDependence::new(c).of(x))
}

/// Theorem counts per occurring axiom subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetTally {
    /// Axiom ordinals; subset bit `p` refers to `axioms[p]`.
    pub axioms: Vec<usize>,
    pub counts: BTreeMap<BitSet, usize>,
}

impl SubsetTally {
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    /// Number of theorems depending on exactly `size` axioms.
    pub fn with_size(&self, size: usize) -> usize {
        self.counts.iter().filter(|(s, _)| s.count() == size).map(|(_, n)| n).sum()
    }

    pub fn count(&self, axioms: &[usize]) -> usize {
        let mut key = BitSet::new(self.axioms.len());
        for a in axioms {
            match self.axioms.iter().position(|x| x == a) {
                Some(p) => {
                    key.insert(p);
                }
                None => return 0,
            }
        }
        self.counts.get(&key).copied().unwrap_or(0)
    }

    /// Entries as axiom-ordinal lists, largest count first, ties by subset.
    pub fn ranked(&self) -> Vec<(Vec<usize>, usize)> {
        let mut v: Vec<_> = self
            .counts
            .iter()
            .map(|(s, &n)| (s.iter().map(|p| self.axioms[p]).collect::<Vec<_>>(), n))
            .collect();
        v.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        v
    }
}

pub fn axiom_subset_tally(c: &DependencyCorpus) -> SubsetTally {
    let dep = AxiomDependence::new(c);
    let mut counts = BTreeMap::new();
    for x in c.theorems() {
        *counts.entry(dep.sets[x].clone()).or_insert(0) += 1;
    }
    SubsetTally { axioms: dep.axioms, counts }
}

/// Other nodes (theorems and axioms) whose past cone excludes `axiom`.
pub fn non_dependents(c: &DependencyCorpus, axiom: &str) -> Result<usize> {
    let a = c.ix(axiom)?;
    if !c.is_axiom(a) {
        return Err(Error::NotAxiom(axiom.to_string()));
    }
    let fut = future_set(c, a);
    Ok((0..c.len()).filter(|&x| x != a && !fut.contains(x)).count())
}
