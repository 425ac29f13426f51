//! Longest paths toward the axioms.

use crate::corpus::DependencyCorpus;
use crate::error::Result;

use super::reach::past_set;

/// Longest path length (in edges) from each node down to a leaf.
pub fn depths(c: &DependencyCorpus) -> Vec<u32> {
    let mut depth = vec![0u32; c.len()];
    for x in 0..c.len() {
        depth[x] = c.deps(x).iter().map(|d| depth[d.target] + 1).max().unwrap_or(0);
    }
    depth
}

pub fn max_depth(c: &DependencyCorpus, id: &str) -> Result<u32> {
    let x = c.ix(id)?;
    let cone = past_set(c, x, None);
    let mut depth = vec![0u32; c.len()];
    for y in cone.iter().chain(std::iter::once(x)) {
        depth[y] = c.deps(y).iter().map(|d| depth[d.target] + 1).max().unwrap_or(0);
    }
    Ok(depth[x])
}

/// A longest path from an axiom up to a target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathChain {
    pub axiom: usize,
    /// Node ordinals from the axiom to the target.
    pub steps: Vec<usize>,
}

impl PathChain {
    /// Edge count.
    pub fn len(&self) -> usize {
        self.steps.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.steps.len() <= 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chains {
    pub target: usize,
    pub max_depth: u32,
    /// One chain per axiom in the past cone, in axiom ordinal order.
    pub chains: Vec<PathChain>,
}

/// For every axiom in the past cone of `id`, a maximum-length path from it to
/// `id`. At each step the witness moves to the lowest-ordinal dependency that
/// still lies on a longest path.
pub fn longest_chains(c: &DependencyCorpus, id: &str) -> Result<Chains> {
    let target = c.ix(id)?;
    let cone: Vec<usize> = past_set(c, target, None).iter().collect();
    let mut order = cone.clone();
    order.push(target);

    const NONE: i64 = -1;
    let mut dist = vec![NONE; c.len()];
    let mut chains = Vec::new();
    for &a in cone.iter().filter(|&&a| c.is_axiom(a)) {
        // dist[y] = longest path from y down to a, or NONE.
        for &y in &order {
            dist[y] = NONE;
        }
        dist[a] = 0;
        for &y in order.iter().filter(|&&y| y > a) {
            dist[y] = c
                .deps(y)
                .iter()
                .filter(|d| dist[d.target] != NONE)
                .map(|d| dist[d.target] + 1)
                .max()
                .unwrap_or(NONE);
        }
        let mut steps = vec![target];
        let mut y = target;
        while y != a {
            let want = dist[y] - 1;
            y = c.deps(y).iter().find(|d| dist[d.target] == want).expect("longest path continues").target;
            steps.push(y);
        }
        steps.reverse();
        chains.push(PathChain { axiom: a, steps });
    }
    let max_depth = max_depth(c, id)?;
    Ok(Chains { target, max_depth, chains })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthHistogram {
    /// `(theorem, depth)` in ordinal order.
    pub depths: Vec<(usize, u32)>,
    /// `counts[d]` = number of theorems at depth `d`.
    pub counts: Vec<usize>,
}

impl DepthHistogram {
    pub fn max(&self) -> u32 {
        self.counts.len().saturating_sub(1) as u32
    }
}

pub fn depth_histogram(c: &DependencyCorpus) -> DepthHistogram {
    let all = depths(c);
    let depths: Vec<(usize, u32)> = c.theorems().map(|x| (x, all[x])).collect();
    let top = depths.iter().map(|&(_, d)| d as usize + 1).max().unwrap_or(0);
    let mut counts = vec![0; top];
    for &(_, d) in &depths {
        counts[d as usize] += 1;
    }
    DepthHistogram { depths, counts }
}
