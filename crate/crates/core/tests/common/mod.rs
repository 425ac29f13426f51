#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use theoremnet_core::{CorpusBuilder, DependencyCorpus, NodeKind};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random valid corpus: the first `axioms` nodes are axioms, every theorem
/// cites between one and `max_deps` earlier nodes.
pub fn random_corpus(r: &mut ChaCha8Rng, n: usize, axioms: usize, max_deps: usize) -> DependencyCorpus {
    let mut b = CorpusBuilder::new();
    for i in 0..n {
        let kind = if i < axioms { NodeKind::Axiom } else { NodeKind::Theorem };
        let group = format!("g{}", i % 3);
        b.add_node(&format!("n{i}"), kind, Some(&group)).unwrap();
        if i >= axioms {
            let k = r.gen_range(1..=max_deps.min(i));
            let mut targets: Vec<usize> = Vec::new();
            while targets.len() < k {
                let t = r.gen_range(0..i);
                if !targets.contains(&t) {
                    targets.push(t);
                }
            }
            for t in targets {
                let m = if r.gen_bool(0.2) { r.gen_range(2..=3) } else { 1 };
                b.add_edge_ix(i, t, m).unwrap();
            }
        }
    }
    b.build().unwrap()
}

/// Plain adjacency lists (dependency direction) for oracles.
pub fn adjacency(c: &DependencyCorpus) -> Vec<Vec<usize>> {
    (0..c.len()).map(|i| c.deps(i).iter().map(|d| d.target).collect()).collect()
}

/// Nodes reachable from `s` by following `adj`, excluding `s`.
pub fn bfs(adj: &[Vec<usize>], s: usize) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Longest path from `x` to any sink, by exhaustive recursion.
pub fn brute_depth(adj: &[Vec<usize>], x: usize) -> u32 {
    adj[x].iter().map(|&y| 1 + brute_depth(adj, y)).max().unwrap_or(0)
}

/// A `w × h` grid as a corpus: each cell cites its left and upper neighbours.
pub fn grid(w: usize, h: usize) -> DependencyCorpus {
    let mut b = CorpusBuilder::new();
    for y in 0..h {
        for x in 0..w {
            let kind = if x == 0 && y == 0 { NodeKind::Axiom } else { NodeKind::Theorem };
            b.add_node(&format!("{x}_{y}"), kind, None).unwrap();
        }
    }
    for y in 0..h {
        for x in 0..w {
            let i = y * w + x;
            if x > 0 {
                b.add_edge_ix(i, i - 1, 1).unwrap();
            }
            if y > 0 {
                b.add_edge_ix(i, i - w, 1).unwrap();
            }
        }
    }
    b.build().unwrap()
}
