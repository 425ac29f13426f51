//! Closure-scale workloads. Timings are printed; the assertions use the
//! contract limits (10 minutes) so slow CI machines do not flake.

mod common;

use std::time::{Duration, Instant};

use common::rng;
use rand::Rng;
use theoremnet_core::graphops::{future_reach, Reachability};
use theoremnet_core::{CorpusBuilder, DependencyCorpus, NodeKind};

/// `n` nodes, roughly `edges` edges, locality-biased targets like a real corpus.
fn big_corpus(n: usize, edges: usize, seed: u64) -> DependencyCorpus {
    let mut r = rng(seed);
    let axioms = 20;
    let per = edges / (n - axioms);
    let mut b = CorpusBuilder::new();
    for i in 0..n {
        let kind = if i < axioms { NodeKind::Axiom } else { NodeKind::Theorem };
        b.add_node(&format!("v{i}"), kind, None).unwrap();
        if i >= axioms {
            let k = per.min(i);
            let mut picked = std::collections::HashSet::new();
            while picked.len() < k {
                let t = if r.gen_bool(0.7) { i - 1 - r.gen_range(0..i.min(200)) } else { r.gen_range(0..i) };
                picked.insert(t);
            }
            for t in picked {
                b.add_edge_ix(i, t, 1).unwrap();
            }
        }
    }
    b.build().unwrap()
}

#[test]
fn closure_on_50k_nodes_500k_edges() {
    let c = big_corpus(50_000, 500_000, 99);
    assert!(c.edge_count() >= 499_000);
    let start = Instant::now();
    let reach = Reachability::new(&c);
    let closure = reach.closure_edge_count();
    let fut = future_reach(&c);
    let elapsed = start.elapsed();
    let bytes = reach.matrix().bytes() + fut.bytes();
    eprintln!(
        "50k/500k: closure {closure} edges, reduction {} edges, {:.1?}, {} MB of bitsets",
        reach.reduced_edges().len(),
        elapsed,
        bytes >> 20
    );
    assert_eq!(fut.total_count(), closure);
    assert!(elapsed < Duration::from_secs(600));
    assert!(bytes < 2 << 30);
}
