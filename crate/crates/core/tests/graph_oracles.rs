mod common;

use std::collections::{BTreeSet, VecDeque};

use common::{adjacency, bfs, brute_depth, grid, random_corpus, rng};
use rand::Rng;
use theoremnet_core::graphops::{
    axiom_ball_counts, axiom_subset_tally, ball_counts, ball_growth, depths, dimension_estimate, future_cone,
    future_reach, longest_chains, non_dependents, past_cone, popularity, transitive_closure,
    transitive_reduction, Metric, Popularity, Reachability, Sources, Variant,
};
use theoremnet_core::DependencyCorpus;

/// Is `v` reachable from `u` through a path of at least two edges?
fn reachable_via_longer_path(adj: &[Vec<usize>], u: usize, v: usize) -> bool {
    adj[u].iter().any(|&w| w != v && (bfs(adj, w)[v]))
}

fn edge_set(c: &DependencyCorpus) -> BTreeSet<(usize, usize)> {
    c.edge_indices().map(|(f, t, _)| (f, t)).collect()
}

#[test]
fn reduction_matches_path_oracle_on_200_dags() {
    let mut r = rng(1);
    for case in 0..200 {
        let n = r.gen_range(1..=15);
        let axioms = r.gen_range(1..=n.min(3));
        let c = random_corpus(&mut r, n, axioms, 5);
        let adj = adjacency(&c);
        let expected: BTreeSet<_> = c
            .edge_indices()
            .filter(|&(u, v, _)| !reachable_via_longer_path(&adj, u, v))
            .map(|(u, v, _)| (u, v))
            .collect();
        let red = transitive_reduction(&c);
        assert_eq!(edge_set(&red), expected, "case {case}");
        assert!(red.edge_indices().all(|(_, _, m)| m == 1));
        // Reachability preserved.
        let radj = adjacency(&red);
        for x in 0..n {
            assert_eq!(bfs(&adj, x), bfs(&radj, x), "case {case} node {x}");
        }
    }
}

#[test]
fn closure_matches_bfs_oracle_on_200_dags() {
    let mut r = rng(2);
    for case in 0..200 {
        let n = r.gen_range(1..=15);
        let c = random_corpus(&mut r, n, 1, 4);
        let adj = adjacency(&c);
        let mut expected = BTreeSet::new();
        let mut cone_total = 0;
        for u in 0..n {
            for (v, &hit) in bfs(&adj, u).iter().enumerate() {
                if hit {
                    expected.insert((u, v));
                    cone_total += 1;
                }
            }
        }
        let clo = transitive_closure(&c);
        assert_eq!(edge_set(&clo), expected, "case {case}");
        assert_eq!(Reachability::new(&c).closure_edge_count(), cone_total);
    }
}

#[test]
fn cones_are_dual_and_match_bfs() {
    let mut r = rng(3);
    for _ in 0..50 {
        let c = random_corpus(&mut r, 30, 3, 4);
        let adj = adjacency(&c);
        let fut = future_reach(&c);
        for u in 0..c.len() {
            let past = past_cone(&c, c.id(u).as_str()).unwrap();
            let want: Vec<usize> = bfs(&adj, u).iter().enumerate().filter(|p| *p.1).map(|p| p.0).collect();
            assert_eq!(past.members, want);
            let future = future_cone(&c, c.id(u).as_str()).unwrap();
            assert_eq!(future.members, fut.row_iter(u).collect::<Vec<_>>());
            for v in 0..c.len() {
                assert_eq!(
                    past.members.contains(&v),
                    future_cone(&c, c.id(v).as_str()).unwrap().members.contains(&u)
                );
            }
            // Induced edges are exactly the edges among members and root.
            let inside = |x: usize| x == u || past.members.contains(&x);
            let want_edges: Vec<_> = c
                .edge_indices()
                .filter(|&(f, t, _)| inside(f) && inside(t))
                .map(|(f, t, _)| (f, t))
                .collect();
            assert_eq!(past.induced_edges, want_edges);
        }
    }
}

#[test]
fn depths_match_brute_force_and_survive_reduction() {
    let mut r = rng(4);
    for _ in 0..200 {
        let n = r.gen_range(1..=14);
        let c = random_corpus(&mut r, n, 1, 4);
        let adj = adjacency(&c);
        let d = depths(&c);
        for (x, &dx) in d.iter().enumerate() {
            assert_eq!(dx, brute_depth(&adj, x));
        }
        assert_eq!(depths(&transitive_reduction(&c)), d);
    }
}

/// All maximal-length paths from `x` down to `a`, enumerated exhaustively.
fn all_paths(adj: &[Vec<usize>], x: usize, a: usize) -> Vec<Vec<usize>> {
    if x == a {
        return vec![vec![a]];
    }
    adj[x]
        .iter()
        .flat_map(|&y| all_paths(adj, y, a))
        .map(|mut p| {
            p.push(x);
            p
        })
        .collect()
}

#[test]
fn chains_are_longest_and_lexicographically_first() {
    let mut r = rng(5);
    for _ in 0..100 {
        let n = r.gen_range(2..=12);
        let c = random_corpus(&mut r, n, 2, 3);
        let adj = adjacency(&c);
        let t = n - 1;
        let ch = longest_chains(&c, c.id(t).as_str()).unwrap();
        assert_eq!(ch.max_depth, brute_depth(&adj, t));
        for chain in &ch.chains {
            let paths = all_paths(&adj, t, chain.axiom);
            let best = paths.iter().map(Vec::len).max().unwrap();
            assert_eq!(chain.steps.len(), best);
            // Witness rule: from the target downward, smallest ordinal first.
            let witness = paths
                .iter()
                .filter(|p| p.len() == best)
                .map(|p| p.iter().rev().copied().collect::<Vec<_>>())
                .min()
                .unwrap();
            let mine: Vec<usize> = chain.steps.iter().rev().copied().collect();
            assert_eq!(mine, witness);
            for w in chain.steps.windows(2) {
                assert!(c.deps(w[1]).iter().any(|d| d.target == w[0]));
            }
        }
    }
}

#[test]
fn popularity_and_axiom_identities() {
    let mut r = rng(6);
    for _ in 0..30 {
        let c = random_corpus(&mut r, 40, 4, 4);
        let adj = adjacency(&c);
        let ind = popularity(&c, Popularity::Indirect);
        for &(x, k) in &ind {
            let count = (0..c.len()).filter(|&y| bfs(&adj, y)[x]).count() as u64;
            assert_eq!(k, count);
        }
        for w in ind.windows(2) {
            assert!(w[0].1 > w[1].1 || (w[0].1 == w[1].1 && w[0].0 < w[1].0));
        }
        let tally = axiom_subset_tally(&c);
        assert_eq!(tally.total(), c.theorems().count());
        for a in c.axioms() {
            let id = c.id(a).as_str();
            let f = future_cone(&c, id).unwrap().len();
            assert_eq!(f + non_dependents(&c, id).unwrap(), c.len() - 1);
        }
        // Each theorem: axioms it depends on + axioms it does not = all axioms.
        for x in c.theorems() {
            let reach = bfs(&adj, x);
            let dep = c.axioms().filter(|&a| reach[a]).count();
            let non = c.axioms().filter(|&a| !reach[a]).count();
            assert_eq!(dep + non, c.axiom_count());
        }
    }
}

fn undirected_bfs_counts(c: &DependencyCorpus, s: usize) -> Vec<usize> {
    let n = c.len();
    let mut nbr = vec![Vec::new(); n];
    for (f, t, _) in c.edge_indices() {
        nbr[f].push(t);
        nbr[t].push(f);
    }
    let mut dist = vec![usize::MAX; n];
    dist[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(x) = q.pop_front() {
        for &y in &nbr[x] {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                q.push_back(y);
            }
        }
    }
    let maxd = dist.iter().filter(|&&d| d != usize::MAX).max().copied().unwrap();
    (0..=maxd).map(|r| dist.iter().filter(|&&d| d <= r).count()).collect()
}

#[test]
fn grid_balls_match_bfs_oracle() {
    let g = grid(20, 20);
    for s in [0, 10 * 20 + 10, 399, 57] {
        assert_eq!(ball_counts(&g, s, Metric::Undirected), undirected_bfs_counts(&g, s));
    }
    // The single axiom is the corner; forward balls are the corner diamonds.
    let counts = axiom_ball_counts(&g);
    assert_eq!(counts, undirected_bfs_counts(&g, 0));
}

#[test]
fn grid_dimension_is_two() {
    let g = grid(40, 40);
    let centre = 20 * 40 + 20;
    let counts: Vec<f64> =
        ball_counts(&g, centre, Metric::Undirected).into_iter().map(|k| k as f64).collect();
    for (r, &k) in counts.iter().enumerate().take(20) {
        assert_eq!(k, (2 * r * r + 2 * r + 1) as f64);
    }
    let d = dimension_estimate(&counts).unwrap();
    for (r, est) in d.iter().enumerate().take(16).skip(8) {
        let est = est.unwrap();
        assert!((est - 2.0).abs() <= 0.2, "d({r}) = {est}");
    }
}

#[test]
fn every_node_growth_averages_single_balls() {
    let mut r = rng(7);
    let c = random_corpus(&mut r, 25, 2, 3);
    let g = ball_growth::<f64>(&c, Sources::EveryNode, Variant::Raw, Metric::Undirected);
    let per: Vec<Vec<usize>> = (0..c.len()).map(|x| undirected_bfs_counts(&c, x)).collect();
    let len = per.iter().map(Vec::len).max().unwrap();
    assert_eq!(g.counts.len(), len);
    for rr in 0..len {
        let mean = per.iter().map(|v| *v.get(rr).unwrap_or(v.last().unwrap()) as f64).sum::<f64>() / 25.0;
        assert!((g.counts[rr] - mean).abs() < 1e-12);
    }
    for w in g.counts.windows(2) {
        assert!(w[0] <= w[1]);
    }
    assert!(*g.counts.last().unwrap() <= c.len() as f64);

    let directed = ball_growth::<f32>(&c, Sources::EveryNode, Variant::Reduced, Metric::Directed);
    assert!(directed.counts.iter().all(|&k| k >= 1.0));
}
