//! DAG analytics over a [`DependencyCorpus`](crate::corpus::DependencyCorpus).
//!
//! "Past" follows edges toward the axioms; "future" follows them backward
//! toward the results that use a node.

mod growth;
mod paths;
mod reach;
mod stats;

pub use growth::{
    axiom_ball_counts, ball_counts, ball_growth, dimension_estimate, GrowthCurve, Metric, Sources, Variant,
};
pub use paths::{depth_histogram, depths, longest_chains, max_depth, Chains, DepthHistogram, PathChain};
pub use reach::{
    direct_deps, future_cone, future_reach, past_cone, transitive_closure, transitive_reduction, ConeResult,
    Direction, Reachability,
};
pub use stats::{
    axiom_dependence, axiom_subset_tally, degree_stats, non_dependents, popularity, AxiomDependence,
    DegreeStats, Popularity, SubsetTally,
};

pub(crate) use reach::{cone_from, future_set, past_set};
pub(crate) use stats::rank;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{CorpusBuilder, DependencyCorpus, NodeKind};

    fn build(nodes: &[(&str, bool)], edges: &[(&str, &str, u32)]) -> DependencyCorpus {
        let mut b = CorpusBuilder::new();
        for &(id, ax) in nodes {
            let kind = if ax { NodeKind::Axiom } else { NodeKind::Theorem };
            b.add_node(id, kind, None).unwrap();
        }
        for &(f, t, m) in edges {
            b.add_edge(f, t, m).unwrap();
        }
        b.build().unwrap()
    }

    /// D axiom; C→D, B→C, A→B plus shortcut A→C.
    fn chain() -> DependencyCorpus {
        build(
            &[("D", true), ("C", false), ("B", false), ("A", false)],
            &[("C", "D", 1), ("B", "C", 1), ("A", "B", 1), ("A", "C", 2)],
        )
    }

    #[test]
    fn shortcut_is_reduced_away() {
        let r = transitive_reduction(&chain());
        assert_eq!(r.edge_count(), 3);
        assert!(r.deps(3).iter().all(|d| d.target == 2 && d.mult == 1));
    }

    #[test]
    fn chain_closure_counts() {
        let c = build(
            &[("a", true), ("b", false), ("c", false), ("d", false)],
            &[("b", "a", 1), ("c", "b", 1), ("d", "c", 1)],
        );
        assert_eq!(transitive_closure(&c).edge_count(), 6);
        assert_eq!(Reachability::new(&c).closure_edge_count(), 6);
    }

    #[test]
    fn cones_and_duality() {
        let c = chain();
        let p = past_cone(&c, "A").unwrap();
        assert_eq!(p.members, vec![0, 1, 2]);
        assert_eq!(p.induced_edges.len(), 4);
        let f = future_cone(&c, "D").unwrap();
        assert_eq!(f.members, vec![1, 2, 3]);
        assert!(past_cone(&c, "D").unwrap().is_empty());
        assert!(past_cone(&c, "nope").is_err());
    }

    #[test]
    fn depth_of_chain() {
        let c = chain();
        assert_eq!(depths(&c), vec![0, 1, 2, 3]);
        let ch = longest_chains(&c, "A").unwrap();
        assert_eq!(ch.max_depth, 3);
        assert_eq!(ch.chains.len(), 1);
        assert_eq!(ch.chains[0].steps, vec![0, 1, 2, 3]);
        assert_eq!(ch.chains[0].len(), 3);
    }

    #[test]
    fn diamond_depths_by_hand() {
        // ax ← p ← q, ax ← r, top cites q and r, q also cites ax directly.
        let c = build(
            &[("ax", true), ("p", false), ("r", false), ("q", false), ("top", false)],
            &[
                ("p", "ax", 1),
                ("r", "ax", 1),
                ("q", "p", 1),
                ("q", "ax", 1),
                ("top", "q", 1),
                ("top", "r", 1),
            ],
        );
        assert_eq!(depths(&c), vec![0, 1, 1, 2, 3]);
        let h = depth_histogram(&c);
        assert_eq!(h.counts, vec![0, 2, 1, 1]);
        assert_eq!(h.max(), 3);
    }

    #[test]
    fn ties_prefer_lowest_ordinal() {
        // Two equal-length routes from ax to t: via m1 (ordinal 1) or m2 (ordinal 2).
        let c = build(
            &[("ax", true), ("m1", false), ("m2", false), ("t", false)],
            &[("m1", "ax", 1), ("m2", "ax", 1), ("t", "m1", 1), ("t", "m2", 1)],
        );
        let ch = longest_chains(&c, "t").unwrap();
        assert_eq!(ch.chains[0].steps, vec![0, 1, 3]);
    }

    #[test]
    fn degree_and_popularity() {
        let c = chain();
        let d: DegreeStats<f64> = degree_stats(&c);
        assert_eq!(d.mean, 1.0);
        assert_eq!(d.mean_weighted, 1.25);
        assert_eq!((d.max, d.argmax.clone()), (2, vec![3]));
        assert_eq!(d.histogram, vec![1, 2, 1]);
        let single = build(&[("a", true)], &[]);
        assert_eq!(degree_stats::<f64>(&single).mean, 0.0);

        assert_eq!(popularity(&c, Popularity::Direct)[0], (1, 2));
        assert_eq!(popularity(&c, Popularity::DirectWeighted)[0], (1, 3));
        assert_eq!(popularity(&c, Popularity::Indirect)[0], (0, 3));
    }

    #[test]
    fn axiom_subsets_and_non_dependents() {
        let c = build(
            &[("a1", true), ("a2", true), ("t1", false), ("t2", false), ("t3", false)],
            &[("t1", "a1", 1), ("t2", "a2", 1), ("t3", "t1", 1), ("t3", "t2", 1)],
        );
        let t = axiom_subset_tally(&c);
        assert_eq!(t.total(), 3);
        assert_eq!(t.with_size(1), 2);
        assert_eq!(t.count(&[0, 1]), 1);
        assert_eq!(t.counts.len(), 3);
        assert_eq!(axiom_dependence(&c, "t3").unwrap(), vec![0, 1]);
        assert_eq!(axiom_dependence(&c, "a1").unwrap(), Vec::<usize>::new());
        assert_eq!(non_dependents(&c, "a1").unwrap(), 2);
        assert!(non_dependents(&c, "t1").is_err());
        for a in ["a1", "a2"] {
            let f = future_cone(&c, a).unwrap().len();
            assert_eq!(f + non_dependents(&c, a).unwrap(), c.len() - 1);
        }
    }

    #[test]
    fn axiom_balls() {
        let c = chain();
        assert_eq!(axiom_ball_counts(&c), vec![1, 2, 4]);
        let r = transitive_reduction(&c);
        assert_eq!(axiom_ball_counts(&r), vec![1, 2, 3, 4]);
        let single = build(&[("a", true)], &[]);
        let g: GrowthCurve<f64> = ball_growth(&single, Sources::Axioms, Variant::Raw, Metric::Undirected);
        assert_eq!(g.counts, vec![1.0]);
    }

    #[test]
    fn dimension_of_a_line() {
        let counts: Vec<f64> = (0..200).map(|r| (2 * r + 1) as f64).collect();
        let d = dimension_estimate(&counts).unwrap();
        assert!(d[0].is_none());
        assert!((d[150].unwrap() - 1.0).abs() < 0.01);
        assert!(dimension_estimate(&[1.0, 2.0]).is_err());
        assert!(dimension_estimate(&[1.0, 0.0, 2.0]).is_err());
    }
}
