//! Ball growth and the growth-exponent dimension estimate.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::corpus::DependencyCorpus;
use crate::error::{Error, Result};
use crate::scalar::{real, Real};

use super::reach::transitive_reduction;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sources {
    /// One multi-source ball around the axiom set, grown toward dependents.
    Axioms,
    /// Mean ball volume around every node.
    EveryNode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Metric {
    /// Edges traversable both ways.
    Undirected,
    /// Only from a result toward the results that use it.
    Directed,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthCurve<R> {
    /// Cumulative node counts at radius 0, 1, 2, ...
    pub counts: Vec<R>,
    /// `dims[r]` for r ≥ 1; `None` at r = 0 or when the curve is too short.
    pub dims: Vec<Option<R>>,
}

impl<R: Real> GrowthCurve<R> {
    pub fn new(counts: Vec<R>) -> Self {
        let dims = dimension_estimate(&counts).unwrap_or_else(|_| vec![None; counts.len()]);
        GrowthCurve { counts, dims }
    }
}

fn bfs_layers(
    n: usize,
    starts: impl IntoIterator<Item = usize>,
    next: impl Fn(usize, &mut dyn FnMut(usize)),
) -> Vec<usize> {
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in starts {
        if dist[s] == usize::MAX {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    let mut per_radius: Vec<usize> = Vec::new();
    while let Some(x) = queue.pop_front() {
        let r = dist[x];
        if per_radius.len() <= r {
            per_radius.resize(r + 1, 0);
        }
        per_radius[r] += 1;
        next(x, &mut |y| {
            if dist[y] == usize::MAX {
                dist[y] = r + 1;
                queue.push_back(y);
            }
        });
    }
    let mut acc = 0;
    per_radius
        .into_iter()
        .map(|k| {
            acc += k;
            acc
        })
        .collect()
}

/// Cumulative counts of nodes within `r` steps of the axioms, following
/// edges from cited result to citing proof.
pub fn axiom_ball_counts(c: &DependencyCorpus) -> Vec<usize> {
    bfs_layers(c.len(), c.axioms(), |x, visit| {
        for &u in c.users(x) {
            visit(u);
        }
    })
}

/// Ball volumes around one node.
pub fn ball_counts(c: &DependencyCorpus, root: usize, metric: Metric) -> Vec<usize> {
    bfs_layers(c.len(), [root], |x, visit| {
        for &u in c.users(x) {
            visit(u);
        }
        if metric == Metric::Undirected {
            for d in c.deps(x) {
                visit(d.target);
            }
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Raw,
    /// Transitive reduction of the input.
    Reduced,
}

pub fn ball_growth<R: Real>(
    c: &DependencyCorpus,
    sources: Sources,
    variant: Variant,
    metric: Metric,
) -> GrowthCurve<R> {
    let reduced;
    let c = match variant {
        Variant::Raw => c,
        Variant::Reduced => {
            reduced = transitive_reduction(c);
            &reduced
        }
    };
    let counts = match sources {
        Sources::Axioms => axiom_ball_counts(c).into_iter().map(|k| real(k as f64)).collect(),
        Sources::EveryNode => {
            let per_node: Vec<Vec<usize>> =
                (0..c.len()).into_par_iter().map(|x| ball_counts(c, x, metric)).collect();
            mean_curve(&per_node)
        }
    };
    GrowthCurve::new(counts)
}

/// Pointwise mean of cumulative curves, each extended by its final value.
fn mean_curve<R: Real>(curves: &[Vec<usize>]) -> Vec<R> {
    let len = curves.iter().map(Vec::len).max().unwrap_or(0);
    let n = curves.len() as f64;
    (0..len)
        .map(|r| {
            let total: usize = curves.iter().map(|v| v.get(r).or(v.last()).copied().unwrap_or(0)).sum();
            real(total as f64 / n)
        })
        .collect()
}

/// Log-log slope of a growth curve at each radius.
///
/// `d(1)` is a forward difference, the last radius a backward difference,
/// interior radii the symmetric difference
/// `(ln c(r+1) − ln c(r−1)) / (ln(r+1) − ln(r−1))`. Radius 0 has no estimate.
pub fn dimension_estimate<R: Real>(counts: &[R]) -> Result<Vec<Option<R>>> {
    if counts.len() < 3 {
        return Err(Error::CurveTooShort(counts.len()));
    }
    if let Some(r) = counts.iter().position(|&k| k <= R::zero()) {
        return Err(Error::NonPositiveCount(r));
    }
    let lc: Vec<R> = counts.iter().map(|k| k.ln()).collect();
    let lr = |r: usize| real::<R>(r as f64).ln();
    let last = counts.len() - 1;
    let mut out = vec![None];
    for r in 1..=last {
        let (lo, hi) = if r == 1 {
            (1, 2)
        } else if r == last {
            (r - 1, r)
        } else {
            (r - 1, r + 1)
        };
        out.push(Some((lc[hi] - lc[lo]) / (lr(hi) - lr(lo))));
    }
    Ok(out)
}
