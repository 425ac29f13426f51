//! Foliations of a corpus into time slices, and branchial graphs.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::bits::BitSet;
use crate::corpus::DependencyCorpus;
use crate::error::{Error, Result};
use crate::graphops::{depths, past_set};

/// A layer for every node, indexed by ordinal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Foliation {
    layers: Vec<u32>,
}

impl Foliation {
    /// Each node on the slice given by its longest path down to an axiom.
    pub fn rest_frame(c: &DependencyCorpus) -> Self {
        Foliation { layers: depths(c) }
    }

    /// Builds a foliation from labelled layers; every node needs one.
    pub fn from_map<S>(c: &DependencyCorpus, map: &HashMap<S, u32>) -> Result<Self>
    where
        S: std::hash::Hash + Eq + std::borrow::Borrow<str>,
    {
        let layers = c
            .nodes()
            .iter()
            .map(|n| map.get(n.id.as_str()).copied().ok_or_else(|| Error::MissingLayer(n.id.to_string())))
            .collect::<Result<_>>()?;
        Ok(Foliation { layers })
    }

    /// Reads `node,layer` CSV (header required, `#` comment lines allowed).
    pub fn from_csv(c: &DependencyCorpus, text: &str) -> Result<Self> {
        let mut rdr =
            csv::ReaderBuilder::new().comment(Some(b'#')).trim(csv::Trim::All).from_reader(text.as_bytes());
        let mut map: HashMap<String, u32> = HashMap::new();
        for rec in rdr.records() {
            let rec = rec.map_err(|e| Error::Csv(e.to_string()))?;
            let line = rec.position().map_or(0, |p| p.line());
            let (Some(id), Some(layer)) = (rec.get(0), rec.get(1)) else {
                return Err(Error::Csv(format!("line {line}: expected node,layer")));
            };
            c.ix(id)?;
            let layer = layer.parse().map_err(|_| Error::Csv(format!("line {line}: bad layer {layer:?}")))?;
            if map.insert(id.to_string(), layer).is_some() {
                return Err(Error::Csv(format!("line {line}: node `{id}` listed twice")));
            }
        }
        Self::from_map(c, &map)
    }

    pub fn to_csv(&self, c: &DependencyCorpus) -> String {
        let mut out = String::from("node,layer\n");
        for (i, l) in self.layers.iter().enumerate() {
            let _ = writeln!(out, "{},{l}", c.id(i));
        }
        out
    }

    pub fn layer(&self, x: usize) -> u32 {
        self.layers[x]
    }

    pub fn layers(&self) -> &[u32] {
        &self.layers
    }

    /// Number of slices, `max layer + 1`.
    pub fn slice_count(&self) -> usize {
        self.layers.iter().max().map_or(0, |&m| m as usize + 1)
    }

    /// Members of slice `t` in ordinal order.
    pub fn slice(&self, t: usize) -> Vec<usize> {
        (0..self.layers.len()).filter(|&x| self.layers[x] as usize == t).collect()
    }

    /// Histogram of nodes per slice.
    pub fn slice_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.slice_count()];
        for &l in &self.layers {
            counts[l as usize] += 1;
        }
        counts
    }
}

/// An edge whose cited node is not on a strictly earlier slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoliationViolation {
    pub from: usize,
    pub to: usize,
    pub from_layer: u32,
    pub to_layer: u32,
}

pub fn validate_foliation(c: &DependencyCorpus, f: &Foliation) -> Vec<FoliationViolation> {
    c.edge_indices()
        .filter(|&(from, to, _)| f.layer(to) >= f.layer(from))
        .map(|(from, to, _)| FoliationViolation {
            from,
            to,
            from_layer: f.layer(from),
            to_layer: f.layer(to),
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ancestry {
    /// Common ancestors reached by paths that never leave the window.
    Confined,
    /// Any common past-cone member inside the window.
    AnyPath,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchialGraph {
    pub slice: usize,
    pub dt: usize,
    /// Slice members in ordinal order.
    pub vertices: Vec<usize>,
    /// Unordered pairs `(a, b)` with `a < b`, sorted.
    pub edges: Vec<(usize, usize)>,
}

/// Joins two slice-`t` nodes when they share an ancestor on slices
/// `t − dt ..= t − 1`. With `dt = 1` that is a node both cite directly.
pub fn branchial_graph(
    c: &DependencyCorpus,
    f: &Foliation,
    slice: usize,
    dt: usize,
    ancestry: Ancestry,
) -> Result<BranchialGraph> {
    let slices = f.slice_count();
    if slice >= slices {
        return Err(Error::SliceOutOfRange { slice, slices });
    }
    if dt == 0 || dt > slice {
        return Err(Error::BadWindow { slice, dt });
    }
    let lo = (slice - dt) as u32;
    let hi = slice as u32;
    let in_window = |x: usize| (lo..hi).contains(&f.layer(x));
    let vertices = f.slice(slice);

    let mut holders: HashMap<usize, Vec<usize>> = HashMap::new();
    for &v in &vertices {
        let anc: Vec<usize> = match ancestry {
            Ancestry::AnyPath => past_set(c, v, None).iter().filter(|&x| in_window(x)).collect(),
            Ancestry::Confined => {
                let mut seen = BitSet::new(c.len());
                let mut stack = vec![v];
                while let Some(x) = stack.pop() {
                    for d in c.deps(x) {
                        if f.layer(d.target) >= lo && seen.insert(d.target) {
                            stack.push(d.target);
                        }
                    }
                }
                seen.iter().filter(|&x| in_window(x)).collect()
            }
        };
        for a in anc {
            holders.entry(a).or_default().push(v);
        }
    }
    let mut edges = BTreeSet::new();
    for vs in holders.values() {
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                edges.insert((a.min(b), a.max(b)));
            }
        }
    }
    Ok(BranchialGraph { slice, dt, vertices, edges: edges.into_iter().collect() })
}
