//! Commands over a dependency corpus.

use std::path::Path;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use theoremnet_core::compile::{expansion_ranking, expansion_tally, ExpansionMetric};
use theoremnet_core::corpus::{book_aggregate, export, parse_auto, ExportFormat};
use theoremnet_core::foliation::{branchial_graph, validate_foliation, Ancestry, Foliation};
use theoremnet_core::graphops::{
    axiom_subset_tally, ball_growth, degree_stats, direct_deps, future_cone, longest_chains, non_dependents,
    past_cone, popularity, transitive_closure, transitive_reduction, Metric, Popularity, Reachability,
    Sources, Variant,
};
use theoremnet_core::superaxiom::{superaxiom_effect, SuperaxiomScanner};
use theoremnet_core::{CorpusBuilder, DependencyCorpus, NodeKind};

use crate::args::{
    ConeArgs, ConeDirection, CorpusCmd, Format, GrowthArgs, GrowthFrom, PopularityMode, RankMetric, StatsCmd,
    SuperaxiomCmd,
};
use crate::error::CliError;
use crate::report::{Output, Report, Table};

pub fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

pub fn load(path: &Path) -> Result<DependencyCorpus, CliError> {
    parse_auto(&read(path)?).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

fn id(c: &DependencyCorpus, x: usize) -> Value {
    Value::String(c.id(x).to_string())
}

fn ids(c: &DependencyCorpus, xs: &[usize]) -> Value {
    Value::Array(xs.iter().map(|&x| id(c, x)).collect())
}

fn kind(c: &DependencyCorpus, x: usize) -> Value {
    Value::String(c.node(x).kind.as_str().into())
}

/// Integral values print without a fractional part.
fn real(v: f64) -> Value {
    if v.fract() == 0.0 && v.abs() < 1e15 {
        json!(v as i64)
    } else {
        json!(v)
    }
}

fn big(n: &BigUint) -> Value {
    let s = n.to_string();
    s.parse::<u64>().map(Value::from).unwrap_or(Value::String(s))
}

pub fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// The export matching an output format; csv may ask for the matrix.
pub fn export_as(c: &DependencyCorpus, format: Format, matrix: bool) -> Output {
    let f = match (format, matrix) {
        (_, true) => ExportFormat::AdjacencyMatrix,
        (Format::Text, _) => ExportFormat::EdgeList,
        (Format::Csv, _) => ExportFormat::Csv,
        (Format::Json, _) => ExportFormat::Json,
        (Format::Dot, _) => ExportFormat::Dot,
    };
    Output::Raw(export(c, f))
}

pub fn corpus(cmd: CorpusCmd, format: Format, seed: u64) -> Result<Output, CliError> {
    match cmd {
        CorpusCmd::Validate { input } => {
            let c = load(&input.corpus)?;
            let diags = c.validate();
            let mut t = Table::new(&["diagnostic"]);
            for d in &diags {
                t.push(vec![Value::String(d.to_string())]);
            }
            Ok(Output::Report(
                Report::default()
                    .field("nodes", c.len())
                    .field("axioms", c.axiom_count())
                    .field("theorems", c.len() - c.axiom_count())
                    .field("edges", c.edge_count())
                    .field("references", c.reference_count())
                    .field("diagnostics", diags.len())
                    .table(t),
            ))
        }
        CorpusCmd::Export { input, matrix } => Ok(export_as(&load(&input.corpus)?, format, matrix)),
        CorpusCmd::Synth { nodes, axioms, degree } => {
            if axioms == 0 || axioms > nodes {
                return Err(CliError::Usage("need 1 <= --axioms <= --nodes".into()));
            }
            Ok(export_as(&synth(nodes, axioms, degree, seed), format, false))
        }
    }
}

/// Each theorem cites `degree` earlier nodes, mostly recent ones.
fn synth(n: usize, axioms: usize, degree: usize, seed: u64) -> DependencyCorpus {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = CorpusBuilder::new();
    for i in 0..n {
        let kind = if i < axioms { NodeKind::Axiom } else { NodeKind::Theorem };
        b.add_node(&format!("t{i}"), kind, Some(&format!("{}", i / 1000))).expect("fresh ids");
        if i < axioms {
            continue;
        }
        let mut picked = std::collections::BTreeSet::new();
        while picked.len() < degree.min(i) {
            let t =
                if rng.gen_bool(0.7) { i - 1 - rng.gen_range(0..i.min(200)) } else { rng.gen_range(0..i) };
            picked.insert(t);
        }
        for t in picked {
            b.add_edge_ix(i, t, 1).expect("targets precede sources");
        }
    }
    b.build().expect("valid by construction")
}

pub fn stats(cmd: StatsCmd) -> Result<Output, CliError> {
    let r = match cmd {
        StatsCmd::Degrees { input } => {
            let c = load(&input.corpus)?;
            let d = degree_stats::<f64>(&c);
            let mut t = Table::new(&["out_degree", "nodes"]);
            for (k, &n) in d.histogram.iter().enumerate() {
                t.push(vec![k.into(), n.into()]);
            }
            Report::default()
                .line(format!(
                    "mean {:.2} ({} edges / {} nodes), max {} at {}",
                    d.mean,
                    c.edge_count(),
                    c.len(),
                    d.max,
                    d.argmax.iter().map(|&x| c.id(x).to_string()).collect::<Vec<_>>().join(", ")
                ))
                .field("mean", d.mean)
                .field("mean_weighted", d.mean_weighted)
                .field("max", d.max)
                .field("argmax", ids(&c, &d.argmax))
                .field("max_weighted", d.max_weighted)
                .field("argmax_weighted", ids(&c, &d.argmax_weighted))
                .table(t)
        }
        StatsCmd::Popularity { input, mode, top } => {
            let c = load(&input.corpus)?;
            let mode = match mode {
                PopularityMode::Direct => Popularity::Direct,
                PopularityMode::Weighted => Popularity::DirectWeighted,
                PopularityMode::Indirect => Popularity::Indirect,
            };
            let mut t = Table::new(&["rank", "node", "count"]);
            let ranked = popularity(&c, mode);
            for (i, (x, n)) in ranked.into_iter().take(top.unwrap_or(usize::MAX)).enumerate() {
                t.push(vec![(i + 1).into(), id(&c, x), n.into()]);
            }
            Report::default().table(t)
        }
        StatsCmd::AxiomSubsets { input } => {
            let c = load(&input.corpus)?;
            let tally = axiom_subset_tally(&c);
            let mut t = Table::new(&["size", "theorems", "axioms"]);
            for (set, n) in tally.ranked() {
                t.push(vec![set.len().into(), n.into(), ids(&c, &set)]);
            }
            Report::default()
                .field("theorems", tally.total())
                .field("distinct_subsets", tally.counts.len())
                .field("all_axioms", tally.with_size(tally.axioms.len()))
                .field("exactly_one", tally.with_size(1))
                .table(t)
        }
        StatsCmd::NonDependents { input, axiom } => {
            let c = load(&input.corpus)?;
            let axioms: Vec<usize> = match axiom {
                Some(a) => vec![c.ix(&a)?],
                None => c.axioms().collect(),
            };
            let mut t = Table::new(&["axiom", "future_cone", "non_dependents", "sum"]);
            for a in axioms {
                let name = c.id(a).to_string();
                let f = future_cone(&c, &name)?.len();
                let n = non_dependents(&c, &name)?;
                t.push(vec![id(&c, a), f.into(), n.into(), (f + n).into()]);
            }
            Report::default().table(t)
        }
    };
    Ok(Output::Report(r))
}

pub fn deps(path: &Path, target: &str) -> Result<Output, CliError> {
    let c = load(path)?;
    let ds = direct_deps(&c, target)?;
    let mut t = Table::new(&["node", "multiplicity"]);
    for d in ds {
        t.push(vec![id(&c, d.target), d.mult.into()]);
    }
    Ok(Output::Report(
        Report::default()
            .field("node", target)
            .field("distinct", ds.len())
            .field("references", ds.iter().map(|d| d.mult as u64).sum::<u64>())
            .table(t),
    ))
}

pub fn cone(args: ConeArgs) -> Result<Output, CliError> {
    let raw = load(&args.input.corpus)?;
    let c = if args.reduce {
        transitive_reduction(&raw)
    } else if args.closure {
        transitive_closure(&raw)
    } else {
        raw
    };
    let cone = match args.direction {
        ConeDirection::Past => past_cone(&c, &args.id)?,
        ConeDirection::Future => future_cone(&c, &args.id)?,
    };
    let axioms = cone.members.iter().filter(|&&x| c.is_axiom(x)).count();
    let mut t = Table::new(&["ordinal", "node", "kind"]);
    for &x in &cone.members {
        t.push(vec![x.into(), id(&c, x), kind(&c, x)]);
    }
    let sub = c.induced(cone.members.iter().copied().chain([cone.root]));
    Ok(Output::Report(
        Report::default()
            .field("root", args.id.as_str())
            .field("members", cone.len())
            .field("theorems", cone.len() - axioms)
            .field("axioms", axioms)
            .field("induced_edges", cone.induced_edges.len())
            .table(t)
            .dot(export(&sub, ExportFormat::Dot)),
    ))
}

pub fn chains(path: &Path, target: &str) -> Result<Output, CliError> {
    let c = load(path)?;
    let ch = longest_chains(&c, target)?;
    let mut t = Table::new(&["axiom", "length", "chain"]);
    for p in &ch.chains {
        let chain = p.steps.iter().map(|&x| c.id(x).to_string()).collect::<Vec<_>>().join(" → ");
        t.push(vec![id(&c, p.axiom), p.len().into(), chain.into()]);
    }
    Ok(Output::Report(Report::default().field("node", target).field("max_depth", ch.max_depth).table(t)))
}

fn foliation(c: &DependencyCorpus, custom: Option<&Path>) -> Result<Foliation, CliError> {
    let Some(p) = custom else {
        return Ok(Foliation::rest_frame(c));
    };
    let f = Foliation::from_csv(c, &read(p)?)?;
    let bad = validate_foliation(c, &f);
    if let Some(v) = bad.first() {
        return Err(CliError::Data(format!(
            "{}: {} reference(s) do not point to an earlier slice, first `{}` (slice {}) cites `{}` (slice {})",
            p.display(),
            bad.len(),
            c.id(v.from),
            v.from_layer,
            c.id(v.to),
            v.to_layer
        )));
    }
    Ok(f)
}

pub fn foliate(path: &Path, custom: Option<&Path>, layers: bool) -> Result<Output, CliError> {
    let c = load(path)?;
    let f = foliation(&c, custom)?;
    let report = Report::default().field("slices", f.slice_count());
    let t = if layers {
        let mut t = Table::new(&["node", "layer"]);
        for x in 0..c.len() {
            t.push(vec![id(&c, x), f.layer(x).into()]);
        }
        t
    } else {
        let mut t = Table::new(&["slice", "count", "nodes"]);
        for (s, n) in f.slice_counts().into_iter().enumerate() {
            t.push(vec![s.into(), n.into(), ids(&c, &f.slice(s))]);
        }
        t
    };
    Ok(Output::Report(report.table(t)))
}

pub fn branchial(
    path: &Path,
    slice: usize,
    dt: usize,
    custom: Option<&Path>,
    any: bool,
) -> Result<Output, CliError> {
    let c = load(path)?;
    let f = foliation(&c, custom)?;
    let mode = if any { Ancestry::AnyPath } else { Ancestry::Confined };
    let g = branchial_graph(&c, &f, slice, dt, mode)?;
    let mut t = Table::new(&["a", "b"]);
    let mut dot = format!("graph \"branchial_{slice}_{dt}\" {{\n");
    for &v in &g.vertices {
        dot.push_str(&format!("  {};\n", dot_quote(c.id(v).as_str())));
    }
    for &(a, b) in &g.edges {
        t.push(vec![id(&c, a), id(&c, b)]);
        dot.push_str(&format!("  {} -- {};\n", dot_quote(c.id(a).as_str()), dot_quote(c.id(b).as_str())));
    }
    dot.push_str("}\n");
    Ok(Output::Report(
        Report::default()
            .field("slice", slice)
            .field("dt", dt)
            .field("vertices", ids(&c, &g.vertices))
            .field("edges", g.edges.len())
            .table(t)
            .dot(dot),
    ))
}

pub fn growth(args: GrowthArgs, dimension_only: bool) -> Result<Output, CliError> {
    let c = load(&args.input.corpus)?;
    let sources = match args.from {
        GrowthFrom::Axioms => Sources::Axioms,
        GrowthFrom::All => Sources::EveryNode,
    };
    let variant = if args.reduced { Variant::Reduced } else { Variant::Raw };
    let metric = if args.directed { Metric::Directed } else { Metric::Undirected };
    let g = ball_growth::<f64>(&c, sources, variant, metric);
    let mut t = if dimension_only {
        Table::new(&["radius", "dimension"])
    } else {
        Table::new(&["radius", "count", "dimension"])
    };
    for (r, (n, d)) in g.counts.iter().zip(&g.dims).enumerate() {
        let d = d.map_or(Value::Null, |d| json!((d * 1e4).round() / 1e4));
        if dimension_only {
            t.push(vec![r.into(), d]);
        } else {
            t.push(vec![r.into(), real(*n), d]);
        }
    }
    let mut report = Report::default();
    if !dimension_only {
        let counts: Vec<String> = g.counts.iter().map(|&n| crate::report::cell(&real(n))).collect();
        report = report.line(format!("{{{}}}", counts.join(", ")));
    }
    Ok(Output::Report(report.table(t)))
}

pub fn compile(
    path: &Path,
    target: &str,
    metric: RankMetric,
    top: Option<usize>,
) -> Result<Output, CliError> {
    let c = load(path)?;
    if target == "rank" && c.index_of("rank").is_none() {
        let m = match metric {
            RankMetric::Leaves => ExpansionMetric::LeafTotal,
            RankMetric::Steps => ExpansionMetric::TreeSteps,
        };
        let mut t = Table::new(&["rank", "node", "count"]);
        for (i, (x, n)) in
            expansion_ranking::<BigUint>(&c, m)?.into_iter().take(top.unwrap_or(usize::MAX)).enumerate()
        {
            t.push(vec![(i + 1).into(), id(&c, x), big(&n)]);
        }
        return Ok(Output::Report(Report::default().table(t)));
    }
    let tally = expansion_tally::<BigUint>(&c, target)?;
    let mut t = Table::new(&["axiom", "occurrences"]);
    for (a, n) in &tally.leaf_by_axiom {
        t.push(vec![id(&c, *a), big(n)]);
    }
    Ok(Output::Report(
        Report::default()
            .field("node", target)
            .field("leaf_total", big(&tally.leaf_total))
            .field("tree_nodes", big(&tally.tree_nodes))
            .field("memo_steps", tally.memo_steps)
            .table(t),
    ))
}

fn ratio(r: &num_rational::Ratio<u64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

pub fn superaxiom(cmd: SuperaxiomCmd) -> Result<Output, CliError> {
    match cmd {
        SuperaxiomCmd::Scan { input, top } => {
            let c = load(&input.corpus)?;
            let mut reports = SuperaxiomScanner::new(&c).scan_all();
            let best_avg = reports
                .iter()
                .max_by(|a, b| a.avg_shortening.cmp(&b.avg_shortening).then(b.candidate.cmp(&a.candidate)));
            let best_max = reports.iter().map(|r| r.max_shortening).max().unwrap_or(0);
            let mut report = Report::default().field("candidates", reports.len());
            if let Some(b) = best_avg {
                report = report
                    .field("best_average", id(&c, b.candidate))
                    .field("best_average_shortening", ratio(&b.avg_shortening));
            }
            let max_at: Vec<usize> = reports
                .iter()
                .filter(|r| r.max_shortening == best_max && best_max > 0)
                .map(|r| r.candidate)
                .collect();
            report = report.field("max_shortening", best_max).field("max_shortening_at", ids(&c, &max_at));
            if let Some(k) = top {
                reports.sort_by(|a, b| {
                    b.avg_shortening.cmp(&a.avg_shortening).then(a.candidate.cmp(&b.candidate))
                });
                reports.truncate(k);
            }
            let mut t = Table::new(&[
                "candidate",
                "avg_shortening",
                "max_shortening",
                "argmax_shortening",
                "avg_depth_reduction",
                "max_depth_reduction",
                "argmax_depth_reduction",
            ]);
            for r in &reports {
                t.push(vec![
                    id(&c, r.candidate),
                    json!((ratio(&r.avg_shortening) * 1e4).round() / 1e4),
                    r.max_shortening.into(),
                    ids(&c, &r.argmax_shortening),
                    json!((ratio(&r.avg_depth_reduction) * 1e4).round() / 1e4),
                    r.max_depth_reduction.into(),
                    ids(&c, &r.argmax_depth_reduction),
                ]);
            }
            Ok(Output::Report(report.table(t)))
        }
        SuperaxiomCmd::Apply { input, ids: cut, target } => {
            let c = load(&input.corpus)?;
            let cut: Vec<&str> = cut.iter().map(String::as_str).collect();
            if let Some(target) = target {
                let e = superaxiom_effect(&c, &target, &cut)?;
                return Ok(Output::Report(
                    Report::default()
                        .field("target", target.as_str())
                        .field("nodes_before", e.before.len())
                        .field("nodes_after", e.after.len())
                        .field("nodes_saved", e.nodes_saved())
                        .field("edges_before", e.before.induced_edges.len())
                        .field("edges_after", e.after.induced_edges.len())
                        .field("edges_saved", e.edges_saved()),
                ));
            }
            let [one] = cut[..] else {
                return Err(CliError::Usage("several superaxioms need --target".into()));
            };
            let r = SuperaxiomScanner::new(&c).report(one)?;
            let mut t = Table::new(&["node", "shortening", "depth_reduction"]);
            for x in 0..c.len() {
                if r.shortening[x] > 0 || r.depth_reduction[x] > 0 {
                    t.push(vec![id(&c, x), r.shortening[x].into(), r.depth_reduction[x].into()]);
                }
            }
            Ok(Output::Report(
                Report::default()
                    .field("candidate", one)
                    .field("avg_shortening", ratio(&r.avg_shortening))
                    .field("max_shortening", r.max_shortening)
                    .field("argmax_shortening", ids(&c, &r.argmax_shortening))
                    .field("avg_depth_reduction", ratio(&r.avg_depth_reduction))
                    .field("max_depth_reduction", r.max_depth_reduction)
                    .table(t),
            ))
        }
    }
}

pub fn books(path: &Path, groups: bool) -> Result<Output, CliError> {
    let c = load(path)?;
    let g = book_aggregate(&c);
    let mut dot = String::from("digraph books {\n");
    for n in &g.nodes {
        dot.push_str(&format!(
            "  {} [label={}];\n",
            dot_quote(&n.name),
            dot_quote(&format!("{} ({})", n.name, n.theorems))
        ));
    }
    for e in g.edges.iter().filter(|e| e.references > 0) {
        dot.push_str(&format!(
            "  {} -> {} [weight={:.4}, label={}];\n",
            dot_quote(&g.nodes[e.from].name),
            dot_quote(&g.nodes[e.to].name),
            e.weight,
            e.references
        ));
    }
    dot.push_str("}\n");
    let t = if groups {
        let mut t = Table::new(&["group", "theorems"]);
        for n in &g.nodes {
            t.push(vec![n.name.as_str().into(), n.theorems.into()]);
        }
        t
    } else {
        let mut t = Table::new(&["from", "to", "references", "weight"]);
        for e in &g.edges {
            t.push(vec![
                g.nodes[e.from].name.as_str().into(),
                g.nodes[e.to].name.as_str().into(),
                e.references.into(),
                json!((e.weight * 1e6).round() / 1e6),
            ]);
        }
        t
    };
    Ok(Output::Report(Report::default().field("groups", g.nodes.len()).table(t).dot(dot)))
}

pub fn reduce(path: &Path) -> Result<Output, CliError> {
    let c = load(path)?;
    let reach = Reachability::new(&c);
    let reduced = reach.reduced_edges().len();
    let closure = reach.closure_edge_count();
    let r = transitive_reduction(&c);
    Ok(Output::Report(
        Report::default()
            .line(format!("{} → {} edges", c.edge_count(), reduced))
            .field("edges", c.edge_count())
            .field("reduction", reduced)
            .field("closure", closure)
            .dot(export(&r, ExportFormat::Dot)),
    ))
}
