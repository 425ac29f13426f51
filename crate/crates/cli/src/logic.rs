//! Boolean-statement commands.

use serde_json::Value;
use theoremnet_logic::{
    boolean_axioms, census, enumerate_equations, implication_matrix, multiway_graph, sat_instances, Alphabet,
    BoolEquation, BoolExpr, Complexity,
};

use crate::args::{Bound, LogicCmd};
use crate::error::CliError;
use crate::graph::dot_quote;
use crate::report::{Output, Report, Table};

fn bound(b: &Bound) -> Result<(Alphabet, Complexity), CliError> {
    Ok((Alphabet::first(b.vars)?, Complexity { depth: b.depth, symbols: b.symbols }))
}

fn tf(v: bool) -> Value {
    Value::String(if v { "T" } else { "F" }.into())
}

pub fn run(cmd: LogicCmd) -> Result<Output, CliError> {
    let r = match cmd {
        LogicCmd::Enum { bound: b, limit, unicode } => {
            let (alphabet, cx) = bound(&b)?;
            let eqs = enumerate_equations(&alphabet, cx);
            let mut t = Table::new(&["index", "equation"]);
            for (i, e) in eqs.iter().take(limit.unwrap_or(usize::MAX)).enumerate() {
                let s = if unicode { e.to_unicode() } else { e.to_string() };
                t.push(vec![(i + 1).into(), s.into()]);
            }
            Report::default().field("equations", eqs.len()).table(t)
        }
        LogicCmd::Census { bound: b, list } => {
            let (alphabet, cx) = bound(&b)?;
            let c = census(&alphabet, cx)?;
            let report = Report::default()
                .field("equations", c.entries.len())
                .field("tautologies", c.tautologies().count());
            if list {
                let mut t = Table::new(&["equation", "tautology", "models"]);
                for e in &c.entries {
                    t.push(vec![e.equation.to_string().into(), e.tautology.into(), e.table.count().into()]);
                }
                report.table(t)
            } else {
                let mut t = Table::new(&["depth", "symbols", "equations", "tautologies"]);
                for l in &c.levels {
                    t.push(vec![l.depth.into(), l.symbols.into(), l.equations.into(), l.tautologies.into()]);
                }
                report.table(t)
            }
        }
        LogicCmd::Sat { equation, alphabet } => {
            let eq: BoolEquation = equation.parse()?;
            let alphabet = match alphabet {
                Some(letters) => Alphabet::new(letters.chars())?,
                None => {
                    let mut vs = eq.variables();
                    vs.sort_unstable();
                    Alphabet::new(vs)?
                }
            };
            let header: Vec<String> = alphabet.letters().iter().map(char::to_string).collect();
            let mut t = Table::new(&header.iter().map(String::as_str).collect::<Vec<_>>());
            let rows = sat_instances(&eq, &alphabet)?;
            for row in &rows {
                t.push(row.iter().map(|&v| tf(v)).collect());
            }
            Report::default().field("equation", eq.to_string()).field("instances", rows.len()).table(t)
        }
        LogicCmd::Implications { bound: b, count, statements } => {
            let (alphabet, cx) = bound(&b)?;
            let universe: Vec<BoolEquation> = if statements.is_empty() {
                enumerate_equations(&alphabet, cx).into_iter().take(count).collect()
            } else {
                statements.iter().map(|s| s.parse()).collect::<Result<_, _>>()?
            };
            let m = implication_matrix(&universe, &alphabet)?;
            let mut t = Table::new(&["statement", "implied"]);
            for (s, row) in universe.iter().zip(&m) {
                let implied: Vec<Value> = row.iter().map(|&i| universe[i].to_string().into()).collect();
                t.push(vec![s.to_string().into(), Value::Array(implied)]);
            }
            Report::default().field("statements", universe.len()).table(t)
        }
        LogicCmd::Multiway { seed_expr, depth, max_vertices } => {
            let seed: BoolExpr = seed_expr.parse()?;
            let rules = boolean_axioms();
            let g = multiway_graph(&seed, &rules, depth, max_vertices);
            let mut t = Table::new(&["from", "to", "rule", "direction"]);
            let mut dot = String::from("digraph multiway {\n");
            for v in &g.vertices {
                dot.push_str(&format!("  {};\n", dot_quote(&v.to_string())));
            }
            for &(a, b, app) in &g.edges {
                let dir = if app.backward { "backward" } else { "forward" };
                t.push(vec![
                    g.vertices[a].to_string().into(),
                    g.vertices[b].to_string().into(),
                    rules[app.rule].name.into(),
                    dir.into(),
                ]);
                dot.push_str(&format!(
                    "  {} -> {} [label={}];\n",
                    dot_quote(&g.vertices[a].to_string()),
                    dot_quote(&g.vertices[b].to_string()),
                    dot_quote(rules[app.rule].name)
                ));
            }
            dot.push_str("}\n");
            Report::default()
                .field("seed", seed.to_string())
                .field("depth", g.depth)
                .field("vertices", g.vertices.len())
                .field("edges", g.edges.len())
                .field("truncated", g.truncated)
                .table(t)
                .dot(dot)
        }
    };
    Ok(Output::Report(r))
}
