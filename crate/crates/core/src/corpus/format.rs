//! Text formats: the line-oriented edge list, its JSON mirror, and the
//! DOT / CSV / adjacency-matrix exporters.
//!
//! Edge-list grammar (one record per line, `#` starts a comment line):
//!
//! ```text
//! node <id> kind=<axiom|theorem> [group=<text>] [key=value]...
//! edge <from> <to> [mult=<int>]
//! ```
//!
//! Values may not contain whitespace; exporters write `%` and whitespace
//! inside values as `%XX` escapes and the parser decodes them.

use std::fmt::{self, Write as _};

use serde_json::{Map, Value};

use super::{BuildError, CorpusBuilder, DependencyCorpus, NodeKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line number (edge list) or record number (JSON).
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Malformed(String),
    Invalid(BuildError),
    Json(String),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Malformed(m) => write!(f, "line {}: malformed record: {m}", self.line),
            ParseErrorKind::Invalid(e) => write!(f, "line {}: {e}", self.line),
            ParseErrorKind::Json(m) => write!(f, "json record {}: {m}", self.line),
        }
    }
}

impl std::error::Error for ParseError {}

fn malformed(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError { line, kind: ParseErrorKind::Malformed(msg.into()) }
}

fn invalid(line: usize, e: BuildError) -> ParseError {
    ParseError { line, kind: ParseErrorKind::Invalid(e) }
}

fn escape(v: &str) -> String {
    let mut out = String::with_capacity(v.len());
    for c in v.chars() {
        if c == '%' || c.is_whitespace() {
            let mut buf = [0u8; 4];
            for b in c.encode_utf8(&mut buf).bytes() {
                let _ = write!(out, "%{b:02X}");
            }
        } else {
            out.push(c);
        }
    }
    out
}

fn unescape(v: &str, line: usize) -> Result<String, ParseError> {
    if !v.contains('%') {
        return Ok(v.to_string());
    }
    let bytes = v.as_bytes();
    let mut out = Vec::with_capacity(bytes.len());
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'%' {
            let hex = v
                .get(i + 1..i + 3)
                .and_then(|h| u8::from_str_radix(h, 16).ok())
                .ok_or_else(|| malformed(line, format!("bad escape in {v:?}")))?;
            out.push(hex);
            i += 3;
        } else {
            out.push(bytes[i]);
            i += 1;
        }
    }
    String::from_utf8(out).map_err(|_| malformed(line, format!("bad escape in {v:?}")))
}

struct PendingEdge {
    line: usize,
    from: String,
    to: String,
    mult: u32,
}

/// Parses the edge-list format. Node line order defines ordinals; edges may
/// appear anywhere in the file.
pub fn parse_edge_list(text: &str) -> Result<DependencyCorpus, ParseError> {
    let mut b = CorpusBuilder::new();
    let mut edges = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let rec = raw.trim();
        if rec.is_empty() || rec.starts_with('#') {
            continue;
        }
        let mut toks = rec.split_whitespace();
        match toks.next() {
            Some("node") => {
                let id = toks.next().ok_or_else(|| malformed(line, "node without id"))?;
                let mut kind = None;
                let mut group = None;
                let mut extra: Vec<(String, String)> = Vec::new();
                for kv in toks {
                    let (k, v) = kv
                        .split_once('=')
                        .ok_or_else(|| malformed(line, format!("expected key=value, got {kv:?}")))?;
                    if k.is_empty() {
                        return Err(malformed(line, format!("empty key in {kv:?}")));
                    }
                    let v = unescape(v, line)?;
                    let dup = match k {
                        "kind" => kind
                            .replace(
                                NodeKind::parse(&v)
                                    .ok_or_else(|| malformed(line, format!("unknown kind {v:?}")))?,
                            )
                            .is_some(),
                        "group" => group.replace(v).is_some(),
                        _ => {
                            let dup = extra.iter().any(|(ek, _)| ek == k);
                            extra.push((k.to_string(), v));
                            dup
                        }
                    };
                    if dup {
                        return Err(malformed(line, format!("repeated key {k:?}")));
                    }
                }
                let kind = kind.ok_or_else(|| malformed(line, format!("node {id} lacks kind=")))?;
                b.add_node_with(id, kind, group, extra).map_err(|e| invalid(line, e))?;
            }
            Some("edge") => {
                let from = toks.next().ok_or_else(|| malformed(line, "edge without source"))?;
                let to = toks.next().ok_or_else(|| malformed(line, "edge without target"))?;
                let mut mult = 1;
                let mut seen_mult = false;
                for kv in toks {
                    match kv.split_once('=') {
                        Some(("mult", v)) if !seen_mult => {
                            seen_mult = true;
                            mult =
                                v.parse().map_err(|_| malformed(line, format!("bad multiplicity {v:?}")))?;
                        }
                        _ => return Err(malformed(line, format!("unexpected edge field {kv:?}"))),
                    }
                }
                edges.push(PendingEdge { line, from: from.to_string(), to: to.to_string(), mult });
            }
            Some(other) => return Err(malformed(line, format!("unknown record type {other:?}"))),
            None => unreachable!(),
        }
    }
    for e in edges {
        b.add_edge(&e.from, &e.to, e.mult).map_err(|err| invalid(e.line, err))?;
    }
    b.build().map_err(|e| invalid(0, e))
}

fn json_err(rec: usize, msg: impl Into<String>) -> ParseError {
    ParseError { line: rec, kind: ParseErrorKind::Json(msg.into()) }
}

fn value_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Parses the JSON mirror `{"nodes":[{id,kind,group,...}],"edges":[{from,to,mult}]}`.
pub fn parse_json(text: &str) -> Result<DependencyCorpus, ParseError> {
    let root: Value = serde_json::from_str(text).map_err(|e| json_err(0, e.to_string()))?;
    let obj = root.as_object().ok_or_else(|| json_err(0, "top level must be an object"))?;
    let list = |key: &str| -> Result<&[Value], ParseError> {
        match obj.get(key) {
            None => Ok(&[]),
            Some(Value::Array(a)) => Ok(a),
            Some(_) => Err(json_err(0, format!("`{key}` must be an array"))),
        }
    };
    let mut b = CorpusBuilder::new();
    for (i, n) in list("nodes")?.iter().enumerate() {
        let rec = i + 1;
        let n = n.as_object().ok_or_else(|| json_err(rec, "node must be an object"))?;
        let id =
            n.get("id").and_then(Value::as_str).ok_or_else(|| json_err(rec, "node lacks string `id`"))?;
        let kind = n
            .get("kind")
            .and_then(Value::as_str)
            .and_then(NodeKind::parse)
            .ok_or_else(|| json_err(rec, format!("node {id} lacks a valid `kind`")))?;
        let group = match n.get("group") {
            None | Some(Value::Null) => None,
            Some(v) => Some(value_text(v)),
        };
        let extra = n
            .iter()
            .filter(|(k, _)| !matches!(k.as_str(), "id" | "kind" | "group"))
            .map(|(k, v)| (k.clone(), value_text(v)))
            .collect();
        b.add_node_with(id, kind, group, extra).map_err(|e| invalid(rec, e))?;
    }
    for (i, e) in list("edges")?.iter().enumerate() {
        let rec = i + 1;
        let field = |k: &str| {
            e.get(k).and_then(Value::as_str).ok_or_else(|| json_err(rec, format!("edge lacks string `{k}`")))
        };
        let (from, to) = (field("from")?, field("to")?);
        let mult = match e.get("mult") {
            None => 1,
            Some(v) => v
                .as_u64()
                .and_then(|m| u32::try_from(m).ok())
                .ok_or_else(|| json_err(rec, "`mult` must be a positive integer"))?,
        };
        b.add_edge(from, to, mult).map_err(|err| invalid(rec, err))?;
    }
    b.build().map_err(|e| invalid(0, e))
}

/// Dispatches on the first non-blank character: `{` means JSON.
pub fn parse_auto(text: &str) -> Result<DependencyCorpus, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_edge_list(text)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    EdgeList,
    Json,
    Dot,
    /// Edge table `from,to,mult`.
    Csv,
    /// Square CSV matrix of multiplicities, rows citing columns.
    AdjacencyMatrix,
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Serialises a corpus. Output is deterministic: nodes in ordinal order,
/// edges sorted by (from, to) ordinal.
pub fn export(c: &DependencyCorpus, format: ExportFormat) -> String {
    let mut out = String::new();
    match format {
        ExportFormat::EdgeList => {
            out.push_str("# theoremnet edge-list\n");
            for n in c.nodes() {
                let _ = write!(out, "node {} kind={}", n.id, n.kind.as_str());
                if let Some(g) = &n.group {
                    let _ = write!(out, " group={}", escape(g));
                }
                for (k, v) in &n.extra {
                    let _ = write!(out, " {k}={}", escape(v));
                }
                out.push('\n');
            }
            for (f, t, m) in c.edge_indices() {
                let _ = write!(out, "edge {} {}", c.id(f), c.id(t));
                if m != 1 {
                    let _ = write!(out, " mult={m}");
                }
                out.push('\n');
            }
        }
        ExportFormat::Json => {
            let nodes: Vec<Value> = c
                .nodes()
                .iter()
                .map(|n| {
                    let mut o = Map::new();
                    o.insert("id".into(), n.id.as_str().into());
                    o.insert("kind".into(), n.kind.as_str().into());
                    if let Some(g) = &n.group {
                        o.insert("group".into(), g.as_str().into());
                    }
                    for (k, v) in &n.extra {
                        o.insert(k.clone(), v.as_str().into());
                    }
                    Value::Object(o)
                })
                .collect();
            let edges: Vec<Value> = c
                .edge_indices()
                .map(|(f, t, m)| {
                    let mut o = Map::new();
                    o.insert("from".into(), c.id(f).as_str().into());
                    o.insert("to".into(), c.id(t).as_str().into());
                    o.insert("mult".into(), m.into());
                    Value::Object(o)
                })
                .collect();
            let mut root = Map::new();
            root.insert("nodes".into(), Value::Array(nodes));
            root.insert("edges".into(), Value::Array(edges));
            out = serde_json::to_string_pretty(&Value::Object(root)).expect("json serialises");
            out.push('\n');
        }
        ExportFormat::Dot => {
            out.push_str("digraph corpus {\n");
            for n in c.nodes() {
                let _ = write!(out, "  {} [kind={}", dot_quote(n.id.as_str()), n.kind.as_str());
                if let Some(g) = &n.group {
                    let _ = write!(out, ", group={}", dot_quote(g));
                }
                out.push_str("];\n");
            }
            for (f, t, m) in c.edge_indices() {
                let _ = write!(out, "  {} -> {}", dot_quote(c.id(f).as_str()), dot_quote(c.id(t).as_str()));
                if m != 1 {
                    let _ = write!(out, " [mult={m}]");
                }
                out.push_str(";\n");
            }
            out.push_str("}\n");
        }
        ExportFormat::Csv => {
            out.push_str("from,to,mult\n");
            for (f, t, m) in c.edge_indices() {
                let _ = writeln!(out, "{},{},{m}", csv_field(c.id(f).as_str()), csv_field(c.id(t).as_str()));
            }
        }
        ExportFormat::AdjacencyMatrix => {
            out.push_str("id");
            for n in c.nodes() {
                out.push(',');
                out.push_str(&csv_field(n.id.as_str()));
            }
            out.push('\n');
            let mut row = vec![0u32; c.len()];
            for i in 0..c.len() {
                row.iter_mut().for_each(|x| *x = 0);
                for d in c.deps(i) {
                    row[d.target] = d.mult;
                }
                out.push_str(&csv_field(c.id(i).as_str()));
                for m in &row {
                    let _ = write!(out, ",{m}");
                }
                out.push('\n');
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = "node A kind=axiom\nnode B kind=theorem\nedge B A\n";

    #[test]
    fn minimal_file() {
        let c = parse_edge_list(MINIMAL).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.edge_count(), 1);
        assert_eq!(c.deps(1)[0].mult, 1);
    }

    #[test]
    fn forward_edge_names_both_nodes() {
        let err = parse_edge_list("node A kind=theorem\nnode B kind=axiom\nedge A B\n").unwrap_err();
        assert_eq!(err.line, 3);
        let msg = err.to_string();
        assert!(msg.contains("forward edge") && msg.contains("`A`") && msg.contains("`B`"), "{msg}");
    }

    #[test]
    fn malformed_lines_carry_line_numbers() {
        let cases = [
            ("node A\n", 1, "lacks kind"),
            ("# c\nnode A kind=lemma\n", 2, "unknown kind"),
            ("node A kind=axiom\nvertex B\n", 2, "unknown record"),
            ("node A kind=axiom\nnode B kind=theorem\nedge B A mult=x\n", 3, "bad multiplicity"),
            ("node A kind=axiom\nnode A kind=axiom\n", 2, "duplicate node"),
            ("node A kind=axiom\nedge A Q\n", 2, "undeclared"),
            ("node A kind=axiom kind=axiom\n", 1, "repeated key"),
        ];
        for (text, line, needle) in cases {
            let err = parse_edge_list(text).unwrap_err();
            assert_eq!(err.line, line, "{text:?}");
            assert!(err.to_string().contains(needle), "{err} lacks {needle}");
        }
    }

    #[test]
    fn edges_may_precede_node_records() {
        let c = parse_edge_list("edge B A mult=2\nnode A kind=axiom\nnode B kind=theorem\n").unwrap();
        assert_eq!(c.reference_count(), 2);
    }

    #[test]
    fn unknown_keys_and_spaces_survive_round_trip() {
        let text = "node A kind=axiom group=Set%20theory structural=true\nnode B kind=theorem\nedge B A\n";
        let c = parse_edge_list(text).unwrap();
        assert_eq!(c.node(0).group.as_deref(), Some("Set theory"));
        assert_eq!(c.node(0).extra, vec![("structural".into(), "true".into())]);
        let again = parse_edge_list(&export(&c, ExportFormat::EdgeList)).unwrap();
        assert_eq!(again, c);
        let json = parse_json(&export(&c, ExportFormat::Json)).unwrap();
        assert_eq!(json, c);
    }

    #[test]
    fn empty_corpus_exports_headers_only() {
        let c = DependencyCorpus::empty();
        assert_eq!(export(&c, ExportFormat::EdgeList), "# theoremnet edge-list\n");
        assert_eq!(export(&c, ExportFormat::Csv), "from,to,mult\n");
        assert_eq!(export(&c, ExportFormat::AdjacencyMatrix), "id\n");
        assert_eq!(export(&c, ExportFormat::Dot), "digraph corpus {\n}\n");
        assert_eq!(parse_auto(&export(&c, ExportFormat::Json)).unwrap(), c);
    }

    #[test]
    fn matrix_and_dot_shapes() {
        let c = parse_edge_list("node A kind=axiom\nnode B kind=theorem\nedge B A mult=3\n").unwrap();
        assert_eq!(export(&c, ExportFormat::AdjacencyMatrix), "id,A,B\nA,0,0\nB,3,0\n");
        let dot = export(&c, ExportFormat::Dot);
        assert!(dot.contains("\"B\" -> \"A\" [mult=3];"));
    }

    #[test]
    fn json_rejects_bad_records() {
        assert!(parse_json("[]").is_err());
        let err = parse_json(r#"{"nodes":[{"id":"A"}]}"#).unwrap_err();
        assert!(err.to_string().contains("kind"));
        let err = parse_json(
            r#"{"nodes":[{"id":"A","kind":"axiom"},{"id":"B","kind":"theorem"}],"edges":[{"from":"A","to":"B"}]}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("forward edge"));
    }
}
