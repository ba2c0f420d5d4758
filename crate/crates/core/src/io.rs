//! Edge-list and JSON encodings of digraphs.
//!
//! Edge lists carry one arc per line as `u v`. Blank lines and lines starting
//! with `#` are ignored, except for an optional `# n=<order>` header that
//! preserves trailing isolated vertices. When every token is a nonnegative
//! integer the integers are used as vertex ids directly; otherwise ids are
//! assigned densely in order of first appearance and the original tokens are
//! kept as labels.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::digraph::{Digraph, Vertex};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DuplicatePolicy {
    /// Keep the first occurrence and report a warning.
    #[default]
    Warn,
    Reject,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ParseOptions {
    pub duplicates: DuplicatePolicy,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseWarning {
    pub line: usize,
    pub message: String,
}

/// Parses an edge list with the default options, discarding warnings.
pub fn parse_digraph(text: &str) -> Result<Digraph> {
    parse_edge_list(text, ParseOptions::default()).map(|(d, _)| d)
}

pub fn parse_edge_list(text: &str, opts: ParseOptions) -> Result<(Digraph, Vec<ParseWarning>)> {
    let mut declared_n = 0usize;
    let mut rows: Vec<(usize, &str, &str)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            if let Some(n) = comment.trim().strip_prefix("n=") {
                declared_n = n.trim().parse().map_err(|_| Error::Parse {
                    line,
                    message: format!("bad order header `{trimmed}`"),
                })?;
            }
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(u), Some(v), None) => rows.push((line, u, v)),
            _ => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected `u v`, found `{trimmed}`"),
                })
            }
        }
    }

    let numeric = rows
        .iter()
        .all(|(_, u, v)| u.parse::<usize>().is_ok() && v.parse::<usize>().is_ok());

    let mut labels: Vec<String> = Vec::new();
    let mut ids: HashMap<String, Vertex> = HashMap::new();
    let mut resolve = |tok: &str| -> Vertex {
        if numeric {
            tok.parse().unwrap()
        } else {
            *ids.entry(tok.to_string()).or_insert_with(|| {
                labels.push(tok.to_string());
                labels.len() - 1
            })
        }
    };

    let mut arcs = Vec::with_capacity(rows.len());
    let mut seen = std::collections::HashSet::new();
    let mut warnings = Vec::new();
    for &(line, a, b) in &rows {
        let (u, v) = (resolve(a), resolve(b));
        if u == v {
            return Err(Error::LoopArc {
                line,
                vertex: a.to_string(),
            });
        }
        if !seen.insert((u, v)) {
            match opts.duplicates {
                DuplicatePolicy::Reject => {
                    return Err(Error::DuplicateArc {
                        line,
                        from: a.to_string(),
                        to: b.to_string(),
                    })
                }
                DuplicatePolicy::Warn => {
                    warnings.push(ParseWarning {
                        line,
                        message: format!("duplicate arc ({a}, {b}) ignored"),
                    });
                    continue;
                }
            }
        }
        arcs.push((u, v));
    }

    let n = if numeric {
        arcs.iter()
            .map(|&(u, v)| u.max(v) + 1)
            .max()
            .unwrap_or(0)
            .max(declared_n)
    } else {
        labels.len().max(declared_n)
    };
    let mut d = Digraph::from_arcs(n, arcs)?;
    if !numeric {
        while labels.len() < n {
            labels.push(labels.len().to_string());
        }
        d = d.with_labels(labels)?;
    }
    Ok((d, warnings))
}

/// Writes an edge list that [`parse_edge_list`] reads back to the same
/// digraph. Labels are written when present.
pub fn serialize_digraph(d: &Digraph) -> String {
    let mut s = format!("# n={}\n", d.n());
    for (u, v) in d.arcs() {
        s.push_str(&d.label(u));
        s.push(' ');
        s.push_str(&d.label(v));
        s.push('\n');
    }
    s
}

/// JSON shape `{"n": .., "arcs": [[u, v], ..], "labels": {..}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigraphJson {
    pub n: usize,
    pub arcs: Vec<[Vertex; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub labels: BTreeMap<Vertex, String>,
}

impl From<Digraph> for DigraphJson {
    fn from(d: Digraph) -> Self {
        DigraphJson::from(&d)
    }
}

impl From<&Digraph> for DigraphJson {
    fn from(d: &Digraph) -> Self {
        DigraphJson {
            n: d.n(),
            arcs: d.arcs().map(|(u, v)| [u, v]).collect(),
            labels: d
                .labels()
                .map(|l| l.iter().cloned().enumerate().collect())
                .unwrap_or_default(),
        }
    }
}

impl TryFrom<DigraphJson> for Digraph {
    type Error = Error;

    fn try_from(j: DigraphJson) -> Result<Self> {
        let d = Digraph::from_arcs(j.n, j.arcs.iter().map(|a| (a[0], a[1])))?;
        if j.labels.is_empty() {
            return Ok(d);
        }
        let mut labels: Vec<String> = (0..j.n).map(|v| v.to_string()).collect();
        for (v, l) in j.labels {
            d.check_vertex(v)?;
            labels[v] = l;
        }
        d.with_labels(labels)
    }
}

pub fn digraph_to_json(d: &Digraph) -> serde_json::Value {
    serde_json::to_value(DigraphJson::from(d)).expect("digraph json is serializable")
}

pub fn digraph_from_json(text: &str) -> Result<Digraph> {
    let j: DigraphJson = serde_json::from_str(text)?;
    j.try_into()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_cycle() {
        let d = parse_digraph("0 1\n1 2\n2 0").unwrap();
        assert_eq!(d.n(), 3);
        assert_eq!(d.arc_count(), 3);
        assert!(d.is_strong());
        assert!(d.labels().is_none());
    }

    #[test]
    fn parses_labelled_digon() {
        let d = parse_digraph("a b\nb a").unwrap();
        assert_eq!(d.n(), 2);
        assert!(d.has_arc(0, 1) && d.has_arc(1, 0));
        assert_eq!(d.labels().unwrap(), ["a", "b"]);
    }

    #[test]
    fn loop_is_rejected_with_line() {
        match parse_digraph("0 0") {
            Err(Error::LoopArc { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected loop error, got {other:?}"),
        }
    }

    #[test]
    fn malformed_line_reports_line_number() {
        match parse_digraph("# header\n0 1\n1 2 3\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn duplicates_warn_or_reject() {
        let (d, w) = parse_edge_list("0 1\n1 0\n0 1\n", ParseOptions::default()).unwrap();
        assert_eq!(d.arc_count(), 2);
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].line, 3);
        let strict = ParseOptions {
            duplicates: DuplicatePolicy::Reject,
        };
        assert!(matches!(
            parse_edge_list("0 1\n0 1\n", strict),
            Err(Error::DuplicateArc { line: 2, .. })
        ));
    }

    #[test]
    fn order_header_keeps_isolated_vertices() {
        let d = parse_digraph("# n=5\n0 1\n1 0\n").unwrap();
        assert_eq!(d.n(), 5);
    }

    #[test]
    fn json_shape() {
        let d = parse_digraph("x y\ny x").unwrap();
        let v = digraph_to_json(&d);
        assert_eq!(v["n"], 2);
        assert_eq!(v["arcs"], serde_json::json!([[0, 1], [1, 0]]));
        assert_eq!(v["labels"]["0"], "x");
        let back = digraph_from_json(&v.to_string()).unwrap();
        assert_eq!(back, d);
    }

    fn arbitrary_digraph() -> impl Strategy<Value = Digraph> {
        (1usize..10).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..30).prop_map(move |arcs| {
                Digraph::from_arcs(n, arcs.into_iter().filter(|(u, v)| u != v)).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn edge_list_round_trip(d in arbitrary_digraph()) {
            let back = parse_digraph(&serialize_digraph(&d)).unwrap();
            prop_assert_eq!(back, d);
        }

        #[test]
        fn labelled_round_trip(d in arbitrary_digraph()) {
            let labels = (0..d.n()).map(|v| format!("v{v}")).collect();
            let d = d.with_labels(labels).unwrap();
            let back = parse_digraph(&serialize_digraph(&d)).unwrap();
            prop_assert_eq!(back.n(), d.n());
            let relabel: Vec<(String, String)> = back.arcs().map(|(u, v)| (back.label(u), back.label(v))).collect();
            let orig: Vec<(String, String)> = d.arcs().map(|(u, v)| (d.label(u), d.label(v))).collect();
            let mut a = relabel; a.sort();
            let mut b = orig; b.sort();
            prop_assert_eq!(a, b);
        }
    }
}
