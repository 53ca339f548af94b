//! DIMACS undirected-graph text format.
//!
//! ```text
//! c optional free-form comment
//! c label 1 {1,4}/6
//! p edge <order> <edges>
//! e 1 2
//! ```
//!
//! Endpoints are 1-based. Vertex labels travel in `c label <v> <text>`
//! comment lines; other comments are ignored on read.

use super::{Graph, GraphError, VertexLabel};

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    if let Some(labels) = g.labels() {
        for (v, l) in labels.iter().enumerate() {
            out.push_str(&format!("c label {} {}\n", v + 1, l));
        }
    }
    out.push_str(&format!("p edge {} {}\n", g.order(), g.edge_count()));
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

pub fn read_dimacs(text: &str) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut labels: Vec<(usize, usize, VertexLabel)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |message: String| GraphError::Dimacs { line, message };
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        match fields.next() {
            Some("c") => {
                if fields.next() == Some("label") {
                    let v: usize = fields
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| err("label line needs a vertex number".into()))?;
                    let rest: String = fields.collect::<Vec<_>>().join(" ");
                    let label: VertexLabel = rest.parse().map_err(|e| err(format!("{e}")))?;
                    labels.push((line, v, label));
                }
            }
            Some("p") => {
                if header.is_some() {
                    return Err(err("duplicate problem line".into()));
                }
                if fields.next() != Some("edge") {
                    return Err(err("expected `p edge <order> <edges>`".into()));
                }
                let nums: Vec<usize> = fields
                    .map(|t| t.parse::<usize>())
                    .collect::<Result<_, _>>()
                    .map_err(|e| err(format!("bad number: {e}")))?;
                let [n, m] = nums[..] else {
                    return Err(err("expected `p edge <order> <edges>`".into()));
                };
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| err("edge before problem line".into()))?;
                let nums: Vec<usize> = fields
                    .map(|t| t.parse::<usize>())
                    .collect::<Result<_, _>>()
                    .map_err(|e| err(format!("bad number: {e}")))?;
                let [u, v] = nums[..] else {
                    return Err(err("expected `e <u> <v>`".into()));
                };
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(err(format!("endpoint out of range 1..={n}")));
                }
                if u == v {
                    return Err(err(format!("self-loop at {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(err(format!("unknown line type `{other}`"))),
            None => {}
        }
    }

    let (n, m) = header.ok_or(GraphError::Dimacs {
        line: 0,
        message: "missing problem line".into(),
    })?;
    let g = Graph::new(n, &edges)?;
    if g.edge_count() != m {
        return Err(GraphError::Dimacs {
            line: 0,
            message: format!("header declares {m} edges, found {}", g.edge_count()),
        });
    }
    if labels.is_empty() {
        return Ok(g);
    }
    let mut slots: Vec<Option<VertexLabel>> = vec![None; n];
    for (line, v, label) in labels {
        if v == 0 || v > n || slots[v - 1].is_some() {
            return Err(GraphError::Dimacs {
                line,
                message: format!("bad or repeated label vertex {v}"),
            });
        }
        slots[v - 1] = Some(label);
    }
    let labels = slots
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or(GraphError::Dimacs {
            line: 0,
            message: "labels present for only some vertices".into(),
        })?;
    g.with_labels(labels)
}
