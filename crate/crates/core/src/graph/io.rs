//! Graph text and JSON formats.
//!
//! Text: one edge `u v` per line, `vertex w` declares a vertex (needed for
//! isolated ones), and a line whose first non-blank character is `#` is a
//! comment. Labels may contain `#` elsewhere, as polarized copies do (`a#1`).
//! JSON: `{"vertices": [...], "edges": [["u", "v"], ...]}`.

use serde::{Deserialize, Serialize};

use super::SimpleGraph;
use crate::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    #[serde(default)]
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<[String; 2]>,
}

impl SimpleGraph {
    /// Text form listing every vertex (in order) and then every edge.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for l in self.labels() {
            s.push_str("vertex ");
            s.push_str(l);
            s.push('\n');
        }
        for (u, v) in self.edge_labels() {
            s.push_str(u);
            s.push(' ');
            s.push_str(v);
            s.push('\n');
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<SimpleGraph> {
        let mut g = SimpleGraph::new();
        for (no, raw) in text.lines().enumerate() {
            let line = no + 1;
            let err = |message: String| Error::Parse { line, message };
            let body = raw.trim();
            if body.is_empty() || body.starts_with('#') {
                continue;
            }
            let toks: Vec<&str> = body.split_whitespace().collect();
            match toks.as_slice() {
                ["vertex", w] => {
                    g.ensure_vertex(w).map_err(|e| err(e.to_string()))?;
                }
                ["vertex", ..] => return Err(err("expected `vertex <label>`".into())),
                [u, v] => {
                    if u == v {
                        return Err(err(format!("self-loop at `{u}`")));
                    }
                    g.ensure_vertex(u).map_err(|e| err(e.to_string()))?;
                    g.ensure_vertex(v).map_err(|e| err(e.to_string()))?;
                    g.add_edge(u, v).map_err(|e| err(e.to_string()))?;
                }
                _ => return Err(err(format!("expected `u v` or `vertex w`, found `{body}`"))),
            }
        }
        Ok(g)
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: self.labels().to_vec(),
            edges: self
                .edge_labels()
                .into_iter()
                .map(|(u, v)| [u.to_string(), v.to_string()])
                .collect(),
        }
    }

    pub fn from_json(j: &GraphJson) -> Result<SimpleGraph> {
        let mut g = SimpleGraph::with_vertices(j.vertices.iter().cloned())?;
        for [u, v] in &j.edges {
            g.ensure_vertex(u)?;
            g.ensure_vertex(v)?;
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Accepts either format, choosing JSON when the input starts with `{`.
    pub fn parse_any(text: &str) -> Result<SimpleGraph> {
        if text.trim_start().starts_with('{') {
            let j: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse {
                line: e.line(),
                message: e.to_string(),
            })?;
            SimpleGraph::from_json(&j)
        } else {
            SimpleGraph::parse_text(text)
        }
    }
}
