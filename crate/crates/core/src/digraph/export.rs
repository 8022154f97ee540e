use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{FamilyTag, GraphBuilder, OrientedGraph, VertexLabel};
use crate::error::{Error, Result};
use crate::report::SCHEMA;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Edges,
    Json,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "edges" => Ok(ExportFormat::Edges),
            "json" => Ok(ExportFormat::Json),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

/// JSON form of a graph: vertex label strings and `[tail, head, label]` arcs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub schema: String,
    pub family: String,
    pub undirected: bool,
    pub vertices: Vec<String>,
    pub arcs: Vec<[usize; 3]>,
}

impl GraphDocument {
    pub fn from_graph(g: &OrientedGraph) -> Self {
        GraphDocument {
            schema: SCHEMA.to_string(),
            family: g.tag().to_string(),
            undirected: g.is_undirected(),
            vertices: g.labels().iter().map(ToString::to_string).collect(),
            arcs: g.arcs().map(|(u, v, l)| [u, v, l as usize]).collect(),
        }
    }
}

pub fn export_graph(g: &OrientedGraph, format: ExportFormat) -> Vec<u8> {
    let mut out = String::new();
    match format {
        ExportFormat::Dot => {
            out.push_str("digraph {\n");
            for (u, v, _) in g.arcs() {
                let _ = writeln!(out, "  \"{}\" -> \"{}\";", g.label(u), g.label(v));
            }
            out.push_str("}\n");
        }
        ExportFormat::Edges => {
            let _ = writeln!(out, "vertices {}", g.vertex_count());
            for (u, v, _) in g.arcs() {
                let _ = writeln!(out, "{u} {v}");
            }
        }
        ExportFormat::Json => {
            out = serde_json::to_string_pretty(&GraphDocument::from_graph(g)).expect("graph document serializes");
            out.push('\n');
        }
    }
    out.into_bytes()
}

/// Reads the edge-list format back; vertices get plain numeric labels.
pub fn parse_edges(text: &str) -> Result<OrientedGraph> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("missing header".into()))?;
    let n: usize = header
        .strip_prefix("vertices ")
        .and_then(|x| x.trim().parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad header {header:?}")))?;
    let mut b = GraphBuilder::new(FamilyTag::new("edges", Some(n)));
    for i in 0..n {
        b.add_vertex(VertexLabel::Plain(i));
    }
    for line in lines {
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => b.add_arc(u, v, 0),
            _ => return Err(Error::Parse(format!("bad arc line {line:?}"))),
        }
    }
    b.build()
}
