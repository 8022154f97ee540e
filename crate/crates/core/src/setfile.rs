//! Vertex-set files: one permutation word per line, `#` starts a comment.

use std::path::Path;

use crate::digraph::{OrientedGraph, VertexSet};
use crate::error::{Error, Result};
use crate::perm::PermWord;

pub fn parse_set_text(text: &str, g: &OrientedGraph) -> Result<VertexSet> {
    let degree = g.word_degree();
    let mut ids = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::SetFile { line: k + 1, message };
        let w: PermWord = line.parse().map_err(|e: Error| err(e.to_string()))?;
        match degree {
            Some(d) if d != w.degree() => {
                return Err(err(format!("{w} has degree {}, the graph has degree {d}", w.degree())))
            }
            None => return Err(err("the graph is not labelled by permutation words".into())),
            _ => {}
        }
        let id = g.vertex_of_word(&w).ok_or_else(|| {
            let why = if w.is_even() { String::new() } else { " (odd permutation)".to_string() };
            err(format!("{w} is not a vertex of {}{why}", g.tag()))
        })?;
        if ids.contains(&id) {
            return Err(err(format!("duplicate word {w}")));
        }
        ids.push(id);
    }
    VertexSet::new(ids, g)
}

pub fn parse_set_file(path: &Path, g: &OrientedGraph) -> Result<VertexSet> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_set_text(&text, g)
}
