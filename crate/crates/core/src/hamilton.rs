//! Hamilton path and cycle search, and the a/b step-type encoding of paths
//! in star digraphs.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::budget::{Budget, Deadline};
use crate::digraph::{OrientedGraph, VertexId};
use crate::error::{Error, Result};
use crate::families::FamilySpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HamiltonMode {
    Cycle,
    Path,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "outcome")]
pub enum HamiltonOutcome {
    Found { witness: Vec<VertexId> },
    ExhaustedNone,
    BudgetExhausted,
}

#[derive(Debug, Clone, Serialize)]
pub struct HamiltonReport {
    pub graph: String,
    pub mode: HamiltonMode,
    pub start: Option<VertexId>,
    pub outcome: HamiltonOutcome,
    pub nodes: u64,
}

impl HamiltonReport {
    pub fn witness(&self) -> Option<&[VertexId]> {
        match &self.outcome {
            HamiltonOutcome::Found { witness } => Some(witness),
            _ => None,
        }
    }
}

/// Every vertex exactly once, consecutive arcs present, and for cycles the
/// closing arc.
pub fn validate_hamilton(g: &OrientedGraph, walk: &[VertexId], mode: HamiltonMode) -> bool {
    let mut seen = vec![false; g.vertex_count()];
    let distinct = walk.iter().all(|&v| v < g.vertex_count() && !std::mem::replace(&mut seen[v], true));
    let closes = match (mode, walk) {
        (HamiltonMode::Cycle, [first, .., last]) => g.has_arc(*last, *first),
        (HamiltonMode::Cycle, [_]) => g.vertex_count() == 1,
        _ => true,
    };
    distinct && walk.len() == g.vertex_count() && walk.windows(2).all(|p| g.has_arc(p[0], p[1])) && closes
}

struct Dfs<'a> {
    g: &'a OrientedGraph,
    mode: HamiltonMode,
    visited: Vec<bool>,
    path: Vec<VertexId>,
    nodes: u64,
    seen: Vec<u32>,
    stamp: u32,
    queue: Vec<VertexId>,
}

impl<'a> Dfs<'a> {
    fn new(g: &'a OrientedGraph, mode: HamiltonMode) -> Self {
        let n = g.vertex_count();
        Dfs {
            g,
            mode,
            visited: vec![false; n],
            path: Vec::with_capacity(n),
            nodes: 0,
            seen: vec![0; n],
            stamp: 0,
            queue: Vec::with_capacity(n),
        }
    }

    /// Remaining vertices all reachable from the path end through
    /// unvisited vertices, at most one of them (the end, for paths) without
    /// an onward arc, and for cycles the start still enterable.
    fn feasible(&mut self) -> bool {
        let g = self.g;
        let cur = *self.path.last().expect("nonempty path");
        let remaining = g.vertex_count() - self.path.len();
        if remaining == 0 {
            return true;
        }
        self.stamp += 1;
        let stamp = self.stamp;
        self.queue.clear();
        self.queue.push(cur);
        let mut reached = 0;
        let mut k = 0;
        while k < self.queue.len() {
            let v = self.queue[k];
            k += 1;
            for h in g.successors(v) {
                if !self.visited[h] && self.seen[h] != stamp {
                    self.seen[h] = stamp;
                    reached += 1;
                    self.queue.push(h);
                }
            }
        }
        if reached < remaining {
            return false;
        }
        let start = self.path[0];
        let mut dead_ends = 0;
        for &u in &self.queue[1..] {
            let onward = g
                .successors(u)
                .any(|h| !self.visited[h] || (self.mode == HamiltonMode::Cycle && h == start));
            if !onward {
                dead_ends += 1;
                if self.mode == HamiltonMode::Cycle || dead_ends > 1 {
                    return false;
                }
            }
        }
        self.mode == HamiltonMode::Path || g.predecessors(start).iter().any(|&t| !self.visited[t])
    }

    fn complete(&self) -> bool {
        self.path.len() == self.g.vertex_count()
            && (self.mode == HamiltonMode::Path || self.g.has_arc(*self.path.last().unwrap(), self.path[0]))
    }

    /// Calls `visit` on every Hamilton path or cycle extending the current
    /// path; `visit` returns false to stop. Returns false when stopped or
    /// out of time.
    fn extend(&mut self, deadline: &mut Deadline, visit: &mut dyn FnMut(&[VertexId]) -> bool) -> bool {
        self.nodes += 1;
        if deadline.expired() {
            return false;
        }
        if self.path.len() == self.g.vertex_count() {
            return !self.complete() || visit(&self.path);
        }
        if !self.feasible() {
            return true;
        }
        let cur = *self.path.last().unwrap();
        let next: Vec<VertexId> = self.g.successors(cur).filter(|&h| !self.visited[h]).collect();
        for h in next {
            self.visited[h] = true;
            self.path.push(h);
            let go = self.extend(deadline, visit);
            self.path.pop();
            self.visited[h] = false;
            if !go {
                return false;
            }
        }
        true
    }

    fn from(&mut self, start: VertexId, deadline: &mut Deadline, visit: &mut dyn FnMut(&[VertexId]) -> bool) -> bool {
        self.visited[start] = true;
        self.path.push(start);
        let go = self.extend(deadline, visit);
        self.path.pop();
        self.visited[start] = false;
        go
    }
}

fn check_start(g: &OrientedGraph, start: VertexId) -> Result<()> {
    if start >= g.vertex_count() {
        return Err(Error::ForeignVertex {
            id: start,
            vertex_count: g.vertex_count(),
        });
    }
    Ok(())
}

/// Depth-first search with reachability pruning. A cycle search from no
/// given start uses vertex 0, which every Hamilton cycle passes through; a
/// path search from no given start tries every start in order.
pub fn hamilton_search(
    g: &OrientedGraph,
    mode: HamiltonMode,
    start: Option<VertexId>,
    budget: Budget,
) -> Result<HamiltonReport> {
    if let Some(s) = start {
        check_start(g, s)?;
    }
    let mut dfs = Dfs::new(g, mode);
    let mut deadline = budget.start();
    let mut found = None;
    let starts: Vec<VertexId> = match (start, mode) {
        (Some(s), _) => vec![s],
        (None, HamiltonMode::Cycle) => (0..g.vertex_count().min(1)).collect(),
        (None, HamiltonMode::Path) => (0..g.vertex_count()).collect(),
    };
    for s in starts {
        dfs.from(s, &mut deadline, &mut |p| {
            found = Some(p.to_vec());
            false
        });
        if found.is_some() || deadline.has_expired() {
            break;
        }
    }
    let outcome = match found {
        Some(witness) => HamiltonOutcome::Found { witness },
        None if deadline.has_expired() => HamiltonOutcome::BudgetExhausted,
        None => HamiltonOutcome::ExhaustedNone,
    };
    Ok(HamiltonReport {
        graph: g.tag().to_string(),
        mode,
        start,
        outcome,
        nodes: dfs.nodes,
    })
}

/// Greedy left-to-right pairing: two equal consecutive labels give `b`,
/// otherwise `a`.
pub fn encode_labels(labels: &[u8]) -> String {
    let mut out = String::with_capacity(labels.len());
    let mut k = 0;
    while k < labels.len() {
        if k + 1 < labels.len() && labels[k] == labels[k + 1] {
            out.push('b');
            k += 2;
        } else {
            out.push('a');
            k += 1;
        }
    }
    out
}

/// Generator labels along a directed path.
pub fn path_labels(g: &OrientedGraph, path: &[VertexId]) -> Result<Vec<u8>> {
    let mut seen = vec![false; g.vertex_count()];
    for &v in path {
        if v >= g.vertex_count() || std::mem::replace(&mut seen[v], true) {
            return Err(Error::NotAPath(format!("vertex {v} repeated or out of range")));
        }
    }
    let labels = path
        .windows(2)
        .map(|p| g.arc_label(p[0], p[1]).ok_or_else(|| Error::NotAPath(format!("no arc {} -> {}", p[0], p[1]))))
        .collect::<Result<Vec<u8>>>()?;
    if let Some(k) = labels.windows(3).position(|w| w[0] == w[1] && w[1] == w[2]) {
        return Err(Error::NotAPath(format!("arcs {k}..{} share one generator", k + 3)));
    }
    Ok(labels)
}

pub fn encode_step_type(g: &OrientedGraph, path: &[VertexId]) -> Result<String> {
    Ok(encode_labels(&path_labels(g, path)?))
}

#[derive(Debug, Clone, Serialize)]
pub struct HamiltonPaths {
    pub start: VertexId,
    pub paths: Vec<Vec<VertexId>>,
    /// Type string to number of paths.
    pub types: BTreeMap<String, usize>,
    pub complete: bool,
}

/// Every directed Hamilton path from `start`, in DFS order.
pub fn enumerate_hamilton_paths(g: &OrientedGraph, start: VertexId, budget: Budget) -> Result<HamiltonPaths> {
    check_start(g, start)?;
    let mut paths = Vec::new();
    let mut dfs = Dfs::new(g, HamiltonMode::Path);
    let mut deadline = budget.start();
    let complete = dfs.from(start, &mut deadline, &mut |p| {
        paths.push(p.to_vec());
        true
    });
    let mut types = BTreeMap::new();
    for p in &paths {
        *types.entry(encode_step_type(g, p)?).or_insert(0) += 1;
    }
    Ok(HamiltonPaths {
        start,
        paths,
        types,
        complete,
    })
}

/// The Hamilton path from `start` whose type string is least with `a`
/// before `b`, ties broken by DFS order: a leading `a`, with `a` preferred
/// over `b` wherever a completion exists.
pub fn preferred_hamilton_path(
    g: &OrientedGraph,
    start: VertexId,
    budget: Budget,
) -> Result<Option<(Vec<VertexId>, String)>> {
    let all = enumerate_hamilton_paths(g, start, budget)?;
    let mut best: Option<(Vec<VertexId>, String)> = None;
    for p in all.paths {
        let t = encode_step_type(g, &p)?;
        if best.as_ref().is_none_or(|(_, b)| t < *b) {
            best = Some((p, t));
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

impl From<&HamiltonOutcome> for Answer {
    fn from(o: &HamiltonOutcome) -> Self {
        match o {
            HamiltonOutcome::Found { .. } => Answer::Yes,
            HamiltonOutcome::ExhaustedNone => Answer::No,
            HamiltonOutcome::BudgetExhausted => Answer::Unknown,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Traceability {
    pub family: FamilySpec,
    pub graph: String,
    pub vertex_count: usize,
    pub traceable: Answer,
    pub hamiltonian: Answer,
}

/// Exploratory: path and cycle searches for each family, each with the
/// given budget.
pub fn traceability_report(families: &[FamilySpec], budget: Budget) -> Result<Vec<Traceability>> {
    families
        .iter()
        .map(|spec| {
            let g = spec.build()?;
            let path = hamilton_search(&g, HamiltonMode::Path, None, budget)?;
            let cycle = hamilton_search(&g, HamiltonMode::Cycle, None, budget)?;
            Ok(Traceability {
                family: *spec,
                graph: g.tag().to_string(),
                vertex_count: g.vertex_count(),
                traceable: (&path.outcome).into(),
                hamiltonian: (&cycle.outcome).into(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::testing::{plain, triangle};
    use crate::families::{star_digraph, Family};

    #[test]
    fn triangle_is_hamiltonian() {
        let r = hamilton_search(&triangle(), HamiltonMode::Cycle, None, Budget::unlimited()).unwrap();
        assert!(validate_hamilton(&triangle(), r.witness().unwrap(), HamiltonMode::Cycle));
    }

    #[test]
    fn st4_has_paths_but_no_cycle() {
        let g = star_digraph(4).unwrap();
        let r = hamilton_search(&g, HamiltonMode::Cycle, None, Budget::unlimited()).unwrap();
        assert_eq!(r.outcome, HamiltonOutcome::ExhaustedNone);
        let p = hamilton_search(&g, HamiltonMode::Path, Some(0), Budget::unlimited()).unwrap();
        assert!(validate_hamilton(&g, p.witness().unwrap(), HamiltonMode::Path));
    }

    #[test]
    fn st4_path_types() {
        let g = star_digraph(4).unwrap();
        let mut all = BTreeMap::new();
        for s in 0..12 {
            let e = enumerate_hamilton_paths(&g, s, Budget::unlimited()).unwrap();
            assert!(e.complete);
            for (t, c) in e.types {
                *all.entry(t).or_insert(0) += c;
            }
        }
        let expected: BTreeMap<String, usize> = [("aababbb".to_string(), 24), ("bbbabaa".to_string(), 24)].into();
        assert_eq!(all, expected);
        let (path, t) = preferred_hamilton_path(&g, 0, Budget::unlimited()).unwrap().unwrap();
        assert_eq!(t, "aababbb");
        let mut labels = path_labels(&g, &path).unwrap();
        labels.reverse();
        assert_eq!(encode_labels(&labels), "bbbabaa");
    }

    #[test]
    fn encoding_rules() {
        assert_eq!(encode_labels(&[2]), "a");
        assert_eq!(encode_labels(&[2, 2, 3]), "ba");
        assert_eq!(encode_labels(&[2, 3, 3, 2]), "aba");
        let g3 = star_digraph(3).unwrap();
        let e = enumerate_hamilton_paths(&g3, 0, Budget::unlimited()).unwrap();
        assert_eq!(e.types.keys().collect::<Vec<_>>(), vec!["b"]);
        let g4 = star_digraph(4).unwrap();
        let bad = [0, g4.successors(0).next().unwrap(), 0];
        assert!(encode_step_type(&g4, &bad).is_err());
        let t = triangle();
        assert!(encode_step_type(&t, &[0, 2]).is_err());
    }

    #[test]
    fn dag_sink_has_no_paths() {
        let dag = plain(3, &[(0, 1), (0, 2)]);
        assert!(enumerate_hamilton_paths(&dag, 2, Budget::unlimited()).unwrap().paths.is_empty());
        let r = hamilton_search(&dag, HamiltonMode::Path, None, Budget::unlimited()).unwrap();
        assert_eq!(r.outcome, HamiltonOutcome::ExhaustedNone);
    }

    #[test]
    fn traceability_summary() {
        let specs = [FamilySpec::new(Family::StarDigraph, 3), FamilySpec::new(Family::StarDigraph, 4)];
        let r = traceability_report(&specs, Budget::seconds(5.0)).unwrap();
        assert_eq!((r[0].traceable, r[0].hamiltonian), (Answer::Yes, Answer::Yes));
        assert_eq!((r[1].traceable, r[1].hamiltonian), (Answer::Yes, Answer::No));
    }
}
