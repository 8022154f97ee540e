//! Oriented graph storage and the structural primitives the predicates use.

mod export;
mod search;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::PermWord;

pub use export::{export_graph, parse_edges, ExportFormat, GraphDocument};
pub use search::{enumerate_induced_copies, isomorphic, CopySearch};

pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexLabel {
    Word(PermWord),
    Ternary(Vec<u8>),
    /// A vertex of a two-layer cover: base label and layer.
    Layered(Box<VertexLabel>, u8),
    Plain(usize),
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Word(w) => write!(f, "{w}"),
            VertexLabel::Ternary(t) => {
                for d in t {
                    write!(f, "{d}")?;
                }
                Ok(())
            }
            VertexLabel::Layered(base, layer) => write!(f, "{base}.{layer}"),
            VertexLabel::Plain(i) => write!(f, "{i}"),
        }
    }
}

/// Which construction produced a graph, with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FamilyTag {
    pub name: String,
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
}

impl FamilyTag {
    pub fn new(name: impl Into<String>, n: Option<usize>) -> Self {
        FamilyTag {
            name: name.into(),
            n,
            variant: None,
        }
    }

    pub fn with_variant(mut self, variant: impl Into<String>) -> Self {
        self.variant = Some(variant.into());
        self
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        if let Some(n) = self.n {
            write!(f, "({n})")?;
        }
        if let Some(v) = &self.variant {
            write!(f, "[{v}]")?;
        }
        Ok(())
    }
}

/// Loop-free digraph without 2-cycles, or an undirected graph stored as
/// symmetric arc pairs with the `undirected` flag set.
///
/// Out-adjacency lists are sorted by head and carry a small arc label
/// (the generator index for Cayley families, 0 otherwise).
#[derive(Debug, Clone)]
pub struct OrientedGraph {
    tag: FamilyTag,
    labels: Vec<VertexLabel>,
    out: Vec<Vec<(VertexId, u8)>>,
    inn: Vec<Vec<VertexId>>,
    undirected: bool,
    arc_count: usize,
    index: HashMap<VertexLabel, VertexId>,
}

#[derive(Debug, Clone)]
pub struct GraphBuilder {
    tag: FamilyTag,
    labels: Vec<VertexLabel>,
    arcs: Vec<(VertexId, VertexId, u8)>,
    undirected: bool,
}

impl GraphBuilder {
    pub fn new(tag: FamilyTag) -> Self {
        GraphBuilder {
            tag,
            labels: Vec::new(),
            arcs: Vec::new(),
            undirected: false,
        }
    }

    pub fn undirected(tag: FamilyTag) -> Self {
        GraphBuilder {
            undirected: true,
            ..Self::new(tag)
        }
    }

    pub fn add_vertex(&mut self, label: VertexLabel) -> VertexId {
        self.labels.push(label);
        self.labels.len() - 1
    }

    pub fn add_arc(&mut self, tail: VertexId, head: VertexId, label: u8) {
        self.arcs.push((tail, head, label));
    }

    /// Adds both orientations of an undirected edge.
    pub fn add_edge(&mut self, a: VertexId, b: VertexId, label: u8) {
        self.arcs.push((a, b, label));
        self.arcs.push((b, a, label));
    }

    pub fn build(self) -> Result<OrientedGraph> {
        let n = self.labels.len();
        let mut out: Vec<Vec<(VertexId, u8)>> = vec![Vec::new(); n];
        for &(u, v, l) in &self.arcs {
            for id in [u, v] {
                if id >= n {
                    return Err(Error::ForeignVertex { id, vertex_count: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            out[u].push((v, l));
        }
        for (u, list) in out.iter_mut().enumerate() {
            list.sort_unstable();
            for pair in list.windows(2) {
                if pair[0].0 == pair[1].0 {
                    return Err(Error::DuplicateArc(u, pair[0].0));
                }
            }
        }
        let has = |u: VertexId, v: VertexId| out[u].binary_search_by_key(&v, |&(h, _)| h).is_ok();
        for (u, arcs) in out.iter().enumerate() {
            for &(v, _) in arcs {
                let back = has(v, u);
                if self.undirected && !back {
                    return Err(Error::Construction(format!("undirected graph missing arc ({v},{u})")));
                }
                if !self.undirected && back {
                    return Err(Error::TwoCycle(u.min(v), u.max(v)));
                }
            }
        }
        let mut inn = vec![Vec::new(); n];
        for (u, list) in out.iter().enumerate() {
            for &(v, _) in list {
                inn[v].push(u);
            }
        }
        let mut index = HashMap::with_capacity(n);
        for (id, label) in self.labels.iter().enumerate() {
            if index.insert(label.clone(), id).is_some() {
                return Err(Error::DuplicateLabel(label.to_string()));
            }
        }
        Ok(OrientedGraph {
            tag: self.tag,
            labels: self.labels,
            out,
            inn,
            undirected: self.undirected,
            arc_count: self.arcs.len(),
            index,
        })
    }
}

impl OrientedGraph {
    pub fn tag(&self) -> &FamilyTag {
        &self.tag
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Number of stored arcs; an undirected edge counts twice.
    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn is_undirected(&self) -> bool {
        self.undirected
    }

    pub fn label(&self, v: VertexId) -> &VertexLabel {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn vertex_of(&self, label: &VertexLabel) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    pub fn vertex_of_word(&self, w: &PermWord) -> Option<VertexId> {
        self.vertex_of(&VertexLabel::Word(*w))
    }

    pub fn word(&self, v: VertexId) -> Option<&PermWord> {
        match &self.labels[v] {
            VertexLabel::Word(w) => Some(w),
            _ => None,
        }
    }

    /// Degree of the permutation words labelling this graph, if it has any.
    pub fn word_degree(&self) -> Option<usize> {
        self.labels.first().and_then(|l| match l {
            VertexLabel::Word(w) => Some(w.degree()),
            _ => None,
        })
    }

    pub fn out_arcs(&self, v: VertexId) -> &[(VertexId, u8)] {
        &self.out[v]
    }

    pub fn successors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.out[v].iter().map(|&(h, _)| h)
    }

    pub fn predecessors(&self, v: VertexId) -> &[VertexId] {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.inn[v].len()
    }

    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.arc_label(u, v).is_some()
    }

    pub fn arc_label(&self, u: VertexId, v: VertexId) -> Option<u8> {
        self.out[u]
            .binary_search_by_key(&v, |&(h, _)| h)
            .ok()
            .map(|k| self.out[u][k].1)
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId, u8)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&(v, l)| (u, v, l)))
    }

    /// Neighbours in the underlying undirected graph, sorted and deduplicated.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut nb: Vec<VertexId> = self.successors(v).chain(self.inn[v].iter().copied()).collect();
        nb.sort_unstable();
        nb.dedup();
        nb
    }

    /// Common in/out degree when every vertex has `indeg == outdeg == r`.
    pub fn regular_degree(&self) -> Option<usize> {
        let r = self.out.first().map_or(0, Vec::len);
        (0..self.vertex_count())
            .all(|v| self.out_degree(v) == r && self.in_degree(v) == r)
            .then_some(r)
    }

    pub fn underlying_undirected(&self) -> OrientedGraph {
        let mut b = GraphBuilder::undirected(self.tag.clone().with_variant("undirected"));
        for l in &self.labels {
            b.add_vertex(l.clone());
        }
        for (u, v, l) in self.arcs() {
            if self.undirected {
                b.add_arc(u, v, l);
            } else {
                b.add_edge(u, v, l);
            }
        }
        b.build().expect("underlying graph of a valid graph is valid")
    }

    /// Subgraph induced on `set`; returns the graph and the map from new ids
    /// to old ids.
    pub fn induced_subgraph(&self, set: &VertexSet) -> (OrientedGraph, Vec<VertexId>) {
        let old: Vec<VertexId> = set.iter().collect();
        let mut new_of = vec![usize::MAX; self.vertex_count()];
        let mut b = GraphBuilder {
            undirected: self.undirected,
            ..GraphBuilder::new(self.tag.clone().with_variant("induced"))
        };
        for (k, &v) in old.iter().enumerate() {
            new_of[v] = k;
            b.add_vertex(self.labels[v].clone());
        }
        for &v in &old {
            for &(h, l) in &self.out[v] {
                if new_of[h] != usize::MAX {
                    b.add_arc(new_of[v], new_of[h], l);
                }
            }
        }
        (b.build().expect("induced subgraph of a valid graph is valid"), old)
    }

    /// Same vertex labels in the same order and the same arc set.
    pub fn same_structure(&self, other: &OrientedGraph) -> bool {
        self.labels == other.labels
            && self.undirected == other.undirected
            && self.out.iter().zip(&other.out).all(|(a, b)| {
                a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.0 == y.0)
            })
    }
}

/// A sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct VertexSet(Vec<VertexId>);

impl VertexSet {
    pub fn new(ids: impl IntoIterator<Item = VertexId>, g: &OrientedGraph) -> Result<Self> {
        let mut v: Vec<VertexId> = ids.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if let Some(&id) = v.last() {
            if id >= g.vertex_count() {
                return Err(Error::ForeignVertex {
                    id,
                    vertex_count: g.vertex_count(),
                });
            }
        }
        Ok(VertexSet(v))
    }

    pub fn all(g: &OrientedGraph) -> Self {
        VertexSet((0..g.vertex_count()).collect())
    }

    pub(crate) fn from_sorted(ids: Vec<VertexId>) -> Self {
        debug_assert!(ids.windows(2).all(|p| p[0] < p[1]));
        VertexSet(ids)
    }

    pub fn ids(&self) -> &[VertexId] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn mask(&self, vertex_count: usize) -> Vec<bool> {
        let mut m = vec![false; vertex_count];
        for &v in &self.0 {
            m[v] = true;
        }
        m
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        let (mut a, mut b) = (0, 0);
        while a < self.0.len() && b < other.0.len() {
            match self.0[a].cmp(&other.0[b]) {
                std::cmp::Ordering::Less => a += 1,
                std::cmp::Ordering::Greater => b += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut v: Vec<VertexId> = self.0.iter().chain(&other.0).copied().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    /// Vertices of `g` outside this set.
    pub fn complement(&self, g: &OrientedGraph) -> VertexSet {
        let m = self.mask(g.vertex_count());
        VertexSet((0..g.vertex_count()).filter(|&v| !m[v]).collect())
    }

    pub fn words(&self, g: &OrientedGraph) -> Vec<String> {
        self.0.iter().map(|&v| g.label(v).to_string()).collect()
    }
}

pub(crate) fn check_set(g: &OrientedGraph, s: &VertexSet) -> Result<()> {
    match s.0.last() {
        Some(&id) if id >= g.vertex_count() => Err(Error::ForeignVertex {
            id,
            vertex_count: g.vertex_count(),
        }),
        _ => Ok(()),
    }
}

/// `(N_plus, N_minus)`: outside vertices receiving an arc from `s`, and
/// outside vertices sending an arc into `s`.
pub fn boundary_sets(g: &OrientedGraph, s: &VertexSet) -> Result<(VertexSet, VertexSet)> {
    check_set(g, s)?;
    let inside = s.mask(g.vertex_count());
    let mut plus = vec![false; g.vertex_count()];
    let mut minus = vec![false; g.vertex_count()];
    for v in s.iter() {
        for h in g.successors(v) {
            if !inside[h] {
                plus[h] = true;
            }
        }
        for &t in g.predecessors(v) {
            if !inside[t] {
                minus[t] = true;
            }
        }
    }
    let collect = |m: Vec<bool>| VertexSet((0..g.vertex_count()).filter(|&v| m[v]).collect());
    Ok((collect(plus), collect(minus)))
}

/// No arc in either direction joins two members.
pub fn is_stable(g: &OrientedGraph, s: &VertexSet) -> bool {
    if check_set(g, s).is_err() {
        return false;
    }
    let inside = s.mask(g.vertex_count());
    s.iter().all(|v| g.successors(v).all(|h| !inside[h]))
}

/// Every vertex of `G[S]` is a source, a sink or isolated.
pub fn is_pm_stable(g: &OrientedGraph, s: &VertexSet) -> bool {
    if check_set(g, s).is_err() {
        return false;
    }
    let inside = s.mask(g.vertex_count());
    s.iter().all(|v| {
        let has_out = g.successors(v).any(|h| inside[h]);
        let has_in = g.predecessors(v).iter().any(|&t| inside[t]);
        !(has_out && has_in)
    })
}

/// Tarjan's algorithm, iterative. Components come out in reverse
/// topological order; each component is sorted.
pub fn strongly_connected_components(g: &OrientedGraph) -> Vec<Vec<VertexId>> {
    let n = g.vertex_count();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut next = 0usize;
    let mut call: Vec<(VertexId, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if let Some(&(w, _)) = g.out[v].get(*pos) {
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    comps.push(comp);
                }
            }
        }
    }
    comps
}

pub fn strongly_connected(g: &OrientedGraph) -> bool {
    g.vertex_count() > 0 && strongly_connected_components(g).len() == 1
}

/// Components of the underlying undirected graph, each sorted, ordered by
/// least member.
pub fn weakly_connected_components(g: &OrientedGraph) -> Vec<Vec<VertexId>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut comp = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in g.successors(v).chain(g.predecessors(v).iter().copied()) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Every directed 3-cycle once, rotated so the least id leads, in
/// lexicographic order.
pub fn directed_triangles(g: &OrientedGraph) -> Vec<[VertexId; 3]> {
    let mut out = Vec::new();
    for u in 0..g.vertex_count() {
        for v in g.successors(u).filter(|&v| v > u) {
            for w in g.successors(v).filter(|&w| w > u) {
                if g.has_arc(w, u) {
                    out.push([u, v, w]);
                }
            }
        }
    }
    out
}

/// Number of directed triangles through each vertex.
pub fn triangle_counts(g: &OrientedGraph) -> Vec<usize> {
    let mut counts = vec![0; g.vertex_count()];
    for t in directed_triangles(g) {
        for v in t {
            counts[v] += 1;
        }
    }
    counts
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MapKind {
    PlusMap,
    MinusMap,
    Neither,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MapClassification {
    pub kind: MapKind,
    pub injective: bool,
    /// Injective, and the image induces exactly the corresponding arcs.
    pub inclusive: bool,
}

/// Classifies `m: V(G) -> V(H)`, given as `m[u]` for every vertex `u` of `g`.
pub fn classify_vertex_map(g: &OrientedGraph, h: &OrientedGraph, m: &[VertexId]) -> MapClassification {
    let neither = |injective| MapClassification {
        kind: MapKind::Neither,
        injective,
        inclusive: false,
    };
    if m.len() != g.vertex_count() || m.iter().any(|&x| x >= h.vertex_count()) {
        return neither(false);
    }
    let mut hit = vec![false; h.vertex_count()];
    for &x in m {
        if std::mem::replace(&mut hit[x], true) {
            return neither(false);
        }
    }
    let preserves = g.arcs().all(|(u, v, _)| h.has_arc(m[u], m[v]));
    let reverses = g.arcs().all(|(u, v, _)| h.has_arc(m[v], m[u]));
    let kind = if preserves {
        MapKind::PlusMap
    } else if reverses {
        MapKind::MinusMap
    } else {
        return neither(true);
    };
    let image_arcs: usize = m
        .iter()
        .map(|&x| h.successors(x).filter(|&y| hit[y]).count())
        .sum();
    MapClassification {
        kind,
        injective: true,
        inclusive: image_arcs == g.arc_count(),
    }
}

/// Vertex `(u, layer)` gets id `2u + layer`; each arc `(u, v)` becomes
/// `((u,0),(v,1))` and `((u,1),(v,0))`.
pub fn canonical_double_cover(g: &OrientedGraph) -> OrientedGraph {
    let mut b = GraphBuilder::new(FamilyTag {
        name: format!("double_cover<{}>", g.tag()),
        n: g.tag().n,
        variant: None,
    });
    for l in g.labels() {
        b.add_vertex(VertexLabel::Layered(Box::new(l.clone()), 0));
        b.add_vertex(VertexLabel::Layered(Box::new(l.clone()), 1));
    }
    for (u, v, l) in g.arcs() {
        b.add_arc(2 * u, 2 * v + 1, l);
        b.add_arc(2 * u + 1, 2 * v, l);
    }
    b.build().expect("double cover of an oriented graph is oriented")
}

/// Two-colouring of the underlying graph, if one exists.
pub fn bipartition(g: &OrientedGraph) -> Option<Vec<u8>> {
    let n = g.vertex_count();
    let mut side = vec![u8::MAX; n];
    for root in 0..n {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return None;
                }
            }
        }
    }
    Some(side)
}

/// Shortest path in the underlying undirected graph.
pub fn undirected_path(g: &OrientedGraph, from: VertexId, to: VertexId) -> Option<Vec<VertexId>> {
    let n = g.vertex_count();
    if from >= n || to >= n {
        return None;
    }
    let mut prev = vec![usize::MAX; n];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut path = vec![to];
            let mut x = to;
            while x != from {
                x = prev[x];
                path.push(x);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors(v) {
            if prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Turns a path of the underlying graph into a directed walk with the same
/// endpoints. A backward step over arc `(a, b)` (walking `b` to `a`) becomes
/// `b -> c -> a` through the directed triangle `a -> b -> c -> a`.
pub fn directify_path(g: &OrientedGraph, path: &[VertexId]) -> Result<Vec<VertexId>> {
    let mut walk = Vec::with_capacity(path.len() * 2);
    let Some(&first) = path.first() else {
        return Ok(walk);
    };
    if first >= g.vertex_count() {
        return Err(Error::ForeignVertex {
            id: first,
            vertex_count: g.vertex_count(),
        });
    }
    walk.push(first);
    for pair in path.windows(2) {
        let (x, y) = (pair[0], pair[1]);
        if y >= g.vertex_count() {
            return Err(Error::ForeignVertex {
                id: y,
                vertex_count: g.vertex_count(),
            });
        }
        if g.has_arc(x, y) {
            walk.push(y);
        } else if g.has_arc(y, x) {
            let (a, b) = (y, x);
            let c = g
                .successors(b)
                .find(|&c| g.has_arc(c, a))
                .ok_or(Error::ArcWithoutTriangle(a, b))?;
            walk.push(c);
            walk.push(a);
        } else {
            return Err(Error::NotAPath(format!("{x} and {y} are not adjacent")));
        }
    }
    Ok(walk)
}

pub fn is_directed_walk(g: &OrientedGraph, walk: &[VertexId]) -> bool {
    walk.windows(2).all(|p| g.has_arc(p[0], p[1]))
}

#[cfg(test)]
pub(crate) mod testing {
    use super::*;

    pub fn plain(n: usize, arcs: &[(usize, usize)]) -> OrientedGraph {
        let mut b = GraphBuilder::new(FamilyTag::new("test", Some(n)));
        for i in 0..n {
            b.add_vertex(VertexLabel::Plain(i));
        }
        for &(u, v) in arcs {
            b.add_arc(u, v, 0);
        }
        b.build().unwrap()
    }

    pub fn triangle() -> OrientedGraph {
        plain(3, &[(0, 1), (1, 2), (2, 0)])
    }

    pub fn set(g: &OrientedGraph, ids: &[usize]) -> VertexSet {
        VertexSet::new(ids.iter().copied(), g).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::testing::*;
    use super::*;

    #[test]
    fn builder_rejects_loops_two_cycles_and_duplicates() {
        let mk = |arcs: &[(usize, usize)]| {
            let mut b = GraphBuilder::new(FamilyTag::new("t", None));
            for i in 0..3 {
                b.add_vertex(VertexLabel::Plain(i));
            }
            for &(u, v) in arcs {
                b.add_arc(u, v, 0);
            }
            b.build()
        };
        assert_eq!(mk(&[(1, 1)]).unwrap_err(), Error::SelfLoop(1));
        assert_eq!(mk(&[(0, 1), (1, 0)]).unwrap_err(), Error::TwoCycle(0, 1));
        assert_eq!(mk(&[(0, 1), (0, 1)]).unwrap_err(), Error::DuplicateArc(0, 1));
        assert!(matches!(mk(&[(0, 7)]).unwrap_err(), Error::ForeignVertex { id: 7, .. }));
    }

    #[test]
    fn boundary_of_triangle_vertex() {
        let g = triangle();
        let (p, m) = boundary_sets(&g, &set(&g, &[0])).unwrap();
        assert_eq!(p.ids(), &[1]);
        assert_eq!(m.ids(), &[2]);
        let (p, m) = boundary_sets(&g, &VertexSet::all(&g)).unwrap();
        assert!(p.is_empty() && m.is_empty());
    }

    #[test]
    fn foreign_ids_are_rejected() {
        let g = triangle();
        let big = plain(5, &[]);
        let s = set(&big, &[4]);
        assert!(boundary_sets(&g, &s).is_err());
        assert!(VertexSet::new([3], &g).is_err());
    }

    #[test]
    fn stability_predicates() {
        let g = triangle();
        assert!(is_stable(&g, &set(&g, &[])));
        assert!(!is_stable(&g, &set(&g, &[0, 1])));
        assert!(is_stable(&g, &set(&g, &[1])));
        assert!(is_pm_stable(&g, &set(&g, &[0, 1])));
        assert!(!is_pm_stable(&g, &set(&g, &[0, 1, 2])));
    }

    #[test]
    fn strong_connectivity() {
        assert!(strongly_connected(&triangle()));
        let two = plain(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert!(!strongly_connected(&two));
        assert_eq!(strongly_connected_components(&two).len(), 2);
        let path = plain(3, &[(0, 1), (1, 2)]);
        assert_eq!(strongly_connected_components(&path).len(), 3);
        assert_eq!(weakly_connected_components(&two), vec![vec![0, 1, 2], vec![3, 4, 5]]);
    }

    #[test]
    fn triangles_brute_force_agreement() {
        // transitive triple plus a directed triangle sharing a vertex
        let g = plain(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 2)]);
        let fast = directed_triangles(&g);
        let mut slow = Vec::new();
        for a in 0..5 {
            for b in 0..5 {
                for c in 0..5 {
                    if a < b && a < c && b != c && g.has_arc(a, b) && g.has_arc(b, c) && g.has_arc(c, a) {
                        slow.push([a, b, c]);
                    }
                }
            }
        }
        slow.sort();
        assert_eq!(fast, slow);
        assert_eq!(fast, vec![[2, 3, 4]]);
    }

    #[test]
    fn identity_map_is_inclusive_plus() {
        let g = triangle();
        let c = classify_vertex_map(&g, &g, &[0, 1, 2]);
        assert_eq!(c.kind, MapKind::PlusMap);
        assert!(c.inclusive && c.injective);
        let rev = classify_vertex_map(&g, &g, &[0, 2, 1]);
        assert_eq!(rev.kind, MapKind::MinusMap);
        let bad = classify_vertex_map(&g, &g, &[0, 0, 1]);
        assert_eq!(bad.kind, MapKind::Neither);
        assert!(!bad.injective);
        // a single arc mapped into a triangle's arc is a plus map, not
        // a homomorphism failure
        let arc = plain(2, &[(0, 1)]);
        let c = classify_vertex_map(&arc, &g, &[0, 1]);
        assert_eq!(c.kind, MapKind::PlusMap);
        assert!(c.inclusive);
        let path = plain(3, &[(0, 1), (1, 2)]);
        let c = classify_vertex_map(&path, &g, &[0, 1, 2]);
        assert_eq!(c.kind, MapKind::PlusMap);
        assert!(!c.inclusive);
    }

    #[test]
    fn double_cover_of_triangle_is_six_cycle() {
        let g = triangle();
        let d = canonical_double_cover(&g);
        assert_eq!(d.vertex_count(), 6);
        assert_eq!(d.arc_count(), 6);
        assert!(bipartition(&d).is_some());
        // brute force: each vertex has exactly one successor, and following
        // successors from 0 visits all 6 vertices before returning
        let mut v = 0;
        let mut seen = [false; 6];
        for _ in 0..6 {
            assert_eq!(d.out_degree(v), 1);
            assert!(!seen[v]);
            seen[v] = true;
            v = d.successors(v).next().unwrap();
        }
        assert_eq!(v, 0);
        assert!(directed_triangles(&d).is_empty());
    }

    #[test]
    fn directify_examples() {
        let g = triangle();
        assert_eq!(directify_path(&g, &[0, 2]).unwrap(), vec![0, 1, 2]);
        assert_eq!(directify_path(&g, &[0, 1, 2]).unwrap(), vec![0, 1, 2]);
        let path = plain(2, &[(0, 1)]);
        assert_eq!(directify_path(&path, &[1, 0]).unwrap_err(), Error::ArcWithoutTriangle(0, 1));
        let gap = plain(3, &[(0, 1)]);
        assert!(matches!(directify_path(&gap, &[0, 2]), Err(Error::NotAPath(_))));
    }

    #[test]
    fn induced_subgraph_keeps_labels() {
        let g = plain(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]);
        let (h, map) = g.induced_subgraph(&set(&g, &[1, 2, 3]));
        assert_eq!(map, vec![1, 2, 3]);
        assert_eq!(h.arc_count(), 2);
        assert_eq!(h.label(0), &VertexLabel::Plain(1));
    }
}
