//! Backtracking embedding search shared by isomorphism testing and
//! induced-copy enumeration.
//!
//! Pattern vertices are placed in BFS order over the underlying graph so
//! that every vertex after a component root has an already-placed
//! neighbour; its candidates are then the matching neighbours of that
//! neighbour's image. Vertices are pruned by (outdeg, indeg, triangles).

use std::collections::{BTreeMap, VecDeque};

use super::{directed_triangles, triangle_counts, OrientedGraph, VertexId, VertexSet};
use crate::budget::{Budget, Deadline};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Link {
    Root,
    /// Placed via an arc from the parent.
    FromParent(VertexId),
    /// Placed via an arc into the parent.
    ToParent(VertexId),
}

struct Embedder<'a> {
    pattern: &'a OrientedGraph,
    target: &'a OrientedGraph,
    order: Vec<VertexId>,
    links: Vec<Link>,
    exact: bool,
    pattern_keys: Vec<(usize, usize, usize)>,
    target_keys: Vec<(usize, usize, usize)>,
    map: Vec<VertexId>,
    inverse: Vec<VertexId>,
    root_candidates: Option<Vec<VertexId>>,
}

const NONE: usize = usize::MAX;

fn keys(g: &OrientedGraph) -> Vec<(usize, usize, usize)> {
    let tri = triangle_counts(g);
    (0..g.vertex_count())
        .map(|v| (g.out_degree(v), g.in_degree(v), tri[v]))
        .collect()
}

impl<'a> Embedder<'a> {
    fn new(pattern: &'a OrientedGraph, target: &'a OrientedGraph, exact: bool, first: &[VertexId]) -> Self {
        let n = pattern.vertex_count();
        let mut order = Vec::with_capacity(n);
        let mut links = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        let mut queue = VecDeque::new();
        let mut seeds: Vec<VertexId> = first.to_vec();
        seeds.extend(0..n);
        for seed in seeds {
            if placed[seed] {
                continue;
            }
            placed[seed] = true;
            order.push(seed);
            links.push(Link::Root);
            queue.push_back(seed);
            while let Some(v) = queue.pop_front() {
                for w in pattern.successors(v) {
                    if !placed[w] {
                        placed[w] = true;
                        order.push(w);
                        links.push(Link::FromParent(v));
                        queue.push_back(w);
                    }
                }
                for &w in pattern.predecessors(v) {
                    if !placed[w] {
                        placed[w] = true;
                        order.push(w);
                        links.push(Link::ToParent(v));
                        queue.push_back(w);
                    }
                }
            }
        }
        Embedder {
            pattern,
            target,
            order,
            links,
            exact,
            pattern_keys: keys(pattern),
            target_keys: keys(target),
            map: vec![NONE; n],
            inverse: vec![NONE; target.vertex_count()],
            root_candidates: None,
        }
    }

    fn key_ok(&self, p: VertexId, t: VertexId) -> bool {
        let (a, b) = (self.pattern_keys[p], self.target_keys[t]);
        if self.exact {
            a == b
        } else {
            a.0 <= b.0 && a.1 <= b.1 && a.2 <= b.2
        }
    }

    /// Arcs between `p` and placed pattern vertices correspond exactly to
    /// arcs between `t` and their images.
    fn consistent(&self, p: VertexId, t: VertexId) -> bool {
        let (pat, tgt) = (self.pattern, self.target);
        let mut pattern_links = 0usize;
        for w in pat.successors(p) {
            if self.map[w] != NONE {
                if !tgt.has_arc(t, self.map[w]) {
                    return false;
                }
                pattern_links += 1;
            }
        }
        for &w in pat.predecessors(p) {
            if self.map[w] != NONE {
                if !tgt.has_arc(self.map[w], t) {
                    return false;
                }
                pattern_links += 1;
            }
        }
        let target_links = tgt.successors(t).filter(|&y| self.inverse[y] != NONE).count()
            + tgt.predecessors(t).iter().filter(|&&y| self.inverse[y] != NONE).count();
        target_links == pattern_links
    }

    fn candidates(&self, depth: usize) -> Vec<VertexId> {
        match self.links[depth] {
            Link::Root => match (&self.root_candidates, depth) {
                (Some(c), 0) => c.clone(),
                _ => (0..self.target.vertex_count()).collect(),
            },
            Link::FromParent(p) => self.target.successors(self.map[p]).collect(),
            Link::ToParent(p) => self.target.predecessors(self.map[p]).to_vec(),
        }
    }

    /// Visits every embedding; `visit` returns false to stop. Returns false
    /// if the deadline expired.
    fn run(&mut self, deadline: &mut Deadline, visit: &mut dyn FnMut(&[VertexId]) -> bool) -> bool {
        let mut stop = false;
        self.extend(0, deadline, visit, &mut stop);
        !deadline.has_expired()
    }

    fn extend(
        &mut self,
        depth: usize,
        deadline: &mut Deadline,
        visit: &mut dyn FnMut(&[VertexId]) -> bool,
        stop: &mut bool,
    ) {
        if depth == self.order.len() {
            if !visit(&self.map) {
                *stop = true;
            }
            return;
        }
        let p = self.order[depth];
        for t in self.candidates(depth) {
            if *stop || deadline.expired() {
                return;
            }
            if self.inverse[t] != NONE || !self.key_ok(p, t) || !self.consistent(p, t) {
                continue;
            }
            self.map[p] = t;
            self.inverse[t] = p;
            self.extend(depth + 1, deadline, visit, stop);
            self.map[p] = NONE;
            self.inverse[t] = NONE;
        }
    }
}

fn key_multiset(g: &OrientedGraph) -> Vec<(usize, usize, usize)> {
    let mut k = keys(g);
    k.sort_unstable();
    k
}

/// A bijection `m: V(G) -> V(H)` with `(u,v)` an arc of `G` iff `(m(u),m(v))`
/// is an arc of `H`, or `None`.
pub fn isomorphic(g: &OrientedGraph, h: &OrientedGraph) -> Option<Vec<VertexId>> {
    if g.vertex_count() != h.vertex_count() || g.arc_count() != h.arc_count() {
        return None;
    }
    if key_multiset(g) != key_multiset(h) {
        return None;
    }
    let mut e = Embedder::new(g, h, true, &[]);
    let mut found = None;
    let mut deadline = Budget::unlimited().start();
    e.run(&mut deadline, &mut |m| {
        found = Some(m.to_vec());
        false
    });
    found
}

#[derive(Debug, Clone)]
pub struct CopySearch {
    /// One embedding per distinct image set, ordered by image set.
    pub embeddings: Vec<Vec<VertexId>>,
    pub images: Vec<VertexSet>,
    pub complete: bool,
}

/// Induced embeddings of `h` into `g`, one witness per image set.
///
/// When `h` has a directed triangle, the search is anchored on its first
/// triangle, whose lead vertex is only tried on vertices of `g` that lie on
/// a directed triangle.
pub fn enumerate_induced_copies(h: &OrientedGraph, g: &OrientedGraph, budget: Budget) -> CopySearch {
    let mut by_image: BTreeMap<VertexSet, Vec<VertexId>> = BTreeMap::new();
    let mut complete = true;
    if h.vertex_count() <= g.vertex_count() {
        let anchor = directed_triangles(h).first().copied();
        let first: Vec<VertexId> = anchor.map(|t| t.to_vec()).unwrap_or_default();
        let mut e = Embedder::new(h, g, false, &first);
        if anchor.is_some() {
            let counts = triangle_counts(g);
            e.root_candidates = Some((0..g.vertex_count()).filter(|&v| counts[v] > 0).collect());
        }
        let mut deadline = budget.start();
        complete = e.run(&mut deadline, &mut |m| {
            let mut img = m.to_vec();
            img.sort_unstable();
            by_image.entry(VertexSet::from_sorted(img)).or_insert_with(|| m.to_vec());
            true
        });
    }
    let (images, embeddings) = by_image.into_iter().unzip();
    CopySearch {
        embeddings,
        images,
        complete,
    }
}

#[cfg(test)]
mod tests {
    use super::super::testing::*;
    use super::*;

    #[test]
    fn triangle_vs_six_cycle() {
        let t = triangle();
        let c6 = plain(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        assert!(isomorphic(&t, &c6).is_none());
        let t2 = plain(3, &[(2, 1), (1, 0), (0, 2)]);
        let m = isomorphic(&t, &t2).unwrap();
        for (u, v, _) in t.arcs() {
            assert!(t2.has_arc(m[u], m[v]));
        }
    }

    #[test]
    fn non_isomorphic_same_degrees() {
        // directed 6-cycle vs two directed triangles
        let c6 = plain(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let two = plain(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert!(isomorphic(&c6, &two).is_none());
        // same underlying graph, different orientation
        let c6b = plain(6, &[(1, 0), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        assert!(isomorphic(&c6, &c6b).is_none());
    }

    #[test]
    fn copies_of_triangle_and_self() {
        let t = triangle();
        let r = enumerate_induced_copies(&t, &t, Budget::unlimited());
        assert!(r.complete);
        assert_eq!(r.images.len(), 1);
        let two = plain(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)]);
        let r = enumerate_induced_copies(&t, &two, Budget::unlimited());
        assert_eq!(r.images.len(), 2);
        // the single-arc pattern: not induced in a triangle-free spot only
        let arc = plain(2, &[(0, 1)]);
        let r = enumerate_induced_copies(&arc, &two, Budget::unlimited());
        assert_eq!(r.images.len(), 7);
    }

    #[test]
    fn empty_pattern_components() {
        // two isolated vertices in a triangle: no induced copy (all pairs adjacent)
        let iso2 = plain(2, &[]);
        let r = enumerate_induced_copies(&iso2, &triangle(), Budget::unlimited());
        assert!(r.images.is_empty());
        let r = enumerate_induced_copies(&iso2, &plain(3, &[(0, 1)]), Budget::unlimited());
        assert_eq!(r.images.len(), 2);
    }
}
