//! Constructors for the graph families and their distinguished subobjects.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::digraph::{
    classify_vertex_map, isomorphic, weakly_connected_components, FamilyTag, GraphBuilder, MapKind, OrientedGraph,
    VertexId, VertexLabel, VertexSet,
};
use crate::error::{Error, Result};
use crate::perm::{apply_star_gen, lehmer_rank, zeta_embed, Direction, GenIndex, PermWord};

/// Largest degree the permutation families are built for.
pub const MAX_FAMILY_DEGREE: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    StarUndirected,
    StarDigraph,
    PancakeDigraph,
    PancakeCrossed,
    BinaryStarDigraph,
    TernaryCube,
}

impl Family {
    pub fn short_name(self) -> &'static str {
        match self {
            Family::StarUndirected => "st",
            Family::StarDigraph => "std",
            Family::PancakeDigraph => "pc",
            Family::PancakeCrossed => "pcx",
            Family::BinaryStarDigraph => "bst",
            Family::TernaryCube => "tc",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "st" => Family::StarUndirected,
            "std" => Family::StarDigraph,
            "pc" => Family::PancakeDigraph,
            "pcx" => Family::PancakeCrossed,
            "bst" => Family::BinaryStarDigraph,
            "tc" => Family::TernaryCube,
            other => return Err(Error::Parse(format!("unknown family {other:?}"))),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TernaryOrientation {
    /// `a -> b` when `b > a` in the changed coordinate.
    Linear,
    /// `a -> b` when `b - a = 1 (mod 3)` in the changed coordinate.
    Cyclic,
}

impl FromStr for TernaryOrientation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" => Ok(TernaryOrientation::Linear),
            "cyclic" => Ok(TernaryOrientation::Cyclic),
            other => Err(Error::Parse(format!("unknown orientation {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub orientation: Option<TernaryOrientation>,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Self {
        FamilySpec {
            family,
            n,
            orientation: None,
        }
    }

    pub fn build(&self) -> Result<OrientedGraph> {
        match self.family {
            Family::StarUndirected => star_graph(self.n),
            Family::StarDigraph => star_digraph(self.n),
            Family::PancakeDigraph => pancake_digraph(self.n),
            Family::PancakeCrossed => pancake_crossed(self.n).map(|c| c.graph),
            Family::BinaryStarDigraph => binary_star_digraph(self.n),
            Family::TernaryCube => ternary_cube_oriented(self.n, self.orientation.unwrap_or(TernaryOrientation::Linear)),
        }
    }
}

fn check_degree(n: usize, lo: usize, hi: usize) -> Result<()> {
    if (lo..=hi).contains(&n) {
        Ok(())
    } else {
        Err(Error::out_of_range("n", n, format!("{lo}..={hi}")))
    }
}

fn word_vertices(b: &mut GraphBuilder, words: &[PermWord]) {
    for w in words {
        b.add_vertex(VertexLabel::Word(*w));
    }
}

/// Cayley graph of `Sym_n` on the transpositions `(0 i)`; vertex id = Lehmer rank.
pub fn star_graph(n: usize) -> Result<OrientedGraph> {
    check_degree(n, 2, MAX_FAMILY_DEGREE)?;
    let words = PermWord::all(n)?;
    let mut b = GraphBuilder::undirected(FamilyTag::new("star_graph", Some(n)));
    word_vertices(&mut b, &words);
    for (id, w) in words.iter().enumerate() {
        for i in 1..n {
            let other = lehmer_rank(&w.swap_positions(0, i)) as usize;
            if id < other {
                b.add_edge(id, other, i as u8);
            }
        }
    }
    b.build()
}

fn even_words(n: usize) -> Result<Vec<PermWord>> {
    Ok(PermWord::all(n)?.into_iter().filter(PermWord::is_even).collect())
}

/// Cayley digraph of `Alt_n` on the 3-cycles `(0 1 i)`, `2 <= i < n`.
///
/// Vertices are the even words in lexicographic order; arc labels are `i`.
pub fn star_digraph(n: usize) -> Result<OrientedGraph> {
    check_degree(n, 2, MAX_FAMILY_DEGREE)?;
    let words = even_words(n)?;
    let mut b = GraphBuilder::new(FamilyTag::new("star_digraph", Some(n)));
    word_vertices(&mut b, &words);
    for (id, w) in words.iter().enumerate() {
        for i in 2..n {
            let y = apply_star_gen(w, GenIndex::new(i, n)?, Direction::Forward)?;
            let head = words.binary_search(&y).expect("generator preserves parity");
            b.add_arc(id, head, i as u8);
        }
    }
    b.build()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MapOrientation {
    Plus,
    Minus,
}

/// The copy `zeta_n^{i,j}(ST_n)` inside `ST_{n+1}`.
#[derive(Debug, Clone, Serialize)]
pub struct EmbeddingDescriptor {
    pub n: usize,
    pub i: usize,
    pub j: usize,
    pub orientation_class: MapOrientation,
    /// Host vertex of each vertex of `ST_n`, by id.
    #[serde(skip)]
    pub map: Vec<VertexId>,
    #[serde(skip)]
    pub image: VertexSet,
}

pub fn embedded_copy(n: usize, i: usize, j: usize) -> Result<EmbeddingDescriptor> {
    check_degree(n + 1, 3, MAX_FAMILY_DEGREE)?;
    embedded_copy_in(&star_digraph(n)?, &star_digraph(n + 1)?, i, j)
}

/// As [`embedded_copy`], reusing already-built `ST_n` and `ST_{n+1}`.
pub fn embedded_copy_in(small: &OrientedGraph, host: &OrientedGraph, i: usize, j: usize) -> Result<EmbeddingDescriptor> {
    let n = small
        .word_degree()
        .ok_or_else(|| Error::Construction("source graph has no word labels".into()))?;
    if host.word_degree() != Some(n + 1) {
        return Err(Error::Construction(format!("host must have degree {}", n + 1)));
    }
    let mut map = Vec::with_capacity(small.vertex_count());
    for v in 0..small.vertex_count() {
        let w = small.word(v).expect("word-labelled graph");
        let y = zeta_embed(w, i, j)?;
        let id = host
            .vertex_of_word(&y)
            .ok_or_else(|| Error::Construction(format!("zeta image {y} of {w} is not a host vertex")))?;
        map.push(id);
    }
    let orientation_class = if (i + j).is_multiple_of(2) {
        MapOrientation::Plus
    } else {
        MapOrientation::Minus
    };
    let c = classify_vertex_map(small, host, &map);
    let expected = match orientation_class {
        MapOrientation::Plus => MapKind::PlusMap,
        MapOrientation::Minus => MapKind::MinusMap,
    };
    // the edgeless ST_2 is classified plus regardless of (i, j)
    let kind_ok = c.kind == expected || small.arc_count() == 0;
    if !c.inclusive || !kind_ok {
        return Err(Error::Construction(format!(
            "zeta_{n}^{{{i},{j}}} classified {:?} (inclusive {}), expected {:?}",
            c.kind, c.inclusive, expected
        )));
    }
    let image = VertexSet::new(map.iter().copied(), host)?;
    Ok(EmbeddingDescriptor {
        n,
        i,
        j,
        orientation_class,
        map,
        image,
    })
}

/// Oriented copy of `ST_n` in `ST_{n+1}` on the words with `i` at position
/// 0 (the sources) or position 1 (the sinks).
#[derive(Debug, Clone)]
pub struct GuardStar {
    pub i: usize,
    pub vertices: VertexSet,
    pub sources: VertexSet,
    pub sinks: VertexSet,
    pub arcs: Vec<(VertexId, VertexId)>,
}

pub fn guard_star(host: &OrientedGraph, i: usize) -> Result<GuardStar> {
    let n1 = host
        .word_degree()
        .ok_or_else(|| Error::Construction("host has no word labels".into()))?;
    if i >= n1 {
        return Err(Error::out_of_range("i", i, format!("0..{n1}")));
    }
    let sym = i as u8;
    let pick = |pos: usize| {
        VertexSet::new(
            (0..host.vertex_count()).filter(|&v| host.word(v).is_some_and(|w| w.as_slice()[pos] == sym)),
            host,
        )
    };
    let sources = pick(0)?;
    let sinks = pick(1)?;
    let vertices = sources.union(&sinks);
    let mut arcs = Vec::new();
    for v in vertices.iter() {
        for h in host.successors(v) {
            if vertices.contains(h) {
                if !(sources.contains(v) && sinks.contains(h)) {
                    return Err(Error::Construction(format!("guard arc {v}->{h} runs against the orientation")));
                }
                arcs.push((v, h));
            }
        }
    }
    Ok(GuardStar {
        i,
        vertices,
        sources,
        sinks,
        arcs,
    })
}

/// Order in which `(0 1)` and the prefix reversal `f_i` are composed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PancakeOrder {
    /// `(0 1) o f_i`: reverse positions `1..=i`, then swap positions 0 and 1.
    ReverseThenSwap,
    /// `f_i o (0 1)`.
    SwapThenReverse,
}

/// Position map of the pancake generator for `i`: the symbol at position
/// `k` moves to `map[k]` (the same action the star generators use).
pub fn pancake_generator(n: usize, i: usize, order: PancakeOrder) -> Vec<usize> {
    let f = |k: usize| if (1..=i).contains(&k) { i + 1 - k } else { k };
    let t = |k: usize| match k {
        0 => 1,
        1 => 0,
        k => k,
    };
    (0..n)
        .map(|k| match order {
            PancakeOrder::ReverseThenSwap => t(f(k)),
            PancakeOrder::SwapThenReverse => f(t(k)),
        })
        .collect()
}

pub fn pancake_digraph_with(n: usize, order: PancakeOrder) -> Result<OrientedGraph> {
    check_degree(n, 4, 7)?;
    let words = PermWord::all(n)?;
    let tag = FamilyTag::new("pancake_digraph", Some(n)).with_variant(format!("{order:?}"));
    let mut b = GraphBuilder::new(tag);
    word_vertices(&mut b, &words);
    let gens: Vec<Vec<usize>> = (2..n).map(|i| pancake_generator(n, i, order)).collect();
    for (id, w) in words.iter().enumerate() {
        for (k, g) in gens.iter().enumerate() {
            b.add_arc(id, lehmer_rank(&w.move_positions(g)) as usize, (k + 2) as u8);
        }
    }
    b.build()
}

#[derive(Debug, Clone, Serialize)]
pub struct PancakeCandidate {
    pub order: PancakeOrder,
    pub components: usize,
    pub components_isomorphic_to_star: bool,
    pub matches_star_generators: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PancakeCalibration {
    pub chosen: PancakeOrder,
    pub candidates: Vec<PancakeCandidate>,
}

fn calibrate_candidate(order: PancakeOrder, star4: &OrientedGraph) -> Result<PancakeCandidate> {
    let g = pancake_digraph_with(4, order)?;
    let comps = weakly_connected_components(&g);
    let iso = comps.iter().all(|c| {
        let set = VertexSet::new(c.iter().copied(), &g).expect("component ids");
        isomorphic(&g.induced_subgraph(&set).0, star4).is_some()
    });
    let mut matches = true;
    for w in even_words(4)? {
        for i in 2..4 {
            let star = apply_star_gen(&w, GenIndex::new(i, 4)?, Direction::Forward)?;
            matches &= w.move_positions(&pancake_generator(4, i, order)) == star;
        }
    }
    Ok(PancakeCandidate {
        order,
        components: comps.len(),
        components_isomorphic_to_star: iso,
        matches_star_generators: matches,
    })
}

/// Picks the composition order: `PC_4` must split into two components each
/// isomorphic to `ST_4`. Both orders pass that test (the reverse of `ST_4`
/// is isomorphic to `ST_4`), so ties go to the order whose prefix
/// generators act on words exactly like the star generators.
pub fn calibrate_pancake() -> Result<&'static PancakeCalibration> {
    static CAL: OnceLock<std::result::Result<PancakeCalibration, Error>> = OnceLock::new();
    CAL.get_or_init(|| {
        let star4 = star_digraph(4)?;
        let candidates = [PancakeOrder::ReverseThenSwap, PancakeOrder::SwapThenReverse]
            .into_iter()
            .map(|o| calibrate_candidate(o, &star4))
            .collect::<Result<Vec<_>>>()?;
        let passing: Vec<&PancakeCandidate> = candidates
            .iter()
            .filter(|c| c.components == 2 && c.components_isomorphic_to_star)
            .collect();
        let chosen = match passing.as_slice() {
            [] => return Err(Error::Construction(format!("no pancake order calibrates: {candidates:?}"))),
            [only] => only.order,
            several => {
                let tied: Vec<_> = several.iter().filter(|c| c.matches_star_generators).collect();
                match tied.as_slice() {
                    [one] => one.order,
                    _ => return Err(Error::Construction(format!("pancake order ambiguous: {candidates:?}"))),
                }
            }
        };
        Ok(PancakeCalibration { chosen, candidates })
    })
    .as_ref()
    .map_err(Clone::clone)
}

/// Cayley digraph of `Sym_n` on `(0 1) o f_i`, with the calibrated order.
pub fn pancake_digraph(n: usize) -> Result<OrientedGraph> {
    pancake_digraph_with(n, calibrate_pancake()?.chosen)
}

#[derive(Debug, Clone)]
pub struct CrossedPancake {
    pub graph: OrientedGraph,
    /// The arcs that replaced the generator-4 arcs of the two star copies.
    pub crossed_arcs: Vec<(VertexId, VertexId)>,
}

/// `PC_5` rebuilt from `ST_5` on the even words and its relabelled copy on
/// the odd words (positions 2 and 3 exchanged), with every pair
/// `{(a, a4 a0 a2 a3 a1), (a', a4 a0 a3 a2 a1)}` replaced by the crossed pair
/// `{(a, a4 a0 a3 a2 a1), (a', a4 a0 a2 a3 a1)}`, where `a' = a0 a1 a3 a2 a4`.
pub fn pancake_crossed(n: usize) -> Result<CrossedPancake> {
    if n != 5 {
        return Err(Error::out_of_range("n", n, "5"));
    }
    let star = star_digraph(5)?;
    let words = PermWord::all(5)?;
    let id = |w: &PermWord| lehmer_rank(w) as usize;
    let relabel = |w: &PermWord| w.swap_positions(2, 3);

    let mut arcs: std::collections::BTreeMap<(VertexId, VertexId), u8> = Default::default();
    for (u, v, l) in star.arcs() {
        let (a, b) = (star.word(u).unwrap(), star.word(v).unwrap());
        arcs.insert((id(a), id(b)), l);
        arcs.insert((id(&relabel(a)), id(&relabel(b))), l);
    }
    let mut crossed = Vec::new();
    for v in 0..star.vertex_count() {
        let a = *star.word(v).unwrap();
        let x = a.as_slice();
        let a_rel = relabel(&a);
        let straight = PermWord::new(&[x[4], x[0], x[2], x[3], x[1]])?;
        let twisted = PermWord::new(&[x[4], x[0], x[3], x[2], x[1]])?;
        for old in [(id(&a), id(&straight)), (id(&a_rel), id(&twisted))] {
            if arcs.remove(&old).is_none() {
                return Err(Error::Construction(format!("arc {old:?} missing before crossing")));
            }
        }
        for new in [(id(&a), id(&twisted)), (id(&a_rel), id(&straight))] {
            arcs.insert(new, 4);
            crossed.push(new);
        }
    }
    let mut b = GraphBuilder::new(FamilyTag::new("pancake_crossed", Some(5)));
    word_vertices(&mut b, &words);
    for (&(u, v), &l) in &arcs {
        b.add_arc(u, v, l);
    }
    let graph = b.build()?;
    if isomorphic(&graph, &pancake_digraph(5)?).is_none() {
        return Err(Error::Construction("crossed construction is not isomorphic to PC_5".into()));
    }
    crossed.sort_unstable();
    Ok(CrossedPancake {
        graph,
        crossed_arcs: crossed,
    })
}

/// Cycles of a set of arcs in which every vertex has at most one outgoing
/// arc; vertices on no cycle are dropped. Each cycle starts at its least id.
pub fn functional_cycles(vertex_count: usize, arcs: &[(VertexId, VertexId)]) -> Vec<Vec<VertexId>> {
    let mut next = vec![usize::MAX; vertex_count];
    for &(u, v) in arcs {
        next[u] = v;
    }
    let mut done = vec![false; vertex_count];
    let mut cycles = Vec::new();
    for start in 0..vertex_count {
        if done[start] || next[start] == usize::MAX {
            continue;
        }
        let mut cycle = vec![start];
        let mut v = next[start];
        while v != start && v != usize::MAX && !done[v] && cycle.len() <= vertex_count {
            cycle.push(v);
            v = next[v];
        }
        for &x in &cycle {
            done[x] = true;
        }
        if v == start {
            cycles.push(cycle);
        }
    }
    cycles
}

/// Bipartite digraph on `Sym_n`: even words swap positions 1 and `i`, odd
/// words swap positions 0 and `i`.
pub fn binary_star_digraph(n: usize) -> Result<OrientedGraph> {
    check_degree(n, 3, 7)?;
    let words = PermWord::all(n)?;
    let mut b = GraphBuilder::new(FamilyTag::new("binary_star_digraph", Some(n)));
    word_vertices(&mut b, &words);
    for (id, w) in words.iter().enumerate() {
        let lead = if w.is_even() { 1 } else { 0 };
        for i in 2..n {
            b.add_arc(id, lehmer_rank(&w.swap_positions(lead, i)) as usize, i as u8);
        }
    }
    b.build()
}

/// Ternary Hamming cube of length `m`; arc labels are the changed coordinate.
pub fn ternary_cube_oriented(m: usize, orientation: TernaryOrientation) -> Result<OrientedGraph> {
    check_degree(m, 1, 7)?;
    let count = 3usize.pow(m as u32);
    let tag = FamilyTag::new("ternary_cube", Some(m)).with_variant(format!("{orientation:?}").to_lowercase());
    let mut b = GraphBuilder::new(tag);
    let digits = |mut x: usize| {
        let mut d = vec![0u8; m];
        for k in (0..m).rev() {
            d[k] = (x % 3) as u8;
            x /= 3;
        }
        d
    };
    for x in 0..count {
        b.add_vertex(VertexLabel::Ternary(digits(x)));
    }
    for x in 0..count {
        let d = digits(x);
        for (c, &a) in d.iter().enumerate() {
            let place = 3usize.pow((m - 1 - c) as u32);
            for target in 0..3u8 {
                let forward = match orientation {
                    TernaryOrientation::Linear => target > a,
                    TernaryOrientation::Cyclic => (target + 3 - a) % 3 == 1,
                };
                if forward {
                    let y = x - a as usize * place + target as usize * place;
                    b.add_arc(x, y, c as u8);
                }
            }
        }
    }
    b.build()
}
