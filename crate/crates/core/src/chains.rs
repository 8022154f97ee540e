//! Chain properties of the star digraphs `ST_2 ⊂ ST_3 ⊂ ...`: level `n`
//! is `D_n = ST_{n+1}` with distinguished set `S_n = ST_n^0`, the guard
//! star on symbol 0.

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::digraph::{
    classify_vertex_map, strongly_connected, MapKind, OrientedGraph, VertexId, VertexSet,
};
use crate::domination::{
    is_cuneiform, is_wced_with, sphere_packing_check, RhoEntry, SphereVerdict, StabilityRule,
};
use crate::error::{Error, Result};
use crate::families::{embedded_copy_in, guard_star, star_digraph, EmbeddingDescriptor, MapOrientation};
use crate::perm::factorial;

/// Largest level a chain report covers (host `ST_7`).
pub const MAX_CHAIN_LEVEL: usize = 6;

/// Levels up to this size embed full witness sets unless asked otherwise.
pub const FULL_WITNESS_LEVEL: usize = 4;

/// Notes carried by every chain report.
pub const ERRATA: [&str; 6] = [
    "insertion swap: zeta_n^{i,j} exchanges the first two symbols iff i + j is odd; the condition \
     'n - i + j even' agrees only for even n and yields odd words at odd n",
    "6-cycle dag ST_3^0 = (0123 > 2013 < 0312 > 1032 < 0231 > 3021 <): the third mark is '>' because \
     0312 -> 1032 is an arc and the marks alternate",
    "arc counts: every vertex has out-degree n - 2, so ST_5 has 180 arcs and PC_5 has 360",
    "cuneiform: for a guard star the sets N+(S) and N-(S) both equal the complement of S, which contains \
     directed triangles, so the literal predicate fails there; it holds for every embedded copy zeta_n^{i,j}(ST_n)",
    "inclusive: every zeta_n^{i,j} with 0 <= i <= n, 2 <= j <= n is checked; maps with i >= 1 are the tabled ones",
    "stability: admitting isolated members, ST_4 has 7 worst-case efficient dominating sets and minimum size 4; \
     with sources and sinks only, the minimum is 6 and the sets are the four guard stars",
];

/// `ST_n` and `ST_{n+1}` built once and shared by the level checks.
pub struct Level {
    pub n: usize,
    pub small: OrientedGraph,
    pub host: OrientedGraph,
}

impl Level {
    pub fn new(n: usize) -> Result<Self> {
        if !(2..=MAX_CHAIN_LEVEL).contains(&n) {
            return Err(Error::out_of_range("n", n, format!("2..={MAX_CHAIN_LEVEL}")));
        }
        Ok(Level {
            n,
            small: star_digraph(n)?,
            host: star_digraph(n + 1)?,
        })
    }

    pub fn copy(&self, i: usize, j: usize) -> Result<EmbeddingDescriptor> {
        embedded_copy_in(&self.small, &self.host, i, j)
    }

    /// Every `(i, j)` with `0 <= i <= n` and `2 <= j <= n`, `j` outermost.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (2..=self.n).flat_map(|j| (0..=self.n).map(move |i| (i, j))).collect()
    }

    fn words(&self, ids: &[VertexId]) -> Vec<String> {
        ids.iter().map(|&v| self.host.label(v).to_string()).collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DenseLevel {
    pub n: usize,
    pub vertex_count: usize,
    pub set_size: usize,
    pub size_is_factorial: bool,
    /// `|S_n| (n + 1) == 2 |V(D_n)|`.
    pub ratio_holds: bool,
    pub sphere_packing: SphereVerdict,
    pub holds: bool,
}

fn dense_level(n: usize, host: &OrientedGraph) -> Result<DenseLevel> {
    let s = guard_star(host, 0)?.vertices;
    let size_is_factorial = s.len() as u64 == factorial(n);
    let ratio_holds = s.len() * (n + 1) == 2 * host.vertex_count();
    Ok(DenseLevel {
        n,
        vertex_count: host.vertex_count(),
        set_size: s.len(),
        size_is_factorial,
        ratio_holds,
        sphere_packing: sphere_packing_check(host, &s)?.verdict,
        holds: size_is_factorial && ratio_holds,
    })
}

/// `|S_n| / |V(D_n)| = 2 / (n + 1)` for `1 <= n <= n_max`.
pub fn verify_dense(n_max: usize) -> Result<Vec<DenseLevel>> {
    if !(1..=MAX_CHAIN_LEVEL).contains(&n_max) {
        return Err(Error::out_of_range("n_max", n_max, format!("1..={MAX_CHAIN_LEVEL}")));
    }
    (1..=n_max).map(|n| dense_level(n, &star_digraph(n + 1)?)).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct RhoWords {
    pub member: String,
    pub tail: String,
    pub head: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct NeighborlyCopy {
    pub i: usize,
    pub j: usize,
    pub cuneiform: bool,
    /// `N+ ∪ N-` of the copy is the guard star on symbol `i`.
    pub boundary_is_guard_star: bool,
    /// Each copy vertex lies on exactly one directed triangle leaving the copy.
    pub one_leaving_triangle: bool,
    pub certificate_valid: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct NeighborlyLevel {
    pub n: usize,
    /// `rho` on the image of `kappa_n = zeta_n^{n,n}`, sorted by member.
    pub rho: Vec<RhoWords>,
    pub kappa_cuneiform: bool,
    pub copies: Vec<NeighborlyCopy>,
    pub holds: bool,
}

fn leaving_triangles_ok(host: &OrientedGraph, image: &VertexSet) -> bool {
    image.iter().all(|v| {
        let leaving = host
            .successors(v)
            .filter(|&t| host.successors(t).any(|h| host.has_arc(h, v)))
            .filter(|&t| {
                let h = host.successors(t).find(|&h| host.has_arc(h, v)).expect("closing vertex");
                !(image.contains(t) && image.contains(h))
            })
            .count();
        leaving == 1
    })
}

pub fn verify_neighborly(level: &Level) -> Result<NeighborlyLevel> {
    let n = level.n;
    let mut copies = Vec::new();
    let mut rho = Vec::new();
    let mut kappa_cuneiform = false;
    for (i, j) in level.pairs() {
        let copy = level.copy(i, j)?;
        let check = is_cuneiform(&level.host, &copy.image)?;
        let guard = guard_star(&level.host, i)?.vertices;
        let certificate_valid = check.certificate.as_ref().is_some_and(|c| c.validate(&level.host).is_ok());
        let boundary_is_guard_star = check
            .certificate
            .as_ref()
            .is_some_and(|c| c.n_plus.union(&c.n_minus) == guard);
        if (i, j) == (n, n) {
            kappa_cuneiform = check.holds();
            if let Some(c) = &check.certificate {
                rho = c.rho.iter().map(|e| rho_words(&level.host, e)).collect();
            }
        }
        copies.push(NeighborlyCopy {
            i,
            j,
            cuneiform: check.holds(),
            boundary_is_guard_star,
            one_leaving_triangle: leaving_triangles_ok(&level.host, &copy.image),
            certificate_valid,
        });
    }
    let holds = kappa_cuneiform
        && copies
            .iter()
            .all(|c| c.cuneiform && c.boundary_is_guard_star && c.one_leaving_triangle && c.certificate_valid);
    Ok(NeighborlyLevel {
        n,
        rho,
        kappa_cuneiform,
        copies,
        holds,
    })
}

fn rho_words(g: &OrientedGraph, e: &RhoEntry) -> RhoWords {
    RhoWords {
        member: g.label(e.member).to_string(),
        tail: g.label(e.tail).to_string(),
        head: g.label(e.head).to_string(),
    }
}

/// One row of a segmental partition: the image of `S_{n-1}` under
/// `zeta_n^{i,j}`, as a vertex sequence with arc marks.
#[derive(Debug, Clone, Serialize)]
pub struct SegmentRow {
    pub i: usize,
    pub j: usize,
    pub orientation: MapOrientation,
    pub words: Vec<String>,
    /// `>` for a forward arc to the next word, `<` for a backward one; the
    /// last mark closes the cycle. Present when `S_{n-1}` induces a cycle.
    pub marks: Option<String>,
}

impl SegmentRow {
    /// `zeta_4^{1,4}(ST_3^0) <= (20341 < 03241 > ... >)`.
    pub fn display(&self, n: usize) -> String {
        let lead = match self.orientation {
            MapOrientation::Plus => ">=",
            MapOrientation::Minus => "<=",
        };
        format!(
            "zeta_{n}^{{{},{}}}(ST_{}^0) {lead} {}",
            self.i,
            self.j,
            n - 1,
            sequence_text(&self.words, self.marks.as_deref())
        )
    }
}

fn sequence_text(words: &[String], marks: Option<&str>) -> String {
    let mut s = String::from("(");
    for (k, w) in words.iter().enumerate() {
        if k > 0 {
            s.push(' ');
        }
        s.push_str(w);
        if let Some(m) = marks.and_then(|m| m.chars().nth(k)) {
            s.push(' ');
            s.push(m);
        }
    }
    s.push(')');
    s
}

#[derive(Debug, Clone, Serialize)]
pub struct SegmentPartition {
    pub j: usize,
    pub rows: Vec<SegmentRow>,
    pub partitions_guard_star: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SegmentalLevel {
    pub n: usize,
    pub source: SourceSequence,
    pub partitions: Vec<SegmentPartition>,
    pub holds: bool,
}

/// `S_{n-1}` in `ST_n` in the order its rows list it.
#[derive(Debug, Clone, Serialize)]
pub struct SourceSequence {
    #[serde(skip)]
    pub ids: Vec<VertexId>,
    pub words: Vec<String>,
    pub marks: Option<String>,
}

impl SourceSequence {
    pub fn display(&self) -> String {
        sequence_text(&self.words, self.marks.as_deref())
    }
}

/// If `set` induces a cycle in the underlying graph: the cycle from the
/// least vertex, stepping first to its smaller neighbour.
fn cycle_order(g: &OrientedGraph, set: &VertexSet) -> Option<Vec<VertexId>> {
    let nb = |v: VertexId| -> Vec<VertexId> { g.neighbors(v).into_iter().filter(|&u| set.contains(u)).collect() };
    if set.len() < 3 || set.iter().any(|v| nb(v).len() != 2) {
        return None;
    }
    let first = set.ids()[0];
    let mut order = vec![first];
    let mut prev = first;
    let mut cur = nb(first)[0];
    while cur != first {
        order.push(cur);
        let next = nb(cur).into_iter().find(|&u| u != prev)?;
        prev = cur;
        cur = next;
    }
    (order.len() == set.len()).then_some(order)
}

fn marks(g: &OrientedGraph, seq: &[VertexId]) -> String {
    (0..seq.len())
        .map(|k| {
            let (a, b) = (seq[k], seq[(k + 1) % seq.len()]);
            if g.has_arc(a, b) {
                '>'
            } else if g.has_arc(b, a) {
                '<'
            } else {
                '?'
            }
        })
        .collect()
}

pub fn source_sequence(small: &OrientedGraph) -> Result<SourceSequence> {
    let s = guard_star(small, 0)?.vertices;
    let (ids, m) = match cycle_order(small, &s) {
        Some(order) => {
            let m = marks(small, &order);
            (order, Some(m))
        }
        None => (s.ids().to_vec(), None),
    };
    Ok(SourceSequence {
        words: ids.iter().map(|&v| small.label(v).to_string()).collect(),
        ids,
        marks: m,
    })
}

/// For each `j`, the images of `S_{n-1}` under `zeta_n^{i,j}`, `i = 1..=n`,
/// partition `S_n`.
pub fn verify_segmental(level: &Level) -> Result<SegmentalLevel> {
    let n = level.n;
    let source = source_sequence(&level.small)?;
    let target = guard_star(&level.host, 0)?.vertices;
    let mut partitions = Vec::new();
    for j in (2..=n).rev() {
        let mut rows = Vec::new();
        let mut covered = vec![0u32; level.host.vertex_count()];
        for i in 1..=n {
            let copy = level.copy(i, j)?;
            let seq: Vec<VertexId> = source.ids.iter().map(|&v| copy.map[v]).collect();
            for &v in &seq {
                covered[v] += 1;
            }
            rows.push(SegmentRow {
                i,
                j,
                orientation: copy.orientation_class,
                words: level.words(&seq),
                marks: source.marks.as_ref().map(|_| marks(&level.host, &seq)),
            });
        }
        let partitions_guard_star =
            (0..level.host.vertex_count()).all(|v| covered[v] == target.contains(v) as u32);
        partitions.push(SegmentPartition {
            j,
            rows,
            partitions_guard_star,
        });
    }
    let holds = partitions.iter().all(|p| p.partitions_guard_star);
    Ok(SegmentalLevel {
        n,
        source,
        partitions,
        holds,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct InclusiveCheck {
    pub i: usize,
    pub j: usize,
    pub tabled: bool,
    pub wced: bool,
    /// With sources and sinks only; fails where `S_{n-1}` is a single vertex.
    pub wced_without_isolated: bool,
}

/// The image of `S_{n-1}` under each `zeta_n^{i,j}` is a worst-case
/// efficient dominating set of the copy it lands in.
pub fn verify_inclusive(level: &Level) -> Result<Vec<InclusiveCheck>> {
    let s = guard_star(&level.small, 0)?.vertices;
    let mut out = Vec::new();
    for (i, j) in level.pairs() {
        let copy = level.copy(i, j)?;
        let (sub, old) = level.host.induced_subgraph(&copy.image);
        let image: Vec<VertexId> = s.iter().map(|v| copy.map[v]).collect();
        let local = VertexSet::new(image.iter().map(|v| old.binary_search(v).expect("inside copy")), &sub)?;
        out.push(InclusiveCheck {
            i,
            j,
            tabled: i >= 1,
            wced: is_wced_with(&sub, &local, StabilityRule::AdmitIsolated)?.holds(),
            wced_without_isolated: is_wced_with(&sub, &local, StabilityRule::SourcesAndSinksOnly)?.holds(),
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct ComplementCheck {
    pub i: usize,
    pub disjoint_union: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaCounts {
    pub n: usize,
    pub distinct_copies: usize,
    pub expected_copies: usize,
    pub plus_maps: usize,
    pub minus_maps: usize,
    pub expected_plus: usize,
    pub expected_minus: usize,
    /// `V(ST_{n+1}) \ ST_n^i` is the disjoint union of the `zeta_n^{i,j}` images.
    pub complements: Vec<ComplementCheck>,
    pub holds: bool,
}

pub fn lemma_counts(level: &Level) -> Result<LemmaCounts> {
    let n = level.n;
    let mut images = std::collections::BTreeSet::new();
    let (mut plus, mut minus) = (0, 0);
    let mut per_i: Vec<Vec<VertexSet>> = vec![Vec::new(); n + 1];
    for (i, j) in level.pairs() {
        let copy = level.copy(i, j)?;
        match copy.orientation_class {
            MapOrientation::Plus => plus += 1,
            MapOrientation::Minus => minus += 1,
        }
        images.insert(copy.image.clone());
        per_i[i].push(copy.image);
    }
    let mut complements = Vec::new();
    for (i, parts) in per_i.iter().enumerate() {
        let guard = guard_star(&level.host, i)?.vertices;
        let mut count = vec![0u32; level.host.vertex_count()];
        for p in parts {
            for v in p.iter() {
                count[v] += 1;
            }
        }
        let disjoint_union = (0..level.host.vertex_count()).all(|v| count[v] == !guard.contains(v) as u32);
        complements.push(ComplementCheck { i, disjoint_union });
    }
    let expected = n * n - 1;
    let holds = images.len() == expected
        && plus == expected.div_ceil(2)
        && minus == expected / 2
        && complements.iter().all(|c| c.disjoint_union);
    Ok(LemmaCounts {
        n,
        distinct_copies: images.len(),
        expected_copies: expected,
        plus_maps: plus,
        minus_maps: minus,
        expected_plus: expected.div_ceil(2),
        expected_minus: expected / 2,
        complements,
        holds,
    })
}

/// Classification of one `zeta_n^{i,j}` as a map `ST_n -> ST_{n+1}`.
#[derive(Debug, Clone, Serialize)]
pub struct MapRow {
    pub i: usize,
    pub j: usize,
    pub orientation: MapOrientation,
    pub kind: MapKind,
    pub inclusive: bool,
    pub image_size: usize,
    /// `kind` agrees with the parity of `i + j`.
    pub consistent: bool,
}

pub fn maps_table(level: &Level) -> Result<Vec<MapRow>> {
    level
        .pairs()
        .into_iter()
        .map(|(i, j)| {
            let copy = level.copy(i, j)?;
            let c = classify_vertex_map(&level.small, &level.host, &copy.map);
            let expected = match copy.orientation_class {
                MapOrientation::Plus => MapKind::PlusMap,
                MapOrientation::Minus => MapKind::MinusMap,
            };
            Ok(MapRow {
                i,
                j,
                orientation: copy.orientation_class,
                kind: c.kind,
                inclusive: c.inclusive,
                image_size: copy.image.len(),
                consistent: c.kind == expected || level.small.arc_count() == 0,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Full { words: Vec<String> },
    Digest { size: usize, sha256: String },
}

impl Witness {
    pub fn of(g: &OrientedGraph, s: &VertexSet, full: bool) -> Witness {
        let words = s.words(g);
        if full {
            Witness::Full { words }
        } else {
            Witness::Digest {
                size: words.len(),
                sha256: hex::encode(Sha256::digest(words.join("\n").as_bytes())),
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainLevel {
    pub n: usize,
    pub host: String,
    pub vertex_count: usize,
    pub arc_count: usize,
    pub strongly_connected: bool,
    pub dense: DenseLevel,
    pub witness: Witness,
    pub neighborly: Option<NeighborlyLevel>,
    pub segmental: Option<SegmentalLevel>,
    pub inclusive: Option<Vec<InclusiveCheck>>,
    pub lemma: Option<LemmaCounts>,
    pub maps: Option<Vec<MapRow>>,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainReport {
    pub n_max: usize,
    pub levels: Vec<ChainLevel>,
    pub errata: Vec<&'static str>,
    pub passed: bool,
}

/// Runs every chain check for `1 <= n <= n_max`. Failing checks mark the
/// report failed; the report is still produced.
pub fn chain_report(n_max: usize, full: bool) -> Result<ChainReport> {
    if !(1..=MAX_CHAIN_LEVEL).contains(&n_max) {
        return Err(Error::out_of_range("n_max", n_max, format!("1..={MAX_CHAIN_LEVEL}")));
    }
    let mut levels = Vec::new();
    for n in 1..=n_max {
        let host = star_digraph(n + 1)?;
        let dense = dense_level(n, &host)?;
        let s = guard_star(&host, 0)?.vertices;
        let witness = Witness::of(&host, &s, full || n <= FULL_WITNESS_LEVEL);
        let sc = strongly_connected(&host);
        let mut lv = ChainLevel {
            n,
            host: format!("ST_{}", n + 1),
            vertex_count: host.vertex_count(),
            arc_count: host.arc_count(),
            strongly_connected: sc,
            passed: sc && dense.holds,
            dense,
            witness,
            neighborly: None,
            segmental: None,
            inclusive: None,
            lemma: None,
            maps: None,
        };
        if n >= 2 {
            let level = Level::new(n)?;
            let nb = verify_neighborly(&level)?;
            let seg = verify_segmental(&level)?;
            let inc = verify_inclusive(&level)?;
            let lem = lemma_counts(&level)?;
            let maps = maps_table(&level)?;
            lv.passed &= nb.holds
                && seg.holds
                && inc.iter().all(|c| c.wced)
                && lem.holds
                && maps.iter().all(|m| m.consistent && m.inclusive);
            lv.neighborly = Some(nb);
            lv.segmental = Some(seg);
            lv.inclusive = Some(inc);
            lv.lemma = Some(lem);
            lv.maps = Some(maps);
        }
        levels.push(lv);
    }
    let passed = levels.iter().all(|l| l.passed);
    Ok(ChainReport {
        n_max,
        levels,
        errata: ERRATA.to_vec(),
        passed,
    })
}
