//! Domination predicates with re-checkable certificates, and the searches
//! for minimum and all worst-case efficient dominating sets.

use serde::Serialize;

use crate::budget::{Budget, Deadline};
use crate::digraph::{boundary_sets, check_set, is_stable, OrientedGraph, VertexId, VertexSet};
use crate::error::{Error, Result};

/// How many offending vertices a failure report lists.
pub const FAILURE_SAMPLE: usize = 10;

/// Which members a ±stable set may contain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StabilityRule {
    /// Sources, sinks and isolated vertices of `G[S]`.
    #[default]
    AdmitIsolated,
    /// Sources and sinks only.
    SourcesAndSinksOnly,
}

/// Members of `S` split by their role in `G[S]`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Roles {
    pub sources: Vec<VertexId>,
    pub sinks: Vec<VertexId>,
    pub isolated: Vec<VertexId>,
    /// Members with both an in-arc and an out-arc inside `S`.
    pub mixed: Vec<VertexId>,
}

pub fn roles(g: &OrientedGraph, s: &VertexSet) -> Roles {
    let inside = s.mask(g.vertex_count());
    let mut r = Roles::default();
    for v in s.iter() {
        let out = g.successors(v).any(|h| inside[h]);
        let inn = g.predecessors(v).iter().any(|&t| inside[t]);
        match (inn, out) {
            (false, true) => r.sources.push(v),
            (true, false) => r.sinks.push(v),
            (false, false) => r.isolated.push(v),
            (true, true) => r.mixed.push(v),
        }
    }
    r
}

/// One (+)dominator and one (−)dominator for every outside vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationCertificate {
    pub members: VertexSet,
    /// `(v, u)` with `(u, v)` an arc and `u` the least such member.
    pub plus_dominator: Vec<(VertexId, VertexId)>,
    /// `(v, w)` with `(v, w)` an arc and `w` the least such member.
    pub minus_dominator: Vec<(VertexId, VertexId)>,
    pub perfect: bool,
    /// Outside vertices with two or more dominators of one kind (first few).
    pub multiply_dominated: Vec<VertexId>,
    pub roles: Roles,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationFailure {
    pub missing_plus: Vec<VertexId>,
    pub missing_minus: Vec<VertexId>,
    pub missing_plus_total: usize,
    pub missing_minus_total: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "outcome")]
pub enum Domination {
    Certified(DominationCertificate),
    Failed(DominationFailure),
}

impl Domination {
    pub fn certificate(&self) -> Option<&DominationCertificate> {
        match self {
            Domination::Certified(c) => Some(c),
            Domination::Failed(_) => None,
        }
    }

    pub fn is_perfect(&self) -> bool {
        self.certificate().is_some_and(|c| c.perfect)
    }
}

fn members_in(inside: &[bool], it: impl Iterator<Item = VertexId>) -> Vec<VertexId> {
    it.filter(|&x| inside[x]).collect()
}

pub fn check_pm_dominating(g: &OrientedGraph, s: &VertexSet) -> Result<Domination> {
    check_set(g, s)?;
    let inside = s.mask(g.vertex_count());
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    let mut multiply = Vec::new();
    let mut multiply_total = 0usize;
    let (mut missing_plus, mut missing_minus) = (Vec::new(), Vec::new());
    for v in (0..g.vertex_count()).filter(|&v| !inside[v]) {
        let mut from = members_in(&inside, g.predecessors(v).iter().copied());
        let mut to = members_in(&inside, g.successors(v));
        from.sort_unstable();
        to.sort_unstable();
        match from.first() {
            Some(&u) => plus.push((v, u)),
            None => missing_plus.push(v),
        }
        match to.first() {
            Some(&w) => minus.push((v, w)),
            None => missing_minus.push(v),
        }
        if from.len() > 1 || to.len() > 1 {
            multiply_total += 1;
            if multiply.len() < FAILURE_SAMPLE {
                multiply.push(v);
            }
        }
    }
    if !missing_plus.is_empty() || !missing_minus.is_empty() {
        let (tp, tm) = (missing_plus.len(), missing_minus.len());
        missing_plus.truncate(FAILURE_SAMPLE);
        missing_minus.truncate(FAILURE_SAMPLE);
        return Ok(Domination::Failed(DominationFailure {
            missing_plus,
            missing_minus,
            missing_plus_total: tp,
            missing_minus_total: tm,
        }));
    }
    Ok(Domination::Certified(DominationCertificate {
        members: s.clone(),
        plus_dominator: plus,
        minus_dominator: minus,
        perfect: multiply_total == 0,
        multiply_dominated: multiply,
        roles: roles(g, s),
    }))
}

impl DominationCertificate {
    /// Re-derives every claim from `g` alone.
    pub fn validate(&self, g: &OrientedGraph) -> std::result::Result<(), String> {
        check_set(g, &self.members).map_err(|e| e.to_string())?;
        let inside = self.members.mask(g.vertex_count());
        let outside: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| !inside[v]).collect();
        let listed = |pairs: &[(VertexId, VertexId)]| pairs.iter().map(|p| p.0).collect::<Vec<_>>();
        if listed(&self.plus_dominator) != outside || listed(&self.minus_dominator) != outside {
            return Err("dominator lists do not cover the outside vertices exactly once".into());
        }
        for &(v, u) in &self.plus_dominator {
            if !inside[u] || !g.has_arc(u, v) {
                return Err(format!("{u} does not (+)dominate {v}"));
            }
        }
        for &(v, w) in &self.minus_dominator {
            if !inside[w] || !g.has_arc(v, w) {
                return Err(format!("{w} does not (-)dominate {v}"));
            }
        }
        let unique = outside.iter().all(|&v| {
            g.predecessors(v).iter().filter(|&&t| inside[t]).count() == 1
                && g.successors(v).filter(|&h| inside[h]).count() == 1
        });
        if unique != self.perfect {
            return Err(format!("perfect flag {} but recount says {unique}", self.perfect));
        }
        if roles(g, &self.members) != self.roles {
            return Err("role partition does not match the induced subdigraph".into());
        }
        Ok(())
    }
}

/// Verdict of the worst-case efficient domination test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WcedCheck {
    pub rule: StabilityRule,
    pub pm_stable: bool,
    /// Members breaking the stability rule (first few).
    pub stability_violations: Vec<VertexId>,
    pub domination: Domination,
}

impl WcedCheck {
    pub fn holds(&self) -> bool {
        self.pm_stable && self.domination.is_perfect()
    }
}

fn stability_violations(r: &Roles, rule: StabilityRule) -> Vec<VertexId> {
    let mut bad = r.mixed.clone();
    if rule == StabilityRule::SourcesAndSinksOnly {
        bad.extend(&r.isolated);
        bad.sort_unstable();
    }
    bad
}

pub fn is_wced(g: &OrientedGraph, s: &VertexSet) -> Result<WcedCheck> {
    is_wced_with(g, s, StabilityRule::AdmitIsolated)
}

pub fn is_wced_with(g: &OrientedGraph, s: &VertexSet, rule: StabilityRule) -> Result<WcedCheck> {
    let domination = check_pm_dominating(g, s)?;
    let mut bad = stability_violations(&roles(g, s), rule);
    let pm_stable = bad.is_empty();
    bad.truncate(FAILURE_SAMPLE);
    Ok(WcedCheck {
        rule,
        pm_stable,
        stability_violations: bad,
        domination,
    })
}

/// `rho(member) = (tail, head)`: `member -> tail -> head -> member` is a
/// directed triangle, `tail` in `N+(S)`, `head` in `N-(S)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RhoEntry {
    pub member: VertexId,
    pub tail: VertexId,
    pub head: VertexId,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CuneiformCertificate {
    pub members: VertexSet,
    pub n_plus: VertexSet,
    pub n_minus: VertexSet,
    /// Sorted by member.
    pub rho: Vec<RhoEntry>,
}

impl CuneiformCertificate {
    pub fn validate(&self, g: &OrientedGraph) -> std::result::Result<(), String> {
        let (plus, minus) = boundary_sets(g, &self.members).map_err(|e| e.to_string())?;
        if plus != self.n_plus || minus != self.n_minus {
            return Err("recorded boundary sets do not match".into());
        }
        if !plus.is_disjoint(&minus) {
            return Err("N+ and N- intersect".into());
        }
        if !is_stable(g, &plus) || !is_stable(g, &minus) {
            return Err("a boundary set is not stable".into());
        }
        let members: Vec<VertexId> = self.rho.iter().map(|e| e.member).collect();
        if members != self.members.ids() {
            return Err("rho is not defined exactly on the members".into());
        }
        let mut used = vec![false; g.vertex_count()];
        for e in &self.rho {
            if !plus.contains(e.tail) || !minus.contains(e.head) {
                return Err(format!("arc of {} does not run from N+ to N-", e.member));
            }
            if !(g.has_arc(e.member, e.tail) && g.has_arc(e.tail, e.head) && g.has_arc(e.head, e.member)) {
                return Err(format!("{} and its arc do not form a directed triangle", e.member));
            }
            for x in [e.tail, e.head] {
                if std::mem::replace(&mut used[x], true) {
                    return Err(format!("vertex {x} is used by two arcs"));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RhoSearch {
    Found,
    /// Exhaustive search found no assignment; names a member that had no
    /// candidate arc at all, if any.
    None { member_without_candidate: Option<VertexId> },
    StepLimit,
}

/// Outcome of the cuneiform test. Every condition is evaluated and
/// reported, so failures show which part of the definition broke.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CuneiformCheck {
    pub n_plus_size: usize,
    pub n_minus_size: usize,
    pub overlap_size: usize,
    pub n_plus_stable: bool,
    pub n_minus_stable: bool,
    pub rho_search: RhoSearch,
    pub certificate: Option<CuneiformCertificate>,
}

impl CuneiformCheck {
    pub fn holds(&self) -> bool {
        self.certificate.is_some()
    }
}

const RHO_STEP_LIMIT: u64 = 5_000_000;

pub fn is_cuneiform(g: &OrientedGraph, s: &VertexSet) -> Result<CuneiformCheck> {
    let (plus, minus) = boundary_sets(g, s)?;
    let overlap = plus.ids().iter().filter(|&&v| minus.contains(v)).count();
    let (ps, ms) = (is_stable(g, &plus), is_stable(g, &minus));

    let candidates: Vec<Vec<(VertexId, VertexId)>> = s
        .iter()
        .map(|v| {
            let mut c: Vec<(VertexId, VertexId)> = g
                .successors(v)
                .filter(|&t| plus.contains(t))
                .flat_map(|t| g.predecessors(v).iter().map(move |&h| (t, h)))
                .filter(|&(t, h)| t != h && minus.contains(h) && g.has_arc(t, h))
                .collect();
            c.sort_unstable();
            c
        })
        .collect();
    let member_without_candidate = s.iter().zip(&candidates).find(|(_, c)| c.is_empty()).map(|(v, _)| v);

    let mut rho_search = RhoSearch::None {
        member_without_candidate,
    };
    let mut chosen = vec![None; s.len()];
    if member_without_candidate.is_none() {
        let mut used = vec![false; g.vertex_count()];
        let mut steps = 0u64;
        match assign_rho(&candidates, &mut chosen, &mut used, &mut steps) {
            Some(true) => rho_search = RhoSearch::Found,
            Some(false) => {}
            None => rho_search = RhoSearch::StepLimit,
        }
    }
    let certificate = (rho_search == RhoSearch::Found && overlap == 0 && ps && ms).then(|| CuneiformCertificate {
        members: s.clone(),
        n_plus: plus.clone(),
        n_minus: minus.clone(),
        rho: s
            .iter()
            .zip(&chosen)
            .map(|(member, c)| {
                let (tail, head) = c.expect("assigned");
                RhoEntry { member, tail, head }
            })
            .collect(),
    });
    Ok(CuneiformCheck {
        n_plus_size: plus.len(),
        n_minus_size: minus.len(),
        overlap_size: overlap,
        n_plus_stable: ps,
        n_minus_stable: ms,
        rho_search,
        certificate,
    })
}

/// Backtracking over members, most constrained first; `None` on step limit.
fn assign_rho(
    candidates: &[Vec<(VertexId, VertexId)>],
    chosen: &mut [Option<(VertexId, VertexId)>],
    used: &mut [bool],
    steps: &mut u64,
) -> Option<bool> {
    *steps += 1;
    if *steps > RHO_STEP_LIMIT {
        return None;
    }
    let free = |c: &(VertexId, VertexId)| !used[c.0] && !used[c.1];
    let next = (0..candidates.len())
        .filter(|&k| chosen[k].is_none())
        .min_by_key(|&k| (candidates[k].iter().filter(|c| free(c)).count(), k));
    let Some(k) = next else { return Some(true) };
    for &(t, h) in &candidates[k] {
        if used[t] || used[h] {
            continue;
        }
        used[t] = true;
        used[h] = true;
        chosen[k] = Some((t, h));
        match assign_rho(candidates, chosen, used, steps) {
            Some(false) => {}
            done => return done,
        }
        chosen[k] = None;
        used[t] = false;
        used[h] = false;
    }
    Some(false)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SphereVerdict {
    Holds,
    Fails,
    Inapplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpherePacking {
    pub verdict: SphereVerdict,
    pub reason: Option<String>,
    pub r: Option<usize>,
    pub vertex_count: usize,
    pub set_size: usize,
    pub sources: usize,
    pub sinks: usize,
    pub isolated: usize,
}

/// Compares `2|V|` with `(2 + r)|S|` exactly.
pub fn sphere_packing_check(g: &OrientedGraph, s: &VertexSet) -> Result<SpherePacking> {
    check_set(g, s)?;
    let ro = roles(g, s);
    let r = g.regular_degree();
    let mut report = SpherePacking {
        verdict: SphereVerdict::Inapplicable,
        reason: None,
        r,
        vertex_count: g.vertex_count(),
        set_size: s.len(),
        sources: ro.sources.len(),
        sinks: ro.sinks.len(),
        isolated: ro.isolated.len(),
    };
    match r {
        None => report.reason = Some("in- and out-degrees are not all equal".into()),
        Some(_) if !ro.isolated.is_empty() => report.reason = Some("the set has isolated members".into()),
        Some(r) => {
            report.verdict = if 2 * g.vertex_count() == (2 + r) * s.len() {
                SphereVerdict::Holds
            } else {
                SphereVerdict::Fails
            };
        }
    }
    Ok(report)
}

/// Closed neighbourhoods of the members are pairwise disjoint and cover
/// every vertex.
pub fn is_e_set_undirected(g: &OrientedGraph, s: &VertexSet) -> Result<bool> {
    if !g.is_undirected() {
        return Err(Error::NotUndirected(g.tag().to_string()));
    }
    check_set(g, s)?;
    let inside = s.mask(g.vertex_count());
    Ok((0..g.vertex_count()).all(|v| inside[v] as usize + g.successors(v).filter(|&h| inside[h]).count() == 1))
}

/// Largest graph the subset-enumeration oracle accepts.
pub const ORACLE_MAX_VERTICES: usize = 20;

/// Every worst-case efficient dominating set, found by testing all subsets
/// with [`is_wced_with`]. Sorted.
pub fn wceds_by_subsets(g: &OrientedGraph, rule: StabilityRule) -> Result<Vec<VertexSet>> {
    let n = g.vertex_count();
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::out_of_range("vertex count", n, format!("<= {ORACLE_MAX_VERTICES}")));
    }
    let mut found = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let s = VertexSet::new((0..n).filter(|&v| mask >> v & 1 == 1), g)?;
        if is_wced_with(g, &s, rule)?.holds() {
            found.push(s);
        }
    }
    found.sort();
    Ok(found)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Unknown,
    In,
    Out,
}

/// Exact-cover style backtracking: every outside vertex needs exactly one
/// member among its in-neighbours and exactly one among its out-neighbours,
/// and members must satisfy the stability rule.
struct CoverSearch<'a> {
    g: &'a OrientedGraph,
    rule: StabilityRule,
    state: Vec<State>,
    members_before: Vec<u32>,
    members_after: Vec<u32>,
    unknown_before: Vec<u32>,
    unknown_after: Vec<u32>,
    size: usize,
    nodes: u64,
}

impl<'a> CoverSearch<'a> {
    fn new(g: &'a OrientedGraph, rule: StabilityRule) -> Self {
        let n = g.vertex_count();
        CoverSearch {
            g,
            rule,
            state: vec![State::Unknown; n],
            members_before: vec![0; n],
            members_after: vec![0; n],
            unknown_before: (0..n).map(|v| g.in_degree(v) as u32).collect(),
            unknown_after: (0..n).map(|v| g.out_degree(v) as u32).collect(),
            size: 0,
            nodes: 0,
        }
    }

    fn locally_ok(&self, v: VertexId) -> bool {
        let (mb, ma) = (self.members_before[v], self.members_after[v]);
        let settled = self.unknown_before[v] == 0 && self.unknown_after[v] == 0;
        match self.state[v] {
            State::Unknown => true,
            State::In => {
                !(mb > 0 && ma > 0)
                    && !(self.rule == StabilityRule::SourcesAndSinksOnly && settled && mb + ma == 0)
            }
            State::Out => {
                mb <= 1
                    && ma <= 1
                    && !(self.unknown_before[v] == 0 && mb == 0)
                    && !(self.unknown_after[v] == 0 && ma == 0)
            }
        }
    }

    fn set(&mut self, v: VertexId, st: State) -> bool {
        debug_assert_eq!(self.state[v], State::Unknown);
        self.state[v] = st;
        let member = (st == State::In) as u32;
        self.size += member as usize;
        for h in self.g.successors(v) {
            self.unknown_before[h] -= 1;
            self.members_before[h] += member;
        }
        for &t in self.g.predecessors(v) {
            self.unknown_after[t] -= 1;
            self.members_after[t] += member;
        }
        self.locally_ok(v)
            && self.g.successors(v).all(|h| self.locally_ok(h))
            && self.g.predecessors(v).iter().all(|&t| self.locally_ok(t))
    }

    fn unset(&mut self, v: VertexId) {
        let member = (self.state[v] == State::In) as u32;
        self.size -= member as usize;
        for h in self.g.successors(v) {
            self.unknown_before[h] += 1;
            self.members_before[h] -= member;
        }
        for &t in self.g.predecessors(v) {
            self.unknown_after[t] += 1;
            self.members_after[t] -= member;
        }
        self.state[v] = State::Unknown;
    }

    /// The least vertex that still needs a decision or a dominator.
    fn pick(&self) -> Option<(VertexId, Need)> {
        (0..self.state.len()).find_map(|v| match self.state[v] {
            State::Unknown => Some((v, Need::Decision)),
            State::Out if self.members_before[v] == 0 => Some((v, Need::Before)),
            State::Out if self.members_after[v] == 0 => Some((v, Need::After)),
            _ => None,
        })
    }

    fn members(&self) -> Vec<VertexId> {
        (0..self.state.len()).filter(|&v| self.state[v] == State::In).collect()
    }

    /// Visits every solution; `prune(size)` cuts branches, `visit` returns
    /// false to stop.
    fn run(
        &mut self,
        deadline: &mut Deadline,
        prune: &mut dyn FnMut(usize) -> bool,
        visit: &mut dyn FnMut(Vec<VertexId>) -> bool,
    ) -> bool {
        self.nodes += 1;
        if deadline.expired() {
            return false;
        }
        if prune(self.size) {
            return true;
        }
        let Some((v, need)) = self.pick() else {
            return visit(self.members());
        };
        match need {
            Need::Decision => {
                for st in [State::In, State::Out] {
                    let ok = self.set(v, st);
                    let go = !ok || self.run(deadline, prune, visit);
                    self.unset(v);
                    if !go {
                        return false;
                    }
                }
                true
            }
            Need::Before | Need::After => {
                let options: Vec<VertexId> = match need {
                    Need::Before => self.g.predecessors(v).to_vec(),
                    _ => self.g.successors(v).collect(),
                };
                let mut options: Vec<VertexId> =
                    options.into_iter().filter(|&u| self.state[u] == State::Unknown).collect();
                options.sort_unstable();
                let mut excluded = Vec::new();
                let mut go = true;
                for &u in &options {
                    let ok = self.set(u, State::In);
                    go = !ok || self.run(deadline, prune, visit);
                    self.unset(u);
                    if !go {
                        break;
                    }
                    excluded.push(u);
                    if !self.set(u, State::Out) {
                        break;
                    }
                }
                for u in excluded.into_iter().rev() {
                    if self.state[u] != State::Unknown {
                        self.unset(u);
                    }
                }
                go
            }
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum Need {
    Decision,
    Before,
    After,
}

/// Largest graph searched for a minimum without an explicit cap.
pub const EXHAUSTIVE_MAX_VERTICES: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    /// The search space was covered.
    Complete,
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaSearch {
    pub rule: StabilityRule,
    pub cap: Option<usize>,
    pub status: SearchStatus,
    /// Smallest size found; a minimum when `status` is complete.
    pub minimum: Option<usize>,
    /// Lexicographically least set of that size.
    pub witness: Option<VertexSet>,
    pub nodes: u64,
}

impl GammaSearch {
    /// Complete with nothing at or below the cap.
    pub fn none_up_to_cap(&self) -> bool {
        self.status == SearchStatus::Complete && self.minimum.is_none()
    }
}

pub fn gamma_pm_search(
    g: &OrientedGraph,
    cap: Option<usize>,
    budget: Budget,
    rule: StabilityRule,
) -> Result<GammaSearch> {
    if cap.is_none() && g.vertex_count() > EXHAUSTIVE_MAX_VERTICES {
        return Err(Error::out_of_range(
            "vertex count without a cap",
            g.vertex_count(),
            format!("<= {EXHAUSTIVE_MAX_VERTICES}"),
        ));
    }
    let limit = cap.unwrap_or(g.vertex_count());
    let mut best: Option<(usize, Vec<VertexId>)> = None;
    let mut search = CoverSearch::new(g, rule);
    let mut deadline = budget.start();
    // shared between the two closures through a cell
    let bound = std::cell::Cell::new(limit);
    let complete = search.run(
        &mut deadline,
        &mut |size| size > bound.get(),
        &mut |members| {
            let better = match &best {
                None => true,
                Some((k, w)) => members.len() < *k || (members.len() == *k && members < *w),
            };
            if better {
                bound.set(members.len());
                best = Some((members.len(), members));
            }
            true
        },
    );
    let nodes = search.nodes;
    Ok(GammaSearch {
        rule,
        cap,
        status: if complete {
            SearchStatus::Complete
        } else {
            SearchStatus::BudgetExhausted
        },
        minimum: best.as_ref().map(|b| b.0),
        witness: best.map(|(_, w)| VertexSet::from_sorted(w)),
        nodes,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EpmEnumeration {
    pub rule: StabilityRule,
    pub status: SearchStatus,
    /// Sorted, duplicate-free.
    pub solutions: Vec<VertexSet>,
    pub nodes: u64,
}

/// All worst-case efficient dominating sets reachable within the budget.
pub fn epm_enumerate(g: &OrientedGraph, budget: Budget, rule: StabilityRule) -> EpmEnumeration {
    let mut solutions = Vec::new();
    let mut search = CoverSearch::new(g, rule);
    let mut deadline = budget.start();
    let complete = search.run(&mut deadline, &mut |_| false, &mut |m| {
        solutions.push(VertexSet::from_sorted(m));
        true
    });
    solutions.sort();
    solutions.dedup();
    EpmEnumeration {
        rule,
        status: if complete {
            SearchStatus::Complete
        } else {
            SearchStatus::BudgetExhausted
        },
        solutions,
        nodes: search.nodes,
    }
}
