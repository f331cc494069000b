//! Exact solvers for the optimization problems around disjoint dominating
//! and 2-dominating pairs.
//!
//! Three of the four problems here are NP-hard, so the solvers are
//! exhaustive searches guarded by size limits. The subdivision minimizer is
//! the exception: the minimum number of edge subdivisions equals
//! `|X| - |M|`, where `X` is the set of blocking weak supports and `M` a
//! maximum matching of the subgraph they induce, so it runs in polynomial
//! time.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{classify_flags, induced_subgraph, subdivide_edges, Graph};
use crate::matching::maximum_matching;
use crate::minimal::is_minimal_dd2;
use crate::recognition::{blocking_set, is_dd2, DD2Pair};

/// Size guards and parallelism for the exhaustive searches. The defaults
/// keep desk-scale inputs fast; callers may raise them at their own risk.
#[derive(Clone, Copy, Debug)]
pub struct SearchLimits {
    /// Vertex-count guard for the pair-size minimizer (3^n search).
    pub gamma_vertices: usize,
    /// Edge-count guard for the spanning-subgraph search (2^m search).
    pub spanning_edges: usize,
    /// Per-round subset guard for the edge-addition search.
    pub addition_subsets: u64,
    /// Worker threads for the subset searches; 1 keeps everything serial.
    pub threads: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            gamma_vertices: 15,
            spanning_edges: 22,
            addition_subsets: 50_000_000,
            threads: 1,
        }
    }
}

impl SearchLimits {
    /// Drops every guard; parallelism is kept as configured.
    pub fn unguarded(self) -> Self {
        SearchLimits {
            gamma_vertices: usize::MAX,
            spanning_edges: usize::MAX,
            addition_subsets: u64::MAX,
            threads: self.threads,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaGamma2Result {
    /// Minimum of `|D| + |D2|` over all valid pairs.
    pub value: usize,
    pub witness: DD2Pair,
}

impl fmt::Display for GammaGamma2Result {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "value {}", self.value)?;
        write!(f, "{}", self.witness)
    }
}

fn ensure_searchable(g: &Graph) -> Result<()> {
    if g.vertex_count() == 0 {
        return Err(Error::Precondition("graph has no vertices".to_string()));
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Assign {
    InD,
    InD2,
    Neither,
}

struct GammaSearch<'a> {
    g: &'a Graph,
    /// Vertices whose domination constraints become decidable once vertex
    /// `i` is assigned (they and their whole neighborhood are assigned).
    closes_at: Vec<Vec<usize>>,
    /// Feasibility-forced assignments: a degree-1 vertex can only sit in
    /// the 2-dominating side, which in turn forces its neighbor into the
    /// dominating side.
    forced: Vec<Option<Assign>>,
    assign: Vec<Assign>,
    best: Option<(usize, Vec<Assign>)>,
}

impl<'a> GammaSearch<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.vertex_count();
        let mut closes_at = vec![Vec::new(); n];
        for v in 0..n {
            let close = g.neighbors(v).iter().copied().max().unwrap_or(0).max(v);
            closes_at[close].push(v);
        }
        let flags = classify_flags(g);
        let forced = (0..n)
            .map(|v| {
                if flags.leaf[v] {
                    Some(Assign::InD2)
                } else if flags.support[v] {
                    Some(Assign::InD)
                } else {
                    None
                }
            })
            .collect();
        GammaSearch {
            g,
            closes_at,
            forced,
            assign: vec![Assign::Neither; n],
            best: None,
        }
    }

    fn closed_constraints_hold(&self, depth: usize) -> bool {
        self.closes_at[depth].iter().all(|&v| {
            let dominated = self.assign[v] == Assign::InD
                || self
                    .g
                    .neighbors(v)
                    .iter()
                    .any(|&u| self.assign[u] == Assign::InD);
            let twice_covered = self.assign[v] == Assign::InD2
                || self
                    .g
                    .neighbors(v)
                    .iter()
                    .filter(|&&u| self.assign[u] == Assign::InD2)
                    .count()
                    >= 2;
            dominated && twice_covered
        })
    }

    fn dfs(&mut self, depth: usize, cost: usize) {
        if let Some((best_value, _)) = self.best {
            if cost >= best_value {
                return;
            }
        }
        if depth == self.g.vertex_count() {
            self.best = Some((cost, self.assign.clone()));
            return;
        }
        let options: &[Assign] = match self.forced[depth] {
            Some(Assign::InD) => &[Assign::InD],
            Some(Assign::InD2) => &[Assign::InD2],
            _ => &[Assign::InD, Assign::InD2, Assign::Neither],
        };
        for &choice in options {
            self.assign[depth] = choice;
            if self.closed_constraints_hold(depth) {
                let add = usize::from(choice != Assign::Neither);
                self.dfs(depth + 1, cost + add);
            }
        }
        self.assign[depth] = Assign::Neither;
    }
}

/// Minimum `|D| + |D2|` over all valid pairs, with a witness; `None` exactly
/// when no pair exists. Branches each vertex over `D`, `D2`, and neither
/// (in that order, so the first optimum found is the lexicographically
/// smallest), pruning as soon as a fully assigned neighborhood violates
/// domination.
pub fn gamma_gamma2(g: &Graph, limits: &SearchLimits) -> Result<Option<GammaGamma2Result>> {
    ensure_searchable(g)?;
    let n = g.vertex_count();
    if n > limits.gamma_vertices {
        return Err(Error::GuardExceeded(format!(
            "pair-size search is limited to {} vertices, got {n}",
            limits.gamma_vertices
        )));
    }
    if g.isolated_vertex().is_some() || !is_dd2(g)?.is_dd2 {
        return Ok(None);
    }
    let mut search = GammaSearch::new(g);
    search.dfs(0, 0);
    let (value, assign) = search.best.expect("an admitting graph has at least one pair");
    let witness = DD2Pair {
        d: (0..n).filter(|&v| assign[v] == Assign::InD).collect(),
        d2: (0..n).filter(|&v| assign[v] == Assign::InD2).collect(),
    };
    debug_assert!(crate::recognition::verify_dd2_pair(g, &witness));
    Ok(Some(GammaGamma2Result { value, witness }))
}

/// The certificate for the subdivision minimizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionPlan {
    /// Weak supports whose whole neighborhood consists of leaves and
    /// supports; these are what blocks membership.
    pub blocking_set: Vec<usize>,
    /// A maximum matching of the subgraph induced by the blocking set,
    /// in original vertex ids.
    pub matching: Vec<(usize, usize)>,
    /// Edges to subdivide: the matched edges plus, per unmatched blocking
    /// vertex, its pendant edge.
    pub subdivide: Vec<(usize, usize)>,
    /// `|blocking_set| - |matching|`.
    pub count: usize,
}

impl fmt::Display for SubdivisionPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "count {}", self.count)?;
        write!(f, "blocking")?;
        for v in &self.blocking_set {
            write!(f, " {v}")?;
        }
        writeln!(f)?;
        for &(u, v) in &self.matching {
            writeln!(f, "matched {u} {v}")?;
        }
        for &(u, v) in &self.subdivide {
            writeln!(f, "subdivide {u} {v}")?;
        }
        Ok(())
    }
}

/// Minimum number of edge subdivisions after which the graph admits a pair,
/// computed exactly in polynomial time as `|X| - |M|`. The returned plan is
/// re-verified: applying it must yield a graph the recognizer accepts.
pub fn min_subdivisions_to_dd2(g: &Graph) -> Result<SubdivisionPlan> {
    ensure_searchable(g)?;
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    let flags = classify_flags(g);
    let blocking = blocking_set(g, &flags);
    if blocking.is_empty() {
        return Ok(SubdivisionPlan {
            blocking_set: blocking,
            matching: Vec::new(),
            subdivide: Vec::new(),
            count: 0,
        });
    }
    let (sub, ids) = induced_subgraph(g, &blocking)?;
    let mut matching: Vec<(usize, usize)> = maximum_matching(&sub)
        .into_iter()
        .map(|(a, b)| {
            let (u, v) = (ids[a], ids[b]);
            (u.min(v), u.max(v))
        })
        .collect();
    matching.sort_unstable();
    let mut matched = vec![false; g.vertex_count()];
    for &(u, v) in &matching {
        matched[u] = true;
        matched[v] = true;
    }
    let mut subdivide = matching.clone();
    for &x in &blocking {
        if matched[x] {
            continue;
        }
        // A weak support has exactly one leaf neighbor; subdividing that
        // pendant edge turns the fresh vertex into the leaf's support and
        // strips x of its support status.
        let leaf = *g
            .neighbors(x)
            .iter()
            .find(|&&u| flags.leaf[u])
            .expect("weak support has a leaf neighbor");
        subdivide.push((x.min(leaf), x.max(leaf)));
    }
    subdivide.sort_unstable();
    let count = blocking.len() - matching.len();
    debug_assert_eq!(count, subdivide.len());
    let repaired = subdivide_edges(g, &subdivide)?;
    assert!(
        is_dd2(&repaired)?.is_dd2,
        "subdivision plan must produce a graph that admits a pair"
    );
    Ok(SubdivisionPlan {
        blocking_set: blocking,
        matching,
        subdivide,
        count,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeAdditionResult {
    pub k: usize,
    pub edges: Vec<(usize, usize)>,
}

impl fmt::Display for EdgeAdditionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k {}", self.k)?;
        for &(u, v) in &self.edges {
            writeln!(f, "add {u} {v}")?;
        }
        Ok(())
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Per-vertex filter for the edge-addition search. For a blocking weak
/// support `s`, an edge set that touches neither `s`, nor a leaf neighbor
/// of `s`, nor a leaf of a support neighboring `s`, leaves `s` blocking:
/// no new neighbor appears at `s`, and every old neighbor keeps its
/// leaf-or-support status. An edge set can therefore only work if its
/// endpoints' trigger masks jointly cover the whole blocking set.
struct AdditionFilter {
    trigger: Vec<u128>,
    full: u128,
}

impl AdditionFilter {
    fn build(g: &Graph, blocking: &[usize]) -> Option<Self> {
        if blocking.len() > 128 {
            return None;
        }
        let flags = classify_flags(g);
        let mut trigger = vec![0u128; g.vertex_count()];
        for (bit, &s) in blocking.iter().enumerate() {
            let mask = 1u128 << bit;
            trigger[s] |= mask;
            for &w in g.neighbors(s) {
                if flags.leaf[w] {
                    trigger[w] |= mask;
                }
                if flags.support[w] {
                    for &l in g.neighbors(w) {
                        if flags.leaf[l] {
                            trigger[l] |= mask;
                        }
                    }
                }
            }
        }
        let full = if blocking.len() == 128 {
            u128::MAX
        } else {
            (1u128 << blocking.len()) - 1
        };
        Some(AdditionFilter { trigger, full })
    }

    fn covers(&self, acc: u128) -> bool {
        acc == self.full
    }

    fn edge_mask(&self, e: (usize, usize)) -> u128 {
        self.trigger[e.0] | self.trigger[e.1]
    }
}

fn addition_works(g: &Graph, subset: &[(usize, usize)]) -> bool {
    let added = crate::graph::add_edges(g, subset).expect("candidates are distinct non-edges");
    is_dd2(&added).map(|v| v.is_dd2).unwrap_or(false)
}

/// Lexicographically first `k`-subset of `cands` whose addition makes the
/// graph admit a pair.
fn search_k_subsets(
    g: &Graph,
    cands: &[(usize, usize)],
    k: usize,
    filter: Option<&AdditionFilter>,
) -> Option<Vec<(usize, usize)>> {
    fn rec(
        g: &Graph,
        cands: &[(usize, usize)],
        filter: Option<&AdditionFilter>,
        chosen: &mut Vec<(usize, usize)>,
        acc: u128,
        start: usize,
        remaining: usize,
    ) -> Option<Vec<(usize, usize)>> {
        if remaining == 0 {
            let pass = filter.is_none_or(|f| f.covers(acc));
            if pass && addition_works(g, chosen) {
                return Some(chosen.clone());
            }
            return None;
        }
        for i in start..=cands.len().saturating_sub(remaining) {
            chosen.push(cands[i]);
            let acc2 = acc | filter.map_or(0, |f| f.edge_mask(cands[i]));
            if let Some(hit) = rec(g, cands, filter, chosen, acc2, i + 1, remaining - 1) {
                return Some(hit);
            }
            chosen.pop();
        }
        None
    }
    if k > cands.len() {
        return None;
    }
    rec(g, cands, filter, &mut Vec::with_capacity(k), 0, 0, k)
}

/// Smallest set of at most `k_max` absent edges whose addition makes the
/// graph admit a pair, or `None` when no such set of size `<= k_max`
/// exists. Requires a graph that does not already admit one.
///
/// Candidate edges are first restricted to non-edges touching the closed
/// neighborhood of the blocking set or a leaf; if a round over the
/// restricted candidates fails, the round is repeated over all non-edges,
/// so the restriction never costs completeness.
pub fn min_edges_to_dd2(
    g: &Graph,
    k_max: usize,
    limits: &SearchLimits,
) -> Result<Option<EdgeAdditionResult>> {
    ensure_searchable(g)?;
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    if is_dd2(g)?.is_dd2 {
        return Err(Error::Precondition(
            "graph already admits a disjoint dominating / 2-dominating pair".to_string(),
        ));
    }
    let n = g.vertex_count();
    let flags = classify_flags(g);
    let blocking = blocking_set(g, &flags);
    let filter = AdditionFilter::build(g, &blocking);

    // Non-edges incident to N[blocking] or to a leaf.
    let mut relevant = vec![false; n];
    for &s in &blocking {
        relevant[s] = true;
        for &w in g.neighbors(s) {
            relevant[w] = true;
        }
    }
    for v in 0..n {
        if flags.leaf[v] {
            relevant[v] = true;
        }
    }
    let all_non_edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    let pruned: Vec<(usize, usize)> = all_non_edges
        .iter()
        .copied()
        .filter(|&(u, v)| relevant[u] || relevant[v])
        .collect();

    for k in 1..=k_max {
        let rounds: &[&Vec<(usize, usize)>] = if pruned.len() == all_non_edges.len() {
            &[&all_non_edges]
        } else {
            &[&pruned, &all_non_edges]
        };
        for cands in rounds {
            if binomial(cands.len(), k) > limits.addition_subsets {
                return Err(Error::GuardExceeded(format!(
                    "edge-addition search over {} candidates choose {k} exceeds the subset guard",
                    cands.len()
                )));
            }
            if let Some(edges) = search_k_subsets(g, cands, k, filter.as_ref()) {
                return Ok(Some(EdgeAdditionResult { k, edges }));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Objective {
    Min,
    Max,
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Objective::Min => write!(f, "min"),
            Objective::Max => write!(f, "max"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningSearchResult {
    pub objective: Objective,
    pub size: usize,
    pub subgraph: Vec<(usize, usize)>,
}

impl fmt::Display for SpanningSearchResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "objective {}", self.objective)?;
        writeln!(f, "size {}", self.size)?;
        for &(u, v) in &self.subgraph {
            writeln!(f, "edge {u} {v}")?;
        }
        Ok(())
    }
}

type Candidate = (usize, Vec<(usize, usize)>);

fn better(objective: Objective, a: &Candidate, b: &Candidate) -> bool {
    match objective {
        Objective::Min => a.0 < b.0 || (a.0 == b.0 && a.1 < b.1),
        Objective::Max => a.0 > b.0 || (a.0 == b.0 && a.1 < b.1),
    }
}

fn spanning_candidate(
    g: &Graph,
    forced: &[(usize, usize)],
    free: &[(usize, usize)],
    mask: u64,
    objective: Objective,
    min_cut: usize,
) -> Option<Candidate> {
    let size = forced.len() + mask.count_ones() as usize;
    if objective == Objective::Min && size < min_cut {
        // Every valid spanning subgraph has at least 2n/3 edges, so these
        // masks cannot be valid minima.
        return None;
    }
    let mut edges: Vec<(usize, usize)> = forced.to_vec();
    edges.extend(
        free.iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e),
    );
    let sub = Graph::from_edges(g.vertex_count(), &edges).expect("subset of valid edges");
    if !is_minimal_dd2(&sub).is_minimal {
        return None;
    }
    edges.sort_unstable();
    Some((size, edges))
}

/// Extremal spanning subgraph whose every component is minimal, found by
/// exhausting edge subsets. Pendant edges are forced into every candidate
/// (dropping one would isolate its leaf), which shrinks the enumeration
/// without losing solutions. `None` exactly when the graph itself admits no
/// pair. Ties are broken toward the lexicographically smallest edge list.
pub fn spanning_minimal_search(
    g: &Graph,
    objective: Objective,
    limits: &SearchLimits,
) -> Result<Option<SpanningSearchResult>> {
    ensure_searchable(g)?;
    if g.isolated_vertex().is_some() || !is_dd2(g)?.is_dd2 {
        return Ok(None);
    }
    let m = g.edge_count();
    if m > limits.spanning_edges {
        return Err(Error::GuardExceeded(format!(
            "spanning search is limited to {} edges, got {m}",
            limits.spanning_edges
        )));
    }
    let (forced, free): (Vec<_>, Vec<_>) = g
        .edges()
        .into_iter()
        .partition(|&(u, v)| g.degree(u) == 1 || g.degree(v) == 1);
    let min_cut = (2 * g.vertex_count()).div_ceil(3);
    let total: u64 = 1 << free.len();

    let best = if limits.threads > 1 {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(limits.threads)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
        pool.install(|| {
            (0..total)
                .into_par_iter()
                .filter_map(|mask| spanning_candidate(g, &forced, &free, mask, objective, min_cut))
                .reduce_with(|a, b| if better(objective, &b, &a) { b } else { a })
        })
    } else {
        let mut best: Option<Candidate> = None;
        for mask in 0..total {
            if let Some(cand) = spanning_candidate(g, &forced, &free, mask, objective, min_cut) {
                if best.as_ref().is_none_or(|b| better(objective, &cand, b)) {
                    best = Some(cand);
                }
            }
        }
        best
    };

    Ok(best.map(|(size, subgraph)| SpanningSearchResult {
        objective,
        size,
        subgraph,
    }))
}

/// True when the edge set uses only edges of `g` and the spanning subgraph
/// it induces has only minimal components (an uncovered vertex shows up as
/// a one-vertex component, which is never minimal).
pub fn verify_spanning_minimal(g: &Graph, edges: &[(usize, usize)]) -> Result<bool> {
    let mut kept: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
    for &(u, v) in edges {
        if !g.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        kept.push((u.min(v), u.max(v)));
    }
    kept.sort_unstable();
    kept.dedup();
    let sub = Graph::from_edges(g.vertex_count(), &kept)?;
    Ok(is_minimal_dd2(&sub).is_minimal)
}
