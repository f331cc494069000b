//! Hardness-reduction instance transformers with solution extractors in
//! both directions.
//!
//! Restricted 3-dimensional matching maps to the maximum spanning-minimal
//! problem by pinning a leaf to every element vertex and a 3-vertex path to
//! every triple vertex. Set Cover maps to the edge-addition problem by
//! replicating the item row `2k+1` times with a pendant leaf per copy and
//! hanging a pair of leaves off every set vertex. Planarity of the source
//! instances is neither required nor checked; the constructions are valid
//! without it.

use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::graph::{add_edges, connected_components, parse_graph, Graph};
use crate::recognition::is_dd2;
use crate::optimize::verify_spanning_minimal;

/// Restricted 3-dimensional matching instance: a bipartite graph between
/// element vertices (three groups of `q`) and triple vertices, each triple
/// adjacent to exactly one element per group, all degrees between 2 and 3.
///
/// Vertex layout: the three element groups occupy `0..q`, `q..2q`, and
/// `2q..3q`; the triples occupy `3q..3q+u_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeDM3Instance {
    q: usize,
    u_count: usize,
    base: Graph,
}

impl ThreeDM3Instance {
    pub fn new(q: usize, u_count: usize, base: Graph) -> Result<Self> {
        let fail = |msg: String| Err(Error::InvalidInstance(msg));
        if q == 0 {
            return fail("q must be positive".to_string());
        }
        if u_count == 0 {
            return fail("the triple set must be non-empty".to_string());
        }
        let n = 3 * q + u_count;
        if base.vertex_count() != n {
            return fail(format!(
                "base graph has {} vertices, expected 3q + |U| = {n}",
                base.vertex_count()
            ));
        }
        let inst = ThreeDM3Instance { q, u_count, base };
        for (a, b) in inst.base.edges() {
            if inst.u_range().contains(&a) == inst.u_range().contains(&b) {
                return fail(format!("edge {a} {b} does not join an element to a triple"));
            }
        }
        for u in inst.u_range() {
            if inst.base.degree(u) != 3 {
                return fail(format!("triple vertex {u} has degree {}", inst.base.degree(u)));
            }
            for range in [inst.x_range(), inst.y_range(), inst.z_range()] {
                let hits = inst
                    .base
                    .neighbors(u)
                    .iter()
                    .filter(|&&v| range.contains(&v))
                    .count();
                if hits != 1 {
                    return fail(format!(
                        "triple vertex {u} touches group {}..{} {hits} times, expected once",
                        range.start, range.end
                    ));
                }
            }
        }
        for v in 0..3 * q {
            let d = inst.base.degree(v);
            if !(2..=3).contains(&d) {
                return fail(format!("element vertex {v} has degree {d}, expected 2 or 3"));
            }
        }
        Ok(inst)
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn u_count(&self) -> usize {
        self.u_count
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn x_range(&self) -> Range<usize> {
        0..self.q
    }

    pub fn y_range(&self) -> Range<usize> {
        self.q..2 * self.q
    }

    pub fn z_range(&self) -> Range<usize> {
        2 * self.q..3 * self.q
    }

    pub fn u_range(&self) -> Range<usize> {
        3 * self.q..3 * self.q + self.u_count
    }

    /// Document format: a `"q |U|"` line followed by the base graph's
    /// edge-list document.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = loop {
            match lines.next() {
                Some(l) if l.trim().is_empty() => continue,
                Some(l) => break l,
                None => return Err(Error::parse(1, "empty document")),
            }
        };
        let fields: Vec<&str> = header.split_ascii_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::parse(1, "expected header `q |U|`"));
        }
        let q = fields[0]
            .parse()
            .map_err(|_| Error::parse(1, format!("invalid integer `{}`", fields[0])))?;
        let u_count = fields[1]
            .parse()
            .map_err(|_| Error::parse(1, format!("invalid integer `{}`", fields[1])))?;
        let rest: String = lines.collect::<Vec<_>>().join("\n");
        ThreeDM3Instance::new(q, u_count, parse_graph(&rest)?)
    }

    pub fn to_text(&self) -> String {
        format!("{} {}\n{}", self.q, self.u_count, self.base.to_edge_list())
    }
}

/// Set Cover instance over items `0..n_items`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetCoverInstance {
    pub n_items: usize,
    /// Each set sorted and duplicate-free.
    pub sets: Vec<Vec<usize>>,
    pub k: usize,
}

impl SetCoverInstance {
    pub fn new(n_items: usize, sets: Vec<Vec<usize>>, k: usize) -> Result<Self> {
        let fail = |msg: String| Err(Error::InvalidInstance(msg));
        if n_items == 0 {
            return fail("there must be at least one item".to_string());
        }
        if sets.is_empty() {
            return fail("the set family must be non-empty".to_string());
        }
        if k == 0 || k > sets.len() {
            return fail(format!("budget k={k} must satisfy 1 <= k <= {}", sets.len()));
        }
        let mut sets: Vec<Vec<usize>> = sets;
        let mut covered = vec![false; n_items];
        for set in &mut sets {
            set.sort_unstable();
            set.dedup();
            for &item in set.iter() {
                if item >= n_items {
                    return fail(format!("item {item} out of range 0..{n_items}"));
                }
                covered[item] = true;
            }
        }
        if let Some(item) = covered.iter().position(|&c| !c) {
            return fail(format!("item {item} belongs to no set"));
        }
        Ok(SetCoverInstance { n_items, sets, k })
    }

    /// Document format: header `"n m k"`, then `m` lines of item ids; a
    /// blank line denotes an empty set.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let (first_no, header) = loop {
            match lines.next() {
                Some((i, l)) if l.trim().is_empty() => {
                    // Leading blank lines before the header are tolerated,
                    // but a blank line is meaningful once sets begin.
                    let _ = i;
                    continue;
                }
                Some((i, l)) => break (i + 1, l),
                None => return Err(Error::parse(1, "empty document")),
            }
        };
        let fields: Vec<&str> = header.split_ascii_whitespace().collect();
        if fields.len() != 3 {
            return Err(Error::parse(first_no, "expected header `n m k`"));
        }
        let parse_field = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::parse(first_no, format!("invalid integer `{s}`")))
        };
        let n = parse_field(fields[0])?;
        let m = parse_field(fields[1])?;
        let k = parse_field(fields[2])?;
        let mut sets = Vec::with_capacity(m);
        for _ in 0..m {
            let Some((i, line)) = lines.next() else {
                return Err(Error::parse(
                    first_no,
                    format!("expected {m} set lines, found {}", sets.len()),
                ));
            };
            let ids: std::result::Result<Vec<usize>, Error> = line
                .split_ascii_whitespace()
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::parse(i + 1, format!("invalid integer `{s}`")))
                })
                .collect();
            sets.push(ids?);
        }
        for (i, line) in lines {
            if !line.trim().is_empty() {
                return Err(Error::parse(i + 1, "unexpected trailing content"));
            }
        }
        SetCoverInstance::new(n, sets, k)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.n_items, self.sets.len(), self.k);
        for set in &self.sets {
            let ids: Vec<String> = set.iter().map(|i| i.to_string()).collect();
            out.push_str(&ids.join(" "));
            out.push('\n');
        }
        out
    }

    fn covers(&self, chosen: &[usize]) -> bool {
        let mut covered = vec![false; self.n_items];
        for &j in chosen {
            for &item in &self.sets[j] {
                covered[item] = true;
            }
        }
        covered.into_iter().all(|c| c)
    }
}

/// The supergraph built from a 3DM3 instance: a pendant leaf on every
/// element vertex and a 3-vertex path hung on every triple vertex, plus the
/// spanning-size budget `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dm3Reduction {
    pub graph: Graph,
    pub k: usize,
    /// Element vertex `v` -> its pendant leaf.
    pub leaf_of: Vec<usize>,
    /// Triple index -> the three path vertices hung off it; the middle one
    /// carries the edge to the triple vertex.
    pub gadget_path: Vec<[usize; 3]>,
}

impl fmt::Display for Dm3Reduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k {}", self.k)?;
        write!(f, "graph\n{}", self.graph.to_edge_list())?;
        for (v, l) in self.leaf_of.iter().enumerate() {
            writeln!(f, "leaf-of {v} {l}")?;
        }
        for (t, p) in self.gadget_path.iter().enumerate() {
            writeln!(f, "path-of {t} {} {} {}", p[0], p[1], p[2])?;
        }
        Ok(())
    }
}

/// Builds the supergraph: `2|V| + 4|U|` vertices, `|V| + 6|U|` edges, and
/// budget `k = |V| + 3|U| + 2q`. Element vertices and triples keep their
/// ids; the element leaves follow, then the path triples in order.
pub fn build_3dm3_supergraph(inst: &ThreeDM3Instance) -> Dm3Reduction {
    let nv = 3 * inst.q();
    let base_n = nv + inst.u_count();
    let mut edges = inst.base().edges();
    let leaf_of: Vec<usize> = (0..nv).map(|v| base_n + v).collect();
    for (v, &l) in leaf_of.iter().enumerate() {
        edges.push((v, l));
    }
    let mut gadget_path = Vec::with_capacity(inst.u_count());
    for t in 0..inst.u_count() {
        let a = base_n + nv + 3 * t;
        let (b, c) = (a + 1, a + 2);
        let u = nv + t;
        edges.extend([(a, b), (b, c), (u, b)]);
        gadget_path.push([a, b, c]);
    }
    let graph = Graph::from_edges(base_n + nv + 3 * inst.u_count(), &edges)
        .expect("gadget layout produces a simple graph");
    let k = nv + 3 * inst.u_count() + 2 * inst.q();
    Dm3Reduction {
        graph,
        k,
        leaf_of,
        gadget_path,
    }
}

/// Spanning edge set witnessing feasibility, built from a known solution:
/// triples in the solution keep the star around them (their three elements
/// with leaves) and shed their path; the other triples keep their path with
/// the connecting edge.
pub fn forward_3dm3_witness(
    inst: &ThreeDM3Instance,
    red: &Dm3Reduction,
    solution: &[usize],
) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    let chosen: std::collections::HashSet<usize> = solution.iter().copied().collect();
    for t in 0..inst.u_count() {
        let u = 3 * inst.q() + t;
        let [a, b, c] = red.gadget_path[t];
        edges.push((a, b));
        edges.push((b, c));
        if chosen.contains(&u) {
            for &v in inst.base().neighbors(u) {
                edges.push((v, u));
                edges.push((v, red.leaf_of[v]));
            }
        } else {
            edges.push((u, b));
        }
    }
    edges.sort_unstable();
    edges
}

/// Recovers a 3DM3 solution from a spanning minimal subgraph of size `k`:
/// the triples lying in components that contain an element leaf. Returns
/// `None` unless the witness verifies and the recovered set has size `q`
/// and dominates every element.
pub fn extract_3dm3_solution(
    inst: &ThreeDM3Instance,
    red: &Dm3Reduction,
    spanning_edges: &[(usize, usize)],
) -> Option<Vec<usize>> {
    if spanning_edges.len() != red.k {
        return None;
    }
    if !verify_spanning_minimal(&red.graph, spanning_edges).ok()? {
        return None;
    }
    let witness = Graph::from_edges(red.graph.vertex_count(), spanning_edges).ok()?;
    let nv = 3 * inst.q();
    let mut chosen = Vec::new();
    for comp in connected_components(&witness) {
        let has_element_leaf = comp.iter().any(|&v| red.leaf_of.contains(&v));
        if has_element_leaf {
            chosen.extend(comp.iter().copied().filter(|&v| inst.u_range().contains(&v)));
        }
    }
    chosen.sort_unstable();
    chosen.dedup();
    if chosen.len() != inst.q() {
        return None;
    }
    let mut dominated = vec![false; nv];
    for &u in &chosen {
        for &v in inst.base().neighbors(u) {
            dominated[v] = true;
        }
    }
    if dominated.into_iter().all(|d| d) {
        Some(chosen)
    } else {
        None
    }
}

/// First `q`-subset of the triples (ascending) dominating every element.
pub fn solve_3dm3_bruteforce(inst: &ThreeDM3Instance) -> Result<Option<Vec<usize>>> {
    if inst.u_count() > 20 {
        return Err(Error::GuardExceeded(format!(
            "3DM3 brute force is limited to 20 triples, got {}",
            inst.u_count()
        )));
    }
    let triples: Vec<usize> = inst.u_range().collect();
    let nv = 3 * inst.q();
    fn rec(
        inst: &ThreeDM3Instance,
        triples: &[usize],
        start: usize,
        chosen: &mut Vec<usize>,
        remaining: usize,
        nv: usize,
    ) -> Option<Vec<usize>> {
        if remaining == 0 {
            let mut dominated = vec![false; nv];
            for &u in chosen.iter() {
                for &v in inst.base().neighbors(u) {
                    dominated[v] = true;
                }
            }
            return dominated.into_iter().all(|d| d).then(|| chosen.clone());
        }
        for i in start..=triples.len().saturating_sub(remaining) {
            chosen.push(triples[i]);
            if let Some(hit) = rec(inst, triples, i + 1, chosen, remaining - 1, nv) {
                return Some(hit);
            }
            chosen.pop();
        }
        None
    }
    if inst.q() > inst.u_count() {
        return Ok(None);
    }
    Ok(rec(inst, &triples, 0, &mut Vec::new(), inst.q(), nv))
}

/// The non-admitting graph built from a Set Cover instance, with the
/// edge-addition budget `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetCoverReduction {
    pub graph: Graph,
    pub k: usize,
    /// Number of item-row copies, `2k + 1`.
    pub eta: usize,
    /// `item_copies[i][j]`: vertex of item `j` in copy `i`.
    pub item_copies: Vec<Vec<usize>>,
    /// `copy_leaves[i][j]`: the pendant leaf of `item_copies[i][j]`.
    pub copy_leaves: Vec<Vec<usize>>,
    /// Set index -> its two pendant leaves.
    pub set_leaf_pairs: Vec<(usize, usize)>,
}

impl SetCoverReduction {
    /// Set vertices keep the ids `0..m`.
    pub fn set_vertex(&self, j: usize) -> usize {
        j
    }
}

impl fmt::Display for SetCoverReduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k {}", self.k)?;
        writeln!(f, "eta {}", self.eta)?;
        write!(f, "graph\n{}", self.graph.to_edge_list())?;
        for (j, &(l1, l2)) in self.set_leaf_pairs.iter().enumerate() {
            writeln!(f, "set-leaves {j} {l1} {l2}")?;
        }
        for (i, row) in self.item_copies.iter().enumerate() {
            for (j, &u) in row.iter().enumerate() {
                writeln!(f, "item-copy {i} {j} {u} {}", self.copy_leaves[i][j])?;
            }
        }
        Ok(())
    }
}

/// Builds the reduction graph. Layout: set vertices `0..m`, then the
/// `eta = 2k+1` item rows, then their leaves row by row, then the leaf
/// pairs of the sets.
pub fn build_setcover_reduction(inst: &SetCoverInstance) -> SetCoverReduction {
    let (n, m, k) = (inst.n_items, inst.sets.len(), inst.k);
    let eta = 2 * k + 1;
    let copy_vertex = |i: usize, j: usize| m + i * n + j;
    let leaf_vertex = |i: usize, j: usize| m + eta * n + i * n + j;
    let pair_vertex = |j: usize, side: usize| m + 2 * eta * n + 2 * j + side;

    let mut edges = Vec::new();
    for (j, set) in inst.sets.iter().enumerate() {
        for &item in set {
            for i in 0..eta {
                edges.push((copy_vertex(i, item), j));
            }
        }
        edges.push((j, pair_vertex(j, 0)));
        edges.push((j, pair_vertex(j, 1)));
    }
    for i in 0..eta {
        for j in 0..n {
            edges.push((copy_vertex(i, j), leaf_vertex(i, j)));
        }
    }
    let graph = Graph::from_edges(m + 2 * eta * n + 2 * m, &edges)
        .expect("gadget layout produces a simple graph");
    SetCoverReduction {
        graph,
        k,
        eta,
        item_copies: (0..eta)
            .map(|i| (0..n).map(|j| copy_vertex(i, j)).collect())
            .collect(),
        copy_leaves: (0..eta)
            .map(|i| (0..n).map(|j| leaf_vertex(i, j)).collect())
            .collect(),
        set_leaf_pairs: (0..m).map(|j| (pair_vertex(j, 0), pair_vertex(j, 1))).collect(),
    }
}

/// Recovers a cover from a valid edge addition: the sets whose leaf pair is
/// fully touched by the added edges are exactly those that stop being
/// supports, and the additions can only fix every item row if those sets
/// cover everything. The incoming witness is first normalized to the
/// equivalent leaf-pair-only edge set, so extraction does not depend on the
/// witness's shape.
pub fn extract_setcover_solution(
    inst: &SetCoverInstance,
    red: &SetCoverReduction,
    added_edges: &[(usize, usize)],
) -> Option<Vec<usize>> {
    if added_edges.len() > red.k {
        return None;
    }
    let augmented = add_edges(&red.graph, added_edges).ok()?;
    if !is_dd2(&augmented).ok()?.is_dd2 {
        return None;
    }
    let mut touched = vec![false; red.graph.vertex_count()];
    for &(a, b) in added_edges {
        touched[a] = true;
        touched[b] = true;
    }
    let chosen: Vec<usize> = red
        .set_leaf_pairs
        .iter()
        .enumerate()
        .filter(|(_, &(l1, l2))| touched[l1] && touched[l2])
        .map(|(j, _)| j)
        .collect();
    // Normalized replacement: one direct edge per recovered set.
    let replacement: Vec<(usize, usize)> = chosen
        .iter()
        .map(|&j| red.set_leaf_pairs[j])
        .collect();
    if replacement.len() > red.k {
        return None;
    }
    let renormalized = add_edges(&red.graph, &replacement).ok()?;
    if !is_dd2(&renormalized).ok()?.is_dd2 {
        return None;
    }
    if inst.covers(&chosen) {
        Some(chosen)
    } else {
        None
    }
}

/// Smallest cover of size at most `k`, lexicographically first among the
/// optima; `None` when no such cover exists.
pub fn solve_setcover_bruteforce(inst: &SetCoverInstance) -> Result<Option<Vec<usize>>> {
    let m = inst.sets.len();
    if m > 12 {
        return Err(Error::GuardExceeded(format!(
            "set-cover brute force is limited to 12 sets, got {m}"
        )));
    }
    fn rec(
        inst: &SetCoverInstance,
        start: usize,
        chosen: &mut Vec<usize>,
        remaining: usize,
    ) -> Option<Vec<usize>> {
        if remaining == 0 {
            return inst.covers(chosen).then(|| chosen.clone());
        }
        let m = inst.sets.len();
        for j in start..=m.saturating_sub(remaining) {
            chosen.push(j);
            if let Some(hit) = rec(inst, j + 1, chosen, remaining - 1) {
                return Some(hit);
            }
            chosen.pop();
        }
        None
    }
    for size in 1..=inst.k {
        if let Some(hit) = rec(inst, 0, &mut Vec::new(), size) {
            return Ok(Some(hit));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::classify_vertices;

    /// The q=1 instance: one element per group, every triple adjacent to
    /// all three.
    fn q1_instance(u_count: usize) -> ThreeDM3Instance {
        let mut edges = Vec::new();
        for t in 0..u_count {
            let u = 3 + t;
            edges.extend([(0, u), (1, u), (2, u)]);
        }
        let base = Graph::from_edges(3 + u_count, &edges).unwrap();
        ThreeDM3Instance::new(1, u_count, base).unwrap()
    }

    #[test]
    fn dm3_instance_validation() {
        assert!(q1_instance(2).base().edge_count() == 6);
        // A triple with degree 2 violates the structure.
        let base = Graph::from_edges(5, &[(0, 3), (1, 3), (2, 3), (0, 4), (1, 4)]).unwrap();
        assert!(matches!(
            ThreeDM3Instance::new(1, 2, base),
            Err(Error::InvalidInstance(_))
        ));
        // An element of degree 1 violates the no-leaf requirement.
        let base = Graph::from_edges(
            7,
            &[(0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4), (0, 5), (1, 5), (2, 5)],
        );
        assert!(base.is_err() || {
            let b = base.unwrap();
            ThreeDM3Instance::new(1, 4, b).is_err()
        });
    }

    #[test]
    fn dm3_round_trip() {
        let inst = q1_instance(3);
        let again = ThreeDM3Instance::parse(&inst.to_text()).unwrap();
        assert_eq!(inst, again);
    }

    #[test]
    fn dm3_supergraph_counts() {
        let inst = q1_instance(2);
        let red = build_3dm3_supergraph(&inst);
        assert_eq!(red.graph.vertex_count(), 14); // 2|V| + 4|U|
        assert_eq!(red.graph.edge_count(), 15); // |V| + 6|U|
        assert_eq!(red.k, 11); // |V| + 3|U| + 2q
        assert!(red.graph.max_degree() <= 4);
        assert!(is_dd2(&red.graph).unwrap().is_dd2);
    }

    #[test]
    fn dm3_forward_witness_and_extraction() {
        let inst = q1_instance(2);
        let red = build_3dm3_supergraph(&inst);
        let solution = solve_3dm3_bruteforce(&inst).unwrap().unwrap();
        assert_eq!(solution, vec![3]);
        let witness = forward_3dm3_witness(&inst, &red, &solution);
        assert_eq!(witness.len(), red.k);
        assert!(verify_spanning_minimal(&red.graph, &witness).unwrap());
        assert_eq!(extract_3dm3_solution(&inst, &red, &witness), Some(vec![3]));

        // A non-spanning edge set is rejected.
        assert_eq!(extract_3dm3_solution(&inst, &red, &witness[1..]), None);
    }

    #[test]
    fn setcover_instance_validation_and_round_trip() {
        let inst = SetCoverInstance::new(3, vec![vec![0, 1], vec![1, 2], vec![2]], 2).unwrap();
        let again = SetCoverInstance::parse(&inst.to_text()).unwrap();
        assert_eq!(inst, again);

        assert!(SetCoverInstance::new(2, vec![vec![0]], 1).is_err()); // item 1 uncovered
        assert!(SetCoverInstance::new(2, vec![vec![0, 1]], 2).is_err()); // k > m
        assert!(SetCoverInstance::parse("2 1 1\n0 1\njunk").is_err());
    }

    #[test]
    fn setcover_reduction_structure() {
        // Single set covering both items, k = 1.
        let inst = SetCoverInstance::new(2, vec![vec![0, 1]], 1).unwrap();
        let red = build_setcover_reduction(&inst);
        assert_eq!(red.eta, 3);
        assert_eq!(red.graph.edge_count(), 14); // 2m + eta(n + sum|F_j|)
        assert_eq!(red.graph.vertex_count(), 2 * 3 * 2 + 3 * 1);
        assert!(!is_dd2(&red.graph).unwrap().is_dd2);

        // Weak supports are exactly the item copies, and they are
        // pairwise independent.
        let classes = classify_vertices(&red.graph);
        let mut copies: Vec<usize> = red.item_copies.iter().flatten().copied().collect();
        copies.sort_unstable();
        assert_eq!(classes.weak_supports, copies);
        for &u in &copies {
            assert!(red
                .graph
                .neighbors(u)
                .iter()
                .all(|v| !copies.contains(v)));
        }
    }

    #[test]
    fn setcover_extraction() {
        let inst = SetCoverInstance::new(2, vec![vec![0, 1]], 1).unwrap();
        let red = build_setcover_reduction(&inst);
        let consistent = vec![red.set_leaf_pairs[0]];
        assert_eq!(extract_setcover_solution(&inst, &red, &consistent), Some(vec![0]));

        // An edge set whose addition does not produce an admitting graph is
        // rejected.
        let bad = vec![(red.copy_leaves[0][0], red.copy_leaves[0][1])];
        assert_eq!(extract_setcover_solution(&inst, &red, &bad), None);
    }

    #[test]
    fn setcover_bruteforce() {
        let inst = SetCoverInstance::new(2, vec![vec![0], vec![1]], 1).unwrap();
        assert_eq!(solve_setcover_bruteforce(&inst).unwrap(), None);

        let inst = SetCoverInstance::new(2, vec![vec![0, 1]], 1).unwrap();
        assert_eq!(solve_setcover_bruteforce(&inst).unwrap(), Some(vec![0]));

        let inst =
            SetCoverInstance::new(3, vec![vec![0, 1], vec![1, 2], vec![2]], 2).unwrap();
        assert_eq!(solve_setcover_bruteforce(&inst).unwrap(), Some(vec![0, 1]));
    }

    #[test]
    fn dm3_bruteforce_infeasible() {
        // q=2, |U|=4, wired so that no 2 triples cover all six elements:
        // z-coverage forces one of {u0,u1} and one of {u2,u3}, but every
        // such pair misses an element.
        let mut edges = Vec::new();
        let (x1, x2, y1, y2, z1, z2) = (0, 1, 2, 3, 4, 5);
        let triples = [
            (x1, y1, z1),
            (x2, y2, z1),
            (x1, y2, z2),
            (x2, y1, z2),
        ];
        for (t, &(x, y, z)) in triples.iter().enumerate() {
            let u = 6 + t;
            edges.extend([(x, u), (y, u), (z, u)]);
        }
        let base = Graph::from_edges(10, &edges).unwrap();
        let inst = ThreeDM3Instance::new(2, 4, base).unwrap();
        assert_eq!(solve_3dm3_bruteforce(&inst).unwrap(), None);
    }
}
