//! Simple graphs, multigraphs, vertex classification, and edit operations.
//!
//! Vertex ids are dense `0..n`. All values are immutable after construction
//! and every operation is a pure function, so everything here is safe to
//! share across threads. Set-valued outputs are always sorted.

use crate::error::{Error, Result};

/// Simple undirected graph with sorted adjacency lists.
///
/// Invariants: adjacency is symmetric, loop-free, and duplicate-free.
/// Construction through [`Graph::from_edges`] or the parsers enforces this.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates, and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        g.sort_adjacency();
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        if u >= n {
            return Err(Error::VertexOutOfRange(u));
        }
        if v >= n {
            return Err(Error::VertexOutOfRange(v));
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.adj[u].contains(&v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        Ok(())
    }

    fn sort_adjacency(&mut self) {
        for nbrs in &mut self.adj {
            nbrs.sort_unstable();
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Lowest-id isolated vertex, if any.
    pub fn isolated_vertex(&self) -> Option<usize> {
        self.adj.iter().position(Vec::is_empty)
    }

    /// All edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Edge-list document: `"n m"` header followed by one `"u v"` line per
    /// edge in lexicographic order. `parse_graph` round-trips this exactly.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Undirected multigraph: parallel edges allowed, loops rejected.
///
/// The edge list is kept normalized (`u <= v` per pair) and sorted, so equal
/// multigraphs serialize identically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut canon = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        Ok(MultiGraph { n, edges: canon })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical (sorted, normalized) order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Number of edge ends incident to `v`; a vertex with exactly one edge
    /// end is a leaf of the multigraph.
    pub fn end_count(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// The leaf / weak-support / strong-support partition of a graph's vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexClassification {
    /// Vertices of degree exactly one.
    pub leaves: Vec<usize>,
    /// Supports with exactly one leaf neighbor.
    pub weak_supports: Vec<usize>,
    /// Supports with at least two leaf neighbors.
    pub strong_supports: Vec<usize>,
}

impl VertexClassification {
    /// All supports (weak and strong), sorted.
    pub fn supports(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self
            .weak_supports
            .iter()
            .chain(&self.strong_supports)
            .copied()
            .collect();
        s.sort_unstable();
        s
    }
}

/// Per-vertex classification flags; the cheap form used by the linear-time
/// recognizers.
#[derive(Clone, Debug)]
pub(crate) struct ClassFlags {
    pub leaf: Vec<bool>,
    pub support: Vec<bool>,
    /// Implies `support`.
    pub weak: Vec<bool>,
}

pub(crate) fn classify_flags(g: &Graph) -> ClassFlags {
    let n = g.vertex_count();
    let leaf: Vec<bool> = (0..n).map(|v| g.degree(v) == 1).collect();
    let mut support = vec![false; n];
    let mut weak = vec![false; n];
    for v in 0..n {
        let leaf_nbrs = g.neighbors(v).iter().filter(|&&u| leaf[u]).count();
        support[v] = leaf_nbrs >= 1;
        weak[v] = leaf_nbrs == 1;
    }
    ClassFlags { leaf, support, weak }
}

/// Partitions the vertices into leaves, weak supports, and strong supports.
pub fn classify_vertices(g: &Graph) -> VertexClassification {
    let flags = classify_flags(g);
    let n = g.vertex_count();
    VertexClassification {
        leaves: (0..n).filter(|&v| flags.leaf[v]).collect(),
        weak_supports: (0..n).filter(|&v| flags.weak[v]).collect(),
        strong_supports: (0..n)
            .filter(|&v| flags.support[v] && !flags.weak[v])
            .collect(),
    }
}

/// A proper 2-coloring of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

/// Two-colors `g` if it is bipartite. Within each connected component the
/// color class containing the component's smallest vertex goes to `side_a`.
/// Returns `None` exactly when `g` has an odd cycle.
pub fn bipartition(g: &Graph) -> Option<Bipartition> {
    let n = g.vertex_count();
    // color: 0 = unvisited, 1 = side_a, 2 = side_b
    let mut color = vec![0u8; n];
    let mut queue = std::collections::VecDeque::new();
    for start in 0..n {
        if color[start] != 0 {
            continue;
        }
        color[start] = 1;
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if color[u] == 0 {
                    color[u] = 3 - color[v];
                    queue.push_back(u);
                } else if color[u] == color[v] {
                    return None;
                }
            }
        }
    }
    Some(Bipartition {
        side_a: (0..n).filter(|&v| color[v] == 1).collect(),
        side_b: (0..n).filter(|&v| color[v] == 2).collect(),
    })
}

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    let mut stack = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        stack.push(start);
        let mut comp = Vec::new();
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    components
}

/// Replaces each listed edge `uv` by a path `u-w-v` through a fresh vertex.
/// Fresh ids are appended in the order the edges are listed.
pub fn subdivide_edges(g: &Graph, edges: &[(usize, usize)]) -> Result<Graph> {
    let mut seen = std::collections::HashSet::new();
    for &(u, v) in edges {
        if !g.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
    }
    let n = g.vertex_count();
    let mut new_edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| !seen.contains(&(u, v)))
        .collect();
    for (i, &(u, v)) in edges.iter().enumerate() {
        let w = n + i;
        new_edges.push((u, w));
        new_edges.push((w, v));
    }
    Graph::from_edges(n + edges.len(), &new_edges)
}

/// The subdivision graph of a multigraph: one fresh vertex per edge, placed
/// after the original ids in canonical edge order. Returns the graph together
/// with the canonical-edge-index → subdivision-vertex map.
pub fn subdivision_graph(h: &MultiGraph) -> (Graph, Vec<usize>) {
    let n = h.vertex_count();
    let mut edges = Vec::with_capacity(2 * h.edge_count());
    let mut vertex_of_edge = Vec::with_capacity(h.edge_count());
    for (i, &(u, v)) in h.edges().iter().enumerate() {
        let w = n + i;
        edges.push((u, w));
        edges.push((w, v));
        vertex_of_edge.push(w);
    }
    let g = Graph::from_edges(n + h.edge_count(), &edges)
        .expect("subdivision of a loop-free multigraph is simple");
    (g, vertex_of_edge)
}

/// Adds the listed edges; each must be a currently absent non-loop pair.
pub fn add_edges(g: &Graph, edges: &[(usize, usize)]) -> Result<Graph> {
    let mut out = g.clone();
    for &(u, v) in edges {
        if u < out.vertex_count() && v < out.vertex_count() {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if out.has_edge(u, v) {
                return Err(Error::EdgeExists(u.min(v), u.max(v)));
            }
        }
        out.insert_edge(u, v)?;
    }
    out.sort_adjacency();
    Ok(out)
}

/// Subgraph induced by `s`, relabeled to `0..|s|`; also returns the
/// new-id → original-id map (ascending).
pub fn induced_subgraph(g: &Graph, s: &[usize]) -> Result<(Graph, Vec<usize>)> {
    let mut ids: Vec<usize> = s.to_vec();
    ids.sort_unstable();
    ids.dedup();
    if let Some(&v) = ids.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(Error::VertexOutOfRange(v));
    }
    let mut index_of = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in ids.iter().enumerate() {
        index_of[v] = i;
    }
    let mut edges = Vec::new();
    for (i, &v) in ids.iter().enumerate() {
        for &u in g.neighbors(v) {
            let j = index_of[u];
            if j != usize::MAX && i < j {
                edges.push((i, j));
            }
        }
    }
    let sub = Graph::from_edges(ids.len(), &edges)?;
    Ok((sub, ids))
}

fn parse_header(line: &str, lineno: usize, expect: usize) -> Result<Vec<usize>> {
    let fields: Vec<&str> = line.split_ascii_whitespace().collect();
    if fields.len() != expect {
        return Err(Error::parse(
            lineno,
            format!("expected {expect} integers, found {}", fields.len()),
        ));
    }
    fields
        .iter()
        .map(|f| {
            f.parse::<usize>()
                .map_err(|_| Error::parse(lineno, format!("invalid integer `{f}`")))
        })
        .collect()
}

fn parse_edge_lines(
    lines: &[(usize, &str)],
    n: usize,
    m: usize,
    allow_duplicates: bool,
) -> Result<Vec<(usize, usize)>> {
    if lines.len() < m {
        return Err(Error::parse(
            lines.last().map_or(1, |&(no, _)| no),
            format!("expected {m} edge lines, found {}", lines.len()),
        ));
    }
    if lines.len() > m {
        let (no, _) = lines[m];
        return Err(Error::parse(no, "unexpected trailing content".to_string()));
    }
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for &(no, line) in lines {
        let ids = parse_header(line, no, 2)?;
        let (u, v) = (ids[0], ids[1]);
        if u >= n || v >= n {
            return Err(Error::parse(no, format!("vertex id out of range 0..{n}")));
        }
        if u == v {
            return Err(Error::parse(no, format!("loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) && !allow_duplicates {
            return Err(Error::parse(no, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    Ok(edges)
}

fn non_empty_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty())
        .collect()
}

/// Parses the edge-list document format: header `"n m"`, then `m` lines
/// `"u v"`. Duplicate edges, loops, and out-of-range ids are rejected with
/// the offending line number.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let lines = non_empty_lines(text);
    let Some(&(first_no, first)) = lines.first() else {
        return Err(Error::parse(1, "empty document".to_string()));
    };
    let header = parse_header(first, first_no, 2)?;
    let (n, m) = (header[0], header[1]);
    let edges = parse_edge_lines(&lines[1..], n, m, false)?;
    Graph::from_edges(n, &edges)
}

/// Parses the multigraph document format; identical to [`parse_graph`]
/// except that duplicate edge lines are legal.
pub fn parse_multigraph(text: &str) -> Result<MultiGraph> {
    let lines = non_empty_lines(text);
    let Some(&(first_no, first)) = lines.first() else {
        return Err(Error::parse(1, "empty document".to_string()));
    };
    let header = parse_header(first, first_no, 2)?;
    let (n, m) = (header[0], header[1]);
    let edges = parse_edge_lines(&lines[1..], n, m, true)?;
    MultiGraph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::make;
    use crate::generators::Family::*;

    #[test]
    fn parse_accepts_paths_and_cycles() {
        let p3 = parse_graph("3 2\n0 1\n1 2").unwrap();
        assert_eq!(p3, make(Path(3)).unwrap());
        let c4 = parse_graph("4 4\n0 1\n1 2\n2 3\n3 0").unwrap();
        assert_eq!(c4, make(Cycle(4)).unwrap());
    }

    #[test]
    fn parse_rejects_duplicate_edge() {
        let err = parse_graph("2 2\n0 1\n0 1").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                message: "duplicate edge 0 1".to_string()
            }
        );
        // Reversed orientation is the same edge.
        assert!(parse_graph("2 2\n0 1\n1 0").is_err());
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("2 1\n0 2"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("2 1\n1 1"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("2 1\n0 x"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("2 2\n0 1"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_graph("2 1\n0 1\n0 1"),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn multigraph_allows_parallel_edges() {
        let h = parse_multigraph("2 2\n0 1\n0 1").unwrap();
        assert_eq!(h.edge_count(), 2);
        assert_eq!(h.end_count(0), 2);
        assert!(parse_multigraph("2 1\n1 1").is_err());
    }

    #[test]
    fn serialization_round_trips() {
        let g = parse_graph("5 4\n3 4\n0 1\n1 2\n2 3").unwrap();
        assert_eq!(parse_graph(&g.to_edge_list()).unwrap(), g);
        let h = parse_multigraph("3 3\n0 1\n1 0\n1 2").unwrap();
        assert_eq!(parse_multigraph(&h.to_edge_list()).unwrap(), h);
    }

    #[test]
    fn classify_path_and_star() {
        let c = classify_vertices(&make(Path(4)).unwrap());
        assert_eq!(c.leaves, vec![0, 3]);
        assert_eq!(c.weak_supports, vec![1, 2]);
        assert!(c.strong_supports.is_empty());

        let c = classify_vertices(&make(Star(3)).unwrap());
        assert_eq!(c.leaves, vec![1, 2, 3]);
        assert!(c.weak_supports.is_empty());
        assert_eq!(c.strong_supports, vec![0]);
    }

    #[test]
    fn classify_k2_vertices_are_leaf_and_weak_support() {
        // Each endpoint has degree 1 and exactly one leaf neighbor, so it is
        // simultaneously a leaf and a weak support.
        let c = classify_vertices(&make(Path(2)).unwrap());
        assert_eq!(c.leaves, vec![0, 1]);
        assert_eq!(c.weak_supports, vec![0, 1]);
        assert!(c.strong_supports.is_empty());
    }

    #[test]
    fn bipartition_examples() {
        let b = bipartition(&make(Cycle(4)).unwrap()).unwrap();
        assert_eq!(b.side_a, vec![0, 2]);
        assert_eq!(b.side_b, vec![1, 3]);

        assert!(bipartition(&make(Cycle(3)).unwrap()).is_none());

        let b = bipartition(&make(Path(5)).unwrap()).unwrap();
        assert_eq!(b.side_a, vec![0, 2, 4]);
        assert_eq!(b.side_b, vec![1, 3]);
    }

    #[test]
    fn components_are_ordered_by_smallest_member() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(connected_components(&g), vec![vec![0, 1, 2], vec![3, 4]]);

        let empty = Graph::new(3);
        assert_eq!(
            connected_components(&empty),
            vec![vec![0], vec![1], vec![2]]
        );

        assert_eq!(
            connected_components(&make(Cycle(4)).unwrap()),
            vec![vec![0, 1, 2, 3]]
        );
    }

    #[test]
    fn subdividing_edges() {
        // K2 with its edge subdivided is P3 through the fresh vertex 2.
        let k2 = make(Path(2)).unwrap();
        assert_eq!(
            subdivide_edges(&k2, &[(0, 1)]).unwrap().edges(),
            vec![(0, 2), (1, 2)]
        );

        let c3 = make(Cycle(3)).unwrap();
        let s = subdivide_edges(&c3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(s.vertex_count(), 6);
        assert_eq!(s.edge_count(), 6);
        assert!(connected_components(&s).len() == 1);
        assert!((0..6).all(|v| s.degree(v) == 2)); // C6

        // P4 with its middle edge subdivided is P5 up to relabeling.
        let p4 = make(Path(4)).unwrap();
        let s = subdivide_edges(&p4, &[(1, 2)]).unwrap();
        assert_eq!(s.vertex_count(), 5);
        assert_eq!(s.edge_count(), 4);
        assert_eq!(s.edges(), vec![(0, 1), (1, 4), (2, 3), (2, 4)]);

        assert_eq!(
            subdivide_edges(&p4, &[(0, 2)]),
            Err(Error::NotAnEdge(0, 2))
        );
    }

    #[test]
    fn subdivision_graph_of_multigraphs() {
        let single = MultiGraph::from_edges(2, &[(0, 1)]).unwrap();
        let (g, map) = subdivision_graph(&single);
        assert_eq!(g.edges(), vec![(0, 2), (1, 2)]); // P3
        assert_eq!(map, vec![2]);

        let double = MultiGraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        let (g, map) = subdivision_graph(&double);
        assert_eq!(g.edges(), vec![(0, 2), (0, 3), (1, 2), (1, 3)]); // C4
        assert_eq!(map, vec![2, 3]);

        let p3 = MultiGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let (g, _) = subdivision_graph(&p3);
        assert_eq!(g.edges(), vec![(0, 3), (1, 3), (1, 4), (2, 4)]); // P5
    }

    #[test]
    fn adding_edges() {
        let p3 = make(Path(3)).unwrap();
        assert_eq!(
            add_edges(&p3, &[(0, 2)]).unwrap(),
            make(Cycle(3)).unwrap()
        );

        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let p4 = add_edges(&two_k2, &[(1, 2)]).unwrap();
        assert_eq!(p4.edges(), vec![(0, 1), (1, 2), (2, 3)]);

        let c4 = make(Cycle(4)).unwrap();
        let chord = add_edges(&c4, &[(0, 2)]).unwrap();
        assert_eq!(chord.edge_count(), 5);

        assert_eq!(add_edges(&c4, &[(0, 1)]), Err(Error::EdgeExists(0, 1)));
        assert_eq!(add_edges(&c4, &[(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn induced_subgraphs() {
        let c4 = make(Cycle(4)).unwrap();
        let (sub, map) = induced_subgraph(&c4, &[0, 1]).unwrap();
        assert_eq!(sub.edges(), vec![(0, 1)]);
        assert_eq!(map, vec![0, 1]);

        let (sub, _) = induced_subgraph(&c4, &[0, 2]).unwrap();
        assert_eq!(sub.edge_count(), 0);

        let k4 = make(Complete(4)).unwrap();
        let (sub, _) = induced_subgraph(&k4, &[0, 1, 2]).unwrap();
        assert_eq!(sub.edge_count(), 3);
    }
}
