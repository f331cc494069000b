//! Deterministic constructors for the named graph families, plus seeded
//! random corona multigraphs and exhaustive small-graph enumeration.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, MultiGraph};

/// The plain graph families with canonical labelings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Path `0-1-...-(n-1)`.
    Path(usize),
    /// Cycle: the path plus the closing edge `(n-1, 0)`.
    Cycle(usize),
    /// Star `K_{1,n}` with center 0 and `n` leaves.
    Star(usize),
    /// Complete graph `K_n`.
    Complete(usize),
    /// Complete bipartite graph with sides `0..a` and `a..a+b`.
    CompleteBipartite(usize, usize),
}

pub fn make(family: Family) -> Result<Graph> {
    let param = |name: &str, val: usize, min: usize| {
        if val < min {
            Err(Error::InvalidParameter(format!("{name} must be >= {min}")))
        } else {
            Ok(val)
        }
    };
    match family {
        Family::Path(n) => {
            param("path order", n, 1)?;
            let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::Cycle(n) => {
            param("cycle order", n, 3)?;
            let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            edges.push((n - 1, 0));
            Graph::from_edges(n, &edges)
        }
        Family::Star(n) => {
            param("star leaf count", n, 1)?;
            let edges: Vec<_> = (1..=n).map(|v| (0, v)).collect();
            Graph::from_edges(n + 1, &edges)
        }
        Family::Complete(n) => {
            param("complete order", n, 1)?;
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            Graph::from_edges(n, &edges)
        }
        Family::CompleteBipartite(a, b) => {
            param("side a", a, 1)?;
            param("side b", b, 1)?;
            let edges: Vec<_> = (0..a)
                .flat_map(|u| (a..a + b).map(move |v| (u, v)))
                .collect();
            Graph::from_edges(a + b, &edges)
        }
    }
}

/// Attaches `t` fresh pendant leaves to every vertex of `f`. The leaves of
/// vertex `v` get ids `n + v*t .. n + (v+1)*t`.
pub fn corona(f: &Graph, t: usize) -> Result<Graph> {
    if t < 1 {
        return Err(Error::InvalidParameter(
            "pendant count must be >= 1".to_string(),
        ));
    }
    let n = f.vertex_count();
    let mut edges = f.edges();
    for v in 0..n {
        for j in 0..t {
            edges.push((v, n + v * t + j));
        }
    }
    Graph::from_edges(n + n * t, &edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GnkVariant {
    /// Apex joined to `(k-3)` isolated vertices plus `K_{n+2-k}`.
    CliqueRest,
    /// Apex joined to `(k-3)` isolated vertices plus `K_{2,n-k}`.
    BicliqueRest,
}

/// The `n`-vertex families with `gamma-gamma-2` value exactly `k`.
/// Vertex 0 is the apex joined to everything; the remainder follows in
/// declaration order: isolates first, then the clique or biclique block.
pub fn gnk(n: usize, k: usize, variant: GnkVariant) -> Result<Graph> {
    if !(3 <= k && k <= n) {
        return Err(Error::InvalidParameter(format!(
            "gnk requires 3 <= k <= n, got n={n} k={k}"
        )));
    }
    if variant == GnkVariant::BicliqueRest && n == k {
        // K_{2,0} would be degenerate.
        return Err(Error::InvalidParameter(
            "biclique variant requires n - k >= 1".to_string(),
        ));
    }
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
    let block = k - 2; // first vertex of the clique/biclique block
    match variant {
        GnkVariant::CliqueRest => {
            for u in block..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
        }
        GnkVariant::BicliqueRest => {
            for u in [block, block + 1] {
                for v in block + 2..n {
                    edges.push((u, v));
                }
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Seeded random multigraph in which every vertex is a leaf or adjacent to a
/// leaf: a random base multigraph on `nodes` vertices (up to `extra_edges`
/// random edges, per-pair multiplicity capped at `max_mult`), then a fresh
/// pendant attached to every non-leaf vertex that lacks a leaf neighbor.
pub fn random_corona_multigraph(
    nodes: usize,
    extra_edges: usize,
    max_mult: usize,
    seed: u64,
) -> Result<MultiGraph> {
    if nodes < 1 {
        return Err(Error::InvalidParameter("nodes must be >= 1".to_string()));
    }
    if max_mult < 1 {
        return Err(Error::InvalidParameter("max_mult must be >= 1".to_string()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut mult = std::collections::HashMap::new();
    if nodes >= 2 {
        for _ in 0..extra_edges {
            for _attempt in 0..64 {
                let u = rng.random_range(0..nodes);
                let v = rng.random_range(0..nodes);
                if u == v {
                    continue;
                }
                let key = (u.min(v), u.max(v));
                let count = mult.entry(key).or_insert(0usize);
                if *count < max_mult {
                    *count += 1;
                    edges.push(key);
                    break;
                }
            }
        }
    }
    let base = MultiGraph::from_edges(nodes, &edges)?;
    let is_leaf: Vec<bool> = (0..nodes).map(|v| base.end_count(v) == 1).collect();
    let mut next = nodes;
    let mut edges = base.edges().to_vec();
    for v in 0..nodes {
        if is_leaf[v] {
            continue;
        }
        let has_leaf_neighbor = base
            .edges()
            .iter()
            .any(|&(a, b)| (a == v && is_leaf[b]) || (b == v && is_leaf[a]));
        if !has_leaf_neighbor {
            edges.push((v, next));
            next += 1;
        }
    }
    MultiGraph::from_edges(next, &edges)
}

/// All labeled graphs on `n` vertices in lexicographic edge-mask order.
/// Pair `i` of the mask is the `i`-th pair in `(0,1),(0,2),...,(n-2,n-1)`
/// order. Guarded at `n <= 7`.
pub fn enumerate_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > 7 {
        return Err(Error::GuardExceeded(format!(
            "graph enumeration is limited to n <= 7, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total: u64 = 1 << pairs.len();
    Ok((0..total).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).expect("masks enumerate valid simple graphs")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Family::*;

    #[test]
    fn canonical_labelings() {
        assert_eq!(
            make(Cycle(4)).unwrap().edges(),
            vec![(0, 1), (0, 3), (1, 2), (2, 3)]
        );
        let star = make(Star(3)).unwrap();
        assert_eq!(star.edges(), vec![(0, 1), (0, 2), (0, 3)]);
        assert_eq!(make(CompleteBipartite(3, 3)).unwrap().edge_count(), 9);
        assert!(make(Cycle(2)).is_err());
    }

    #[test]
    fn corona_of_k2_is_a_path() {
        let g = corona(&make(Path(2)).unwrap(), 1).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 3)]);
    }

    #[test]
    fn corona_orders() {
        let c3 = make(Cycle(3)).unwrap();
        assert_eq!(corona(&c3, 1).unwrap().vertex_count(), 6);
        assert_eq!(corona(&c3, 2).unwrap().vertex_count(), 9);
    }

    #[test]
    fn gnk_shapes() {
        let g = gnk(4, 3, GnkVariant::CliqueRest).unwrap();
        assert_eq!(g, make(Complete(4)).unwrap());

        let g = gnk(5, 5, GnkVariant::CliqueRest).unwrap();
        assert_eq!(g.vertex_count(), 5);
        // apex + two isolates-with-apex + K2 block
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (0, 3), (0, 4), (3, 4)]);

        for n in 3..=9 {
            for k in 3..=n {
                assert_eq!(gnk(n, k, GnkVariant::CliqueRest).unwrap().vertex_count(), n);
                if n > k {
                    assert_eq!(
                        gnk(n, k, GnkVariant::BicliqueRest).unwrap().vertex_count(),
                        n
                    );
                }
            }
        }
        assert!(gnk(5, 5, GnkVariant::BicliqueRest).is_err());
        assert!(gnk(4, 2, GnkVariant::CliqueRest).is_err());
    }

    #[test]
    fn random_corona_multigraph_smallest_case() {
        let h = random_corona_multigraph(1, 0, 1, 42).unwrap();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edges(), &[(0, 1)]);
    }

    #[test]
    fn random_corona_multigraph_is_seed_deterministic() {
        let a = random_corona_multigraph(5, 4, 2, 7).unwrap();
        let b = random_corona_multigraph(5, 4, 2, 7).unwrap();
        assert_eq!(a, b);
        let c = random_corona_multigraph(5, 4, 2, 8).unwrap();
        assert!(a == c || a != c); // different seed may or may not collide
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_graphs(2).unwrap().count(), 2);
        assert_eq!(enumerate_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_graphs(4).unwrap().count(), 64);
        assert!(enumerate_graphs(8).is_err());
    }
}
