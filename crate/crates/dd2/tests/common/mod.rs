//! Helpers shared by the integration and acceptance suites.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dd2::graph::Graph;

pub fn all_vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Seeded G(n, p) with isolated vertices repaired by attaching them to a
/// random other vertex, so the result always feeds the recognizers.
pub fn random_graph_no_isolated(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let threshold = (p * 1_000_000.0) as u64;
    let mut edges = Vec::new();
    for (u, v) in all_vertex_pairs(n) {
        if rng.random_range(0..1_000_000u64) < threshold {
            edges.push((u, v));
        }
    }
    let mut g = Graph::from_edges(n, &edges).unwrap();
    while let Some(v) = g.isolated_vertex() {
        let mut other = rng.random_range(0..n);
        if other == v {
            other = (other + 1) % n;
        }
        g = dd2::graph::add_edges(&g, &[(v, other)]).unwrap();
    }
    g
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A closed walk of odd length in a non-bipartite graph, as a vertex
/// sequence starting and ending at the same vertex. Found from BFS levels:
/// an edge inside one level closes an odd walk through the BFS root.
pub fn find_odd_closed_walk(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut depth = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if depth[u] == usize::MAX {
                    depth[u] = depth[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                } else if depth[u] == depth[v] && u != v {
                    // Same-level edge: root->v, edge, u->root is odd.
                    let path_to_root = |mut x: usize| {
                        let mut path = vec![x];
                        while parent[x] != usize::MAX {
                            x = parent[x];
                            path.push(x);
                        }
                        path
                    };
                    let down: Vec<usize> = path_to_root(v).into_iter().rev().collect();
                    let up = path_to_root(u);
                    let mut walk = down;
                    walk.extend(up);
                    return Some(walk);
                }
            }
        }
    }
    None
}

/// Checks that `walk` is a closed walk of odd length in `g`.
pub fn is_odd_closed_walk(g: &Graph, walk: &[usize]) -> bool {
    walk.len() >= 4
        && walk.first() == walk.last()
        && (walk.len() - 1) % 2 == 1
        && walk.windows(2).all(|w| g.has_edge(w[0], w[1]))
}
