//! Maximum matching in general graphs (Edmonds' blossom algorithm, O(V^3)).

use crate::graph::Graph;

struct Matcher<'a> {
    g: &'a Graph,
    mate: Vec<Option<usize>>,
    parent: Vec<Option<usize>>,
    base: Vec<usize>,
}

impl<'a> Matcher<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.vertex_count();
        Matcher {
            g,
            mate: vec![None; n],
            parent: vec![None; n],
            base: (0..n).collect(),
        }
    }

    /// Common base of the alternating-tree paths from `a` and `b`.
    fn lowest_common_base(&self, a: usize, b: usize) -> usize {
        let n = self.g.vertex_count();
        let mut marked = vec![false; n];
        let mut v = a;
        loop {
            v = self.base[v];
            marked[v] = true;
            match self.mate[v] {
                Some(m) => v = self.parent[m].expect("matched tree vertex has a parent"),
                None => break,
            }
        }
        let mut w = b;
        loop {
            w = self.base[w];
            if marked[w] {
                return w;
            }
            w = self.parent[self.mate[w].expect("path to root alternates")]
                .expect("path to root alternates");
        }
    }

    fn mark_path(&mut self, mut v: usize, stem: usize, mut child: usize, in_blossom: &mut [bool]) {
        while self.base[v] != stem {
            in_blossom[self.base[v]] = true;
            let m = self.mate[v].expect("blossom path alternates");
            in_blossom[self.base[m]] = true;
            self.parent[v] = Some(child);
            child = m;
            v = self.parent[m].expect("blossom path alternates");
        }
    }

    /// BFS for an augmenting path from the unmatched `root`; contracts
    /// blossoms on the fly. Returns the free endpoint if one is found.
    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.vertex_count();
        self.parent = vec![None; n];
        self.base = (0..n).collect();
        let mut in_tree = vec![false; n];
        in_tree[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);

        while let Some(v) = queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == Some(to) {
                    continue;
                }
                let closes_cycle = to == root
                    || self
                        .mate[to]
                        .is_some_and(|m| self.parent[m].is_some());
                if closes_cycle {
                    let stem = self.lowest_common_base(v, to);
                    let mut in_blossom = vec![false; n];
                    self.mark_path(v, stem, to, &mut in_blossom);
                    self.mark_path(to, stem, v, &mut in_blossom);
                    for i in 0..n {
                        if in_blossom[self.base[i]] {
                            self.base[i] = stem;
                            if !in_tree[i] {
                                in_tree[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to].is_none() {
                    self.parent[to] = Some(v);
                    match self.mate[to] {
                        None => return Some(to),
                        Some(m) => {
                            if !in_tree[m] {
                                in_tree[m] = true;
                                queue.push_back(m);
                            }
                        }
                    }
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        loop {
            let pv = self.parent[v].expect("augmenting path reaches the root");
            let next = self.mate[pv];
            self.mate[v] = Some(pv);
            self.mate[pv] = Some(v);
            match next {
                Some(nv) => v = nv,
                None => return,
            }
        }
    }

    fn run(mut self) -> Vec<(usize, usize)> {
        let n = self.g.vertex_count();
        // Greedy seed matching; the search below only has to fix up the rest.
        for v in 0..n {
            if self.mate[v].is_none() {
                if let Some(&u) = self.g.neighbors(v).iter().find(|&&u| self.mate[u].is_none()) {
                    self.mate[v] = Some(u);
                    self.mate[u] = Some(v);
                }
            }
        }
        for v in 0..n {
            if self.mate[v].is_none() {
                if let Some(end) = self.find_augmenting_path(v) {
                    self.augment(end);
                }
            }
        }
        (0..n)
            .filter_map(|v| self.mate[v].map(|u| (v, u)))
            .filter(|&(v, u)| v < u)
            .collect()
    }
}

/// A maximum-cardinality matching, returned as a sorted list of disjoint
/// edges. Handles odd cycles (non-bipartite graphs) correctly.
pub fn maximum_matching(g: &Graph) -> Vec<(usize, usize)> {
    Matcher::new(g).run()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make, Family::*};
    use crate::graph::Graph;

    /// Exponential reference: max matching size by branching over edges.
    pub(crate) fn max_matching_size_bruteforce(g: &Graph) -> usize {
        fn rec(edges: &[(usize, usize)], used: &mut [bool]) -> usize {
            let Some((&(u, v), rest)) = edges.split_first() else {
                return 0;
            };
            let mut best = rec(rest, used);
            if !used[u] && !used[v] {
                used[u] = true;
                used[v] = true;
                best = best.max(1 + rec(rest, used));
                used[u] = false;
                used[v] = false;
            }
            best
        }
        let edges = g.edges();
        rec(&edges, &mut vec![false; g.vertex_count()])
    }

    fn is_matching(g: &Graph, m: &[(usize, usize)]) -> bool {
        let mut used = vec![false; g.vertex_count()];
        m.iter().all(|&(u, v)| {
            let ok = g.has_edge(u, v) && !used[u] && !used[v];
            used[u] = true;
            used[v] = true;
            ok
        })
    }

    #[test]
    fn matches_paths_and_cycles() {
        let m = maximum_matching(&make(Path(4)).unwrap());
        assert_eq!(m, vec![(0, 1), (2, 3)]);
        assert_eq!(maximum_matching(&make(Cycle(5)).unwrap()).len(), 2);
    }

    #[test]
    fn petersen_graph_has_a_perfect_matching() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        let g = Graph::from_edges(10, &edges).unwrap();
        let m = maximum_matching(&g);
        assert!(is_matching(&g, &m));
        assert_eq!(m.len(), 5);
        assert_eq!(max_matching_size_bruteforce(&g), 5);
    }

    #[test]
    fn blossom_inside_blossom() {
        // Two triangles joined by a path: needs blossom handling.
        let g = Graph::from_edges(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 4),
                (6, 7),
            ],
        )
        .unwrap();
        let m = maximum_matching(&g);
        assert!(is_matching(&g, &m));
        assert_eq!(m.len(), max_matching_size_bruteforce(&g));
    }

    #[test]
    fn agrees_with_bruteforce_on_all_small_graphs() {
        for n in 0..=5usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u32..1 << pairs.len() {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                let m = maximum_matching(&g);
                assert!(is_matching(&g, &m));
                assert_eq!(
                    m.len(),
                    max_matching_size_bruteforce(&g),
                    "mismatch on n={n} mask={mask}"
                );
            }
        }
    }
}
