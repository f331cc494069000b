//! Deciding whether a graph admits a pair of disjoint dominating and
//! 2-dominating sets, in linear time, with certificates.
//!
//! The recognizer rests on the weak-support criterion: a graph without
//! isolated vertices admits such a pair exactly when every weak support has
//! a neighbor that is neither a leaf nor a support. The brute-force oracle
//! decides the same question definitionally and is kept independent of the
//! criterion.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{classify_flags, ClassFlags, Graph};

/// A candidate pair of disjoint vertex sets: `d` intended to dominate and
/// `d2` to 2-dominate. [`verify_dd2_pair`] checks the actual properties.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DD2Pair {
    pub d: Vec<usize>,
    pub d2: Vec<usize>,
}

fn write_ids(f: &mut fmt::Formatter<'_>, name: &str, ids: &[usize]) -> fmt::Result {
    write!(f, "{name}")?;
    for v in ids {
        write!(f, " {v}")?;
    }
    writeln!(f)
}

impl fmt::Display for DD2Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_ids(f, "d", &self.d)?;
        write_ids(f, "d2", &self.d2)
    }
}

/// Outcome of the linear-time recognizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DD2Verdict {
    pub is_dd2: bool,
    /// Smallest-id weak support whose whole neighborhood consists of leaves
    /// and supports; present exactly when the answer is negative.
    pub blocking_witness: Option<usize>,
    /// A valid pair; present exactly when the answer is positive.
    pub pair: Option<DD2Pair>,
}

impl fmt::Display for DD2Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "is_dd2 {}", self.is_dd2)?;
        if let Some(w) = self.blocking_witness {
            writeln!(f, "witness {w}")?;
        }
        if let Some(pair) = &self.pair {
            write!(f, "{pair}")?;
        }
        Ok(())
    }
}

/// Domination facts about a vertex set `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedDomReport {
    pub is_dominating: bool,
    /// Dominating, and every member has zero or at least two neighbors
    /// outside `D`.
    pub is_certified: bool,
    /// Members whose closed neighborhood lies inside `D`.
    pub shadowed: Vec<usize>,
}

impl fmt::Display for CertifiedDomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dominating {}", self.is_dominating)?;
        writeln!(f, "certified {}", self.is_certified)?;
        write_ids(f, "shadowed", &self.shadowed)
    }
}

fn ensure_recognizable(g: &Graph) -> Result<()> {
    if g.vertex_count() == 0 {
        return Err(Error::Precondition("graph has no vertices".to_string()));
    }
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    Ok(())
}

/// Smallest-id weak support all of whose neighbors are leaves or supports.
fn blocking_weak_support(g: &Graph, flags: &ClassFlags) -> Option<usize> {
    (0..g.vertex_count()).find(|&s| {
        flags.weak[s]
            && g.neighbors(s)
                .iter()
                .all(|&u| flags.leaf[u] || flags.support[u])
    })
}

/// The blocking set: every weak support witnessing non-membership.
pub(crate) fn blocking_set(g: &Graph, flags: &ClassFlags) -> Vec<usize> {
    (0..g.vertex_count())
        .filter(|&s| {
            flags.weak[s]
                && g.neighbors(s)
                    .iter()
                    .all(|&u| flags.leaf[u] || flags.support[u])
        })
        .collect()
}

fn pair_from_supports(g: &Graph, flags: &ClassFlags) -> DD2Pair {
    let n = g.vertex_count();
    // Closed neighborhood of the support set.
    let mut near_support = vec![false; n];
    for v in 0..n {
        if flags.support[v] {
            near_support[v] = true;
            for &u in g.neighbors(v) {
                near_support[u] = true;
            }
        }
    }
    // Greeedy maximal independent subset of the rest, ascending ids.
    let mut in_d = vec![false; n];
    let mut blocked = vec![false; n];
    for v in 0..n {
        if !near_support[v] && !blocked[v] {
            in_d[v] = true;
            for &u in g.neighbors(v) {
                blocked[u] = true;
            }
        }
    }
    for v in 0..n {
        if flags.support[v] {
            in_d[v] = true;
        }
    }
    DD2Pair {
        d: (0..n).filter(|&v| in_d[v]).collect(),
        d2: (0..n).filter(|&v| !in_d[v]).collect(),
    }
}

/// Linear-time membership test. On a positive answer the verdict carries the
/// constructed pair; on a negative one, the smallest blocking weak support.
///
/// Errors on graphs with no vertices or with an isolated vertex, for which
/// the weak-support criterion is not stated.
pub fn is_dd2(g: &Graph) -> Result<DD2Verdict> {
    ensure_recognizable(g)?;
    let flags = classify_flags(g);
    Ok(match blocking_weak_support(g, &flags) {
        Some(s) => DD2Verdict {
            is_dd2: false,
            blocking_witness: Some(s),
            pair: None,
        },
        None => DD2Verdict {
            is_dd2: true,
            blocking_witness: None,
            pair: Some(pair_from_supports(g, &flags)),
        },
    })
}

/// Builds the canonical pair: supports, together with the greedy maximal
/// independent subset of everything not in the supports' closed
/// neighborhood, against the rest of the graph.
pub fn construct_dd2_pair(g: &Graph) -> Result<DD2Pair> {
    ensure_recognizable(g)?;
    let flags = classify_flags(g);
    if let Some(s) = blocking_weak_support(g, &flags) {
        return Err(Error::Precondition(format!(
            "not a DD2-graph (blocking weak support {s})"
        )));
    }
    Ok(pair_from_supports(g, &flags))
}

/// Definitional check: the sets are disjoint, `d` dominates, and `d2`
/// 2-dominates. Ids outside the graph make the pair invalid.
pub fn verify_dd2_pair(g: &Graph, pair: &DD2Pair) -> bool {
    let n = g.vertex_count();
    if pair.d.iter().chain(&pair.d2).any(|&v| v >= n) {
        return false;
    }
    let mut in_d = vec![false; n];
    let mut in_d2 = vec![false; n];
    for &v in &pair.d {
        in_d[v] = true;
    }
    for &v in &pair.d2 {
        if in_d[v] {
            return false;
        }
        in_d2[v] = true;
    }
    (0..n).all(|v| {
        let dominated = in_d[v] || g.neighbors(v).iter().any(|&u| in_d[u]);
        let twice_covered = in_d2[v]
            || g.neighbors(v).iter().filter(|&&u| in_d2[u]).count() >= 2;
        dominated && twice_covered
    })
}

/// Reports whether `d` dominates, whether it is certified, and which of its
/// members are shadowed.
pub fn certified_dom_report(g: &Graph, d: &[usize]) -> Result<CertifiedDomReport> {
    let n = g.vertex_count();
    if let Some(&v) = d.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange(v));
    }
    let mut in_d = vec![false; n];
    for &v in d {
        in_d[v] = true;
    }
    let is_dominating =
        (0..n).all(|v| in_d[v] || g.neighbors(v).iter().any(|&u| in_d[u]));
    let mut certified = true;
    let mut shadowed = Vec::new();
    for v in 0..n {
        if !in_d[v] {
            continue;
        }
        let outside = g.neighbors(v).iter().filter(|&&u| !in_d[u]).count();
        if outside == 1 {
            certified = false;
        }
        if outside == 0 {
            shadowed.push(v);
        }
    }
    Ok(CertifiedDomReport {
        is_dominating,
        is_certified: is_dominating && certified,
        shadowed,
    })
}

/// Exhaustive oracle. Scans candidate sets `D` in lexicographic order (as
/// sorted id lists) and returns the first whose complement is 2-dominated
/// by itself, paired with that complement. Only pairs `(D, V - D)` need to
/// be tried: any superset of a 2-dominating set is 2-dominating.
pub fn is_dd2_bruteforce(g: &Graph) -> Result<Option<DD2Pair>> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::Precondition("graph has no vertices".to_string()));
    }
    if n > 24 {
        return Err(Error::GuardExceeded(format!(
            "brute-force membership is limited to n <= 24, got {n}"
        )));
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };

    fn valid(d: u32, adj: &[u32], full: u32) -> bool {
        let d2 = full & !d;
        adj.iter().enumerate().all(|(v, &nbrs)| {
            if d >> v & 1 == 0 {
                nbrs & d != 0
            } else {
                (nbrs & d2).count_ones() >= 2
            }
        })
    }

    // Depth-first extension yields subsets in sorted-id-list lexicographic
    // order: {}, {0}, {0,1}, {0,1,2}, ..., {0,2}, ..., {1}, ...
    fn search(d: u32, start: usize, n: usize, adj: &[u32], full: u32) -> Option<u32> {
        if valid(d, adj, full) {
            return Some(d);
        }
        (start..n).find_map(|j| search(d | 1 << j, j + 1, n, adj, full))
    }

    Ok(search(0, 0, n, &adj, full).map(|d| DD2Pair {
        d: (0..n).filter(|&v| d >> v & 1 == 1).collect(),
        d2: (0..n).filter(|&v| d >> v & 1 == 0).collect(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{corona, make, Family::*};

    #[test]
    fn paths_and_cycles() {
        let v = is_dd2(&make(Path(4)).unwrap()).unwrap();
        assert!(!v.is_dd2);
        assert_eq!(v.blocking_witness, Some(1));

        assert!(is_dd2(&make(Path(3)).unwrap()).unwrap().is_dd2);
        assert!(is_dd2(&make(Cycle(7)).unwrap()).unwrap().is_dd2);
    }

    #[test]
    fn single_pendant_corona_is_never_dd2() {
        let g = corona(&make(Cycle(3)).unwrap(), 1).unwrap();
        assert!(!is_dd2(&g).unwrap().is_dd2);
    }

    #[test]
    fn isolated_vertices_are_rejected() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(is_dd2(&g), Err(Error::IsolatedVertex(2)));
        assert!(is_dd2(&Graph::new(0)).is_err());
    }

    #[test]
    fn k2_fails_without_special_casing() {
        // Both vertices are simultaneously leaves and weak supports, so the
        // criterion fails at vertex 0.
        let v = is_dd2(&make(Path(2)).unwrap()).unwrap();
        assert!(!v.is_dd2);
        assert_eq!(v.blocking_witness, Some(0));
    }

    #[test]
    fn constructed_pairs() {
        let pair = construct_dd2_pair(&make(Path(5)).unwrap()).unwrap();
        assert_eq!(pair.d, vec![1, 3]);
        assert_eq!(pair.d2, vec![0, 2, 4]);
        assert!(verify_dd2_pair(&make(Path(5)).unwrap(), &pair));

        let c4 = make(Cycle(4)).unwrap();
        let pair = construct_dd2_pair(&c4).unwrap();
        assert_eq!(pair.d, vec![0, 2]);
        assert_eq!(pair.d2, vec![1, 3]);
        assert!(verify_dd2_pair(&c4, &pair));

        let star = make(Star(4)).unwrap();
        let pair = construct_dd2_pair(&star).unwrap();
        assert_eq!(pair.d, vec![0]);
        assert_eq!(pair.d2, vec![1, 2, 3, 4]);

        assert!(construct_dd2_pair(&make(Path(4)).unwrap()).is_err());
    }

    #[test]
    fn pair_verification_is_definitional() {
        let c4 = make(Cycle(4)).unwrap();
        assert!(verify_dd2_pair(
            &c4,
            &DD2Pair {
                d: vec![0, 2],
                d2: vec![1, 3]
            }
        ));
        let p3 = make(Path(3)).unwrap();
        assert!(verify_dd2_pair(
            &p3,
            &DD2Pair {
                d: vec![1],
                d2: vec![0, 2]
            }
        ));
        // Vertex 1 is outside d2 but has only one d2-neighbor.
        assert!(!verify_dd2_pair(
            &p3,
            &DD2Pair {
                d: vec![0],
                d2: vec![1, 2]
            }
        ));
        // Overlapping sets are invalid.
        assert!(!verify_dd2_pair(
            &c4,
            &DD2Pair {
                d: vec![0, 1],
                d2: vec![1, 3]
            }
        ));
    }

    #[test]
    fn certified_domination_reports() {
        let c4 = make(Cycle(4)).unwrap();
        let r = certified_dom_report(&c4, &[0, 2]).unwrap();
        assert!(r.is_dominating && r.is_certified);
        assert!(r.shadowed.is_empty());

        let r = certified_dom_report(&c4, &[0, 1, 2, 3]).unwrap();
        assert!(r.is_dominating && r.is_certified);
        assert_eq!(r.shadowed, vec![0, 1, 2, 3]);

        let r = certified_dom_report(&make(Path(4)).unwrap(), &[1, 2]).unwrap();
        assert!(r.is_dominating);
        assert!(!r.is_certified);

        assert!(certified_dom_report(&c4, &[9]).is_err());
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(is_dd2_bruteforce(&make(Path(4)).unwrap()).unwrap(), None);

        let found = is_dd2_bruteforce(&make(Cycle(3)).unwrap()).unwrap().unwrap();
        assert_eq!(found.d, vec![0]);
        assert_eq!(found.d2, vec![1, 2]);

        assert_eq!(is_dd2_bruteforce(&make(Path(2)).unwrap()).unwrap(), None);
    }

    #[test]
    fn verdict_serialization() {
        let v = is_dd2(&make(Path(5)).unwrap()).unwrap();
        assert_eq!(v.to_string(), "is_dd2 true\nd 1 3\nd2 0 2 4\n");
        let v = is_dd2(&make(Path(4)).unwrap()).unwrap();
        assert_eq!(v.to_string(), "is_dd2 false\nwitness 1\n");
    }
}
