//! Simple undirected graphs on dense labels with bitset adjacency rows.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Largest vertex count accepted by [`Graph`].
pub const MAX_VERTICES: usize = 1024;

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency is symmetric and irreflexive. Values are immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(n));
        }
        Ok(Graph {
            n,
            rows: vec![VertexSet::new(n); n],
        })
    }

    pub(crate) fn link(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub(crate) fn from_rows(rows: Vec<VertexSet>) -> Graph {
        let n = rows.len();
        debug_assert!(rows.iter().enumerate().all(|(v, r)| !r.contains(v)));
        Graph { n, rows }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    /// `N[v]`: the neighbourhood of `v` together with `v`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.rows[v].clone();
        s.insert(v);
        s
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Δ(G). Zero for the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.rows[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut rest = s.clone();
            rest.remove(v);
            rest.is_subset(&self.rows[v])
        })
    }

    pub fn is_stable(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.rows[v].is_disjoint(s))
    }

    /// True for the empty graph and for every graph with one component.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0).len() == self.n
    }

    fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::new(self.n);
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in self.rows[u].difference(&seen).iter() {
                seen.insert(v);
                queue.push_back(v);
            }
        }
        seen
    }

    /// Connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut unseen = VertexSet::full(self.n);
        let mut out = Vec::new();
        while let Some(v) = unseen.first() {
            let comp = self.component_of(v);
            unseen.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Induced subgraph on `s`, relabelled `0..|s|` in ascending order of the
    /// original labels. The returned map sends new labels to old ones.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        let map: Vec<usize> = s.iter().collect();
        for &v in &map {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
        }
        let mut position = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            position[v] = i;
        }
        let k = map.len();
        let rows = map
            .iter()
            .map(|&v| {
                VertexSet::from_members(
                    k,
                    self.rows[v]
                        .iter()
                        .filter(|&w| position[w] != usize::MAX)
                        .map(|w| position[w]),
                )
            })
            .collect();
        Ok((Graph::from_rows(rows), map))
    }

    /// Convenience: induced subgraph on a list of vertices.
    pub fn induced_on(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        if let Some(&v) = vertices.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        self.induced_subgraph(&VertexSet::from_members(self.n, vertices.iter().copied()))
    }

    /// Lifts a set over a subgraph's labels back through its label map.
    pub fn lift_set(&self, s: &VertexSet, map: &[usize]) -> VertexSet {
        VertexSet::from_members(self.n, s.iter().map(|v| map[v]))
    }
}

/// `C_k`, vertices numbered along the cycle.
pub fn cycle_graph(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle length must be at least 3, got {k}"
        )));
    }
    let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    Graph::new(k, &edges)
}

/// `P_l`, the path on `l` vertices.
pub fn path_graph(l: usize) -> Result<Graph> {
    if l < 1 {
        return Err(Error::InvalidParameter(
            "path needs at least 1 vertex".into(),
        ));
    }
    let edges: Vec<_> = (1..l).map(|i| (i - 1, i)).collect();
    Graph::new(l, &edges)
}

/// `K_m`.
pub fn complete_graph(m: usize) -> Result<Graph> {
    if m < 1 {
        return Err(Error::InvalidParameter(
            "complete graph needs at least 1 vertex".into(),
        ));
    }
    let mut g = Graph::empty(m)?;
    for u in 0..m {
        for v in u + 1..m {
            g.link(u, v);
        }
    }
    Ok(g)
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
pub fn petersen_graph() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, &edges).expect("static edge list")
}

/// Strong product `G ⊠ H`. Vertex `(u, a)` is numbered `u·|H| + a`, so each
/// copy of `H` occupies a contiguous block.
pub fn strong_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.n(), h.n());
    let n = ng
        .checked_mul(nh)
        .filter(|&n| n <= MAX_VERTICES)
        .ok_or(Error::TooLarge(ng.saturating_mul(nh)))?;
    let mut out = Graph::empty(n)?;
    for u in 0..ng {
        let g_close = g.closed_neighbors(u);
        for a in 0..nh {
            let h_close = h.closed_neighbors(a);
            let x = u * nh + a;
            for v in g_close.iter() {
                for b in h_close.iter() {
                    let y = v * nh + b;
                    if y > x {
                        out.link(x, y);
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_rejects_bad_edges() {
        assert!(matches!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(matches!(Graph::new(3, &[(1, 1)]), Err(Error::SelfLoop(1))));
        assert!(matches!(
            Graph::empty(MAX_VERTICES + 1),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn build_deduplicates() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn empty_graph() {
        let g = Graph::new(0, &[]).unwrap();
        assert_eq!(g.n(), 0);
        assert_eq!(g.max_degree(), 0);
        assert!(g.is_connected());
        assert!(g.components().is_empty());
    }

    #[test]
    fn triangle_degrees() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.degrees(), vec![2, 2, 2]);
        assert_eq!(g, complete_graph(3).unwrap());
    }

    #[test]
    fn constructors() {
        assert_eq!(cycle_graph(5).unwrap().edge_count(), 5);
        assert_eq!(cycle_graph(5).unwrap().max_degree(), 2);
        assert_eq!(path_graph(4).unwrap().edge_count(), 3);
        assert_eq!(path_graph(1).unwrap().edge_count(), 0);
        assert_eq!(complete_graph(3).unwrap().edge_count(), 3);
        assert!(cycle_graph(2).is_err());
        assert!(path_graph(0).is_err());
        assert!(complete_graph(0).is_err());
    }

    #[test]
    fn petersen_is_cubic() {
        let p = petersen_graph();
        assert_eq!(p.edge_count(), 15);
        assert!(p.degrees().iter().all(|&d| d == 3));
        assert!(p.is_connected());
    }

    #[test]
    fn connectivity_and_components() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!g.is_connected());
        let comps: Vec<_> = g.components().iter().map(VertexSet::to_vec).collect();
        assert_eq!(comps, vec![vec![0, 1, 2], vec![3, 4, 5]]);
    }

    #[test]
    fn induced_subgraph_relabels() {
        let k4 = complete_graph(4).unwrap();
        let (sub, map) = k4.induced_on(&[0, 1]).unwrap();
        assert_eq!(sub, complete_graph(2).unwrap());
        assert_eq!(map, vec![0, 1]);

        let c5 = cycle_graph(5).unwrap();
        let (sub, map) = c5.induced_on(&[4, 0, 2]).unwrap();
        assert_eq!(map, vec![0, 2, 4]);
        assert_eq!(sub.edges(), vec![(0, 2)]);
        assert!(c5.induced_on(&[5]).is_err());
    }

    #[test]
    fn c5_times_k3() {
        let g = strong_product(&cycle_graph(5).unwrap(), &complete_graph(3).unwrap()).unwrap();
        assert_eq!(g.n(), 15);
        assert!(g.degrees().iter().all(|&d| d == 8));
        assert_eq!(g.max_degree(), 8);
        // Copies are contiguous blocks.
        assert!(g.is_clique(&VertexSet::from_members(15, 3..9)));
        assert!(!g.has_edge(0, 6));
    }

    #[test]
    fn product_with_k1_is_identity() {
        let p = petersen_graph();
        assert_eq!(strong_product(&complete_graph(1).unwrap(), &p).unwrap(), p);
        assert_eq!(strong_product(&p, &complete_graph(1).unwrap()).unwrap(), p);
    }

    #[test]
    fn p4_times_k2_degrees() {
        let g = strong_product(&path_graph(4).unwrap(), &complete_graph(2).unwrap()).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.max_degree(), 5);
        assert_eq!(g.degrees(), vec![3, 3, 5, 5, 5, 5, 3, 3]);
    }

    #[test]
    fn stable_and_clique_checks() {
        let c5 = cycle_graph(5).unwrap();
        assert!(c5.is_stable(&VertexSet::from_members(5, [0, 2])));
        assert!(!c5.is_stable(&VertexSet::from_members(5, [0, 1])));
        assert!(c5.is_clique(&VertexSet::from_members(5, [3, 4])));
        assert!(c5.is_clique(&VertexSet::new(5)));
    }
}
