//! Maximal and maximum clique enumeration, clique graphs, and Hajnal's
//! set-collection inequality.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Default cap on the number of cliques an enumeration may produce.
pub const DEFAULT_CLIQUE_CAP: usize = 1_000_000;

/// An ordered, duplicate-free list of cliques of one host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueFamily {
    n: usize,
    cliques: Vec<VertexSet>,
}

/// Canonical family order: size descending, then lexicographic members.
pub fn family_order(a: &VertexSet, b: &VertexSet) -> Ordering {
    b.len().cmp(&a.len()).then_with(|| a.cmp_lex(b))
}

impl CliqueFamily {
    /// Checks that every set is a clique of `g` and that no set repeats.
    /// The given order is kept.
    pub fn new(g: &Graph, cliques: Vec<VertexSet>) -> Result<CliqueFamily> {
        for (i, c) in cliques.iter().enumerate() {
            if c.universe() != g.n() {
                return Err(Error::InvalidParameter(format!(
                    "clique {i} is over {} vertices, graph has {}",
                    c.universe(),
                    g.n()
                )));
            }
            if !g.is_clique(c) {
                return Err(Error::InvalidParameter(format!(
                    "set {i} {c:?} is not a clique"
                )));
            }
            if cliques[..i].contains(c) {
                return Err(Error::InvalidParameter(format!(
                    "set {i} {c:?} is repeated"
                )));
            }
        }
        Ok(CliqueFamily { n: g.n(), cliques })
    }

    pub(crate) fn from_trusted(n: usize, cliques: Vec<VertexSet>) -> CliqueFamily {
        CliqueFamily { n, cliques }
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    pub fn get(&self, i: usize) -> &VertexSet {
        &self.cliques[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexSet> {
        self.cliques.iter()
    }

    /// Sub-family with the given indices, in the given order.
    pub fn select(&self, indices: &[usize]) -> Result<CliqueFamily> {
        self.check_indices(indices)?;
        Ok(CliqueFamily {
            n: self.n,
            cliques: indices.iter().map(|&i| self.cliques[i].clone()).collect(),
        })
    }

    fn check_indices(&self, indices: &[usize]) -> Result<()> {
        if indices.is_empty() {
            return Err(Error::InvalidParameter("empty clique index set".into()));
        }
        if let Some(&i) = indices.iter().find(|&&i| i >= self.cliques.len()) {
            return Err(Error::InvalidParameter(format!(
                "clique index {i} out of range for a family of {}",
                self.cliques.len()
            )));
        }
        Ok(())
    }

    /// `∩` of the selected cliques.
    pub fn intersection(&self, indices: &[usize]) -> Result<VertexSet> {
        self.check_indices(indices)?;
        let mut acc = self.cliques[indices[0]].clone();
        for &i in &indices[1..] {
            acc.intersect_with(&self.cliques[i]);
        }
        Ok(acc)
    }

    /// `∪` of the selected cliques.
    pub fn union(&self, indices: &[usize]) -> Result<VertexSet> {
        self.check_indices(indices)?;
        let mut acc = self.cliques[indices[0]].clone();
        for &i in &indices[1..] {
            acc.union_with(&self.cliques[i]);
        }
        Ok(acc)
    }

    pub fn all_indices(&self) -> Vec<usize> {
        (0..self.cliques.len()).collect()
    }

    /// Union of every member; empty for an empty family.
    pub fn cover(&self) -> VertexSet {
        let mut acc = VertexSet::new(self.n);
        for c in &self.cliques {
            acc.union_with(c);
        }
        acc
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.cliques.iter().map(VertexSet::to_vec).collect()
    }
}

struct Enumerator<'g> {
    g: &'g Graph,
    cap: usize,
    current: Vec<usize>,
    out: Vec<VertexSet>,
}

impl Enumerator<'_> {
    // Bron–Kerbosch with pivoting. The pivot maximises |P ∩ N(u)| over
    // P ∪ X, ties to the lowest index.
    fn expand(&mut self, mut p: VertexSet, mut x: VertexSet) -> Result<()> {
        if p.is_empty() {
            if x.is_empty() {
                if self.out.len() >= self.cap {
                    return Err(Error::CliqueCapExceeded(self.cap));
                }
                self.out.push(VertexSet::from_members(
                    self.g.n(),
                    self.current.iter().copied(),
                ));
            }
            return Ok(());
        }
        let pivot = p
            .union(&x)
            .iter()
            .map(|u| (p.intersection_len(self.g.neighbors(u)), u))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
            .map(|(_, u)| u)
            .expect("P is nonempty");
        let branch = p.difference(self.g.neighbors(pivot));
        for v in branch.iter() {
            let nv = self.g.neighbors(v);
            self.current.push(v);
            self.expand(p.intersection(nv), x.intersection(nv))?;
            self.current.pop();
            p.remove(v);
            x.insert(v);
        }
        Ok(())
    }
}

/// All inclusion-maximal cliques of `g`, in canonical family order.
pub fn enumerate_maximal_cliques(g: &Graph) -> Result<CliqueFamily> {
    enumerate_maximal_cliques_capped(g, DEFAULT_CLIQUE_CAP)
}

pub fn enumerate_maximal_cliques_capped(g: &Graph, cap: usize) -> Result<CliqueFamily> {
    let mut e = Enumerator {
        g,
        cap,
        current: Vec::new(),
        out: Vec::new(),
    };
    if g.n() > 0 {
        e.expand(VertexSet::full(g.n()), VertexSet::new(g.n()))?;
    }
    let mut cliques = e.out;
    cliques.sort_by(family_order);
    Ok(CliqueFamily::from_trusted(g.n(), cliques))
}

/// `ω(g)` together with every clique of that size.
pub fn maximum_cliques(g: &Graph) -> Result<(usize, CliqueFamily)> {
    maximum_cliques_capped(g, DEFAULT_CLIQUE_CAP)
}

pub fn maximum_cliques_capped(g: &Graph, cap: usize) -> Result<(usize, CliqueFamily)> {
    if g.n() == 0 {
        return Err(Error::UndefinedOmega);
    }
    let all = enumerate_maximal_cliques_capped(g, cap)?;
    let omega = all.cliques[0].len();
    let cliques = all
        .cliques
        .into_iter()
        .take_while(|c| c.len() == omega)
        .collect();
    Ok((omega, CliqueFamily::from_trusted(g.n(), cliques)))
}

/// `ω(g)`.
pub fn clique_number(g: &Graph) -> Result<usize> {
    maximum_cliques(g).map(|(omega, _)| omega)
}

/// The intersection graph of a clique family and its components.
#[derive(Clone, Debug)]
pub struct CliqueGraph {
    family: CliqueFamily,
    adjacency: Vec<Vec<usize>>,
    components: Vec<Vec<usize>>,
}

impl CliqueGraph {
    pub fn family(&self) -> &CliqueFamily {
        &self.family
    }

    /// Clique indices adjacent to `i`, ascending.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].binary_search(&j).is_ok()
    }

    /// Components as ascending index lists, ordered by smallest index.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }
}

/// Builds `G(𝒞)`: cliques are adjacent iff they share a vertex.
pub fn clique_graph(family: &CliqueFamily) -> Result<CliqueGraph> {
    if family.is_empty() {
        return Err(Error::Precondition(
            "clique graph of an empty family".into(),
        ));
    }
    let k = family.len();
    let mut adjacency = vec![Vec::new(); k];
    for i in 0..k {
        for j in i + 1..k {
            if family.cliques[i].intersects(&family.cliques[j]) {
                adjacency[i].push(j);
                adjacency[j].push(i);
            }
        }
    }
    adjacency.iter_mut().for_each(|a| a.sort_unstable());

    let mut label = vec![usize::MAX; k];
    let mut components = Vec::new();
    for start in 0..k {
        if label[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut comp = vec![start];
        label[start] = id;
        let mut head = 0;
        while head < comp.len() {
            let u = comp[head];
            head += 1;
            for &v in &adjacency[u] {
                if label[v] == usize::MAX {
                    label[v] = id;
                    comp.push(v);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    Ok(CliqueGraph {
        family: family.clone(),
        adjacency,
        components,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HajnalReport {
    /// `|∩𝒞| + |∪𝒞|`
    pub lhs: usize,
    /// `2ω`
    pub rhs: usize,
    pub holds: bool,
}

/// Evaluates `|∩𝒞| + |∪𝒞| ≥ 2ω(g)` for a family of maximum cliques.
pub fn hajnal_check(g: &Graph, family: &CliqueFamily) -> Result<HajnalReport> {
    let omega = clique_number(g)?;
    hajnal_check_with_omega(g, family, omega)
}

/// As [`hajnal_check`] with `ω(g)` supplied by the caller.
pub fn hajnal_check_with_omega(
    g: &Graph,
    family: &CliqueFamily,
    omega: usize,
) -> Result<HajnalReport> {
    if family.is_empty() {
        return Err(Error::Precondition(
            "Hajnal check on an empty family".into(),
        ));
    }
    if family.universe() != g.n() {
        return Err(Error::Precondition(
            "family belongs to a different graph".into(),
        ));
    }
    for c in family.iter() {
        if c.len() != omega || !g.is_clique(c) {
            return Err(Error::Precondition(format!(
                "{c:?} is not a maximum clique (ω = {omega})"
            )));
        }
    }
    let all = family.all_indices();
    let lhs = family.intersection(&all)?.len() + family.union(&all)?.len();
    let rhs = 2 * omega;
    Ok(HajnalReport {
        lhs,
        rhs,
        holds: lhs >= rhs,
    })
}
