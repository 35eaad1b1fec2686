//! Structure of clique-graph components whose cliques share few vertices.
//!
//! When `3ω ≥ 2(Δ+1)` and a connected family of maximum cliques has common
//! intersection smaller than `(Δ+1)/3`, the intersection is in fact empty and
//! the family is a chain of cliques in which consecutive members overlap in
//! exactly `ω/2` vertices and all other pairs are disjoint. The chain is
//! either a path (giving `P_k ⊠ K_{ω/2}` inside `∪𝒞`) or closes into a cycle,
//! in which case the whole graph is `C_k ⊠ K_{ω/2}`.

use std::collections::HashMap;

use serde::Serialize;

use crate::cliques::{CliqueFamily, CliqueGraph};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use crate::{meets_third_bound, meets_two_thirds_bound};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// `3·|∩𝒞| ≥ Δ+1`.
    LargeIntersection,
    /// Clique indices `C_1..C_{ℓ-1}` in path order.
    CliquePath(Vec<usize>),
    /// Clique indices in cyclic order; the hole length equals their number.
    HoleCycle(Vec<usize>),
}

impl Classification {
    pub fn name(&self) -> &'static str {
        match self {
            Classification::LargeIntersection => "large_intersection",
            Classification::CliquePath(_) => "clique_path",
            Classification::HoleCycle(_) => "hole_cycle",
        }
    }

    pub fn order(&self) -> Option<&[usize]> {
        match self {
            Classification::LargeIntersection => None,
            Classification::CliquePath(o) | Classification::HoleCycle(o) => Some(o),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentAnalysis {
    pub component: Vec<usize>,
    pub intersection_size: usize,
    pub classification: Classification,
}

/// Classifies component `comp` of `cg`, a clique graph of maximum cliques of
/// `g`.
///
/// Requires `g` connected with `3ω ≥ 2(Δ+1)`. Returns
/// [`Error::InternalContradiction`] if a small-intersection component fails
/// to be a clean chain; on valid input that cannot happen.
pub fn analyze_component(g: &Graph, cg: &CliqueGraph, comp: usize) -> Result<ComponentAnalysis> {
    let family = cg.family();
    let component = cg
        .components()
        .get(comp)
        .ok_or_else(|| {
            Error::InvalidParameter(format!(
                "component {comp} out of range ({} components)",
                cg.components().len()
            ))
        })?
        .clone();
    if family.universe() != g.n() {
        return Err(Error::Precondition(
            "clique graph belongs to a different graph".into(),
        ));
    }
    let omega = family.get(0).len();
    if family.iter().any(|c| c.len() != omega) {
        return Err(Error::Precondition(
            "clique graph mixes cliques of different sizes".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("graph is not connected".into()));
    }
    let delta = g.max_degree();
    if !meets_two_thirds_bound(omega, delta) {
        return Err(Error::Precondition(format!(
            "omega below two-thirds bound: 3·{omega} < 2·({delta}+1)"
        )));
    }

    let common = family.intersection(&component)?;
    let intersection_size = common.len();
    if meets_third_bound(intersection_size, delta) {
        return Ok(ComponentAnalysis {
            component,
            intersection_size,
            classification: Classification::LargeIntersection,
        });
    }

    let contradiction = |what: String| Error::InternalContradiction(what);
    if intersection_size != 0 {
        return Err(contradiction(format!(
            "component {comp} has nonempty intersection of size {intersection_size} below (Δ+1)/3"
        )));
    }
    if !omega.is_multiple_of(2) {
        return Err(contradiction(format!(
            "small-intersection component with odd ω = {omega}"
        )));
    }
    if component.len() < 3 {
        return Err(contradiction(format!(
            "small-intersection component with only {} cliques",
            component.len()
        )));
    }
    if let Some(&i) = component.iter().find(|&&i| cg.degree(i) > 2) {
        return Err(contradiction(format!(
            "clique {i} meets {} others; the clique graph must have maximum degree 2",
            cg.degree(i)
        )));
    }

    let endpoints: Vec<usize> = component
        .iter()
        .copied()
        .filter(|&i| cg.degree(i) == 1)
        .collect();
    let (order, cyclic) = match endpoints.as_slice() {
        [] => (walk(cg, component[0]), true),
        [start, _] => (walk(cg, *start), false),
        _ => {
            return Err(contradiction(format!(
                "component {comp} is neither a path nor a cycle"
            )))
        }
    };
    if order.len() != component.len() {
        return Err(contradiction(format!(
            "walk of component {comp} missed cliques"
        )));
    }
    if cyclic && order.len() < 4 {
        return Err(contradiction(format!(
            "cycle of only {} cliques",
            order.len()
        )));
    }
    check_chain(family, &order, cyclic, omega / 2).map_err(contradiction)?;

    let classification = if cyclic {
        Classification::HoleCycle(order)
    } else {
        Classification::CliquePath(order)
    };
    Ok(ComponentAnalysis {
        component,
        intersection_size,
        classification,
    })
}

// Walks a max-degree-2 component from `start`, stepping to the lower-index
// neighbour first.
fn walk(cg: &CliqueGraph, start: usize) -> Vec<usize> {
    let mut order = vec![start];
    let mut cur = start;
    while let Some(next) = cg
        .neighbors(cur)
        .iter()
        .copied()
        .find(|j| !order.contains(j))
    {
        order.push(next);
        cur = next;
    }
    order
}

/// Checks that consecutive cliques of `order` (cyclically if `cyclic`)
/// overlap in exactly `half` vertices and every other pair is disjoint.
pub fn check_chain(
    family: &CliqueFamily,
    order: &[usize],
    cyclic: bool,
    half: usize,
) -> std::result::Result<(), String> {
    let len = order.len();
    for a in 0..len {
        for b in a + 1..len {
            let consecutive = b == a + 1 || (cyclic && a == 0 && b == len - 1);
            let meet = family.get(order[a]).intersection_len(family.get(order[b]));
            if consecutive && meet != half {
                return Err(format!(
                    "consecutive cliques {} and {} share {meet} vertices, expected {half}",
                    order[a], order[b]
                ));
            }
            if !consecutive && meet != 0 {
                return Err(format!(
                    "non-consecutive cliques {} and {} share {meet} vertices",
                    order[a], order[b]
                ));
            }
        }
    }
    Ok(())
}

/// Certificate that a graph is `C_k ⊠ K_m`: `copy_map[v]` is the cycle
/// position of vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HoleProductWitness {
    pub hole_length: usize,
    pub clique_size: usize,
    pub copy_map: Vec<usize>,
}

impl HoleProductWitness {
    pub fn is_odd(&self) -> bool {
        self.hole_length % 2 == 1
    }

    /// Vertices at each cycle position.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.hole_length];
        for (v, &p) in self.copy_map.iter().enumerate() {
            if p < self.hole_length {
                classes[p].push(v);
            }
        }
        classes
    }

    /// Full check against `g`: `k ≥ 4`, every position holds exactly `m`
    /// vertices, and `u ~ v` iff their positions are equal or cyclically
    /// adjacent.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let (k, m) = (self.hole_length, self.clique_size);
        if k < 4 {
            return Err(format!("hole length {k} is below 4"));
        }
        if m < 1 {
            return Err("clique size must be positive".into());
        }
        if self.copy_map.len() != g.n() || g.n() != k * m {
            return Err(format!(
                "copy map covers {} vertices; graph has {}, expected k·m = {}",
                self.copy_map.len(),
                g.n(),
                k * m
            ));
        }
        if let Some(&p) = self.copy_map.iter().find(|&&p| p >= k) {
            return Err(format!("position {p} out of range"));
        }
        for (p, class) in self.classes().iter().enumerate() {
            if class.len() != m {
                return Err(format!(
                    "position {p} holds {} vertices, expected {m}",
                    class.len()
                ));
            }
        }
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let d = self.copy_map[u].abs_diff(self.copy_map[v]);
                let close = d <= 1 || d == k - 1;
                if close != g.has_edge(u, v) {
                    return Err(format!(
                        "adjacency of {u} and {v} does not match positions {} and {}",
                        self.copy_map[u], self.copy_map[v]
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Decides whether `g` is `C_k ⊠ K_m` for some `k ≥ 4`, `m ≥ 1`.
///
/// In such a product the closed neighbourhoods of two vertices coincide iff
/// they sit in the same copy of `K_m`, so the copies are recovered as
/// closed-twin classes, ordered around the cycle and then checked edge by
/// edge.
pub fn recognize_hole_product(g: &Graph) -> Option<HoleProductWitness> {
    let n = g.n();
    if n < 4 || !g.is_connected() {
        return None;
    }
    let d = g.degree(0);
    if (0..n).any(|v| g.degree(v) != d) || !(d + 1).is_multiple_of(3) {
        return None;
    }
    let m = (d + 1) / 3;
    if !n.is_multiple_of(m) || n / m < 4 {
        return None;
    }
    let k = n / m;

    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut by_nbhd: HashMap<VertexSet, usize> = HashMap::new();
    for (v, slot) in class_of.iter_mut().enumerate() {
        let id = *by_nbhd.entry(g.closed_neighbors(v)).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[id].push(v);
        *slot = id;
    }
    if classes.len() != k || classes.iter().any(|c| c.len() != m) {
        return None;
    }

    // Quotient adjacency; each class must see exactly two others.
    let mut next_to: Vec<Vec<usize>> = Vec::with_capacity(k);
    for class in &classes {
        let mut adj: Vec<usize> = g
            .neighbors(class[0])
            .iter()
            .map(|w| class_of[w])
            .filter(|&c| c != class_of[class[0]])
            .collect();
        adj.sort_unstable();
        adj.dedup();
        if adj.len() != 2 {
            return None;
        }
        next_to.push(adj);
    }

    // Classes are numbered by smallest member, so class 0 holds vertex 0 and
    // the lower-numbered neighbour class comes first.
    let mut position = vec![usize::MAX; k];
    let (mut prev, mut cur) = (usize::MAX, 0);
    for p in 0..k {
        if position[cur] != usize::MAX {
            return None;
        }
        position[cur] = p;
        let next = if next_to[cur][0] != prev {
            next_to[cur][0]
        } else {
            next_to[cur][1]
        };
        prev = cur;
        cur = next;
    }
    if cur != 0 {
        return None;
    }

    let witness = HoleProductWitness {
        hole_length: k,
        clique_size: m,
        copy_map: (0..n).map(|v| position[class_of[v]]).collect(),
    };
    witness.validate(g).ok().map(|_| witness)
}
