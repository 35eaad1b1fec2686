//! Constructive search for a stable set meeting every maximum clique.
//!
//! The solver works on graphs with `3ω ≥ 2(Δ+1)` and splits on the clique
//! graph of the maximum cliques:
//!
//! * every component has a large common core (`3|∩𝒞_i| ≥ Δ+1`): the cores
//!   form a clique partition meeting the transversal degree bound with
//!   `k = (Δ+1)/3`, and an independent transversal of it hits everything;
//! * some component closes into a cycle: the graph is `C_k ⊠ K_{ω/2}`; odd
//!   `k` is the exception, even `k` is hit by alternate copies;
//! * some component is a clique path `C_1..C_{ℓ-1}`: vertices outside every
//!   maximum clique are dropped, otherwise the path interior is deleted,
//!   its two ends are merged into one clique, the smaller graph is solved,
//!   and the answer is lifted back by a parity rule on `ℓ`.
//!
//! Every recursive call is on a graph with fewer vertices. Every returned
//! stable set is re-checked against a fresh maximum-clique enumeration.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::cliques::{clique_graph, maximum_cliques_capped, DEFAULT_CLIQUE_CAP};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::meets_two_thirds_bound;
use crate::structure::{
    analyze_component, recognize_hole_product, Classification, HoleProductWitness,
};
use crate::transversal::{PartitionedInstance, TransversalSolver, DEFAULT_STEP_BUDGET};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HittingCertificate {
    /// A stable set meeting every maximum clique.
    StableSetHit(VertexSet),
    /// The vertices `component` induce `C_k ⊠ K_m` with `k` odd and
    /// `2m = ω`. `witness.copy_map` is indexed by position in `component`.
    OddHoleProduct {
        witness: HoleProductWitness,
        component: Vec<usize>,
    },
}

enum Outcome {
    Hit(VertexSet),
    OddHole(HoleProductWitness, Vec<usize>),
}

#[derive(Clone, Debug)]
pub struct Solver {
    pub clique_cap: usize,
    pub step_budget: u64,
}

impl Default for Solver {
    fn default() -> Self {
        Solver {
            clique_cap: DEFAULT_CLIQUE_CAP,
            step_budget: DEFAULT_STEP_BUDGET,
        }
    }
}

/// Runs [`Solver::hitting_stable_set`] with default limits.
pub fn hitting_stable_set(g: &Graph) -> Result<HittingCertificate> {
    Solver::default().hitting_stable_set(g)
}

/// Whether the solver's hypothesis holds: every component whose clique
/// number equals `ω(g)` satisfies `3ω ≥ 2(Δ_c+1)`. For connected graphs this
/// is exactly `3ω ≥ 2(Δ+1)`.
pub fn two_thirds_bound_holds(g: &Graph, clique_cap: usize) -> Result<bool> {
    let (omega, _) = maximum_cliques_capped(g, clique_cap)?;
    if meets_two_thirds_bound(omega, g.max_degree()) {
        return Ok(true);
    }
    for comp in g.components() {
        let (sub, _) = g.induced_subgraph(&comp)?;
        let (omega_c, _) = maximum_cliques_capped(&sub, clique_cap)?;
        if omega_c == omega && !meets_two_thirds_bound(omega, sub.max_degree()) {
            return Ok(false);
        }
    }
    Ok(true)
}

impl Solver {
    /// A stable set hitting every maximum clique of `g`, or a certificate
    /// that `g` (or one of its components of full clique number) is an odd
    /// hole times a clique.
    pub fn hitting_stable_set(&self, g: &Graph) -> Result<HittingCertificate> {
        if g.n() == 0 {
            return Err(Error::Precondition("graph has no vertices".into()));
        }
        if !two_thirds_bound_holds(g, self.clique_cap)? {
            return Err(Error::Precondition("omega below two-thirds bound".into()));
        }
        let (omega, _) = maximum_cliques_capped(g, self.clique_cap)?;
        match self.solve_any(g, omega)? {
            Outcome::Hit(s) => {
                if let Some(defect) = hitting_set_defect(g, &s, self.clique_cap)? {
                    return Err(Error::InternalContradiction(format!(
                        "constructed set {s:?} fails verification: {defect}"
                    )));
                }
                Ok(HittingCertificate::StableSetHit(s))
            }
            Outcome::OddHole(witness, component) => {
                let (sub, _) = g.induced_on(&component)?;
                witness
                    .validate(&sub)
                    .map_err(Error::InternalContradiction)?;
                if !witness.is_odd() || 2 * witness.clique_size != omega {
                    return Err(Error::InternalContradiction(
                        "hole-product witness is not an odd hole of full clique number".into(),
                    ));
                }
                Ok(HittingCertificate::OddHoleProduct { witness, component })
            }
        }
    }

    // Solves each component whose clique number is `omega`; components with
    // smaller cliques hold no maximum clique.
    fn solve_any(&self, g: &Graph, omega: usize) -> Result<Outcome> {
        let comps = g.components();
        if comps.len() == 1 {
            return self.solve_connected(g, omega);
        }
        let mut hit = VertexSet::new(g.n());
        for comp in comps {
            let (sub, map) = g.induced_subgraph(&comp)?;
            let (omega_c, _) = maximum_cliques_capped(&sub, self.clique_cap)?;
            if omega_c < omega {
                continue;
            }
            match self.solve_connected(&sub, omega)? {
                Outcome::Hit(s) => hit.union_with(&g.lift_set(&s, &map)),
                Outcome::OddHole(w, inner) => {
                    return Ok(Outcome::OddHole(w, inner.iter().map(|&v| map[v]).collect()))
                }
            }
        }
        Ok(Outcome::Hit(hit))
    }

    fn solve_connected(&self, g: &Graph, omega: usize) -> Result<Outcome> {
        let (omega_g, family) = maximum_cliques_capped(g, self.clique_cap)?;
        if omega_g != omega {
            return Err(Error::InternalContradiction(format!(
                "subproblem has ω = {omega_g}, expected {omega}"
            )));
        }
        let delta = g.max_degree();
        if !meets_two_thirds_bound(omega, delta) {
            return Err(Error::InternalContradiction(format!(
                "subproblem violates 3ω ≥ 2(Δ+1) with ω = {omega}, Δ = {delta}"
            )));
        }
        let cg = clique_graph(&family)?;
        let analyses = (0..cg.components().len())
            .map(|c| analyze_component(g, &cg, c))
            .collect::<Result<Vec<_>>>()?;

        if analyses
            .iter()
            .any(|a| matches!(a.classification, Classification::HoleCycle(_)))
        {
            let witness = recognize_hole_product(g).ok_or_else(|| {
                Error::InternalContradiction(
                    "clique graph has a hole cycle but the graph is not C_k ⊠ K_m".into(),
                )
            })?;
            if witness.is_odd() {
                return Ok(Outcome::OddHole(witness, (0..g.n()).collect()));
            }
            // Even hole: one vertex from every even position.
            let s = VertexSet::from_members(
                g.n(),
                witness.classes().iter().step_by(2).map(|class| class[0]),
            );
            return Ok(Outcome::Hit(s));
        }

        if let Some(path) = analyses.iter().find_map(|a| match &a.classification {
            Classification::CliquePath(order) => Some(order),
            _ => None,
        }) {
            let cover = family.cover();
            if cover.len() < g.n() {
                let (sub, map) = g.induced_subgraph(&cover)?;
                return match self.solve_any(&sub, omega)? {
                    Outcome::Hit(s) => Ok(Outcome::Hit(g.lift_set(&s, &map))),
                    Outcome::OddHole(..) => Err(Error::InternalContradiction(
                        "odd hole product appeared after deleting uncovered vertices".into(),
                    )),
                };
            }
            let cliques: Vec<VertexSet> = path.iter().map(|&i| family.get(i).clone()).collect();
            let reduction = reduce_clique_path_capped(g, &cliques, self.clique_cap)?;
            let s_reduced = match self.solve_any(&reduction.graph, omega)? {
                Outcome::Hit(s) => s,
                Outcome::OddHole(..) => {
                    return Err(Error::InternalContradiction(
                        "reduced graph turned into an odd hole product".into(),
                    ))
                }
            };
            let s = g.lift_set(&s_reduced, &reduction.label_map);
            return lift_solution_capped(g, &cliques, &s, self.clique_cap).map(Outcome::Hit);
        }

        // Every component has a large core.
        let parts = analyses
            .iter()
            .map(|a| family.intersection(&a.component))
            .collect::<Result<Vec<_>>>()?;
        let inst = PartitionedInstance::new(g.clone(), parts, Ratio::new(delta as i64 + 1, 3))?;
        let solver = TransversalSolver {
            step_budget: self.step_budget,
            seed: 0,
        };
        match solver.solve(&inst) {
            Ok(s) => Ok(Outcome::Hit(s)),
            Err(Error::Precondition(why)) => Err(Error::InternalContradiction(format!(
                "cores of the clique-graph components violate the transversal bound: {why}"
            ))),
            Err(e) => Err(e),
        }
    }
}

/// Why `s` is not a stable set hitting every maximum clique of `g`, or
/// `None` if it is. Uses a fresh clique enumeration.
pub fn hitting_set_defect(g: &Graph, s: &VertexSet, clique_cap: usize) -> Result<Option<String>> {
    if s.universe() != g.n() {
        return Ok(Some(format!(
            "set is over {} vertices, graph has {}",
            s.universe(),
            g.n()
        )));
    }
    if let Some(v) = s.iter().find(|&v| g.neighbors(v).intersects(s)) {
        return Ok(Some(format!("vertex {v} has a neighbour in the set")));
    }
    if g.n() == 0 {
        return Ok(None);
    }
    let (_, family) = maximum_cliques_capped(g, clique_cap)?;
    Ok(family
        .iter()
        .find(|c| c.is_disjoint(s))
        .map(|c| format!("maximum clique {:?} is missed", c)))
}

/// Result of collapsing a clique path.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub graph: Graph,
    /// `C_1 ∖ C_2`, in labels of `graph`.
    pub x1: VertexSet,
    /// `C_{ℓ-1} ∖ C_{ℓ-2}`, in labels of `graph`.
    pub x2: VertexSet,
    /// `label_map[v]` is the original label of reduced vertex `v`.
    pub label_map: Vec<usize>,
}

fn check_path(g: &Graph, path: &[VertexSet], min_len: usize) -> Result<()> {
    let bad = |why: String| {
        Err(Error::InvalidParameter(format!(
            "malformed clique path: {why}"
        )))
    };
    if path.len() < min_len {
        return bad(format!(
            "needs at least {min_len} cliques, got {}",
            path.len()
        ));
    }
    let size = path[0].len();
    for (i, c) in path.iter().enumerate() {
        if c.universe() != g.n() {
            return bad(format!("clique {i} is over a different vertex range"));
        }
        if c.len() != size || !g.is_clique(c) {
            return bad(format!("member {i} is not a clique of size {size}"));
        }
    }
    for i in 0..path.len() {
        for j in i + 1..path.len() {
            let meets = path[i].intersects(&path[j]);
            if j == i + 1 && !meets {
                return bad(format!("consecutive cliques {i} and {j} are disjoint"));
            }
            if j > i + 1 && meets {
                return bad(format!(
                    "cliques {i} and {j} overlap but are not consecutive"
                ));
            }
            if j == i + 1 && path[i] == path[j] {
                return bad(format!("cliques {i} and {j} coincide"));
            }
        }
    }
    Ok(())
}

/// Deletes `∪(C_i ∩ C_{i+1})` and joins `X_1 = C_1 ∖ C_2` and
/// `X_2 = C_{ℓ-1} ∖ C_{ℓ-2}` into one clique.
///
/// Expects a clique path from [`analyze_component`] in a graph where every
/// vertex lies in a maximum clique. Checks that the clique number is
/// unchanged and the maximum degree does not grow.
pub fn reduce_clique_path(g: &Graph, path: &[VertexSet]) -> Result<Reduction> {
    reduce_clique_path_capped(g, path, DEFAULT_CLIQUE_CAP)
}

pub fn reduce_clique_path_capped(
    g: &Graph,
    path: &[VertexSet],
    clique_cap: usize,
) -> Result<Reduction> {
    check_path(g, path, 2)?;
    let (omega, _) = maximum_cliques_capped(g, clique_cap)?;
    if path[0].len() != omega {
        return Err(Error::InvalidParameter(format!(
            "malformed clique path: cliques have size {}, not ω = {omega}",
            path[0].len()
        )));
    }
    let last = path.len() - 1;
    let mut interior = VertexSet::new(g.n());
    for pair in path.windows(2) {
        interior.union_with(&pair[0].intersection(&pair[1]));
    }
    let x1 = path[0].difference(&path[1]);
    let x2 = path[last].difference(&path[last - 1]);
    let keep = interior.complement();
    let (mut reduced, label_map) = g.induced_subgraph(&keep)?;

    let mut position = vec![usize::MAX; g.n()];
    for (i, &v) in label_map.iter().enumerate() {
        position[v] = i;
    }
    let relabel =
        |s: &VertexSet| VertexSet::from_members(label_map.len(), s.iter().map(|v| position[v]));
    let (x1, x2) = (relabel(&x1), relabel(&x2));
    let ends: Vec<usize> = x1.union(&x2).to_vec();
    for (a, &u) in ends.iter().enumerate() {
        for &v in &ends[a + 1..] {
            reduced.link(u, v);
        }
    }

    let omega_reduced = if reduced.n() == 0 {
        0
    } else {
        maximum_cliques_capped(&reduced, clique_cap)?.0
    };
    if omega_reduced != omega {
        return Err(Error::InternalContradiction(format!(
            "reduction changed ω from {omega} to {omega_reduced}"
        )));
    }
    if reduced.max_degree() > g.max_degree() {
        return Err(Error::InternalContradiction(format!(
            "reduction raised Δ from {} to {}",
            g.max_degree(),
            reduced.max_degree()
        )));
    }
    Ok(Reduction {
        graph: reduced,
        x1,
        x2,
        label_map,
    })
}

/// Extends a stable set `s` of `g` that meets `X_1 ∪ X_2` exactly once, and
/// meets every maximum clique off the path, to one meeting every maximum
/// clique of `g`.
///
/// With `ℓ - 1` cliques on the path: for even `ℓ`, one vertex of every
/// `C_{2j} ∩ C_{2j+1}` is added; for odd `ℓ`, the end vertex is dropped and
/// one vertex of every `C_{2j-1} ∩ C_{2j}` is added, counting from the end
/// that `s` touches.
pub fn lift_solution(g: &Graph, path: &[VertexSet], s: &VertexSet) -> Result<VertexSet> {
    lift_solution_capped(g, path, s, DEFAULT_CLIQUE_CAP)
}

pub fn lift_solution_capped(
    g: &Graph,
    path: &[VertexSet],
    s: &VertexSet,
    clique_cap: usize,
) -> Result<VertexSet> {
    check_path(g, path, 1)?;
    if s.universe() != g.n() {
        return Err(Error::InvalidParameter(
            "set is over a different vertex range".into(),
        ));
    }
    if path.len() == 1 {
        return Ok(s.clone());
    }
    let last = path.len() - 1;
    let x1 = path[0].difference(&path[1]);
    let x2 = path[last].difference(&path[last - 1]);
    let ends = x1.union(&x2);
    if s.intersection_len(&ends) != 1 {
        return Err(Error::Precondition(format!(
            "set meets X1 ∪ X2 in {} vertices, expected exactly 1",
            s.intersection_len(&ends)
        )));
    }
    let mut oriented: Vec<&VertexSet> = path.iter().collect();
    if !x1.intersects(s) {
        oriented.reverse();
    }
    let end_vertex = s.intersection(&ends).first().expect("one end vertex");
    let overlaps: Vec<VertexSet> = oriented
        .windows(2)
        .map(|pair| pair[0].intersection(pair[1]))
        .collect();

    // ℓ = number of cliques + 1. Overlap `j` (0-based) is C_{j+1} ∩ C_{j+2}.
    let ell = path.len() + 1;
    let mut lifted = s.clone();
    let first = if ell.is_multiple_of(2) {
        1
    } else {
        lifted.remove(end_vertex);
        0
    };
    for overlap in overlaps.iter().skip(first).step_by(2) {
        let pick = overlap
            .iter()
            .find(|&w| !g.neighbors(w).intersects(&lifted))
            .ok_or_else(|| {
                Error::InternalContradiction(format!(
                    "every vertex of overlap {overlap:?} is adjacent to the lifted set"
                ))
            })?;
        lifted.insert(pick);
    }

    if let Some(defect) = hitting_set_defect(g, &lifted, clique_cap)? {
        return Err(Error::InternalContradiction(format!(
            "lifted set {lifted:?} fails verification: {defect}"
        )));
    }
    Ok(lifted)
}

/// Machine-readable certificate, as read and written by the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum CertificateDoc {
    StableSet {
        vertices: Vec<usize>,
    },
    OddHoleProduct {
        k: usize,
        m: usize,
        copy_map: Vec<usize>,
        /// Original labels of the product's vertices when it is not the
        /// whole graph; `copy_map` is then indexed by position in this list.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        component: Option<Vec<usize>>,
    },
    Unsupported {
        reason: String,
    },
}

impl HittingCertificate {
    pub fn to_doc(&self, n: usize) -> CertificateDoc {
        match self {
            HittingCertificate::StableSetHit(s) => CertificateDoc::StableSet {
                vertices: s.to_vec(),
            },
            HittingCertificate::OddHoleProduct { witness, component } => {
                CertificateDoc::OddHoleProduct {
                    k: witness.hole_length,
                    m: witness.clique_size,
                    copy_map: witness.copy_map.clone(),
                    component: (component.len() != n
                        || component.iter().enumerate().any(|(i, &v)| i != v))
                    .then(|| component.clone()),
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub valid: bool,
    pub reason: String,
}

impl Verdict {
    fn ok(reason: impl Into<String>) -> Self {
        Verdict {
            valid: true,
            reason: reason.into(),
        }
    }

    fn fail(reason: impl Into<String>) -> Self {
        Verdict {
            valid: false,
            reason: reason.into(),
        }
    }
}

/// Independently re-checks a certificate against `g`.
pub fn verify_certificate(g: &Graph, doc: &CertificateDoc, clique_cap: usize) -> Result<Verdict> {
    match doc {
        CertificateDoc::StableSet { vertices } => {
            if let Some(&v) = vertices.iter().find(|&&v| v >= g.n()) {
                return Ok(Verdict::fail(format!("vertex {v} out of range")));
            }
            let s = VertexSet::from_members(g.n(), vertices.iter().copied());
            if s.len() != vertices.len() {
                return Ok(Verdict::fail("repeated vertex"));
            }
            if g.n() == 0 {
                return Ok(Verdict::fail("graph has no vertices"));
            }
            Ok(match hitting_set_defect(g, &s, clique_cap)? {
                None => Verdict::ok("stable set hits every maximum clique"),
                Some(defect) => Verdict::fail(defect),
            })
        }
        CertificateDoc::OddHoleProduct {
            k,
            m,
            copy_map,
            component,
        } => {
            if g.n() == 0 {
                return Ok(Verdict::fail("graph has no vertices"));
            }
            let vertices: Vec<usize> = component.clone().unwrap_or_else(|| (0..g.n()).collect());
            if vertices.iter().any(|&v| v >= g.n()) {
                return Ok(Verdict::fail("component vertex out of range"));
            }
            let (sub, map) = g.induced_on(&vertices)?;
            if map.len() != vertices.len() {
                return Ok(Verdict::fail("repeated component vertex"));
            }
            // copy_map is given in the listed order; induced_on sorts.
            let mut sorted_map = vec![0; map.len()];
            for (i, &v) in vertices.iter().enumerate() {
                let pos = map.binary_search(&v).expect("listed vertex");
                if let Some(&p) = copy_map.get(i) {
                    sorted_map[pos] = p;
                }
            }
            if copy_map.len() != vertices.len() {
                return Ok(Verdict::fail(
                    "copy map length does not match the vertex list",
                ));
            }
            let witness = HoleProductWitness {
                hole_length: *k,
                clique_size: *m,
                copy_map: sorted_map,
            };
            if let Err(why) = witness.validate(&sub) {
                return Ok(Verdict::fail(why));
            }
            if k % 2 == 0 {
                return Ok(Verdict::fail(format!("hole length {k} is even")));
            }
            let (omega, _) = maximum_cliques_capped(g, clique_cap)?;
            if 2 * m != omega {
                return Ok(Verdict::fail(format!(
                    "product clique number {} differs from ω = {omega}",
                    2 * m
                )));
            }
            Ok(Verdict::ok(format!(
                "graph contains C{k} ⊠ K{m} at full clique number"
            )))
        }
        CertificateDoc::Unsupported { .. } => {
            if g.n() == 0 {
                return Ok(Verdict::ok("graph has no vertices"));
            }
            Ok(if two_thirds_bound_holds(g, clique_cap)? {
                Verdict::fail("graph satisfies the two-thirds bound")
            } else {
                Verdict::ok("omega below two-thirds bound")
            })
        }
    }
}
