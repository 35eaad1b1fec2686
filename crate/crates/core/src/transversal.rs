//! Independent transversals of a partition into cliques.
//!
//! If the vertices are split into cliques `V_1..V_r` and every `v ∈ V_i` has
//! at most `min{k, |V_i| − k}` neighbours in the other parts, a stable set
//! with one vertex from every part exists. The bound `k` is kept as an exact
//! rational so callers can pass `(Δ+1)/3` without rounding.

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub const DEFAULT_STEP_BUDGET: u64 = 100_000;

#[derive(Clone, Debug)]
pub struct PartitionedInstance {
    graph: Graph,
    parts: Vec<VertexSet>,
    bound: Ratio<i64>,
    covered: VertexSet,
}

impl PartitionedInstance {
    /// Parts must be pairwise disjoint cliques of `graph`; `bound` must be
    /// positive. The degree hypothesis is not required here; see
    /// [`PartitionedInstance::hypothesis_violation`].
    pub fn new(graph: Graph, parts: Vec<VertexSet>, bound: Ratio<i64>) -> Result<Self> {
        if bound <= Ratio::from_integer(0) {
            return Err(Error::InvalidParameter(format!(
                "bound k = {bound} must be positive"
            )));
        }
        let mut covered = VertexSet::new(graph.n());
        for (i, part) in parts.iter().enumerate() {
            if part.universe() != graph.n() {
                return Err(Error::InvalidParameter(format!(
                    "part {i} is over a different vertex range"
                )));
            }
            if part.is_empty() {
                return Err(Error::InvalidParameter(format!("part {i} is empty")));
            }
            if !covered.is_disjoint(part) {
                return Err(Error::InvalidParameter(format!(
                    "part {i} overlaps an earlier part"
                )));
            }
            if !graph.is_clique(part) {
                return Err(Error::InvalidParameter(format!("part {i} is not a clique")));
            }
            covered.union_with(part);
        }
        Ok(PartitionedInstance {
            graph,
            parts,
            bound,
            covered,
        })
    }

    pub fn with_integer_bound(graph: Graph, parts: Vec<VertexSet>, k: usize) -> Result<Self> {
        Self::new(graph, parts, Ratio::from_integer(k as i64))
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn bound(&self) -> Ratio<i64> {
        self.bound
    }

    /// Neighbours of `v ∈ V_i` lying in other parts.
    pub fn external_degree(&self, v: usize, part: usize) -> usize {
        let mut outside = self.covered.difference(&self.parts[part]);
        outside.intersect_with(self.graph.neighbors(v));
        outside.len()
    }

    /// First violation of the degree hypothesis, if any. A part smaller than
    /// `k` counts as a violation.
    pub fn hypothesis_violation(&self) -> Option<String> {
        let (num, den) = (*self.bound.numer(), *self.bound.denom());
        for (i, part) in self.parts.iter().enumerate() {
            let size = part.len() as i64;
            if size * den < num {
                return Some(format!(
                    "part {i} has {size} vertices, fewer than k = {}",
                    self.bound
                ));
            }
            for v in part.iter() {
                let ext = self.external_degree(v, i) as i64;
                if ext * den > num || ext * den > size * den - num {
                    return Some(format!(
                        "vertex {v} of part {i} has {ext} outside neighbours, more than min{{{k}, {size} - {k}}}",
                        k = self.bound
                    ));
                }
            }
        }
        None
    }

    pub fn satisfies_hypothesis(&self) -> bool {
        self.hypothesis_violation().is_none()
    }

    /// Whether `s` is stable and has exactly one vertex in every part.
    pub fn is_transversal(&self, s: &VertexSet) -> bool {
        self.graph.is_stable(s)
            && s.is_subset(&self.covered)
            && self.parts.iter().all(|p| p.intersection_len(s) == 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransversalRun {
    /// Chosen vertex of each part, in part order.
    pub picks: Vec<usize>,
    pub steps: u64,
    /// True when the local search ran out of steps and backtracking finished
    /// the job.
    pub used_fallback: bool,
}

#[derive(Clone, Debug)]
pub struct TransversalSolver {
    pub step_budget: u64,
    pub seed: u64,
}

impl Default for TransversalSolver {
    fn default() -> Self {
        TransversalSolver {
            step_budget: DEFAULT_STEP_BUDGET,
            seed: 0,
        }
    }
}

impl TransversalSolver {
    /// Solves an instance that satisfies the degree hypothesis; such an
    /// instance always has a transversal.
    pub fn solve(&self, inst: &PartitionedInstance) -> Result<VertexSet> {
        if let Some(why) = inst.hypothesis_violation() {
            return Err(Error::Precondition(why));
        }
        let run = self.search(inst).ok_or_else(|| {
            Error::InternalContradiction(
                "no independent transversal although the degree hypothesis holds".into(),
            )
        })?;
        let set = VertexSet::from_members(inst.graph.n(), run.picks.iter().copied());
        if !inst.is_transversal(&set) {
            return Err(Error::InternalContradiction(format!(
                "search returned {set:?}, which is not an independent transversal"
            )));
        }
        Ok(set)
    }

    /// Looks for an independent transversal without assuming the hypothesis.
    /// `None` means none exists.
    pub fn search(&self, inst: &PartitionedInstance) -> Option<TransversalRun> {
        if inst.parts.is_empty() {
            return Some(TransversalRun {
                picks: Vec::new(),
                steps: 0,
                used_fallback: false,
            });
        }
        let (found, steps) = self.local_search(inst);
        if let Some(picks) = found {
            return Some(TransversalRun {
                picks,
                steps,
                used_fallback: false,
            });
        }
        backtrack(inst).map(|picks| TransversalRun {
            picks,
            steps,
            used_fallback: true,
        })
    }

    // Grows a partial transversal. When every vertex of the next part is
    // blocked, a least-blocked vertex is swapped in and its blockers are
    // dropped back to the unassigned pool.
    fn local_search(&self, inst: &PartitionedInstance) -> (Option<Vec<usize>>, u64) {
        let g = &inst.graph;
        let r = inst.parts.len();
        let members: Vec<Vec<usize>> = inst.parts.iter().map(VertexSet::to_vec).collect();
        let mut part_of = vec![usize::MAX; g.n()];
        for (i, m) in members.iter().enumerate() {
            for &v in m {
                part_of[v] = i;
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut pick: Vec<Option<usize>> = vec![None; r];
        let mut chosen = VertexSet::new(g.n());
        let mut last_moved = vec![0u64; r];
        let mut steps = 0;

        while let Some(i) = pick.iter().position(Option::is_none) {
            if steps >= self.step_budget {
                return (None, steps);
            }
            steps += 1;

            let blocked_by = |v: usize| g.neighbors(v).intersection_len(&chosen);
            if let Some(&v) = members[i].iter().find(|&&v| blocked_by(v) == 0) {
                pick[i] = Some(v);
                chosen.insert(v);
                last_moved[i] = steps;
                continue;
            }

            // Avoid evicting parts that were placed in the last step, so two
            // parts cannot just keep trading places.
            let score = |v: usize| {
                let blockers = g.neighbors(v).intersection(&chosen);
                let fresh = blockers.iter().any(|w| last_moved[part_of[w]] + 1 >= steps);
                (fresh, blockers.len())
            };
            let v = if rng.gen_ratio(1, 10) {
                *members[i].choose(&mut rng).expect("parts are nonempty")
            } else {
                let best = members[i]
                    .iter()
                    .map(|&v| score(v))
                    .min()
                    .expect("nonempty");
                let ties: Vec<usize> = members[i]
                    .iter()
                    .copied()
                    .filter(|&v| score(v) == best)
                    .collect();
                *ties.choose(&mut rng).expect("nonempty")
            };
            for w in g.neighbors(v).intersection(&chosen).iter() {
                chosen.remove(w);
                pick[part_of[w]] = None;
            }
            pick[i] = Some(v);
            chosen.insert(v);
            last_moved[i] = steps;
        }
        (
            Some(pick.into_iter().map(|p| p.expect("all assigned")).collect()),
            steps,
        )
    }
}

// Exhaustive search: always branch on the part with the fewest remaining
// candidates, pruning candidates adjacent to chosen vertices.
fn backtrack(inst: &PartitionedInstance) -> Option<Vec<usize>> {
    fn go(g: &Graph, domains: &mut Vec<VertexSet>, picks: &mut Vec<Option<usize>>) -> bool {
        let next = (0..picks.len())
            .filter(|&i| picks[i].is_none())
            .min_by_key(|&i| (domains[i].len(), i));
        let Some(i) = next else {
            return true;
        };
        let candidates = domains[i].clone();
        for v in candidates.iter() {
            let saved = domains.clone();
            picks[i] = Some(v);
            let mut dead = false;
            for j in 0..picks.len() {
                if picks[j].is_none() {
                    domains[j].difference_with(g.neighbors(v));
                    dead |= domains[j].is_empty();
                }
            }
            if !dead && go(g, domains, picks) {
                return true;
            }
            picks[i] = None;
            *domains = saved;
        }
        false
    }

    let mut domains = inst.parts.clone();
    let mut picks = vec![None; domains.len()];
    go(&inst.graph, &mut domains, &mut picks)
        .then(|| picks.into_iter().map(|p| p.expect("assigned")).collect())
}

/// Independent transversal of an instance satisfying the degree hypothesis,
/// using the default step budget.
pub fn independent_transversal(inst: &PartitionedInstance) -> Result<VertexSet> {
    TransversalSolver::default().solve(inst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    fn set(n: usize, m: &[usize]) -> VertexSet {
        VertexSet::from_members(n, m.iter().copied())
    }

    /// Tries all `∏|V_i|` selections.
    fn brute_force_exists(inst: &PartitionedInstance) -> bool {
        let parts: Vec<Vec<usize>> = inst.parts().iter().map(VertexSet::to_vec).collect();
        let mut idx = vec![0; parts.len()];
        loop {
            let s = set(
                inst.graph().n(),
                &idx.iter()
                    .zip(&parts)
                    .map(|(&i, p)| p[i])
                    .collect::<Vec<_>>(),
            );
            if inst.graph().is_stable(&s) {
                return true;
            }
            let mut k = 0;
            loop {
                if k == parts.len() {
                    return false;
                }
                idx[k] += 1;
                if idx[k] < parts[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }

    #[test]
    fn two_isolated_edges() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let inst =
            PartitionedInstance::with_integer_bound(g, vec![set(4, &[0, 1]), set(4, &[2, 3])], 1)
                .unwrap();
        assert!(inst.satisfies_hypothesis());
        let s = independent_transversal(&inst).unwrap();
        assert!(inst.is_transversal(&s));
        assert_eq!(s.len(), 2);
    }

    fn triangle_ring() -> PartitionedInstance {
        // Triangles {0,1,2}, {3,4,5}, {6,7,8} with single matching edges
        // 2-3, 5-6, 8-0 joining consecutive triangles.
        let mut edges = vec![];
        for t in 0..3 {
            let b = 3 * t;
            edges.extend([(b, b + 1), (b + 1, b + 2), (b, b + 2)]);
        }
        edges.extend([(2, 3), (5, 6), (8, 0)]);
        let g = Graph::new(9, &edges).unwrap();
        let parts = vec![set(9, &[0, 1, 2]), set(9, &[3, 4, 5]), set(9, &[6, 7, 8])];
        PartitionedInstance::with_integer_bound(g, parts, 1).unwrap()
    }

    #[test]
    fn triangle_ring_has_transversal() {
        let inst = triangle_ring();
        assert!(inst.satisfies_hypothesis());
        assert!(brute_force_exists(&inst));
        let s = independent_transversal(&inst).unwrap();
        assert!(inst.is_transversal(&s));
    }

    #[test]
    fn two_k4_joined_by_an_edge() {
        // Clique-graph components {0..4} and {4..8}; Δ = 4 so k = 5/3.
        let mut edges = vec![(3, 4)];
        for b in [0, 4] {
            for u in b..b + 4 {
                for v in u + 1..b + 4 {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(8, &edges).unwrap();
        assert_eq!(g.max_degree(), 4);
        let inst = PartitionedInstance::new(
            g,
            vec![set(8, &[0, 1, 2, 3]), set(8, &[4, 5, 6, 7])],
            Ratio::new(5, 3),
        )
        .unwrap();
        assert!(inst.satisfies_hypothesis());
        assert!(brute_force_exists(&inst));
        let s = independent_transversal(&inst).unwrap();
        assert!(inst.is_transversal(&s));
    }

    #[test]
    fn hypothesis_violations() {
        // K2 parts joined completely: each vertex has 2 outside neighbours.
        let g = complete_graph(4).unwrap();
        let inst =
            PartitionedInstance::with_integer_bound(g, vec![set(4, &[0, 1]), set(4, &[2, 3])], 1)
                .unwrap();
        assert!(!inst.satisfies_hypothesis());
        assert!(matches!(
            independent_transversal(&inst),
            Err(Error::Precondition(_))
        ));
        assert!(TransversalSolver::default().search(&inst).is_none());

        // Part smaller than k.
        let g = Graph::new(2, &[]).unwrap();
        let inst = PartitionedInstance::with_integer_bound(g, vec![set(2, &[0])], 2).unwrap();
        assert!(inst
            .hypothesis_violation()
            .unwrap()
            .contains("fewer than k"));
    }

    #[test]
    fn malformed_instances() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert!(
            PartitionedInstance::with_integer_bound(g.clone(), vec![set(3, &[0, 2])], 1).is_err()
        );
        assert!(PartitionedInstance::with_integer_bound(
            g.clone(),
            vec![set(3, &[0, 1]), set(3, &[1])],
            1
        )
        .is_err());
        assert!(PartitionedInstance::with_integer_bound(g.clone(), vec![set(3, &[])], 1).is_err());
        assert!(PartitionedInstance::with_integer_bound(g, vec![set(3, &[0])], 0).is_err());
    }

    #[test]
    fn fallback_finds_what_local_search_misses() {
        let inst = triangle_ring();
        let solver = TransversalSolver {
            step_budget: 0,
            seed: 0,
        };
        let run = solver.search(&inst).unwrap();
        assert!(run.used_fallback);
        assert!(inst.is_transversal(&set(9, &run.picks)));
    }

    #[test]
    fn parts_may_cover_a_subset() {
        // Vertex 2 is outside every part and does not count as "outside".
        let g = Graph::new(3, &[(0, 2), (1, 2)]).unwrap();
        let inst = PartitionedInstance::with_integer_bound(g, vec![set(3, &[0]), set(3, &[1])], 1)
            .unwrap();
        assert_eq!(inst.external_degree(0, 0), 0);
        assert_eq!(independent_transversal(&inst).unwrap().to_vec(), vec![0, 1]);
    }
}
