//! Graphs in which every maximal clique is large relative to `Δ+1` and yet no
//! stable set meets every maximal clique.
//!
//! For parameters `k, t` the graph has a clique `A = A_1 ∪ .. ∪ A_t` with
//! `|A_i| = k`, and 5-cycles `B_1..B_t`. A vertex of `A_i` is joined to every
//! vertex of `B_j` with `j ≠ i`, and the `B_j` are mutually non-adjacent.
//! The maximal cliques are `A` itself and, for each edge `e` of each `B_i`,
//! `e ∪ (A ∖ A_i)`. A stable set meeting `A` does so inside one `A_i`, which
//! confines the rest of the set to `B_i`, and a stable subset of a 5-cycle
//! always misses an edge.

use num_rational::Ratio;
use serde::Serialize;

use crate::cliques::{enumerate_maximal_cliques_capped, family_order, DEFAULT_CLIQUE_CAP};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub type Rational = Ratio<i64>;

/// Local edge order of every 5-cycle `B_i`.
pub const PENTAGON_EDGES: [(usize, usize); 5] = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];

/// Instances at or below this many vertices get their census cross-checked
/// by full clique enumeration.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 64;

fn check_epsilon(epsilon: Rational) -> Result<()> {
    if epsilon <= Rational::from_integer(0) || epsilon >= Rational::from_integer(1) {
        return Err(Error::InvalidParameter(format!(
            "epsilon = {epsilon} must lie strictly between 0 and 1"
        )));
    }
    Ok(())
}

/// `(1-ε)(kt+5t-5) < kt+2-k`, evaluated exactly.
pub fn satisfies_inequality(k: usize, t: usize, epsilon: Rational) -> bool {
    let (p, q) = (*epsilon.numer() as i128, *epsilon.denom() as i128);
    let (k, t) = (k as i128, t as i128);
    (q - p) * (k * t + 5 * t - 5) < q * (k * t + 2 - k)
}

/// Sizes and degrees of the `(k, t)` graph, computed from the construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub vertices: usize,
    /// `|A| = kt`.
    pub a_clique: usize,
    /// `2 + k(t-1)`, the size of every other maximal clique.
    pub other_maximal: usize,
    /// `1 + 5t`.
    pub maximal_count: usize,
    /// `kt - 1 + 5(t-1)`.
    pub a_degree: usize,
    /// `2 + k(t-1)`.
    pub b_degree: usize,
    pub delta: usize,
}

impl Census {
    pub fn new(k: usize, t: usize) -> Census {
        let a_degree = k * t - 1 + 5 * (t - 1);
        let b_degree = 2 + k * (t - 1);
        Census {
            vertices: k * t + 5 * t,
            a_clique: k * t,
            other_maximal: 2 + k * (t - 1),
            maximal_count: 1 + 5 * t,
            a_degree,
            b_degree,
            delta: a_degree.max(b_degree),
        }
    }

    pub fn max_clique(&self) -> usize {
        self.a_clique.max(self.other_maximal)
    }

    pub fn min_maximal_clique(&self) -> usize {
        self.a_clique.min(self.other_maximal)
    }

    /// `(1-ε)(Δ+1)`.
    pub fn threshold(&self, epsilon: Rational) -> Rational {
        (Rational::from_integer(1) - epsilon) * Rational::from_integer(self.delta as i64 + 1)
    }

    /// Every maximal clique is strictly larger than `(1-ε)(Δ+1)`.
    pub fn all_above(&self, epsilon: Rational) -> bool {
        Rational::from_integer(self.min_maximal_clique() as i64) > self.threshold(epsilon)
    }
}

/// Lexicographically least `(k, t)` satisfying the inequality for which the
/// built graph really has every maximal clique above `(1-ε)(Δ+1)`.
///
/// The extra condition matters only for tiny parameters, where the 5-cycles
/// rather than `A` carry the maximum degree (`k + 5t < 8`) or `A` is the
/// smallest maximal clique (`k = 1`).
pub fn feasible_params(epsilon: Rational) -> Result<(usize, usize)> {
    check_epsilon(epsilon)?;
    let (p, q) = (*epsilon.numer() as i128, *epsilon.denom() as i128);
    // For k > 5(q-p)/p + 1 the slope in t is positive, so a solution exists.
    let k_cap = (5 * (q - p) / p + 2) as usize;
    for k in 1..=k_cap.max(8) {
        if let Some(t) = least_t(k, epsilon) {
            return Ok((k, t));
        }
    }
    Err(Error::InternalContradiction(format!(
        "no feasible (k, t) found for epsilon = {epsilon} below k = {k_cap}"
    )))
}

fn least_t(k: usize, epsilon: Rational) -> Option<usize> {
    let ok = |t: usize| satisfies_inequality(k, t, epsilon) && Census::new(k, t).all_above(epsilon);
    // Both conditions are linear in t once 5t + k ≥ 8 and k ≥ 2, so a short
    // scan past the point where the inequality's slope decides suffices.
    let (p, q) = (*epsilon.numer() as i128, *epsilon.denom() as i128);
    let ki = k as i128;
    let slope = q * ki - (q - p) * (ki + 5);
    let intercept = q * (2 - ki) + 5 * (q - p);
    let horizon = if slope > 0 {
        (-intercept).max(0) / slope + 3
    } else {
        3
    };
    (1..=horizon as usize).find(|&t| ok(t))
}

#[derive(Clone, Debug)]
pub struct CounterexampleInstance {
    pub k: usize,
    pub t: usize,
    pub epsilon: Rational,
    pub graph: Graph,
    pub a_parts: Vec<VertexSet>,
    pub b_parts: Vec<VertexSet>,
}

/// Builds the `(k, t)` graph. `A_i` is `ik..(i+1)k`; `B_i` is
/// `kt + 5i .. kt + 5i + 5` with local edges [`PENTAGON_EDGES`].
pub fn build_counterexample(
    k: usize,
    t: usize,
    epsilon: Rational,
) -> Result<CounterexampleInstance> {
    check_epsilon(epsilon)?;
    if k < 1 || t < 1 {
        return Err(Error::InvalidParameter(format!(
            "k = {k} and t = {t} must be positive"
        )));
    }
    if !satisfies_inequality(k, t, epsilon) {
        return Err(Error::InvalidParameter(format!(
            "(1-ε)(kt+5t-5) < kt+2-k fails for k = {k}, t = {t}, ε = {epsilon}"
        )));
    }
    let census = Census::new(k, t);
    if !census.all_above(epsilon) {
        return Err(Error::InvalidParameter(format!(
            "for k = {k}, t = {t} the smallest maximal clique ({}) does not exceed (1-ε)(Δ+1) = {} with Δ = {}",
            census.min_maximal_clique(),
            census.threshold(epsilon),
            census.delta
        )));
    }
    let n = census.vertices;
    let mut g = Graph::empty(n)?;
    let a_parts: Vec<VertexSet> = (0..t)
        .map(|i| VertexSet::from_members(n, i * k..(i + 1) * k))
        .collect();
    let b_parts: Vec<VertexSet> = (0..t)
        .map(|i| VertexSet::from_members(n, k * t + 5 * i..k * t + 5 * i + 5))
        .collect();
    for u in 0..k * t {
        for v in u + 1..k * t {
            g.link(u, v);
        }
    }
    for (i, b) in b_parts.iter().enumerate() {
        let base = k * t + 5 * i;
        for (x, y) in PENTAGON_EDGES {
            g.link(base + x, base + y);
        }
        for (j, a) in a_parts.iter().enumerate() {
            if i != j {
                for u in a.iter() {
                    for v in b.iter() {
                        g.link(u, v);
                    }
                }
            }
        }
    }
    Ok(CounterexampleInstance {
        k,
        t,
        epsilon,
        graph: g,
        a_parts,
        b_parts,
    })
}

impl CounterexampleInstance {
    pub fn a(&self) -> VertexSet {
        let mut a = VertexSet::new(self.graph.n());
        self.a_parts.iter().for_each(|p| a.union_with(p));
        a
    }

    /// The maximal cliques predicted by the construction, in canonical
    /// family order.
    pub fn census_cliques(&self) -> Vec<VertexSet> {
        let n = self.graph.n();
        let a = self.a();
        let mut out = vec![a.clone()];
        for (i, b) in self.b_parts.iter().enumerate() {
            let rest = a.difference(&self.a_parts[i]);
            let base = b.first().expect("B_i is nonempty");
            for (x, y) in PENTAGON_EDGES {
                let mut c = rest.clone();
                c.insert(base + x);
                c.insert(base + y);
                out.push(c);
            }
        }
        debug_assert!(out.iter().all(|c| c.universe() == n));
        out.sort_by(family_order);
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub k: usize,
    pub t: usize,
    pub epsilon: String,
    pub vertices: usize,
    pub connected: bool,
    pub delta: usize,
    pub max_clique: usize,
    pub unique_max_clique: bool,
    pub other_maximal_size: usize,
    pub maximal_cliques: usize,
    /// `(1-ε)(Δ+1)` as an exact fraction.
    pub threshold: String,
    pub all_above_threshold: bool,
    /// "enumeration" or "closed_form".
    pub census_source: String,
    pub census_matches: bool,
    pub candidates_checked: usize,
    pub hitting_set_exists: bool,
    /// True when some check failed.
    pub refuted: bool,
    pub notes: Vec<String>,
}

/// Checks the instance: clique sizes against `(1-ε)(Δ+1)` and absence of a
/// stable set meeting every maximal clique.
///
/// Instances with at most `enumeration_limit` vertices have their maximal
/// cliques enumerated and compared with the closed-form census; larger ones
/// check each census clique for being a maximal clique. The stable-set search
/// is structured: any candidate meets `A` in one vertex `a ∈ A_i` and lies in
/// `{a} ∪ B_i` otherwise, so all `{a} ∪ T` with `T` a stable subset of `B_i`
/// are tried.
pub fn verify_counterexample(
    inst: &CounterexampleInstance,
    enumeration_limit: usize,
) -> Result<VerificationReport> {
    let g = &inst.graph;
    let n = g.n();
    let census = Census::new(inst.k, inst.t);
    let predicted = inst.census_cliques();
    let mut notes = Vec::new();

    let delta = g.max_degree();
    let mut census_matches = delta == census.delta && n == census.vertices;

    let (family, source) = if n <= enumeration_limit {
        let enumerated = enumerate_maximal_cliques_capped(g, DEFAULT_CLIQUE_CAP)?;
        census_matches &= enumerated.cliques() == predicted.as_slice();
        (enumerated.cliques().to_vec(), "enumeration")
    } else {
        let all_maximal = predicted.iter().all(|c| {
            g.is_clique(c) && {
                let mut common = VertexSet::full(n);
                c.iter().for_each(|v| common.intersect_with(g.neighbors(v)));
                common.is_empty()
            }
        });
        census_matches &= all_maximal;
        (predicted.clone(), "closed_form")
    };
    if !census_matches {
        notes.push("enumerated structure differs from the closed-form census".into());
    }

    let max_clique = family.iter().map(VertexSet::len).max().unwrap_or(0);
    let unique_max_clique = family.iter().filter(|c| c.len() == max_clique).count() == 1;
    let a = inst.a();
    let other_sizes: Vec<usize> = family
        .iter()
        .filter(|c| **c != a)
        .map(VertexSet::len)
        .collect();
    let other_maximal_size = other_sizes.first().copied().unwrap_or(0);
    if other_sizes.iter().any(|&s| s != other_maximal_size) {
        notes.push("non-A maximal cliques differ in size".into());
        census_matches = false;
    }

    let threshold =
        (Rational::from_integer(1) - inst.epsilon) * Rational::from_integer(delta as i64 + 1);
    let all_above_threshold = family
        .iter()
        .all(|c| Rational::from_integer(c.len() as i64) > threshold);

    let connected = g.is_connected();
    if !connected {
        notes.push("t = 1: no edges between A and B, graph is disconnected".into());
    }

    // Structured search over {a} ∪ T, T a stable subset of B_i.
    let mut candidates_checked = 0;
    let mut hitting_set_exists = false;
    'outer: for (i, part) in inst.a_parts.iter().enumerate() {
        let b: Vec<usize> = inst.b_parts[i].to_vec();
        for a_vertex in part.iter() {
            for mask in 0u32..32 {
                let mut s = VertexSet::from_members(n, [a_vertex]);
                (0..5).filter(|j| mask >> j & 1 == 1).for_each(|j| {
                    s.insert(b[j]);
                });
                if !g.is_stable(&s) {
                    continue;
                }
                candidates_checked += 1;
                if family.iter().all(|c| c.intersects(&s)) {
                    hitting_set_exists = true;
                    notes.push(format!("stable set {s:?} meets every maximal clique"));
                    break 'outer;
                }
            }
        }
    }
    // A set avoiding A misses the maximal clique A.
    if !family.contains(&a) {
        notes.push("A is not among the maximal cliques".into());
        census_matches = false;
    }

    let refuted = hitting_set_exists || !all_above_threshold || !census_matches;
    Ok(VerificationReport {
        k: inst.k,
        t: inst.t,
        epsilon: inst.epsilon.to_string(),
        vertices: n,
        connected,
        delta,
        max_clique,
        unique_max_clique,
        other_maximal_size,
        maximal_cliques: family.len(),
        threshold: threshold.to_string(),
        all_above_threshold,
        census_source: source.into(),
        census_matches,
        candidates_checked,
        hitting_set_exists,
        refuted,
        notes,
    })
}
