//! Named and random graph generators.
//!
//! All randomness comes from ChaCha8 seeded with a `u64`, so a seed and a
//! parameter list always reproduce the same graph.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{
    complete_graph, cycle_graph, path_graph, petersen_graph, strong_product, Graph,
};
use crate::transversal::PartitionedInstance;
use crate::vertex_set::VertexSet;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Parses `C<k>`, `P<l>`, `K<m>`, `petersen`, or a product `A*B` / `AxB` of
/// those, e.g. `C5xK3`.
pub fn named_graph(spec: &str) -> Result<Graph> {
    let spec = spec.trim();
    if let Some((a, b)) = spec.split_once(['*', 'x']) {
        return strong_product(&named_graph(a)?, &named_graph(b)?);
    }
    if spec.eq_ignore_ascii_case("petersen") {
        return Ok(petersen_graph());
    }
    let mut chars = spec.chars();
    let kind = chars.next().map(|c| c.to_ascii_uppercase());
    let size: usize = chars
        .as_str()
        .parse()
        .map_err(|_| Error::Parse(format!("unknown graph name {spec:?}")))?;
    match kind {
        Some('C') => cycle_graph(size),
        Some('P') => path_graph(size),
        Some('K') => complete_graph(size),
        _ => Err(Error::Parse(format!("unknown graph name {spec:?}"))),
    }
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {p} not in [0, 1]"
        )));
    }
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.link(u, v);
            }
        }
    }
    Ok(g)
}

/// A random instance satisfying the independent-transversal degree
/// hypothesis for an integer bound `k`.
///
/// Part sizes are drawn from `k..=2k+2`; cross edges are offered in random
/// order and kept while both endpoints stay within
/// `min{k, |V_i| - k}` outside neighbours. `fill` is the probability of
/// keeping an admissible edge; `1.0` saturates.
pub fn random_partitioned_instance<R: Rng>(
    parts: usize,
    k: usize,
    fill: f64,
    rng: &mut R,
) -> Result<PartitionedInstance> {
    if k == 0 || parts == 0 {
        return Err(Error::InvalidParameter(
            "need k ≥ 1 and at least one part".into(),
        ));
    }
    let sizes: Vec<usize> = (0..parts).map(|_| rng.gen_range(k..=2 * k + 2)).collect();
    let n: usize = sizes.iter().sum();
    let mut g = Graph::empty(n)?;
    let mut part_of = Vec::with_capacity(n);
    let mut sets = Vec::with_capacity(parts);
    let mut start = 0;
    for (i, &s) in sizes.iter().enumerate() {
        for u in start..start + s {
            part_of.push(i);
            for v in u + 1..start + s {
                g.link(u, v);
            }
        }
        sets.push(VertexSet::from_members(n, start..start + s));
        start += s;
    }
    let cap: Vec<usize> = (0..n).map(|v| k.min(sizes[part_of[v]] - k)).collect();
    let mut used = vec![0usize; n];
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| part_of[u] != part_of[v])
        .collect();
    pairs.shuffle(rng);
    for (u, v) in pairs {
        if used[u] < cap[u] && used[v] < cap[v] && rng.gen_bool(fill) {
            g.link(u, v);
            used[u] += 1;
            used[v] += 1;
        }
    }
    PartitionedInstance::with_integer_bound(g, sets, k)
}

/// `P_l ⊠ K_m` with random attachments at its two ends: up to two extra
/// disjoint `K_{2m}` blocks and up to three loose vertices, joined to the
/// end copies and to each other by random edges that keep every degree at
/// most `3m - 1`.
///
/// The result may still fail to be connected or to keep the clique path
/// intact; callers filter.
pub fn padded_clique_path<R: Rng>(l: usize, m: usize, rng: &mut R) -> Result<Graph> {
    if l < 2 || m < 1 {
        return Err(Error::InvalidParameter("need l ≥ 2 and m ≥ 1".into()));
    }
    let base = strong_product(&path_graph(l)?, &complete_graph(m)?)?;
    let pads = rng.gen_range(0..=2);
    let loose = rng.gen_range(0..=3);
    let n = l * m + pads * 2 * m + loose;
    let mut g = Graph::empty(n)?;
    for (u, v) in base.edges() {
        g.link(u, v);
    }
    let mut next = l * m;
    for _ in 0..pads {
        for u in next..next + 2 * m {
            for v in u + 1..next + 2 * m {
                g.link(u, v);
            }
        }
        next += 2 * m;
    }
    let cap = 3 * m - 1;
    let ends: Vec<usize> = (0..m).chain((l - 1) * m..l * m).collect();
    let extras: Vec<usize> = (l * m..n).collect();
    let mut candidates: Vec<(usize, usize)> = Vec::new();
    for &x in &extras {
        candidates.extend(ends.iter().map(|&e| (e, x)));
        candidates.extend(extras.iter().filter(|&&y| y > x).map(|&y| (x, y)));
    }
    candidates.shuffle(rng);
    let keep = rng.gen_range(0.1..0.9);
    for (u, v) in candidates {
        if !g.has_edge(u, v) && g.degree(u) < cap && g.degree(v) < cap && rng.gen_bool(keep) {
            g.link(u, v);
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_graphs() {
        assert_eq!(named_graph("C5").unwrap(), cycle_graph(5).unwrap());
        assert_eq!(named_graph("k3").unwrap(), complete_graph(3).unwrap());
        assert_eq!(named_graph("P4").unwrap().edge_count(), 3);
        assert_eq!(named_graph("C5xK3").unwrap().n(), 15);
        assert_eq!(named_graph("P4*K2").unwrap().max_degree(), 5);
        assert_eq!(named_graph("Petersen").unwrap(), petersen_graph());
        assert!(named_graph("Q3").is_err());
        assert!(named_graph("C2").is_err());
        assert!(named_graph("").is_err());
    }

    #[test]
    fn gnp_is_reproducible() {
        let a = gnp(20, 0.3, &mut seeded_rng(7)).unwrap();
        let b = gnp(20, 0.3, &mut seeded_rng(7)).unwrap();
        assert_eq!(a, b);
        assert!(gnp(3, 1.5, &mut seeded_rng(0)).is_err());
        assert_eq!(gnp(6, 1.0, &mut seeded_rng(0)).unwrap().edge_count(), 15);
    }

    #[test]
    fn random_instances_satisfy_hypothesis() {
        let mut rng = seeded_rng(11);
        for _ in 0..50 {
            let parts = rng.gen_range(1..6);
            let k = rng.gen_range(1..4);
            let inst = random_partitioned_instance(parts, k, 1.0, &mut rng).unwrap();
            assert!(
                inst.satisfies_hypothesis(),
                "{:?}",
                inst.hypothesis_violation()
            );
        }
    }

    #[test]
    fn padded_paths_respect_degree_cap() {
        let mut rng = seeded_rng(3);
        for _ in 0..50 {
            let m = rng.gen_range(1..=3);
            let g = padded_clique_path(rng.gen_range(4..=7), m, &mut rng).unwrap();
            assert!(g.max_degree() < 3 * m);
        }
    }
}
