//! Exhaustive oracles for stable sets hitting a clique family.
//!
//! These share no code with the constructive solver and are meant as its
//! independent check on small graphs.

use crate::cliques::{
    enumerate_maximal_cliques_capped, maximum_cliques_capped, DEFAULT_CLIQUE_CAP,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub const DEFAULT_ORACLE_MAX_N: usize = 40;

#[derive(Clone, Copy, Debug)]
pub struct OracleLimits {
    pub max_n: usize,
    pub clique_cap: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_n: DEFAULT_ORACLE_MAX_N,
            clique_cap: DEFAULT_CLIQUE_CAP,
        }
    }
}

impl OracleLimits {
    fn check(&self, g: &Graph) -> Result<()> {
        if g.n() > self.max_n {
            return Err(Error::SizeCapExceeded {
                n: g.n(),
                cap: self.max_n,
            });
        }
        Ok(())
    }
}

/// A stable set meeting every maximum clique of `g`, or `None` if there is
/// none. The empty graph is hit vacuously.
pub fn oracle_hitting_max(g: &Graph, limits: &OracleLimits) -> Result<Option<VertexSet>> {
    limits.check(g)?;
    if g.n() == 0 {
        return Ok(Some(VertexSet::new(0)));
    }
    let (_, family) = maximum_cliques_capped(g, limits.clique_cap)?;
    Ok(find_hitting_stable_set(g, family.cliques()))
}

/// A stable set meeting every maximal clique of size at least `threshold`.
pub fn oracle_hitting_maximal(
    g: &Graph,
    threshold: usize,
    limits: &OracleLimits,
) -> Result<Option<VertexSet>> {
    if threshold < 1 {
        return Err(Error::InvalidParameter(
            "threshold must be at least 1".into(),
        ));
    }
    limits.check(g)?;
    let family = enumerate_maximal_cliques_capped(g, limits.clique_cap)?;
    let large: Vec<VertexSet> = family
        .iter()
        .filter(|c| c.len() >= threshold)
        .cloned()
        .collect();
    Ok(find_hitting_stable_set(g, &large))
}

/// Backtracking search for a stable set meeting every set in `family`.
///
/// Branches on the unhit set with the fewest usable vertices. After a branch
/// on `v` fails, `v` is excluded from its siblings, so no partial selection is
/// explored twice. Members are tried in ascending order, which makes the
/// returned set deterministic.
pub fn find_hitting_stable_set(g: &Graph, family: &[VertexSet]) -> Option<VertexSet> {
    struct Search<'a> {
        g: &'a Graph,
        family: &'a [VertexSet],
    }

    impl Search<'_> {
        fn go(&self, chosen: &mut VertexSet, blocked: &VertexSet) -> bool {
            let mut best: Option<(usize, VertexSet)> = None;
            for c in self.family {
                if c.intersects(chosen) {
                    continue;
                }
                let options = c.difference(blocked);
                let count = options.len();
                if count == 0 {
                    return false;
                }
                if best.as_ref().is_none_or(|(b, _)| count < *b) {
                    best = Some((count, options));
                }
            }
            let Some((_, options)) = best else {
                return true;
            };
            let mut excluded = blocked.clone();
            for v in options.iter() {
                let mut next_blocked = excluded.union(self.g.neighbors(v));
                next_blocked.insert(v);
                chosen.insert(v);
                if self.go(chosen, &next_blocked) {
                    return true;
                }
                chosen.remove(v);
                excluded.insert(v);
            }
            false
        }
    }

    let mut chosen = VertexSet::new(g.n());
    let search = Search { g, family };
    search
        .go(&mut chosen, &VertexSet::new(g.n()))
        .then_some(chosen)
}
