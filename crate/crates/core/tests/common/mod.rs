//! Brute-force helpers shared by the integration tests. Nothing here calls
//! the library's clique or solver code.

#![allow(dead_code)]

use hitclique::Graph;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

/// Maximal cliques by plain Bron–Kerbosch without pivoting, each sorted.
pub fn naive_maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    fn go(
        adj: &[Vec<bool>],
        r: &mut Vec<usize>,
        p: Vec<usize>,
        x: Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
            return;
        }
        let mut p = p;
        let mut x = x;
        while let Some(v) = p.pop() {
            let np = p.iter().copied().filter(|&w| adj[v][w]).collect();
            let nx = x.iter().copied().filter(|&w| adj[v][w]).collect();
            r.push(v);
            go(adj, r, np, nx, out);
            r.pop();
            x.push(v);
        }
    }
    let adj = adjacency(g);
    let mut out = Vec::new();
    if g.n() > 0 {
        go(
            &adj,
            &mut Vec::new(),
            (0..g.n()).collect(),
            Vec::new(),
            &mut out,
        );
    }
    out.sort();
    out
}

/// All maximum cliques, sorted.
pub fn naive_maximum_cliques(g: &Graph) -> (usize, Vec<Vec<usize>>) {
    let all = naive_maximal_cliques(g);
    let omega = all.iter().map(Vec::len).max().unwrap_or(0);
    (
        omega,
        all.into_iter().filter(|c| c.len() == omega).collect(),
    )
}

pub fn is_stable(g: &Graph, s: &[usize]) -> bool {
    let adj = adjacency(g);
    s.iter()
        .enumerate()
        .all(|(i, &u)| s[i + 1..].iter().all(|&v| u != v && !adj[u][v]))
}

pub fn hits_all(s: &[usize], family: &[Vec<usize>]) -> bool {
    family.iter().all(|c| c.iter().any(|v| s.contains(v)))
}

/// Whether some stable set meets every set in `family`, by trying every
/// vertex subset. Only for tiny graphs.
pub fn subset_hitting_exists(g: &Graph, family: &[Vec<usize>]) -> bool {
    let n = g.n();
    assert!(n <= 20);
    let adj = adjacency(g);
    let masks: Vec<u32> = family
        .iter()
        .map(|c| c.iter().fold(0u32, |m, &v| m | 1 << v))
        .collect();
    let nbr: Vec<u32> = (0..n)
        .map(|u| (0..n).filter(|&v| adj[u][v]).fold(0u32, |m, v| m | 1 << v))
        .collect();
    (0u32..1 << n).any(|s| {
        masks.iter().all(|&c| c & s != 0) && (0..n).all(|u| s >> u & 1 == 0 || nbr[u] & s == 0)
    })
}

/// `3ω ≥ 2(Δ+1)` from the naive clique number.
pub fn meets_bound(g: &Graph) -> bool {
    let (omega, _) = naive_maximum_cliques(g);
    3 * omega >= 2 * (g.max_degree() + 1)
}
