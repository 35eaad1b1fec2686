//! Isomorph-free enumeration of all graphs on few vertices.
//!
//! Graphs on `n` vertices are produced by attaching a new vertex to every
//! class representative on `n-1` vertices in all possible ways and keeping
//! one canonical form per class. The canonical form is the largest adjacency
//! code over all labellings that respect an equitable colour refinement.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count supported (the code of a graph must fit in 64 bits).
pub const MAX_SMALL_N: usize = 11;

#[inline]
fn pair_index(i: usize, j: usize) -> u32 {
    debug_assert!(i < j);
    (j * (j - 1) / 2 + i) as u32
}

fn rows_from_code(n: usize, code: u64) -> Vec<u16> {
    let mut rows = vec![0u16; n];
    for j in 1..n {
        for i in 0..j {
            if code >> pair_index(i, j) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
    }
    rows
}

/// Equitable refinement of the degree colouring. Colours are ranks of
/// label-free signatures, so the result is isomorphism-invariant.
fn refine(rows: &[u16]) -> Vec<usize> {
    let n = rows.len();
    let mut color: Vec<usize> = rows.iter().map(|r| r.count_ones() as usize).collect();
    let mut classes = 0;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n)
                    .filter(|&w| rows[v] >> w & 1 == 1)
                    .map(|w| color[w])
                    .collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let distinct: BTreeSet<&(usize, Vec<usize>)> = sigs.iter().collect();
        let rank: HashMap<&(usize, Vec<usize>), usize> =
            distinct.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let next: Vec<usize> = sigs.iter().map(|s| rank[s]).collect();
        let count = distinct.len();
        color = next;
        if count == classes {
            return color;
        }
        classes = count;
    }
}

fn canonical_from_rows(rows: &[u16]) -> u64 {
    let n = rows.len();
    let color = refine(rows);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let max_color = color.iter().copied().max().unwrap_or(0);
    for c in 0..=max_color {
        let cell: Vec<usize> = (0..n).filter(|&v| color[v] == c).collect();
        if !cell.is_empty() {
            cells.push(cell);
        }
    }

    // order[p] = vertex placed at position p.
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut best = 0u64;
    let mut cell_of_position = Vec::with_capacity(n);
    for (ci, cell) in cells.iter().enumerate() {
        cell_of_position.extend(std::iter::repeat_n(ci, cell.len()));
    }

    fn place(
        rows: &[u16],
        cells: &[Vec<usize>],
        cell_of_position: &[usize],
        order: &mut Vec<usize>,
        used: &mut [bool],
        code: u64,
        best: &mut u64,
    ) {
        let p = order.len();
        if p == rows.len() {
            *best = (*best).max(code);
            return;
        }
        for &v in &cells[cell_of_position[p]] {
            if used[v] {
                continue;
            }
            let mut c = code;
            for (i, &u) in order.iter().enumerate() {
                if rows[u] >> v & 1 == 1 {
                    c |= 1 << pair_index(i, p);
                }
            }
            used[v] = true;
            order.push(v);
            place(rows, cells, cell_of_position, order, used, c, best);
            order.pop();
            used[v] = false;
        }
    }

    place(
        rows,
        &cells,
        &cell_of_position,
        &mut order,
        &mut used,
        0,
        &mut best,
    );
    best
}

/// Canonical code of `g`: equal for two graphs iff they are isomorphic.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    if g.n() > MAX_SMALL_N {
        return Err(Error::InvalidParameter(format!(
            "canonical codes need n ≤ {MAX_SMALL_N}, got {}",
            g.n()
        )));
    }
    let rows: Vec<u16> = (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u16, |acc, w| acc | 1 << w))
        .collect();
    Ok(canonical_from_rows(&rows))
}

pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if code >> pair_index(i, j) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges).expect("decoded code is a simple graph")
}

/// One representative of every isomorphism class of graphs on `n`
/// vertices, as canonical codes in ascending order, for each `n` in
/// `0..=max_n`.
pub fn canonical_codes_by_order(max_n: usize) -> Result<Vec<Vec<u64>>> {
    if max_n > MAX_SMALL_N {
        return Err(Error::InvalidParameter(format!(
            "isomorph-free generation supports n ≤ {MAX_SMALL_N}, got {max_n}"
        )));
    }
    let mut levels: Vec<Vec<u64>> = vec![vec![0]];
    for n in 1..=max_n {
        let mut next = BTreeSet::new();
        for &code in &levels[n - 1] {
            let base = rows_from_code(n - 1, code);
            for mask in 0u16..(1 << (n - 1)) {
                let mut rows = base.clone();
                rows.push(mask);
                for (i, r) in rows.iter_mut().enumerate().take(n - 1) {
                    if mask >> i & 1 == 1 {
                        *r |= 1 << (n - 1);
                    }
                }
                next.insert(canonical_from_rows(&rows));
            }
        }
        levels.push(next.into_iter().collect());
    }
    Ok(levels)
}

/// All graphs on `n` vertices up to isomorphism.
pub fn nonisomorphic_graphs(n: usize) -> Result<Vec<Graph>> {
    let levels = canonical_codes_by_order(n)?;
    Ok(levels[n].iter().map(|&c| graph_from_code(n, c)).collect())
}

/// All connected graphs on `1..=max_n` vertices up to isomorphism.
pub fn connected_graphs_up_to(max_n: usize) -> Result<Vec<Graph>> {
    let levels = canonical_codes_by_order(max_n)?;
    Ok(levels
        .iter()
        .enumerate()
        .skip(1)
        .flat_map(|(n, codes)| codes.iter().map(move |&c| graph_from_code(n, c)))
        .filter(Graph::is_connected)
        .collect())
}
