//! Graphs up to isomorphism, by adding one edge at a time and keeping one
//! canonical representative per class at each edge count.

use std::collections::HashSet;

use rayon::prelude::*;

use super::ExtremalError;
use crate::graph::canon::canonical_form;
use crate::graph::{vertex_connectivity, Graph};

pub const MAX_BUILTIN_N: usize = 8;

/// One canonical representative of every graph on `n` vertices, ordered by
/// edge count and then by edge list.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>, ExtremalError> {
    if n > MAX_BUILTIN_N {
        return Err(ExtremalError::Scale(format!(
            "built-in enumeration covers n ≤ {MAX_BUILTIN_N}; supply a graph6 file for n = {n}"
        )));
    }
    let mut level = vec![Graph::empty(n)];
    let mut out = level.clone();
    for _ in 0..n * n.saturating_sub(1) / 2 {
        let children: Vec<Vec<Graph>> = level
            .par_iter()
            .map(|g| {
                let mut kids = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if !g.has_edge(u, v) {
                            kids.push(canonical_form(&g.with_edge(u, v).unwrap()));
                        }
                    }
                }
                kids
            })
            .collect();
        let mut seen = HashSet::new();
        let mut next: Vec<Graph> = children
            .into_iter()
            .flatten()
            .filter(|g| seen.insert(g.clone()))
            .collect();
        next.sort_by(|a, b| a.edges().cmp(b.edges()));
        out.extend(next.iter().cloned());
        level = next;
    }
    Ok(out)
}

/// The k-connected graphs among [`all_graphs`].
pub fn enumerate_k_connected(n: usize, k: usize) -> Result<Vec<Graph>, ExtremalError> {
    filter_k_connected(all_graphs(n)?, k)
}

pub fn enumerate_two_connected(n: usize) -> Result<Vec<Graph>, ExtremalError> {
    if n < 3 {
        return Err(ExtremalError::Scale("2-connected graphs need n ≥ 3".into()));
    }
    enumerate_k_connected(n, 2)
}

fn filter_k_connected(graphs: Vec<Graph>, k: usize) -> Result<Vec<Graph>, ExtremalError> {
    let keep: Vec<bool> = graphs
        .par_iter()
        .map(|g| g.vertex_count() >= 2 && vertex_connectivity(g).is_ok_and(|c| c >= k))
        .collect();
    Ok(graphs
        .into_iter()
        .zip(keep)
        .filter_map(|(g, ok)| ok.then_some(g))
        .collect())
}

/// Canonicalises externally supplied graphs on `n` vertices, drops
/// duplicates and keeps the k-connected ones, in the same order as the
/// built-in enumeration.
pub fn from_external(graphs: Vec<Graph>, n: usize, k: usize) -> Result<Vec<Graph>, ExtremalError> {
    if let Some(g) = graphs.iter().find(|g| g.vertex_count() != n) {
        return Err(ExtremalError::Input(format!(
            "external graph has {} vertices, expected {n}",
            g.vertex_count()
        )));
    }
    let mut canon: Vec<Graph> = graphs.par_iter().map(canonical_form).collect();
    canon.sort_by(|a, b| (a.edge_count(), a.edges()).cmp(&(b.edge_count(), b.edges())));
    canon.dedup();
    filter_k_connected(canon, k)
}
