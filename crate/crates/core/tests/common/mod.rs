//! Brute-force oracles shared by the integration and acceptance tests. They
//! deliberately avoid the library's search code: paths, colourings and
//! vertex cuts are enumerated exhaustively.

#![allow(dead_code)]

use rainbow_core::graph::{degree_two_segments, Graph};
use rainbow_core::rainbow::{verify_rainbow_k_connected, EdgeColouring};

/// Every simple u-v path as a vertex sequence.
pub fn all_paths(g: &Graph, u: usize, v: usize) -> Vec<Vec<usize>> {
    fn go(g: &Graph, v: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let cur = *path.last().unwrap();
        if cur == v {
            out.push(path.clone());
            return;
        }
        for w in g.neighbours(cur) {
            if !path.contains(&w) {
                path.push(w);
                go(g, v, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, v, &mut vec![u], &mut out);
    out
}

pub fn path_is_rainbow(g: &Graph, colours: &[u32], path: &[usize]) -> bool {
    let mut seen: Vec<u32> = path
        .windows(2)
        .map(|w| colours[g.edge_index(w[0], w[1]).unwrap()])
        .collect();
    seen.sort_unstable();
    seen.windows(2).all(|w| w[0] != w[1])
}

/// Whether k pairwise internally disjoint rainbow u-v paths exist, by
/// trying every k-subset of rainbow paths.
pub fn has_path_system(g: &Graph, colours: &[u32], u: usize, v: usize, k: usize) -> bool {
    let rainbow: Vec<Vec<usize>> = all_paths(g, u, v)
        .into_iter()
        .filter(|p| path_is_rainbow(g, colours, p))
        .collect();
    fn choose(paths: &[Vec<usize>], k: usize, start: usize, used: &mut Vec<usize>) -> bool {
        if k == 0 {
            return true;
        }
        (start..paths.len()).any(|i| {
            let inner = &paths[i][1..paths[i].len() - 1];
            if inner.iter().any(|x| used.contains(x)) {
                return false;
            }
            let before = used.len();
            used.extend_from_slice(inner);
            let ok = choose(paths, k - 1, i + 1, used);
            used.truncate(before);
            ok
        })
    }
    choose(&rainbow, k, 0, &mut Vec::new())
}

pub fn rainbow_k_connected(g: &Graph, colours: &[u32], k: usize) -> bool {
    let n = g.vertex_count();
    (0..n).all(|u| (u + 1..n).all(|v| has_path_system(g, colours, u, v, k)))
}

/// Colourings of m edges with colours 1..=r in first-use normal form
/// (each edge uses at most one more than the largest colour before it).
pub fn first_use_colourings(m: usize, r: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|c: Vec<u32>| {
                let top = c.iter().copied().max().unwrap_or(0);
                (1..=(top + 1).min(r)).map(move |x| {
                    let mut d = c.clone();
                    d.push(x);
                    d
                })
            })
            .collect();
    }
    out
}

/// Whether any of the r^m colourings is rainbow k-connected, checked with
/// the library verifier (itself checked against [`has_path_system`]).
pub fn some_colouring_works(g: &Graph, k: usize, r: u32) -> bool {
    let m = g.edge_count();
    let total = (r as u64).pow(m as u32);
    let mut colours = vec![1u32; m];
    for code in 0..total {
        let mut x = code;
        for c in colours.iter_mut() {
            *c = (x % r as u64) as u32 + 1;
            x /= r as u64;
        }
        let c = EdgeColouring::new(g, colours.clone(), r).unwrap();
        if verify_rainbow_k_connected(g, &c, k).unwrap().is_connected() {
            return true;
        }
    }
    false
}

/// Vertex connectivity from the definition: the smallest vertex set whose
/// removal disconnects the graph, or n - 1 when none does.
pub fn connectivity_by_cuts(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut best = n.saturating_sub(1);
    for mask in 0u32..1 << n {
        let size = mask.count_ones() as usize;
        if size >= best || n - size < 2 {
            continue;
        }
        let alive: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 0).collect();
        let mut seen = vec![false; n];
        let mut stack = vec![alive[0]];
        seen[alive[0]] = true;
        while let Some(x) = stack.pop() {
            for y in g.neighbours(x) {
                if mask >> y & 1 == 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if alive.iter().any(|&v| !seen[v]) {
            best = size;
        }
    }
    best
}

/// Every labelled graph on n vertices.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        Graph::new(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p),
        )
        .unwrap()
    })
}

/// Segments with all interior vertices of degree 2 and length >= 3 that
/// are not rainbow under `c`. Cycles are skipped.
pub fn non_rainbow_long_segments(g: &Graph, c: &EdgeColouring) -> Vec<Vec<usize>> {
    if (0..g.vertex_count()).all(|v| g.degree(v) == 2) {
        return Vec::new();
    }
    degree_two_segments(g)
        .unwrap()
        .into_iter()
        .filter(|s| s.len() >= 4 && !path_is_rainbow(g, c.colours(), s))
        .collect()
}
