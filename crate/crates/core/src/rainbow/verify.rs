use rayon::prelude::*;
use serde::ser::{Serialize, SerializeMap, Serializer};

use super::{EdgeColouring, RainbowError};
use crate::graph::{distances_from, Graph, Vertex};

/// True iff the colours along `path` are pairwise distinct.
pub fn is_rainbow_path(g: &Graph, colouring: &EdgeColouring, path: &[Vertex]) -> Result<bool, RainbowError> {
    colouring.matches(g)?;
    if path.len() < 2 {
        return Err(RainbowError::NotAPath("a path needs at least two vertices".into()));
    }
    let mut seen = vec![false; g.vertex_count()];
    for &v in path {
        if v >= g.vertex_count() {
            return Err(RainbowError::VertexOutOfRange(v));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(RainbowError::NotAPath(format!("vertex {v} repeats")));
        }
    }
    let mut used = Vec::with_capacity(path.len() - 1);
    for w in path.windows(2) {
        let e = g
            .edge_index(w[0], w[1])
            .ok_or_else(|| RainbowError::NotAPath(format!("{{{},{}}} is not an edge", w[0], w[1])))?;
        used.push(colouring.colour(e));
    }
    used.sort_unstable();
    Ok(used.windows(2).all(|w| w[0] != w[1]))
}

struct Found {
    path: Vec<Vertex>,
    internal: Vec<u64>,
}

fn disjoint(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & y == 0)
}

/// Picks `need` paths from `found[start..]`, pairwise disjoint and disjoint
/// from `mask`, preferring earlier indices.
fn pick(found: &[Found], need: usize, start: usize, mask: &mut Vec<u64>, chosen: &mut Vec<usize>) -> bool {
    if need == 0 {
        return true;
    }
    for i in start..found.len() {
        if !disjoint(&found[i].internal, mask) {
            continue;
        }
        for (m, w) in mask.iter_mut().zip(&found[i].internal) {
            *m |= w;
        }
        chosen.push(i);
        if pick(found, need - 1, i + 1, mask, chosen) {
            return true;
        }
        chosen.pop();
        for (m, w) in mask.iter_mut().zip(&found[i].internal) {
            *m &= !w;
        }
    }
    false
}

/// Depth-first enumeration of rainbow `source`–`target` paths of one exact
/// length, in lexicographic order of vertex sequences.
struct PathWalker<'a> {
    g: &'a Graph,
    colouring: &'a EdgeColouring,
    target: Vertex,
    dist_to_target: Vec<Option<usize>>,
    path: Vec<Vertex>,
    on_path: Vec<bool>,
    colour_used: Vec<bool>,
}

impl PathWalker<'_> {
    fn walk(&mut self, remaining: usize, visit: &mut dyn FnMut(&[Vertex]) -> bool) -> bool {
        let cur = *self.path.last().unwrap();
        for &(w, e) in self.g.incident(cur) {
            let colour = self.colouring.colour(e) as usize;
            if self.on_path[w] || self.colour_used[colour] {
                continue;
            }
            if w == self.target {
                if remaining == 1 {
                    self.path.push(w);
                    let stop = visit(&self.path);
                    self.path.pop();
                    if stop {
                        return true;
                    }
                }
                continue;
            }
            if remaining == 1 || self.dist_to_target[w].is_none_or(|d| d > remaining - 1) {
                continue;
            }
            self.path.push(w);
            self.on_path[w] = true;
            self.colour_used[colour] = true;
            let stop = self.walk(remaining - 1, visit);
            self.colour_used[colour] = false;
            self.on_path[w] = false;
            self.path.pop();
            if stop {
                return true;
            }
        }
        false
    }
}

/// Finds `k` internally disjoint rainbow `u`–`v` paths, or `None` if no such
/// system exists. Rainbow paths are enumerated by increasing length (at most
/// the colour count) and lexicographically within a length; the returned
/// system is the first one completed in that order, listed in that order.
pub fn find_disjoint_rainbow_paths(
    g: &Graph,
    colouring: &EdgeColouring,
    u: Vertex,
    v: Vertex,
    k: usize,
) -> Result<Option<Vec<Vec<Vertex>>>, RainbowError> {
    colouring.matches(g)?;
    let n = g.vertex_count();
    for w in [u, v] {
        if w >= n {
            return Err(RainbowError::VertexOutOfRange(w));
        }
    }
    if u == v {
        return Err(RainbowError::SameEndpoints(u));
    }
    if k == 0 {
        return Err(RainbowError::ZeroK);
    }
    let dist_to_target = distances_from(g, v);
    let Some(shortest) = dist_to_target[u] else {
        return Ok(None);
    };
    let cap = (colouring.colour_count() as usize).min(n - 1);

    let words = n.div_ceil(64);
    let mut walker = PathWalker {
        g,
        colouring,
        target: v,
        dist_to_target,
        path: vec![u],
        on_path: vec![false; n],
        colour_used: vec![false; colouring.colour_count() as usize + 1],
    };
    walker.on_path[u] = true;

    let mut found: Vec<Found> = Vec::new();
    let mut system = None;
    for length in shortest..=cap {
        walker.walk(length, &mut |path| {
            let mut internal = vec![0u64; words];
            for &x in &path[1..path.len() - 1] {
                internal[x / 64] |= 1 << (x % 64);
            }
            let mut mask = internal.clone();
            let mut chosen = Vec::new();
            if pick(&found, k - 1, 0, &mut mask, &mut chosen) {
                let mut paths: Vec<Vec<Vertex>> = chosen.iter().map(|&i| found[i].path.clone()).collect();
                paths.push(path.to_vec());
                system = Some(paths);
                return true;
            }
            found.push(Found {
                path: path.to_vec(),
                internal,
            });
            false
        });
        if system.is_some() {
            break;
        }
    }
    Ok(system)
}

/// Proof of rainbow k-connectivity: a path system for every vertex pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RainbowCertificate {
    pub k: usize,
    /// `(u, v, paths)` with `u < v`, in lexicographic pair order.
    pub pairs: Vec<(Vertex, Vertex, Vec<Vec<Vertex>>)>,
}

impl RainbowCertificate {
    /// Re-checks every pair independently of the search: full pair coverage,
    /// `k` distinct paths per pair that are simple, use graph edges, are
    /// rainbow and meet only at the endpoints.
    pub fn check(&self, g: &Graph, colouring: &EdgeColouring) -> Result<(), String> {
        let n = g.vertex_count();
        let expected: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let got: Vec<(Vertex, Vertex)> = self.pairs.iter().map(|&(u, v, _)| (u, v)).collect();
        if got != expected {
            return Err("certificate does not list every vertex pair exactly once".into());
        }
        for (u, v, paths) in &self.pairs {
            if paths.len() != self.k {
                return Err(format!("pair {u}-{v} has {} paths, expected {}", paths.len(), self.k));
            }
            let mut owner = vec![usize::MAX; n];
            for (i, path) in paths.iter().enumerate() {
                if path.first() != Some(u) || path.last() != Some(v) {
                    return Err(format!("pair {u}-{v}: path {path:?} has wrong endpoints"));
                }
                let mut colours = Vec::new();
                for w in path.windows(2) {
                    let e = g
                        .edge_index(w[0], w[1])
                        .ok_or_else(|| format!("pair {u}-{v}: {{{},{}}} is not an edge", w[0], w[1]))?;
                    colours.push(colouring.colours()[e]);
                }
                colours.sort_unstable();
                if colours.windows(2).any(|w| w[0] == w[1]) {
                    return Err(format!("pair {u}-{v}: path {path:?} repeats a colour"));
                }
                if path.len() == 2 && paths.iter().filter(|p| p.len() == 2).count() > 1 {
                    return Err(format!("pair {u}-{v}: the direct edge is used twice"));
                }
                for &x in &path[1..path.len() - 1] {
                    if x == *u || x == *v || owner[x] != usize::MAX {
                        return Err(format!("pair {u}-{v}: vertex {x} is shared or repeated"));
                    }
                    owner[x] = i;
                }
            }
        }
        Ok(())
    }
}

impl Serialize for RainbowCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.pairs.len()))?;
        for (u, v, paths) in &self.pairs {
            map.serialize_entry(&format!("{u}-{v}"), paths)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Connected(RainbowCertificate),
    /// The lexicographically first pair without a rainbow path system.
    Fails {
        u: Vertex,
        v: Vertex,
    },
}

impl Verdict {
    pub fn is_connected(&self) -> bool {
        matches!(self, Verdict::Connected(_))
    }
}

fn all_pairs(n: usize) -> Vec<(Vertex, Vertex)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Decides rainbow k-connectivity, checking pairs in lexicographic order.
pub fn verify_rainbow_k_connected(g: &Graph, colouring: &EdgeColouring, k: usize) -> Result<Verdict, RainbowError> {
    colouring.matches(g)?;
    if k == 0 {
        return Err(RainbowError::ZeroK);
    }
    let mut pairs = Vec::new();
    for (u, v) in all_pairs(g.vertex_count()) {
        match find_disjoint_rainbow_paths(g, colouring, u, v, k)? {
            Some(paths) => pairs.push((u, v, paths)),
            None => return Ok(Verdict::Fails { u, v }),
        }
    }
    Ok(Verdict::Connected(RainbowCertificate { k, pairs }))
}

/// Same verdict as [`verify_rainbow_k_connected`], with the pairs checked on
/// the current rayon pool.
pub fn verify_rainbow_k_connected_par(g: &Graph, colouring: &EdgeColouring, k: usize) -> Result<Verdict, RainbowError> {
    colouring.matches(g)?;
    if k == 0 {
        return Err(RainbowError::ZeroK);
    }
    let results: Vec<_> = all_pairs(g.vertex_count())
        .into_par_iter()
        .map(|(u, v)| find_disjoint_rainbow_paths(g, colouring, u, v, k).map(|p| (u, v, p)))
        .collect::<Result<_, _>>()?;
    let mut pairs = Vec::with_capacity(results.len());
    for (u, v, paths) in results {
        match paths {
            Some(paths) => pairs.push((u, v, paths)),
            None => return Ok(Verdict::Fails { u, v }),
        }
    }
    Ok(Verdict::Connected(RainbowCertificate { k, pairs }))
}
