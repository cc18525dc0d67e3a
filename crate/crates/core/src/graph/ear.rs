use serde::{Deserialize, Serialize};

use super::{vertex_connectivity, Graph, Vertex};

/// A cycle followed by ears, each ear a path whose two endpoints lie in the
/// graph built so far and whose internal vertices and edges are all new.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EarDecomposition {
    /// Cycle vertices in order; the closing edge back to the first vertex is implicit.
    pub base_cycle: Vec<Vertex>,
    pub ears: Vec<Vec<Vertex>>,
}

impl EarDecomposition {
    pub fn ear_count(&self) -> usize {
        self.ears.len()
    }

    /// All edges of the cycle and the ears, normalised `u < v`, in build order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let c = &self.base_cycle;
        let cycle = (0..c.len()).map(|i| (c[i], c[(i + 1) % c.len()]));
        let ears = self.ears.iter().flat_map(|e| e.windows(2).map(|w| (w[0], w[1])));
        cycle.chain(ears).map(|(u, v)| (u.min(v), u.max(v))).collect()
    }

    /// Checks every ear invariant and that the pieces reassemble to exactly `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        let c = &self.base_cycle;
        if c.len() < 3 || c.iter().any(|&v| v >= n) {
            return false;
        }
        let mut built = vec![false; n];
        for &v in c {
            if std::mem::replace(&mut built[v], true) {
                return false;
            }
        }
        for ear in &self.ears {
            if ear.len() < 2 || ear.iter().any(|&v| v >= n) {
                return false;
            }
            let (first, last) = (ear[0], ear[ear.len() - 1]);
            if first == last || !built[first] || !built[last] {
                return false;
            }
            for &v in &ear[1..ear.len() - 1] {
                if std::mem::replace(&mut built[v], true) {
                    return false;
                }
            }
        }
        let mut edges = self.edges();
        let total = edges.len();
        edges.sort_unstable();
        edges.dedup();
        edges.len() == total && edges == g.edges()
    }
}

/// Is some vertex in `targets` reachable from `start` through vertices that
/// are not `blocked`? `start` itself is never a target.
fn reaches(g: &Graph, start: Vertex, blocked: &[bool], targets: &[bool]) -> bool {
    let mut seen = blocked.to_vec();
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for w in g.neighbours(u) {
            if targets[w] && w != start {
                return true;
            }
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    false
}

/// Ear decomposition of a 2-connected graph; `None` otherwise.
///
/// The result is canonical: the base cycle is the lexicographically least
/// cycle written as a vertex sequence (it therefore starts `0, min N(0)`),
/// and each subsequent ear is the lexicographically least ear available
/// given the ears chosen before it.
pub fn ear_decompose(g: &Graph) -> Option<EarDecomposition> {
    let n = g.vertex_count();
    if n < 3 || vertex_connectivity(g).ok()? < 2 {
        return None;
    }

    let mut in_h = vec![false; n];
    let mut cycle = vec![0];
    in_h[0] = true;
    loop {
        let cur = *cycle.last().unwrap();
        if cycle.len() >= 3 && g.has_edge(cur, 0) {
            break;
        }
        let next = g.neighbours(cur).filter(|&w| !in_h[w]).find(|&w| {
            // w must lead back to 0 without revisiting the cycle so far
            let mut targets = vec![false; n];
            for z in g.neighbours(0) {
                targets[z] = !in_h[z] && (cycle.len() > 1 || z != w);
            }
            let mut blocked = in_h.clone();
            blocked[w] = true;
            targets[w] && cycle.len() > 1 || reaches(g, w, &blocked, &targets)
        })?;
        in_h[next] = true;
        cycle.push(next);
    }

    let mut edge_used = vec![false; g.edge_count()];
    for (i, &u) in cycle.iter().enumerate() {
        let v = cycle[(i + 1) % cycle.len()];
        edge_used[g.edge_index(u, v).unwrap()] = true;
    }

    let mut ears = Vec::with_capacity(g.edge_count() - n);
    while let Some(start) = (0..n).find(|&v| in_h[v] && g.incident(v).iter().any(|&(_, e)| !edge_used[e])) {
        let mut ear = vec![start];
        let mut on_ear = vec![false; n];
        on_ear[start] = true;
        loop {
            let cur = *ear.last().unwrap();
            let (next, e) = *g.incident(cur).iter().find(|&&(w, e)| {
                if edge_used[e] || on_ear[w] {
                    return false;
                }
                if in_h[w] {
                    return true;
                }
                let blocked: Vec<bool> = (0..n).map(|x| in_h[x] || on_ear[x]).collect();
                let targets: Vec<bool> = (0..n).map(|x| in_h[x] && x != start).collect();
                reaches(g, w, &blocked, &targets)
            })?;
            edge_used[e] = true;
            ear.push(next);
            on_ear[next] = true;
            if in_h[next] {
                break;
            }
        }
        for &v in &ear {
            in_h[v] = true;
        }
        ears.push(ear);
    }

    Some(EarDecomposition {
        base_cycle: cycle,
        ears,
    })
}
