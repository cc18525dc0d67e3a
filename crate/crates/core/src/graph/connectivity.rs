use std::collections::VecDeque;

use super::{Graph, GraphError, Vertex};

/// BFS distances from `source`; `None` marks unreachable vertices.
pub fn distances_from(g: &Graph, source: Vertex) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for w in g.neighbours(u) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn is_connected(g: &Graph) -> bool {
    g.vertex_count() == 0 || distances_from(g, 0).iter().all(Option::is_some)
}

/// Maximum pairwise shortest-path distance.
pub fn diameter(g: &Graph) -> Result<usize, GraphError> {
    if g.vertex_count() == 0 {
        return Ok(0);
    }
    let mut best = 0;
    for s in 0..g.vertex_count() {
        for d in distances_from(g, s) {
            best = best.max(d.ok_or(GraphError::Disconnected)?);
        }
    }
    Ok(best)
}

/// Unit-capacity flow network with every vertex split into an in/out pair,
/// so that augmenting paths are internally vertex-disjoint.
struct SplitNetwork {
    head: Vec<usize>,
    cap: Vec<u32>,
    out: Vec<Vec<usize>>,
}

impl SplitNetwork {
    fn new(g: &Graph, s: Vertex, t: Vertex) -> Self {
        let mut net = SplitNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            out: vec![Vec::new(); 2 * g.vertex_count()],
        };
        let big = g.vertex_count() as u32;
        for v in 0..g.vertex_count() {
            let c = if v == s || v == t { big } else { 1 };
            net.arc(2 * v, 2 * v + 1, c);
        }
        for &(u, v) in g.edges() {
            net.arc(2 * u + 1, 2 * v, 1);
            net.arc(2 * v + 1, 2 * u, 1);
        }
        net
    }

    fn arc(&mut self, from: usize, to: usize, cap: u32) {
        self.out[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.out[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut via = vec![usize::MAX; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for &a in &self.out[x] {
                let y = self.head[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    via[y] = a;
                    if y == sink {
                        let mut cur = sink;
                        while cur != source {
                            let a = via[cur];
                            self.cap[a] -= 1;
                            self.cap[a ^ 1] += 1;
                            cur = self.head[a ^ 1];
                        }
                        return true;
                    }
                    queue.push_back(y);
                }
            }
        }
        false
    }
}

/// Maximum number of internally vertex-disjoint `s`–`t` paths. The edge
/// `st`, when present, counts as one of them.
pub fn local_connectivity(g: &Graph, s: Vertex, t: Vertex) -> usize {
    assert_ne!(s, t);
    let mut net = SplitNetwork::new(g, s, t);
    let mut flow = 0;
    while net.augment(2 * s + 1, 2 * t) {
        flow += 1;
    }
    flow
}

/// Largest `k` such that `g` is `k`-connected; `n - 1` for `K_n`, `0` when
/// disconnected.
pub fn vertex_connectivity(g: &Graph) -> Result<usize, GraphError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(GraphError::TooFewVertices { needed: 2, n });
    }
    if !is_connected(g) {
        return Ok(0);
    }
    let mut best = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(local_connectivity(g, s, t));
                if best == 0 {
                    return Ok(0);
                }
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Smallest separating set by brute force over vertex subsets.
    fn cut_oracle(g: &Graph) -> usize {
        let n = g.vertex_count();
        let mut best = n - 1;
        for mask in 0u32..(1 << n) {
            let removed = mask.count_ones() as usize;
            if removed >= best || n - removed < 2 {
                continue;
            }
            let keep: Vec<Vertex> = (0..n).filter(|v| mask & (1 << v) == 0).collect();
            let mut seen = vec![false; n];
            let mut stack = vec![keep[0]];
            seen[keep[0]] = true;
            while let Some(u) = stack.pop() {
                for w in g.neighbours(u) {
                    if mask & (1 << w) == 0 && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            if keep.iter().any(|&v| !seen[v]) {
                best = removed;
            }
        }
        best
    }

    #[test]
    fn small_examples() {
        assert_eq!(vertex_connectivity(&Graph::complete(5)), Ok(4));
        assert_eq!(vertex_connectivity(&Graph::cycle(6)), Ok(2));
        assert_eq!(vertex_connectivity(&Graph::path(4)), Ok(1));
        assert_eq!(vertex_connectivity(&Graph::empty(3)), Ok(0));
        assert!(vertex_connectivity(&Graph::empty(1)).is_err());
        assert_eq!(diameter(&Graph::complete(4)), Ok(1));
        assert_eq!(diameter(&Graph::cycle(6)), Ok(3));
        assert_eq!(diameter(&Graph::cycle(5)), Ok(2));
        assert_eq!(diameter(&Graph::empty(2)), Err(GraphError::Disconnected));
    }

    #[test]
    fn diameter_of_complete_and_cycle() {
        for n in 3..=12 {
            assert_eq!(diameter(&Graph::complete(n)), Ok(1));
            assert_eq!(diameter(&Graph::cycle(n)), Ok(n / 2));
        }
    }

    #[test]
    fn local_connectivity_counts_direct_edge() {
        let k4 = Graph::complete(4);
        assert_eq!(local_connectivity(&k4, 0, 1), 3);
        let c5 = Graph::cycle(5);
        assert_eq!(local_connectivity(&c5, 0, 2), 2);
        assert_eq!(local_connectivity(&c5, 0, 1), 2);
    }

    #[test]
    fn agrees_with_cut_enumeration_on_all_labelled_graphs() {
        for n in 2..=6usize {
            let pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u32..(1 << pairs.len()) {
                let g = Graph::new(
                    n,
                    pairs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, &p)| p),
                )
                .unwrap();
                assert_eq!(vertex_connectivity(&g).unwrap(), cut_oracle(&g), "{:?}", g.edges());
            }
        }
    }
}
