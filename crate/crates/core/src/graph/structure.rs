use serde::{Deserialize, Serialize};

use super::{Graph, GraphError, Vertex};

/// Two hubs joined by three internally disjoint paths. `path_sizes` counts
/// vertices on each path including both hubs, largest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThetaShape {
    pub hub_x: Vertex,
    pub hub_y: Vertex,
    pub path_sizes: [usize; 3],
}

impl ThetaShape {
    pub fn vertex_count(&self) -> usize {
        self.path_sizes.iter().sum::<usize>() - 4
    }
}

/// Builds the Θ-graph with the given path sizes. Hubs are `x = 0` and
/// `y = 1`; internal vertices are numbered consecutively path by path, each
/// path walked from `x` towards `y`.
pub fn theta_graph(sizes: [usize; 3]) -> Result<Graph, GraphError> {
    if sizes.iter().any(|&q| q < 2) || sizes.iter().filter(|&&q| q == 2).count() > 1 {
        return Err(GraphError::Structure(
            "theta paths need at least 2 vertices and at most one may be a single edge",
        ));
    }
    let n = sizes.iter().sum::<usize>() - 4;
    let mut edges = Vec::new();
    let mut next = 2;
    for q in sizes {
        let mut prev = 0;
        for _ in 0..q - 2 {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    Graph::new(n, edges)
}

/// Recognises Θ-graphs: exactly two degree-3 vertices, every other vertex
/// of degree 2, and the whole graph is the three hub-to-hub paths.
pub fn classify_theta(g: &Graph) -> Option<ThetaShape> {
    let n = g.vertex_count();
    let mut hubs = Vec::new();
    for v in 0..n {
        match g.degree(v) {
            2 => {}
            3 => hubs.push(v),
            _ => return None,
        }
    }
    let [x, y] = hubs[..] else { return None };

    let mut sizes = [0; 3];
    for (slot, start) in g.neighbours(x).enumerate() {
        let (mut prev, mut cur, mut count) = (x, start, 2);
        while cur != y {
            if cur == x || count > n {
                return None;
            }
            let next = g.neighbours(cur).find(|&w| w != prev)?;
            prev = cur;
            cur = next;
            count += 1;
        }
        sizes[slot] = count;
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    if sizes.iter().sum::<usize>() != n + 4 || sizes[1] < 3 {
        return None;
    }
    Some(ThetaShape {
        hub_x: x,
        hub_y: y,
        path_sizes: sizes,
    })
}

/// Maximal paths whose internal vertices all have degree 2 and whose two
/// endpoints have degree at least 3. Only paths with at least one internal
/// vertex are returned, each oriented so its vertex sequence is the
/// lexicographically smaller of the two readings, sorted ascending.
pub fn degree_two_segments(g: &Graph) -> Result<Vec<Vec<Vertex>>, GraphError> {
    let n = g.vertex_count();
    if (0..n).any(|v| g.degree(v) < 2) {
        return Err(GraphError::Structure("degree-two segments need minimum degree 2"));
    }
    if (0..n).all(|v| g.degree(v) == 2) {
        return Err(GraphError::Structure(
            "a cycle has no branch vertices to anchor segments",
        ));
    }
    let mut segments = Vec::new();
    for a in (0..n).filter(|&v| g.degree(v) >= 3) {
        for w in g.neighbours(a).filter(|&w| g.degree(w) == 2) {
            let mut path = vec![a, w];
            let (mut prev, mut cur) = (a, w);
            while g.degree(cur) == 2 {
                let next = g.neighbours(cur).find(|&z| z != prev).unwrap();
                path.push(next);
                prev = cur;
                cur = next;
            }
            if path.iter().le(path.iter().rev()) {
                segments.push(path);
            }
        }
    }
    segments.sort();
    Ok(segments)
}
