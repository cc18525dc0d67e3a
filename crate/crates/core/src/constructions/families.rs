use std::collections::BTreeMap;

use super::{ConstructionSpec, Family};
use crate::graph::{Graph, Vertex};
use crate::rainbow::{Colour, EdgeColouring};

/// Collects coloured edges; colour 0 means "uncoloured family".
struct Builder {
    n: usize,
    edges: Vec<(Vertex, Vertex, Colour)>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder { n, edges: Vec::new() }
    }

    fn add(&mut self, u: Vertex, v: Vertex, colour: Colour) {
        self.edges.push((u, v, colour));
    }

    fn path(&mut self, vertices: &[Vertex]) {
        for w in vertices.windows(2) {
            self.add(w[0], w[1], 0);
        }
    }

    fn clique(&mut self, vertices: &[Vertex]) {
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                self.add(u, v, 0);
            }
        }
    }

    fn graph(&self) -> Graph {
        Graph::new(self.n, self.edges.iter().map(|&(u, v, _)| (u, v))).expect("family layouts are simple graphs")
    }

    fn finish(self, colour_count: Option<Colour>) -> (Graph, Option<EdgeColouring>) {
        let g = self.graph();
        let colouring = colour_count.map(|r| {
            let mut colours = vec![0; g.edge_count()];
            for &(u, v, c) in &self.edges {
                colours[g.edge_index(u, v).unwrap()] = c;
            }
            EdgeColouring::new(&g, colours, r).expect("family colourings are complete and in range")
        });
        (g, colouring)
    }
}

const X: Vertex = 0;
const Y: Vertex = 1;

/// Colours an ear `x = p[0], ..., p[last] = y` with the given colours in
/// order from x.
fn ear(b: &mut Builder, vertices: &[Vertex], colours: &[Colour]) {
    debug_assert_eq!(vertices.len(), colours.len() + 1);
    for (w, &c) in vertices.windows(2).zip(colours) {
        b.add(w[0], w[1], c);
    }
}

pub(super) fn build(
    spec: &ConstructionSpec,
    derived: &BTreeMap<&'static str, usize>,
) -> (Graph, Option<EdgeColouring>) {
    let n = spec.n;
    let d = |key: &str| derived[key];
    let mut b = Builder::new(n);
    match spec.family {
        // Circulant on 0..n: i ~ i±1..±k/2, plus for odd k the "diameters"
        // i ~ i+n/2 (n even) or i ~ i+(n+1)/2 for i = 0..=(n-1)/2 (n odd).
        Family::Harary => {
            let k = spec.k.unwrap();
            for i in 0..n {
                for off in 1..=k / 2 {
                    b.add(i, (i + off) % n, 0);
                }
            }
            if k % 2 == 1 {
                if n.is_multiple_of(2) {
                    (0..n / 2).for_each(|i| b.add(i, i + n / 2, 0));
                } else {
                    (0..=(n - 1) / 2).for_each(|i| b.add(i, (i + n.div_ceil(2)) % n, 0));
                }
            }
            b.finish(None)
        }

        // A = 0..a (u_1..u_a), B = a..n. Clique on A in colour 1; edge u_i v
        // gets component i of the (1,2)-vector of v.
        Family::T2R2 => {
            let a = d("a");
            let vectors = t2r2_vectors(a, n - a);
            for i in 0..a {
                for j in i + 1..a {
                    b.add(i, j, 1);
                }
            }
            for (idx, vector) in vectors.iter().enumerate() {
                for (i, &c) in vector.iter().enumerate() {
                    b.add(i, a + idx, c);
                }
            }
            b.finish(Some(2))
        }

        // x = 0, y = 1; copy i of F6 is a, b, c, d = 2+4i .. 5+4i; then the
        // r-5 internal vertices of the (r-4)-ear from x towards y; then the
        // middle vertices w_1..w_b of the 2-ears.
        Family::Gnr => {
            let (r, m, extra) = (spec.r.unwrap(), d("m"), d("b"));
            for i in 0..m {
                let [a, bb, c, dd] = [2 + 4 * i, 3 + 4 * i, 4 + 4 * i, 5 + 4 * i];
                for (u, v, col) in [
                    (X, a, 1),
                    (X, c, 2),
                    (Y, a, 2),
                    (Y, c, 1),
                    (a, bb, 3),
                    (bb, c, 4),
                    (a, dd, 5),
                    (dd, c, 6),
                ] {
                    b.add(u, v, col);
                }
            }
            let first = 2 + 4 * m;
            let mut path = vec![X];
            path.extend(first..first + r - 5);
            path.push(Y);
            let mut colours = vec![5];
            colours.extend(7..=r as Colour);
            colours.push(6);
            ear(&mut b, &path, &colours);
            let w0 = first + r - 5;
            for j in 0..extra {
                let (cx, cy) = if j == 2 {
                    (4, 3)
                } else {
                    (j as Colour + 1, j as Colour + 1)
                };
                b.add(X, w0 + j, cx);
                b.add(Y, w0 + j, cy);
            }
            b.finish(Some(r as Colour))
        }

        // x = 0, y = 1; copy i of F5 is a, b, c = 2+3i .. 4+3i; the 3-ear
        // x p1 p2 y with p1, p2 = 2+3m, 3+3m; then w_1..w_b.
        Family::Gn5 => {
            let (m, extra) = (d("m"), d("b"));
            for i in 0..m {
                let [a, bb, c] = [2 + 3 * i, 3 + 3 * i, 4 + 3 * i];
                for (u, v, col) in [
                    (X, a, 1),
                    (X, c, 2),
                    (Y, a, 2),
                    (Y, c, 1),
                    (a, bb, 3),
                    (bb, c, 4),
                    (a, c, 5),
                ] {
                    b.add(u, v, col);
                }
            }
            let p = 2 + 3 * m;
            ear(&mut b, &[X, p, p + 1, Y], &[3, 5, 4]);
            for j in 0..extra {
                let c = j as Colour + 1;
                b.add(X, p + 2 + j, c);
                b.add(Y, p + 2 + j, c);
            }
            b.finish(Some(5))
        }

        // x = 0, y = 1; copy i of F3 is a, c = 2+2i, 3+2i; for odd n the
        // 2-ear middle vertex is n-1.
        Family::Gn3 => {
            let (m, extra) = (d("m"), d("b"));
            for i in 0..m {
                let [a, c] = [2 + 2 * i, 3 + 2 * i];
                for (u, v, col) in [(X, a, 1), (X, c, 2), (Y, a, 2), (Y, c, 1), (a, c, 3)] {
                    b.add(u, v, col);
                }
            }
            if extra == 1 {
                b.add(X, n - 1, 3);
                b.add(Y, n - 1, 3);
            }
            b.finish(Some(spec.r.unwrap() as Colour))
        }

        // Cycle v_1..v_{n-1} = 0..n-2, x = n-1 joined to v_1, v_2.
        // c(v_i v_{i+1}) = i, c(x v_1) = 2, c(x v_2) = n-1.
        Family::G1 => {
            let len = n - 1;
            for i in 0..len {
                b.add(i, (i + 1) % len, i as Colour + 1);
            }
            b.add(n - 1, 0, 2);
            b.add(n - 1, 1, len as Colour);
            b.finish(Some(len as Colour))
        }

        // Cycle v_1..v_{n-2} = 0..n-3, x = n-2 joined to v_1, v_2, y = n-1
        // joined to v_2, v_3. c(v_i v_{i+1}) = i, c(x v_1) = 2,
        // c(x v_2) = n-2, c(y v_2) = 3, c(y v_3) = 1.
        Family::G2 => {
            let len = n - 2;
            for i in 0..len {
                b.add(i, (i + 1) % len, i as Colour + 1);
            }
            b.add(n - 2, 0, 2);
            b.add(n - 2, 1, len as Colour);
            b.add(n - 1, 1, 3);
            b.add(n - 1, 2, 1);
            b.finish(Some(len as Colour))
        }

        // Ear v_0..v_{r-1} = 0..r-1, u_1..u_{n-r} = r..n-1; clique on
        // {v_0, v_{r-1}, u_j}.
        Family::S2a => {
            let r = spec.r.unwrap();
            b.path(&(0..r).collect::<Vec<_>>());
            let mut clique = vec![0, r - 1];
            clique.extend(r..n);
            b.clique(&clique);
            b.finish(None)
        }

        // Ear v_0..v_{r-2} = 0..r-2, u_1..u_{n-r+1} = r-1..n-1; clique on
        // {v_0, v_{r-2}, u_j} minus the edge v_0 v_{r-2}.
        Family::S2b => {
            let r = spec.r.unwrap();
            b.path(&(0..r - 1).collect::<Vec<_>>());
            let mut clique = vec![0];
            clique.extend(r - 1..n);
            b.clique(&clique);
            (r - 1..n).for_each(|u| b.add(r - 2, u, 0));
            b.finish(None)
        }

        // Common vertex 0; cycle j runs 0, 1+j(r-1), ..., (j+1)(r-1), 0;
        // the remaining vertices hang off 0.
        Family::T1Cycles => {
            let (r, cycles) = (spec.r.unwrap(), d("cycles"));
            for j in 0..cycles {
                let mut cycle = vec![0];
                cycle.extend(1 + j * (r - 1)..=(j + 1) * (r - 1));
                cycle.push(0);
                b.path(&cycle);
            }
            (1 + cycles * (r - 1)..n).for_each(|v| b.add(0, v, 0));
            b.finish(None)
        }

        // K_{a,n-a} with parts 0..a and a..n.
        Family::T1Bipartite => {
            let a = d("a");
            (0..a).for_each(|u| (a..n).for_each(|v| b.add(u, v, 0)));
            b.finish(None)
        }

        // x = 0, y = 1, the rest of the clique 2..n-r+2, then the path
        // x, n-r+2, ..., n-1 on r-1 vertices.
        Family::S1CliquePath => {
            let r = spec.r.unwrap();
            let clique: Vec<_> = (0..n - r + 2).collect();
            b.clique(&clique);
            b.edges.retain(|&(u, v, _)| (u, v) != (X, Y));
            let mut path = vec![X];
            path.extend(n - r + 2..n);
            b.path(&path);
            b.finish(None)
        }

        // n = 4: colour 1 on the path 0-1-2-3, colour 2 on 2-0-3-1.
        // n >= 5: colour 1 on the Hamilton cycle 0, 1, ..., n-1, colour 2
        // elsewhere.
        Family::KnRc2 => {
            for u in 0..n {
                for v in u + 1..n {
                    let red = v == u + 1 || (n >= 5 && (u, v) == (0, n - 1));
                    b.add(u, v, if red { 1 } else { 2 });
                }
            }
            b.finish(Some(2))
        }
    }
}

/// The (1,2)-vectors of length `a` given to the `count` vertices of B: first
/// the vectors with 2s exactly in positions 1 and j (j = 2..a), then the
/// other vectors with a positive even number of 2s, in lexicographic order.
pub(crate) fn t2r2_vectors(a: usize, count: usize) -> Vec<Vec<Colour>> {
    let mandatory: Vec<Vec<Colour>> = (1..a)
        .map(|j| (0..a).map(|i| if i == 0 || i == j { 2 } else { 1 }).collect())
        .collect();
    let mut out = mandatory.clone();
    for code in 0u64..1 << a {
        if out.len() >= count {
            break;
        }
        // bit (a-1-i) of code is position i, so counting up is lex order
        let v: Vec<Colour> = (0..a).map(|i| 1 + (code >> (a - 1 - i) & 1) as Colour).collect();
        let twos = v.iter().filter(|&&c| c == 2).count();
        if twos > 0 && twos % 2 == 0 && !mandatory.contains(&v) {
            out.push(v);
        }
    }
    out.truncate(count);
    out
}
