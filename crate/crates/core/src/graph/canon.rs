//! Canonical labelling by individualisation-refinement.
//!
//! The ordered partition of the vertices is refined to an equitable one
//! (cells split by neighbour counts into each cell, subcells ordered by that
//! count). While a cell has more than one vertex, the first such cell is
//! branched on by individualising each of its vertices in turn. Every leaf
//! fixes a labelling; the canonical form is the relabelled graph whose
//! adjacency rows are lexicographically least over all leaves. No
//! automorphism pruning is done, which is fine at the sizes this crate
//! enumerates (n <= 10).

use super::{Graph, Vertex};

type Cells = Vec<Vec<Vertex>>;

fn rows(g: &Graph) -> Vec<u64> {
    let mut rows = vec![0u64; g.vertex_count()];
    for &(u, v) in g.edges() {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    }
    rows
}

fn refine(rows: &[u64], mut cells: Cells) -> Cells {
    let mut splitter = 0;
    while splitter < cells.len() {
        let mask = cells[splitter].iter().fold(0u64, |m, &v| m | 1 << v);
        let mut next = Vec::with_capacity(cells.len());
        let mut split_any = false;
        for cell in cells {
            if cell.len() == 1 {
                next.push(cell);
                continue;
            }
            let mut keyed: Vec<(u32, Vertex)> = cell.iter().map(|&v| ((rows[v] & mask).count_ones(), v)).collect();
            keyed.sort_unstable();
            let before = next.len();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
            split_any |= next.len() - before > 1;
        }
        cells = next;
        // any split can refine earlier cells again
        splitter = if split_any { 0 } else { splitter + 1 };
    }
    cells
}

fn permuted_rows(rows: &[u64], order: &[Vertex]) -> Vec<u64> {
    let mut label = vec![0; rows.len()];
    for (i, &v) in order.iter().enumerate() {
        label[v] = i;
    }
    order
        .iter()
        .map(|&v| {
            let mut r = 0u64;
            let mut bits = rows[v];
            while bits != 0 {
                let w = bits.trailing_zeros() as usize;
                r |= 1 << label[w];
                bits &= bits - 1;
            }
            r
        })
        .collect()
}

fn search(rows: &[u64], cells: Cells, best: &mut Option<(Vec<u64>, Vec<Vertex>)>) {
    let cells = refine(rows, cells);
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let order: Vec<Vertex> = cells.into_iter().map(|c| c[0]).collect();
            let key = permuted_rows(rows, &order);
            if best.as_ref().is_none_or(|(k, _)| key < *k) {
                *best = Some((key, order));
            }
        }
        Some(target) => {
            for &v in &cells[target] {
                let mut branch = Vec::with_capacity(cells.len() + 1);
                branch.extend(cells[..target].iter().cloned());
                branch.push(vec![v]);
                branch.push(cells[target].iter().copied().filter(|&w| w != v).collect());
                branch.extend(cells[target + 1..].iter().cloned());
                search(rows, branch, best);
            }
        }
    }
}

/// `perm[v]` is the canonical label of vertex `v`.
pub fn canonical_labelling(g: &Graph) -> Vec<Vertex> {
    let n = g.vertex_count();
    assert!(n <= 64, "canonical labelling supports at most 64 vertices");
    if n == 0 {
        return Vec::new();
    }
    let rows = rows(g);
    let mut best = None;
    search(&rows, vec![(0..n).collect()], &mut best);
    let (_, order) = best.unwrap();
    let mut perm = vec![0; n];
    for (i, v) in order.into_iter().enumerate() {
        perm[v] = i;
    }
    perm
}

/// Isomorphic graphs map to identical canonical forms.
pub fn canonical_form(g: &Graph) -> Graph {
    g.relabel(&canonical_labelling(g))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_form(g: &Graph) -> Graph {
        fn permutations(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in permutations(n - 1) {
                for i in 0..n {
                    let mut q = p.clone();
                    q.insert(i, n - 1);
                    out.push(q);
                }
            }
            out
        }
        permutations(g.vertex_count())
            .into_iter()
            .map(|p| g.relabel(&p))
            .min_by(|a, b| a.edges().cmp(b.edges()))
            .unwrap()
    }

    #[test]
    fn relabelled_copies_share_a_form() {
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (1, 4)]).unwrap();
        let form = canonical_form(&g);
        for perm in [[5, 4, 3, 2, 1, 0], [1, 2, 3, 4, 5, 0], [2, 0, 4, 1, 5, 3]] {
            assert_eq!(canonical_form(&g.relabel(&perm)), form);
        }
    }

    #[test]
    fn distinguishes_cospectral_style_pairs() {
        // C6 vs two triangles: both 2-regular on 6 vertices
        let c6 = Graph::cycle(6);
        let two_triangles = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!is_isomorphic(&c6, &two_triangles));
        // K3,3 vs prism
        let k33 = Graph::new(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
        let prism = Graph::new(
            6,
            [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        assert!(!is_isomorphic(&k33, &prism));
    }

    #[test]
    fn class_counts_match_brute_force_on_five_vertices() {
        use std::collections::HashSet;
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        let mut fast = HashSet::new();
        let mut slow = HashSet::new();
        for mask in 0u32..(1 << pairs.len()) {
            let g = Graph::new(
                5,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &p)| p),
            )
            .unwrap();
            fast.insert(canonical_form(&g));
            slow.insert(brute_force_form(&g));
        }
        // 34 graphs on five vertices up to isomorphism
        assert_eq!(slow.len(), 34);
        assert_eq!(fast.len(), 34);
    }
}
