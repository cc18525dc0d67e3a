//! Exact rc_k by backtracking over edge colourings.
//!
//! Edges are coloured in index order. Colours are introduced in first-use
//! order (edge `i` may take at most one more than the largest colour used
//! before it), which removes colour-permutation symmetry without losing any
//! colouring class.
//!
//! Pruning uses an optimistic relaxation: an uncoloured edge is treated as
//! carrying a fresh colour, so a path is *potentially rainbow* when its
//! coloured edges have distinct colours and its length is at most `r`. Every
//! vertex pair keeps a witness, a system of `k` internally disjoint
//! potentially rainbow paths. Colouring an edge can only invalidate a witness
//! that uses that edge, and only the path through it; such pairs are searched
//! again and the branch dies when one has no system left. Uncolouring makes
//! the relaxation looser, so witnesses never need restoring on backtrack. At
//! a leaf every witness is an actual rainbow system.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{diameter, distances_from, vertex_connectivity, Graph, GraphError};
use crate::rainbow::{Colour, EdgeColouring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph is {connectivity}-connected, not {k}-connected")]
    NotKConnected { k: usize, connectivity: usize },
    #[error("search budget of {budget} nodes exceeded; the answer is unknown")]
    BudgetExceeded { budget: u64 },
    #[error("graph too large for the exact solver: {0}")]
    TooLarge(String),
    #[error("k must be at least 1")]
    ZeroK,
    #[error("at least one colour is needed")]
    ZeroColours,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolverConfig {
    /// Cap on colour assignments tried, per call to [`search_colouring`] and
    /// cumulatively for [`rc_exact`].
    pub node_budget: Option<u64>,
    /// Explore top-level branches on the current rayon pool. Results,
    /// including node counts, are identical to the sequential search.
    pub parallel: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub colouring: Option<EdgeColouring>,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExhaustedLevel {
    pub colours: Colour,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub k: usize,
    pub rc_value: Colour,
    pub witness: EdgeColouring,
    pub lower_bound_used: Colour,
    pub upper_bound_used: Colour,
    /// Colour counts below `rc_value` refuted by exhausted search.
    pub exhausted: Vec<ExhaustedLevel>,
    pub nodes_explored: u64,
}

const MAX_VERTICES: usize = 64;
const MAX_EDGES: usize = 128;
const FAR: u8 = u8::MAX;

type EdgeMask = u128;

#[derive(Clone, Default)]
struct Witness {
    paths: Vec<EdgeMask>,
    union: EdgeMask,
}

enum Flow {
    Found,
    Exhausted,
    OutOfBudget,
}

#[derive(Clone)]
struct Search<'a> {
    g: &'a Graph,
    k: usize,
    r: Colour,
    dist: Vec<Vec<u8>>,
    colours: Vec<Colour>,
    pairs: Vec<(usize, usize)>,
    witnesses: Vec<Witness>,
    nodes: u64,
    budget: u64,
    // prefix length at which to stop and record a branch instead of descending
    cut: Option<usize>,
    leaves: Vec<(Vec<Colour>, u64)>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, k: usize, r: Colour, budget: u64) -> Self {
        let n = g.vertex_count();
        let dist = (0..n)
            .map(|s| {
                distances_from(g, s)
                    .into_iter()
                    .map(|d| d.map_or(FAR, |d| d as u8))
                    .collect()
            })
            .collect();
        let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Search {
            g,
            k,
            r,
            dist,
            colours: vec![0; g.edge_count()],
            witnesses: vec![Witness::default(); pairs.len()],
            pairs,
            nodes: 0,
            budget,
            cut: None,
            leaves: Vec::new(),
        }
    }

    /// Fills every witness for the current colours; false if some pair has
    /// no potentially rainbow system at all.
    fn init_witnesses(&mut self) -> bool {
        for p in 0..self.pairs.len() {
            let (u, v) = self.pairs[p];
            match self.find_system(u, v) {
                Some(w) => self.witnesses[p] = w,
                None => return false,
            }
        }
        true
    }

    fn path_ok(&self, mut path: EdgeMask) -> bool {
        let mut seen: u128 = 0;
        while path != 0 {
            let e = path.trailing_zeros() as usize;
            path &= path - 1;
            let c = self.colours[e];
            if c != 0 {
                let bit = 1u128 << (c - 1);
                if seen & bit != 0 {
                    return false;
                }
                seen |= bit;
            }
        }
        true
    }

    /// Repairs witnesses after edge `e` got its colour.
    fn consistent_after(&mut self, e: usize) -> bool {
        let bit = 1u128 << e;
        for p in 0..self.pairs.len() {
            let w = &self.witnesses[p];
            if w.union & bit == 0 {
                continue;
            }
            let path = *w.paths.iter().find(|&&m| m & bit != 0).unwrap();
            if self.path_ok(path) {
                continue;
            }
            let (u, v) = self.pairs[p];
            match self.find_system(u, v) {
                Some(w) => self.witnesses[p] = w,
                None => return false,
            }
        }
        true
    }

    fn find_system(&self, u: usize, v: usize) -> Option<Witness> {
        let n = self.g.vertex_count();
        let longest = (self.r as usize).min(n - 1);
        let shortest = self.dist[u][v] as usize;
        if shortest > longest {
            return None;
        }
        let mut walk = PathWalk {
            search: self,
            target: v,
            found: Vec::new(),
            system: None,
        };
        for length in shortest..=longest {
            if walk.extend(u, length, 1 << u, 0, 0, 0) {
                break;
            }
        }
        walk.system.map(|paths| Witness {
            union: paths.iter().fold(0, |a, &m| a | m),
            paths,
        })
    }

    fn dfs(&mut self, i: usize, max_used: Colour) -> Flow {
        if i == self.colours.len() {
            return Flow::Found;
        }
        if self.cut == Some(i) {
            self.leaves.push((self.colours[..i].to_vec(), self.nodes));
            return Flow::Exhausted;
        }
        for c in 1..=(max_used + 1).min(self.r) {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Flow::OutOfBudget;
            }
            self.colours[i] = c;
            if self.consistent_after(i) {
                match self.dfs(i + 1, max_used.max(c)) {
                    Flow::Exhausted => {}
                    other => return other,
                }
            }
        }
        self.colours[i] = 0;
        Flow::Exhausted
    }
}

struct PathWalk<'s, 'a> {
    search: &'s Search<'a>,
    target: usize,
    // (internal vertex mask, edge mask) of every path seen so far
    found: Vec<(u64, EdgeMask)>,
    system: Option<Vec<EdgeMask>>,
}

impl PathWalk<'_, '_> {
    /// Extends the walk at `cur` by exactly `remaining` edges towards the
    /// target; true once a system is complete.
    fn extend(
        &mut self,
        cur: usize,
        remaining: usize,
        on_path: u64,
        used: u128,
        edges: EdgeMask,
        internal: u64,
    ) -> bool {
        let s = self.search;
        for &(w, e) in s.g.incident(cur) {
            let c = s.colours[e];
            let cbit = if c == 0 { 0 } else { 1u128 << (c - 1) };
            if on_path >> w & 1 == 1 || used & cbit != 0 {
                continue;
            }
            if w == self.target {
                if remaining == 1 && self.complete(internal, edges | 1 << e) {
                    return true;
                }
                continue;
            }
            if remaining == 1 || s.dist[w][self.target] as usize > remaining - 1 {
                continue;
            }
            if self.extend(
                w,
                remaining - 1,
                on_path | 1 << w,
                used | cbit,
                edges | 1 << e,
                internal | 1 << w,
            ) {
                return true;
            }
        }
        false
    }

    fn complete(&mut self, internal: u64, edges: EdgeMask) -> bool {
        let mut chosen = Vec::with_capacity(self.search.k);
        if pick(&self.found, self.search.k - 1, 0, internal, &mut chosen) {
            let mut paths: Vec<EdgeMask> = chosen.iter().map(|&i| self.found[i].1).collect();
            paths.push(edges);
            self.system = Some(paths);
            return true;
        }
        self.found.push((internal, edges));
        false
    }
}

fn pick(found: &[(u64, EdgeMask)], need: usize, start: usize, mask: u64, chosen: &mut Vec<usize>) -> bool {
    if need == 0 {
        return true;
    }
    for i in start..found.len() {
        if found[i].0 & mask != 0 {
            continue;
        }
        chosen.push(i);
        if pick(found, need - 1, i + 1, mask | found[i].0, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

fn check_input(g: &Graph, k: usize) -> Result<(), SolveError> {
    if k == 0 {
        return Err(SolveError::ZeroK);
    }
    if g.vertex_count() > MAX_VERTICES {
        return Err(SolveError::TooLarge(format!(
            "{} vertices (limit {MAX_VERTICES})",
            g.vertex_count()
        )));
    }
    if g.edge_count() > MAX_EDGES {
        return Err(SolveError::TooLarge(format!(
            "{} edges (limit {MAX_EDGES})",
            g.edge_count()
        )));
    }
    let connectivity = vertex_connectivity(g)?;
    if connectivity < k {
        return Err(SolveError::NotKConnected { k, connectivity });
    }
    Ok(())
}

// Prefix length for the parallel split.
const SPLIT_DEPTH: usize = 7;

/// Finds a rainbow k-connected colouring with colours `1..=r`, or proves
/// there is none. The colouring returned is the first in the search order
/// (edges by index, smaller colours first, first-use canonical).
pub fn search_colouring(g: &Graph, k: usize, r: Colour, config: &SolverConfig) -> Result<SearchOutcome, SolveError> {
    check_input(g, k)?;
    if r == 0 {
        return Err(SolveError::ZeroColours);
    }
    let m = g.edge_count();
    // first-use order never reaches more than m colours
    let r_eff = r.min(m.max(1) as Colour);
    let budget = config.node_budget.unwrap_or(u64::MAX);
    let out_of_budget = || SolveError::BudgetExceeded { budget };

    let mut search = Search::new(g, k, r_eff, budget);
    if !search.init_witnesses() {
        return Ok(SearchOutcome {
            colouring: None,
            nodes: 0,
        });
    }
    let finish = |colours: Vec<Colour>| EdgeColouring::new(g, colours, r).expect("solver colours are in range");

    if !config.parallel || m <= SPLIT_DEPTH {
        return match search.dfs(0, 0) {
            Flow::Found => Ok(SearchOutcome {
                colouring: Some(finish(search.colours)),
                nodes: search.nodes,
            }),
            Flow::Exhausted => Ok(SearchOutcome {
                colouring: None,
                nodes: search.nodes,
            }),
            Flow::OutOfBudget => Err(out_of_budget()),
        };
    }

    search.cut = Some(SPLIT_DEPTH);
    let template = search.clone();
    match search.dfs(0, 0) {
        Flow::OutOfBudget => return Err(out_of_budget()),
        Flow::Found => unreachable!("the cut stops every branch before a leaf"),
        Flow::Exhausted => {}
    }
    let prefix_nodes = search.nodes;
    let leaves = std::mem::take(&mut search.leaves);

    let winner = AtomicUsize::new(usize::MAX);
    let results: Vec<Option<(Flow, u64, Vec<Colour>)>> = leaves
        .par_iter()
        .enumerate()
        .map(|(idx, (prefix, _))| {
            if winner.load(Ordering::Relaxed) < idx {
                return None;
            }
            let mut branch = template.clone();
            branch.cut = None;
            branch.colours[..prefix.len()].copy_from_slice(prefix);
            let ok = branch.init_witnesses();
            debug_assert!(ok, "recorded prefixes are consistent");
            let max_used = prefix.iter().copied().max().unwrap_or(0);
            let flow = branch.dfs(prefix.len(), max_used);
            if matches!(flow, Flow::Found) {
                winner.fetch_min(idx, Ordering::Relaxed);
            }
            Some((flow, branch.nodes, branch.colours))
        })
        .collect();

    // replay the branches in sequential order to get the sequential counts
    let mut branch_nodes = 0u64;
    for ((_, before), result) in leaves.iter().zip(results) {
        let (flow, nodes, colours) = result.expect("branches before the winner always run");
        let total = before + branch_nodes + nodes;
        match flow {
            Flow::OutOfBudget => return Err(out_of_budget()),
            Flow::Found if total > budget => return Err(out_of_budget()),
            Flow::Found => {
                return Ok(SearchOutcome {
                    colouring: Some(finish(colours)),
                    nodes: total,
                })
            }
            Flow::Exhausted => branch_nodes += nodes,
        }
    }
    let total = prefix_nodes + branch_nodes;
    if total > budget {
        return Err(out_of_budget());
    }
    Ok(SearchOutcome {
        colouring: None,
        nodes: total,
    })
}

/// The colour-count range scanned by [`rc_exact`]: the lower end is the
/// diameter (at least 2 unless the graph is complete and k = 1), the upper
/// end the known cap (n-1 for k = 1, n for k = 2, |E| otherwise).
pub fn rc_bounds(g: &Graph, k: usize) -> Result<(Colour, Colour), SolveError> {
    let n = g.vertex_count() as Colour;
    let m = g.edge_count() as Colour;
    let diam = diameter(g)? as Colour;
    let lower = if k == 1 && g.is_complete() { 1 } else { diam.max(2) };
    let upper = match k {
        1 => n - 1,
        2 => n,
        _ => m,
    };
    Ok((lower, upper.max(lower)))
}

/// Computes rc_k exactly by trying r = lower bound, lower bound + 1, ...
/// The scan continues past the theoretical cap up to |E|, where the
/// all-distinct colouring always succeeds.
pub fn rc_exact(g: &Graph, k: usize, config: &SolverConfig) -> Result<SolveResult, SolveError> {
    check_input(g, k)?;
    let (lower, upper) = rc_bounds(g, k)?;
    let last = upper.max(g.edge_count() as Colour);
    let mut remaining = config.node_budget;
    let mut exhausted = Vec::new();
    let mut total = 0;
    for r in lower..=last {
        let cfg = SolverConfig {
            node_budget: remaining,
            ..config.clone()
        };
        let outcome = match search_colouring(g, k, r, &cfg) {
            Err(SolveError::BudgetExceeded { .. }) => {
                return Err(SolveError::BudgetExceeded {
                    budget: config.node_budget.unwrap_or(u64::MAX),
                })
            }
            other => other?,
        };
        total += outcome.nodes;
        remaining = remaining.map(|b| b - outcome.nodes);
        match outcome.colouring {
            Some(witness) => {
                return Ok(SolveResult {
                    k,
                    rc_value: r,
                    witness,
                    lower_bound_used: lower,
                    upper_bound_used: upper,
                    exhausted,
                    nodes_explored: total,
                })
            }
            None => exhausted.push(ExhaustedLevel {
                colours: r,
                nodes: outcome.nodes,
            }),
        }
    }
    unreachable!("the all-distinct colouring of a k-connected graph is rainbow k-connected")
}
