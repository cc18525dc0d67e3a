//! Exact t_k(n, r), s_k(n, r), M_{n,k} and Θ-graph scans by exhaustive
//! search over all k-connected graphs on n vertices.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{graph6, theta_graph, Graph};
use crate::rainbow::{Colour, EdgeColouring};
use crate::solver::{rc_bounds, search_colouring, SolveError, SolverConfig};

pub mod enumerate;
mod report;

pub use report::{bound_report, BoundReport, BoundRow, RowStatus};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("{0}")]
    Scale(String),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    T,
    S,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::T => "t",
            Kind::S => "s",
        })
    }
}

/// One cell of a t or s table. `value` is `None` when the cell is
/// undefined: no k-connected graph on n vertices meets the rc condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalRecord {
    pub kind: Kind,
    pub k: usize,
    pub n: usize,
    pub r: Colour,
    pub value: Option<usize>,
    pub witness_graph: Option<Graph>,
    /// For t: a colouring with at most r colours. For s: an optimal
    /// colouring of the witness (so it uses rc_k >= r colours).
    pub witness_colouring: Option<EdgeColouring>,
}

pub const UNDEFINED: &str = "undefined";

impl ExtremalRecord {
    pub const CSV_HEADER: &'static str = "kind,k,n,r,value,witness_graph6,witness_colours";

    /// `kind,k,n,r,value,graph6,colours` with the colours in edge order
    /// separated by `;`.
    pub fn to_csv_line(&self) -> String {
        let value = self.value.map_or_else(|| UNDEFINED.to_string(), |v| v.to_string());
        let g6 = self.witness_graph.as_ref().map(graph6::encode).unwrap_or_default();
        let colours = self
            .witness_colouring
            .as_ref()
            .map(|c| c.colours().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";"))
            .unwrap_or_default();
        format!("{},{},{},{},{value},{g6},{colours}", self.kind, self.k, self.n, self.r)
    }
}

#[derive(Debug, Clone)]
struct Knowledge {
    // rc_k >= lower is proven
    lower: Colour,
    // rc_k <= upper, with a colouring using at most that many colours
    upper: Option<(Colour, EdgeColouring)>,
}

/// Shared state for one extremal run: enumerations and the per-graph rc
/// knowledge, keyed by canonical form.
pub struct Extremal {
    config: SolverConfig,
    graphs: HashMap<(usize, usize), Arc<Vec<Graph>>>,
    knowledge: HashMap<(Graph, usize), Knowledge>,
    nodes: u64,
}

impl Extremal {
    /// `config.parallel` spreads the graphs of an edge-count stratum over
    /// the rayon pool; each search is then sequential.
    pub fn new(config: SolverConfig) -> Self {
        Extremal {
            config,
            graphs: HashMap::new(),
            knowledge: HashMap::new(),
            nodes: 0,
        }
    }

    /// Uses the given graphs, rather than the built-in enumeration, for
    /// (n, k). They are canonicalised, deduplicated and filtered.
    pub fn use_external_graphs(&mut self, n: usize, k: usize, graphs: Vec<Graph>) -> Result<(), ExtremalError> {
        let list = enumerate::from_external(graphs, n, k)?;
        self.graphs.insert((n, k), Arc::new(list));
        Ok(())
    }

    /// Solver nodes spent so far.
    pub fn nodes_explored(&self) -> u64 {
        self.nodes
    }

    pub fn graphs(&mut self, n: usize, k: usize) -> Result<Arc<Vec<Graph>>, ExtremalError> {
        if let Some(list) = self.graphs.get(&(n, k)) {
            return Ok(list.clone());
        }
        let list = Arc::new(enumerate::enumerate_k_connected(n, k)?);
        self.graphs.insert((n, k), list.clone());
        Ok(list)
    }

    fn knowledge(&mut self, g: &Graph, k: usize) -> Result<&mut Knowledge, ExtremalError> {
        match self.knowledge.entry((g.clone(), k)) {
            Entry::Occupied(e) => Ok(e.into_mut()),
            Entry::Vacant(e) => {
                let (lower, _) = rc_bounds(g, k)?;
                Ok(e.insert(Knowledge { lower, upper: None }))
            }
        }
    }

    fn known(&mut self, g: &Graph, k: usize, r: Colour) -> Result<Option<Option<EdgeColouring>>, ExtremalError> {
        let kn = self.knowledge(g, k)?;
        if let Some((hi, w)) = &kn.upper {
            if *hi <= r {
                return Ok(Some(Some(EdgeColouring::new(g, w.colours().to_vec(), r).unwrap())));
            }
        }
        Ok((r < kn.lower).then_some(None))
    }

    fn record(&mut self, g: &Graph, k: usize, r: Colour, found: &Option<EdgeColouring>) -> Result<(), ExtremalError> {
        let kn = self.knowledge(g, k)?;
        match found {
            Some(c) => {
                if kn.upper.as_ref().is_none_or(|(hi, _)| r < *hi) {
                    kn.upper = Some((r, c.clone()));
                }
            }
            None => kn.lower = kn.lower.max(r + 1),
        }
        Ok(())
    }

    /// For each graph, a colouring with at most `r` colours if rc_k <= r.
    fn decide_all(
        &mut self,
        graphs: &[Graph],
        k: usize,
        r: Colour,
    ) -> Result<Vec<Option<EdgeColouring>>, ExtremalError> {
        let mut answers = Vec::with_capacity(graphs.len());
        let mut open = Vec::new();
        for (i, g) in graphs.iter().enumerate() {
            match self.known(g, k, r)? {
                Some(answer) => answers.push(answer),
                None => {
                    answers.push(None);
                    open.push(i);
                }
            }
        }
        let cfg = SolverConfig {
            parallel: false,
            ..self.config.clone()
        };
        let run = |&i: &usize| search_colouring(&graphs[i], k, r, &cfg);
        let outcomes: Vec<_> = if self.config.parallel {
            open.par_iter().map(run).collect()
        } else {
            open.iter().map(run).collect()
        };
        for (i, outcome) in open.into_iter().zip(outcomes) {
            let outcome = outcome?;
            self.nodes += outcome.nodes;
            self.record(&graphs[i], k, r, &outcome.colouring)?;
            answers[i] = outcome.colouring;
        }
        Ok(answers)
    }

    /// Exact rc_k with an optimal colouring, reusing what is known.
    pub fn rc(&mut self, g: &Graph, k: usize) -> Result<(Colour, EdgeColouring), ExtremalError> {
        let mut r = self.knowledge(g, k)?.lower;
        loop {
            if let Some(c) = self.decide_all(std::slice::from_ref(g), k, r)?.pop().unwrap() {
                return Ok((r, EdgeColouring::new(g, c.colours().to_vec(), r).unwrap()));
            }
            r += 1;
        }
    }

    /// rc_k of every k-connected graph on n vertices.
    pub fn rc_table(&mut self, n: usize, k: usize) -> Result<RcTable, ExtremalError> {
        let graphs = self.graphs(n, k)?;
        let mut entries = Vec::with_capacity(graphs.len());
        for g in graphs.iter() {
            entries.push((g.edge_count(), self.rc(g, k)?.0));
        }
        Ok(RcTable { n, k, entries })
    }

    fn strata(graphs: &[Graph], ascending: bool) -> Vec<Vec<Graph>> {
        let mut by_edges: std::collections::BTreeMap<usize, Vec<Graph>> = Default::default();
        for g in graphs {
            by_edges.entry(g.edge_count()).or_default().push(g.clone());
        }
        let mut strata: Vec<Vec<Graph>> = by_edges.into_values().collect();
        if !ascending {
            strata.reverse();
        }
        strata
    }

    /// Minimum edge count of a k-connected n-vertex graph with rc_k <= r.
    /// Edge-count strata are scanned upwards and the scan stops at the
    /// first stratum containing such a graph.
    pub fn extremal_t(&mut self, n: usize, r: Colour, k: usize) -> Result<ExtremalRecord, ExtremalError> {
        check_args(n, r, k)?;
        let graphs = self.graphs(n, k)?;
        let mut record = ExtremalRecord {
            kind: Kind::T,
            k,
            n,
            r,
            value: None,
            witness_graph: None,
            witness_colouring: None,
        };
        for stratum in Self::strata(&graphs, true) {
            let answers = self.decide_all(&stratum, k, r)?;
            if let Some((g, c)) = stratum.iter().zip(answers).find_map(|(g, a)| a.map(|c| (g, c))) {
                record.value = Some(g.edge_count());
                record.witness_graph = Some(g.clone());
                record.witness_colouring = Some(c);
                break;
            }
        }
        Ok(record)
    }

    /// Maximum edge count of a k-connected n-vertex graph with rc_k >= r,
    /// scanning strata downwards. A graph qualifies when no colouring with
    /// r - 1 colours is rainbow k-connected.
    pub fn extremal_s(&mut self, n: usize, r: Colour, k: usize) -> Result<ExtremalRecord, ExtremalError> {
        check_args(n, r, k)?;
        let graphs = self.graphs(n, k)?;
        let mut record = ExtremalRecord {
            kind: Kind::S,
            k,
            n,
            r,
            value: None,
            witness_graph: None,
            witness_colouring: None,
        };
        for stratum in Self::strata(&graphs, false) {
            let qualifies: Vec<bool> = if r <= 1 {
                vec![true; stratum.len()]
            } else {
                self.decide_all(&stratum, k, r - 1)?
                    .into_iter()
                    .map(|a| a.is_none())
                    .collect()
            };
            if let Some(i) = qualifies.iter().position(|&q| q) {
                let g = &stratum[i];
                let (_, colouring) = self.rc(g, k)?;
                record.value = Some(g.edge_count());
                record.witness_graph = Some(g.clone());
                record.witness_colouring = Some(colouring);
                break;
            }
        }
        Ok(record)
    }

    /// M_{n,k}: the largest rc_k over all k-connected n-vertex graphs,
    /// with the first graph attaining it.
    pub fn max_rc(&mut self, n: usize, k: usize) -> Result<(Colour, Graph), ExtremalError> {
        let graphs = self.graphs(n, k)?;
        let mut best: Option<(Colour, Graph)> = None;
        for g in graphs.iter() {
            let (rc, _) = self.rc(g, k)?;
            if best.as_ref().is_none_or(|(b, _)| rc > *b) {
                best = Some((rc, g.clone()));
            }
        }
        best.ok_or_else(|| ExtremalError::Input(format!("no {k}-connected graph on {n} vertices")))
    }
}

fn check_args(n: usize, r: Colour, k: usize) -> Result<(), ExtremalError> {
    if k == 0 || r == 0 {
        return Err(ExtremalError::Input("k and r must be at least 1".into()));
    }
    if n <= k {
        return Err(ExtremalError::Input(format!("a {k}-connected graph needs n > {k}")));
    }
    Ok(())
}

/// rc_k of every graph in an enumeration, reduced to (edges, rc) pairs.
/// The threshold functions below are read straight off this table,
/// independently of the stratum scans.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RcTable {
    pub n: usize,
    pub k: usize,
    pub entries: Vec<(usize, Colour)>,
}

impl RcTable {
    /// Largest g with: |E| <= g implies rc_k >= r. `None` when every graph
    /// has rc_k >= r.
    pub fn g(&self, r: Colour) -> Option<usize> {
        self.entries
            .iter()
            .filter(|e| e.1 < r)
            .map(|e| e.0)
            .min()
            .map(|e| e - 1)
    }

    /// Smallest f with: |E| >= f implies rc_k <= r. `None` when every graph
    /// has rc_k <= r.
    pub fn f(&self, r: Colour) -> Option<usize> {
        self.entries
            .iter()
            .filter(|e| e.1 > r)
            .map(|e| e.0)
            .max()
            .map(|e| e + 1)
    }

    pub fn max_rc(&self) -> Option<Colour> {
        self.entries.iter().map(|e| e.1).max()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThetaRow {
    pub path_sizes: [usize; 3],
    pub graph6: String,
    pub rc2: Colour,
    pub colours: Vec<Colour>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThetaScan {
    pub n: usize,
    pub rows: Vec<ThetaRow>,
    pub min_rc2: Colour,
}

pub const THETA_SCAN_RANGE: std::ops::RangeInclusive<usize> = 4..=12;

/// All path-size triples q1 >= q2 >= q3 with q1, q2 >= 3, q3 >= 2 and
/// q1 + q2 + q3 = n + 4.
pub fn theta_shapes(n: usize) -> Vec<[usize; 3]> {
    let total = n + 4;
    let mut out = Vec::new();
    for q1 in 3..total {
        for q2 in 3..=q1 {
            if q1 + q2 < total && total - q1 - q2 >= 2 && total - q1 - q2 <= q2 {
                out.push([q1, q2, total - q1 - q2]);
            }
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// rc_2 of every Θ-graph on n vertices.
pub fn theta_scan(n: usize, config: &SolverConfig) -> Result<ThetaScan, ExtremalError> {
    if !THETA_SCAN_RANGE.contains(&n) {
        return Err(ExtremalError::Scale(format!(
            "theta scan supports {} ≤ n ≤ {}",
            THETA_SCAN_RANGE.start(),
            THETA_SCAN_RANGE.end()
        )));
    }
    let mut rows = Vec::new();
    for shape in theta_shapes(n) {
        let g = theta_graph(shape).expect("valid theta shape");
        let res = crate::solver::rc_exact(&g, 2, config)?;
        rows.push(ThetaRow {
            path_sizes: shape,
            graph6: graph6::encode(&g),
            rc2: res.rc_value,
            colours: res.witness.colours().to_vec(),
        });
    }
    let min_rc2 = rows.iter().map(|r| r.rc2).min().unwrap();
    Ok(ThetaScan { n, rows, min_rc2 })
}
