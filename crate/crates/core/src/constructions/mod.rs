//! Generators for the extremal graph families and their published
//! colourings. Each family documents its vertex layout so that graphs and
//! colourings are reproducible bit for bit.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::rainbow::{Colour, EdgeColouring};

mod families;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Family {
    Harary,
    T2R2,
    Gnr,
    Gn5,
    Gn3,
    G1,
    G2,
    S2a,
    S2b,
    T1Cycles,
    T1Bipartite,
    S1CliquePath,
    KnRc2,
}

impl Family {
    pub const ALL: [Family; 13] = [
        Family::Harary,
        Family::T2R2,
        Family::Gnr,
        Family::Gn5,
        Family::Gn3,
        Family::G1,
        Family::G2,
        Family::S2a,
        Family::S2b,
        Family::T1Cycles,
        Family::T1Bipartite,
        Family::S1CliquePath,
        Family::KnRc2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Harary => "HARARY",
            Family::T2R2 => "T2_R2",
            Family::Gnr => "GNR",
            Family::Gn5 => "GN5",
            Family::Gn3 => "GN3",
            Family::G1 => "G1",
            Family::G2 => "G2",
            Family::S2a => "S2A",
            Family::S2b => "S2B",
            Family::T1Cycles => "T1_CYCLES",
            Family::T1Bipartite => "T1_BIPARTITE",
            Family::S1CliquePath => "S1_CLIQUE_PATH",
            Family::KnRc2 => "KN_RC2",
        }
    }

    /// Families that come with an explicit colouring.
    pub fn is_coloured(self) -> bool {
        matches!(
            self,
            Family::T2R2 | Family::Gnr | Family::Gn5 | Family::Gn3 | Family::G1 | Family::G2 | Family::KnRc2
        )
    }

    pub fn needs_r(self) -> bool {
        matches!(
            self,
            Family::Gnr | Family::Gn3 | Family::S2a | Family::S2b | Family::T1Cycles | Family::S1CliquePath
        )
    }

    pub fn needs_k(self) -> bool {
        self == Family::Harary
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let wanted = s.trim().to_ascii_uppercase().replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == wanted)
            .ok_or_else(|| ConstructionError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("{family} needs the parameter {param}")]
    MissingParameter { family: Family, param: &'static str },
    #[error("{0}")]
    OutOfRange(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ConstructionSpec {
    pub family: Family,
    pub n: usize,
    pub r: Option<usize>,
    pub k: Option<usize>,
}

impl ConstructionSpec {
    pub fn new(family: Family, n: usize) -> Self {
        ConstructionSpec {
            family,
            n,
            r: None,
            k: None,
        }
    }

    pub fn with_r(mut self, r: usize) -> Self {
        self.r = Some(r);
        self
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    fn r(&self) -> Result<usize, ConstructionError> {
        self.r.ok_or(ConstructionError::MissingParameter {
            family: self.family,
            param: "r",
        })
    }

    fn k(&self) -> Result<usize, ConstructionError> {
        self.k.ok_or(ConstructionError::MissingParameter {
            family: self.family,
            param: "k",
        })
    }
}

/// The known relation between `rc_k` of the graph and its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RcRelation {
    None,
    AtMost { k: usize, value: Colour },
    AtLeast { k: usize, value: Colour },
    Equals { k: usize, value: Colour },
}

impl RcRelation {
    pub fn k(&self) -> Option<usize> {
        match *self {
            RcRelation::None => None,
            RcRelation::AtMost { k, .. } | RcRelation::AtLeast { k, .. } | RcRelation::Equals { k, .. } => Some(k),
        }
    }

    pub fn holds(&self, rc: Colour) -> bool {
        match *self {
            RcRelation::None => true,
            RcRelation::AtMost { value, .. } => rc <= value,
            RcRelation::AtLeast { value, .. } => rc >= value,
            RcRelation::Equals { value, .. } => rc == value,
        }
    }
}

impl fmt::Display for RcRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RcRelation::None => f.write_str("none"),
            RcRelation::AtMost { k, value } => write!(f, "rc{k} <= {value}"),
            RcRelation::AtLeast { k, value } => write!(f, "rc{k} >= {value}"),
            RcRelation::Equals { k, value } => write!(f, "rc{k} = {value}"),
        }
    }
}

impl Serialize for RcRelation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColouredGraphBundle {
    pub spec: ConstructionSpec,
    pub graph: Graph,
    pub colouring: Option<EdgeColouring>,
    pub predicted_edges: usize,
    pub predicted_rc_relation: RcRelation,
    /// Derived construction parameters (m, b, a, ...).
    pub derived: BTreeMap<&'static str, usize>,
}

fn out_of_range(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::OutOfRange(msg.into())
}

fn binomial2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

/// The `a` with `2^(a-2) + a - 1 <= n <= 2^(a-1) + a - 1`, `a >= 4`.
pub fn t2r2_part_size(n: usize) -> Result<usize, ConstructionError> {
    (4..usize::BITS as usize)
        .find(|&a| (1usize << (a - 2)) + a - 1 <= n && n < (1usize << (a - 1)) + a)
        .ok_or_else(|| out_of_range("T2_R2 requires n ≥ 7"))
}

/// The `a` with `2^(a-1) + a <= n <= 2^a + a`, `a >= 2`.
pub fn t1_bipartite_part_size(n: usize) -> Result<usize, ConstructionError> {
    (2..usize::BITS as usize)
        .find(|&a| (1usize << (a - 1)) + a <= n && n <= (1usize << a) + a)
        .ok_or_else(|| out_of_range("T1_BIPARTITE requires n ≥ 4"))
}

/// Checks the family hypotheses and returns the closed-form edge count
/// together with the claimed rc relation and derived parameters.
fn plan(spec: &ConstructionSpec) -> Result<(usize, RcRelation, BTreeMap<&'static str, usize>), ConstructionError> {
    let n = spec.n;
    let mut derived = BTreeMap::new();
    let as_colour = |x: usize| x as Colour;
    let (edges, relation) = match spec.family {
        Family::Harary => {
            let k = spec.k()?;
            if !(2 <= k && k < n) {
                return Err(out_of_range("HARARY requires 2 ≤ k < n"));
            }
            ((k * n).div_ceil(2), RcRelation::None)
        }
        Family::T2R2 => {
            let a = t2r2_part_size(n)?;
            derived.insert("a", a);
            (binomial2(a) + a * (n - a), RcRelation::Equals { k: 2, value: 2 })
        }
        Family::Gnr => {
            let r = spec.r()?;
            if !(6 <= r && r + 3 <= n) {
                return Err(out_of_range("GNR requires 6 ≤ r ≤ n−3"));
            }
            let (m, b) = ((n + 3 - r) / 4, (n + 3 - r) % 4);
            derived.extend([("m", m), ("b", b)]);
            (
                8 * m + r - 4 + 2 * b,
                RcRelation::AtMost {
                    k: 2,
                    value: as_colour(r),
                },
            )
        }
        Family::Gn5 => {
            if n < 7 {
                return Err(out_of_range("GN5 requires n ≥ 7"));
            }
            let (m, b) = ((n - 4) / 3, (n - 4) % 3);
            derived.extend([("m", m), ("b", b)]);
            (7 * m + 3 + 2 * b, RcRelation::AtMost { k: 2, value: 5 })
        }
        Family::Gn3 => {
            let r = spec.r()?;
            if !((r == 3 || r == 4) && n > r) {
                return Err(out_of_range("GN3 requires r ∈ {3,4} and n ≥ r+1"));
            }
            let (m, b) = ((n - 2) / 2, (n - 2) % 2);
            derived.extend([("m", m), ("b", b)]);
            (
                5 * m + 2 * b,
                RcRelation::AtMost {
                    k: 2,
                    value: as_colour(r),
                },
            )
        }
        Family::G1 => {
            if n < 4 {
                return Err(out_of_range("G1 requires n ≥ 4"));
            }
            (
                n + 1,
                RcRelation::AtMost {
                    k: 2,
                    value: as_colour(n - 1),
                },
            )
        }
        Family::G2 => {
            if n < 6 {
                return Err(out_of_range("G2 requires n ≥ 6"));
            }
            (
                n + 2,
                RcRelation::AtMost {
                    k: 2,
                    value: as_colour(n - 2),
                },
            )
        }
        Family::S2a => {
            let r = spec.r()?;
            if !(3 <= r && r < n) {
                return Err(out_of_range("S2A requires 3 ≤ r ≤ n−1"));
            }
            (
                binomial2(n - r + 2) + r - 1,
                RcRelation::AtLeast {
                    k: 2,
                    value: as_colour(r),
                },
            )
        }
        Family::S2b => {
            let r = spec.r()?;
            if !(n >= 6 && n + 4 <= 2 * r && r < n) {
                return Err(out_of_range("S2B requires n ≥ 6 and n/2+2 ≤ r ≤ n−1"));
            }
            (
                binomial2(n - r + 3) + r - 3,
                RcRelation::AtLeast {
                    k: 2,
                    value: as_colour(r),
                },
            )
        }
        Family::T1Cycles => {
            let r = spec.r()?;
            if !(3 <= r && r + 2 <= n) {
                return Err(out_of_range("T1_CYCLES requires 3 ≤ r ≤ n−2"));
            }
            let cycles = (n - 3) / (r - 1);
            let pendants = n - 1 - cycles * (r - 1);
            derived.extend([("cycles", cycles), ("pendants", pendants)]);
            (
                cycles * r + pendants,
                RcRelation::AtMost {
                    k: 1,
                    value: as_colour(r),
                },
            )
        }
        Family::T1Bipartite => {
            let a = t1_bipartite_part_size(n)?;
            derived.insert("a", a);
            (a * (n - a), RcRelation::AtMost { k: 1, value: 2 })
        }
        Family::S1CliquePath => {
            let r = spec.r()?;
            if !(2 <= r && r < n) {
                return Err(out_of_range("S1_CLIQUE_PATH requires 2 ≤ r ≤ n−1"));
            }
            (
                binomial2(n - r + 2) + r - 3,
                RcRelation::AtLeast {
                    k: 1,
                    value: as_colour(r),
                },
            )
        }
        Family::KnRc2 => {
            if n < 4 {
                return Err(out_of_range("KN_RC2 requires n ≥ 4"));
            }
            (binomial2(n), RcRelation::Equals { k: 2, value: 2 })
        }
    };
    Ok((edges, relation, derived))
}

/// Closed-form edge count, without building the graph.
pub fn predicted_edge_count(spec: &ConstructionSpec) -> Result<usize, ConstructionError> {
    plan(spec).map(|(edges, _, _)| edges)
}

pub fn construct(spec: &ConstructionSpec) -> Result<ColouredGraphBundle, ConstructionError> {
    let (predicted_edges, predicted_rc_relation, derived) = plan(spec)?;
    let (graph, colouring) = families::build(spec, &derived);
    Ok(ColouredGraphBundle {
        spec: *spec,
        graph,
        colouring,
        predicted_edges,
        predicted_rc_relation,
        derived,
    })
}

/// Every in-range spec of `family` with `n <= max_n` (and, for HARARY,
/// every `k`).
pub fn parameter_grid(family: Family, max_n: usize) -> Vec<ConstructionSpec> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let base = ConstructionSpec::new(family, n);
        let candidates: Vec<ConstructionSpec> = if family.needs_k() {
            (0..=n).map(|k| base.with_k(k)).collect()
        } else if family.needs_r() {
            (0..=n).map(|r| base.with_r(r)).collect()
        } else {
            vec![base]
        };
        out.extend(candidates.into_iter().filter(|s| plan(s).is_ok()));
    }
    out
}

#[cfg(test)]
mod tests;
