use serde::{Deserialize, Serialize};

use super::RainbowError;
use crate::graph::{Graph, Vertex};

pub type Colour = u32;

/// A total map from the edges of a graph (by edge index) to colours `1..=r`.
/// Not every colour in `1..=r` has to be used.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColouring {
    colours: Vec<Colour>,
    colour_count: Colour,
}

impl EdgeColouring {
    pub fn new(g: &Graph, colours: Vec<Colour>, colour_count: Colour) -> Result<Self, RainbowError> {
        if colours.len() != g.edge_count() {
            return Err(RainbowError::LengthMismatch {
                edges: g.edge_count(),
                colours: colours.len(),
            });
        }
        if let Some((i, &c)) = colours.iter().enumerate().find(|(_, &c)| c == 0 || c > colour_count) {
            let (u, v) = g.edge(i);
            return Err(RainbowError::ColourOutOfRange {
                u,
                v,
                colour: c,
                colour_count,
            });
        }
        Ok(EdgeColouring { colours, colour_count })
    }

    /// Colours each edge `{u, v}` (with `u < v`) by `f(u, v)`.
    pub fn from_fn(
        g: &Graph,
        colour_count: Colour,
        mut f: impl FnMut(Vertex, Vertex) -> Colour,
    ) -> Result<Self, RainbowError> {
        let colours = g.edges().iter().map(|&(u, v)| f(u, v)).collect();
        Self::new(g, colours, colour_count)
    }

    pub fn uniform(g: &Graph, colour: Colour) -> Self {
        Self::new(g, vec![colour; g.edge_count()], colour.max(1)).expect("uniform colour is in range")
    }

    /// Edge `i` gets colour `i + 1`.
    pub fn all_distinct(g: &Graph) -> Self {
        let m = g.edge_count() as Colour;
        Self::new(g, (1..=m).collect(), m.max(1)).expect("distinct colours are in range")
    }

    #[inline]
    pub fn colour(&self, edge: usize) -> Colour {
        self.colours[edge]
    }

    pub fn colour_between(&self, g: &Graph, u: Vertex, v: Vertex) -> Option<Colour> {
        g.edge_index(u, v).map(|e| self.colours[e])
    }

    #[inline]
    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    #[inline]
    pub fn colour_count(&self) -> Colour {
        self.colour_count
    }

    pub fn distinct_colours_used(&self) -> usize {
        let mut seen: Vec<Colour> = self.colours.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    pub(crate) fn matches(&self, g: &Graph) -> Result<(), RainbowError> {
        if self.colours.len() == g.edge_count() {
            Ok(())
        } else {
            Err(RainbowError::LengthMismatch {
                edges: g.edge_count(),
                colours: self.colours.len(),
            })
        }
    }

    /// One `u,v,colour` line per edge in edge order, `u < v`.
    pub fn to_csv(&self, g: &Graph) -> String {
        g.edges()
            .iter()
            .zip(&self.colours)
            .map(|(&(u, v), c)| format!("{u},{v},{c}\n"))
            .collect()
    }

    /// Parses `u,v,colour` lines. Every edge of `g` must appear exactly
    /// once. The colour count defaults to the largest colour present.
    pub fn from_csv(g: &Graph, text: &str, colour_count: Option<Colour>) -> Result<Self, RainbowError> {
        let mut colours = vec![0; g.edge_count()];
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = || RainbowError::Parse(format!("line {}: expected `u,v,colour`, got {line:?}", lineno + 1));
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            let [u, v, c] = fields[..] else { return Err(bad()) };
            let (u, v, c): (Vertex, Vertex, Colour) = (
                u.parse().map_err(|_| bad())?,
                v.parse().map_err(|_| bad())?,
                c.parse().map_err(|_| bad())?,
            );
            let e = g.edge_index(u, v).ok_or(RainbowError::UnknownEdge(u, v))?;
            if colours[e] != 0 {
                return Err(RainbowError::DuplicateEntry(u.min(v), u.max(v)));
            }
            if c == 0 {
                return Err(RainbowError::ColourOutOfRange {
                    u,
                    v,
                    colour: 0,
                    colour_count: colour_count.unwrap_or(0),
                });
            }
            colours[e] = c;
        }
        if let Some(e) = colours.iter().position(|&c| c == 0) {
            let (u, v) = g.edge(e);
            return Err(RainbowError::MissingEdge(u, v));
        }
        let r = colour_count.unwrap_or_else(|| colours.iter().copied().max().unwrap_or(1));
        Self::new(g, colours, r)
    }

    pub fn to_json(&self, g: &Graph) -> ColouringJson {
        ColouringJson {
            colour_count: self.colour_count,
            edges: g
                .edges()
                .iter()
                .zip(&self.colours)
                .map(|(&(u, v), &c)| [u, v, c as usize])
                .collect(),
        }
    }

    pub fn from_json(g: &Graph, json: &ColouringJson) -> Result<Self, RainbowError> {
        let text: String = json.edges.iter().map(|[u, v, c]| format!("{u},{v},{c}\n")).collect();
        Self::from_csv(g, &text, Some(json.colour_count))
    }
}

/// `{"colour_count": r, "edges": [[u, v, colour], ...]}` in edge order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColouringJson {
    pub colour_count: Colour,
    pub edges: Vec<[usize; 3]>,
}
