//! Web diagrams: edges between pegs with a height at each endpoint.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// An edge from peg `x` at height `a` to peg `y` at height `b`, with `x < y`.
///
/// Field order matches the canonical edge order: edges sort by `(x, y, a, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub x: u32,
    pub y: u32,
    pub a: u32,
    pub b: u32,
}

impl Edge {
    pub fn new(x: u32, y: u32, a: u32, b: u32) -> Result<Self> {
        let edge = Edge { x, y, a, b };
        if x == 0 || y == 0 || a == 0 || b == 0 {
            return Err(Error::ZeroIndex(edge));
        }
        if x >= y {
            return Err(Error::PegOrderViolation(edge));
        }
        Ok(edge)
    }

    pub fn as_tuple(&self) -> (u32, u32, u32, u32) {
        (self.x, self.y, self.a, self.b)
    }

    pub fn as_array(&self) -> [u32; 4] {
        [self.x, self.y, self.a, self.b]
    }

    /// Height of this edge's endpoint on `peg`, if it touches it.
    pub fn height_on(&self, peg: u32) -> Option<u32> {
        if peg == self.x {
            Some(self.a)
        } else if peg == self.y {
            Some(self.b)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.x, self.y, self.a, self.b)
    }
}

/// A validated web diagram on pegs `1..=n`.
///
/// The peg count is part of the diagram's identity, so two diagrams that differ only in
/// trailing empty pegs are different values.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WebDiagram {
    n: u32,
    edges: Vec<Edge>,
}

impl WebDiagram {
    /// Validates a raw edge collection. With `n = None` the peg count is the largest peg used.
    pub fn new(edges: impl IntoIterator<Item = Edge>, n: Option<u32>) -> Result<Self> {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        for e in &edges {
            Edge::new(e.x, e.y, e.a, e.b)?;
        }
        let max_peg = edges.iter().map(|e| e.y).max().unwrap_or(0);
        let n = match n {
            Some(n) => {
                if let Some(e) = edges.iter().find(|e| e.y > n) {
                    return Err(Error::PegOutOfRange { edge: *e, n });
                }
                n
            }
            None => max_peg,
        };

        let mut heights: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for e in &edges {
            heights.entry(e.x).or_default().push(e.a);
            heights.entry(e.y).or_default().push(e.b);
        }
        for (&peg, hs) in heights.iter_mut() {
            hs.sort_unstable();
            if let Some(w) = hs.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateSlot { peg, height: w[0] });
            }
            let expected = hs.len() as u32;
            if hs.iter().enumerate().any(|(i, &h)| h != i as u32 + 1) {
                return Err(Error::HeightNotPermutation {
                    peg,
                    heights: hs.clone(),
                    expected,
                });
            }
        }

        edges.sort_unstable();
        Ok(Self { n, edges })
    }

    pub fn from_tuples(tuples: &[(u32, u32, u32, u32)], n: Option<u32>) -> Result<Self> {
        let edges = tuples
            .iter()
            .map(|&(x, y, a, b)| Edge::new(x, y, a, b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(edges, n)
    }

    pub fn empty(n: u32) -> Self {
        Self {
            n,
            edges: Vec::new(),
        }
    }

    /// Builds a diagram from edges already known to satisfy every invariant.
    pub(crate) fn from_valid_edges(n: u32, mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        Self { n, edges }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Edges in canonical `(x, y, a, b)` order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Number of endpoints on peg `peg` (1-based); zero for pegs beyond `n`.
    pub fn peg_size(&self, peg: u32) -> u32 {
        self.edges
            .iter()
            .filter(|e| e.x == peg || e.y == peg)
            .count() as u32
    }

    /// `(p_1, ..., p_n)`.
    pub fn pegs(&self) -> Vec<u32> {
        let mut p = vec![0u32; self.n as usize];
        for e in &self.edges {
            p[e.x as usize - 1] += 1;
            p[e.y as usize - 1] += 1;
        }
        p
    }

    pub fn peg_set(&self) -> BTreeSet<u32> {
        self.edges.iter().flat_map(|e| [e.x, e.y]).collect()
    }

    pub fn peg_pairs(&self) -> BTreeSet<(u32, u32)> {
        self.edges.iter().map(|e| (e.x, e.y)).collect()
    }

    /// Multiset of peg pairs as a sorted list; equal exactly for diagrams of the same world.
    pub fn pair_multiset(&self) -> Vec<(u32, u32)> {
        let mut pairs: Vec<_> = self.edges.iter().map(|e| (e.x, e.y)).collect();
        pairs.sort_unstable();
        pairs
    }

    /// Whether `other` can lie in the same web world as `self`.
    pub fn same_world_as(&self, other: &WebDiagram) -> bool {
        self.n == other.n && self.pair_multiset() == other.pair_multiset()
    }

    /// Places `top` above `self`. The result lives on `max(n, top.n)` pegs.
    pub fn sum(&self, top: &WebDiagram) -> WebDiagram {
        let n = self.n.max(top.n);
        let pegs = self.pegs();
        let offset = |peg: u32| pegs.get(peg as usize - 1).copied().unwrap_or(0);
        let mut edges = self.edges.clone();
        edges.extend(top.edges.iter().map(|e| Edge {
            x: e.x,
            y: e.y,
            a: e.a + offset(e.x),
            b: e.b + offset(e.y),
        }));
        WebDiagram::from_valid_edges(n, edges)
    }

    /// Compresses the heights of `subset` on every peg to `1..=l_i`, keeping relative order.
    /// Empty pegs are kept, so the peg count is unchanged.
    pub fn rel(&self, subset: &[Edge]) -> Result<WebDiagram> {
        for e in subset {
            if self.edges.binary_search(e).is_err() {
                return Err(Error::EdgeNotInDiagram(*e));
            }
        }
        Ok(rel_edges(self.n, subset))
    }

    pub fn tuples(&self) -> Vec<(u32, u32, u32, u32)> {
        self.edges.iter().map(Edge::as_tuple).collect()
    }
}

/// Height compression without membership checks.
pub(crate) fn rel_edges(n: u32, subset: &[Edge]) -> WebDiagram {
    let mut per_peg: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for e in subset {
        per_peg.entry(e.x).or_default().push(e.a);
        per_peg.entry(e.y).or_default().push(e.b);
    }
    for hs in per_peg.values_mut() {
        hs.sort_unstable();
    }
    let rank = |peg: u32, h: u32| -> u32 {
        let hs = &per_peg[&peg];
        hs.partition_point(|&v| v < h) as u32 + 1
    };
    let edges = subset
        .iter()
        .map(|e| Edge {
            x: e.x,
            y: e.y,
            a: rank(e.x, e.a),
            b: rank(e.y, e.b),
        })
        .collect();
    WebDiagram::from_valid_edges(n, edges)
}

impl fmt::Display for WebDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}
