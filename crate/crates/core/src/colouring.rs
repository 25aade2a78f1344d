//! Surjective edge colourings and reconstruction of a diagram from a colouring.

use crate::diagram::{rel_edges, Edge, WebDiagram};
use crate::error::{Error, Result};

/// A surjective map from edge positions (canonical edge order) onto colours `1..=colours`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Colouring {
    assignment: Vec<u32>,
    colours: u32,
}

impl Colouring {
    /// The number of colours is the largest value in `assignment`.
    pub fn new(assignment: Vec<u32>) -> Result<Self> {
        let colours = assignment.iter().copied().max().unwrap_or(0);
        let mut used = vec![false; colours as usize];
        for &c in &assignment {
            if c == 0 {
                return Err(Error::NotSurjective {
                    assignment,
                    colours,
                });
            }
            used[c as usize - 1] = true;
        }
        if used.iter().any(|u| !u) {
            return Err(Error::NotSurjective {
                assignment,
                colours,
            });
        }
        Ok(Self {
            assignment,
            colours,
        })
    }

    /// The constant colouring with a single colour.
    pub fn constant(len: usize) -> Self {
        Self {
            assignment: vec![1; len],
            colours: u32::from(len > 0),
        }
    }

    pub fn assignment(&self) -> &[u32] {
        &self.assignment
    }

    pub fn colours(&self) -> u32 {
        self.colours
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }
}

/// Streams every surjection `{1..L} -> {1..l}` exactly once.
///
/// Each colouring is a set partition into `l` blocks (a restricted growth string) paired
/// with an ordering of the blocks, so the work is `l! * S(L, l)` rather than `l^L`.
#[derive(Clone, Debug)]
pub struct SurjectiveColourings {
    rgs: Vec<u32>,
    order: Vec<u32>,
    current: Vec<u32>,
    blocks: u32,
    started: bool,
    done: bool,
}

impl SurjectiveColourings {
    pub fn new(edges: usize, colours: usize) -> Result<Self> {
        if colours == 0 || colours > edges {
            return Err(Error::BadRange { edges, colours });
        }
        let k = colours as u32;
        // zeros, then 1..k-1 at the tail: the lexicographically first string with k blocks
        let mut rgs = vec![0u32; edges];
        for (i, v) in (1..k).enumerate() {
            rgs[edges - (k as usize - 1) + i] = v;
        }
        Ok(Self {
            rgs,
            order: (0..k).collect(),
            current: vec![0; edges],
            blocks: k,
            started: false,
            done: false,
        })
    }

    /// Advances and returns the next colouring as a borrowed slice of colours.
    pub fn next_assignment(&mut self) -> Option<&[u32]> {
        if self.done {
            return None;
        }
        if self.started {
            if !next_permutation(&mut self.order) {
                self.order.sort_unstable();
                if !next_rgs(&mut self.rgs, self.blocks) {
                    self.done = true;
                    return None;
                }
            }
        }
        self.started = true;
        for (c, &r) in self.current.iter_mut().zip(&self.rgs) {
            *c = self.order[r as usize] + 1;
        }
        Some(&self.current)
    }
}

impl Iterator for SurjectiveColourings {
    type Item = Colouring;

    fn next(&mut self) -> Option<Colouring> {
        let colours = self.blocks;
        self.next_assignment().map(|a| Colouring {
            assignment: a.to_vec(),
            colours,
        })
    }
}

/// Every surjective colouring of `edges` positions with any number of colours, fewest colours first.
pub fn all_colourings(edges: usize) -> impl Iterator<Item = Colouring> {
    (1..=edges).flat_map(move |k| SurjectiveColourings::new(edges, k).expect("1 <= k <= edges"))
}

/// Next restricted growth string with exactly `k` blocks, in lexicographic order.
fn next_rgs(a: &mut [u32], k: u32) -> bool {
    let len = a.len();
    let mut prefix_max = vec![0u32; len];
    let mut m = 0;
    for i in 0..len {
        m = m.max(a[i]);
        prefix_max[i] = m;
    }
    for i in (1..len).rev() {
        let before = prefix_max[i - 1];
        if a[i] < k - 1 && a[i] <= before {
            let new_max = before.max(a[i] + 1);
            let remaining = len - 1 - i;
            if (k - 1 - new_max) as usize > remaining {
                continue;
            }
            a[i] += 1;
            let climb = (k - 1 - new_max) as usize;
            for j in i + 1..len {
                a[j] = 0;
            }
            for t in 0..climb {
                a[len - climb + t] = new_max + 1 + t as u32;
            }
            return true;
        }
    }
    false
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn check_colouring(d: &WebDiagram, c: &[u32]) -> Result<u32> {
    if c.len() != d.len() {
        return Err(Error::LengthMismatch {
            expected: d.len(),
            found: c.len(),
        });
    }
    Colouring::new(c.to_vec()).map(|c| c.colours())
}

/// `rel(D_c(1)) ⊕ rel(D_c(2)) ⊕ ... ⊕ rel(D_c(l))`, with `c` indexed by canonical edge order.
pub fn reconstruct(d: &WebDiagram, c: &Colouring) -> Result<WebDiagram> {
    reconstruct_assignment(d, c.assignment())
}

pub fn reconstruct_assignment(d: &WebDiagram, c: &[u32]) -> Result<WebDiagram> {
    let colours = check_colouring(d, c)?;
    let mut acc = WebDiagram::empty(d.n());
    for colour in 1..=colours {
        let class: Vec<Edge> = d
            .edges()
            .iter()
            .zip(c)
            .filter(|(_, &k)| k == colour)
            .map(|(e, _)| *e)
            .collect();
        acc = acc.sum(&rel_edges(d.n(), &class));
    }
    Ok(acc)
}

/// Reconstructs one diagram under many colourings.
///
/// Stacking the colour classes in colour order amounts to re-sorting the endpoints on each
/// peg by `(colour, old height)`; the endpoint lists are prepared once per diagram.
#[derive(Clone, Debug)]
pub struct Reconstructor {
    n: u32,
    edges: Vec<Edge>,
    /// For each peg: `(edge index, is_left_endpoint)` in increasing height order.
    stacks: Vec<Vec<(usize, bool)>>,
}

impl Reconstructor {
    pub fn new(d: &WebDiagram) -> Self {
        Self::labelled(d.n(), d.edges())
    }

    /// Keeps the given edge order, so colourings and outputs index edges by that order.
    /// The edges must form a valid diagram on `n` pegs.
    pub fn labelled(n: u32, edges: &[Edge]) -> Self {
        let mut stacks: Vec<Vec<(u32, usize, bool)>> = vec![Vec::new(); n as usize];
        for (i, e) in edges.iter().enumerate() {
            stacks[e.x as usize - 1].push((e.a, i, true));
            stacks[e.y as usize - 1].push((e.b, i, false));
        }
        let stacks = stacks
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.into_iter().map(|(_, i, left)| (i, left)).collect()
            })
            .collect();
        Self {
            n,
            edges: edges.to_vec(),
            stacks,
        }
    }

    /// Writes the reconstructed edges (edge `i` of the input stays at position `i`, not sorted)
    /// into `out`. The colouring is trusted to have the right length.
    pub fn apply_unsorted(&self, c: &[u32], out: &mut Vec<Edge>) {
        out.clear();
        out.extend_from_slice(&self.edges);
        for stack in &self.stacks {
            for (pos, &(i, left)) in stack.iter().enumerate() {
                let key = (c[i], pos);
                let below = stack
                    .iter()
                    .enumerate()
                    .filter(|&(q, &(j, _))| (c[j], q) < key)
                    .count() as u32;
                if left {
                    out[i].a = below + 1;
                } else {
                    out[i].b = below + 1;
                }
            }
        }
    }

    /// Reconstructed edges in canonical order.
    pub fn apply_sorted(&self, c: &[u32], out: &mut Vec<Edge>) {
        self.apply_unsorted(c, out);
        out.sort_unstable();
    }

    pub fn apply(&self, c: &[u32]) -> WebDiagram {
        let mut out = Vec::with_capacity(self.edges.len());
        self.apply_unsorted(c, &mut out);
        WebDiagram::from_valid_edges(self.n, out)
    }
}
