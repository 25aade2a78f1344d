//! Peg-permutation action and web-world generation.

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;

use crate::diagram::{Edge, WebDiagram};
use crate::enumeration::{represent_of, world_size};
use crate::error::{Error, Result};

/// Size guards for operations whose cost grows with the web world.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest world that may be materialized.
    pub max_world_size: usize,
    /// Largest world for which a full square matrix may be built.
    pub max_matrix_dim: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_world_size: 1_000_000,
            max_matrix_dim: 4096,
        }
    }
}

/// One permutation of `1..=p_i` per peg; `perms[i][j - 1]` is the new height of height `j`
/// on peg `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PegPermutationFamily {
    perms: Vec<Vec<u32>>,
}

impl PegPermutationFamily {
    pub fn new(perms: Vec<Vec<u32>>) -> Result<Self> {
        for (i, p) in perms.iter().enumerate() {
            let mut seen = vec![false; p.len()];
            for &v in p {
                let ok = v >= 1 && (v as usize) <= p.len() && !seen[v as usize - 1];
                if !ok {
                    return Err(Error::NotAPermutation {
                        peg: i as u32 + 1,
                        values: p.clone(),
                    });
                }
                seen[v as usize - 1] = true;
            }
        }
        Ok(Self { perms })
    }

    pub fn identity(pegs: &[u32]) -> Self {
        Self {
            perms: pegs.iter().map(|&p| (1..=p).collect()).collect(),
        }
    }

    /// Swaps heights `h` and `h + 1` on `peg`, identity elsewhere.
    pub fn adjacent_swap(pegs: &[u32], peg: u32, h: u32) -> Self {
        let mut fam = Self::identity(pegs);
        let p = &mut fam.perms[peg as usize - 1];
        p.swap(h as usize - 1, h as usize);
        fam
    }

    pub fn perms(&self) -> &[Vec<u32>] {
        &self.perms
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.perms.len() != other.perms.len() {
            return Err(Error::ArityMismatch {
                peg: 0,
                expected: self.perms.len(),
                found: other.perms.len(),
            });
        }
        let perms = self
            .perms
            .iter()
            .zip(&other.perms)
            .enumerate()
            .map(|(i, (s, o))| {
                if s.len() != o.len() {
                    return Err(Error::ArityMismatch {
                        peg: i as u32 + 1,
                        expected: s.len(),
                        found: o.len(),
                    });
                }
                Ok(o.iter().map(|&v| s[v as usize - 1]).collect())
            })
            .collect::<Result<_>>()?;
        Ok(Self { perms })
    }
}

/// Moves the endpoint at height `j` on peg `i` to height `perms[i](j)`.
pub fn apply_permutations(d: &WebDiagram, fam: &PegPermutationFamily) -> Result<WebDiagram> {
    let pegs = d.pegs();
    if fam.perms.len() != pegs.len() {
        return Err(Error::ArityMismatch {
            peg: 0,
            expected: pegs.len(),
            found: fam.perms.len(),
        });
    }
    for (i, (p, perm)) in pegs.iter().zip(&fam.perms).enumerate() {
        if *p as usize != perm.len() {
            return Err(Error::ArityMismatch {
                peg: i as u32 + 1,
                expected: *p as usize,
                found: perm.len(),
            });
        }
    }
    let moved = d
        .edges()
        .iter()
        .map(|e| Edge {
            x: e.x,
            y: e.y,
            a: fam.perms[e.x as usize - 1][e.a as usize - 1],
            b: fam.perms[e.y as usize - 1][e.b as usize - 1],
        })
        .collect();
    Ok(WebDiagram::from_valid_edges(d.n(), moved))
}

/// All diagrams reachable from a seed by peg permutations, in canonical order.
#[derive(Clone, Debug)]
pub struct WebWorld {
    diagrams: Vec<WebDiagram>,
    index: HashMap<Vec<Edge>, usize>,
}

impl WebWorld {
    pub fn diagrams(&self) -> &[WebDiagram] {
        &self.diagrams
    }

    pub fn len(&self) -> usize {
        self.diagrams.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagrams.is_empty()
    }

    pub fn get(&self, i: usize) -> &WebDiagram {
        &self.diagrams[i]
    }

    pub fn index_of(&self, d: &WebDiagram) -> Option<usize> {
        if d.n() != self.n() {
            return None;
        }
        self.index_of_edges(d.edges())
    }

    /// Looks up a diagram by its canonically sorted edge list.
    pub fn index_of_edges(&self, edges: &[Edge]) -> Option<usize> {
        self.index.get(edges).copied()
    }

    pub fn contains(&self, d: &WebDiagram) -> bool {
        self.index_of(d).is_some()
    }

    /// Peg count shared by every diagram of the world.
    pub fn n(&self) -> u32 {
        self.diagrams[0].n()
    }

    /// A representative diagram; the canonically smallest one.
    pub fn first(&self) -> &WebDiagram {
        &self.diagrams[0]
    }

    pub(crate) fn from_diagrams(mut diagrams: Vec<WebDiagram>) -> Self {
        diagrams.sort_unstable();
        diagrams.dedup();
        let index = diagrams
            .iter()
            .enumerate()
            .map(|(i, d)| (d.edges().to_vec(), i))
            .collect();
        Self { diagrams, index }
    }
}

/// The web world of `d` under the default size guard.
pub fn web_world(d: &WebDiagram) -> Result<WebWorld> {
    web_world_with_limits(d, &Limits::default())
}

/// The web world of `d`, refusing worlds larger than `limits.max_world_size`.
///
/// Adjacent height transpositions generate each per-peg symmetric group, so the orbit is
/// the closure of `d` under those swaps.
pub fn web_world_with_limits(d: &WebDiagram, limits: &Limits) -> Result<WebWorld> {
    let size = world_size(&represent_of(d));
    if size > BigInt::from(limits.max_world_size) {
        return Err(Error::WorldTooLarge {
            size: size.to_string(),
            limit: limits.max_world_size,
        });
    }
    let pegs = d.pegs();
    let mut seen: HashSet<WebDiagram> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(d.clone());
    queue.push_back(d.clone());
    while let Some(cur) = queue.pop_front() {
        for (i, &p) in pegs.iter().enumerate() {
            let peg = i as u32 + 1;
            for h in 1..p {
                let next = swap_heights(&cur, peg, h);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(WebWorld::from_diagrams(seen.into_iter().collect()))
}

fn swap_heights(d: &WebDiagram, peg: u32, h: u32) -> WebDiagram {
    let flip = |v: u32| {
        if v == h {
            h + 1
        } else if v == h + 1 {
            h
        } else {
            v
        }
    };
    let edges = d
        .edges()
        .iter()
        .map(|e| Edge {
            x: e.x,
            y: e.y,
            a: if e.x == peg { flip(e.a) } else { e.a },
            b: if e.y == peg { flip(e.b) } else { e.b },
        })
        .collect();
    WebDiagram::from_valid_edges(d.n(), edges)
}
