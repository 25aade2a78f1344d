//! Worlds encoded by sign sequences: the path world on pegs `1..=n+2` (linear) and the
//! cycle world on pegs `1..=n` (cyclic).
//!
//! Edges are kept in their labelled order `e_1, e_2, ...`; colourings index that order.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::colouring::{all_colourings, Reconstructor, SurjectiveColourings};
use crate::diagram::{Edge, WebDiagram};
use crate::error::{Error, Result};
use crate::matrices::{diagonal_traces, mixing_from_counts, WorldMatrix};
use crate::numbers::{factorial, stirling2};
use crate::poly::IntPolynomial;
use crate::world::{web_world, WebWorld};

/// Largest `n` accepted by the enumerating helpers here.
pub const MAX_SIGNED_N: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Linear,
    Cyclic,
}

impl Variant {
    /// Number of edges, which is also the colouring length.
    pub fn edge_count(self, n: usize) -> usize {
        match self {
            Variant::Linear => n + 1,
            Variant::Cyclic => n,
        }
    }

    fn min_n(self) -> usize {
        match self {
            Variant::Linear => 1,
            Variant::Cyclic => 2,
        }
    }
}

/// A sequence in `{+1, -1}^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignCode(Vec<i8>);

impl SignCode {
    pub fn new(values: Vec<i8>) -> Result<Self> {
        if let Some(v) = values.iter().find(|&&v| v != 1 && v != -1) {
            return Err(Error::InvalidSignCode(format!("entry {v} is not +1 or -1")));
        }
        Ok(Self(values))
    }

    /// Accepts `+-+` or comma-separated `1,-1,+1`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Result<Vec<i8>> = if s.contains(',') {
            s.split(',')
                .map(|t| match t.trim() {
                    "1" | "+1" | "+" => Ok(1),
                    "-1" | "-" => Ok(-1),
                    other => Err(Error::InvalidSignCode(format!("bad entry {other:?}"))),
                })
                .collect()
        } else {
            s.chars()
                .map(|ch| match ch {
                    '+' => Ok(1),
                    '-' => Ok(-1),
                    other => Err(Error::InvalidSignCode(format!("bad character {other:?}"))),
                })
                .collect()
        };
        Self::new(values?)
    }

    /// Bit `i` of `index` set means entry `i + 1` is `-1`.
    pub fn from_index(n: usize, index: usize) -> Self {
        Self(
            (0..n)
                .map(|i| if index >> i & 1 == 1 { -1 } else { 1 })
                .collect(),
        )
    }

    pub fn index(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == -1)
            .map(|(i, _)| 1 << i)
            .sum()
    }

    /// All `2^n` codes, ordered by `index`.
    pub fn all(n: usize) -> Vec<Self> {
        (0..1usize << n).map(|i| Self::from_index(n, i)).collect()
    }

    pub fn values(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn plus_mask(&self) -> u64 {
        mask(
            self.0
                .iter()
                .enumerate()
                .filter(|(_, &v)| v == 1)
                .map(|(i, _)| i + 1),
        )
    }
}

impl fmt::Display for SignCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in &self.0 {
            f.write_str(if v == 1 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

fn mask(positions: impl IntoIterator<Item = usize>) -> u64 {
    positions.into_iter().fold(0, |m, p| m | 1 << (p - 1))
}

fn positions(mask: u64) -> Vec<usize> {
    (1..=64).filter(|&p| mask >> (p - 1) & 1 == 1).collect()
}

fn check_n(n: usize, variant: Variant) -> Result<()> {
    if n < variant.min_n() {
        return Err(Error::Input(format!(
            "{variant:?} sign-code worlds need n >= {}",
            variant.min_n()
        )));
    }
    if n > MAX_SIGNED_N {
        return Err(Error::BoundsTooLarge(format!(
            "n = {n} exceeds {MAX_SIGNED_N}"
        )));
    }
    Ok(())
}

/// `e_i = (i, i+1, x_i, y_{i+1})` for `i = 1..=n+1`; `π(i) = +1` puts `e_i` below `e_{i+1}` on
/// peg `i + 1`.
pub fn linear_edges(pi: &SignCode) -> Result<Vec<Edge>> {
    let n = pi.len();
    check_n(n, Variant::Linear)?;
    let v = pi.values();
    Ok((1..=n + 1)
        .map(|i| {
            let left = if i == 1 || v[i - 2] == -1 { 1 } else { 2 };
            let right = if i == n + 1 || v[i - 1] == 1 { 1 } else { 2 };
            Edge {
                x: i as u32,
                y: i as u32 + 1,
                a: left,
                b: right,
            }
        })
        .collect())
}

/// `e_i = (i, i+1, x_i, y_{i+1})` for `i < n` and `e_n = (1, n, y_1, x_n)`; `π(i) = +1` puts
/// `e_{i-1}` below `e_i` on peg `i` (with `e_0 = e_n`).
pub fn cyclic_edges(pi: &SignCode) -> Result<Vec<Edge>> {
    let n = pi.len();
    check_n(n, Variant::Cyclic)?;
    let own = |i: usize| if pi.values()[i - 1] == 1 { 2 } else { 1 };
    let prev = |i: usize| 3 - own(i);
    let mut edges: Vec<Edge> = (1..n)
        .map(|i| Edge {
            x: i as u32,
            y: i as u32 + 1,
            a: own(i),
            b: prev(i + 1),
        })
        .collect();
    edges.push(Edge {
        x: 1,
        y: n as u32,
        a: prev(1),
        b: own(n),
    });
    Ok(edges)
}

pub fn labelled_edges(pi: &SignCode, variant: Variant) -> Result<Vec<Edge>> {
    match variant {
        Variant::Linear => linear_edges(pi),
        Variant::Cyclic => cyclic_edges(pi),
    }
}

pub fn signed_diagram(pi: &SignCode, variant: Variant) -> Result<WebDiagram> {
    let edges = labelled_edges(pi, variant)?;
    let pegs = match variant {
        Variant::Linear => pi.len() + 2,
        Variant::Cyclic => pi.len(),
    };
    Ok(WebDiagram::from_valid_edges(pegs as u32, edges))
}

/// Reads the code back from edges in labelled order.
pub fn decode_labelled(edges: &[Edge], variant: Variant) -> SignCode {
    match variant {
        Variant::Linear => {
            let n = edges.len() - 1;
            SignCode(
                (0..n)
                    .map(|i| if edges[i].b == 1 { 1 } else { -1 })
                    .collect(),
            )
        }
        Variant::Cyclic => {
            let n = edges.len();
            SignCode(
                (1..=n)
                    .map(|i| {
                        let own = if i < n {
                            edges[i - 1].a
                        } else {
                            edges[n - 1].b
                        };
                        if own == 2 {
                            1
                        } else {
                            -1
                        }
                    })
                    .collect(),
            )
        }
    }
}

/// Reads the code of a diagram in canonical edge order.
///
/// In the cyclic world with `n = 2` both edges join pegs 1 and 2, so the labelling cannot be
/// recovered and this errors.
pub fn decode(d: &WebDiagram, variant: Variant) -> Result<SignCode> {
    let edges = d.edges();
    match variant {
        Variant::Linear => Ok(decode_labelled(edges, variant)),
        Variant::Cyclic => {
            let n = edges.len();
            if n < 3 {
                return Err(Error::Input(
                    "cyclic diagrams with fewer than 3 edges have no edge labelling".into(),
                ));
            }
            // canonical order is e_1, e_n, e_2, ..., e_{n-1}
            let mut labelled = Vec::with_capacity(n);
            labelled.push(edges[0]);
            labelled.extend_from_slice(&edges[2..]);
            labelled.push(edges[1]);
            Ok(decode_labelled(&labelled, variant))
        }
    }
}

/// The world of all `2^n` codes (for the cyclic world at `n = 2` the unlabelled diagrams
/// collapse to 2).
pub fn signed_world(n: usize, variant: Variant) -> Result<WebWorld> {
    web_world(&signed_diagram(&SignCode(vec![1; n]), variant)?)
}

/// Descent, plateau and ascent positions of a colouring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DEATriple {
    pub des: Vec<usize>,
    pub equ: Vec<usize>,
    pub asc: Vec<usize>,
    pub cyclic: bool,
}

/// `(des, asc)` masks. Linear compares `c(i)` with `c(i+1)` for `i < len`; cyclic also compares
/// `c(len)` with `c(1)`.
fn dea_masks(c: &[u32], cyclic: bool) -> (u64, u64) {
    let len = c.len();
    let last = if cyclic { len } else { len - 1 };
    let (mut des, mut asc) = (0, 0);
    for i in 0..last {
        let (a, b) = (c[i], c[(i + 1) % len]);
        if a > b {
            des |= 1 << i;
        } else if a < b {
            asc |= 1 << i;
        }
    }
    (des, asc)
}

pub fn dea(c: &[u32], cyclic: bool) -> DEATriple {
    let (des, asc) = dea_masks(c, cyclic);
    let n = if cyclic {
        c.len()
    } else {
        c.len().saturating_sub(1)
    };
    let all = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    DEATriple {
        des: positions(des),
        equ: positions(all & !des & !asc),
        asc: positions(asc),
        cyclic,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YPartition {
    pub y1: Vec<usize>,
    pub y2: Vec<usize>,
    pub y3: Vec<usize>,
    pub y4: Vec<usize>,
}

#[derive(Clone, Copy)]
struct YMasks([u64; 4]);

fn y_masks(pi: &SignCode, sigma: &SignCode) -> Result<YMasks> {
    if pi.len() != sigma.len() {
        return Err(Error::DimensionMismatch(format!(
            "sign codes of length {} and {}",
            pi.len(),
            sigma.len()
        )));
    }
    let full = mask(1..=pi.len());
    let (p, s) = (pi.plus_mask(), sigma.plus_mask());
    Ok(YMasks([
        p & !s & full,
        !p & !s & full,
        p & s,
        !p & s & full,
    ]))
}

/// Position `i` goes to `Y_{(5 + 2σ_i - π_i)/2}`.
pub fn y_partition(pi: &SignCode, sigma: &SignCode) -> Result<YPartition> {
    let YMasks(m) = y_masks(pi, sigma)?;
    Ok(YPartition {
        y1: positions(m[0]),
        y2: positions(m[1]),
        y3: positions(m[2]),
        y4: positions(m[3]),
    })
}

/// Counts of colourings of each colour count by `(descent set, ascent set)`.
#[derive(Clone, Debug)]
pub struct WordEulerTable {
    n: usize,
    variant: Variant,
    /// Index `k - 1`.
    by_colours: Vec<HashMap<(u64, u64), u64>>,
}

impl WordEulerTable {
    pub fn new(n: usize, variant: Variant) -> Result<Self> {
        check_n(n, variant)?;
        let len = variant.edge_count(n);
        let cyclic = variant == Variant::Cyclic;
        let by_colours = (1..=len)
            .map(|k| {
                let mut counts = HashMap::new();
                let mut stream = SurjectiveColourings::new(len, k).expect("1 <= k <= len");
                while let Some(c) = stream.next_assignment() {
                    *counts.entry(dea_masks(c, cyclic)).or_insert(0) += 1;
                }
                counts
            })
            .collect();
        Ok(Self {
            n,
            variant,
            by_colours,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// `wordeuler_{n,k}(des, equ, asc)`; zero unless the three sets partition `1..=n`.
    pub fn wordeuler(&self, k: usize, des: &[usize], equ: &[usize], asc: &[usize]) -> u64 {
        let (d, e, a) = (
            mask(des.iter().copied()),
            mask(equ.iter().copied()),
            mask(asc.iter().copied()),
        );
        let disjoint = d & e == 0 && d & a == 0 && e & a == 0;
        if !disjoint || d | e | a != mask(1..=self.n) {
            return 0;
        }
        self.lookup(k, d, a)
    }

    fn lookup(&self, k: usize, des: u64, asc: u64) -> u64 {
        if k == 0 || k > self.by_colours.len() {
            return 0;
        }
        self.by_colours[k - 1]
            .get(&(des, asc))
            .copied()
            .unwrap_or(0)
    }

    fn f_masks(&self, y: YMasks, k: usize) -> u64 {
        let [y1, y2, y3, y4] = y.0;
        let mut total = 0;
        for a in submasks(y2) {
            for b in submasks(y3) {
                total += self.lookup(k, y1 | a, y4 | b);
            }
        }
        total
    }

    /// `Σ_{A ⊆ Y2, B ⊆ Y3} wordeuler(Y1 ∪ A, Y2 ∪ Y3 - A - B, Y4 ∪ B)`.
    pub fn f(&self, pi: &SignCode, sigma: &SignCode, k: usize) -> Result<BigInt> {
        self.check_len(pi)?;
        Ok(BigInt::from(self.f_masks(y_masks(pi, sigma)?, k)))
    }

    pub fn colouring_entry(&self, pi: &SignCode, sigma: &SignCode) -> Result<IntPolynomial> {
        self.check_len(pi)?;
        let y = y_masks(pi, sigma)?;
        let mut coeffs = vec![BigInt::zero()];
        coeffs.extend((1..=self.by_colours.len()).map(|k| BigInt::from(self.f_masks(y, k))));
        Ok(IntPolynomial::from_coeffs(coeffs))
    }

    /// Closed-form colouring matrix over `SignCode::all(n)`.
    pub fn colouring_matrix(&self) -> WorldMatrix<IntPolynomial> {
        let codes = SignCode::all(self.n);
        let rows = codes
            .iter()
            .map(|p| {
                codes
                    .iter()
                    .map(|s| self.colouring_entry(p, s).expect("same length"))
                    .collect()
            })
            .collect();
        WorldMatrix::from_rows(rows).expect("square")
    }

    fn check_len(&self, pi: &SignCode) -> Result<()> {
        if pi.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "sign code of length {} for n = {}",
                pi.len(),
                self.n
            )));
        }
        Ok(())
    }
}

fn submasks(m: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(m);
    std::iter::from_fn(move || {
        let cur = next?;
        next = (cur != 0).then(|| (cur - 1) & m);
        Some(cur)
    })
}

/// One-off `f(D_π, D_σ, k)` from the partition formula.
pub fn case23_f(pi: &SignCode, sigma: &SignCode, k: usize, variant: Variant) -> Result<BigInt> {
    WordEulerTable::new(pi.len(), variant)?.f(pi, sigma, k)
}

/// Colouring matrix over `SignCode::all(n)` by recolouring the labelled edges directly.
///
/// Unlike the generic world pipeline this keeps all `2^n` codes distinct even when two
/// diagrams coincide as edge sets.
pub fn labelled_colouring_matrix(n: usize, variant: Variant) -> Result<WorldMatrix<IntPolynomial>> {
    check_n(n, variant)?;
    let len = variant.edge_count(n);
    let codes = SignCode::all(n);
    let mut rows = Vec::with_capacity(codes.len());
    let mut buf = Vec::with_capacity(len);
    for pi in &codes {
        let rec = Reconstructor::labelled(
            match variant {
                Variant::Linear => n as u32 + 2,
                Variant::Cyclic => n as u32,
            },
            &labelled_edges(pi, variant)?,
        );
        let mut counts = vec![vec![0u64; len + 1]; codes.len()];
        for c in all_colourings(len) {
            rec.apply_unsorted(c.assignment(), &mut buf);
            counts[decode_labelled(&buf, variant).index()][c.colours() as usize] += 1;
        }
        rows.push(
            counts
                .into_iter()
                .map(|cs| IntPolynomial::from_coeffs(cs.into_iter().map(BigInt::from).collect()))
                .collect(),
        );
    }
    WorldMatrix::from_rows(rows)
}

/// `(trace R, trace M)` in closed form for the linear world.
pub fn case2_traces(n: usize) -> (BigRational, IntPolynomial) {
    let m = (1..=n + 1)
        .map(|k| {
            let c = factorial(k) * (stirling2(n + 2, k + 1) - stirling2(n + 1, k + 1));
            IntPolynomial::monomial(c, k)
        })
        .sum();
    (BigRational::one(), m)
}

/// `(trace R, trace M)` in closed form for the cyclic world.
pub fn case3_traces(n: usize) -> (BigRational, IntPolynomial) {
    let m = IntPolynomial::x()
        + (1..=n + 1)
            .map(|k| IntPolynomial::monomial(factorial(k) * stirling2(n + 1, k + 1), k))
            .sum::<IntPolynomial>();
    (BigRational::from_integer(BigInt::from(n + 1)), m)
}

/// Traces from the world pipeline; the cyclic world at `n = 2` uses the labelled matrix.
pub fn brute_traces(n: usize, variant: Variant) -> Result<(BigRational, IntPolynomial)> {
    check_n(n, variant)?;
    if variant == Variant::Cyclic && n == 2 {
        let m = labelled_colouring_matrix(n, variant)?.trace();
        return Ok((mixing_from_counts(&m), m));
    }
    let (m, r) = diagonal_traces(&signed_world(n, variant)?);
    Ok((r, m))
}
