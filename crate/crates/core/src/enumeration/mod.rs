//! Represent matrices, web graphs, world sizes and web-world counting.

mod series;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use series::TruncatedSeries;

use crate::diagram::{Edge, WebDiagram};
use crate::error::{Error, Result};
use crate::numbers::{binomial, factorial};
use crate::world::WebWorld;

/// Largest number of matrices an enumeration may visit.
pub const MAX_ENUMERATION: u64 = 10_000_000;

/// Strictly upper-triangular matrix of peg-pair edge multiplicities; `get(i, j)` is 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct RepresentMatrix {
    rows: Vec<Vec<u32>>,
}

impl TryFrom<Vec<Vec<u32>>> for RepresentMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        Self::new(rows)
    }
}

impl From<RepresentMatrix> for Vec<Vec<u32>> {
    fn from(m: RepresentMatrix) -> Self {
        m.rows
    }
}

impl RepresentMatrix {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let m = rows.len();
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::MalformedMatrix);
        }
        for (i, r) in rows.iter().enumerate() {
            if r[..=i].iter().any(|&v| v != 0) {
                return Err(Error::NotStrictlyUpperTriangular);
            }
        }
        Ok(Self { rows })
    }

    pub fn zero(m: usize) -> Self {
        Self {
            rows: vec![vec![0; m]; m],
        }
    }

    /// Fills the cells above the diagonal row by row from `cells`.
    fn from_cells(m: usize, cells: &[u32]) -> Self {
        let mut out = Self::zero(m);
        let mut it = cells.iter();
        for i in 0..m {
            for j in i + 1..m {
                out.rows[i][j] = *it.next().expect("cell count");
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Number of edge endpoints on peg `i + 1`: its row sum plus its column sum.
    pub fn hook(&self, i: usize) -> u32 {
        let row: u32 = self.rows[i].iter().sum();
        let col: u32 = self.rows.iter().map(|r| r[i]).sum();
        row + col
    }

    pub fn edge_count(&self) -> u32 {
        self.rows.iter().flatten().sum()
    }

    pub fn pair_count(&self) -> usize {
        self.rows.iter().flatten().filter(|&&v| v > 0).count()
    }

    /// 1-based indices of pegs with no incident edge.
    pub fn isolated_pegs(&self) -> Vec<u32> {
        (0..self.dim())
            .filter(|&i| self.hook(i) == 0)
            .map(|i| i as u32 + 1)
            .collect()
    }

    pub fn has_isolated_pegs(&self) -> bool {
        (0..self.dim()).any(|i| self.hook(i) == 0)
    }

    pub fn web_graph(&self) -> WebGraph {
        let mut labels = BTreeMap::new();
        for (i, r) in self.rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                if v > 0 {
                    labels.insert((i as u32 + 1, j as u32 + 1), v);
                }
            }
        }
        WebGraph::from_labels(labels)
    }

    /// A diagram of the world: edges laid down pair by pair, each taking the next free height.
    pub fn seed_diagram(&self) -> WebDiagram {
        let m = self.dim();
        let mut next = vec![1u32; m];
        let mut edges = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                for _ in 0..self.rows[i][j] {
                    edges.push(Edge {
                        x: i as u32 + 1,
                        y: j as u32 + 1,
                        a: next[i],
                        b: next[j],
                    });
                    next[i] += 1;
                    next[j] += 1;
                }
            }
        }
        WebDiagram::from_valid_edges(m as u32, edges)
    }
}

impl fmt::Display for RepresentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

pub fn represent_of(d: &WebDiagram) -> RepresentMatrix {
    let m = d.n() as usize;
    let mut out = RepresentMatrix::zero(m);
    for e in d.edges() {
        out.rows[e.x as usize - 1][e.y as usize - 1] += 1;
    }
    out
}

pub fn represent(w: &WebWorld) -> RepresentMatrix {
    represent_of(w.first())
}

/// Alias of [`RepresentMatrix::seed_diagram`].
pub fn seed_diagram_from_represent(a: &RepresentMatrix) -> WebDiagram {
    a.seed_diagram()
}

/// `prod_i (row_i + col_i)! / prod_{i<j} a_ij!`.
pub fn world_size(a: &RepresentMatrix) -> BigInt {
    let num: BigInt = (0..a.dim())
        .map(|i| factorial(a.hook(i) as usize))
        .product();
    let den: BigInt = a
        .rows
        .iter()
        .flatten()
        .map(|&v| factorial(v as usize))
        .product();
    num / den
}

/// The web diagram matrix: cell `(x, y)` holds the height pairs `(a, b)` of the edges on that pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WDMatrix {
    cells: Vec<Vec<BTreeSet<(u32, u32)>>>,
}

impl WDMatrix {
    pub fn dim(&self) -> usize {
        self.cells.len()
    }

    /// 0-based cell access.
    pub fn get(&self, i: usize, j: usize) -> &BTreeSet<(u32, u32)> {
        &self.cells[i][j]
    }

    pub fn represent(&self) -> RepresentMatrix {
        RepresentMatrix {
            rows: self
                .cells
                .iter()
                .map(|r| r.iter().map(|s| s.len() as u32).collect())
                .collect(),
        }
    }

    /// For every peg, first components along its row and second components along its column
    /// together form a permutation of `1..=hook`.
    pub fn has_hook_property(&self) -> bool {
        let m = self.dim();
        (0..m).all(|i| {
            let mut hs: Vec<u32> = self.cells[i].iter().flatten().map(|p| p.0).collect();
            hs.extend((0..m).flat_map(|r| self.cells[r][i].iter().map(|p| p.1)));
            hs.sort_unstable();
            hs.iter().enumerate().all(|(k, &h)| h == k as u32 + 1)
        })
    }
}

pub fn wdm(d: &WebDiagram) -> WDMatrix {
    let m = d.n() as usize;
    let mut cells = vec![vec![BTreeSet::new(); m]; m];
    for e in d.edges() {
        cells[e.x as usize - 1][e.y as usize - 1].insert((e.a, e.b));
    }
    WDMatrix { cells }
}

/// Pegs carrying edges, joined when some edge links them; labels count the parallel edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WebGraph {
    vertices: BTreeSet<u32>,
    labels: BTreeMap<(u32, u32), u32>,
}

impl WebGraph {
    fn from_labels(labels: BTreeMap<(u32, u32), u32>) -> Self {
        let vertices = labels.keys().flat_map(|&(x, y)| [x, y]).collect();
        Self { vertices, labels }
    }

    pub fn vertices(&self) -> &BTreeSet<u32> {
        &self.vertices
    }

    pub fn labels(&self) -> &BTreeMap<(u32, u32), u32> {
        &self.labels
    }

    pub fn label(&self, x: u32, y: u32) -> u32 {
        self.labels.get(&(x.min(y), x.max(y))).copied().unwrap_or(0)
    }

    /// Connectivity of the underlying simple graph; the empty graph is not connected.
    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.vertices.iter().next() else {
            return false;
        };
        let mut adj: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for &(x, y) in self.labels.keys() {
            adj.entry(x).or_default().push(y);
            adj.entry(y).or_default().push(x);
        }
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &u in &adj[&v] {
                if seen.insert(u) {
                    queue.push_back(u);
                }
            }
        }
        seen.len() == self.vertices.len()
    }
}

pub fn web_graph_of(d: &WebDiagram) -> WebGraph {
    represent_of(d).web_graph()
}

pub fn web_graph(w: &WebWorld) -> WebGraph {
    web_graph_of(w.first())
}

pub fn is_proper(w: &WebWorld) -> bool {
    web_graph(w).is_connected()
}

/// Every strictly upper-triangular `m x m` matrix with entry sum `total`, each once.
#[derive(Clone, Debug)]
pub struct MatricesWithTotal {
    m: usize,
    cells: Option<Vec<u32>>,
}

impl MatricesWithTotal {
    pub fn new(m: usize, total: u32) -> Self {
        let k = m * m.saturating_sub(1) / 2;
        let cells = if k == 0 {
            (total == 0).then(Vec::new)
        } else {
            let mut c = vec![0; k];
            c[0] = total;
            Some(c)
        };
        Self { m, cells }
    }
}

impl Iterator for MatricesWithTotal {
    type Item = RepresentMatrix;

    fn next(&mut self) -> Option<RepresentMatrix> {
        let cur = self.cells.as_mut()?;
        let out = RepresentMatrix::from_cells(self.m, cur);
        // step to the next weak composition
        let k = cur.len();
        match (0..k.saturating_sub(1)).rev().find(|&i| cur[i] > 0) {
            Some(i) => {
                cur[i] -= 1;
                let tail = std::mem::take(&mut cur[k - 1]);
                cur[i + 1] = tail + 1;
            }
            None => self.cells = None,
        }
        Some(out)
    }
}

/// Number of `m x m` strictly upper-triangular matrices with entry sum at most `max_edges`.
pub fn enumeration_size(max_pegs: usize, max_edges: u32) -> BigInt {
    let cells = max_pegs * max_pegs.saturating_sub(1) / 2;
    if cells == 0 {
        return BigInt::one();
    }
    binomial(cells + max_edges as usize, max_edges as usize)
}

fn guard(count: BigInt, what: impl FnOnce() -> String) -> Result<()> {
    if count > BigInt::from(MAX_ENUMERATION) {
        return Err(Error::BoundsTooLarge(format!(
            "{} ({count} matrices)",
            what()
        )));
    }
    Ok(())
}

/// Every `max_pegs x max_pegs` represent matrix with at most `max_edges` edges, by increasing total.
pub fn enumerate_worlds(
    max_pegs: usize,
    max_edges: u32,
) -> Result<impl Iterator<Item = RepresentMatrix>> {
    guard(enumeration_size(max_pegs, max_edges), || {
        format!("max_pegs = {max_pegs}, max_edges = {max_edges}")
    })?;
    Ok((0..=max_edges).flat_map(move |t| MatricesWithTotal::new(max_pegs, t)))
}

/// Worlds with exactly `edges` edges on pegs `1..=m` with none isolated, for `2 <= m <= edges + 1`.
pub fn census(edges: u32) -> Result<Vec<RepresentMatrix>> {
    if edges > 8 {
        return Err(Error::BoundsTooLarge(format!("census of {edges} edges")));
    }
    Ok((2..=edges as usize + 1)
        .flat_map(|m| MatricesWithTotal::new(m, edges))
        .filter(|a| !a.has_isolated_pegs())
        .collect())
}

fn matrix_count_guard(m: usize, t: u32) -> Result<()> {
    let cells = m * m.saturating_sub(1) / 2;
    let count = if cells == 0 {
        BigInt::one()
    } else {
        binomial(cells + t as usize - 1 + usize::from(t == 0), t as usize)
    };
    guard(count, || format!("m = {m}, t = {t}"))
}

/// Worlds on pegs within `1..=m` with `t` edges over `n` distinct peg pairs, by direct count.
pub fn nww(m: usize, t: u32, n: usize) -> Result<BigInt> {
    matrix_count_guard(m, t)?;
    Ok(BigInt::from(
        MatricesWithTotal::new(m, t)
            .filter(|a| a.pair_count() == n)
            .count(),
    ))
}

/// `[z^t y^n] (1 + y z / (1 - z))^C(m, 2)`.
pub fn nww_series_coefficient(m: usize, t: u32, n: usize) -> BigInt {
    let t = t as usize;
    let mut base = TruncatedSeries::one(&[t, n]);
    for j in 1..=t {
        base.add_term(&[j, 1], num_rational::BigRational::one());
    }
    let pairs = m * m.saturating_sub(1) / 2;
    let c = base
        .pow(pairs)
        .coefficient(&[t, n])
        .expect("orders match the request");
    c.to_integer()
}

/// Worlds on exactly the pegs `1..=a` with `b` edges over `c` peg pairs (closed form).
pub fn nwwnip(a: usize, b: usize, c: usize) -> BigInt {
    if b == 0 || c == 0 {
        return BigInt::zero();
    }
    let sum: BigInt = (0..=a)
        .map(|k| {
            let term = binomial(a, k) * binomial(k * k.saturating_sub(1) / 2, c);
            if (a - k) % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum();
    binomial(b - 1, c - 1) * sum
}

pub fn nwwnip_direct(a: usize, b: u32, c: usize) -> Result<BigInt> {
    matrix_count_guard(a, b)?;
    Ok(BigInt::from(
        MatricesWithTotal::new(a, b)
            .filter(|m| m.pair_count() == c && !m.has_isolated_pegs())
            .count(),
    ))
}

/// Coefficients of `log(1 + sum_j (1 + q x / (1 - x))^C(j, 2) z^j / j!)`, truncated at
/// `x^edges q^pairs z^pegs`.
#[derive(Clone, Debug)]
pub struct NpwwTable {
    series: TruncatedSeries,
}

impl NpwwTable {
    pub fn new(max_edges: usize, max_pairs: usize, max_pegs: usize) -> Self {
        let orders = [max_edges, max_pairs, max_pegs];
        let mut f = TruncatedSeries::zero(&orders);
        for j in 1..=max_pegs {
            let choose = j * (j - 1) / 2;
            let inv_fact = num_rational::BigRational::new(BigInt::one(), factorial(j));
            // (1 + qX)^N = sum_s C(N, s) q^s X^s and [x^e] X^s = C(e - 1, s - 1).
            f.add_term(&[0, 0, j], inv_fact.clone());
            for s in 1..=choose.min(max_pairs) {
                for e in s..=max_edges {
                    let c = binomial(choose, s) * binomial(e - 1, s - 1);
                    f.add_term(&[e, s, j], inv_fact.clone() * c);
                }
            }
        }
        Self {
            series: f.log_one_plus(max_pegs.max(1)),
        }
    }

    /// Proper worlds on pegs `1..=pegs` with `edges` edges over `pairs` peg pairs.
    pub fn get(&self, edges: usize, pairs: usize, pegs: usize) -> Result<BigInt> {
        let c = self.series.coefficient(&[edges, pairs, pegs])?;
        Ok((c * factorial(pegs)).to_integer())
    }
}

/// `npww(edges, pairs, pegs)` from the series.
pub fn npww(edges: usize, pairs: usize, pegs: usize) -> BigInt {
    NpwwTable::new(edges, pairs, pegs)
        .get(edges, pairs, pegs)
        .expect("table built to the requested orders")
}

/// Connected represent matrices on exactly `pegs` pegs, counted one by one.
pub fn npww_direct(edges: u32, pairs: usize, pegs: usize) -> Result<BigInt> {
    matrix_count_guard(pegs, edges)?;
    Ok(BigInt::from(
        MatricesWithTotal::new(pegs, edges)
            .filter(|a| {
                a.pair_count() == pairs && !a.has_isolated_pegs() && a.web_graph().is_connected()
            })
            .count(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::world::{web_world, web_world_with_limits, Limits};

    fn d(t: &[(u32, u32, u32, u32)]) -> WebDiagram {
        WebDiagram::from_tuples(t, None).unwrap()
    }

    fn rm(rows: &[&[u32]]) -> RepresentMatrix {
        RepresentMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn figure_one_represent() {
        let fig = crate::diagram::tests::figure_one();
        let a = represent_of(&fig);
        let expected = rm(&[
            &[0, 1, 0, 0, 0, 0, 1],
            &[0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 1, 0, 1, 0],
            &[0, 0, 0, 0, 0, 2, 0],
            &[0, 0, 0, 0, 0, 1, 1],
            &[0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, 0],
        ]);
        assert_eq!(a, expected);
        assert_eq!(world_size(&a), BigInt::from(9216));
        let w = wdm(&fig);
        assert_eq!(w.get(3, 5), &BTreeSet::from([(2, 3), (4, 2)]));
        assert!(w.has_hook_property());
        assert_eq!(w.represent(), a);
        assert!(web_graph_of(&fig).is_connected());
    }

    #[test]
    fn small_world_sizes() {
        assert_eq!(world_size(&rm(&[&[0, 2], &[0, 0]])), BigInt::from(2));
        assert_eq!(world_size(&rm(&[&[0, 1], &[0, 0]])), BigInt::from(1));
        assert_eq!(world_size(&RepresentMatrix::zero(0)), BigInt::from(1));
    }

    #[test]
    fn matrix_validation() {
        assert_eq!(
            RepresentMatrix::new(vec![vec![1, 0], vec![0, 0]]),
            Err(Error::NotStrictlyUpperTriangular)
        );
        assert_eq!(
            RepresentMatrix::new(vec![vec![0, 1], vec![0]]),
            Err(Error::MalformedMatrix)
        );
        let a: RepresentMatrix = serde_json::from_str("[[0,2],[0,0]]").unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), "[[0,2],[0,0]]");
        assert!(serde_json::from_str::<RepresentMatrix>("[[0,0],[1,0]]").is_err());
    }

    #[test]
    fn properness() {
        assert!(is_proper(&web_world(&d(&[(1, 2, 1, 1)])).unwrap()));
        assert!(!is_proper(
            &web_world(&d(&[(1, 2, 1, 1), (3, 4, 1, 1)])).unwrap()
        ));
        assert!(!is_proper(&web_world(&WebDiagram::empty(2)).unwrap()));
    }

    #[test]
    fn seed_diagrams_round_trip() {
        for a in enumerate_worlds(4, 4).unwrap() {
            let seed = a.seed_diagram();
            assert_eq!(represent_of(&seed), a);
            assert!(wdm(&seed).has_hook_property());
        }
    }

    /// Orbit size by brute force over every per-peg permutation family.
    fn product_orbit_size(seed: &WebDiagram) -> usize {
        fn perms(p: u32) -> Vec<Vec<u32>> {
            let mut v: Vec<u32> = (1..=p).collect();
            let mut out = vec![v.clone()];
            loop {
                let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
                    return out;
                };
                let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
                v.swap(i - 1, j);
                v[i..].reverse();
                out.push(v.clone());
            }
        }
        let per_peg: Vec<Vec<Vec<u32>>> = seed.pegs().into_iter().map(perms).collect();
        let mut seen = std::collections::HashSet::new();
        let mut idx = vec![0usize; per_peg.len()];
        loop {
            let fam = crate::world::PegPermutationFamily::new(
                idx.iter()
                    .zip(&per_peg)
                    .map(|(&i, p)| p[i].clone())
                    .collect(),
            )
            .unwrap();
            seen.insert(crate::world::apply_permutations(seed, &fam).unwrap());
            let mut k = 0;
            loop {
                if k == idx.len() {
                    return seen.len();
                }
                idx[k] += 1;
                if idx[k] < per_peg[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }

    #[test]
    fn world_size_matches_orbit_enumeration() {
        for a in enumerate_worlds(4, 3).unwrap() {
            let seed = a.seed_diagram();
            let bfs = web_world(&seed).unwrap().len();
            assert_eq!(world_size(&a), BigInt::from(bfs), "{a}");
            assert_eq!(product_orbit_size(&seed), bfs, "{a}");
        }
    }

    #[test]
    fn enumeration_examples() {
        let all: Vec<_> = enumerate_worlds(2, 2).unwrap().collect();
        assert_eq!(
            all,
            vec![
                rm(&[&[0, 0], &[0, 0]]),
                rm(&[&[0, 1], &[0, 0]]),
                rm(&[&[0, 2], &[0, 0]])
            ]
        );
        let n = enumerate_worlds(4, 3).unwrap().count();
        assert_eq!(BigInt::from(n), enumeration_size(4, 3));
        let mut sorted: Vec<_> = enumerate_worlds(4, 3).unwrap().collect();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), n);
        assert!(matches!(
            enumerate_worlds(8, 20),
            Err(Error::BoundsTooLarge(_))
        ));
    }

    #[test]
    fn three_edge_census() {
        let c = census(3).unwrap();
        assert_eq!(c.len(), 30);
        let per_m: Vec<usize> = (2..=4)
            .map(|m| c.iter().filter(|a| a.dim() == m).count())
            .collect();
        assert_eq!(per_m, vec![1, 7, 22]);
    }

    #[test]
    fn nww_examples_and_agreement() {
        for t in 1..=5 {
            assert_eq!(nww(2, t, 1).unwrap(), BigInt::one());
        }
        assert_eq!(nww(2, 0, 0).unwrap(), BigInt::one());
        assert_eq!(nww(3, 2, 2).unwrap(), BigInt::from(3));
        for m in 2..=5 {
            let cells = m * (m - 1) / 2;
            for t in 0..=6u32 {
                for n in 0..=6 {
                    let direct = nww(m, t, n).unwrap();
                    assert_eq!(direct, nww_series_coefficient(m, t, n), "m={m} t={t} n={n}");
                    // choose the occupied cells, then a composition of t into them
                    let formula = if n == 0 {
                        BigInt::from(u8::from(t == 0))
                    } else if t == 0 {
                        BigInt::zero()
                    } else {
                        binomial(cells, n) * binomial(t as usize - 1, n - 1)
                    };
                    assert_eq!(direct, formula, "m={m} t={t} n={n}");
                }
            }
        }
    }

    #[test]
    fn nwwnip_examples_and_agreement() {
        assert_eq!(nwwnip(2, 1, 1), BigInt::one());
        assert_eq!(nwwnip(3, 1, 1), BigInt::zero());
        let total: BigInt = (2..=6)
            .flat_map(|a| (1..=3).map(move |c| nwwnip(a, 3, c)))
            .sum();
        assert_eq!(total, BigInt::from(75));
        for a in 2..=5 {
            for b in 1..=6u32 {
                for c in 1..=6 {
                    assert_eq!(
                        nwwnip(a, b as usize, c),
                        nwwnip_direct(a, b, c).unwrap(),
                        "a={a} b={b} c={c}"
                    );
                }
            }
        }
    }

    #[test]
    fn npww_examples_and_agreement() {
        for m in 1..=5 {
            assert_eq!(npww(m, 1, 2), BigInt::one());
        }
        assert_eq!(npww(1, 1, 3), BigInt::zero());
        assert_eq!(npww(3, 3, 3), BigInt::one());
        assert_eq!(npww_direct(3, 3, 3).unwrap(), BigInt::one());
        let table = NpwwTable::new(6, 6, 4);
        for edges in 1..=6 {
            for pairs in 1..=6 {
                for pegs in 1..=4 {
                    assert_eq!(
                        table.get(edges, pairs, pegs).unwrap(),
                        npww_direct(edges as u32, pairs, pegs).unwrap(),
                        "edges={edges} pairs={pairs} pegs={pegs}"
                    );
                }
            }
        }
        assert!(matches!(
            table.get(7, 1, 2),
            Err(Error::SeriesTruncationTooSmall { variable: 0, .. })
        ));
    }

    #[test]
    fn figure_one_orbit_with_raised_guard() {
        let fig = crate::diagram::tests::figure_one();
        let limits = Limits {
            max_world_size: 10_000,
            ..Limits::default()
        };
        assert_eq!(web_world_with_limits(&fig, &limits).unwrap().len(), 9216);
    }

    #[test]
    fn pair_statistics() {
        let fig = crate::diagram::tests::figure_one();
        let a = represent_of(&fig);
        assert_eq!(a.edge_count() as usize, fig.len());
        assert_eq!(a.pair_count(), fig.peg_pairs().len());
        assert!(a.isolated_pegs().is_empty());
        assert_eq!(
            rm(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]).isolated_pegs(),
            vec![3]
        );
    }
}
