//! Indecomposable blocks, decomposition posets, linear extensions and descent formulas.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::diagram::{rel_edges, Edge, WebDiagram};
use crate::enumeration::web_graph;
use crate::error::{Error, Result};
use crate::numbers::binomial;
use crate::poly::IntPolynomial;
use crate::world::WebWorld;

/// A finite poset on labels `1..=k` whose order refines the label order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poset {
    k: usize,
    /// `leq[i][j]` for 0-based labels.
    leq: Vec<Vec<bool>>,
}

impl Poset {
    /// Reflexive-transitive closure of the given relations, which must respect label order.
    pub fn from_relations(k: usize, relations: &[(usize, usize)]) -> Result<Self> {
        let mut leq = vec![vec![false; k]; k];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(i, j) in relations {
            if i == 0 || j > k || i >= j {
                return Err(Error::Input(format!(
                    "relation ({i}, {j}) is not between labels 1 <= i < j <= {k}"
                )));
            }
            leq[i - 1][j - 1] = true;
        }
        // labels are topologically sorted, so one forward sweep closes transitively
        for j in 0..k {
            for i in (0..j).rev() {
                if leq[i][j] {
                    continue;
                }
                leq[i][j] = (i + 1..j).any(|m| leq[i][m] && leq[m][j]);
            }
        }
        Ok(Self { k, leq })
    }

    pub fn chain(k: usize) -> Self {
        let rel: Vec<_> = (1..k).map(|i| (i, i + 1)).collect();
        Self::from_relations(k, &rel).expect("chain relations are natural")
    }

    pub fn antichain(k: usize) -> Self {
        Self::from_relations(k, &[]).expect("no relations")
    }

    pub fn len(&self) -> usize {
        self.k
    }

    pub fn is_empty(&self) -> bool {
        self.k == 0
    }

    /// `i ⪯ j` for 1-based labels.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i - 1][j - 1]
    }

    /// Cover relations `(i, j)`, 1-based, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let k = self.k;
        let mut out = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                if self.leq[i][j] && !(i + 1..j).any(|m| self.leq[i][m] && self.leq[m][j]) {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }

    pub fn is_partial_order(&self) -> bool {
        let k = self.k;
        (0..k).all(|i| self.leq[i][i])
            && (0..k).all(|i| (0..k).all(|j| i == j || !(self.leq[i][j] && self.leq[j][i])))
            && (0..k).all(|i| {
                (0..k).all(|j| !self.leq[i][j] || (0..k).all(|m| !self.leq[j][m] || self.leq[i][m]))
            })
    }

    /// Relabels by `order`, which lists the old labels in their new positions.
    fn relabel(&self, order: &[usize]) -> Self {
        let k = self.k;
        let mut leq = vec![vec![false; k]; k];
        for (a, &old_a) in order.iter().enumerate() {
            for (b, &old_b) in order.iter().enumerate() {
                leq[a][b] = self.leq[old_a - 1][old_b - 1];
            }
        }
        Self { k, leq }
    }

    /// Representative of the isomorphism class: the natural labelling with the smallest cover list.
    pub fn canonical(&self) -> Self {
        linear_extensions(self)
            .into_iter()
            .map(|le| self.relabel(&le.order))
            .min_by(|a, b| a.covers().cmp(&b.covers()))
            .unwrap_or_else(|| self.clone())
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            k: self.k,
            relations: self.covers().into_iter().map(|(i, j)| [i, j]).collect(),
        }
    }
}

/// `{"k": 3, "relations": [[1,2],[1,3]]}` with cover relations only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub k: usize,
    pub relations: Vec<[usize; 2]>,
}

impl TryFrom<PosetJson> for Poset {
    type Error = Error;

    fn try_from(j: PosetJson) -> Result<Self> {
        let rel: Vec<_> = j.relations.iter().map(|r| (r[0], r[1])).collect();
        Poset::from_relations(j.k, &rel)
    }
}

/// An indecomposable summand of a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// 1-based natural label.
    pub label: usize,
    /// Edges as they sit in the parent diagram, canonically sorted.
    pub edges: Vec<Edge>,
    /// Height-compressed copy on the parent's pegs.
    pub normalized: WebDiagram,
}

/// Strongly connected components of `adj`, in no particular order.
fn strongly_connected(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    struct State<'a> {
        adj: &'a [Vec<usize>],
        index: Vec<Option<usize>>,
        low: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        next: usize,
        out: Vec<Vec<usize>>,
    }
    fn visit(s: &mut State, v: usize) {
        s.index[v] = Some(s.next);
        s.low[v] = s.next;
        s.next += 1;
        s.stack.push(v);
        s.on_stack[v] = true;
        for &w in &s.adj[v] {
            match s.index[w] {
                None => {
                    visit(s, w);
                    s.low[v] = s.low[v].min(s.low[w]);
                }
                Some(iw) if s.on_stack[w] => s.low[v] = s.low[v].min(iw),
                Some(_) => {}
            }
        }
        if Some(s.low[v]) == s.index[v] {
            let mut comp = Vec::new();
            loop {
                let w = s.stack.pop().expect("v is on the stack");
                s.on_stack[w] = false;
                comp.push(w);
                if w == v {
                    break;
                }
            }
            comp.sort_unstable();
            s.out.push(comp);
        }
    }
    let n = adj.len();
    let mut s = State {
        adj,
        index: vec![None; n],
        low: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        next: 0,
        out: Vec::new(),
    };
    for v in 0..n {
        if s.index[v].is_none() {
            visit(&mut s, v);
        }
    }
    s.out
}

/// `e -> e'` when an endpoint of `e` lies strictly below an endpoint of `e'` on a shared peg.
fn below_digraph(d: &WebDiagram) -> Vec<Vec<usize>> {
    let edges = d.edges();
    let mut per_peg: BTreeMap<u32, Vec<(u32, usize)>> = BTreeMap::new();
    for (i, e) in edges.iter().enumerate() {
        per_peg.entry(e.x).or_default().push((e.a, i));
        per_peg.entry(e.y).or_default().push((e.b, i));
    }
    let mut adj = vec![Vec::new(); edges.len()];
    for ends in per_peg.values() {
        for &(h1, i) in ends {
            for &(h2, j) in ends {
                if h1 < h2 && i != j {
                    adj[i].push(j);
                }
            }
        }
    }
    for a in &mut adj {
        a.sort_unstable();
        a.dedup();
    }
    adj
}

fn lowest_endpoint(edges: &[Edge]) -> (u32, u32) {
    edges
        .iter()
        .flat_map(|e| [(e.x, e.a), (e.y, e.b)])
        .min()
        .expect("blocks are non-empty")
}

/// Blocks with their natural labels plus the block-level below relation (0-based, `i < j`).
fn blocks_and_relations(d: &WebDiagram) -> (Vec<Block>, Vec<(usize, usize)>) {
    let adj = below_digraph(d);
    let comps = strongly_connected(&adj);
    let mut comp_of = vec![0; adj.len()];
    for (c, members) in comps.iter().enumerate() {
        for &v in members {
            comp_of[v] = c;
        }
    }
    let nc = comps.len();
    let mut succ = vec![Vec::new(); nc];
    let mut indeg = vec![0usize; nc];
    for (v, outs) in adj.iter().enumerate() {
        for &w in outs {
            let (a, b) = (comp_of[v], comp_of[w]);
            if a != b && !succ[a].contains(&b) {
                succ[a].push(b);
                indeg[b] += 1;
            }
        }
    }
    let edges = d.edges();
    let comp_edges: Vec<Vec<Edge>> = comps
        .iter()
        .map(|m| m.iter().map(|&v| edges[v]).collect())
        .collect();
    let keys: Vec<(u32, u32)> = comp_edges.iter().map(|e| lowest_endpoint(e)).collect();
    // Kahn's algorithm, breaking ties by the lowest endpoint
    let mut order = Vec::with_capacity(nc);
    let mut ready: Vec<usize> = (0..nc).filter(|&c| indeg[c] == 0).collect();
    while !ready.is_empty() {
        let pos = (0..ready.len())
            .min_by_key(|&i| keys[ready[i]])
            .expect("non-empty");
        let c = ready.swap_remove(pos);
        order.push(c);
        for &s in &succ[c] {
            indeg[s] -= 1;
            if indeg[s] == 0 {
                ready.push(s);
            }
        }
    }
    let mut label_of = vec![0; nc];
    for (l, &c) in order.iter().enumerate() {
        label_of[c] = l;
    }
    let blocks = order
        .iter()
        .enumerate()
        .map(|(l, &c)| Block {
            label: l + 1,
            edges: comp_edges[c].clone(),
            normalized: rel_edges(d.n(), &comp_edges[c]),
        })
        .collect();
    let mut rel: Vec<(usize, usize)> = succ
        .iter()
        .enumerate()
        .flat_map(|(a, outs)| outs.iter().map(move |&b| (a, b)))
        .map(|(a, b)| (label_of[a], label_of[b]))
        .collect();
    rel.sort_unstable();
    (blocks, rel)
}

/// Indecomposable blocks of `d` in natural label order.
pub fn decompose(d: &WebDiagram) -> Vec<Block> {
    blocks_and_relations(d).0
}

/// A diagram's blocks together with the order they induce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionPoset {
    blocks: Vec<Block>,
    poset: Poset,
}

impl DecompositionPoset {
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Whether no two blocks have equal normalized diagrams.
    pub fn has_distinct_blocks(&self) -> bool {
        let mut seen: Vec<&WebDiagram> = self.blocks.iter().map(|b| &b.normalized).collect();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// `⊕` of the normalized blocks in label order.
    pub fn recombine(&self, n: u32) -> WebDiagram {
        self.blocks
            .iter()
            .fold(WebDiagram::empty(n), |acc, b| acc.sum(&b.normalized))
    }
}

pub fn decomposition_poset(d: &WebDiagram) -> DecompositionPoset {
    let (blocks, rel) = blocks_and_relations(d);
    let one_based: Vec<_> = rel.iter().map(|&(a, b)| (a + 1, b + 1)).collect();
    let poset = Poset::from_relations(blocks.len(), &one_based).expect("labels are topological");
    DecompositionPoset { blocks, poset }
}

/// The colouring that gives every edge the natural label of its block.
pub fn block_colouring(d: &WebDiagram) -> Vec<u32> {
    let mut c = vec![0; d.len()];
    for b in decompose(d) {
        for e in &b.edges {
            let i = d.edges().binary_search(e).expect("block edges come from d");
            c[i] = b.label as u32;
        }
    }
    c
}

/// A linear extension, listed as the labels in order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearExtension {
    pub order: Vec<usize>,
}

impl LinearExtension {
    pub fn descents(&self) -> usize {
        self.order.windows(2).filter(|w| w[0] > w[1]).count()
    }
}

/// All linear extensions in lexicographic order.
pub fn linear_extensions(p: &Poset) -> Vec<LinearExtension> {
    fn go(p: &Poset, used: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<LinearExtension>) {
        if cur.len() == p.k {
            out.push(LinearExtension { order: cur.clone() });
            return;
        }
        for v in 0..p.k {
            if used[v] || (0..p.k).any(|u| u != v && !used[u] && p.leq[u][v]) {
                continue;
            }
            used[v] = true;
            cur.push(v + 1);
            go(p, used, cur, out);
            cur.pop();
            used[v] = false;
        }
    }
    let mut out = Vec::new();
    go(p, &mut vec![false; p.k], &mut Vec::new(), &mut out);
    out
}

/// Number of linear extensions with each descent count.
pub fn descent_histogram(p: &Poset) -> Vec<usize> {
    let mut h = vec![0; p.k.max(1)];
    for le in linear_extensions(p) {
        h[le.descents()] += 1;
    }
    h
}

/// Order-preserving maps into `1..=m`, from the descent generating function.
pub fn omega(p: &Poset, m: usize) -> BigInt {
    if p.k == 0 {
        return BigInt::one();
    }
    let k = p.k;
    descent_histogram(p)
        .iter()
        .enumerate()
        .filter(|&(des, _)| des < m)
        .map(|(des, &count)| binomial(m - 1 - des + k, k) * count)
        .sum()
}

/// Surjective order-preserving maps onto `1..=m`.
pub fn theta(p: &Poset, m: usize) -> BigInt {
    (0..=m)
        .map(|j| {
            let t = binomial(m, j) * omega(p, j);
            if (m - j) % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum()
}

/// Order-preserving maps into `1..=m`, counted one by one.
pub fn count_order_preserving_maps(p: &Poset, m: usize, surjective: bool) -> Result<BigInt> {
    let k = p.k;
    if k > 10 || (m as f64).powi(k as i32) > 1e8 {
        return Err(Error::BoundsTooLarge(format!("{m}^{k} maps")));
    }
    if k == 0 {
        return Ok(BigInt::from(u8::from(!surjective || m == 0)));
    }
    if m == 0 {
        return Ok(BigInt::zero());
    }
    let mut f = vec![1usize; k];
    let mut count = 0u64;
    let mut hit = vec![false; m];
    loop {
        let ok = (0..k).all(|i| (0..k).all(|j| !p.leq[i][j] || f[i] <= f[j]));
        if ok {
            if surjective {
                hit.iter_mut().for_each(|h| *h = false);
                f.iter().for_each(|&v| hit[v - 1] = true);
                count += u64::from(hit.iter().all(|&h| h));
            } else {
                count += 1;
            }
        }
        let mut i = 0;
        loop {
            if i == k {
                return Ok(BigInt::from(count));
            }
            f[i] += 1;
            if f[i] <= m {
                break;
            }
            f[i] = 1;
            i += 1;
        }
    }
}

/// `sum_π x^(1+des π) (1+x)^(p-1-des π)` over linear extensions.
pub fn descent_colouring_poly(p: &Poset) -> IntPolynomial {
    let k = p.k;
    let one_plus_x = IntPolynomial::from_i64s(&[1, 1]);
    descent_histogram(p)
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c > 0)
        .map(|(des, &c)| {
            let term = &IntPolynomial::x().pow(1 + des) * &one_plus_x.pow(k - 1 - des);
            &term * &BigInt::from(c)
        })
        .sum()
}

/// `sum_π (-1)^des π / (p C(p-1, des π))` over linear extensions.
pub fn descent_mixing(p: &Poset) -> BigRational {
    let k = p.k;
    descent_histogram(p)
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c > 0)
        .map(|(des, &c)| {
            let sign = if des % 2 == 0 { c as i64 } else { -(c as i64) };
            BigRational::new(BigInt::from(sign), binomial(k - 1, des) * k)
        })
        .fold(BigRational::zero(), |a, b| a + b)
}

/// Diagonal colouring-matrix entry from the poset; needs pairwise distinct blocks.
pub fn diag_colouring_poly(dp: &DecompositionPoset) -> Result<IntPolynomial> {
    if !dp.has_distinct_blocks() {
        return Err(Error::RepeatedBlocks);
    }
    Ok(descent_colouring_poly(&dp.poset))
}

/// Diagonal mixing-matrix entry from the poset; needs pairwise distinct blocks.
pub fn diag_mixing(dp: &DecompositionPoset) -> Result<BigRational> {
    if !dp.has_distinct_blocks() {
        return Err(Error::RepeatedBlocks);
    }
    Ok(descent_mixing(&dp.poset))
}

/// Isomorphism classes of decomposition posets across the world, with multiplicities.
pub fn poset_multiset(w: &WebWorld) -> BTreeMap<Poset, usize> {
    let mut out = BTreeMap::new();
    for d in w.diagrams() {
        *out.entry(decomposition_poset(d).poset.canonical())
            .or_insert(0) += 1;
    }
    out
}

/// Traces of `M(x)` and `R` summed over the posets of the world.
pub fn trace_via_posets(w: &WebWorld) -> Result<(IntPolynomial, BigRational)> {
    if let Some((&pair, &label)) = web_graph(w).labels().iter().find(|(_, &l)| l != 1) {
        return Err(Error::LabelNotOne { pair, label });
    }
    let mut mult: BTreeMap<Poset, usize> = BTreeMap::new();
    for d in w.diagrams() {
        let dp = decomposition_poset(d);
        if !dp.has_distinct_blocks() {
            return Err(Error::RepeatedBlocks);
        }
        *mult.entry(dp.poset.canonical()).or_insert(0) += 1;
    }
    let mut trace_m = IntPolynomial::zero();
    let mut trace_r = BigRational::zero();
    for (p, c) in &mult {
        let c = BigInt::from(*c);
        trace_m += &(&descent_colouring_poly(p) * &c);
        trace_r += descent_mixing(p) * BigRational::from_integer(c);
    }
    Ok((trace_m, trace_r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::reconstruct_assignment;
    use crate::diagram::tests::figure_one;
    use crate::matrices::{colouring_entry, mixing_entry};
    use crate::world::web_world;
    use proptest::prelude::*;

    fn d(t: &[(u32, u32, u32, u32)]) -> WebDiagram {
        WebDiagram::from_tuples(t, None).unwrap()
    }

    fn vee() -> Poset {
        Poset::from_relations(3, &[(1, 2), (1, 3)]).unwrap()
    }

    fn wedge() -> Poset {
        Poset::from_relations(3, &[(1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn figure_one_blocks() {
        let fig = figure_one();
        let blocks = decompose(&fig);
        let expected: Vec<Vec<(u32, u32, u32, u32)>> = vec![
            vec![(1, 2, 1, 1)],
            vec![(3, 4, 1, 1)],
            vec![(5, 6, 1, 1)],
            vec![(2, 4, 2, 3), (4, 6, 2, 3), (4, 6, 4, 2)],
            vec![(3, 6, 2, 4)],
            vec![(5, 7, 2, 1)],
            vec![(1, 7, 2, 2)],
        ];
        let got: Vec<Vec<_>> = blocks
            .iter()
            .map(|b| b.edges.iter().map(Edge::as_tuple).collect())
            .collect();
        assert_eq!(got, expected);
        let dp = decomposition_poset(&fig);
        assert_eq!(dp.recombine(fig.n()), fig);
        assert!(dp.poset().is_partial_order());
        let c = block_colouring(&fig);
        assert_eq!(reconstruct_assignment(&fig, &c).unwrap(), fig);
    }

    #[test]
    fn small_decompositions() {
        assert_eq!(decompose(&d(&[(1, 2, 1, 1)])).len(), 1);
        let parallel = d(&[(1, 2, 1, 1), (1, 2, 2, 2)]);
        let blocks = decompose(&parallel);
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0].normalized, blocks[1].normalized);
        let dp = decomposition_poset(&parallel);
        assert!(!dp.has_distinct_blocks());
        assert_eq!(diag_colouring_poly(&dp), Err(Error::RepeatedBlocks));
        assert_eq!(diag_mixing(&dp), Err(Error::RepeatedBlocks));
        let crossed = d(&[(1, 2, 1, 2), (1, 2, 2, 1)]);
        assert_eq!(decompose(&crossed).len(), 1);
        let disjoint = d(&[(1, 2, 1, 1), (3, 4, 1, 1)]);
        assert_eq!(decomposition_poset(&disjoint).poset(), &Poset::antichain(2));
    }

    #[test]
    fn worked_example() {
        let dd = d(&[(1, 2, 1, 1), (1, 3, 2, 1), (2, 4, 2, 1)]);
        let dp = decomposition_poset(&dd);
        assert_eq!(dp.poset(), &vee());
        let les = linear_extensions(dp.poset());
        assert_eq!(
            les.iter().map(|l| l.order.clone()).collect::<Vec<_>>(),
            vec![vec![1, 2, 3], vec![1, 3, 2]]
        );
        assert_eq!(
            les.iter()
                .map(LinearExtension::descents)
                .collect::<Vec<_>>(),
            vec![0, 1]
        );
        assert_eq!(
            diag_colouring_poly(&dp).unwrap(),
            IntPolynomial::from_i64s(&[0, 1, 3, 2])
        );
        assert_eq!(
            diag_mixing(&dp).unwrap(),
            BigRational::new(1.into(), 6.into())
        );
    }

    #[test]
    fn falkirk_posets_and_trace() {
        let w = web_world(&d(&[(1, 2, 1, 1), (2, 3, 2, 1), (3, 4, 2, 1)])).unwrap();
        let ms = poset_multiset(&w);
        let expected = BTreeMap::from([
            (Poset::chain(3).canonical(), 2),
            (vee().canonical(), 1),
            (wedge().canonical(), 1),
        ]);
        assert_eq!(ms, expected);
        let (tm, tr) = trace_via_posets(&w).unwrap();
        assert_eq!(tm, IntPolynomial::from_i64s(&[0, 4, 10, 6]));
        assert_eq!(tr, BigRational::one());
        let single = web_world(&d(&[(1, 2, 1, 1)])).unwrap();
        assert_eq!(
            trace_via_posets(&single).unwrap(),
            (IntPolynomial::x(), BigRational::one())
        );
        let parallel = web_world(&d(&[(1, 2, 1, 1), (1, 2, 2, 2)])).unwrap();
        assert_eq!(
            trace_via_posets(&parallel),
            Err(Error::LabelNotOne {
                pair: (1, 2),
                label: 2
            })
        );
    }

    #[test]
    fn descents_of_small_posets() {
        let mut des: Vec<usize> = linear_extensions(&Poset::antichain(3))
            .iter()
            .map(LinearExtension::descents)
            .collect();
        des.sort_unstable();
        assert_eq!(des, vec![0, 1, 1, 1, 1, 2]);
        for k in 1..=6 {
            let hist = descent_histogram(&Poset::antichain(k));
            for (d, &c) in hist.iter().enumerate() {
                assert_eq!(
                    BigInt::from(c),
                    crate::numbers::eulerian(k, d + 1),
                    "k={k} des={d}"
                );
            }
        }
        let chain = linear_extensions(&Poset::chain(4));
        assert_eq!(chain.len(), 1);
        assert_eq!(chain[0].descents(), 0);
        assert_eq!(linear_extensions(&Poset::antichain(5)).len(), 120);
        assert_eq!(descent_colouring_poly(&Poset::chain(1)), IntPolynomial::x());
        assert_eq!(descent_mixing(&Poset::chain(1)), BigRational::one());
    }

    #[test]
    fn order_preserving_maps() {
        for m in 0..=5 {
            assert_eq!(omega(&Poset::antichain(2), m), BigInt::from(m * m));
        }
        assert_eq!(theta(&Poset::chain(2), 2), BigInt::one());
        assert_eq!(omega(&vee(), 2), BigInt::from(5));
        let shapes = [
            Poset::chain(3),
            vee(),
            wedge(),
            Poset::antichain(3),
            Poset::antichain(4),
            Poset::from_relations(4, &[(1, 3), (2, 3), (2, 4)]).unwrap(),
            Poset::from_relations(5, &[(1, 2), (1, 3), (3, 5), (4, 5)]).unwrap(),
        ];
        for p in &shapes {
            for m in 0..=6 {
                assert_eq!(
                    omega(p, m),
                    count_order_preserving_maps(p, m, false).unwrap(),
                    "{p:?} m={m}"
                );
                assert_eq!(
                    theta(p, m),
                    count_order_preserving_maps(p, m, true).unwrap(),
                    "{p:?} m={m}"
                );
            }
            // the colouring polynomial is the generating function of surjective maps
            let poly = descent_colouring_poly(p);
            for m in 0..=p.len() {
                assert_eq!(poly.coeff(m), theta(p, m));
            }
        }
    }

    #[test]
    fn poset_json() {
        let j = vee().to_json();
        assert_eq!(
            serde_json::to_string(&j).unwrap(),
            r#"{"k":3,"relations":[[1,2],[1,3]]}"#
        );
        assert_eq!(Poset::try_from(j).unwrap(), vee());
        assert!(Poset::from_relations(2, &[(2, 1)]).is_err());
        assert_eq!(Poset::chain(4).covers(), vec![(1, 2), (2, 3), (3, 4)]);
    }

    fn arb_diagram(max_edges: usize) -> impl Strategy<Value = WebDiagram> {
        prop::collection::vec((1u32..=4, 1u32..=4), 1..=max_edges)
            .prop_filter_map("pegs must differ", |pairs| {
                let pairs: Vec<_> = pairs
                    .into_iter()
                    .filter(|(x, y)| x != y)
                    .map(|(x, y)| (x.min(y), x.max(y)))
                    .collect();
                (!pairs.is_empty()).then_some(pairs)
            })
            .prop_flat_map(|pairs| {
                let n = pairs.len();
                (Just(pairs), prop::collection::vec(any::<u32>(), n))
            })
            .prop_map(|(pairs, salt)| {
                // assign heights by the order given by the salt values on each peg
                let mut ends: BTreeMap<u32, Vec<(u32, usize, bool)>> = BTreeMap::new();
                for (i, &(x, y)) in pairs.iter().enumerate() {
                    ends.entry(x).or_default().push((salt[i], i, false));
                    ends.entry(y)
                        .or_default()
                        .push((salt[i].rotate_left(7), i, true));
                }
                let mut heights = vec![(0u32, 0u32); pairs.len()];
                for list in ends.values_mut() {
                    list.sort_unstable();
                    for (h, &(_, i, top)) in list.iter().enumerate() {
                        if top {
                            heights[i].1 = h as u32 + 1;
                        } else {
                            heights[i].0 = h as u32 + 1;
                        }
                    }
                }
                let tuples: Vec<_> = pairs
                    .iter()
                    .zip(&heights)
                    .map(|(&(x, y), &(a, b))| (x, y, a, b))
                    .collect();
                WebDiagram::from_tuples(&tuples, None).unwrap()
            })
    }

    proptest! {
        #[test]
        fn blocks_recombine(dd in arb_diagram(8)) {
            let dp = decomposition_poset(&dd);
            prop_assert_eq!(dp.recombine(dd.n()), dd.clone());
            prop_assert!(dp.poset().is_partial_order());
            for b in dp.blocks() {
                prop_assert_eq!(decompose(&b.normalized).len(), 1);
            }
            let c = block_colouring(&dd);
            prop_assert_eq!(reconstruct_assignment(&dd, &c).unwrap(), dd);
        }

        #[test]
        fn diagonal_formulas_match_brute_force(dd in arb_diagram(6)) {
            let dp = decomposition_poset(&dd);
            if dp.has_distinct_blocks() {
                prop_assert_eq!(diag_colouring_poly(&dp).unwrap(), colouring_entry(&dd, &dd).unwrap());
                prop_assert_eq!(diag_mixing(&dp).unwrap(), mixing_entry(&dd, &dd).unwrap());
            }
        }

        #[test]
        fn canonical_is_isomorphism_invariant(dd in arb_diagram(6)) {
            let p = decomposition_poset(&dd).poset().clone();
            for le in linear_extensions(&p).into_iter().take(6) {
                prop_assert_eq!(p.relabel(&le.order).canonical(), p.canonical());
            }
        }
    }
}
