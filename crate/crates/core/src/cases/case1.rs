//! Worlds of `n` single edges from pegs `1..=n` to a common peg `n + 1`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::diagram::{Edge, WebDiagram};
use crate::error::{Error, Result};
use crate::numbers::{binomial, factorial, sign};
use crate::poly::IntPolynomial;
use crate::world::{web_world, WebWorld};

fn check_permutation(p: &[u32]) -> Result<()> {
    let mut seen = vec![false; p.len()];
    for &v in p {
        if v == 0 || v as usize > p.len() || seen[v as usize - 1] {
            return Err(Error::NotAPermutation {
                peg: 0,
                values: p.to_vec(),
            });
        }
        seen[v as usize - 1] = true;
    }
    Ok(())
}

/// `{(π(i), n + 1, 1, i)}`.
pub fn case1_diagram(pi: &[u32]) -> Result<WebDiagram> {
    check_permutation(pi)?;
    let n = pi.len() as u32;
    let edges = pi
        .iter()
        .enumerate()
        .map(|(i, &p)| Edge {
            x: p,
            y: n + 1,
            a: 1,
            b: i as u32 + 1,
        })
        .collect();
    Ok(WebDiagram::from_valid_edges(n + 1, edges))
}

/// The permutation of a Case 1 diagram, or `None` for diagrams of another shape.
pub fn case1_permutation(d: &WebDiagram) -> Option<Vec<u32>> {
    let n = d.n().checked_sub(1)?;
    if d.len() != n as usize {
        return None;
    }
    let mut pi = vec![0; n as usize];
    for e in d.edges() {
        if e.y != n + 1 || e.a != 1 {
            return None;
        }
        pi[e.b as usize - 1] = e.x;
    }
    check_permutation(&pi).ok().map(|_| pi)
}

pub fn case1_world(n: usize) -> Result<WebWorld> {
    let id: Vec<u32> = (1..=n as u32).collect();
    web_world(&case1_diagram(&id)?)
}

/// Positions `1..=n` sorted by colour, ties by position.
pub fn alpha(c: &[u32]) -> Vec<u32> {
    let mut pos: Vec<u32> = (1..=c.len() as u32).collect();
    pos.sort_by_key(|&i| (c[i as usize - 1], i));
    pos
}

/// `(π ∘ α)(i) = π(α(i))`.
pub fn compose(pi: &[u32], alpha: &[u32]) -> Vec<u32> {
    alpha.iter().map(|&a| pi[a as usize - 1]).collect()
}

/// The fewest-colour colouring turning `D_π` into `D_σ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minimal {
    /// Letters of `σ`, split into the left-to-right passes over `π`.
    pub blocks: Vec<Vec<u32>>,
    /// Colour of each edge in canonical edge order, i.e. indexed by peg `π(i)`.
    pub colouring: Vec<u32>,
}

impl Minimal {
    pub fn m(&self) -> usize {
        self.blocks.len()
    }

    /// The same colouring indexed by the edge heights `1..=n` on the shared peg.
    pub fn colouring_by_position(&self, pi: &[u32]) -> Vec<u32> {
        pi.iter().map(|&p| self.colouring[p as usize - 1]).collect()
    }
}

pub fn minimal(pi: &[u32], sigma: &[u32]) -> Result<Minimal> {
    check_permutation(pi)?;
    check_permutation(sigma)?;
    if pi.len() != sigma.len() {
        return Err(Error::DimensionMismatch(format!(
            "permutations of length {} and {}",
            pi.len(),
            sigma.len()
        )));
    }
    let n = pi.len();
    let mut where_in_pi = vec![0usize; n + 1];
    for (i, &v) in pi.iter().enumerate() {
        where_in_pi[v as usize] = i;
    }
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    let mut last: Option<usize> = None;
    for &s in sigma {
        let p = where_in_pi[s as usize];
        match last {
            Some(l) if p > l => blocks.last_mut().expect("open pass").push(s),
            _ => blocks.push(vec![s]),
        }
        last = Some(p);
    }
    let mut colouring = vec![0; n];
    for (b, letters) in blocks.iter().enumerate() {
        for &v in letters {
            colouring[v as usize - 1] = b as u32 + 1;
        }
    }
    Ok(Minimal { blocks, colouring })
}

/// `f(D_π, D_σ, k) = C(n - m, k - m)`.
pub fn case1_f(pi: &[u32], sigma: &[u32], k: usize) -> Result<BigInt> {
    let m = minimal(pi, sigma)?.m();
    let n = pi.len();
    Ok(if k < m {
        BigInt::from(0)
    } else {
        binomial(n - m, k - m)
    })
}

/// Colouring-matrix entry `x^m (1+x)^(n-m)`.
pub fn case1_colouring_entry(n: usize, m: usize) -> IntPolynomial {
    &IntPolynomial::x().pow(m) * &IntPolynomial::from_i64s(&[1, 1]).pow(n - m)
}

/// Mixing-matrix entry `(-1)^(m-1) / (n C(n-1, m-1))`.
pub fn case1_mixing_entry(n: usize, m: usize) -> BigRational {
    BigRational::new(sign(m - 1), binomial(n - 1, m - 1) * n)
}

pub fn case1_entries(pi: &[u32], sigma: &[u32]) -> Result<(IntPolynomial, BigRational)> {
    let n = pi.len();
    let m = minimal(pi, sigma)?.m();
    Ok((case1_colouring_entry(n, m), case1_mixing_entry(n, m)))
}

/// `(trace R, trace M) = ((n-1)!, n! x (1+x)^(n-1))`.
pub fn case1_traces(n: usize) -> (BigRational, IntPolynomial) {
    let r = BigRational::from_integer(factorial(n - 1));
    let m = &case1_colouring_entry(n, 1) * &factorial(n);
    (r, m)
}

/// For each `k`, how many `σ` have `minimal(π, σ) = k` (index 0 unused).
pub fn minimal_class_sizes(pi: &[u32]) -> Result<Vec<usize>> {
    check_permutation(pi)?;
    let n = pi.len();
    let mut counts = vec![0; n + 1];
    let mut sigma: Vec<u32> = (1..=n as u32).collect();
    loop {
        counts[minimal(pi, &sigma)?.m()] += 1;
        if !next_permutation(&mut sigma) {
            return Ok(counts);
        }
    }
}

pub(crate) fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<u32>> {
    let mut v: Vec<u32> = (1..=n as u32).collect();
    let mut out = vec![v.clone()];
    while next_permutation(&mut v) {
        out.push(v.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::{all_colourings, reconstruct_assignment};
    use crate::matrices::{colouring_matrix, mixing_from_colouring};
    use crate::numbers::eulerian;

    #[test]
    fn alpha_example() {
        assert_eq!(
            alpha(&[3, 1, 1, 2, 1, 2, 2, 3]),
            vec![2, 3, 5, 4, 6, 7, 1, 8]
        );
        let pi = [2, 8, 5, 4, 1, 3, 7, 6];
        assert_eq!(
            compose(&pi, &alpha(&[3, 1, 1, 2, 1, 2, 2, 3])),
            vec![8, 5, 1, 4, 3, 7, 2, 6]
        );
    }

    #[test]
    fn minimal_example() {
        let pi = [2, 8, 5, 4, 1, 3, 7, 6];
        let sigma = [8, 5, 1, 4, 3, 7, 2, 6];
        let mm = minimal(&pi, &sigma).unwrap();
        assert_eq!(mm.blocks, vec![vec![8, 5, 1], vec![4, 3, 7], vec![2, 6]]);
        assert_eq!(mm.m(), 3);
        assert_eq!(mm.colouring, vec![1, 3, 2, 2, 1, 3, 2, 1]);
        let by_pos = mm.colouring_by_position(&pi);
        assert_eq!(by_pos, vec![3, 1, 1, 2, 1, 2, 2, 3]);
        assert_eq!(compose(&pi, &alpha(&by_pos)), sigma.to_vec());
        // the canonical-order colouring really reconstructs D_σ
        let dp = case1_diagram(&pi).unwrap();
        assert_eq!(
            reconstruct_assignment(&dp, &mm.colouring).unwrap(),
            case1_diagram(&sigma).unwrap()
        );
    }

    #[test]
    fn minimal_from_identity_counts_descents() {
        for n in 1..=5 {
            let id: Vec<u32> = (1..=n as u32).collect();
            for sigma in permutations(n) {
                let des = sigma.windows(2).filter(|w| w[0] > w[1]).count();
                assert_eq!(minimal(&id, &sigma).unwrap().m(), 1 + des);
            }
        }
    }

    #[test]
    fn eulerian_class_sizes() {
        for n in 1..=5 {
            for pi in permutations(n) {
                let sizes = minimal_class_sizes(&pi).unwrap();
                for k in 1..=n {
                    assert_eq!(BigInt::from(sizes[k]), eulerian(n, k), "n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn reconstruction_lemma() {
        for n in 1..=4 {
            for pi in permutations(n) {
                let d = case1_diagram(&pi).unwrap();
                // colourings in canonical order are indexed by peg; convert to positions
                for c in all_colourings(n) {
                    let canon = c.assignment();
                    let by_pos: Vec<u32> = pi.iter().map(|&p| canon[p as usize - 1]).collect();
                    let expected = case1_diagram(&compose(&pi, &alpha(&by_pos))).unwrap();
                    assert_eq!(reconstruct_assignment(&d, canon).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn closed_forms_match_brute_force() {
        for n in 1..=4 {
            let w = case1_world(n).unwrap();
            assert_eq!(w.len(), (1..=n).product::<usize>());
            let m = colouring_matrix(&w).unwrap();
            let r = mixing_from_colouring(&m);
            for i in 0..w.len() {
                let pi = case1_permutation(w.get(i)).unwrap();
                for j in 0..w.len() {
                    let sigma = case1_permutation(w.get(j)).unwrap();
                    let (cm, cr) = case1_entries(&pi, &sigma).unwrap();
                    assert_eq!(m.get(i, j), &cm);
                    assert_eq!(r.get(i, j), &cr);
                }
            }
            let (tr, tm) = case1_traces(n);
            assert_eq!(r.trace(), tr);
            assert_eq!(m.trace(), tm);
        }
    }

    #[test]
    fn small_entries() {
        let (m, r) = case1_entries(&[1, 2], &[2, 1]).unwrap();
        assert_eq!(m, IntPolynomial::from_i64s(&[0, 0, 1]));
        assert_eq!(r, BigRational::new((-1).into(), 2.into()));
        let (m, r) = case1_entries(&[2, 3, 1], &[2, 3, 1]).unwrap();
        assert_eq!(m, IntPolynomial::from_i64s(&[0, 1, 2, 1]));
        assert_eq!(r, BigRational::new(1.into(), 3.into()));
        assert_eq!(case1_f(&[1, 2, 3], &[3, 2, 1], 3).unwrap(), BigInt::from(1));
        assert!(case1_diagram(&[1, 1]).is_err());
        assert!(minimal(&[1, 2], &[1, 2, 3]).is_err());
    }
}
