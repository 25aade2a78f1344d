//! Web-colouring and web-mixing matrices of a web world.
//!
//! Entry `(D1, D2)` of the colouring matrix is `sum_l f(D1, D2, l) x^l`, where
//! `f(D1, D2, l)` counts the surjective `l`-colourings of `D1` that reconstruct `D2`.
//! The mixing matrix carries the rational numbers `sum_l (-1)^(l-1) f(D1, D2, l) / l`.
//! All arithmetic is exact.

mod export;
mod linalg;

use std::ops::Add;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

pub use export::{
    colouring_matrix_csv, colouring_matrix_json, mixing_matrix_csv, mixing_matrix_json,
    rational_string,
};
pub use linalg::{integer_form, is_idempotent, matmul, rank, rational_rank};

use crate::colouring::{Reconstructor, SurjectiveColourings};
use crate::diagram::WebDiagram;
use crate::error::{Error, Result};
use crate::numbers::{factorial, stirling2_table};
use crate::poly::IntPolynomial;
use crate::world::{Limits, WebWorld};

/// A dense square matrix indexed by the canonical diagram order of a web world.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WorldMatrix<E> {
    dim: usize,
    entries: Vec<E>,
}

impl<E> WorldMatrix<E> {
    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "expected {dim} entries in every row"
            )));
        }
        Ok(Self {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.entries[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[E]> {
        self.entries.chunks(self.dim.max(1)).take(self.dim)
    }

    pub fn diagonal(&self) -> impl Iterator<Item = &E> {
        (0..self.dim).map(move |i| self.get(i, i))
    }

    pub fn map<F, T>(&self, f: F) -> WorldMatrix<T>
    where
        F: Fn(&E) -> T,
    {
        WorldMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

impl<E: Clone + Zero + Add<Output = E>> WorldMatrix<E> {
    pub fn trace(&self) -> E {
        self.diagonal().cloned().fold(E::zero(), |acc, e| acc + e)
    }

    pub fn row_sums(&self) -> Vec<E> {
        self.rows()
            .map(|r| r.iter().cloned().fold(E::zero(), |acc, e| acc + e))
            .collect()
    }
}

/// `x^l` coefficients of row `D1`: `counts[target][l]`.
fn colouring_counts(
    d1: &WebDiagram,
    lookup: impl Fn(&[crate::diagram::Edge]) -> Option<usize>,
    dim: usize,
) -> Vec<Vec<u64>> {
    let len = d1.len();
    let mut counts = vec![vec![0u64; len + 1]; dim];
    if len == 0 {
        return counts;
    }
    let rec = Reconstructor::new(d1);
    let mut buf = Vec::with_capacity(len);
    for l in 1..=len {
        let mut stream = SurjectiveColourings::new(len, l).expect("1 <= l <= len");
        while let Some(c) = stream.next_assignment() {
            rec.apply_sorted(c, &mut buf);
            if let Some(j) = lookup(&buf) {
                counts[j][l] += 1;
            }
        }
    }
    counts
}

fn counts_to_poly(counts: &[u64]) -> IntPolynomial {
    IntPolynomial::from_coeffs(counts.iter().map(|&c| BigInt::from(c)).collect())
}

/// Number of surjective `l`-colourings of `d1` whose reconstruction is `d2`.
pub fn f_count(d1: &WebDiagram, d2: &WebDiagram, l: usize) -> Result<BigInt> {
    if !d1.same_world_as(d2) {
        return Err(Error::DifferentWorlds);
    }
    let rec = Reconstructor::new(d1);
    let mut stream = SurjectiveColourings::new(d1.len(), l)?;
    let mut buf = Vec::new();
    let mut hits = 0u64;
    while let Some(c) = stream.next_assignment() {
        rec.apply_sorted(c, &mut buf);
        if buf == d2.edges() {
            hits += 1;
        }
    }
    Ok(BigInt::from(hits))
}

/// The colouring-matrix entry `M(x)[D1, D2]`.
pub fn colouring_entry(d1: &WebDiagram, d2: &WebDiagram) -> Result<IntPolynomial> {
    if !d1.same_world_as(d2) {
        return Err(Error::DifferentWorlds);
    }
    let target = d2.edges();
    let counts = colouring_counts(d1, |e| (e == target).then_some(0), 1);
    Ok(counts_to_poly(&counts[0]))
}

/// The mixing-matrix entry `R[D1, D2]`.
pub fn mixing_entry(d1: &WebDiagram, d2: &WebDiagram) -> Result<BigRational> {
    colouring_entry(d1, d2).map(|p| mixing_from_counts(&p))
}

/// `sum_l (-1)^(l-1) f_l / l` from the coefficients `f_l` of a colouring entry.
pub fn mixing_from_counts(entry: &IntPolynomial) -> BigRational {
    entry
        .coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(l, f)| {
            let signed = if l % 2 == 1 { f.clone() } else { -f };
            BigRational::new(signed, BigInt::from(l))
        })
        .fold(BigRational::zero(), |acc, t| acc + t)
}

/// `-∫_0^1 M(-x)/x dx`, evaluated symbolically on the polynomial.
///
/// Returns `None` when the entry has a constant term (never the case for colouring entries).
pub fn mixing_via_integral(entry: &IntPolynomial) -> Option<BigRational> {
    let integrand = entry.negate_argument().divide_by_x()?;
    Some(-integrand.integrate_unit_interval())
}

fn check_dim(world: &WebWorld, limits: &Limits) -> Result<()> {
    if world.len() > limits.max_matrix_dim {
        return Err(Error::WorldTooLarge {
            size: world.len().to_string(),
            limit: limits.max_matrix_dim,
        });
    }
    Ok(())
}

/// Row `i` of the colouring matrix.
pub fn colouring_row(world: &WebWorld, i: usize) -> Vec<IntPolynomial> {
    colouring_counts(world.get(i), |e| world.index_of_edges(e), world.len())
        .iter()
        .map(|c| counts_to_poly(c))
        .collect()
}

pub fn colouring_matrix(world: &WebWorld) -> Result<WorldMatrix<IntPolynomial>> {
    colouring_matrix_with_limits(world, &Limits::default())
}

/// Rows are computed independently in parallel; assembly keeps the canonical order.
pub fn colouring_matrix_with_limits(
    world: &WebWorld,
    limits: &Limits,
) -> Result<WorldMatrix<IntPolynomial>> {
    check_dim(world, limits)?;
    let rows: Vec<Vec<IntPolynomial>> = (0..world.len())
        .into_par_iter()
        .map(|i| colouring_row(world, i))
        .collect();
    WorldMatrix::from_rows(rows)
}

pub fn mixing_matrix(world: &WebWorld) -> Result<WorldMatrix<BigRational>> {
    mixing_matrix_with_limits(world, &Limits::default())
}

pub fn mixing_matrix_with_limits(
    world: &WebWorld,
    limits: &Limits,
) -> Result<WorldMatrix<BigRational>> {
    Ok(mixing_from_colouring(&colouring_matrix_with_limits(
        world, limits,
    )?))
}

pub fn mixing_from_colouring(m: &WorldMatrix<IntPolynomial>) -> WorldMatrix<BigRational> {
    m.map(mixing_from_counts)
}

/// Diagonal entry `M(x)[D, D]` without building the matrix.
pub fn diagonal_colouring_entry(d: &WebDiagram) -> IntPolynomial {
    colouring_entry(d, d).expect("a diagram shares its own world")
}

/// `(trace M(x), trace R)` from the diagonal entries only.
pub fn diagonal_traces(world: &WebWorld) -> (IntPolynomial, BigRational) {
    let diag: Vec<IntPolynomial> = world
        .diagrams()
        .par_iter()
        .map(diagonal_colouring_entry)
        .collect();
    let trace_m: IntPolynomial = diag.iter().sum();
    let trace_r = mixing_from_counts(&trace_m);
    (trace_m, trace_r)
}

/// `sum_l S(m, l) l! x^l`, with the empty sum convention `ℵ_0 = 1`.
pub fn ordered_bell_polynomial(m: usize) -> IntPolynomial {
    let table = stirling2_table(m);
    IntPolynomial::from_coeffs(
        table[m]
            .iter()
            .enumerate()
            .map(|(l, s)| s * factorial(l))
            .collect(),
    )
}

/// Whether every row of a mixing matrix sums to zero.
pub fn rows_sum_to_zero(r: &WorldMatrix<BigRational>) -> bool {
    r.row_sums().iter().all(Zero::is_zero)
}

/// Whether the trace of a mixing matrix is a positive integer.
pub fn trace_is_positive_integer(r: &WorldMatrix<BigRational>) -> bool {
    let t = r.trace();
    t.is_integer() && t >= BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::world::web_world;

    fn d(t: &[(u32, u32, u32, u32)]) -> WebDiagram {
        WebDiagram::from_tuples(t, None).unwrap()
    }

    fn q(n: i64, den: i64) -> BigRational {
        BigRational::new(n.into(), den.into())
    }

    #[test]
    fn single_edge_world() {
        let w = web_world(&d(&[(1, 2, 1, 1)])).unwrap();
        let m = colouring_matrix(&w).unwrap();
        assert_eq!(m.get(0, 0), &IntPolynomial::x());
        let r = mixing_from_colouring(&m);
        assert_eq!(r.get(0, 0), &BigRational::one());
    }

    #[test]
    fn case_one_n2() {
        let id = d(&[(1, 3, 1, 1), (2, 3, 1, 2)]);
        let swap = d(&[(1, 3, 1, 2), (2, 3, 1, 1)]);
        assert_eq!(f_count(&id, &swap, 2).unwrap(), BigInt::one());
        assert_eq!(f_count(&id, &swap, 1).unwrap(), BigInt::zero());
        let w = web_world(&id).unwrap();
        let r = mixing_matrix(&w).unwrap();
        assert_eq!(r.get(0, 0), &q(1, 2));
        assert_eq!(r.get(0, 1), &q(-1, 2));
        assert_eq!(r.get(1, 0), &q(-1, 2));
        assert_eq!(r.get(1, 1), &q(1, 2));
    }

    #[test]
    fn worked_example_diagonal() {
        // blocks E1 = (1,2) at the bottom, E2 and E3 on top of it on disjoint pegs
        let dd = d(&[(1, 2, 1, 1), (1, 3, 2, 1), (2, 4, 2, 1)]);
        let m = colouring_entry(&dd, &dd).unwrap();
        assert_eq!(m, IntPolynomial::from_i64s(&[0, 1, 3, 2]));
        assert_eq!(f_count(&dd, &dd, 1).unwrap(), BigInt::from(1));
        assert_eq!(f_count(&dd, &dd, 2).unwrap(), BigInt::from(3));
        assert_eq!(f_count(&dd, &dd, 3).unwrap(), BigInt::from(2));
        assert_eq!(mixing_entry(&dd, &dd).unwrap(), q(1, 6));
    }

    #[test]
    fn falkirk_traces() {
        let w = web_world(&d(&[(1, 2, 1, 1), (2, 3, 2, 1), (3, 4, 2, 1)])).unwrap();
        let m = colouring_matrix(&w).unwrap();
        assert_eq!(m.trace(), IntPolynomial::from_i64s(&[0, 4, 10, 6]));
        let r = mixing_from_colouring(&m);
        assert_eq!(r.trace(), BigRational::one());
        assert!(rows_sum_to_zero(&r));
        assert!(is_idempotent(&r));
        assert_eq!(rank(&r), 1);
        let (tm, tr) = diagonal_traces(&w);
        assert_eq!(tm, m.trace());
        assert_eq!(tr, r.trace());
        for s in m.row_sums() {
            assert_eq!(s, ordered_bell_polynomial(3));
        }
    }

    #[test]
    fn different_worlds_rejected() {
        let a = d(&[(1, 2, 1, 1)]);
        let b = d(&[(1, 3, 1, 1)]);
        assert_eq!(f_count(&a, &b, 1), Err(Error::DifferentWorlds));
        assert_eq!(colouring_entry(&a, &b), Err(Error::DifferentWorlds));
    }

    #[test]
    fn ordered_bell_polynomials() {
        assert_eq!(ordered_bell_polynomial(0), IntPolynomial::one());
        assert_eq!(ordered_bell_polynomial(1), IntPolynomial::x());
        assert_eq!(
            ordered_bell_polynomial(2),
            IntPolynomial::from_i64s(&[0, 1, 2])
        );
        assert_eq!(
            ordered_bell_polynomial(3),
            IntPolynomial::from_i64s(&[0, 1, 6, 6])
        );
        let x_plus_one = IntPolynomial::from_i64s(&[1, 1]);
        for m in 0..=6 {
            let lhs =
                &IntPolynomial::x() * &(&x_plus_one * &ordered_bell_polynomial(m)).derivative();
            assert_eq!(lhs, ordered_bell_polynomial(m + 1), "m = {m}");
        }
    }

    #[test]
    fn matrix_guard() {
        let w = web_world(&d(&[(1, 2, 1, 1), (2, 3, 2, 1), (3, 4, 2, 1)])).unwrap();
        let limits = Limits {
            max_matrix_dim: 3,
            ..Limits::default()
        };
        assert!(matches!(
            colouring_matrix_with_limits(&w, &limits),
            Err(Error::WorldTooLarge { .. })
        ));
    }

    #[test]
    fn integral_route_matches_sum_route() {
        for coeffs in [&[0, 1][..], &[0, 1, 3, 2], &[0, 0, 2], &[0, 5, 0, 7, 1]] {
            let p = IntPolynomial::from_i64s(coeffs);
            assert_eq!(mixing_via_integral(&p), Some(mixing_from_counts(&p)));
        }
        assert_eq!(mixing_via_integral(&IntPolynomial::one()), None);
    }
}
