//! Exact linear algebra on rational world matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::WorldMatrix;

/// `(N, d)` with `R = N / d`, `d` the least common denominator of all entries.
pub fn integer_form(r: &WorldMatrix<BigRational>) -> (Vec<Vec<BigInt>>, BigInt) {
    let d = r
        .rows()
        .flatten()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let rows = r
        .rows()
        .map(|row| row.iter().map(|q| q.numer() * (&d / q.denom())).collect())
        .collect();
    (rows, d)
}

fn int_matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![BigInt::zero(); m]; n];
    for (i, row) in a.iter().enumerate() {
        for (k, aik) in row.iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for (j, bkj) in b[k].iter().enumerate() {
                if !bkj.is_zero() {
                    out[i][j] += aik * bkj;
                }
            }
        }
    }
    out
}

/// Exact product of two square rational matrices of equal dimension.
pub fn matmul(
    a: &WorldMatrix<BigRational>,
    b: &WorldMatrix<BigRational>,
) -> WorldMatrix<BigRational> {
    assert_eq!(a.dim(), b.dim(), "dimension mismatch");
    let (na, da) = integer_form(a);
    let (nb, db) = integer_form(b);
    let den = da * db;
    let rows = int_matmul(&na, &nb)
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|v| BigRational::new(v, den.clone()))
                .collect()
        })
        .collect();
    WorldMatrix::from_rows(rows).expect("square by construction")
}

/// `R·R == R`, checked as `N·N == d·N` on the integer form.
pub fn is_idempotent(r: &WorldMatrix<BigRational>) -> bool {
    let (n, d) = integer_form(r);
    let sq = int_matmul(&n, &n);
    sq.iter()
        .zip(&n)
        .all(|(s, row)| s.iter().zip(row).all(|(x, y)| *x == &d * y))
}

/// Rank via Bareiss fraction-free elimination.
pub fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                a[r][c] = v / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

pub fn rank(r: &WorldMatrix<BigRational>) -> usize {
    bareiss_rank(integer_form(r).0)
}

/// Rank by plain Gaussian elimination over the rationals.
pub fn rational_rank(r: &WorldMatrix<BigRational>) -> usize {
    let mut a: Vec<Vec<BigRational>> = r.rows().map(<[_]>::to_vec).collect();
    let rows = a.len();
    let cols = r.dim();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let p = a[rank][col].clone();
        for i in 0..rows {
            if i != rank && !a[i][col].is_zero() {
                let factor = &a[i][col] / &p;
                for c in col..cols {
                    let sub = &factor * &a[rank][c];
                    a[i][c] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}
