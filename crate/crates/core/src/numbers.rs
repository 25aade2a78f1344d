//! Classical combinatorial numbers over big integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Rows `0..=n` of the Stirling triangle of the second kind.
pub fn stirling2_table(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    rows.push(vec![BigInt::one()]);
    for m in 1..=n {
        let prev = &rows[m - 1];
        let mut row = vec![BigInt::zero(); m + 1];
        for k in 1..=m {
            let keep = if k < m { &prev[k] * k } else { BigInt::zero() };
            row[k] = keep + &prev[k - 1];
        }
        rows.push(row);
    }
    rows
}

/// Stirling number of the second kind `S(n, k)`.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    stirling2_table(n)[n][k].clone()
}

/// Eulerian number counting permutations of `1..=n` with exactly `k - 1` descents.
pub fn eulerian(n: usize, k: usize) -> BigInt {
    if n == 0 {
        return if k == 1 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    if k == 0 || k > n {
        return BigInt::zero();
    }
    // row[k] for 1-based k
    let mut row = vec![BigInt::zero(), BigInt::one()];
    for m in 2..=n {
        let mut next = vec![BigInt::zero(); m + 1];
        for j in 1..=m {
            let stay = if j < m { &row[j] * j } else { BigInt::zero() };
            let grow = if j >= 2 {
                &row[j - 1] * (m - j + 1)
            } else {
                BigInt::zero()
            };
            next[j] = stay + grow;
        }
        row = next;
    }
    row[k].clone()
}

/// Ordered Bell (Fubini) number: the number of ordered set partitions of an `m`-set.
pub fn ordered_bell(m: usize) -> BigInt {
    stirling2_table(m)[m]
        .iter()
        .enumerate()
        .map(|(k, s)| s * factorial(k))
        .sum()
}

/// `(-1)^e` as a big integer.
pub(crate) fn sign(e: usize) -> BigInt {
    if e % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `base^exp` for a possibly negative base, with `0^0 = 1`.
pub(crate) fn ipow(base: i64, exp: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), exp)
}
