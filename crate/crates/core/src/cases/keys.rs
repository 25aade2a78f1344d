//! Colour sequences with no two adjacent entries equal.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::colouring::SurjectiveColourings;
use crate::error::Result;
use crate::numbers::{binomial, ipow, sign};

/// Sizes of the key sets for surjective sequences of length `n` onto `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KeyCounts {
    /// No adjacent equal entries.
    pub all: BigInt,
    /// Additionally first and last entries differ.
    pub neq: BigInt,
    /// Additionally first and last entries agree.
    pub eq: BigInt,
}

/// Alternating-sum evaluation, with `0^0 = 1`.
pub fn keys_counts(n: usize, k: usize) -> KeyCounts {
    let mut out = KeyCounts {
        all: BigInt::zero(),
        neq: BigInt::zero(),
        eq: BigInt::zero(),
    };
    if n == 0 {
        return out;
    }
    for i in 0..=k {
        let w = sign(k - i) * binomial(k, i);
        let b = i as i64 - 1;
        out.all += &w * BigInt::from(i) * ipow(b, n - 1);
        out.neq += &w * (ipow(b, n) + BigInt::from(b) * ipow(-1, n));
        out.eq += &w * (ipow(b, n - 1) + BigInt::from(b) * ipow(-1, n - 1));
    }
    out
}

/// The same counts by enumerating every surjective sequence.
pub fn keys_direct(n: usize, k: usize) -> Result<KeyCounts> {
    let (mut all, mut neq, mut eq) = (0u64, 0u64, 0u64);
    let mut stream = SurjectiveColourings::new(n, k)?;
    while let Some(c) = stream.next_assignment() {
        if c.windows(2).all(|w| w[0] != w[1]) {
            all += 1;
            if c[0] == c[n - 1] {
                eq += 1;
            } else {
                neq += 1;
            }
        }
    }
    Ok(KeyCounts {
        all: all.into(),
        neq: neq.into(),
        eq: eq.into(),
    })
}

/// Splits `c` into the positions `A` that repeat their predecessor and the key word `w`
/// left after deleting them.
pub fn split_repeats(c: &[u32]) -> (Vec<u32>, Vec<usize>) {
    let mut word = Vec::new();
    let mut repeats = Vec::new();
    for (i, &v) in c.iter().enumerate() {
        if i > 0 && c[i - 1] == v {
            repeats.push(i + 1);
        } else {
            word.push(v);
        }
    }
    (word, repeats)
}

/// Inverse of [`split_repeats`].
pub fn join_repeats(word: &[u32], repeats: &[usize]) -> Vec<u32> {
    let n = word.len() + repeats.len();
    let mut out = Vec::with_capacity(n);
    let mut letters = word.iter();
    for pos in 1..=n {
        if repeats.binary_search(&pos).is_ok() {
            let prev = *out.last().expect("position 1 never repeats");
            out.push(prev);
        } else {
            out.push(*letters.next().expect("enough letters"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::all_colourings;
    use crate::numbers::{factorial, stirling2};
    use num_rational::BigRational;

    #[test]
    fn small_values() {
        let k = keys_counts(3, 2);
        assert_eq!((k.all, k.neq, k.eq), (2.into(), 0.into(), 2.into()));
        let k = keys_counts(1, 1);
        assert_eq!((k.all, k.neq, k.eq), (1.into(), 0.into(), 1.into()));
        for n in 2..=6 {
            assert_eq!(keys_counts(n, 1).all, BigInt::zero());
        }
    }

    #[test]
    fn formulas_match_enumeration() {
        for n in 1..=6 {
            for k in 1..=n {
                let f = keys_counts(n, k);
                assert_eq!(f, keys_direct(n, k).unwrap(), "n={n} k={k}");
                assert_eq!(f.all, &f.eq + &f.neq);
            }
        }
    }

    #[test]
    fn repeat_decomposition() {
        let c = [4, 2, 1, 1, 1, 2, 3, 3, 3, 4, 4, 1];
        let (w, a) = split_repeats(&c);
        assert_eq!(a, vec![4, 5, 8, 9, 11]);
        assert_eq!(w, vec![4, 2, 1, 2, 3, 4, 1]);
        assert_eq!(join_repeats(&w, &a), c.to_vec());
        for col in all_colourings(5) {
            let (w, a) = split_repeats(col.assignment());
            assert!(w.windows(2).all(|p| p[0] != p[1]));
            assert_eq!(join_repeats(&w, &a), col.assignment());
        }
    }

    #[test]
    fn shifted_stirling_identity() {
        for n in 0..=10 {
            for k in 0..=n {
                let sum: BigInt = (0..=k)
                    .map(|i| sign(k - i) * binomial(k, i) * ipow(i as i64 + 1, n))
                    .sum();
                assert_eq!(
                    BigRational::new(sum, factorial(k)),
                    BigRational::from_integer(stirling2(n + 1, k + 1)),
                    "n={n} k={k}"
                );
            }
        }
        let lhs: BigInt = (0..=2)
            .map(|i| sign(2 - i) * binomial(2, i) * ipow(i as i64 + 1, 4))
            .sum();
        assert_eq!(lhs / 2, BigInt::from(25));
        assert_eq!(stirling2(5, 3), BigInt::from(25));
    }
}
