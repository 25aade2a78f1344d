//! Truncated multivariate power series with exact rational coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense series in `k` variables; only monomials with exponent `e_v <= orders[v]` are kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    orders: Vec<usize>,
    strides: Vec<usize>,
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn zero(orders: &[usize]) -> Self {
        let mut strides = vec![1; orders.len()];
        for v in (0..orders.len().saturating_sub(1)).rev() {
            strides[v] = strides[v + 1] * (orders[v + 1] + 1);
        }
        let len = orders.iter().map(|o| o + 1).product();
        Self {
            orders: orders.to_vec(),
            strides,
            coeffs: vec![BigRational::zero(); len],
        }
    }

    pub fn one(orders: &[usize]) -> Self {
        let mut s = Self::zero(orders);
        s.coeffs[0] = BigRational::one();
        s
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    fn offset(&self, exps: &[usize]) -> Option<usize> {
        if exps.len() != self.orders.len() {
            return None;
        }
        exps.iter()
            .zip(&self.orders)
            .zip(&self.strides)
            .try_fold(0, |acc, ((&e, &o), &s)| (e <= o).then_some(acc + e * s))
    }

    fn exponents(&self, mut offset: usize) -> Vec<usize> {
        self.strides
            .iter()
            .map(|&s| {
                let e = offset / s;
                offset %= s;
                e
            })
            .collect()
    }

    /// Adds `c` to the coefficient of the monomial; monomials beyond the truncation are dropped.
    pub fn add_term(&mut self, exps: &[usize], c: BigRational) {
        if let Some(i) = self.offset(exps) {
            self.coeffs[i] += c;
        }
    }

    pub fn coefficient(&self, exps: &[usize]) -> Result<BigRational> {
        assert_eq!(exps.len(), self.orders.len(), "wrong number of exponents");
        for (v, (&e, &o)) in exps.iter().zip(&self.orders).enumerate() {
            if e > o {
                return Err(Error::SeriesTruncationTooSmall {
                    variable: v,
                    order: o,
                    requested: e,
                });
            }
        }
        Ok(self.coeffs[self.offset(exps).expect("checked")].clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.orders, other.orders, "truncation orders differ");
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = self.clone();
        for a in &mut out.coeffs {
            *a *= c;
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.orders, other.orders, "truncation orders differ");
        let mut out = Self::zero(&self.orders);
        let lhs: Vec<(Vec<usize>, &BigRational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.exponents(i), c))
            .collect();
        let rhs: Vec<(Vec<usize>, &BigRational)> = other
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (other.exponents(i), c))
            .collect();
        let mut sum = vec![0; self.orders.len()];
        for (ea, ca) in &lhs {
            'next: for (eb, cb) in &rhs {
                for v in 0..sum.len() {
                    sum[v] = ea[v] + eb[v];
                    if sum[v] > self.orders[v] {
                        continue 'next;
                    }
                }
                let i = self.offset(&sum).expect("within orders");
                out.coeffs[i] += *ca * *cb;
            }
        }
        out
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = Self::one(&self.orders);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Whether every term has positive total degree.
    pub fn has_zero_constant(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    /// `log(1 + self)` for a series without constant term, as `sum_k (-1)^(k+1) self^k / k`.
    ///
    /// `max_terms` bounds `k`; it must be at least the smallest total degree needed for the
    /// requested coefficients.
    pub fn log_one_plus(&self, max_terms: usize) -> Self {
        assert!(self.has_zero_constant(), "log(1 + F) needs F(0) = 0");
        let mut out = Self::zero(&self.orders);
        let mut power = self.clone();
        for k in 1..=max_terms {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            out = out.add(&power.scale(&BigRational::new(BigInt::from(sign), BigInt::from(k))));
            if k < max_terms {
                power = power.mul(self);
            }
        }
        out
    }
}
