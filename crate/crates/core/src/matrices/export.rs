//! CSV and JSON renderings of world matrices.
//!
//! Rationals print as `p/q` (reduced, `q > 0`) or `p` when integral; polynomials print as
//! `c0;c1;...` coefficient strings in CSV and as coefficient arrays in JSON.

use num_rational::BigRational;
use serde_json::{json, Value};

use super::WorldMatrix;
use crate::poly::IntPolynomial;

pub fn rational_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn csv<E>(m: &WorldMatrix<E>, cell: impl Fn(&E) -> String) -> String {
    let mut out = String::new();
    for row in m.rows() {
        let line: Vec<String> = row.iter().map(&cell).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

pub fn mixing_matrix_csv(r: &WorldMatrix<BigRational>) -> String {
    csv(r, rational_string)
}

pub fn colouring_matrix_csv(m: &WorldMatrix<IntPolynomial>) -> String {
    csv(m, IntPolynomial::coefficient_string)
}

pub fn mixing_matrix_json(r: &WorldMatrix<BigRational>) -> Value {
    let rows: Vec<Vec<String>> = r
        .rows()
        .map(|row| row.iter().map(rational_string).collect())
        .collect();
    json!({ "dim": r.dim(), "entries": rows })
}

/// Coefficients are emitted as decimal strings so arbitrarily large values survive.
pub fn colouring_matrix_json(m: &WorldMatrix<IntPolynomial>) -> Value {
    let rows: Vec<Vec<Vec<String>>> = m
        .rows()
        .map(|row| {
            row.iter()
                .map(|p| p.coeffs().iter().map(ToString::to_string).collect())
                .collect()
        })
        .collect();
    json!({ "dim": m.dim(), "entries": rows })
}
