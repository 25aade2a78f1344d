//! Transitive worlds: every peg but the last has an edge leaving to the right and every peg but
//! the first has an edge arriving from the left.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::enumeration::{census, RepresentMatrix};
use crate::error::{Error, Result};

/// Largest edge count accepted by [`count_transitive`] and [`list_transitive`].
pub const MAX_TRANSITIVE_EDGES: u32 = 6;

/// Errors with `IsolatedPeg` when some peg carries no edge.
pub fn is_transitive(a: &RepresentMatrix) -> Result<bool> {
    if let Some(&p) = a.isolated_pegs().first() {
        return Err(Error::IsolatedPeg(p));
    }
    let m = a.dim();
    let rows_ok = (0..m.saturating_sub(1)).all(|i| (0..m).any(|j| a.get(i, j) != 0));
    let cols_ok = (1..m).all(|j| (0..m).any(|i| a.get(i, j) != 0));
    Ok(rows_ok && cols_ok)
}

/// An upper-triangular matrix (diagonal allowed) with no zero row or column.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct CoreMatrix {
    rows: Vec<Vec<u32>>,
}

impl CoreMatrix {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let m = rows.len();
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::MalformedMatrix);
        }
        if (0..m).any(|i| (0..i).any(|j| rows[i][j] != 0)) {
            return Err(Error::Input(
                "core matrix has entries below the diagonal".into(),
            ));
        }
        let zero_row = (0..m).any(|i| rows[i].iter().all(|&v| v == 0));
        let zero_col = (0..m).any(|j| rows.iter().all(|r| r[j] == 0));
        if zero_row || zero_col {
            return Err(Error::Input("core matrix has a zero row or column".into()));
        }
        Ok(Self { rows })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn total(&self) -> u32 {
        self.rows.iter().flatten().sum()
    }
}

impl TryFrom<Vec<Vec<u32>>> for CoreMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        Self::new(rows)
    }
}

impl From<CoreMatrix> for Vec<Vec<u32>> {
    fn from(c: CoreMatrix) -> Self {
        c.rows
    }
}

impl fmt::Display for CoreMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            serde_json::to_string(&self.rows).map_err(|_| fmt::Error)?
        )
    }
}

/// Drops the first column and the last row.
pub fn core_matrix(a: &RepresentMatrix) -> Result<CoreMatrix> {
    if !is_transitive(a)? {
        return Err(Error::NotTransitive);
    }
    let m = a.dim();
    let rows = (0..m - 1)
        .map(|i| (1..m).map(|j| a.get(i, j)).collect())
        .collect();
    CoreMatrix::new(rows)
}

/// Inverse of [`core_matrix`].
pub fn reattach(c: &CoreMatrix) -> RepresentMatrix {
    let m = c.dim() + 1;
    let mut rows = vec![vec![0; m]; m];
    for (i, r) in c.rows().iter().enumerate() {
        rows[i][1..].copy_from_slice(r);
    }
    RepresentMatrix::new(rows).expect("shifted upper-triangular matrix")
}

fn check_edges(t: u32) -> Result<()> {
    if t > MAX_TRANSITIVE_EDGES {
        return Err(Error::BoundsTooLarge(format!(
            "transitive census of {t} edges exceeds {MAX_TRANSITIVE_EDGES}"
        )));
    }
    Ok(())
}

/// Transitive worlds with `t` edges and no isolated pegs, in census order.
pub fn list_transitive(t: u32) -> Result<Vec<RepresentMatrix>> {
    check_edges(t)?;
    Ok(census(t)?
        .into_iter()
        .filter(|a| is_transitive(a).expect("census has no isolated pegs"))
        .collect())
}

pub fn count_transitive(t: u32) -> Result<usize> {
    list_transitive(t).map(|v| v.len())
}
