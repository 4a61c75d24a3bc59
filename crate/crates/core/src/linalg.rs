//! Exact dense linear algebra over Q or F_p.
//!
//! Systems in this crate stay below a few dozen unknowns, so plain
//! Gaussian elimination with exact field arithmetic is all that is needed.

use crate::error::{Error, Result};
use crate::scalar::{FieldCtx, Scalar};

/// Solve the square system A x = b.  Errors when A is singular.
pub fn solve(a: &[Vec<Scalar>], b: &[Scalar]) -> Result<Vec<Scalar>> {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n), "matrix must be square");
    assert_eq!(b.len(), n, "dimension mismatch");
    if n == 0 {
        return Ok(Vec::new());
    }
    let ctx = b[0].ctx();
    let mut m: Vec<Vec<Scalar>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or(Error::DegenerateSystem("singular matrix"))?;
        m.swap(pivot, col);
        let inv = m[col][col].inv().expect("pivot is nonzero");
        for r in col + 1..n {
            let factor = m[r][col].clone() * inv.clone();
            if factor.is_zero() {
                continue;
            }
            for c in col..=n {
                m[r][c] = m[r][c].clone() - factor.clone() * m[col][c].clone();
            }
        }
    }
    let mut x = vec![ctx.zero(); n];
    for row in (0..n).rev() {
        let mut acc = m[row][n].clone();
        for c in row + 1..n {
            acc = acc - m[row][c].clone() * x[c].clone();
        }
        x[row] = acc * m[row][row].inv().expect("pivot is nonzero");
    }
    Ok(x)
}

/// A generator of the kernel of A (any shape), scaled so its first nonzero
/// coordinate is 1.  Errors unless the kernel has dimension exactly one.
pub fn nullspace_one(a: &[Vec<Scalar>], ctx: FieldCtx) -> Result<Vec<Scalar>> {
    let cols = a.first().map_or(0, Vec::len);
    assert!(a.iter().all(|row| row.len() == cols), "ragged matrix");
    let mut m: Vec<Vec<Scalar>> = a.to_vec();
    let rows = m.len();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot, rank);
        let inv = m[rank][col].inv().expect("pivot is nonzero");
        for c in col..cols {
            m[rank][c] = m[rank][c].clone() * inv.clone();
        }
        for r in 0..rows {
            if r == rank || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in col..cols {
                m[r][c] = m[r][c].clone() - factor.clone() * m[rank][c].clone();
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    if cols - rank != 1 {
        return Err(Error::DegenerateSystem("kernel dimension is not one"));
    }
    let free = (0..cols).find(|c| !pivot_cols.contains(c)).unwrap();
    let mut x = vec![ctx.zero(); cols];
    x[free] = ctx.one();
    for (row, &pc) in pivot_cols.iter().enumerate() {
        x[pc] = -m[row][free].clone();
    }
    // normalize the first nonzero coordinate to 1
    let lead = x.iter().find(|v| !v.is_zero()).expect("kernel vector is nonzero");
    let scale = lead.inv().expect("nonzero leading coordinate");
    Ok(x.into_iter().map(|v| v * scale.clone()).collect())
}
