use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::Pseudograph;

/// The Kirchhoff matrix with its last row and column removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KirchhoffMinor {
    pub entries: Vec<Vec<BigInt>>,
}

impl KirchhoffMinor {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn column_sums_nonnegative(&self) -> bool {
        (0..self.dim()).all(|j| {
            let sum: BigInt = self.entries.iter().map(|row| &row[j]).sum();
            !sum.is_negative()
        })
    }

    pub fn det(&self) -> BigInt {
        det_exact(&self.entries).expect("minor is square")
    }
}

/// Degree on the diagonal, minus the edge multiplicity off it. Loops are
/// dropped before construction.
pub fn kirchhoff_matrix(g: &Pseudograph) -> Vec<Vec<BigInt>> {
    let p = g.order();
    let mut m = vec![vec![BigInt::zero(); p]; p];
    for &(a, b) in g.edges() {
        if a == b {
            continue;
        }
        m[a][a] += 1;
        m[b][b] += 1;
        m[a][b] -= 1;
        m[b][a] -= 1;
    }
    m
}

pub fn kirchhoff_minor(g: &Pseudograph) -> Result<KirchhoffMinor> {
    if g.order() < 2 {
        return Err(Error::InvalidParameter(
            "Kirchhoff minor needs at least two vertices".into(),
        ));
    }
    let mut m = kirchhoff_matrix(g);
    m.pop();
    for row in &mut m {
        row.pop();
    }
    Ok(KirchhoffMinor { entries: m })
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn det_exact(m: &[Vec<BigInt>]) -> Result<BigInt> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidParameter("determinant of a non-square matrix".into()));
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.to_vec();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Matrix-theorem count `s(G) = det M_G`; the single-vertex graph gives 1.
pub fn count_trees_matrix(g: &Pseudograph) -> BigUint {
    if g.order() == 1 {
        return BigUint::one();
    }
    let d = kirchhoff_minor(g).expect("order >= 2").det();
    match d.sign() {
        Sign::Minus => unreachable!("Kirchhoff minor determinant is nonnegative"),
        _ => d.magnitude().clone(),
    }
}
