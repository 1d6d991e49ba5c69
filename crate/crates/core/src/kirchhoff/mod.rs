//! The graph (Kirchhoff) polynomial `Psi_G = sum over spanning trees T of
//! prod_{e not in T} alpha_e`: symbolic expansion by tree enumeration or by
//! deletion/contraction, fast numeric evaluation, and exact tree counts.

mod del_contract;
mod enumerate;
mod eval;
mod polynomial;

pub use del_contract::psi_del_contract;
pub use enumerate::psi_enumerate;
pub use eval::{psi_eval, PsiEvaluator};
pub use polynomial::GraphPolynomial;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Edge bound for symbolic expansion unless overridden.
pub const DEFAULT_MAX_EDGES: usize = 24;

fn require_expandable(g: &Multigraph, max_edges: usize) -> Result<()> {
    g.require_ordinary()?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let limit = max_edges.min(GraphPolynomial::MAX_VARIABLES);
    if g.edge_count() > limit {
        return Err(Error::TooManyEdges {
            edges: g.edge_count(),
            limit,
        });
    }
    Ok(())
}

/// Number of spanning trees, via a fraction-free (Bareiss) determinant of
/// the reduced Laplacian.
pub fn spanning_tree_count(g: &Multigraph) -> Result<BigInt> {
    g.require_ordinary()?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let size = g.vertex_count().saturating_sub(1);
    let mut lap = vec![vec![BigInt::zero(); size]; size];
    for e in g.edges() {
        let (i, j) = (g.index_of(e.u).unwrap(), g.index_of(e.v).unwrap());
        for (x, y) in [(i, j), (j, i)] {
            if x < size {
                lap[x][x] += 1;
                if y < size {
                    lap[x][y] -= 1;
                }
            }
        }
    }
    Ok(bareiss_determinant(lap))
}

fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut previous = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let value = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = value / &previous;
            }
        }
        previous = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}
