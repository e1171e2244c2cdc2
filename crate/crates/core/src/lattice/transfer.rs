//! Row-transfer matrices with periodic horizontal boundary.

use super::{LatticeError, TRANSFER_MAX_COLS};
use crate::matrix::PolyMatrix;
use crate::poly::Polynomial;
use crate::weights::{Spin, VertexWeights};

fn spin(mask: usize, k: usize) -> Spin {
    if mask >> k & 1 == 1 {
        Spin::Minus
    } else {
        Spin::Plus
    }
}

/// `V_{α,β} = Σ_ε ∏_k w(ε_k, α_k, ε_{k+1}, β_k)` with `ε_{m+1} = ε_1`, where
/// `α` is the row of top spins and `β` the row of bottom spins, both indexed
/// by bitmask (bit `k` set for `-` in column `k`).
pub fn transfer_matrix(w: &VertexWeights, cols: usize) -> Result<PolyMatrix, LatticeError> {
    if cols == 0 || cols > TRANSFER_MAX_COLS {
        return Err(LatticeError::TooLarge {
            what: "transfer matrix",
            rows: 1,
            cols,
        });
    }
    let sp = w.space();
    let dim = 1 << cols;
    let mut v = PolyMatrix::zeros(sp, dim);
    for alpha in 0..dim {
        for beta in 0..dim {
            let mut sum = Polynomial::zero(sp);
            'eps: for eps in 0..dim {
                let mut term = Polynomial::one(sp);
                for k in 0..cols {
                    let next = (k + 1) % cols;
                    match w.weight_for(spin(eps, k), spin(alpha, k), spin(eps, next), spin(beta, k)) {
                        Some(x) if !x.is_zero() => term = &term * x,
                        _ => continue 'eps,
                    }
                }
                sum += &term;
            }
            v.set(alpha, beta, sum);
        }
    }
    Ok(v)
}
