//! Dense linear algebra over ℚ(i), just enough for nullspaces.

use num_traits::{One, Zero};

use crate::poly::GaussianRational;

/// A basis of `{x : A x = 0}` for an `m × ncols` matrix given by rows.
///
/// Reduced row echelon form by Gauss-Jordan elimination; basis vectors are
/// returned in order of their free column.
pub fn nullspace(rows: &[Vec<GaussianRational>], ncols: usize) -> Vec<Vec<GaussianRational>> {
    let mut a: Vec<Vec<GaussianRational>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("pivot is nonzero");
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot_row = a[r].clone();
                for (x, p) in a[i].iter_mut().zip(&pivot_row) {
                    *x -= &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    let free = (0..ncols).filter(|c| !pivots.contains(c));
    free.map(|f| {
        let mut v = vec![GaussianRational::zero(); ncols];
        v[f] = GaussianRational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[row][f].clone();
        }
        v
    })
    .collect()
}

pub fn rank(rows: &[Vec<GaussianRational>], ncols: usize) -> usize {
    ncols - nullspace(rows, ncols).len()
}
