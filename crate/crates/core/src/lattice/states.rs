//! State enumeration: through GT patterns, and by exhaustive search.
//!
//! Vertical row `r` of a state, read for the labels of its `-` edges,
//! is row `r` of a strict GT pattern with top row `λ + ρ`. The bottom row is
//! all `+`. Horizontal spins then follow from the left boundary, since every
//! admissible vertex carries an even number of `-`.

use super::{
    BoundarySpec, GtPattern, GtPatterns, LatticeError, LatticeState, BRUTE_FORCE_MAX_COLS, BRUTE_FORCE_MAX_ROWS,
};
use crate::weights::{Spin, VertexWeights};

fn parity(left: Spin, top: Spin, bottom: Spin) -> Spin {
    let minus = [left, top, bottom].iter().filter(|s| s.is_minus()).count();
    if minus % 2 == 1 {
        Spin::Minus
    } else {
        Spin::Plus
    }
}

fn inadmissible(b: &BoundarySpec, row: usize, col: usize, v: (Spin, Spin, Spin, Spin)) -> LatticeError {
    LatticeError::Inadmissible {
        row: b.row_label(row),
        label: b.column_label(col),
        left: v.0,
        top: v.1,
        right: v.2,
        bottom: v.3,
    }
}

/// The state whose vertical rows are read off `g`.
pub fn gt_to_state(g: &GtPattern, b: &BoundarySpec) -> Result<LatticeState, LatticeError> {
    let (n, cols) = (b.rows(), b.cols());
    if g.rank() != n || g.top() != b.lambda.shifted().as_slice() {
        return Err(LatticeError::Boundary(format!(
            "pattern top row {:?} differs from λ+ρ = {:?}",
            g.top(),
            b.lambda.shifted()
        )));
    }
    let mut vertical = vec![vec![Spin::Plus; cols]; n + 1];
    for (r, row) in g.rows().iter().enumerate() {
        for &label in row {
            vertical[r][b.column_of_label(label as usize)] = Spin::Minus;
        }
    }
    let mut horizontal = Vec::with_capacity(n);
    for r in 0..n {
        let w = b.row_weights(r);
        let mut h = Vec::with_capacity(cols + 1);
        h.push(b.left());
        for c in 0..cols {
            let (left, top, bottom) = (h[c], vertical[r][c], vertical[r + 1][c]);
            let right = parity(left, top, bottom);
            if w.weight_for(left, top, right, bottom).is_none() {
                return Err(inadmissible(b, r, c, (left, top, right, bottom)));
            }
            h.push(right);
        }
        if h[cols] != b.right() {
            return Err(LatticeError::Boundary(format!(
                "row {} ends with {}",
                b.row_label(r),
                h[cols]
            )));
        }
        horizontal.push(h);
    }
    Ok(LatticeState {
        boundary: b.clone(),
        vertical,
        horizontal,
    })
}

/// The strict GT pattern of `s`; fails if `s` does not satisfy its boundary
/// or the rows do not interleave.
pub fn state_to_gt(s: &LatticeState) -> Result<GtPattern, LatticeError> {
    let b = &s.boundary;
    let n = b.rows();
    if s.vertical[0] != b.top() || s.vertical[n].iter().any(|x| x.is_minus()) {
        return Err(LatticeError::Boundary("top or bottom row does not match λ".into()));
    }
    if s.horizontal
        .iter()
        .any(|h| h[0] != b.left() || h[b.cols()] != b.right())
    {
        return Err(LatticeError::Boundary("side boundary does not match".into()));
    }
    let rows: Vec<Vec<u32>> = s.vertical[..n]
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, x)| x.is_minus())
                .map(|(c, _)| b.column_label(c) as u32)
                .collect()
        })
        .collect();
    GtPattern::new(rows, true).map_err(LatticeError::Pattern)
}

/// All states of the ensemble, one per strict GT pattern, in pattern order.
pub fn enumerate_states(b: &BoundarySpec) -> impl Iterator<Item = LatticeState> + '_ {
    GtPatterns::strict(&b.lambda).map(move |g| gt_to_state(&g, b).expect("strict GT patterns give admissible states"))
}

/// Exhaustive search over every interior edge, pruning at each vertex.
///
/// Vertices are visited row by row; at each one the left and top spins are
/// already fixed and all four choices of right and bottom are tried.
pub fn brute_force_states(b: &BoundarySpec) -> Result<Vec<LatticeState>, LatticeError> {
    let (n, cols) = (b.rows(), b.cols());
    if n > BRUTE_FORCE_MAX_ROWS || cols > BRUTE_FORCE_MAX_COLS {
        return Err(LatticeError::TooLarge {
            what: "brute-force enumeration",
            rows: n,
            cols,
        });
    }
    let mut st = LatticeState {
        boundary: b.clone(),
        vertical: vec![vec![Spin::Plus; cols]; n + 1],
        horizontal: vec![vec![b.left(); cols + 1]; n],
    };
    st.vertical[0] = b.top();
    let weights: Vec<VertexWeights> = (0..n).map(|r| b.row_weights(r)).collect();
    let mut out = Vec::new();
    search(&mut st, &weights, 0, &mut out);
    Ok(out)
}

fn search(st: &mut LatticeState, weights: &[VertexWeights], pos: usize, out: &mut Vec<LatticeState>) {
    let (n, cols) = (st.boundary.rows(), st.boundary.cols());
    if pos == n * cols {
        out.push(st.clone());
        return;
    }
    let (r, c) = (pos / cols, pos % cols);
    let (left, top) = (st.horizontal[r][c], st.vertical[r][c]);
    for right in [Spin::Plus, Spin::Minus] {
        if c + 1 == cols && right != st.boundary.right() {
            continue;
        }
        for bottom in [Spin::Plus, Spin::Minus] {
            if r + 1 == n && bottom != Spin::Plus {
                continue;
            }
            if weights[r].weight_for(left, top, right, bottom).is_none() {
                continue;
            }
            st.horizontal[r][c + 1] = right;
            st.vertical[r + 1][c] = bottom;
            search(st, weights, pos + 1, out);
        }
    }
    st.horizontal[r][c + 1] = st.boundary.left();
    st.vertical[r + 1][c] = Spin::Plus;
}
