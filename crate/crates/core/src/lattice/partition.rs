//! Boltzmann weights of states and partition functions.

use std::collections::BTreeMap;

use super::{enumerate_states, BoundarySpec, LatticeError, LatticeState};
use crate::poly::Polynomial;
use crate::weights::{Spin, VertexWeights};

/// Product of the vertex weights of `s`, row `r` using the weights of its
/// row label.
pub fn state_weight(s: &LatticeState) -> Result<Polynomial, LatticeError> {
    let b = &s.boundary;
    let mut w = Polynomial::one(b.space());
    for r in 0..b.rows() {
        let rw = b.row_weights(r);
        for c in 0..b.cols() {
            let (left, top, right, bottom) = s.vertex(r, c);
            let v = rw
                .weight_for(left, top, right, bottom)
                .ok_or(LatticeError::Inadmissible {
                    row: b.row_label(r),
                    label: b.column_label(c),
                    left,
                    top,
                    right,
                    bottom,
                })?;
            w = &w * v;
        }
    }
    Ok(w)
}

/// Sum of [`state_weight`] over [`enumerate_states`].
pub fn partition_function_by_states(b: &BoundarySpec) -> Polynomial {
    enumerate_states(b).fold(Polynomial::zero(b.space()), |mut acc, s| {
        acc += &state_weight(&s).expect("enumerated states are admissible");
        acc
    })
}

// A vertical row of spins packed into a bitmask, bit `c` set for `-` at
// column `c`.
type Mask = u64;

/// Every bottom row reachable from `top` through one row of vertices, with
/// the product of that row's weights. Horizontal spins are threaded left to
/// right from the boundary.
fn row_transitions(b: &BoundarySpec, w: &VertexWeights, top: Mask) -> Vec<(Mask, Polynomial)> {
    #[allow(clippy::too_many_arguments)]
    fn go(
        b: &BoundarySpec,
        w: &VertexWeights,
        top: Mask,
        c: usize,
        h: Spin,
        bottom: Mask,
        acc: Polynomial,
        out: &mut Vec<(Mask, Polynomial)>,
    ) {
        if c == b.cols() {
            if h == b.right() {
                out.push((bottom, acc));
            }
            return;
        }
        let t = if top >> c & 1 == 1 { Spin::Minus } else { Spin::Plus };
        for (bot, bit) in [(Spin::Plus, 0), (Spin::Minus, 1 << c)] {
            for right in [Spin::Plus, Spin::Minus] {
                if let Some(v) = w.weight_for(h, t, right, bot) {
                    go(b, w, top, c + 1, right, bottom | bit, &acc * v, out);
                }
            }
        }
    }
    let mut out = Vec::new();
    go(b, w, top, 0, b.left(), 0, Polynomial::one(b.space()), &mut out);
    out
}

fn top_mask(b: &BoundarySpec) -> Mask {
    b.top()
        .iter()
        .enumerate()
        .filter(|(_, s)| s.is_minus())
        .fold(0, |m, (c, _)| m | 1 << c)
}

fn check_width(b: &BoundarySpec) -> Result<(), LatticeError> {
    if b.cols() > Mask::BITS as usize {
        return Err(LatticeError::TooLarge {
            what: "row transfer",
            rows: b.rows(),
            cols: b.cols(),
        });
    }
    Ok(())
}

/// `Z = Σ_states ∏ vertex weights`, computed row by row: the running sums
/// are keyed by the spins on the current row of vertical edges, so states
/// sharing a row prefix are never expanded twice.
pub fn partition_function(b: &BoundarySpec) -> Result<Polynomial, LatticeError> {
    check_width(b)?;
    let mut layer: BTreeMap<Mask, Polynomial> = BTreeMap::new();
    layer.insert(top_mask(b), Polynomial::one(b.space()));
    for r in 0..b.rows() {
        let w = b.row_weights(r);
        let mut next: BTreeMap<Mask, Polynomial> = BTreeMap::new();
        for (top, acc) in &layer {
            for (bottom, rw) in row_transitions(b, &w, *top) {
                let term = acc * &rw;
                let slot = next.entry(bottom).or_insert_with(|| Polynomial::zero(b.space()));
                *slot += &term;
            }
        }
        layer = next;
    }
    Ok(layer.remove(&0).unwrap_or_else(|| Polynomial::zero(b.space())))
}

/// Number of admissible states, by the same row recursion with counts.
pub fn count_states(b: &BoundarySpec) -> Result<u128, LatticeError> {
    check_width(b)?;
    let mut layer: BTreeMap<Mask, u128> = BTreeMap::new();
    layer.insert(top_mask(b), 1);
    for r in 0..b.rows() {
        let w = b.row_weights(r);
        let mut next: BTreeMap<Mask, u128> = BTreeMap::new();
        for (top, count) in &layer {
            for (bottom, _) in row_transitions(b, &w, *top) {
                *next.entry(bottom).or_insert(0) += count;
            }
        }
        layer = next;
    }
    Ok(layer.get(&0).copied().unwrap_or(0))
}
