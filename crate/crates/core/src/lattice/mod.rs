//! λ-boundary ice on an `n × (λ₁ + n)` grid.
//!
//! Columns carry labels `λ₁+n−1, …, 1, 0` from left to right. Vertical edges
//! form `n + 1` rows (row 0 is the top boundary), horizontal edges form `n`
//! rows of `λ₁ + n + 1` edges (edge 0 is the left boundary). The vertex in
//! grid row `r`, column `c` has left edge `horizontal[r][c]`, right edge
//! `horizontal[r][c+1]`, top edge `vertical[r][c]`, bottom edge
//! `vertical[r+1][c]`.
//!
//! | kind | left | right | bottom | top                    | row labels, top-down |
//! |------|------|-------|--------|------------------------|----------------------|
//! | Γ    | `+`  | `-`   | `+`    | `-` on labels in λ+ρ   | `1, …, n`            |
//! | Δ    | `-`  | `+`   | `+`    | `-` on labels in λ+ρ   | `n, …, 1`            |
//!
//! The row label `i` selects the spectral parameter `(z_i, t_i)`.

mod gt;
mod partition;
mod states;
mod transfer;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::poly::{PolyError, VarSpace};
use crate::weights::{self, IceKind, Spin, VertexWeights};

pub use gt::{gt_row_sums, tokuyama_sum, GtPattern, GtPatterns};
pub use partition::{count_states, partition_function, partition_function_by_states, state_weight};
pub use states::{brute_force_states, enumerate_states, gt_to_state, state_to_gt};
pub use transfer::transfer_matrix;

/// Largest grid accepted by [`brute_force_states`].
pub const BRUTE_FORCE_MAX_COLS: usize = 8;
pub const BRUTE_FORCE_MAX_ROWS: usize = 4;
/// Largest row accepted by [`transfer_matrix`].
pub const TRANSFER_MAX_COLS: usize = 6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LatticeError {
    #[error("partition must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<u32>),
    #[error("cannot parse partition {0:?}")]
    Parse(String),
    #[error("grid {rows}×{cols} exceeds the limit for {what}")]
    TooLarge {
        what: &'static str,
        rows: usize,
        cols: usize,
    },
    #[error("inadmissible vertex at row {row}, column label {label}: left {left}, top {top}, right {right}, bottom {bottom}")]
    Inadmissible {
        row: usize,
        label: usize,
        left: Spin,
        top: Spin,
        right: Spin,
        bottom: Spin,
    },
    #[error("boundary mismatch: {0}")]
    Boundary(String),
    #[error("not a Gelfand-Tsetlin pattern: {0}")]
    Pattern(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A partition `λ₁ ≥ … ≥ λ_n ≥ 0`; trailing zeros fix the rank `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, LatticeError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(LatticeError::NotDecreasing(parts));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn rank(&self) -> usize {
        self.parts.len()
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `ρ = (n−1, …, 1, 0)`.
    pub fn rho(n: usize) -> Vec<u32> {
        (0..n as u32).rev().collect()
    }

    /// `λ + ρ`, strictly decreasing.
    pub fn shifted(&self) -> Vec<u32> {
        let n = self.rank() as u32;
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p + n - 1 - i as u32)
            .collect()
    }

    /// Every partition of rank `n` with `λ₁ ≤ max_part`, in lexicographic
    /// order of the parts.
    pub fn all(n: usize, max_part: u32) -> Vec<Partition> {
        fn go(n: usize, bound: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if prefix.len() == n {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for p in 0..=bound {
                prefix.push(p);
                go(n, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, max_part, &mut Vec::new(), &mut out);
        out
    }
}

impl FromStr for Partition {
    type Err = LatticeError;

    /// Comma-separated parts, e.g. `3,1,0`; the empty string is the rank-0
    /// partition.
    fn from_str(s: &str) -> Result<Self, LatticeError> {
        let s = s.trim();
        if s.is_empty() {
            return Partition::new(Vec::new());
        }
        let parts: Result<Vec<u32>, _> = s.split(',').map(|p| p.trim().parse::<u32>()).collect();
        Partition::new(parts.map_err(|_| LatticeError::Parse(s.to_string()))?)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

/// Boundary conditions of the ensemble for `kind` and `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundarySpec {
    pub kind: IceKind,
    pub lambda: Partition,
}

impl BoundarySpec {
    pub fn new(kind: IceKind, lambda: Partition) -> Self {
        Self { kind, lambda }
    }

    pub fn rows(&self) -> usize {
        self.lambda.rank()
    }

    pub fn cols(&self) -> usize {
        self.lambda.largest() as usize + self.rows()
    }

    pub fn space(&self) -> VarSpace {
        VarSpace::new(self.rows())
    }

    pub fn column_label(&self, col: usize) -> usize {
        self.cols() - 1 - col
    }

    pub fn column_of_label(&self, label: usize) -> usize {
        self.cols() - 1 - label
    }

    /// Spectral index of grid row `row` (0-based from the top).
    pub fn row_label(&self, row: usize) -> usize {
        match self.kind {
            IceKind::Gamma => row + 1,
            IceKind::Delta => self.rows() - row,
        }
    }

    pub fn left(&self) -> Spin {
        match self.kind {
            IceKind::Gamma => Spin::Plus,
            IceKind::Delta => Spin::Minus,
        }
    }

    pub fn right(&self) -> Spin {
        self.left().flip()
    }

    pub fn top(&self) -> Vec<Spin> {
        let mut top = vec![Spin::Plus; self.cols()];
        for label in self.lambda.shifted() {
            top[self.column_of_label(label as usize)] = Spin::Minus;
        }
        top
    }

    pub fn row_weights(&self, row: usize) -> VertexWeights {
        weights::ice(self.kind, self.space(), self.row_label(row)).expect("row label in range")
    }
}

/// A full spin assignment on the grid of a [`BoundarySpec`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeState {
    pub boundary: BoundarySpec,
    /// `n + 1` rows of `λ₁ + n` spins.
    pub vertical: Vec<Vec<Spin>>,
    /// `n` rows of `λ₁ + n + 1` spins.
    pub horizontal: Vec<Vec<Spin>>,
}

impl LatticeState {
    /// Spins `(left, top, right, bottom)` around the vertex at `(row, col)`.
    pub fn vertex(&self, row: usize, col: usize) -> (Spin, Spin, Spin, Spin) {
        (
            self.horizontal[row][col],
            self.vertical[row][col],
            self.horizontal[row][col + 1],
            self.vertical[row + 1][col],
        )
    }

    /// Number of `-` spins in vertical row `r`.
    pub fn minus_count(&self, r: usize) -> usize {
        self.vertical[r].iter().filter(|s| s.is_minus()).count()
    }
}

impl Serialize for LatticeState {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let grid = |g: &Vec<Vec<Spin>>| -> Vec<Vec<i8>> {
            g.iter().map(|row| row.iter().map(|s| s.as_i8()).collect()).collect()
        };
        let mut m = s.serialize_map(Some(4))?;
        m.serialize_entry("lambda", &self.boundary.lambda)?;
        m.serialize_entry("kind", &self.boundary.kind)?;
        m.serialize_entry("vertical", &grid(&self.vertical))?;
        m.serialize_entry("horizontal", &grid(&self.horizontal))?;
        m.end()
    }
}

impl fmt::Display for LatticeState {
    /// Column labels on top, then vertical rows of spins alternating with
    /// horizontal rows; `x` marks a vertex, with its left and right edges on
    /// either side.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = &self.boundary;
        write!(f, "   ")?;
        for c in 0..b.cols() {
            write!(f, "{:>4}", b.column_label(c))?;
        }
        writeln!(f)?;
        for r in 0..=b.rows() {
            write!(f, "   ")?;
            for s in &self.vertical[r] {
                write!(f, "{s:>4}")?;
            }
            writeln!(f)?;
            if r < b.rows() {
                write!(f, "{:>2} ", b.row_label(r))?;
                for h in &self.horizontal[r][..b.cols()] {
                    write!(f, " {h} x")?;
                }
                writeln!(f, " {}", self.horizontal[r][b.cols()])?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![3, 1, 0]).is_ok());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!("0,1".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!("".parse::<Partition>().unwrap().rank(), 0);
        assert_eq!("3, 1,0".parse::<Partition>().unwrap().parts(), &[3, 1, 0]);
    }

    #[test]
    fn shifted_partition() {
        let p = Partition::new(vec![3, 1, 0]).unwrap();
        assert_eq!(p.shifted(), vec![5, 2, 0]);
        assert_eq!(Partition::rho(3), vec![2, 1, 0]);
    }

    #[test]
    fn partitions_in_box() {
        // C(n + m, n) partitions fit in an n × m box.
        assert_eq!(Partition::all(2, 2).len(), 6);
        assert_eq!(Partition::all(4, 4).len(), 70);
        assert_eq!(Partition::all(0, 3).len(), 1);
    }

    #[test]
    fn boundary_layout() {
        let b = BoundarySpec::new(IceKind::Gamma, Partition::new(vec![3, 1, 0]).unwrap());
        assert_eq!(b.cols(), 6);
        assert_eq!(b.column_label(0), 5);
        use Spin::{Minus as M, Plus as P};
        assert_eq!(b.top(), vec![M, P, P, M, P, M]);
        assert_eq!(b.row_label(0), 1);
        let d = BoundarySpec::new(IceKind::Delta, b.lambda.clone());
        assert_eq!(d.row_label(0), 3);
        assert_eq!(d.left(), M);
    }
}
