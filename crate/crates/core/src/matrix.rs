//! Dense square matrices of polynomials, plus the `End2`/`End3` wrappers for
//! endomorphisms of `V⊗V` and `V⊗V⊗V`.
//!
//! Basis order is fixed globally: `v_+ < v_-` on each tensor factor, with the
//! tensor basis ordered lexicographically, so `End2` rows run over
//! `(+,+), (+,-), (-,+), (-,-)`.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::Serialize;

use crate::poly::{GaussianRational, Polynomial, VarSpace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    space: VarSpace,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(space: VarSpace, dim: usize) -> Self {
        Self {
            dim,
            space,
            entries: vec![Polynomial::zero(space); dim * dim],
        }
    }

    pub fn identity(space: VarSpace, dim: usize) -> Self {
        let mut m = Self::zeros(space, dim);
        for i in 0..dim {
            m.set(i, i, Polynomial::one(space));
        }
        m
    }

    pub fn from_rows(space: VarSpace, rows: Vec<Vec<Polynomial>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Self {
            dim,
            space,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn space(&self) -> VarSpace {
        self.space
    }

    pub fn get(&self, row: usize, col: usize) -> &Polynomial {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Polynomial) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Polynomial)> {
        self.entries
            .iter()
            .enumerate()
            .map(move |(k, p)| (k / self.dim, k % self.dim, p))
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &Polynomial)> {
        self.entries().find(|(_, _, p)| !p.is_zero())
    }

    pub fn scale(&self, c: &Polynomial) -> Self {
        Self {
            dim: self.dim,
            space: self.space,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn scale_scalar(&self, c: &GaussianRational) -> Self {
        Self {
            dim: self.dim,
            space: self.space,
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
        }
    }

    /// `Some(c)` if the matrix equals `c·I`.
    pub fn as_scalar(&self) -> Option<Polynomial> {
        let c = self.get(0, 0).clone();
        for (i, j, p) in self.entries() {
            let ok = if i == j { *p == c } else { p.is_zero() };
            if !ok {
                return None;
            }
        }
        Some(c)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.space, self.dim);
        for (i, j, p) in self.entries() {
            out.set(j, i, p.clone());
        }
        out
    }

    pub fn kron(&self, other: &PolyMatrix) -> PolyMatrix {
        let (a, b) = (self.dim, other.dim);
        let mut out = Self::zeros(self.space, a * b);
        for (i, j, p) in self.entries() {
            if p.is_zero() {
                continue;
            }
            for (k, l, q) in other.entries() {
                if !q.is_zero() {
                    out.set(i * b + k, j * b + l, p * q);
                }
            }
        }
        out
    }

    pub fn rows(&self) -> Vec<Vec<Polynomial>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }
}

impl<'a> Mul<&'a PolyMatrix> for &'a PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = PolyMatrix::zeros(self.space, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * n + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a PolyMatrix> for &'a PolyMatrix {
    type Output = PolyMatrix;
    fn add(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        PolyMatrix {
            dim: self.dim,
            space: self.space,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a PolyMatrix> for &'a PolyMatrix {
    type Output = PolyMatrix;
    fn sub(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        PolyMatrix {
            dim: self.dim,
            space: self.space,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.entries.chunks(self.dim) {
            let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl Serialize for PolyMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

/// An endomorphism of `V⊗V` (4×4).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct End2(pub PolyMatrix);

/// An endomorphism of `V⊗V⊗V` (8×8).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct End3(pub PolyMatrix);

impl End2 {
    pub fn new(m: PolyMatrix) -> Self {
        assert_eq!(m.dim(), 4, "End2 is 4x4");
        End2(m)
    }

    pub fn identity(space: VarSpace) -> Self {
        End2(PolyMatrix::identity(space, 4))
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.0
    }

    pub fn space(&self) -> VarSpace {
        self.0.space()
    }

    pub fn get(&self, row: usize, col: usize) -> &Polynomial {
        self.0.get(row, col)
    }

    /// The flip `P(v⊗w) = w⊗v`.
    pub fn swap(space: VarSpace) -> Self {
        let mut m = PolyMatrix::zeros(space, 4);
        for (r, c) in [(0, 0), (1, 2), (2, 1), (3, 3)] {
            m.set(r, c, Polynomial::one(space));
        }
        End2(m)
    }
}

impl<'a> Mul<&'a End2> for &'a End2 {
    type Output = End2;
    fn mul(self, rhs: &End2) -> End2 {
        End2(&self.0 * &rhs.0)
    }
}

impl End3 {
    pub fn new(m: PolyMatrix) -> Self {
        assert_eq!(m.dim(), 8, "End3 is 8x8");
        End3(m)
    }

    pub fn identity(space: VarSpace) -> Self {
        End3(PolyMatrix::identity(space, 8))
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl<'a> Mul<&'a End3> for &'a End3 {
    type Output = End3;
    fn mul(self, rhs: &End3) -> End3 {
        End3(&self.0 * &rhs.0)
    }
}

impl<'a> Sub<&'a End3> for &'a End3 {
    type Output = End3;
    fn sub(self, rhs: &End3) -> End3 {
        End3(&self.0 - &rhs.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swap_squares_to_identity() {
        let sp = VarSpace::new(1);
        let p = End2::swap(sp);
        assert_eq!(&p * &p, End2::identity(sp));
    }

    #[test]
    fn scalar_detection() {
        let sp = VarSpace::new(1);
        let z = Polynomial::z(sp, 1);
        let m = PolyMatrix::identity(sp, 4).scale(&z);
        assert_eq!(m.as_scalar(), Some(z));
        let mut n = m.clone();
        n.set(0, 1, Polynomial::one(sp));
        assert_eq!(n.as_scalar(), None);
    }
}
