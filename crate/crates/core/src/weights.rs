//! Boltzmann weight systems and the π group law.
//!
//! A [`VertexWeights`] holds the eight weights `a1 a2 b1 b2 c1 c2 d1 d2`
//! laid out as
//!
//! ```text
//! [ a1  .   .   d1 ]
//! [ .   b1  c1  .  ]
//! [ .   c2  b2  .  ]
//! [ d2  .   .   a2 ]
//! ```
//!
//! with rows/columns over `(+,+), (+,-), (-,+), (-,-)`. Entry
//! `M[(θ,γ)][(ν,β)]` is the weight of a lattice vertex whose left, top,
//! right and bottom edges carry `ν, β, θ, γ`.
//!
//! Type C systems have `d1 = d2 = 0`, type D systems have `c1 = c2 = 0`.
//! On the free-fermionic locus the map [`pi_map`] turns composition of
//! R-matrices into 4×4 matrix multiplication.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::matrix::{End2, PolyMatrix};
use crate::poly::{GaussianRational, PolyError, PolyRatio, Polynomial, VarSpace};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum WeightError {
    #[error("row index {index} outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("R-matrix needs two distinct rows, got {0} twice")]
    SameRow(usize),
    #[error("both c and d weights are nonzero")]
    Mixed,
    #[error("weight {0} must be nonzero")]
    ZeroWeight(&'static str),
    #[error("weights are not free-fermionic, residual {0}")]
    NotFreeFermionic(Box<Polynomial>),
    #[error("a1·a2 + b1·b2 vanishes; not invertible under π")]
    Singular,
    #[error("{which} differs between S and T, residual {residual}")]
    DeltaMismatch {
        which: &'static str,
        residual: Box<Polynomial>,
    },
    #[error("the two expressions for {0} disagree")]
    FormMismatch(&'static str),
    #[error("operation requires type-C (six-vertex) weights")]
    NotTypeC,
    #[error("matrix is not in the image of π")]
    NotInPiImage,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Spin {
    Plus,
    Minus,
}

impl Spin {
    pub fn flip(self) -> Spin {
        match self {
            Spin::Plus => Spin::Minus,
            Spin::Minus => Spin::Plus,
        }
    }

    pub fn is_minus(self) -> bool {
        self == Spin::Minus
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Spin::Plus => 1,
            Spin::Minus => -1,
        }
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Spin::Plus => "+",
            Spin::Minus => "-",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IceKind {
    Gamma,
    Delta,
}

impl IceKind {
    pub const ALL: [IceKind; 2] = [IceKind::Gamma, IceKind::Delta];

    pub fn symbol(self) -> char {
        match self {
            IceKind::Gamma => 'Γ',
            IceKind::Delta => 'Δ',
        }
    }
}

impl fmt::Display for IceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IceKind::Gamma => "gamma",
            IceKind::Delta => "delta",
        })
    }
}

impl std::str::FromStr for IceKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "gamma" | "g" | "γ" => Ok(IceKind::Gamma),
            "delta" | "d" | "δ" => Ok(IceKind::Delta),
            other => Err(format!("unknown ice kind {other:?}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum WeightType {
    C,
    D,
}

/// A spectral parameter pair `(z, t)`; usually `(z_i, t_i)` but the hatted
/// R-matrices mix indices, so both halves are arbitrary polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralParam {
    pub z: Polynomial,
    pub t: Polynomial,
}

impl SpectralParam {
    pub fn new(z: Polynomial, t: Polynomial) -> Self {
        Self { z, t }
    }

    /// `(z_i, t_i)`.
    pub fn row(space: VarSpace, i: usize) -> Result<Self, WeightError> {
        check_index(space, i)?;
        Ok(Self::new(Polynomial::z(space, i), Polynomial::t(space, i)))
    }

    pub fn space(&self) -> VarSpace {
        self.z.space()
    }
}

fn check_index(space: VarSpace, i: usize) -> Result<(), WeightError> {
    if i == 0 || i > space.rank() {
        return Err(WeightError::IndexOutOfRange {
            index: i,
            n: space.rank(),
        });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexWeights {
    a1: Polynomial,
    a2: Polynomial,
    b1: Polynomial,
    b2: Polynomial,
    c1: Polynomial,
    c2: Polynomial,
    d1: Polynomial,
    d2: Polynomial,
    ty: WeightType,
}

impl VertexWeights {
    pub fn type_c(
        a1: Polynomial,
        a2: Polynomial,
        b1: Polynomial,
        b2: Polynomial,
        c1: Polynomial,
        c2: Polynomial,
    ) -> Result<Self, WeightError> {
        if c1.is_zero() {
            return Err(WeightError::ZeroWeight("c1"));
        }
        if c2.is_zero() {
            return Err(WeightError::ZeroWeight("c2"));
        }
        let zero = Polynomial::zero(a1.space());
        Ok(Self {
            a1,
            a2,
            b1,
            b2,
            c1,
            c2,
            d1: zero.clone(),
            d2: zero,
            ty: WeightType::C,
        })
    }

    pub fn type_d(
        a1: Polynomial,
        a2: Polynomial,
        b1: Polynomial,
        b2: Polynomial,
        d1: Polynomial,
        d2: Polynomial,
    ) -> Result<Self, WeightError> {
        if d1.is_zero() {
            return Err(WeightError::ZeroWeight("d1"));
        }
        if d2.is_zero() {
            return Err(WeightError::ZeroWeight("d2"));
        }
        let zero = Polynomial::zero(a1.space());
        Ok(Self {
            a1,
            a2,
            b1,
            b2,
            c1: zero.clone(),
            c2: zero,
            d1,
            d2,
            ty: WeightType::D,
        })
    }

    /// Classifies a full set of eight weights.
    #[allow(clippy::too_many_arguments)]
    pub fn from_entries(
        a1: Polynomial,
        a2: Polynomial,
        b1: Polynomial,
        b2: Polynomial,
        c1: Polynomial,
        c2: Polynomial,
        d1: Polynomial,
        d2: Polynomial,
    ) -> Result<Self, WeightError> {
        let has_c = !c1.is_zero() || !c2.is_zero();
        let has_d = !d1.is_zero() || !d2.is_zero();
        match (has_c, has_d) {
            (true, true) => Err(WeightError::Mixed),
            (_, false) => Self::type_c(a1, a2, b1, b2, c1, c2),
            (false, true) => Self::type_d(a1, a2, b1, b2, d1, d2),
        }
    }

    pub fn weight_type(&self) -> WeightType {
        self.ty
    }

    pub fn space(&self) -> VarSpace {
        self.a1.space()
    }

    pub fn a1(&self) -> &Polynomial {
        &self.a1
    }
    pub fn a2(&self) -> &Polynomial {
        &self.a2
    }
    pub fn b1(&self) -> &Polynomial {
        &self.b1
    }
    pub fn b2(&self) -> &Polynomial {
        &self.b2
    }
    pub fn c1(&self) -> &Polynomial {
        &self.c1
    }
    pub fn c2(&self) -> &Polynomial {
        &self.c2
    }
    pub fn d1(&self) -> &Polynomial {
        &self.d1
    }
    pub fn d2(&self) -> &Polynomial {
        &self.d2
    }

    /// Named entries in the fixed order a1 a2 b1 b2 c1 c2 d1 d2.
    pub fn named(&self) -> [(&'static str, &Polynomial); 8] {
        [
            ("a1", &self.a1),
            ("a2", &self.a2),
            ("b1", &self.b1),
            ("b2", &self.b2),
            ("c1", &self.c1),
            ("c2", &self.c2),
            ("d1", &self.d1),
            ("d2", &self.d2),
        ]
    }

    /// The 4×4 matrix in the layout shown in the module docs.
    pub fn to_end2(&self) -> End2 {
        let z = Polynomial::zero(self.space());
        End2::new(PolyMatrix::from_rows(
            self.space(),
            vec![
                vec![self.a1.clone(), z.clone(), z.clone(), self.d1.clone()],
                vec![z.clone(), self.b1.clone(), self.c1.clone(), z.clone()],
                vec![z.clone(), self.c2.clone(), self.b2.clone(), z.clone()],
                vec![self.d2.clone(), z.clone(), z.clone(), self.a2.clone()],
            ],
        ))
    }

    /// `a1a2 + b1b2 − c1c2` (type C) or `a1a2 + b1b2 − d1d2` (type D).
    pub fn free_fermion_residual(&self) -> Polynomial {
        let ab = &(&self.a1 * &self.a2) + &(&self.b1 * &self.b2);
        match self.ty {
            WeightType::C => &ab - &(&self.c1 * &self.c2),
            WeightType::D => &ab - &(&self.d1 * &self.d2),
        }
    }

    pub fn is_free_fermionic(&self) -> bool {
        self.free_fermion_residual().is_zero()
    }

    /// Weight of a vertex with the given left, top, right and bottom spins;
    /// `None` when the configuration is not admissible for this type.
    pub fn weight_for(&self, left: Spin, top: Spin, right: Spin, bottom: Spin) -> Option<&Polynomial> {
        use Spin::{Minus as M, Plus as P};
        match (left, top, right, bottom, self.ty) {
            (P, P, P, P, _) => Some(&self.a1),
            (M, M, M, M, _) => Some(&self.a2),
            (P, M, P, M, _) => Some(&self.b1),
            (M, P, M, P, _) => Some(&self.b2),
            (M, P, P, M, WeightType::C) => Some(&self.c1),
            (P, M, M, P, WeightType::C) => Some(&self.c2),
            (M, M, P, P, WeightType::D) => Some(&self.d1),
            (P, P, M, M, WeightType::D) => Some(&self.d2),
            _ => None,
        }
    }

    fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        Self {
            a1: f(&self.a1),
            a2: f(&self.a2),
            b1: f(&self.b1),
            b2: f(&self.b2),
            c1: f(&self.c1),
            c2: f(&self.c2),
            d1: f(&self.d1),
            d2: f(&self.d2),
            ty: self.ty,
        }
    }

    /// All eight weights multiplied by a scalar polynomial.
    pub fn scaled(&self, c: &Polynomial) -> Self {
        self.map(|p| p * c)
    }
}

impl fmt::Display for VertexWeights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ty = match self.ty {
            WeightType::C => "C",
            WeightType::D => "D",
        };
        write!(f, "type {ty}:")?;
        for (name, p) in self.named() {
            if !p.is_zero() {
                write!(f, " {name}={p};")?;
            }
        }
        Ok(())
    }
}

impl Serialize for VertexWeights {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(9))?;
        m.serialize_entry(
            "type",
            match self.ty {
                WeightType::C => "C",
                WeightType::D => "D",
            },
        )?;
        for (name, p) in self.named() {
            m.serialize_entry(name, p)?;
        }
        m.end()
    }
}

// ---------------------------------------------------------------------------
// The named weight systems.

/// Gamma ice at `(z, t)`: a1=1, a2=z, b1=t, b2=z, c1=z(t+1), c2=1.
pub fn gamma_at(p: &SpectralParam) -> VertexWeights {
    let sp = p.space();
    let one = Polynomial::one(sp);
    let t1 = &p.t + &one;
    VertexWeights::type_c(one.clone(), p.z.clone(), p.t.clone(), p.z.clone(), &p.z * &t1, one)
        .expect("gamma weights have nonzero c")
}

/// Delta ice at `(z, t)`: a1=z, a2=1, b1=zt, b2=1, d1=1, d2=z(t+1).
pub fn delta_at(p: &SpectralParam) -> VertexWeights {
    let sp = p.space();
    let one = Polynomial::one(sp);
    let t1 = &p.t + &one;
    VertexWeights::type_d(p.z.clone(), one.clone(), &p.z * &p.t, one.clone(), one, &p.z * &t1)
        .expect("delta weights have nonzero d")
}

pub fn ice_at(kind: IceKind, p: &SpectralParam) -> VertexWeights {
    match kind {
        IceKind::Gamma => gamma_at(p),
        IceKind::Delta => delta_at(p),
    }
}

/// `Γ(i)`, Gamma ice in row `i`.
pub fn gamma(space: VarSpace, i: usize) -> Result<VertexWeights, WeightError> {
    Ok(gamma_at(&SpectralParam::row(space, i)?))
}

/// `Δ(z_i, t_i)`.
pub fn delta(space: VarSpace, i: usize) -> Result<VertexWeights, WeightError> {
    Ok(delta_at(&SpectralParam::row(space, i)?))
}

pub fn ice(kind: IceKind, space: VarSpace, i: usize) -> Result<VertexWeights, WeightError> {
    Ok(ice_at(kind, &SpectralParam::row(space, i)?))
}

/// The braiding weights `R_XY(z_i, t_i, z_j, t_j)` at arbitrary parameters.
pub fn r_weights_at(x: IceKind, y: IceKind, p: &SpectralParam, q: &SpectralParam) -> VertexWeights {
    use IceKind::{Delta, Gamma};
    let one = Polynomial::one(p.space());
    let (zi, ti, zj, tj) = (&p.z, &p.t, &q.z, &q.t);
    let zi_ti1 = zi * &(ti + &one);
    let zj_tj1 = zj * &(tj + &one);
    match (x, y) {
        (Gamma, Gamma) => VertexWeights::type_c(
            zj + &(tj * zi),
            zi + &(ti * zj),
            &(ti * zj) - &(tj * zi),
            zi - zj,
            zi_ti1,
            zj_tj1,
        ),
        (Delta, Delta) => VertexWeights::type_c(
            &(zi * ti) + zj,
            &(zj * tj) + zi,
            zi - zj,
            &(zj * tj) - &(zi * ti),
            zj_tj1,
            zi_ti1,
        ),
        (Gamma, Delta) => VertexWeights::type_d(
            &(&(ti * tj) * zj) - zi,
            zi - zj,
            &(zj * tj) + zi,
            &(zj * ti) + zi,
            zi_ti1,
            zj_tj1,
        ),
        (Delta, Gamma) => VertexWeights::type_d(
            zi - zj,
            zj - &(&(ti * tj) * zi),
            &(zi * ti) + zj,
            &(zi * tj) + zj,
            zj_tj1,
            zi_ti1,
        ),
    }
    .expect("braiding weights are nondegenerate for distinct parameters")
}

/// `R_XY(i, j)` in rows `i ≠ j`.
pub fn r_weights(x: IceKind, y: IceKind, space: VarSpace, i: usize, j: usize) -> Result<VertexWeights, WeightError> {
    if i == j {
        return Err(WeightError::SameRow(i));
    }
    let p = SpectralParam::row(space, i)?;
    let q = SpectralParam::row(space, j)?;
    Ok(r_weights_at(x, y, &p, &q))
}

// ---------------------------------------------------------------------------
// π and the group law.

/// Type C: `diag(c1, [[a1, b2], [−b1, a2]], c2)`.
/// Type D: anti-diagonal `d1, d2` around `i·[[a2, −b1], [b2, a1]]`.
pub fn pi_map(w: &VertexWeights) -> End2 {
    let sp = w.space();
    let mut m = PolyMatrix::zeros(sp, 4);
    match w.ty {
        WeightType::C => {
            m.set(0, 0, w.c1.clone());
            m.set(1, 1, w.a1.clone());
            m.set(1, 2, w.b2.clone());
            m.set(2, 1, -&w.b1);
            m.set(2, 2, w.a2.clone());
            m.set(3, 3, w.c2.clone());
        }
        WeightType::D => {
            let i = GaussianRational::i();
            m.set(0, 3, w.d1.clone());
            m.set(1, 1, w.a2.scale(&i));
            m.set(1, 2, (-&w.b1).scale(&i));
            m.set(2, 1, w.b2.scale(&i));
            m.set(2, 2, w.a1.scale(&i));
            m.set(3, 0, w.d2.clone());
        }
    }
    End2::new(m)
}

/// Inverse of [`pi_map`] on its image.
pub fn from_pi(m: &End2) -> Result<VertexWeights, WeightError> {
    let g = |r, c| m.get(r, c).clone();
    let outside_zero = |cells: &[(usize, usize)]| cells.iter().all(|&(r, c)| m.get(r, c).is_zero());
    let inner_off = [(0, 1), (0, 2), (1, 0), (1, 3), (2, 0), (2, 3), (3, 1), (3, 2)];
    if !outside_zero(&inner_off) {
        return Err(WeightError::NotInPiImage);
    }
    let corners_d = !g(0, 3).is_zero() || !g(3, 0).is_zero();
    let corners_c = !g(0, 0).is_zero() || !g(3, 3).is_zero();
    match (corners_c, corners_d) {
        (true, false) => VertexWeights::type_c(g(1, 1), g(2, 2), -&g(2, 1), g(1, 2), g(0, 0), g(3, 3)),
        (false, true) => {
            let minus_i = -GaussianRational::i();
            let i = GaussianRational::i();
            VertexWeights::type_d(
                g(2, 2).scale(&minus_i),
                g(1, 1).scale(&minus_i),
                g(1, 2).scale(&i),
                g(2, 1).scale(&minus_i),
                g(0, 3),
                g(3, 0),
            )
        }
        _ => Err(WeightError::NotInPiImage),
    }
}

/// `(Δ₁, Δ₂)` of a six-vertex system, as unreduced ratios
/// `N / (2 a1 b1)` and `N / (2 a2 b2)` with `N = a1a2 + b1b2 − c1c2`.
pub fn delta_invariants(w: &VertexWeights) -> Result<(PolyRatio, PolyRatio), WeightError> {
    if w.ty != WeightType::C {
        return Err(WeightError::NotTypeC);
    }
    let num = w.free_fermion_residual();
    let den1 = (&w.a1 * &w.b1).scale(&GaussianRational::from(2));
    let den2 = (&w.a2 * &w.b2).scale(&GaussianRational::from(2));
    if den1.is_zero() {
        return Err(WeightError::ZeroWeight("a1·b1"));
    }
    if den2.is_zero() {
        return Err(WeightError::ZeroWeight("a2·b2"));
    }
    Ok((PolyRatio::new(num.clone(), den1), PolyRatio::new(num, den2)))
}

fn check_group_element(w: &VertexWeights) -> Result<(), WeightError> {
    let residual = w.free_fermion_residual();
    if !residual.is_zero() {
        return Err(WeightError::NotFreeFermionic(Box::new(residual)));
    }
    if (&(&w.a1 * &w.a2) + &(&w.b1 * &w.b2)).is_zero() {
        return Err(WeightError::Singular);
    }
    Ok(())
}

/// The composition `S = R∘T`, characterised by `π(S) = π(R)·π(T)`, so that
/// `⟦R, S, T⟧ = 0`. Computed from the closed-form case tables; the matrix
/// identity is checked separately in tests.
pub fn compose(r: &VertexWeights, t: &VertexWeights) -> Result<VertexWeights, WeightError> {
    check_group_element(r)?;
    check_group_element(t)?;
    let m = |x: &Polynomial, y: &Polynomial| x * y;
    let s = match (r.ty, t.ty) {
        (WeightType::C, WeightType::C) => VertexWeights::type_c(
            &m(&r.a1, &t.a1) - &m(&r.b2, &t.b1),
            &m(&r.a2, &t.a2) - &m(&r.b1, &t.b2),
            &m(&r.b1, &t.a1) + &m(&r.a2, &t.b1),
            &m(&r.a1, &t.b2) + &m(&r.b2, &t.a2),
            m(&r.c1, &t.c1),
            m(&r.c2, &t.c2),
        ),
        (WeightType::C, WeightType::D) => VertexWeights::type_d(
            &m(&r.a2, &t.a1) + &m(&r.b1, &t.b1),
            &m(&r.a1, &t.a2) + &m(&r.b2, &t.b2),
            &m(&r.a1, &t.b1) - &m(&r.b2, &t.a1),
            &m(&r.a2, &t.b2) - &m(&r.b1, &t.a2),
            m(&r.c1, &t.d1),
            m(&r.c2, &t.d2),
        ),
        (WeightType::D, WeightType::C) => VertexWeights::type_d(
            &m(&r.a1, &t.a2) + &m(&r.b2, &t.b2),
            &m(&r.a2, &t.a1) + &m(&r.b1, &t.b1),
            &m(&r.b1, &t.a2) - &m(&r.a2, &t.b2),
            &m(&r.b2, &t.a1) - &m(&r.a1, &t.b1),
            m(&r.d1, &t.c2),
            m(&r.d2, &t.c1),
        ),
        (WeightType::D, WeightType::D) => VertexWeights::type_c(
            &m(&r.b1, &t.b2) - &m(&r.a2, &t.a2),
            &m(&r.b2, &t.b1) - &m(&r.a1, &t.a1),
            &m(&r.a1, &t.b2) + &m(&r.b2, &t.a2),
            &m(&r.b1, &t.a1) + &m(&r.a2, &t.b1),
            m(&r.d1, &t.d2),
            m(&r.d2, &t.d1),
        ),
    }?;
    Ok(s)
}

/// `(T', D)` with `π(T') = D·π(T)⁻¹`, where `D = c1c2` (type C) or `d1d2`
/// (type D). Stays polynomial; divide by `D` at a numeric point if needed.
pub fn projective_inverse(t: &VertexWeights) -> Result<(VertexWeights, Polynomial), WeightError> {
    check_group_element(t)?;
    match t.ty {
        WeightType::C => Ok((
            VertexWeights::type_c(t.a2.clone(), t.a1.clone(), -&t.b1, -&t.b2, t.c2.clone(), t.c1.clone())?,
            &t.c1 * &t.c2,
        )),
        WeightType::D => Ok((
            VertexWeights::type_d(-&t.a2, -&t.a1, t.b1.clone(), t.b2.clone(), t.d1.clone(), t.d2.clone())?,
            &t.d1 * &t.d2,
        )),
    }
}

/// Exact inverse for numeric (constant) weights.
pub fn inverse(t: &VertexWeights) -> Result<VertexWeights, WeightError> {
    let (w, d) = projective_inverse(t)?;
    let d = d.constant_value().ok_or(WeightError::Singular)?;
    let inv = d.inv().ok_or(WeightError::Singular)?;
    Ok(w.map(|p| p.scale(&inv)))
}

/// Given six-vertex `S` and `T` with matching `Δ₁, Δ₂`, the `R` with
/// `⟦R, S, T⟧ = 0`:
///
/// ```text
/// a1(R) = (b2S a1T b1T − a1S b1T b2T + a1S c1T c2T) / a1T
///       = (a1S b1S a2T − a1S a2S b1T + c1S c2S b1T) / b1S
/// a2(R) = (b1S a2T b2T − a2S b1T b2T + a2S c1T c2T) / a2T
///       = (a2S b2S a1T − a1S a2S b2T + c1S c2S b2T) / b2S
/// b1(R) = b1S a2T − a2S b1T        b2(R) = b2S a1T − a1S b2T
/// c1(R) = c1S c2T                  c2(R) = c2S c1T
/// ```
pub fn solve_r_from_st(s: &VertexWeights, t: &VertexWeights) -> Result<VertexWeights, WeightError> {
    if s.ty != WeightType::C || t.ty != WeightType::C {
        return Err(WeightError::NotTypeC);
    }
    const S_LABELS: [&str; 6] = ["a1(S)", "a2(S)", "b1(S)", "b2(S)", "c1(S)", "c2(S)"];
    const T_LABELS: [&str; 6] = ["a1(T)", "a2(T)", "b1(T)", "b2(T)", "c1(T)", "c2(T)"];
    for (labels, w) in [(S_LABELS, s), (T_LABELS, t)] {
        for (label, (_, p)) in labels.into_iter().zip(w.named()) {
            if p.is_zero() {
                return Err(WeightError::ZeroWeight(label));
            }
        }
    }
    let (s1, s2) = delta_invariants(s)?;
    let (t1, t2) = delta_invariants(t)?;
    for (which, a, b) in [("Δ1", &s1, &t1), ("Δ2", &s2, &t2)] {
        let residual = a.cross_residual(b);
        if !residual.is_zero() {
            return Err(WeightError::DeltaMismatch {
                which,
                residual: Box::new(residual),
            });
        }
    }
    let m3 = |x: &Polynomial, y: &Polynomial, z: &Polynomial| &(x * y) * z;
    let a1_first = &(&m3(&s.b2, &t.a1, &t.b1) - &m3(&s.a1, &t.b1, &t.b2)) + &m3(&s.a1, &t.c1, &t.c2);
    let a1_second = &(&m3(&s.a1, &s.b1, &t.a2) - &m3(&s.a1, &s.a2, &t.b1)) + &m3(&s.c1, &s.c2, &t.b1);
    let a2_first = &(&m3(&s.b1, &t.a2, &t.b2) - &m3(&s.a2, &t.b1, &t.b2)) + &m3(&s.a2, &t.c1, &t.c2);
    let a2_second = &(&m3(&s.a2, &s.b2, &t.a1) - &m3(&s.a1, &s.a2, &t.b2)) + &m3(&s.c1, &s.c2, &t.b2);
    let a1 = agreeing_quotient("a1(R)", (&a1_first, &t.a1), (&a1_second, &s.b1))?;
    let a2 = agreeing_quotient("a2(R)", (&a2_first, &t.a2), (&a2_second, &s.b2))?;
    VertexWeights::type_c(
        a1,
        a2,
        &(&s.b1 * &t.a2) - &(&s.a2 * &t.b1),
        &(&s.b2 * &t.a1) - &(&s.a1 * &t.b2),
        &s.c1 * &t.c2,
        &s.c2 * &t.c1,
    )
}

/// Checks `n1/d1 = n2/d2` by cross-multiplication, then returns the value,
/// which must be a polynomial.
fn agreeing_quotient(
    name: &'static str,
    (n1, d1): (&Polynomial, &Polynomial),
    (n2, d2): (&Polynomial, &Polynomial),
) -> Result<Polynomial, WeightError> {
    if n1 * d2 != n2 * d1 {
        return Err(WeightError::FormMismatch(name));
    }
    match n1.exact_div(d1) {
        Ok(q) => Ok(q),
        Err(_) => Ok(n2.exact_div(d2)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp() -> VarSpace {
        VarSpace::new(3)
    }

    fn z(i: usize) -> Polynomial {
        Polynomial::z(sp(), i)
    }
    fn t(i: usize) -> Polynomial {
        Polynomial::t(sp(), i)
    }
    fn one() -> Polynomial {
        Polynomial::one(sp())
    }

    #[test]
    fn gamma_table_entries() {
        let g1 = gamma(sp(), 1).unwrap();
        assert_eq!(*g1.b1(), t(1));
        let g2 = gamma(sp(), 2).unwrap();
        assert_eq!(*g2.c1(), &z(2) * &(&t(2) + &one()));
        assert_eq!(g2.weight_type(), WeightType::C);
        assert!(g2.is_free_fermionic());
        assert!(gamma(sp(), 4).is_err());
        assert!(gamma(sp(), 0).is_err());
    }

    #[test]
    fn delta_table_entries() {
        let d1 = delta(sp(), 1).unwrap();
        assert_eq!(*d1.d2(), &z(1) * &(&t(1) + &one()));
        assert_eq!(d1.weight_type(), WeightType::D);
        assert!(d1.c1().is_zero() && d1.c2().is_zero());
        assert!(d1.free_fermion_residual().is_zero());
    }

    #[test]
    fn braiding_entries() {
        let r = r_weights(IceKind::Gamma, IceKind::Gamma, sp(), 1, 2).unwrap();
        assert_eq!(*r.a1(), &z(2) + &(&t(2) * &z(1)));
        let r = r_weights(IceKind::Gamma, IceKind::Delta, sp(), 1, 3).unwrap();
        assert_eq!(*r.d2(), &(&z(3) * &t(3)) + &z(3));
        assert!(r_weights(IceKind::Gamma, IceKind::Gamma, sp(), 2, 2).is_err());
    }

    #[test]
    fn braiding_weights_are_free_fermionic() {
        for x in IceKind::ALL {
            for y in IceKind::ALL {
                let r = r_weights(x, y, sp(), 1, 2).unwrap();
                assert!(r.is_free_fermionic(), "{x}{y}: {}", r.free_fermion_residual());
            }
        }
        assert_eq!(
            r_weights(IceKind::Delta, IceKind::Delta, sp(), 1, 2)
                .unwrap()
                .weight_type(),
            WeightType::C
        );
        assert_eq!(
            r_weights(IceKind::Gamma, IceKind::Delta, sp(), 1, 2)
                .unwrap()
                .weight_type(),
            WeightType::D
        );
    }

    #[test]
    fn pi_of_gamma() {
        let pi = pi_map(&gamma(sp(), 2).unwrap());
        assert_eq!(*pi.get(0, 0), &z(2) * &(&t(2) + &one()));
        assert_eq!(*pi.get(1, 1), one());
        assert_eq!(*pi.get(1, 2), z(2));
        assert_eq!(*pi.get(2, 1), -&t(2));
        assert_eq!(*pi.get(2, 2), z(2));
        assert_eq!(*pi.get(3, 3), one());
    }

    #[test]
    fn pi_of_unit_weights_is_identity() {
        let zero = Polynomial::zero(sp());
        let w = VertexWeights::type_c(one(), one(), zero.clone(), zero, one(), one()).unwrap();
        assert_eq!(pi_map(&w), End2::identity(sp()));
    }

    #[test]
    fn from_pi_inverts_pi() {
        for w in [
            gamma(sp(), 1).unwrap(),
            delta(sp(), 2).unwrap(),
            r_weights(IceKind::Delta, IceKind::Gamma, sp(), 1, 3).unwrap(),
        ] {
            assert_eq!(from_pi(&pi_map(&w)).unwrap(), w);
        }
        let mixed = End2::identity(sp());
        let mut m = mixed.0.clone();
        m.set(0, 3, one());
        assert!(from_pi(&End2::new(m)).is_err());
    }

    #[test]
    fn delta_invariants_cases() {
        let (d1, d2) = delta_invariants(&gamma(sp(), 1).unwrap()).unwrap();
        assert!(d1.num.is_zero() && d2.num.is_zero());

        let w = VertexWeights::type_c(one(), one(), one(), one(), one(), one()).unwrap();
        let (d1, d2) = delta_invariants(&w).unwrap();
        let half = PolyRatio::new(one(), Polynomial::int(sp(), 2));
        assert!(d1.same_value(&half));
        assert!(d2.same_value(&half));

        let zero = Polynomial::zero(sp());
        let w = VertexWeights::type_c(one(), one(), zero.clone(), zero, one(), one()).unwrap();
        assert!(matches!(delta_invariants(&w), Err(WeightError::ZeroWeight(_))));
    }

    #[test]
    fn equal_products_give_equal_invariants() {
        let c = |n| Polynomial::int(sp(), n);
        // a1 b1 = 2·3 = a2 b2 = 1·6
        let w = VertexWeights::type_c(c(2), c(1), c(3), c(6), c(5), c(7)).unwrap();
        let (d1, d2) = delta_invariants(&w).unwrap();
        assert!(d1.same_value(&d2));
    }

    #[test]
    fn compose_gamma_gamma_matches_pi_product() {
        let (r, tt) = (gamma(sp(), 1).unwrap(), gamma(sp(), 2).unwrap());
        let s = compose(&r, &tt).unwrap();
        assert_eq!(pi_map(&s), &pi_map(&r) * &pi_map(&tt));
        assert!(s.is_free_fermionic());
    }

    #[test]
    fn compose_d_d_c1_entry() {
        let (r, tt) = (delta(sp(), 1).unwrap(), delta(sp(), 2).unwrap());
        let s = compose(&r, &tt).unwrap();
        assert_eq!(s.weight_type(), WeightType::C);
        assert_eq!(*s.c1(), r.d1() * tt.d2());
    }

    #[test]
    fn compose_rejects_non_free_fermionic() {
        let c = |n| Polynomial::int(sp(), n);
        let w = VertexWeights::type_c(c(1), c(1), c(1), c(1), c(1), c(1)).unwrap();
        assert!(matches!(
            compose(&w, &gamma(sp(), 1).unwrap()),
            Err(WeightError::NotFreeFermionic(_))
        ));
    }

    #[test]
    fn projective_inverse_times_original_is_scalar() {
        for w in [gamma(sp(), 1).unwrap(), delta(sp(), 3).unwrap()] {
            let (inv, d) = projective_inverse(&w).unwrap();
            let prod = &pi_map(&w) * &pi_map(&inv);
            assert_eq!(prod.0.as_scalar(), Some(d));
        }
    }

    #[test]
    fn solve_on_gamma_pair_is_proportional_to_braiding() {
        let (s, tt) = (gamma(sp(), 1).unwrap(), gamma(sp(), 2).unwrap());
        let r = solve_r_from_st(&s, &tt).unwrap();
        let expected = r_weights(IceKind::Gamma, IceKind::Gamma, sp(), 1, 2).unwrap();
        // Entrywise ratios all equal one common scalar k: r = k·expected.
        let k = r.c1().exact_div(expected.c1()).unwrap();
        assert_eq!(r, expected.scaled(&k));
    }

    #[test]
    fn solve_with_equal_inputs_has_no_b() {
        let c = |n| Polynomial::int(sp(), n);
        let w = VertexWeights::type_c(c(2), c(3), c(5), c(7), c(1), c(4)).unwrap();
        let r = solve_r_from_st(&w, &w).unwrap();
        assert!(r.b1().is_zero() && r.b2().is_zero());
    }

    #[test]
    fn solve_rejects_mismatched_invariants() {
        let c = |n| Polynomial::int(sp(), n);
        let s = VertexWeights::type_c(c(2), c(3), c(5), c(7), c(1), c(4)).unwrap();
        let tt = VertexWeights::type_c(c(1), c(1), c(1), c(1), c(1), c(1)).unwrap();
        assert!(matches!(
            solve_r_from_st(&s, &tt),
            Err(WeightError::DeltaMismatch { .. })
        ));
    }

    mod props {
        use proptest::prelude::*;

        use super::super::*;
        use crate::sample::WeightSampler;

        fn ty(c: bool) -> WeightType {
            if c {
                WeightType::C
            } else {
                WeightType::D
            }
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn pi_is_multiplicative(seed in any::<u64>(), a in any::<bool>(), b in any::<bool>()) {
                let mut rng = WeightSampler::new(seed, VarSpace::new(1));
                let (r, t) = (rng.free_fermionic(ty(a)), rng.free_fermionic(ty(b)));
                let s = compose(&r, &t).unwrap();
                prop_assert_eq!(pi_map(&s), &pi_map(&r) * &pi_map(&t));
                prop_assert!(s.is_free_fermionic());
            }

            #[test]
            fn composition_is_associative(seed in any::<u64>(), a in any::<bool>(), b in any::<bool>(), c in any::<bool>()) {
                let mut rng = WeightSampler::new(seed, VarSpace::new(1));
                let (x, y, z) = (rng.free_fermionic(ty(a)), rng.free_fermionic(ty(b)), rng.free_fermionic(ty(c)));
                let left = compose(&compose(&x, &y).unwrap(), &z).unwrap();
                let right = compose(&x, &compose(&y, &z).unwrap()).unwrap();
                prop_assert_eq!(left, right);
            }

            #[test]
            fn pi_is_injective(seed in any::<u64>(), a in any::<bool>()) {
                let mut rng = WeightSampler::new(seed, VarSpace::new(1));
                let w = rng.free_fermionic(ty(a));
                prop_assert_eq!(from_pi(&pi_map(&w)).unwrap(), w);
            }
        }
    }
}
