//! Sparse multivariate polynomials over the Gaussian rationals.
//!
//! Every polynomial lives in a [`VarSpace`] of rank `n`, whose variables are
//! the spectral parameters `z_1..z_n` followed by the deformation parameters
//! `t_1..t_n`. Terms are stored in a `BTreeMap` keyed by [`Monomial`], whose
//! `Ord` is graded lexicographic; canonical output walks the map from the
//! largest monomial down.

mod json;
mod packed;
mod scalar;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use thiserror::Error;

pub use json::PolyJson;
pub use packed::PackedPoly;
pub use scalar::GaussianRational;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PolyError {
    #[error("variable space mismatch: rank {left} vs rank {right}")]
    SpaceMismatch { left: usize, right: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("inexact division, remainder {remainder}")]
    InexactDivision { remainder: Box<Polynomial> },
    #[error("no value supplied for {0}")]
    MissingVariable(Var),
    #[error("variable {0} is outside a rank-{1} space")]
    VariableOutOfRange(Var, usize),
    #[error("not a permutation of 1..={0}")]
    InvalidPermutation(usize),
    #[error("malformed polynomial serialization: {0}")]
    Malformed(String),
}

/// The rank `n` shared by every polynomial of one computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarSpace {
    n: usize,
}

impl VarSpace {
    /// Rank 0 is allowed; it only holds constants (the empty lattice).
    pub fn new(n: usize) -> Self {
        Self { n }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn num_vars(&self) -> usize {
        2 * self.n
    }

    fn slot(&self, v: Var) -> Result<usize, PolyError> {
        let (idx, offset) = match v {
            Var::Z(i) => (i, 0),
            Var::T(i) => (i, self.n),
        };
        if idx == 0 || idx > self.n {
            return Err(PolyError::VariableOutOfRange(v, self.n));
        }
        Ok(offset + idx - 1)
    }
}

/// A variable, 1-indexed as in `z_1` / `t_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Z(usize),
    T(usize),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Z(i) => write!(f, "z{i}"),
            Var::T(i) => write!(f, "t{i}"),
        }
    }
}

/// Exponent vector: z-block then t-block, length `2n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(space: VarSpace) -> Self {
        Monomial(vec![0; space.num_vars()])
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn z_block(&self) -> &[u32] {
        &self.0[..self.0.len() / 2]
    }

    fn t_block(&self) -> &[u32] {
        &self.0[self.0.len() / 2..]
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, divisor: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&divisor.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    space: VarSpace,
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl Polynomial {
    pub fn zero(space: VarSpace) -> Self {
        Self {
            space,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(space: VarSpace) -> Self {
        Self::constant(space, GaussianRational::one())
    }

    pub fn constant(space: VarSpace, c: GaussianRational) -> Self {
        let mut p = Self::zero(space);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(space), c);
        }
        p
    }

    pub fn int(space: VarSpace, n: i64) -> Self {
        Self::constant(space, GaussianRational::from(n))
    }

    /// The polynomial consisting of a single variable.
    pub fn var(space: VarSpace, v: Var) -> Result<Self, PolyError> {
        let slot = space.slot(v)?;
        let mut m = Monomial::one(space);
        m.0[slot] = 1;
        Ok(Self::from_terms(space, [(m, GaussianRational::one())]))
    }

    /// `z_i`; panics if `i` is outside the space.
    pub fn z(space: VarSpace, i: usize) -> Self {
        Self::var(space, Var::Z(i)).expect("z index in range")
    }

    /// `t_i`; panics if `i` is outside the space.
    pub fn t(space: VarSpace, i: usize) -> Self {
        Self::var(space, Var::T(i)).expect("t index in range")
    }

    /// `z^zexp · t^texp` with unit coefficient.
    pub fn monomial(space: VarSpace, zexp: &[u32], texp: &[u32]) -> Self {
        assert_eq!(zexp.len(), space.rank());
        assert_eq!(texp.len(), space.rank());
        let m = Monomial(zexp.iter().chain(texp).copied().collect());
        Self::from_terms(space, [(m, GaussianRational::one())])
    }

    /// Builds a polynomial from terms, merging duplicates and pruning zeros.
    pub fn from_terms(space: VarSpace, terms: impl IntoIterator<Item = (Monomial, GaussianRational)>) -> Self {
        let mut p = Self::zero(space);
        for (m, c) in terms {
            assert_eq!(m.0.len(), space.num_vars(), "monomial length must be 2n");
            p.add_term(m, &c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn space(&self) -> VarSpace {
        self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (descending graded-lex) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    /// The value of a constant polynomial; `None` if any variable occurs.
    pub fn constant_value(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_else(GaussianRational::zero)
    }

    fn check_space(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.space != other.space {
            return Err(PolyError::SpaceMismatch {
                left: self.space.n,
                right: other.space.n,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_space(other)?;
        let mut out = Polynomial::zero(self.space);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &GaussianRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.space);
        }
        Polynomial {
            space: self.space,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.space);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Quotient `r` with `r·q = p`, by multivariate division under the
    /// graded-lex order. A nonzero remainder is returned as the error witness.
    pub fn exact_div(&self, q: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_space(q)?;
        let (lead_m, lead_c) = q.leading_term().ok_or(PolyError::DivisionByZero)?;
        let lead_inv = lead_c.inv().expect("nonzero leading coefficient");
        let mut rest = self.clone();
        let mut quotient = Polynomial::zero(self.space);
        let mut remainder = Polynomial::zero(self.space);
        while let Some((m, c)) = rest.terms.pop_last() {
            if lead_m.divides(&m) {
                let qm = m.div(lead_m);
                let qc = &c * &lead_inv;
                // The leading term cancels by construction; subtract the rest.
                for (dm, dc) in q.terms.iter().rev().skip(1) {
                    rest.add_term(dm.mul(&qm), &-(&qc * dc));
                }
                quotient.add_term(qm, &qc);
            } else {
                remainder.add_term(m, &c);
            }
        }
        if remainder.is_zero() {
            Ok(quotient)
        } else {
            Err(PolyError::InexactDivision {
                remainder: Box::new(remainder),
            })
        }
    }

    /// Exact evaluation at a point.
    pub fn eval(&self, point: &Point) -> Result<GaussianRational, PolyError> {
        let n = self.space.n;
        let mut vals = Vec::with_capacity(2 * n);
        for i in 1..=n {
            vals.push(point.z.get(i - 1).ok_or(PolyError::MissingVariable(Var::Z(i))));
        }
        for i in 1..=n {
            vals.push(point.t.get(i - 1).ok_or(PolyError::MissingVariable(Var::T(i))));
        }
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (slot, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = &term * &vals[slot].clone()?.pow(e);
                }
            }
            acc += &term;
        }
        Ok(acc)
    }

    /// Simultaneous substitution `z_i → z_σ(i)`, `t_i → t_σ(i)`; `sigma[i-1] = σ(i)`.
    pub fn permute_rank_variables(&self, sigma: &[usize]) -> Result<Polynomial, PolyError> {
        self.permute_blocks(sigma, true)
    }

    /// Substitution `z_i → z_σ(i)` leaving the `t` variables alone.
    pub fn permute_z(&self, sigma: &[usize]) -> Result<Polynomial, PolyError> {
        self.permute_blocks(sigma, false)
    }

    fn permute_blocks(&self, sigma: &[usize], with_t: bool) -> Result<Polynomial, PolyError> {
        let n = self.space.n;
        let mut seen = vec![false; n];
        if sigma.len() != n {
            return Err(PolyError::InvalidPermutation(n));
        }
        for &s in sigma {
            if s == 0 || s > n || std::mem::replace(&mut seen[s - 1], true) {
                return Err(PolyError::InvalidPermutation(n));
            }
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = m.0.clone();
            for i in 0..n {
                e[sigma[i] - 1] = m.0[i];
                if with_t {
                    e[n + sigma[i] - 1] = m.0[n + i];
                }
            }
            (Monomial(e), c.clone())
        });
        Ok(Polynomial::from_terms(self.space, terms))
    }

    /// Replaces `v` by the polynomial `value`.
    pub fn substitute(&self, v: Var, value: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_space(value)?;
        let slot = self.space.slot(v)?;
        let mut powers: Vec<Polynomial> = vec![Polynomial::one(self.space)];
        let mut out = Polynomial::zero(self.space);
        for (m, c) in &self.terms {
            let e = m.0[slot] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut rest = m.clone();
            rest.0[slot] = 0;
            let base = Polynomial::from_terms(self.space, [(rest, c.clone())]);
            out += &(&base * &powers[e]);
        }
        Ok(out)
    }

    /// Highest exponent of `v` over all terms (0 for the zero polynomial).
    pub fn degree_in(&self, v: Var) -> Result<u32, PolyError> {
        let slot = self.space.slot(v)?;
        Ok(self.terms.keys().map(|m| m.0[slot]).max().unwrap_or(0))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// `true` if no term involves a `t` variable.
    pub fn is_t_free(&self) -> bool {
        self.terms.keys().all(|m| m.t_block().iter().all(|&e| e == 0))
    }

    /// Re-embeds into a space of a different rank; fails if a variable would be lost.
    pub fn to_space(&self, space: VarSpace) -> Result<Polynomial, PolyError> {
        let (old, new) = (self.space.n, space.n);
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0; 2 * new];
            for i in 0..old {
                for (blk, src) in [(0, m.z_block()), (1, m.t_block())] {
                    if src[i] == 0 {
                        continue;
                    }
                    if i >= new {
                        let v = if blk == 0 { Var::Z(i + 1) } else { Var::T(i + 1) };
                        return Err(PolyError::VariableOutOfRange(v, new));
                    }
                    e[blk * new + i] = src[i];
                }
            }
            terms.push((Monomial(e), c.clone()));
        }
        Ok(Polynomial::from_terms(space, terms))
    }
}

/// A quotient `num/den` kept unreduced; equality is tested by
/// cross-multiplication so it never leaves the polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct PolyRatio {
    pub num: Polynomial,
    pub den: Polynomial,
}

impl PolyRatio {
    pub fn new(num: Polynomial, den: Polynomial) -> Self {
        Self { num, den }
    }

    pub fn same_value(&self, other: &PolyRatio) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// `num·other.den − other.num·den`; zero iff the ratios agree.
    pub fn cross_residual(&self, other: &PolyRatio) -> Polynomial {
        &(&self.num * &other.den) - &(&other.num * &self.den)
    }
}

impl fmt::Display for PolyRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// A point assigning values to `z_1..z_n` and `t_1..t_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct Point {
    pub z: Vec<GaussianRational>,
    pub t: Vec<GaussianRational>,
}

impl Point {
    pub fn new(z: Vec<GaussianRational>, t: Vec<GaussianRational>) -> Self {
        Self { z, t }
    }

    pub fn from_ints(z: &[i64], t: &[i64]) -> Self {
        Self {
            z: z.iter().map(|&v| v.into()).collect(),
            t: t.iter().map(|&v| v.into()).collect(),
        }
    }
}

// Operator forms panic on a space mismatch; use the `checked_*` methods where
// inputs come from different computations.

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial add")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial sub")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial mul")
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        self.check_space(rhs).expect("polynomial add");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        self.check_space(rhs).expect("polynomial sub");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), &-c);
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-GaussianRational::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Product of an iterator of polynomials; `1` when empty.
pub fn product<'a>(space: VarSpace, factors: impl IntoIterator<Item = &'a Polynomial>) -> Polynomial {
    factors.into_iter().fold(Polynomial::one(space), |acc, f| &acc * f)
}

fn fmt_monomial(m: &Monomial, f: &mut fmt::Formatter<'_>) -> Result<bool, fmt::Error> {
    let mut first = true;
    let factors = m
        .t_block()
        .iter()
        .enumerate()
        .map(|(i, &e)| (Var::T(i + 1), e))
        .chain(m.z_block().iter().enumerate().map(|(i, &e)| (Var::Z(i + 1), e)));
    for (v, e) in factors {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{e}")?;
        }
    }
    Ok(!first)
}

impl fmt::Display for Polynomial {
    /// Human-readable form, e.g. `t1*z2 + z1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let negative = c.is_real() && c.re < num_rational::BigRational::zero();
            let mag = if negative { -c } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.degree() == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                fmt_monomial(m, f)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod props;

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> VarSpace {
        VarSpace::new(3)
    }

    #[test]
    fn additive_inverse_is_zero() {
        let sp = s3();
        let z1 = Polynomial::z(sp, 1);
        assert!((&z1 + &-&z1).is_zero());
    }

    #[test]
    fn two_state_sum_prints_like_the_worked_example() {
        let sp = VarSpace::new(2);
        let p = &(&Polynomial::t(sp, 1) * &Polynomial::z(sp, 2)) + &Polynomial::z(sp, 1);
        assert_eq!(p.to_string(), "t1*z2 + z1");
    }

    #[test]
    fn difference_of_squares() {
        let sp = s3();
        let (z1, z2) = (Polynomial::z(sp, 1), Polynomial::z(sp, 2));
        let lhs = &(&z1 - &z2) * &(&z1 + &z2);
        assert_eq!(lhs, &z1.pow(2) - &z2.pow(2));
        assert_eq!(lhs.exact_div(&(&z1 - &z2)).unwrap(), &z1 + &z2);
    }

    #[test]
    fn division_by_one_and_zero() {
        let sp = s3();
        let p = &Polynomial::z(sp, 1) + &Polynomial::t(sp, 3).pow(2);
        assert_eq!(p.exact_div(&Polynomial::one(sp)).unwrap(), p);
        assert_eq!(p.exact_div(&Polynomial::zero(sp)), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn inexact_division_reports_remainder() {
        let sp = s3();
        let p = &Polynomial::z(sp, 1).pow(2) + &Polynomial::one(sp);
        let err = p.exact_div(&Polynomial::z(sp, 1)).unwrap_err();
        match err {
            PolyError::InexactDivision { remainder } => assert_eq!(*remainder, Polynomial::one(sp)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn space_mismatch_is_an_error() {
        let a = Polynomial::z(VarSpace::new(2), 1);
        let b = Polynomial::z(VarSpace::new(3), 1);
        assert!(matches!(a.checked_add(&b), Err(PolyError::SpaceMismatch { .. })));
        assert!(matches!(a.checked_mul(&b), Err(PolyError::SpaceMismatch { .. })));
    }

    #[test]
    fn eval_simple() {
        let sp = VarSpace::new(2);
        let p = &(&Polynomial::t(sp, 1) * &Polynomial::z(sp, 2)) + &Polynomial::z(sp, 1);
        let v = p.eval(&Point::from_ints(&[2, 3], &[5, 0])).unwrap();
        assert_eq!(v, GaussianRational::from(17));
        assert!(Polynomial::zero(sp)
            .eval(&Point::from_ints(&[1, 1], &[1, 1]))
            .unwrap()
            .is_zero());
        assert_eq!(
            p.eval(&Point::from_ints(&[2], &[5, 0])),
            Err(PolyError::MissingVariable(Var::Z(2)))
        );
    }

    #[test]
    fn transposition_swaps_both_blocks() {
        let sp = VarSpace::new(2);
        let p = &(&Polynomial::t(sp, 1) * &Polynomial::z(sp, 2)) + &Polynomial::z(sp, 1);
        let q = p.permute_rank_variables(&[2, 1]).unwrap();
        assert_eq!(q.to_string(), "t2*z1 + z2");
        assert_eq!(p.permute_rank_variables(&[1, 2]).unwrap(), p);
        assert!(p.permute_rank_variables(&[1, 1]).is_err());
    }

    #[test]
    fn substitution_specialises() {
        let sp = VarSpace::new(2);
        let p = &(&Polynomial::t(sp, 1) * &Polynomial::z(sp, 2)) + &Polynomial::z(sp, 1);
        let q = p.substitute(Var::T(1), &Polynomial::int(sp, -1)).unwrap();
        assert_eq!(q, &Polynomial::z(sp, 1) - &Polynomial::z(sp, 2));
    }

    #[test]
    fn degree_queries() {
        let sp = VarSpace::new(2);
        let p = &(&Polynomial::t(sp, 1).pow(3) * &Polynomial::z(sp, 2)) + &Polynomial::z(sp, 1);
        assert_eq!(p.degree_in(Var::T(1)).unwrap(), 3);
        assert_eq!(p.degree_in(Var::T(2)).unwrap(), 0);
        assert_eq!(p.total_degree(), 4);
        assert!(!p.is_t_free());
    }

    #[test]
    fn gaussian_coefficients_display() {
        let sp = VarSpace::new(1);
        let p = Polynomial::z(sp, 1).scale(&GaussianRational::i());
        assert_eq!(p.to_string(), "i*z1");
    }
}
