//! Schur polynomials by two independent routes, and the deformed
//! denominators that relate them to partition functions.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::lattice::{self, BoundarySpec, GtPatterns, LatticeError, Partition};
use crate::poly::{self, GaussianRational, Point, PolyError, Polynomial, VarSpace};
use crate::weights::IceKind;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SchurError {
    #[error("{what} is not divisible; remainder {remainder}")]
    Inexact { what: String, remainder: Box<Polynomial> },
    #[error("{what} still depends on t: {value}")]
    DependsOnT { what: String, value: Box<Polynomial> },
    #[error("{what} differs from the Schur polynomial by {residual}")]
    Mismatch { what: String, residual: Box<Polynomial> },
    #[error("bialternant quotient is not positive at z = (1, 2, 4, …)")]
    SignConvention,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SchurMethod {
    Bialternant,
    PatternSum,
}

impl std::str::FromStr for SchurMethod {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "bialternant" => Ok(SchurMethod::Bialternant),
            "pattern" | "pattern-sum" => Ok(SchurMethod::PatternSum),
            other => Err(format!("unknown method {other:?}")),
        }
    }
}

impl fmt::Display for SchurMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SchurMethod::Bialternant => "bialternant",
            SchurMethod::PatternSum => "pattern-sum",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SchurResult {
    pub value: Polynomial,
    pub method: SchurMethod,
}

pub fn schur(lambda: &Partition, method: SchurMethod) -> Result<SchurResult, SchurError> {
    let value = match method {
        SchurMethod::Bialternant => schur_bialternant(lambda)?,
        SchurMethod::PatternSum => schur_pattern_sum(lambda),
    };
    Ok(SchurResult { value, method })
}

fn sign(perm: &[usize]) -> i64 {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `Σ_σ sgn(σ) ∏_j z_j^{(λ+ρ)_{σ(j)}}`.
pub fn alternant(lambda: &Partition) -> Polynomial {
    let n = lambda.rank();
    let sp = VarSpace::new(n);
    let shifted = lambda.shifted();
    let zeros = vec![0; n];
    let mut total = Polynomial::zero(sp);
    for perm in (0..n).permutations(n) {
        let exps: Vec<u32> = perm.iter().map(|&k| shifted[k]).collect();
        let term = Polynomial::monomial(sp, &exps, &zeros).scale(&GaussianRational::from(sign(&perm)));
        total += &term;
    }
    total
}

/// `∏_{i<j} (z_i − z_j)`.
pub fn vandermonde(n: usize) -> Polynomial {
    let sp = VarSpace::new(n);
    let factors: Vec<Polynomial> = (1..=n)
        .tuple_combinations()
        .map(|(i, j)| &Polynomial::z(sp, i) - &Polynomial::z(sp, j))
        .collect();
    poly::product(sp, &factors)
}

/// `z = (1, 2, 4, …, 2^{n−1})`, `t = 0`.
fn positive_point(n: usize) -> Point {
    let z: Vec<i64> = (0..n as u32).map(|k| 1 << k).collect();
    Point::from_ints(&z, &vec![0; n])
}

/// The alternant divided by `∏_{i<j}(z_i − z_j)`, checked to be positive at
/// a point with increasing positive coordinates.
pub fn schur_bialternant(lambda: &Partition) -> Result<Polynomial, SchurError> {
    let n = lambda.rank();
    let q = alternant(lambda).exact_div(&vandermonde(n)).map_err(|e| match e {
        PolyError::InexactDivision { remainder } => SchurError::Inexact {
            what: format!("alternant of {lambda}"),
            remainder,
        },
        other => other.into(),
    })?;
    if !q.eval(&positive_point(n))?.is_positive_real() {
        return Err(SchurError::SignConvention);
    }
    Ok(q)
}

/// `Σ z^{μ(𝔗)}` over all GT patterns with top row `λ`.
pub fn schur_pattern_sum(lambda: &Partition) -> Polynomial {
    let sp = VarSpace::new(lambda.rank());
    GtPatterns::weak(lambda).fold(Polynomial::zero(sp), |mut acc, g| {
        acc += &g.z_monomial(sp);
        acc
    })
}

/// The factors `t_i z_j + z_i` (Γ) or `t_j z_j + z_i` (Δ), `i < j`, in
/// lexicographic order of `(i, j)`.
pub fn denominator_factors(kind: IceKind, n: usize) -> Vec<Polynomial> {
    let sp = VarSpace::new(n);
    let (z, t) = (|i| Polynomial::z(sp, i), |i| Polynomial::t(sp, i));
    (1..=n)
        .tuple_combinations()
        .map(|(i, j)| match kind {
            IceKind::Gamma => &(&t(i) * &z(j)) + &z(i),
            IceKind::Delta => &(&t(j) * &z(j)) + &z(i),
        })
        .collect()
}

/// `∏_{i<j}(t_i z_j + z_i)` for Γ, `∏_{i<j}(t_j z_j + z_i)` for Δ.
pub fn deformed_denominator(kind: IceKind, n: usize) -> Polynomial {
    poly::product(VarSpace::new(n), &denominator_factors(kind, n))
}

/// `Z(𝔖^X_λ)` divided by the deformed denominator of `X`. Fails unless the
/// division is exact, the quotient is free of `t`, and it equals the
/// bialternant Schur polynomial.
pub fn s_ice(kind: IceKind, lambda: &Partition) -> Result<Polynomial, SchurError> {
    let what = format!("Z({}, {lambda})", kind.symbol());
    let z = lattice::partition_function(&BoundarySpec::new(kind, lambda.clone()))?;
    let q = z
        .exact_div(&deformed_denominator(kind, lambda.rank()))
        .map_err(|e| match e {
            PolyError::InexactDivision { remainder } => SchurError::Inexact {
                what: what.clone(),
                remainder,
            },
            other => other.into(),
        })?;
    if !q.is_t_free() {
        return Err(SchurError::DependsOnT {
            what,
            value: Box::new(q),
        });
    }
    let residual = &q - &schur_bialternant(lambda)?;
    if !residual.is_zero() {
        return Err(SchurError::Mismatch {
            what,
            residual: Box::new(residual),
        });
    }
    Ok(q)
}

pub fn s_gamma(lambda: &Partition) -> Result<Polynomial, SchurError> {
    s_ice(IceKind::Gamma, lambda)
}

pub fn s_delta(lambda: &Partition) -> Result<Polynomial, SchurError> {
    s_ice(IceKind::Delta, lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Var;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn trivial_partitions() {
        for n in 0..4 {
            let zero = part(&vec![0; n]);
            assert!(schur_bialternant(&zero).unwrap().is_one());
            assert!(schur_pattern_sum(&zero).is_one());
        }
    }

    #[test]
    fn elementary_rank_two() {
        let sp = VarSpace::new(2);
        let expected = &Polynomial::z(sp, 1) + &Polynomial::z(sp, 2);
        assert_eq!(schur_bialternant(&part(&[1, 0])).unwrap(), expected);
        assert_eq!(schur_pattern_sum(&part(&[1, 0])), expected);
    }

    #[test]
    fn dimension_at_ones() {
        let s = schur_bialternant(&part(&[3, 1, 0])).unwrap();
        let v = s.eval(&Point::from_ints(&[1, 1, 1], &[0, 0, 0])).unwrap();
        assert_eq!(v, GaussianRational::from(15));
    }

    #[test]
    fn methods_agree_small() {
        for n in 1..=3 {
            for lambda in Partition::all(n, 3) {
                assert_eq!(
                    schur_bialternant(&lambda).unwrap(),
                    schur_pattern_sum(&lambda),
                    "{lambda}"
                );
            }
        }
    }

    #[test]
    fn pattern_sum_is_symmetric() {
        let s = schur_pattern_sum(&part(&[2, 1, 0]));
        assert!(s.is_t_free());
        for sigma in [[2, 1, 3], [1, 3, 2], [3, 1, 2]] {
            assert_eq!(s.permute_z(&sigma).unwrap(), s);
        }
    }

    #[test]
    fn stability_under_last_variable() {
        let big = schur_bialternant(&part(&[2, 1, 0])).unwrap();
        let sp = VarSpace::new(3);
        let cut = big
            .substitute(Var::Z(3), &Polynomial::zero(sp))
            .unwrap()
            .to_space(VarSpace::new(2))
            .unwrap();
        assert_eq!(cut, schur_bialternant(&part(&[2, 1])).unwrap());
    }

    #[test]
    fn denominators() {
        assert!(deformed_denominator(IceKind::Gamma, 1).is_one());
        let sp = VarSpace::new(2);
        let expected = &(&Polynomial::t(sp, 1) * &Polynomial::z(sp, 2)) + &Polynomial::z(sp, 1);
        assert_eq!(deformed_denominator(IceKind::Gamma, 2), expected);
    }

    #[test]
    fn denominators_at_minus_one_are_vandermonde() {
        let n = 3;
        let sp = VarSpace::new(n);
        let v = vandermonde(n);
        for kind in IceKind::ALL {
            let mut d = deformed_denominator(kind, n);
            for i in 1..=n {
                d = d.substitute(Var::T(i), &Polynomial::int(sp, -1)).unwrap();
            }
            assert!(d == v || d == -&v, "{kind}: {d}");
        }
    }

    #[test]
    fn ice_quotients() {
        assert!(s_gamma(&part(&[0, 0])).unwrap().is_one());
        let lambda = part(&[3, 1, 0]);
        let s = schur_bialternant(&lambda).unwrap();
        assert_eq!(s_gamma(&lambda).unwrap(), s);
        assert_eq!(s_delta(&lambda).unwrap(), s);
    }
}
