//! Integer polynomials with each exponent vector packed into one `u128`.
//!
//! Terms are kept sorted by key. Multiplying by a monomial adds a constant
//! to every key without reordering, so a product is a merge of shifted runs.
//! Every operation is exact: anything that would overflow a field or a
//! coefficient returns `None` instead.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{GaussianRational, Monomial, Polynomial, VarSpace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackedPoly {
    space: VarSpace,
    terms: Vec<(u128, i128)>,
}

fn field_bits(space: VarSpace) -> u32 {
    match space.num_vars() {
        0 => 0,
        k => (128 / k as u32).min(32),
    }
}

impl PackedPoly {
    /// `None` unless every coefficient is a real integer and every exponent
    /// fits its field.
    pub fn from_poly(p: &Polynomial) -> Option<Self> {
        let bits = field_bits(p.space);
        let mut terms = Vec::with_capacity(p.len());
        for (m, c) in &p.terms {
            let mut key = 0u128;
            for (slot, &e) in m.0.iter().enumerate() {
                if bits < 32 && e >> bits != 0 {
                    return None;
                }
                key |= (e as u128) << (slot as u32 * bits);
            }
            terms.push((key, c.to_i64()? as i128));
        }
        terms.sort_unstable_by_key(|&(k, _)| k);
        Some(Self { space: p.space, terms })
    }

    pub fn to_poly(&self) -> Polynomial {
        let bits = field_bits(self.space);
        let mask = if bits == 0 { 0 } else { (1u128 << bits) - 1 };
        let mut terms = BTreeMap::new();
        for &(key, c) in &self.terms {
            let exps = (0..self.space.num_vars())
                .map(|slot| (key >> (slot as u32 * bits) & mask) as u32)
                .collect();
            let c = GaussianRational::from(BigRational::from_integer(BigInt::from(c)));
            terms.insert(Monomial(exps), c);
        }
        Polynomial {
            space: self.space,
            terms,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn max_exponents(&self) -> Vec<u64> {
        let bits = field_bits(self.space);
        let mask = if bits == 0 { 0 } else { (1u128 << bits) - 1 };
        let mut out = vec![0; self.space.num_vars()];
        for &(key, _) in &self.terms {
            for (slot, m) in out.iter_mut().enumerate() {
                *m = (*m).max((key >> (slot as u32 * bits) & mask) as u64);
            }
        }
        out
    }

    /// `None` on a space mismatch or overflow.
    pub fn mul(&self, other: &PackedPoly) -> Option<PackedPoly> {
        if self.space != other.space {
            return None;
        }
        let bits = field_bits(self.space);
        let limit = if bits >= 64 { u64::MAX } else { (1u64 << bits) - 1 };
        let fits = self
            .max_exponents()
            .iter()
            .zip(other.max_exponents())
            .all(|(a, b)| a.checked_add(b).is_some_and(|s| s <= limit));
        if !fits {
            return None;
        }
        let (long, short) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut runs: Vec<Vec<(u128, i128)>> = Vec::with_capacity(short.len());
        for &(ks, cs) in &short.terms {
            let run: Option<Vec<_>> = long
                .terms
                .iter()
                .map(|&(k, c)| Some((k + ks, c.checked_mul(cs)?)))
                .collect();
            runs.push(run?);
        }
        while runs.len() > 1 {
            let mut next = Vec::with_capacity(runs.len().div_ceil(2));
            let mut it = runs.into_iter();
            while let Some(a) = it.next() {
                next.push(match it.next() {
                    Some(b) => merge(&a, &b)?,
                    None => a,
                });
            }
            runs = next;
        }
        Some(PackedPoly {
            space: self.space,
            terms: runs.pop().unwrap_or_default(),
        })
    }
}

/// Sum of two sorted term lists, dropping cancelled terms.
fn merge(a: &[(u128, i128)], b: &[(u128, i128)]) -> Option<Vec<(u128, i128)>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let ((ka, ca), (kb, cb)) = (a[i], b[j]);
        if ka < kb {
            out.push(a[i]);
            i += 1;
        } else if kb < ka {
            out.push(b[j]);
            j += 1;
        } else {
            let c = ca.checked_add(cb)?;
            if c != 0 {
                out.push((ka, c));
            }
            i += 1;
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp() -> VarSpace {
        VarSpace::new(3)
    }

    #[test]
    fn round_trip_and_product() {
        let (z, t) = (|i| Polynomial::z(sp(), i), |i| Polynomial::t(sp(), i));
        let p = &(&(&t(1) * &z(2)) + &z(1)) - &Polynomial::int(sp(), 3);
        let q = &(&z(3) * &z(3)) + &t(2).scale(&GaussianRational::from(-2));
        let (pp, qq) = (PackedPoly::from_poly(&p).unwrap(), PackedPoly::from_poly(&q).unwrap());
        assert_eq!(pp.to_poly(), p);
        assert_eq!(pp.mul(&qq).unwrap().to_poly(), &p * &q);
        assert_eq!(qq.mul(&pp), pp.mul(&qq));
    }

    #[test]
    fn cancelling_terms_are_dropped() {
        let z1 = Polynomial::z(sp(), 1);
        let diff = PackedPoly::from_poly(&(&z1 - &Polynomial::one(sp()))).unwrap();
        let sum = PackedPoly::from_poly(&(&z1 + &Polynomial::one(sp()))).unwrap();
        let prod = diff.mul(&sum).unwrap().to_poly();
        assert_eq!(prod, &(&z1 * &z1) - &Polynomial::one(sp()));
    }

    #[test]
    fn refuses_what_it_cannot_hold() {
        let half = Polynomial::constant(sp(), GaussianRational::from_ratio(1, 2));
        assert!(PackedPoly::from_poly(&half).is_none());
        let i = Polynomial::constant(sp(), GaussianRational::i());
        assert!(PackedPoly::from_poly(&i).is_none());
        // 6 variables leave 21 bits per exponent
        let big = PackedPoly::from_poly(&Polynomial::z(sp(), 1).pow(1 << 20)).unwrap();
        assert!(big.mul(&big).is_none());
        let huge = PackedPoly::from_poly(&Polynomial::int(sp(), i64::MAX)).unwrap();
        let p = huge.mul(&huge).unwrap();
        assert!(p.mul(&huge).is_none());
        assert_eq!(
            p.to_poly(),
            &Polynomial::int(sp(), i64::MAX) * &Polynomial::int(sp(), i64::MAX)
        );
    }

    #[test]
    fn rank_zero_constants() {
        let s = VarSpace::new(0);
        let a = PackedPoly::from_poly(&Polynomial::int(s, 6)).unwrap();
        let b = PackedPoly::from_poly(&Polynomial::int(s, -7)).unwrap();
        assert_eq!(a.mul(&b).unwrap().to_poly(), Polynomial::int(s, -42));
    }
}
