//! Tensor lifts, the Yang-Baxter commutator and the checks built on it.
//!
//! `End3` uses the basis `v_{s1}⊗v_{s2}⊗v_{s3}` in lexicographic order with
//! `+` before `-`, so index `4·s1 + 2·s2 + s3` with `+ = 0`.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::linalg;
use crate::matrix::{End2, End3, PolyMatrix};
use crate::poly::{GaussianRational, PolyRatio, Polynomial, VarSpace};
use crate::weights::{self, IceKind, SpectralParam, VertexWeights, WeightError, WeightType};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    S12,
    S13,
    S23,
}

/// `φ_12`, `φ_13` or `φ_23`: `φ` acting on two tensor factors, identity on
/// the third.
pub fn lift(phi: &End2, slot: Slot) -> End3 {
    let sp = phi.space();
    let mut out = PolyMatrix::zeros(sp, 8);
    let idx = |a: usize, b: usize, c: usize| 4 * a + 2 * b + c;
    for (r, c, p) in phi.matrix().entries() {
        if p.is_zero() {
            continue;
        }
        let (r1, r2, c1, c2) = (r >> 1, r & 1, c >> 1, c & 1);
        for k in 0..2 {
            let (row, col) = match slot {
                Slot::S12 => (idx(r1, r2, k), idx(c1, c2, k)),
                Slot::S13 => (idx(r1, k, r2), idx(c1, k, c2)),
                Slot::S23 => (idx(k, r1, r2), idx(k, c1, c2)),
            };
            out.set(row, col, p.clone());
        }
    }
    End3::new(out)
}

/// `⟦R, S, T⟧ = R_12 S_13 T_23 − T_23 S_13 R_12`.
pub fn yb_commutator(r: &End2, s: &End2, t: &End2) -> End3 {
    let (r12, s13, t23) = (lift(r, Slot::S12), lift(s, Slot::S13), lift(t, Slot::S23));
    let left = &(&r12 * &s13) * &t23;
    let right = &(&t23 * &s13) * &r12;
    &left - &right
}

/// The same commutator assembled entry by entry from spin sums:
///
/// ```text
/// [(θ,ρ,α),(σ,τ,β)] = Σ_{δφψ} T^{ψδ}_{τβ} S^{φα}_{σδ} R^{θρ}_{φψ}
///                   − Σ_{γμν} R^{νμ}_{στ} S^{θγ}_{νβ} T^{ρα}_{μγ}
/// ```
///
/// with `X^{ab}_{cd} = X[(a,b)][(c,d)]`. Independent of [`lift`]; used to
/// cross-check it.
pub fn star_triangle_matrix(r: &End2, s: &End2, t: &End2) -> End3 {
    let sp = r.space();
    let e = |m: &End2, a: usize, b: usize, c: usize, d: usize| m.get(2 * a + b, 2 * c + d).clone();
    let mut out = PolyMatrix::zeros(sp, 8);
    for row in 0..8 {
        let (th, rh, al) = (row >> 2, (row >> 1) & 1, row & 1);
        for col in 0..8 {
            let (si, ta, be) = (col >> 2, (col >> 1) & 1, col & 1);
            let mut acc = Polynomial::zero(sp);
            for x in 0..2 {
                for y in 0..2 {
                    for w in 0..2 {
                        // right side: δ = x, φ = y, ψ = w
                        let rhs = &(&e(t, w, x, ta, be) * &e(s, y, al, si, x)) * &e(r, th, rh, y, w);
                        // left side: γ = x, μ = y, ν = w
                        let lhs = &(&e(r, w, y, si, ta) * &e(s, th, x, w, be)) * &e(t, rh, al, y, x);
                        acc += &rhs;
                        acc -= &lhs;
                    }
                }
            }
            out.set(row, col, acc);
        }
    }
    End3::new(out)
}

// ---------------------------------------------------------------------------
// Reports.

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one named check; `witness` is a nonzero residual on failure.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub status: Status,
    pub witness: Option<Polynomial>,
}

impl CheckReport {
    pub fn pass(check: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn fail(check: impl Into<String>, witness: Option<Polynomial>) -> Self {
        Self {
            check: check.into(),
            status: Status::Fail,
            witness,
        }
    }

    /// Passes iff `residual` is zero; otherwise the residual is the witness.
    pub fn from_residual(check: impl Into<String>, residual: Polynomial) -> Self {
        if residual.is_zero() {
            Self::pass(check)
        } else {
            Self::fail(check, Some(residual))
        }
    }

    /// Passes iff every entry vanishes; the witness is the first nonzero one.
    pub fn from_matrix(check: impl Into<String>, m: &PolyMatrix) -> Self {
        match m.first_nonzero() {
            None => Self::pass(check),
            Some((_, _, p)) => Self::fail(check, Some(p.clone())),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.status, &self.witness) {
            (Status::Pass, _) => write!(f, "PASS {}", self.check),
            (Status::Fail, Some(w)) => write!(f, "FAIL {} (witness: {w})", self.check),
            (Status::Fail, None) => write!(f, "FAIL {}", self.check),
        }
    }
}

// ---------------------------------------------------------------------------
// Parametrized families.

/// A family `p, q ↦ R(p, q)` of 4×4 matrices in two spectral parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RFamily {
    /// `R_XY`, or its hatted form `R̂_XY(z1,t1,z2,t2) = R_XY(z2,t1,z1,t2)`.
    Braid { x: IceKind, y: IceKind, hatted: bool },
    /// `X‡(p, q) = P X(q, p) P`.
    Dagger(Box<RFamily>),
    /// `R(p, q) = X(p)`: a single-row ice matrix ignoring `q`.
    Ice(IceKind),
    /// The all-zero family.
    Zero,
}

impl RFamily {
    pub fn braid(x: IceKind, y: IceKind, hatted: bool) -> Self {
        RFamily::Braid { x, y, hatted }
    }

    pub fn at(&self, p: &SpectralParam, q: &SpectralParam) -> End2 {
        match self {
            RFamily::Braid { x, y, hatted: false } => weights::r_weights_at(*x, *y, p, q).to_end2(),
            RFamily::Braid { x, y, hatted: true } => {
                let p2 = SpectralParam::new(q.z.clone(), p.t.clone());
                let q2 = SpectralParam::new(p.z.clone(), q.t.clone());
                weights::r_weights_at(*x, *y, &p2, &q2).to_end2()
            }
            RFamily::Dagger(inner) => {
                let swap = End2::swap(p.space());
                &(&swap * &inner.at(q, p)) * &swap
            }
            RFamily::Ice(kind) => weights::ice_at(*kind, p).to_end2(),
            RFamily::Zero => End2::new(PolyMatrix::zeros(p.space(), 4)),
        }
    }
}

impl fmt::Display for RFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RFamily::Braid { x, y, hatted } => {
                let hat = if *hatted { "^" } else { "" };
                write!(f, "R{hat}_{}{}", x.symbol(), y.symbol())
            }
            RFamily::Dagger(inner) => write!(f, "({inner})‡"),
            RFamily::Ice(k) => write!(f, "{}", k.symbol()),
            RFamily::Zero => f.write_str("0"),
        }
    }
}

/// `X ↦ X‡`, with `X‡‡` collapsed back to `X`.
pub fn ddagger(family: &RFamily) -> RFamily {
    match family {
        RFamily::Dagger(inner) => (**inner).clone(),
        other => RFamily::Dagger(Box::new(other.clone())),
    }
}

/// `(z_1,t_1), (z_2,t_2), (z_3,t_3)` in a rank-3 space.
pub fn three_params() -> [SpectralParam; 3] {
    let sp = VarSpace::new(3);
    [1, 2, 3].map(|i| SpectralParam::row(sp, i).expect("index in range"))
}

/// `⟦X(p1,p2), Y(p1,p3), Z(p2,p3)⟧`.
pub fn family_commutator(x: &RFamily, y: &RFamily, z: &RFamily, p: &[SpectralParam; 3]) -> End3 {
    yb_commutator(&x.at(&p[0], &p[1]), &y.at(&p[0], &p[2]), &z.at(&p[1], &p[2]))
}

/// `⟦R_XY(z_i,t_i,z_j,t_j), X(z_i,t_i), Y(z_j,t_j)⟧ = 0` for rows 1, 2.
pub fn check_braiding(x: IceKind, y: IceKind) -> CheckReport {
    let sp = VarSpace::new(2);
    let (p, q) = (
        SpectralParam::row(sp, 1).expect("row 1"),
        SpectralParam::row(sp, 2).expect("row 2"),
    );
    let r = weights::r_weights_at(x, y, &p, &q).to_end2();
    let c = yb_commutator(&r, &weights::ice_at(x, &p).to_end2(), &weights::ice_at(y, &q).to_end2());
    CheckReport::from_matrix(format!("braiding {}{}", x.symbol(), y.symbol()), c.matrix())
}

/// `⟦R_XY(1,2), R_XZ(1,3), R_YZ(2,3)⟧ = 0`, plain and hatted.
pub fn check_parametrized_ybe(x: IceKind, y: IceKind, z: IceKind) -> Vec<CheckReport> {
    let p = three_params();
    [false, true]
        .into_iter()
        .map(|hatted| {
            let c = family_commutator(
                &RFamily::braid(x, y, hatted),
                &RFamily::braid(x, z, hatted),
                &RFamily::braid(y, z, hatted),
                &p,
            );
            let form = if hatted { "hatted" } else { "plain" };
            CheckReport::from_matrix(
                format!("ybe {}{}{} {form}", x.symbol(), y.symbol(), z.symbol()),
                c.matrix(),
            )
        })
        .collect()
}

/// Result of a triangularity check: `R_XY(p,q)·P·R_YX(q,p)·P = scalar·I`.
#[derive(Clone, Debug, PartialEq)]
pub struct Triangularity {
    pub x: IceKind,
    pub y: IceKind,
    /// The scalar, as the ratio `product[0][0] / 1`.
    pub scalar: PolyRatio,
}

/// Computes `R_XY(z_1,t_1,z_2,t_2)·P·R_YX(z_2,t_2,z_1,t_1)·P`; errors with
/// the product when it is not scalar.
pub fn check_triangularity(x: IceKind, y: IceKind) -> Result<Triangularity, Box<PolyMatrix>> {
    let sp = VarSpace::new(2);
    let (p, q) = (
        SpectralParam::row(sp, 1).expect("row 1"),
        SpectralParam::row(sp, 2).expect("row 2"),
    );
    let swap = End2::swap(sp);
    let forward = RFamily::braid(x, y, false).at(&p, &q);
    let back = RFamily::braid(y, x, false).at(&q, &p);
    let prod = &(&(&forward * &swap) * &back) * &swap;
    match prod.matrix().as_scalar() {
        Some(c) => Ok(Triangularity {
            x,
            y,
            scalar: PolyRatio::new(c, Polynomial::one(sp)),
        }),
        None => Err(Box::new(prod.0)),
    }
}

/// The eight axioms for `A = R_XX`, `C = R_XY`, `B = C‡`, `D = R_YY‡`
/// (all hatted when `hatted` is set), in the order
/// `⟦A,A,A⟧ ⟦D,D,D⟧ ⟦A,C,C⟧ ⟦D,B,B⟧ ⟦A,B‡,B‡⟧ ⟦D,C‡,C‡⟧ ⟦A,C,B‡⟧ ⟦D,B,C‡⟧`.
pub fn yb_system_axioms(x: IceKind, y: IceKind, hatted: bool) -> Vec<(String, [RFamily; 3])> {
    let a = RFamily::braid(x, x, hatted);
    let c = RFamily::braid(x, y, hatted);
    let b = ddagger(&c);
    let d = ddagger(&RFamily::braid(y, y, hatted));
    let (bd, cd) = (ddagger(&b), ddagger(&c));
    vec![
        ("[A,A,A]".into(), [a.clone(), a.clone(), a.clone()]),
        ("[D,D,D]".into(), [d.clone(), d.clone(), d.clone()]),
        ("[A,C,C]".into(), [a.clone(), c.clone(), c.clone()]),
        ("[D,B,B]".into(), [d.clone(), b.clone(), b.clone()]),
        ("[A,B‡,B‡]".into(), [a.clone(), bd.clone(), bd.clone()]),
        ("[D,C‡,C‡]".into(), [d.clone(), cd.clone(), cd.clone()]),
        ("[A,C,B‡]".into(), [a, c, bd]),
        ("[D,B,C‡]".into(), [d, b, cd]),
    ]
}

pub fn check_yb_system(x: IceKind, y: IceKind, hatted: bool) -> Vec<CheckReport> {
    let p = three_params();
    let form = if hatted { "hatted" } else { "plain" };
    yb_system_axioms(x, y, hatted)
        .into_iter()
        .map(|(name, [a, b, c])| {
            let m = family_commutator(&a, &b, &c, &p);
            CheckReport::from_matrix(
                format!("yb-system X={} Y={} {form} {name}", x.symbol(), y.symbol()),
                m.matrix(),
            )
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Linear solve for R.

/// Kernel of the linear map `R ↦ ⟦R, S, T⟧` restricted to six-vertex `R`,
/// with coordinates `(a1, a2, b1, b2, c1, c2)`. `S` and `T` must be numeric.
pub fn r_solution_space(s: &VertexWeights, t: &VertexWeights) -> Result<Vec<[GaussianRational; 6]>, WeightError> {
    let sp = s.space();
    let (se, te) = (s.to_end2(), t.to_end2());
    // matrix positions of a1 a2 b1 b2 c1 c2
    let cells = [(0, 0), (3, 3), (1, 1), (2, 2), (1, 2), (2, 1)];
    let mut columns = Vec::with_capacity(6);
    for (r, c) in cells {
        let mut e = PolyMatrix::zeros(sp, 4);
        e.set(r, c, Polynomial::one(sp));
        let comm = yb_commutator(&End2::new(e), &se, &te);
        let col: Option<Vec<GaussianRational>> = comm.matrix().entries().map(|(_, _, p)| p.constant_value()).collect();
        columns.push(col.ok_or(WeightError::NotInPiImage)?);
    }
    let rows: Vec<Vec<GaussianRational>> = (0..64)
        .map(|k| columns.iter().map(|col| col[k].clone()).collect())
        .collect();
    Ok(linalg::nullspace(&rows, 6)
        .into_iter()
        .map(|v| v.try_into().expect("six coordinates"))
        .collect())
}

/// Whether some six-vertex `R` with `c1(R)·c2(R) ≠ 0` satisfies
/// `⟦R, S, T⟧ = 0`. A generic kernel element has both nonzero iff each
/// coordinate is nonzero on some basis vector.
pub fn admissible_r_exists(s: &VertexWeights, t: &VertexWeights) -> Result<bool, WeightError> {
    if s.weight_type() != WeightType::C || t.weight_type() != WeightType::C {
        return Err(WeightError::NotTypeC);
    }
    let basis = r_solution_space(s, t)?;
    let c1 = basis.iter().any(|v| !v[4].is_zero());
    let c2 = basis.iter().any(|v| !v[5].is_zero());
    Ok(c1 && c2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::WeightSampler;
    use crate::weights::{gamma, r_weights};

    #[test]
    fn lift_identity() {
        let sp = VarSpace::new(1);
        for slot in [Slot::S12, Slot::S13, Slot::S23] {
            assert_eq!(lift(&End2::identity(sp), slot), End3::identity(sp));
        }
    }

    #[test]
    fn lift_12_is_kronecker_with_identity() {
        let w = gamma(VarSpace::new(2), 2).unwrap().to_end2();
        let expected = w.matrix().kron(&PolyMatrix::identity(w.space(), 2));
        assert_eq!(lift(&w, Slot::S12).0, expected);
        let expected23 = PolyMatrix::identity(w.space(), 2).kron(w.matrix());
        assert_eq!(lift(&w, Slot::S23).0, expected23);
    }

    #[test]
    fn lift_13_is_swap_conjugate_of_12() {
        // φ_13 = P_23 φ_12 P_23
        let sp = VarSpace::new(2);
        let w = gamma(sp, 1).unwrap().to_end2();
        let p23 = lift(&End2::swap(sp), Slot::S23);
        assert_eq!(lift(&w, Slot::S13), &(&p23 * &lift(&w, Slot::S12)) * &p23);
    }

    #[test]
    fn disjoint_slots_commute() {
        // A ⊗ 1 ⊗ 1 against 1 ⊗ 1 ⊗ B, the latter lifted as (1 ⊗ B)_23.
        let sp = VarSpace::new(0);
        let mut w = WeightSampler::new(3, sp);
        let a = w.free_fermionic(WeightType::C).to_end2();
        let b = PolyMatrix::from_rows(
            sp,
            vec![vec![w.constant(), w.constant()], vec![w.constant(), w.constant()]],
        );
        let b3 = lift(&End2::new(PolyMatrix::identity(sp, 2).kron(&b)), Slot::S23);
        let a12 = lift(&a, Slot::S12);
        assert_eq!(&a12 * &b3, &b3 * &a12);
    }

    #[test]
    fn commutator_of_identities_vanishes() {
        let i = End2::identity(VarSpace::new(1));
        assert!(yb_commutator(&i, &i, &i).is_zero());
    }

    #[test]
    fn gamma_gamma_braiding() {
        let sp = VarSpace::new(2);
        let r = r_weights(IceKind::Gamma, IceKind::Gamma, sp, 1, 2).unwrap().to_end2();
        let c = yb_commutator(&r, &gamma(sp, 1).unwrap().to_end2(), &gamma(sp, 2).unwrap().to_end2());
        assert!(c.is_zero());
    }

    #[test]
    fn all_four_braidings_vanish() {
        for x in IceKind::ALL {
            for y in IceKind::ALL {
                let rep = check_braiding(x, y);
                assert!(rep.passed(), "{rep}");
            }
        }
    }

    #[test]
    fn star_triangle_sum_matches_lifts_on_random_weights() {
        let sp = VarSpace::new(0);
        let mut w = WeightSampler::new(11, sp);
        for _ in 0..10 {
            let r = w.six_vertex().to_end2();
            let s = w.free_fermionic(WeightType::D).to_end2();
            let t = w.six_vertex().to_end2();
            assert_eq!(star_triangle_matrix(&r, &s, &t), yb_commutator(&r, &s, &t));
        }
    }

    #[test]
    fn gamma_gamma_gamma_ybe() {
        for rep in check_parametrized_ybe(IceKind::Gamma, IceKind::Gamma, IceKind::Gamma) {
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn gamma_delta_gamma_both_forms() {
        let reps = check_parametrized_ybe(IceKind::Gamma, IceKind::Delta, IceKind::Gamma);
        assert_eq!(reps.len(), 2);
        assert!(reps.iter().all(CheckReport::passed));
    }

    #[test]
    fn zero_family_gives_zero_commutator() {
        let p = three_params();
        let g = RFamily::braid(IceKind::Gamma, IceKind::Gamma, false);
        assert!(family_commutator(&g, &RFamily::Zero, &g, &p).is_zero());
    }

    #[test]
    fn ddagger_is_an_involution() {
        let p = three_params();
        let f = RFamily::braid(IceKind::Delta, IceKind::Gamma, true);
        let dd = RFamily::Dagger(Box::new(RFamily::Dagger(Box::new(f.clone()))));
        assert_eq!(dd.at(&p[0], &p[1]), f.at(&p[0], &p[1]));
        assert_eq!(ddagger(&ddagger(&f)), f);
    }

    #[test]
    fn ddagger_matches_direct_conjugation() {
        let p = three_params();
        let sp = p[0].space();
        let f = RFamily::braid(IceKind::Gamma, IceKind::Gamma, false);
        let direct = {
            let r = r_weights(IceKind::Gamma, IceKind::Gamma, sp, 2, 1).unwrap().to_end2();
            let swap = End2::swap(sp);
            &(&swap * &r) * &swap
        };
        assert_eq!(ddagger(&f).at(&p[0], &p[1]), direct);
    }

    #[test]
    fn triangularity_gamma_gamma_scalar() {
        let tri = check_triangularity(IceKind::Gamma, IceKind::Gamma).unwrap();
        let sp = VarSpace::new(2);
        let (z1, z2, t1, t2) = (
            Polynomial::z(sp, 1),
            Polynomial::z(sp, 2),
            Polynomial::t(sp, 1),
            Polynomial::t(sp, 2),
        );
        // (z_2 t_1 + z_1)(z_1 t_2 + z_2)
        let expected = &(&(&z2 * &t1) + &z1) * &(&(&z1 * &t2) + &z2);
        assert_eq!(tri.scalar.num, expected);
    }

    #[test]
    fn triangularity_mixed_kinds_scalar() {
        for (x, y) in [(IceKind::Gamma, IceKind::Delta), (IceKind::Delta, IceKind::Gamma)] {
            assert!(check_triangularity(x, y).is_ok());
        }
    }

    #[test]
    fn yb_system_gamma_delta_plain() {
        for rep in check_yb_system(IceKind::Gamma, IceKind::Delta, false) {
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn solved_r_has_admissible_kernel() {
        let sp = VarSpace::new(0);
        let mut w = WeightSampler::new(5, sp);
        let (s, t) = w.delta_matched_pair();
        assert!(admissible_r_exists(&s, &t).unwrap());
        let r = weights::solve_r_from_st(&s, &t).unwrap();
        assert!(yb_commutator(&r.to_end2(), &s.to_end2(), &t.to_end2()).is_zero());
    }

    #[test]
    fn mismatched_pair_has_no_admissible_r() {
        let sp = VarSpace::new(0);
        let mut w = WeightSampler::new(6, sp);
        let (s, t) = w.delta_mismatched_pair();
        assert!(!admissible_r_exists(&s, &t).unwrap());
    }

    #[test]
    fn report_json_shape() {
        let rep = CheckReport::pass("x");
        assert_eq!(
            serde_json::to_string(&rep).unwrap(),
            r#"{"check":"x","status":"pass","witness":null}"#
        );
    }
}
