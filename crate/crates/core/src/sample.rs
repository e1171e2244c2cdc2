//! Seeded random numeric weights for randomized identity checks.
//!
//! All values are small Gaussian rationals so exact arithmetic stays cheap.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::{GaussianRational, Polynomial, VarSpace};
use crate::weights::{self, VertexWeights, WeightType};

pub struct WeightSampler {
    rng: ChaCha8Rng,
    space: VarSpace,
}

impl WeightSampler {
    pub fn new(seed: u64, space: VarSpace) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            space,
        }
    }

    /// A nonzero `(p + q·i)/d` with `|p|, |q| ≤ 4` and `1 ≤ d ≤ 3`.
    pub fn scalar(&mut self) -> GaussianRational {
        loop {
            let d = self.rng.gen_range(1..=3);
            let re = GaussianRational::from_ratio(self.rng.gen_range(-4..=4), d);
            let im = GaussianRational::from_ratio(self.rng.gen_range(-4..=4), d);
            let x = re + im * GaussianRational::i();
            if !x.is_zero() {
                return x;
            }
        }
    }

    pub fn constant(&mut self) -> Polynomial {
        let c = self.scalar();
        Polynomial::constant(self.space, c)
    }

    /// A free-fermionic system of the given type with `a1a2 + b1b2 ≠ 0`,
    /// i.e. an element of the group under composition.
    pub fn free_fermionic(&mut self, ty: WeightType) -> VertexWeights {
        loop {
            let [a1, a2, b1, b2, c1] = [(); 5].map(|_| self.scalar());
            let ab = &a1 * &a2 + &b1 * &b2;
            let Some(inv) = c1.inv() else { continue };
            if ab.is_zero() {
                continue;
            }
            let c2 = &ab * &inv;
            let p = |x: GaussianRational| Polynomial::constant(self.space, x);
            let w = match ty {
                WeightType::C => VertexWeights::type_c(p(a1), p(a2), p(b1), p(b2), p(c1), p(c2)),
                WeightType::D => VertexWeights::type_d(p(a1), p(a2), p(b1), p(b2), p(c1), p(c2)),
            };
            return w.expect("c1 and c2 are nonzero");
        }
    }

    /// A six-vertex system with all six weights nonzero; generically not
    /// free-fermionic.
    pub fn six_vertex(&mut self) -> VertexWeights {
        let [a1, a2, b1, b2, c1, c2] = [(); 6].map(|_| self.constant());
        VertexWeights::type_c(a1, a2, b1, b2, c1, c2).expect("nonzero c")
    }

    fn six_vertex_generic(&mut self) -> VertexWeights {
        loop {
            let w = self.six_vertex();
            if !w.free_fermion_residual().is_zero() {
                return w;
            }
        }
    }

    /// Six-vertex `S, T`, all weights nonzero, with `Δ₁(S) = Δ₁(T)` and
    /// `Δ₂(S) = Δ₂(T)`.
    ///
    /// `T` is built from `S`: choose `a1, b1, a2`, fix `b2` so that
    /// `a1b1 / a2b2` matches `S`, scale the shared numerator accordingly and
    /// split `c1c2` with a random `c1`.
    pub fn delta_matched_pair(&mut self) -> (VertexWeights, VertexWeights) {
        loop {
            let s = self.six_vertex_generic();
            let val = |p: &Polynomial| p.constant_value().expect("numeric weight");
            let (sa1, sa2, sb1, sb2) = (val(s.a1()), val(s.a2()), val(s.b1()), val(s.b2()));
            let n_s = val(&s.free_fermion_residual());
            let [a1, b1, a2, c1] = [(); 4].map(|_| self.scalar());
            let s_ab1_inv = (&sa1 * &sb1).inv().expect("nonzero");
            let b2 = &(&(&a1 * &b1) * &(&sa2 * &sb2)) * &(&s_ab1_inv * &a2.inv().expect("nonzero"));
            let n_t = &(&n_s * &(&a1 * &b1)) * &s_ab1_inv;
            let cc = &(&(&a1 * &a2) + &(&b1 * &b2)) - &n_t;
            let c2 = &cc * &c1.inv().expect("nonzero");
            if b2.is_zero() || c2.is_zero() {
                continue;
            }
            let p = |x: GaussianRational| Polynomial::constant(self.space, x);
            let t = VertexWeights::type_c(p(a1), p(a2), p(b1), p(b2), p(c1), p(c2)).expect("nonzero c");
            return (s, t);
        }
    }

    /// Six-vertex `S, T`, all weights nonzero, with `Δ₁(S) ≠ Δ₁(T)`.
    pub fn delta_mismatched_pair(&mut self) -> (VertexWeights, VertexWeights) {
        loop {
            let s = self.six_vertex();
            let t = self.six_vertex();
            let (s1, _) = weights::delta_invariants(&s).expect("nonzero weights");
            let (t1, _) = weights::delta_invariants(&t).expect("nonzero weights");
            if !s1.same_value(&t1) {
                return (s, t);
            }
        }
    }
}
