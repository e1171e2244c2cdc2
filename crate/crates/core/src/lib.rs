//! Exact computations for free-fermionic six- and eight-vertex models.
//!
//! Everything is symbolic over ℚ(i): weights are sparse polynomials in
//! `z_1..z_n, t_1..t_n`, and every identity is checked as an exact zero.
//!
//! Layout:
//! - [`poly`]: polynomial arithmetic;
//! - [`matrix`]: 4×4 / 8×8 polynomial matrices;
//! - [`weights`]: Boltzmann weight systems, π and the group law;
//! - [`yang_baxter`]: tensor lifts, commutators, Yang-Baxter systems;
//! - [`lattice`]: λ-boundary ice, Gelfand-Tsetlin patterns, partition functions;
//! - [`schur`]: Schur polynomials and deformed denominators;
//! - [`verify`]: check suites shared by the CLI and the acceptance tests.

pub mod lattice;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod sample;
pub mod schur;
pub mod verify;
pub mod weights;
pub mod yang_baxter;

pub use matrix::{End2, End3, PolyMatrix};
pub use poly::{GaussianRational, PolyError, PolyRatio, Polynomial, Var, VarSpace};
pub use weights::{IceKind, Spin, VertexWeights, WeightType};
