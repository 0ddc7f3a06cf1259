//! Exact-arithmetic computational algebra for charged Fock spaces.
//!
//! The crate provides, over exact rationals:
//! * partitions, multipartitions and the k-core / k-quotient abacus;
//! * the semi-infinite wedge (fermionic Fock) space with signed Clifford
//!   operators and their r-colored versions;
//! * truncated symmetric functions in five bases with the Hall inner
//!   product, Heisenberg operators and h/e operator families;
//! * the boson-fermion correspondence in both directions;
//! * the affine gl(r) action on colored wedge space by normal-ordered
//!   bilinears, with level measurement and level-k restriction;
//! * torus fixed-point combinatorics: tangent characters, equivariant
//!   Euler classes, sign relations and localized inner products.
//!
//! Every algebraic relation carried by these objects is executable; the
//! [`verify`] module runs the identity sweeps and reports pass/fail.

pub mod affine;
pub mod boson_fermion;
pub mod fermion;
pub mod fock;
pub mod geometry;
pub mod partition;
pub mod symfunc;
pub mod verify;

/// Exact rational scalar used throughout.
pub type Rat = num_rational::BigRational;

/// Convenience constructor for integer rationals.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Convenience constructor for fractions.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}
