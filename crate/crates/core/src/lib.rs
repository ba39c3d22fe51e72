//! Exact intersection calculus for tautological classes on relative Hilbert
//! schemes of families of nodal curves.
//!
//! The crate has three layers:
//!
//! * combinatorial invariants: staircase polygons and their areas
//!   ([`staircase`]), block-size distributions and symmetrization counts
//!   ([`partition`]);
//! * the symbolic engine: base classes and geometric characters ([`base`]),
//!   normal-form tautological classes ([`taut`]), multiplication by the
//!   discriminant polarization and evaluation ([`gamma`]), transfer between
//!   Hilbert schemes and the enumerative endpoints ([`transfer`]), formal
//!   closed forms on the length-2 scheme ([`symbolic`]);
//! * an exact-polynomial verifier for the local model of the cycle map at a
//!   node ([`local_model`]).
//!
//! All arithmetic is exact over the rationals.

pub mod base;
pub mod gamma;
pub mod local_model;
pub mod partition;
pub mod staircase;
pub mod symbolic;
pub mod taut;
pub mod transfer;

pub use base::{Backend, BaseMonomial, CharExpr, Symbol};
pub use partition::{Distribution, MultiDistribution};
pub use staircase::{MonomialIdeal2D, SpecialPolygon};
pub use taut::{DiagonalTerm, NodeScrollTerm, TautClass, TautTerm};

/// Exact rational scalar used throughout the crate.
pub type Rat = num_rational::BigRational;

/// Convenience constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rat {
    use num_bigint::BigInt;
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Convenience constructor for integers as rationals.
pub fn int(num: i64) -> Rat {
    rat(num, 1)
}

/// Binomial coefficient `C(n, 2)` as i64, zero for `n < 2`.
pub fn choose2(n: i64) -> i64 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

/// Binomial coefficient with nonnegative entries, zero outside range.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}
