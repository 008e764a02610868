//! Exact-arithmetic toolkit for the correspondence between rank-3 Jordan
//! algebras and quadro-quadric Cremona transformations.
//!
//! The crate provides, from the ground up:
//!
//! * sparse multivariate polynomials over arbitrary-precision rationals
//!   ([`poly`]) with Buchberger Groebner bases, elimination, ideal quotients,
//!   saturation and Hilbert series ([`groebner`]);
//! * finite-dimensional commutative algebras with Jordan-identity checking,
//!   rank computation, adjoints, radicals and Peirce decompositions
//!   ([`jordan`]);
//! * homogeneous rational self-maps of projective space with involution
//!   checking, base-scheme analysis and multidegree computation
//!   ([`cremona`]);
//! * the classical constructions that produce quadro-quadric involutions
//!   ([`constructions`]) and a verified catalog of the known classification
//!   in dimensions up to six ([`catalog`]).
//!
//! Everything is exact; no floating point is used anywhere.  Randomized
//! routines (generic hyperplane sections) take explicit seeds and are fully
//! reproducible.

pub mod catalog;
pub mod constructions;
pub mod cremona;
pub mod error;
pub mod groebner;
pub mod jordan;
pub mod linalg;
pub mod order;
pub mod poly;
pub mod rng;
pub mod scalar;

pub use error::{Error, Result};
pub use order::MonomialOrder;
pub use poly::{parse_poly, PolyJson, Polynomial, Vars};
pub use scalar::Rat;

/// Run independent closures, in parallel when the `parallel` feature is on.
pub(crate) fn maybe_par_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().map(f).collect()
    }
}
