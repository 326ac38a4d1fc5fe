//! Exact computations on finitely presented binoids and their monomial algebras.
//!
//! A binoid is a commutative monoid with an absorbing element `∞`. This crate
//! computes
//!
//! * the Zariski spectrum of a presentation as a finite poset ([`spectrum`]),
//! * simplicial cohomology with integer or symbolic coefficients ([`simplicial`]),
//! * Čech–Picard complexes and local Picard groups of simplicial and of
//!   general integral binoids ([`cech`]),
//! * Weil divisor class groups via cone facets and valuations ([`divisors`]).
//!
//! All arithmetic is exact and uses arbitrary-precision integers. The crate is
//! `no_std` and only needs `alloc`; parsing, serialization and the command line
//! front end live in the companion `binoid-tools` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod binoid;
pub mod cech;
pub mod divisors;
mod error;
pub mod exactalg;
pub mod simplicial;
pub mod spectrum;

pub use binoid::{BinoidPresentation, DifferenceGroup, Relation, RelationRhs};
pub use error::{Error, Result};
pub use exactalg::{FinAbGroup, GroupExpr, IntMatrix, SmithDecomposition};
pub use simplicial::{Face, Graded, SimplicialComplex};
pub use spectrum::{GenSet, PrimeIdeal, SpecPoset};
