//! Exact combinatorics of finite crystallographic Coxeter groups: parabolic
//! coset posets, reflection-arrangement intersection lattices, positive
//! chamber complexes, and Burnside-ring valued characters.

pub mod bitset;
pub mod burnside;
pub mod chambers;
pub mod coxgroup;
pub mod cosetposet;
pub mod error;
pub mod flats;
pub mod linalg;
pub mod typea;

/// Exact rationals with arbitrary precision.
pub type Rational = num_rational::BigRational;

pub use bitset::{GenSet, ReflSet};
pub use burnside::{BurnsideElement, BurnsideRing, ClassFunction};
pub use chambers::{choose_rho, Face, GenericVector, PositiveComplex, Rays, RhoMode, Shelling, Side};
pub use cosetposet::{Coset, CosetPoset};
pub use coxgroup::{Element, Family, Group, GroupSymbol, Parabolic};
pub use error::{Error, Result};
pub use flats::{Flat, IntersectionLattice, OrbitLabel};
