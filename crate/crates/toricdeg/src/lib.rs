//! Exact-arithmetic toolkit for Gröbner degenerations of toric ideals.
//!
//! Given a generator matrix `A ⊂ Z^d` and a weight vector `w`, the degenerated
//! ideal `(I_A)_t` is again toric, defined by the enlarged configuration
//! `A_w = {(a_1,w_1),…,(a_n,w_n),(0,…,0,1)} ⊂ Z^{d+1}`.  The crate computes
//! toric ideals, reduced Gröbner bases of binomial ideals, the degeneration
//! map `g ↦ g_t`, and invariants of the semigroups on both sides: saturation,
//! approximation certificates, Betti elements, unique-presentation tests and
//! Möbius functions.
//!
//! All arithmetic is arbitrary precision (`num-bigint` / `num-rational`);
//! no operation ever goes through floating point.

pub mod binomial;
pub mod error;
pub mod invariants;
pub mod lattice;
pub mod moebius;
pub mod toric;

pub use error::Error;
pub use lattice::{GeneratorMatrix, Int, IntVec, Rat};
