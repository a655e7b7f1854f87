//! Exact arithmetic around the algebraic numbers `rho(n) = 2cos(pi/n)`.
//!
//! The crate constructs the minimal polynomials `C(n, x)` of `rho(n)` over
//! the rationals by two independent routes, performs exact arithmetic in the
//! number fields `Q(rho(n))`, expands regular n-gon diagonal/side ratios in
//! those fields, and analyses the multiplicative "Modd n" groups that realise
//! the Galois groups `Gal(Q(rho(n))/Q)`.
//!
//! Everything is computed over arbitrary-precision integers and rationals;
//! no floating point enters any result (a few diagnostics compare against
//! `f64` cosines, nothing more).

pub mod chebyshev;
pub mod dsr;
pub mod minpoly;
pub mod modd;
pub mod numthy;
pub mod polycore;

pub use minpoly::{FieldElement, MinimalPoly, ZeroTable};
pub use modd::{AbelianType, CycleStructure, ModdContext};
pub use polycore::{IntPoly, RatPoly};
