//! Combinatorics of foldable commutation classes of type A_{2n+1}.
//!
//! The crate builds twisted and folded Auslander-Reiten quivers from
//! commutation classes of reduced words of the longest element, equips
//! them with coordinates, studies the convex orders they induce and
//! compares the resulting distance polynomials with the denominator
//! formulas of `U_q'(A^{(1)}_{2n})` and `U_q'(B^{(1)}_{n+1})`.

pub mod arquiver;
pub mod dorey;
pub mod error;
pub mod exceptional;
pub mod folded;
pub mod order;
pub mod poly;
pub mod roots;
pub mod twist;
pub mod words;

pub use error::{Error, Result};
