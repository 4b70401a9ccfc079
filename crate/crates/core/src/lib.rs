//! Exact algebra for finite group extensions of shifts of finite type.
//!
//! A `G`-extension of an edge shift is presented by a square matrix over the
//! positive cone of the integral group ring `ZG`. This crate provides the
//! arithmetic (`ZG`, `ZG[t]`, matrices over both), the periodic-data
//! invariants (trace series, conjugacy-class trace series, `det(I - tA)`),
//! the primitivity theory, and replayable certificates for positive
//! equivalence, strong shift equivalence and shift equivalence.
//!
//! Everything that decides a yes/no question is exact. Floating point only
//! appears in the Perron eigendata diagnostics.

pub mod certificate;
pub mod constructions;
pub mod equivalence;
pub mod error;
pub mod groupring;
pub mod groups;
pub mod intlinalg;
pub mod invariants;
pub mod matrix;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod polymat;
pub mod ring;

pub use error::{Error, Result};
pub use groupring::{ConjElem, GRElem};
pub use groups::{FiniteGroup, GroupRef, GroupSpec};
pub use matrix::{IntMatrix, MatGR, MatGRPoly, Matrix};
pub use poly::{GRPoly, IntPoly};
pub use ring::Ring;
