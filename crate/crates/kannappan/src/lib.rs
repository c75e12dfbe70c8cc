//! Desk-scale workbench for the functional equation
//!
//! ```text
//! f(xyz) + f(x) + f(y) + f(z) = f(xy) + f(xz) + f(yz)
//! ```
//!
//! on semigroups, with real values.  The crate provides:
//!
//! - carriers: free words, integer lattices ℤ^k, cyclic groups ℤ/m, the
//!   Klein four-group, wreath products S ≀ C, zero-adjoined semigroups, and
//!   direct products ([`algebra`]);
//! - real-valued functions on them with exact rational evaluation wherever
//!   possible ([`realfn`]), and the defect operators measuring how far a
//!   function is from solving the equation ([`defect`]);
//! - dyadic limit extraction f̂ = lim f(x^(2ⁿ))/4ⁿ and f̃ = lim f(x^(2ⁿ))/2ⁿ
//!   with convergence certificates, and the three-way decomposition of any
//!   bounded-defect function into quartic-homogeneous + linear-homogeneous +
//!   bounded parts ([`limits`]);
//! - the a²b² occurrence counter on the rank-two free semigroup, its exact
//!   doubling recurrence, and the witness showing the equation is not
//!   stable there ([`eta`]);
//! - closed-form solving on ℤ^k: probe-point fitting of f(v) = vᵀMv + a·v
//!   and noisy recovery with certified deviation bounds ([`abelian`]);
//! - a batch CLI and a machine-checkable verification suite ([`cli`],
//!   [`verify`]).
//!
//! Every sweep is seeded and every report is deterministic; exact and
//! floating-point arithmetic are kept apart by [`value::Value`].

pub mod abelian;
pub mod algebra;
pub mod cli;
pub mod defect;
pub mod error;
pub mod eta;
pub mod limits;
pub mod realfn;
pub mod report;
pub mod value;
pub mod verify;

pub use algebra::{Carrier, Element};
pub use error::{Error, Result};
pub use realfn::RealFn;
pub use value::Value;
