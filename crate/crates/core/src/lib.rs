//! Exact computation of Newton–Okounkov value sets of Schubert varieties.
//!
//! The crate builds everything from first principles with arbitrary-precision
//! rationals:
//!
//! * [`cartan`]: finite-type root data, weights, reduced words.
//! * [`rep`]: the irreducible module `V(λ)` with its Chevalley action and the
//!   Demazure submodules `V_w(λ)`.
//! * [`chart`]: sections of `L_λ` on a Schubert variety written as
//!   polynomials in the chart coordinates `t_1, …, t_r`.
//! * [`polyval`]: sparse polynomials, the four lexicographic term valuations,
//!   value sets and semigroup levels.
//! * [`crystal`]: the Littelmann path model for `B(λ)`, Demazure crystals and
//!   string parametrizations.
//! * [`polytope`]: exact convex hulls in V-representation.
//! * [`harness`]: the case runner that cross-checks all of the above and
//!   renders reports.
//!
//! Node indices of the Dynkin diagram are 1-based everywhere in the public
//! API (`1..=rank`), matching reduced-word notation such as `(1, 2, 1)`.

pub mod cartan;
pub mod chart;
pub mod crystal;
pub mod error;
pub mod harness;
pub mod linalg;
pub mod polytope;
pub mod polyval;
pub mod rep;

pub use cartan::{ReducedWord, RootSystem, Series, Weight};
pub use error::{Error, Result};
pub use linalg::Q;
pub use polyval::{Polynomial, ValuationKind, ValueTuple};
