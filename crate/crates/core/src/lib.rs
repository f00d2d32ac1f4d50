//! Exact arithmetic for Shimura-Belyi covers of triangle-group curves.
//!
//! The library computes, over the rationals with no floating point in any
//! result path, the degree-28 Belyi function on the genus-1 curve lying over
//! the (2,3,7) triangle curve: a mod-29 seed solve, 29-adic Newton lifting,
//! rational reconstruction, and exact verification.  On top of the cover it
//! derives CM points (rational and over the cubic field Q(2cos 2pi/7)),
//! isogeny evidence from Frobenius traces, the analogous degree-9 cover for
//! the (2,3,9) group, and hyperbolic areas via Dirichlet L-values.
//!
//! Modules mirror the pipeline stages:
//! - [`algebra`]: big rationals, residue rings Z/p^k, small finite fields,
//!   the cubic field Q(c), the cyclotomic ring Z[zeta_3], univariate
//!   polynomials with factorization, and rational reconstruction.
//! - [`curve`]: Weierstrass models, the group law, model transformations,
//!   global minimal models, point counts mod p.
//! - [`coordring`]: elements u(x) + v(x)y of the coordinate ring, pole-order
//!   degrees, the differential-quotient derivation.
//! - [`cover`]: ramification profiles, monodromy triples in PSL2, the mod-29
//!   ansatz, Newton lifting, reconstruction, verification, and the degree-9
//!   cover.
//! - [`cmpoints`]: Atkin-Lehner involutions, fixed loci, CM t-values and
//!   fields, a_p isogeny evidence.
//! - [`zeta`]: generalized Bernoulli numbers and Shimizu areas.

pub mod algebra;
pub mod cmpoints;
pub mod cover;


pub mod coordring;

pub mod curve;
pub mod data;


mod error;

pub use error::{Error, Result};
