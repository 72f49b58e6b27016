//! Castelnuovo-Mumford regularity of graded ideals.
//!
//! The crate is organised bottom-up:
//!
//! * [`ring`]: exact fields, monomial orders, sparse polynomials, division.
//! * [`groebner`]: Buchberger's algorithm and ideal membership.
//! * [`idealops`]: sums, intersections, colons, saturations, elimination.
//! * [`hilbert`]: Hilbert series, dimension, degree, finite lengths.
//! * [`resolution`]: Schreyer resolutions, minimisation, Betti tables,
//!   regularity and the `a_0` invariant.
//! * [`families`]: the monomial-curve families and the almost complete
//!   intersections built from them.
//! * [`sections`]: general hyperplane sections and the regularity bounds
//!   expressed through them.
//! * [`verify`]: claim-by-claim reports, the ideal file format and the
//!   command-line front end.

pub mod error;
pub mod families;
pub mod groebner;
pub mod hilbert;
pub mod idealops;
pub mod linalg;
pub mod resolution;
pub mod ring;
pub mod sections;
pub mod verify;

pub use error::{Error, Result};
pub use groebner::{buchberger, member, GroebnerBasis, Ideal};
pub use ring::{
    Field, Monomial, MonomialOrder, PolyRing, Polynomial, PrimeField, Rationals, RingRef,
};
