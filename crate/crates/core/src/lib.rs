//! Exact arithmetic for the Dedekind tessellation viewed as a system of circles.
//!
//! Circles and lines of the plane are encoded as integer or rational vectors of
//! Minkowski space (`minkowski`). Circles centred on the real axis reduce to
//! integer triples acted on by the modular group (`modular`). The crate
//! generates the whole system directly from a divisibility criterion
//! (`enumeration`), certifies membership by a Euclid-style reduction
//! (`membership`), carries the system to the Poincaré disk (`disk`), produces
//! the Fibonacci and related circle series (`patterns`), and renders SVG and
//! CSV/JSON data products (`render`, `formats`).

pub mod disk;
pub mod enumeration;
mod error;
pub mod formats;
pub mod membership;
pub mod minkowski;
pub mod modular;
pub mod patterns;
pub mod rational;
pub mod render;

pub use disk::{enumerate_disk, phi, phi_inv, pq_solutions, DiskSymbol};
pub use enumeration::{
    enumerate_halfplane, is_admissible, numerators, solutions_knm, AdmissibleCircle,
    HalfPlaneItem, KnmTriple, NumeratorSet, VerticalLine,
};
pub use error::{Error, Result};
pub use membership::{is_member, orbit_bfs, reduce_to_base, ReductionCertificate};
pub use minkowski::{circle_from_symbol, symbol_from_circle, CircleSymbol4, EuclideanShape, Lorentz4, Orientation};
pub use modular::{DedekindSymbol, Letter, MobiusMatrix, ProjectivePoint, Word};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use patterns::{Branch, Fraction, Series};
pub use render::{Model, RenderConfig, Viewport};
