//! Exact computations with toric ideals: integer lattices, binomials and
//! monomial maps, projections between toric ideals, a radical-generation
//! criterion, and set-theoretic complete intersection certificates.
//!
//! All arithmetic is exact over arbitrary-precision integers and rationals.

pub mod error;
pub mod json;
pub mod lattice;
pub mod linalg;
pub mod poly;
pub mod presets;
pub mod stci;
pub mod toric;

pub use error::{Error, Result};
pub use lattice::{image_lattice, p_saturation_index, Lattice};
pub use linalg::{det, gcd_maximal_minors, hnf, kernel_basis, smith_invariants, solve_right_factor, ExponentVector, IntMat, RatMat};
pub use poly::{a_degree_check, apply_map, binomial_from_vector, Binomial, MonomialMap, Poly};
pub use stci::{compute_w, verify_certificate, StciCertificate};
pub use toric::{is_projection, presentation, radical_criterion, CriterionReport, Verdict};
