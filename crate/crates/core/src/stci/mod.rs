//! Set-theoretic complete intersection certificates.
//!
//! A certificate lifts a base toric ideal `I_N` (assumed cut out by its
//! `base_gens`) to a projection `I_M` by adding `s = ht(I_M) − ht(I_N)`
//! polynomials `f` with `φ(f) = F^d` for a binomial `F` generating the image
//! lattice ideal. Every claim is re-checked by [`verify_certificate`].

mod families;
mod verify;

pub use families::{
    build_family, four_six_certificate, quintic_certificate, scroll_certificate, split_two_three, Family,
    FamilyOutcome,
};
pub use verify::{verify_certificate, CheckResult, Transcript};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{dim_err, Error, Result};
use crate::linalg::{gcd_maximal_minors, ExponentVector, IntMat};
use crate::poly::{Binomial, Poly};
use crate::toric::diagonal_block_columns;

/// Claims `binomial^power = φ(deltas[delta])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerIdentity {
    pub binomial: Binomial,
    pub power: u32,
    pub delta: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StciCertificate {
    pub label: String,
    pub base: IntMat,
    pub target: IntMat,
    pub base_gens: Vec<Poly>,
    pub deltas: Vec<Poly>,
    pub identities: Vec<PowerIdentity>,
    pub s: usize,
    /// Primitive generator of the rank-one kernel of the right factor, when
    /// the construction provides one.
    pub lattice_generator: Option<ExponentVector>,
    pub w: Option<BigInt>,
    pub transcript: Option<Transcript>,
}

impl StciCertificate {
    /// The certificate with its transcript filled in.
    pub fn verified(mut self) -> Self {
        self.transcript = Some(verify_certificate(&self));
        self
    }
}

/// `w = |N| / |(N aᵀ)|`, where `|·|` is the gcd of maximal minors. The image
/// of the target kernel is then `<w·a>`.
pub fn compute_w(n: &IntMat, a: &ExponentVector) -> Result<BigInt> {
    if diagonal_block_columns(n).is_none() {
        return Err(Error::Input(
            "base matrix must be non-negative with a positive diagonal block and no zero column".into(),
        ));
    }
    if a.len() != n.rows() {
        return Err(dim_err(format!("vector of length {} for a matrix with {} rows", a.len(), n.rows())));
    }
    if a.is_zero() {
        return Err(Error::Input("lattice generator must be nonzero".into()));
    }
    let full = gcd_maximal_minors(n)?;
    let augmented = gcd_maximal_minors(&n.augment_column(&a.0)?)?;
    debug_assert!(!augmented.is_zero(), "diagonal block has full rank");
    let (w, rem) = full.div_rem(&augmented);
    debug_assert!(rem.is_zero(), "augmented minors include the original ones");
    Ok(w)
}
