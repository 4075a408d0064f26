//! Toric presentations, membership, and projections between toric ideals.

mod criterion;
mod falsifier;
mod zero_pattern;

pub use criterion::{
    radical_criterion, ConditionA, CriterionOptions, CriterionReport, Characteristic, Verdict,
    VariableCheck,
};
pub use falsifier::{finite_field_falsifier, FalsifierConfig, FieldWitness};
pub use zero_pattern::{zero_pattern_set, ZeroPattern};

use crate::error::{dim_err, Error, Result};
use crate::lattice::Lattice;
use crate::linalg::{kernel_basis, solve_right_factor, IntMat, RatMat};
use crate::poly::{MonomialMap, Poly};

/// A matrix together with its kernel lattice. The toric ideal it presents is
/// generated by the binomials of kernel vectors; its height is the kernel rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricPresentation {
    matrix: IntMat,
    kernel: Lattice,
    height: usize,
}

impl ToricPresentation {
    pub fn new(m: &IntMat) -> Result<Self> {
        if let Some(&j) = m.zero_columns().first() {
            return Err(Error::Input(format!("column {} of the presentation matrix is zero", j + 1)));
        }
        let kernel = kernel_basis(m);
        let height = kernel.rank();
        Ok(ToricPresentation { matrix: m.clone(), kernel, height })
    }

    pub fn matrix(&self) -> &IntMat {
        &self.matrix
    }

    pub fn kernel(&self) -> &Lattice {
        &self.kernel
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn nvars(&self) -> usize {
        self.matrix.cols()
    }

    /// Membership in the toric ideal: substitute `x_i ↦ t^{a_i}` and test for
    /// zero.
    pub fn contains_polynomial(&self, f: &Poly) -> Result<bool> {
        if f.nvars() != self.nvars() {
            return Err(dim_err(format!(
                "polynomial in {} variables against a presentation in {}",
                f.nvars(),
                self.nvars()
            )));
        }
        Ok(MonomialMap::laurent(&self.matrix).apply(f)?.is_zero())
    }
}

pub fn presentation(m: &IntMat) -> Result<ToricPresentation> {
    ToricPresentation::new(m)
}

/// Outcome of testing whether the toric ideal of `m` contains that of `n`.
/// The lattice test and the rational factorisation are computed
/// independently; they always agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionReport {
    pub sublattice_holds: bool,
    pub witness: Option<RatMat>,
}

impl ProjectionReport {
    pub fn holds(&self) -> bool {
        self.sublattice_holds && self.witness.is_some()
    }

    pub fn consistent(&self) -> bool {
        self.sublattice_holds == self.witness.is_some()
    }
}

pub fn is_projection(n: &IntMat, m: &IntMat) -> Result<ProjectionReport> {
    if n.cols() != m.cols() {
        return Err(dim_err(format!(
            "projection needs equal column counts, got {} and {}",
            n.cols(),
            m.cols()
        )));
    }
    let sublattice_holds = kernel_basis(n).is_sublattice(&kernel_basis(m))?;
    let witness = solve_right_factor(n, m)?;
    Ok(ProjectionReport { sublattice_holds, witness })
}

/// For a non-negative matrix whose columns include a positive multiple of
/// every unit vector (and no zero column), returns those columns, one per row.
/// Matrices of this shape parametrize their whole toric variety.
pub fn diagonal_block_columns(n: &IntMat) -> Option<Vec<usize>> {
    if !n.is_nonnegative() || !n.zero_columns().is_empty() {
        return None;
    }
    (0..n.rows())
        .map(|i| {
            (0..n.cols()).find(|&j| {
                (0..n.rows()).all(|k| if k == i { n.get(k, j) > &0.into() } else { n.get(k, j) == &0.into() })
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presentation_rejects_zero_column() {
        let m = IntMat::from_i64(&[&[1, 0, 2], &[3, 0, 1]]);
        assert!(matches!(presentation(&m), Err(Error::Input(_))));
    }

    #[test]
    fn identity_has_height_zero() {
        assert_eq!(presentation(&IntMat::identity(2)).unwrap().height(), 0);
    }

    #[test]
    fn membership_basics() {
        let pres = presentation(&IntMat::from_i64(&[&[4, 6, 7, 9]])).unwrap();
        assert!(pres.contains_polynomial(&Poly::zero(4)).unwrap());
        assert!(!pres.contains_polynomial(&Poly::var(4, 0)).unwrap());
        assert!(pres.contains_polynomial(&Poly::parse("x1 x4 - x2 x3", 4).unwrap()).unwrap());
        assert!(pres.contains_polynomial(&Poly::zero(3)).is_err());
    }

    #[test]
    fn projection_negative() {
        let r = is_projection(&IntMat::from_i64(&[&[2, 3]]), &IntMat::from_i64(&[&[1, 1]])).unwrap();
        assert!(!r.sublattice_holds && r.witness.is_none() && r.consistent());
    }

    #[test]
    fn diagonal_shape_detection() {
        let n = IntMat::from_i64(&[&[5, 1, 4, 0], &[0, 2, 3, 5]]);
        assert_eq!(diagonal_block_columns(&n), Some(vec![0, 3]));
        let bad = IntMat::from_i64(&[&[2, 1, 0], &[1, 2, 2]]);
        assert_eq!(diagonal_block_columns(&bad), None);
    }
}
