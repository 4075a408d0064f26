//! Subgroups of Zᵏ held in canonical Hermite form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{dim_err, Error, Result};
use crate::linalg::{hnf, kernel_basis, smith_invariants, ExponentVector, IntMat};

/// A lattice in Zᵏ. The basis is always the row Hermite normal form of any
/// generating set, so two lattices are equal exactly when their bases are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    ambient: usize,
    basis: IntMat,
}

impl Lattice {
    pub fn zero(ambient: usize) -> Self {
        Lattice { ambient, basis: IntMat::zeros(0, ambient) }
    }

    pub fn full(ambient: usize) -> Self {
        Lattice { ambient, basis: IntMat::identity(ambient) }
    }

    pub fn from_generators<I, V>(ambient: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        V: Into<Vec<BigInt>>,
    {
        let rows: Vec<Vec<BigInt>> = gens.into_iter().map(Into::into).collect();
        let m = IntMat::from_rows(ambient, rows)?;
        Ok(Self::from_matrix_rows(&m))
    }

    /// Convenience for literal generators in tests and presets.
    pub fn from_i64(ambient: usize, gens: &[&[i64]]) -> Result<Self> {
        Self::from_generators(
            ambient,
            gens.iter().map(|g| g.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>()),
        )
    }

    pub fn from_matrix_rows(m: &IntMat) -> Self {
        Lattice { ambient: m.cols(), basis: hnf(m) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &IntMat {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<ExponentVector> {
        self.basis.row_vectors().into_iter().map(ExponentVector).collect()
    }

    /// Integer coordinates of `v` in the canonical basis, if `v` lies in the
    /// lattice. Exact triangular solve against the echelon basis.
    pub fn coordinates(&self, v: impl AsRef<[BigInt]>) -> Result<Option<Vec<BigInt>>> {
        let v = v.as_ref();
        if v.len() != self.ambient {
            return Err(dim_err(format!(
                "vector of length {} in a lattice of ambient dimension {}",
                v.len(),
                self.ambient
            )));
        }
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        let mut cleared = 0;
        for i in 0..self.rank() {
            let row = self.basis.row(i);
            let pc = row.iter().position(|x| !x.is_zero()).expect("basis rows are nonzero");
            if rest[cleared..pc].iter().any(|x| !x.is_zero()) {
                return Ok(None);
            }
            let (q, r) = rest[pc].div_rem(&row[pc]);
            if !r.is_zero() {
                return Ok(None);
            }
            for (x, b) in rest.iter_mut().zip(row) {
                *x -= &q * b;
            }
            coords.push(q);
            cleared = pc + 1;
        }
        Ok(rest.iter().all(Zero::is_zero).then_some(coords))
    }

    pub fn contains(&self, v: impl AsRef<[BigInt]>) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    /// `self ⊆ other`.
    pub fn is_sublattice(&self, other: &Lattice) -> Result<bool> {
        if self.ambient != other.ambient {
            return Err(dim_err(format!(
                "lattices live in Z^{} and Z^{}",
                self.ambient, other.ambient
            )));
        }
        for i in 0..self.rank() {
            if !other.contains(self.basis.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn intersect(&self, other: &Lattice) -> Result<Lattice> {
        if self.ambient != other.ambient {
            return Err(dim_err(format!(
                "lattices live in Z^{} and Z^{}",
                self.ambient, other.ambient
            )));
        }
        // (x, y) with x·A = y·B gives x·A in the intersection.
        let (ra, rb) = (self.rank(), other.rank());
        let rows: Vec<Vec<BigInt>> = (0..self.ambient)
            .map(|c| {
                let mut row: Vec<BigInt> = (0..ra).map(|i| self.basis.get(i, c).clone()).collect();
                row.extend((0..rb).map(|i| -other.basis.get(i, c)));
                row
            })
            .collect();
        let rel = kernel_basis(&IntMat::from_rows(ra + rb, rows)?);
        let gens = rel
            .basis_vectors()
            .into_iter()
            .map(|r| {
                (0..self.ambient)
                    .map(|c| (0..ra).map(|i| &r.0[i] * self.basis.get(i, c)).sum::<BigInt>())
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>();
        Lattice::from_generators(self.ambient, gens)
    }

    pub fn scaled(&self, k: &BigInt) -> Lattice {
        let rows = self
            .basis
            .row_vectors()
            .into_iter()
            .map(|r| r.into_iter().map(|x| x * k).collect())
            .collect();
        Lattice::from_matrix_rows(&IntMat::from_rows(self.ambient, rows).expect("same shape"))
    }
}

/// The lattice `{n·uᵀ : u ∈ ker_Z(m)}`, generated by the images of a kernel
/// basis.
pub fn image_lattice(n: &IntMat, m: &IntMat) -> Result<Lattice> {
    if n.cols() != m.cols() {
        return Err(dim_err(format!(
            "image lattice needs equal column counts, got {} and {}",
            n.cols(),
            m.cols()
        )));
    }
    let kernel = kernel_basis(m);
    let gens = kernel
        .basis_vectors()
        .iter()
        .map(|u| n.mul_vec(&u.0))
        .collect::<Result<Vec<_>>>()?;
    Lattice::from_generators(n.rows(), gens)
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Least `k` with `pᵏ·l ⊆ g`, or `None` when no power of `p` suffices.
///
/// Requires `g ⊆ l`. Decided through the Smith invariants of the coordinate
/// matrix of `g` relative to `l`: the answer exists iff every invariant is a
/// power of `p`, and then `k` is the largest exponent.
pub fn p_saturation_index(l: &Lattice, g: &Lattice, p: u64) -> Result<Option<u32>> {
    if !is_prime(p) {
        return Err(Error::Input(format!("{p} is not prime")));
    }
    if !g.is_sublattice(l)? {
        return Err(Error::Precondition(
            "p-saturation index needs the second lattice inside the first".into(),
        ));
    }
    if g.rank() < l.rank() {
        return Ok(None);
    }
    let coords = g
        .basis_vectors()
        .iter()
        .map(|v| l.coordinates(v).map(|c| c.expect("g is inside l")))
        .collect::<Result<Vec<_>>>()?;
    let c = IntMat::from_rows(l.rank(), coords)?;
    let p = BigInt::from(p);
    let mut k = 0u32;
    for mut d in smith_invariants(&c) {
        let mut e = 0u32;
        while d.is_multiple_of(&p) {
            d /= &p;
            e += 1;
        }
        if !d.is_one() {
            return Ok(None);
        }
        k = k.max(e);
    }
    Ok(Some(k))
}
