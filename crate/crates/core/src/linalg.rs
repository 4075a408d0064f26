//! Exact integer and rational linear algebra.
//!
//! Everything here works over arbitrary-precision integers. Normal forms are
//! row-style: a matrix is read as a list of generators of its row lattice.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{dim_err, Error, Result};
use crate::lattice::Lattice;

/// An integer vector, used for exponents, kernel elements and lattice points.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(pub Vec<BigInt>);

impl ExponentVector {
    pub fn zeros(len: usize) -> Self {
        ExponentVector(vec![BigInt::zero(); len])
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        ExponentVector(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// Sum of the coordinates.
    pub fn total(&self) -> BigInt {
        self.0.iter().sum()
    }

    /// The unique split `self = plus - minus` into non-negative vectors with
    /// disjoint support.
    pub fn split(&self) -> (ExponentVector, ExponentVector) {
        let plus = self
            .0
            .iter()
            .map(|c| if c.is_positive() { c.clone() } else { BigInt::zero() })
            .collect();
        let minus = self
            .0
            .iter()
            .map(|c| if c.is_negative() { -c } else { BigInt::zero() })
            .collect();
        (ExponentVector(plus), ExponentVector(minus))
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        assert_eq!(self.len(), other.len(), "exponent vector length mismatch");
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &ExponentVector) -> ExponentVector {
        assert_eq!(self.len(), other.len(), "exponent vector length mismatch");
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &BigInt) -> ExponentVector {
        ExponentVector(self.0.iter().map(|c| c * k).collect())
    }

    pub fn neg(&self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|c| -c).collect())
    }
}

impl AsRef<[BigInt]> for ExponentVector {
    fn as_ref(&self) -> &[BigInt] {
        &self.0
    }
}

impl From<Vec<BigInt>> for ExponentVector {
    fn from(v: Vec<BigInt>) -> Self {
        ExponentVector(v)
    }
}

impl From<ExponentVector> for Vec<BigInt> {
    fn from(v: ExponentVector) -> Self {
        v.0
    }
}

impl FromIterator<BigInt> for ExponentVector {
    fn from_iter<I: IntoIterator<Item = BigInt>>(iter: I) -> Self {
        ExponentVector(iter.into_iter().collect())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMat {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(dim_err(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(IntMat { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from equal-length rows. `cols` is needed for the
    /// zero-row case.
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(dim_err(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            entries.extend(row);
        }
        Ok(IntMat { rows: nrows, cols, entries })
    }

    /// Convenience constructor for small literal matrices. Panics on an empty
    /// or ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        assert!(!rows.is_empty(), "use IntMat::zeros for matrices without rows");
        let cols = rows[0].len();
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::from_rows(cols, rows).expect("ragged literal matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> ExponentVector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<ExponentVector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn transpose(&self) -> IntMat {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        IntMat { rows: self.cols, cols: self.rows, entries }
    }

    pub fn mul(&self, other: &IntMat) -> Result<IntMat> {
        if self.cols != other.rows {
            return Err(dim_err(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                entries.push(acc);
            }
        }
        Ok(IntMat { rows: self.rows, cols: other.cols, entries })
    }

    /// `self · vᵀ`.
    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(dim_err(format!(
                "vector of length {} against a matrix with {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|x| !x.is_negative())
    }

    pub fn zero_columns(&self) -> Vec<usize> {
        (0..self.cols)
            .filter(|&j| (0..self.rows).all(|i| self.get(i, j).is_zero()))
            .collect()
    }

    /// The matrix with `v` appended as an extra column.
    pub fn augment_column(&self, v: &[BigInt]) -> Result<IntMat> {
        if v.len() != self.rows {
            return Err(dim_err(format!(
                "column of length {} against a matrix with {} rows",
                v.len(),
                self.rows
            )));
        }
        let rows = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(v[i].clone());
                r
            })
            .collect();
        IntMat::from_rows(self.cols + 1, rows)
    }

    pub fn rank(&self) -> usize {
        hnf(self).rows()
    }
}

impl fmt::Display for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[{}]", self.row(i).iter().join(", "))?;
        }
        write!(f, "]")
    }
}

/// Dense matrix of rationals in lowest terms (positive denominators).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RatMat {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigRational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(dim_err(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        // BigRational keeps itself reduced with a positive denominator.
        Ok(RatMat { rows, cols, entries })
    }

    pub fn from_int(m: &IntMat) -> Self {
        RatMat {
            rows: m.rows,
            cols: m.cols,
            entries: m.entries.iter().map(|x| BigRational::from_integer(x.clone())).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    /// `self · m` computed exactly.
    pub fn mul_int(&self, m: &IntMat) -> Result<RatMat> {
        if self.cols != m.rows() {
            return Err(dim_err(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows,
                self.cols,
                m.rows(),
                m.cols()
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * m.cols());
        for i in 0..self.rows {
            for j in 0..m.cols() {
                let mut acc = BigRational::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * BigRational::from_integer(m.get(k, j).clone());
                }
                entries.push(acc);
            }
        }
        Ok(RatMat { rows: self.rows, cols: m.cols(), entries })
    }

    /// True when every entry is an integer equal to the matching entry of `m`.
    pub fn equals_int(&self, m: &IntMat) -> bool {
        self.rows == m.rows()
            && self.cols == m.cols()
            && self
                .entries
                .iter()
                .zip(m.entries())
                .all(|(r, x)| r.is_integer() && r.numer() == x)
    }

    /// Each row multiplied by the lcm of its denominators. The row space over
    /// the rationals, and hence the integer kernel, is unchanged.
    pub fn clear_denominators(&self) -> IntMat {
        let mut entries = Vec::with_capacity(self.entries.len());
        for i in 0..self.rows {
            let row = &self.entries[i * self.cols..(i + 1) * self.cols];
            let lcm = row.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
            entries.extend(row.iter().map(|r| r.numer() * (&lcm / r.denom())));
        }
        IntMat { rows: self.rows, cols: self.cols, entries }
    }
}

impl fmt::Display for RatMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            let row = &self.entries[i * self.cols..(i + 1) * self.cols];
            write!(f, "[{}]", row.iter().join(", "))?;
        }
        write!(f, "]")
    }
}

fn row_sub_mul(target: &mut [BigInt], source: &[BigInt], q: &BigInt) {
    for (t, s) in target.iter_mut().zip(source) {
        *t -= q * s;
    }
}

/// Row-style Hermite normal form of the row lattice of `m`: zero rows removed,
/// positive pivots, entries above each pivot reduced into `[0, pivot)`.
pub fn hnf(m: &IntMat) -> IntMat {
    let cols = m.cols();
    let mut a = m.row_vectors();
    let nrows = a.len();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        // Euclid on the column until only row r is nonzero below the pivot line.
        loop {
            let pivot = (r..nrows)
                .filter(|&i| !a[i][c].is_zero())
                .min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()));
            let Some(p) = pivot else { break };
            a.swap(r, p);
            let mut done = true;
            for i in r + 1..nrows {
                if a[i][c].is_zero() {
                    continue;
                }
                let q = a[i][c].div_floor(&a[r][c]);
                let (head, tail) = a.split_at_mut(i);
                row_sub_mul(&mut tail[0], &head[r], &q);
                if !a[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r >= nrows || a[r][c].is_zero() {
            continue;
        }
        if a[r][c].is_negative() {
            for x in a[r].iter_mut() {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let q = a[i][c].div_floor(&a[r][c]);
            if !q.is_zero() {
                let (head, tail) = a.split_at_mut(r);
                row_sub_mul(&mut head[i], &tail[0], &q);
            }
        }
        r += 1;
    }
    a.truncate(r);
    debug_assert!(a.iter().all(|row| row.iter().any(|x| !x.is_zero())));
    IntMat::from_rows(cols, a).expect("hnf keeps the column count")
}

/// Basis of `{u ∈ Zᶜᵒˡˢ : m·uᵀ = 0}`, canonicalised as a lattice.
pub fn kernel_basis(m: &IntMat) -> Lattice {
    let (r, n) = (m.rows(), m.cols());
    // Rows (column j of m | e_j); echelon rows with a vanishing left block
    // span exactly the kernel.
    let rows = (0..n)
        .map(|j| {
            let mut row: Vec<BigInt> = (0..r).map(|i| m.get(i, j).clone()).collect();
            row.extend((0..n).map(|k| if k == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let h = hnf(&IntMat::from_rows(r + n, rows).expect("augmented kernel matrix"));
    let gens = (0..h.rows())
        .filter(|&i| h.row(i)[..r].iter().all(Zero::is_zero))
        .map(|i| h.row(i)[r..].to_vec());
    Lattice::from_generators(n, gens).expect("kernel generators have the right length")
}

/// Fraction-free row echelon form (Bareiss). Returns the pivot columns; the
/// matrix is overwritten with its echelon form. Only the first `search_cols`
/// columns are used for pivoting.
fn bareiss_echelon(a: &mut [Vec<BigInt>], search_cols: usize) -> Vec<usize> {
    let nrows = a.len();
    let total = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..search_cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..nrows {
            for j in c + 1..total {
                let num = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                a[i][j] = q;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Determinant of a square matrix by fraction-free elimination.
pub fn det(m: &IntMat) -> Result<BigInt> {
    if m.rows() != m.cols() {
        return Err(dim_err(format!("determinant of a {}x{} matrix", m.rows(), m.cols())));
    }
    Ok(det_rows(m.row_vectors()))
}

fn det_rows(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Solves `D·n = m` over the rationals. Returns `None` when no rational `D`
/// exists.
pub fn solve_right_factor(n: &IntMat, m: &IntMat) -> Result<Option<RatMat>> {
    if n.cols() != m.cols() {
        return Err(dim_err(format!(
            "right factor needs equal column counts, got {} and {}",
            n.cols(),
            m.cols()
        )));
    }
    let l = n.rows();
    let k = m.rows();
    // nᵀ X = mᵀ with X = Dᵀ; augmented rows are indexed by the shared columns.
    let mut aug: Vec<Vec<BigInt>> = (0..n.cols())
        .map(|j| {
            let mut row: Vec<BigInt> = (0..l).map(|i| n.get(i, j).clone()).collect();
            row.extend((0..k).map(|i| m.get(i, j).clone()));
            row
        })
        .collect();
    let pivots = bareiss_echelon(&mut aug, l);
    let rank = pivots.len();
    if aug[rank..].iter().any(|row| row[l..].iter().any(|x| !x.is_zero())) {
        return Ok(None);
    }
    let mut x = vec![vec![BigRational::zero(); k]; l];
    for (r, &pc) in pivots.iter().enumerate().rev() {
        let piv = BigRational::from_integer(aug[r][pc].clone());
        for col in 0..k {
            let mut acc = BigRational::from_integer(aug[r][l + col].clone());
            for &other in &pivots[r + 1..] {
                acc -= BigRational::from_integer(aug[r][other].clone()) * &x[other][col];
            }
            x[pc][col] = acc / &piv;
        }
    }
    let entries = (0..k).flat_map(|i| (0..l).map(move |j| (i, j))).map(|(i, j)| x[j][i].clone());
    let d = RatMat::new(k, l, entries.collect())?;
    debug_assert!(d.mul_int(n).map(|p| p.equals_int(m)).unwrap_or(false));
    Ok(Some(d))
}

/// Greatest common divisor of all maximal (rows × rows) minors; zero when
/// every minor vanishes.
pub fn gcd_maximal_minors(m: &IntMat) -> Result<BigInt> {
    let (r, c) = (m.rows(), m.cols());
    if r > c {
        return Err(Error::Input(format!(
            "maximal minors need rows <= cols, got {r}x{c}"
        )));
    }
    let mut g = BigInt::zero();
    for chosen in (0..c).combinations(r) {
        let sub = (0..r).map(|i| chosen.iter().map(|&j| m.get(i, j).clone()).collect()).collect();
        g = g.gcd(&det_rows(sub));
        if g.is_one() {
            break;
        }
    }
    Ok(g)
}

/// Nonzero invariant factors `d₁ | d₂ | …` of the Smith normal form of `m`.
pub fn smith_invariants(m: &IntMat) -> Vec<BigInt> {
    let mut a = m.row_vectors();
    let (nr, nc) = (m.rows(), m.cols());
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nr.min(nc) {
        let pos = (t..nr)
            .flat_map(|i| (t..nc).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()));
        let Some((pi, pj)) = pos else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..nr {
            if a[i][t].is_zero() {
                continue;
            }
            let q = a[i][t].div_floor(&a[t][t]);
            let (head, tail) = a.split_at_mut(i);
            row_sub_mul(&mut tail[0], &head[t], &q);
            clean &= a[i][t].is_zero();
        }
        for j in t + 1..nc {
            if a[t][j].is_zero() {
                continue;
            }
            let q = a[t][j].div_floor(&a[t][t]);
            for i in t..nr {
                let v = &a[i][t] * &q;
                a[i][j] -= v;
            }
            clean &= a[t][j].is_zero();
        }
        if !clean {
            continue;
        }
        // Divisibility: fold an offending row into the pivot row and retry.
        let offending = (t + 1..nr).find(|&i| (t + 1..nc).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
        if let Some(i) = offending {
            let (head, tail) = a.split_at_mut(i);
            for (x, y) in head[t].iter_mut().zip(tail[0].iter()) {
                *x += y;
            }
            continue;
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}
