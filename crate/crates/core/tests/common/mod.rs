//! Independent reference routines. None of these call into the library's
//! linear algebra; they work on small `i128`/`BigRational` data directly.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use toric_core::{ExponentVector, IntMat, Poly};

pub mod suites;

pub type Rows = Vec<Vec<i64>>;

pub fn to_mat(rows: &Rows, cols: usize) -> IntMat {
    IntMat::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
        .unwrap()
}

pub fn from_mat(m: &IntMat) -> Vec<Vec<i128>> {
    m.row_vectors().iter().map(|r| r.iter().map(|x| x.to_i128().unwrap()).collect()).collect()
}

pub fn random_rows(rng: &mut impl Rng, rows: usize, cols: usize, lo: i64, hi: i64) -> Rows {
    (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(lo..=hi)).collect()).collect()
}

/// Shape predicate of the canonical form: strictly increasing positive
/// pivots, zeros left of each pivot, entries above a pivot in `[0, pivot)`.
pub fn is_hermite(rows: &[Vec<i128>]) -> bool {
    let mut last: Option<usize> = None;
    for (i, r) in rows.iter().enumerate() {
        let Some(pc) = r.iter().position(|&x| x != 0) else { return false };
        if last.is_some_and(|l| pc <= l) || r[pc] <= 0 {
            return false;
        }
        if rows[..i].iter().any(|above| above[pc] < 0 || above[pc] >= r[pc]) {
            return false;
        }
        last = Some(pc);
    }
    true
}

/// Rational coordinates of `v` against linearly independent `basis` rows,
/// by Gauss–Jordan on the transposed system.
pub fn coords_q(basis: &[Vec<i128>], v: &[i128]) -> Option<Vec<BigRational>> {
    let r = basis.len();
    let mut a: Vec<Vec<BigRational>> = (0..v.len())
        .map(|c| {
            let mut row: Vec<BigRational> = basis.iter().map(|b| rat(b[c])).collect();
            row.push(rat(v[c]));
            row
        })
        .collect();
    let mut piv = 0;
    for c in 0..r {
        let p = (piv..a.len()).find(|&i| !a[i][c].is_zero())?;
        a.swap(piv, p);
        let d = a[piv][c].clone();
        a[piv].iter_mut().for_each(|x| *x /= d.clone());
        for i in 0..a.len() {
            if i != piv && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..=r {
                    let t = &f * &a[piv][j];
                    a[i][j] -= t;
                }
            }
        }
        piv += 1;
    }
    if a[r..].iter().any(|row| !row[r].is_zero()) {
        return None;
    }
    Some(a[..r].iter().map(|row| row[r].clone()).collect())
}

/// `v` is an integer combination of the independent `basis` rows.
pub fn in_row_lattice(basis: &[Vec<i128>], v: &[i128]) -> bool {
    if basis.is_empty() {
        return v.iter().all(|&x| x == 0);
    }
    coords_q(basis, v).is_some_and(|c| c.iter().all(|x| x.is_integer()))
}

fn rat(x: i128) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Gauss–Jordan over Q; returns the rank.
pub fn rank_q(rows: &[Vec<i128>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = &a[i][c] / &a[r][c];
                for j in 0..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

pub fn det_q(m: &[Vec<i128>]) -> BigRational {
    let mut a: Vec<Vec<BigRational>> = m.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
    let n = a.len();
    let mut d = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else { return BigRational::zero() };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= a[c][c].clone();
        for i in c + 1..n {
            let f = &a[i][c] / &a[c][c];
            for j in c..n {
                let t = &f * &a[c][j];
                a[i][j] -= t;
            }
        }
    }
    d
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// gcd of maximal minors by full enumeration.
pub fn minors_gcd(m: &[Vec<i128>], cols: usize) -> BigInt {
    let k = m.len();
    let mut g = BigInt::zero();
    for cs in combinations(cols, k) {
        let sub: Vec<Vec<i128>> = m.iter().map(|r| cs.iter().map(|&j| r[j]).collect()).collect();
        let d = det_q(&sub);
        g = num_integer::Integer::gcd(&g, d.numer());
    }
    g
}

pub fn mat_vec(m: &Rows, v: &[i128]) -> Vec<i128> {
    m.iter().map(|r| r.iter().zip(v).map(|(&a, &b)| a as i128 * b).sum()).collect()
}

/// Every integer vector in `[-bound, bound]^cols` killed by `m`.
pub fn box_kernel(m: &Rows, cols: usize, bound: i128) -> Vec<Vec<i128>> {
    let mut v = vec![-bound; cols];
    let mut out = Vec::new();
    loop {
        if v.iter().any(|&x| x != 0) && mat_vec(m, &v).iter().all(|&x| x == 0) {
            out.push(v.clone());
        }
        let mut i = 0;
        loop {
            if i == cols {
                return out;
            }
            if v[i] < bound {
                v[i] += 1;
                break;
            }
            v[i] = -bound;
            i += 1;
        }
    }
}

/// Rational inverse by Gauss–Jordan; `None` when singular.
pub fn inverse_q(m: &[Vec<i128>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<BigRational> = r.iter().map(|&x| rat(x)).collect();
            row.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(p, c);
        let piv = a[c][c].clone();
        a[c].iter_mut().for_each(|x| *x /= piv.clone());
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..2 * n {
                    let t = &f * &a[c][j];
                    a[i][j] -= t;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// For `g = C·l` with `l` of full row rank: least `k` with `p^k·C⁻¹`
/// integral, i.e. `p^k·l ⊆ g`.
pub fn saturation_oracle(c: &[Vec<i128>], p: u64) -> Option<u32> {
    let inv = inverse_q(c).expect("nonsingular");
    let p = BigInt::from(p);
    let mut k = 0;
    for x in inv.iter().flatten() {
        let mut d = x.denom().clone();
        let mut e = 0;
        while (&d % &p).is_zero() {
            d /= &p;
            e += 1;
        }
        if !d.is_one() {
            return None;
        }
        k = k.max(e);
    }
    Some(k)
}

/// Exhaustive minimal zero patterns containing `forced`: a generator is
/// compatible with a zero set unless exactly one of its terms survives.
pub fn pattern_oracle(gens: &[Poly], ambient: usize, forced: usize) -> Vec<BTreeSet<usize>> {
    let supports: Vec<Vec<BTreeSet<usize>>> = gens
        .iter()
        .map(|g| g.terms().map(|(e, _)| e.0.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| i).collect()).collect())
        .collect();
    let consistent = |z: &BTreeSet<usize>| {
        supports.iter().all(|terms| terms.iter().filter(|s| s.is_disjoint(z)).count() != 1)
    };
    let all: Vec<BTreeSet<usize>> = (0u32..1 << ambient)
        .map(|mask| (0..ambient).filter(|i| mask >> i & 1 == 1).collect::<BTreeSet<_>>())
        .filter(|z| z.contains(&forced) && consistent(z))
        .collect();
    let mut minimal: Vec<BTreeSet<usize>> =
        all.iter().filter(|z| !all.iter().any(|w| w != *z && w.is_subset(z))).cloned().collect();
    minimal.sort();
    minimal
}

pub fn binom(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `(t_i^p − t_j^q)^e` in `nvars` variables written out term by term with
/// the binomial theorem.
pub fn binomial_power(nvars: usize, plus: &[(usize, u64)], minus: &[(usize, u64)], e: u64) -> Poly {
    let terms = (0..=e).map(|i| {
        let mut exps = vec![BigInt::zero(); nvars];
        for &(v, p) in plus {
            exps[v] += BigInt::from(p * (e - i));
        }
        for &(v, q) in minus {
            exps[v] += BigInt::from(q * i);
        }
        let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        (ExponentVector(exps), sign * binom(e, i))
    });
    Poly::from_terms(nvars, terms).unwrap()
}

/// Evaluates `p` at an integer point (non-negative exponents only).
pub fn eval(p: &Poly, point: &[BigInt]) -> BigInt {
    p.terms()
        .map(|(e, c)| {
            e.0.iter().zip(point).fold(c.clone(), |acc, (k, x)| {
                assert!(!k.is_negative());
                acc * num_traits::pow(x.clone(), k.to_usize().unwrap())
            })
        })
        .sum()
}

/// A random polynomial with at most `terms` terms.
pub fn random_poly(rng: &mut impl Rng, nvars: usize, terms: usize, max_exp: i64) -> Poly {
    let n = rng.gen_range(0..=terms);
    let ts = (0..n).map(|_| {
        let e: ExponentVector = (0..nvars).map(|_| BigInt::from(rng.gen_range(0..=max_exp))).collect();
        (e, BigInt::from(rng.gen_range(-5i64..=5)))
    });
    Poly::from_terms(nvars, ts.collect::<Vec<_>>()).unwrap()
}
