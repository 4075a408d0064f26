//! Randomised comparisons against the reference routines. Each suite returns
//! the number of cases checked or the first disagreement.

use num_bigint::BigInt;
use rand::Rng;

use super::*;
use toric_core::lattice::{image_lattice, p_saturation_index, Lattice};
use toric_core::linalg::{hnf, kernel_basis};
use toric_core::poly::MonomialMap;
use toric_core::stci::{four_six_certificate, quintic_certificate, scroll_certificate, FamilyOutcome};
use toric_core::toric::{is_projection, zero_pattern_set};
use toric_core::{verify_certificate, StciCertificate};

pub type Outcome = Result<usize, String>;

/// One matrix: canonical form, row lattice, kernel rank, kernel saturation
/// and a bounded kernel search.
pub fn check_hnf_kernel(m: &Rows, cols: usize, bound: i128) -> Result<(), String> {
    let mat = to_mat(m, cols);
    let h = hnf(&mat);
    let hr = from_mat(&h);
    let mr: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let rank = rank_q(&mr);
    if !is_hermite(&hr) || hr.len() != rank {
        return Err(format!("{m:?}: {h} is not a canonical basis of rank {rank}"));
    }
    if hnf(&h) != h {
        return Err(format!("{m:?}: canonical form is not idempotent"));
    }
    if let Some(r) = mr.iter().find(|r| !in_row_lattice(&hr, r)) {
        return Err(format!("{m:?}: row {r:?} is outside the lattice of {h}"));
    }
    // Same rank and same determinantal divisor: the lattices coincide.
    if rank > 0 && all_minors_gcd(&mr, rank, cols) != minors_gcd(&hr, cols) {
        return Err(format!("{m:?}: {h} spans a strictly larger lattice"));
    }
    let k = kernel_basis(&mat);
    let kr = from_mat(k.basis());
    if kr.len() + rank != cols {
        return Err(format!("{m:?}: kernel rank {} with matrix rank {rank}", kr.len()));
    }
    if let Some(b) = kr.iter().find(|b| mat_vec(m, b).iter().any(|&x| x != 0)) {
        return Err(format!("{m:?}: kernel vector {b:?} is not annihilated"));
    }
    if !kr.is_empty() && minors_gcd(&kr, cols) != BigInt::from(1) {
        return Err(format!("{m:?}: kernel basis {} is not saturated", k.basis()));
    }
    if let Some(v) = box_kernel(m, cols, bound).into_iter().find(|v| !in_row_lattice(&kr, v)) {
        return Err(format!("{m:?}: kernel vector {v:?} missed by {}", k.basis()));
    }
    Ok(())
}

fn all_minors_gcd(m: &[Vec<i128>], k: usize, cols: usize) -> BigInt {
    let mut g = BigInt::from(0);
    for rs in row_subsets(m.len(), k) {
        let sub: Vec<Vec<i128>> = rs.iter().map(|&i| m[i].clone()).collect();
        g = num_integer::Integer::gcd(&g, &minors_gcd(&sub, cols));
    }
    g
}

fn row_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

pub fn hnf_kernel_suite(rng: &mut impl Rng, count: usize) -> Outcome {
    for _ in 0..count {
        let rows = rng.gen_range(1..=5);
        let cols = rng.gen_range(1..=7);
        let m = random_rows(rng, rows, cols, -5, 5);
        check_hnf_kernel(&m, cols, 2)?;
    }
    Ok(count)
}

/// Rank of the image lattice for `m = d·n` equals the height difference.
pub fn check_rank_law(n: &Rows, d: &Rows, cols: usize) -> Result<(), String> {
    let nm = to_mat(n, cols);
    let m = to_mat(d, n.len()).mul(&nm).unwrap();
    let mr = from_mat(&m);
    let nr: Vec<Vec<i128>> = n.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let expected = (cols - rank_q(&mr)) - (cols - rank_q(&nr));
    let report = is_projection(&nm, &m).unwrap();
    if !report.holds() || !report.consistent() {
        return Err(format!("n = {n:?}, d = {d:?}: d·n is not recognised as a projection"));
    }
    let image = image_lattice(&nm, &m).unwrap();
    if image.rank() != expected {
        return Err(format!("n = {n:?}, d = {d:?}: image rank {} != {expected}", image.rank()));
    }
    Ok(())
}

pub fn rank_law_suite(rng: &mut impl Rng, count: usize) -> Outcome {
    for _ in 0..count {
        let l = rng.gen_range(1..=4);
        let cols = rng.gen_range(l..=7);
        let r = rng.gen_range(1..=l);
        let n = random_rows(rng, l, cols, -5, 5);
        let d = random_rows(rng, r, l, -3, 3);
        check_rank_law(&n, &d, cols)?;
    }
    Ok(count)
}

fn full_rank_rows(rng: &mut impl Rng, rows: usize, cols: usize, lo: i64, hi: i64) -> Rows {
    loop {
        let m = random_rows(rng, rows, cols, lo, hi);
        let mr: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        if rank_q(&mr) == rows {
            return m;
        }
    }
}

pub fn check_saturation(l0: &Rows, c: &Rows, ambient: usize, p: u64) -> Result<(), String> {
    let l = Lattice::from_generators(ambient, l0.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>()))
        .unwrap();
    let g_rows = to_mat(c, l0.len()).mul(&to_mat(l0, ambient)).unwrap();
    let g = Lattice::from_matrix_rows(&g_rows);
    let cr: Vec<Vec<i128>> = c.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let expected = saturation_oracle(&cr, p);
    let got = p_saturation_index(&l, &g, p).map_err(|e| e.to_string())?;
    if got != expected {
        return Err(format!("l = {l0:?}, c = {c:?}, p = {p}: got {got:?}, expected {expected:?}"));
    }
    Ok(())
}

pub fn saturation_suite(rng: &mut impl Rng, count: usize) -> Outcome {
    for i in 0..count {
        let ambient = rng.gen_range(1..=4);
        let r = rng.gen_range(1..=ambient.min(3));
        let p = [2u64, 3, 5][rng.gen_range(0..3)];
        let l0 = full_rank_rows(rng, r, ambient, -4, 4);
        let c = if i % 2 == 0 {
            full_rank_rows(rng, r, r, -4, 4)
        } else {
            // p-power diagonal times a unit upper-triangular factor
            (0..r)
                .map(|a| {
                    let s = (p as i64).pow(rng.gen_range(0..=2));
                    (0..r).map(|b| if a == b { s } else if b > a { s * rng.gen_range(-2..=2) } else { 0 }).collect()
                })
                .collect()
        };
        check_saturation(&l0, &c, ambient, p)?;
    }
    Ok(count)
}

fn random_map(rng: &mut impl Rng, rows: usize, cols: usize) -> toric_core::IntMat {
    loop {
        let m = random_rows(rng, rows, cols, 0, 3);
        if (0..cols).all(|j| m.iter().any(|r| r[j] != 0)) {
            return to_mat(&m, cols);
        }
    }
}

pub fn homomorphism_suite(rng: &mut impl Rng, count: usize) -> Outcome {
    for _ in 0..count {
        let nvars = rng.gen_range(1..=4);
        let l = rng.gen_range(1..=3);
        let b = random_map(rng, l, nvars);
        let phi = MonomialMap::polynomial(&b).unwrap();
        let p = random_poly(rng, nvars, 4, 3);
        let q = random_poly(rng, nvars, 4, 3);
        let (fp, fq) = (phi.apply(&p).unwrap(), phi.apply(&q).unwrap());
        if phi.apply(&(&p * &q)).unwrap() != &fp * &fq {
            return Err(format!("φ({p} · {q}) is not φ({p})·φ({q}) under {b}"));
        }
        if phi.apply(&(&p + &q)).unwrap() != &fp + &fq {
            return Err(format!("φ({p} + {q}) is not additive under {b}"));
        }
        let t: Vec<BigInt> = (0..l).map(|_| BigInt::from(rng.gen_range(-3..=3))).collect();
        let x: Vec<BigInt> = b
            .columns()
            .iter()
            .map(|col| col.0.iter().zip(&t).fold(BigInt::from(1), |acc, (e, ti)| {
                acc * num_traits::pow(ti.clone(), num_traits::ToPrimitive::to_usize(e).unwrap())
            }))
            .collect();
        if eval(&fp, &t) != eval(&p, &x) {
            return Err(format!("φ({p}) evaluated at {t:?} disagrees with substitution"));
        }
    }
    Ok(count)
}

fn random_binomial(rng: &mut impl Rng, nvars: usize) -> Poly {
    loop {
        let u: ExponentVector = (0..nvars).map(|_| BigInt::from(rng.gen_range(0..=2))).collect();
        let v: ExponentVector = (0..nvars).map(|_| BigInt::from(rng.gen_range(0..=2))).collect();
        if u != v {
            return &Poly::monomial(u, 1) - &Poly::monomial(v, 1);
        }
    }
}

pub fn check_patterns(gens: &[Poly], ambient: usize, forced: usize) -> Result<(), String> {
    let got: Vec<_> = zero_pattern_set(gens, ambient, forced)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|p| p.zero_vars)
        .collect();
    let mut got_sorted = got.clone();
    got_sorted.sort();
    let expected = pattern_oracle(gens, ambient, forced);
    if got_sorted != expected {
        let shown: Vec<String> = gens.iter().map(|g| g.display_with("t")).collect();
        return Err(format!("{shown:?}, forced t{}: got {got:?}, expected {expected:?}", forced + 1));
    }
    Ok(())
}

pub fn zero_pattern_suite(rng: &mut impl Rng, count: usize) -> Outcome {
    for _ in 0..count {
        let ambient = rng.gen_range(1..=6);
        let gens: Vec<Poly> = (0..rng.gen_range(0..=4)).map(|_| random_binomial(rng, ambient)).collect();
        let forced = rng.gen_range(0..ambient);
        check_patterns(&gens, ambient, forced)?;
    }
    Ok(count)
}

/// The family instances exercised by the acceptance criteria.
pub fn family_certificates() -> Vec<StciCertificate> {
    let mut out = Vec::new();
    for (d, c) in [(2u32, vec![4u64, 1]), (2, vec![4, 1, 1]), (3, vec![6, 1])] {
        out.push(scroll_certificate(d, &c).unwrap());
    }
    for (a, b) in [(4, 1), (5, 2), (7, 1)] {
        match quintic_certificate(a, b).unwrap() {
            FamilyOutcome::Certificate(c) => out.push(*c),
            FamilyOutcome::Trivial { .. } => unreachable!("a > 1"),
        }
    }
    for a in [7, 9, 11] {
        out.push(four_six_certificate(a).unwrap());
    }
    out
}

/// Bumps every delta coefficient of every certificate in turn, and also
/// shifts one exponent; each mutant must fail verification.
pub fn mutation_suite(certs: &[StciCertificate]) -> Outcome {
    let mut mutants = 0;
    for cert in certs {
        for (k, f) in cert.deltas.iter().enumerate() {
            for (e, _) in f.terms_glex() {
                let mut bad = cert.clone();
                bad.deltas[k] = f + &Poly::monomial(e.clone(), 1);
                if verify_certificate(&bad).verified {
                    return Err(format!("{}: coefficient bump at {e} still verifies", cert.label));
                }
                mutants += 1;
            }
            let (e, c) = f.terms_glex()[0];
            let mut shifted = e.clone();
            shifted.0[0] += 1;
            let mut bad = cert.clone();
            bad.deltas[k] = &(f - &Poly::monomial(e.clone(), c.clone())) + &Poly::monomial(shifted, c.clone());
            if verify_certificate(&bad).verified {
                return Err(format!("{}: exponent shift still verifies", cert.label));
            }
            mutants += 1;
        }
    }
    Ok(mutants)
}
