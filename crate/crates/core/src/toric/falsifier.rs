use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{dim_err, Error, Result};
use crate::lattice::is_prime;
use crate::poly::Poly;

/// Search settings for [`finite_field_falsifier`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FalsifierConfig {
    pub primes: Vec<u64>,
    /// Enumerate every point when `q^l` is at most this many points.
    pub exhaustive_limit: u64,
    /// Otherwise draw this many uniform points.
    pub samples: u64,
    pub seed: u64,
}

impl Default for FalsifierConfig {
    fn default() -> Self {
        FalsifierConfig {
            primes: vec![2, 3, 5, 7, 11, 13],
            exhaustive_limit: 1_000_000,
            samples: 100_000,
            seed: 0,
        }
    }
}

/// A point of `F_q^l` on which the two generator systems disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldWitness {
    pub prime: u64,
    pub point: Vec<u64>,
}

/// Polynomial reduced mod q: (coefficient, [(variable, exponent)]).
/// Exponents are folded into 1..=q-1 using t^(q-1) = 1 on nonzero t, which
/// keeps t = 0 correct as long as the original exponent was positive.
struct ModPoly {
    terms: Vec<(u64, Vec<(usize, u64)>)>,
}

impl ModPoly {
    fn new(p: &Poly, q: u64) -> Self {
        let qb = BigInt::from(q);
        let order = BigInt::from(q - 1);
        let terms = p
            .terms()
            .filter_map(|(e, c)| {
                let c = c.mod_floor(&qb).to_u64().expect("reduced mod q");
                if c == 0 {
                    return None;
                }
                let factors = e
                    .0
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(i, x)| {
                        let folded = ((x - 1u32).mod_floor(&order) + 1u32).to_u64().expect("small");
                        (i, folded)
                    })
                    .collect();
                Some((c, factors))
            })
            .collect();
        ModPoly { terms }
    }

    fn eval(&self, point: &[u64], q: u64) -> u64 {
        let mut acc = 0u64;
        for (c, factors) in &self.terms {
            let mut v = *c as u128;
            for &(i, e) in factors {
                v = v * pow_mod(point[i], e, q) as u128 % q as u128;
                if v == 0 {
                    break;
                }
            }
            acc = ((acc as u128 + v) % q as u128) as u64;
        }
        acc
    }
}

fn pow_mod(base: u64, mut e: u64, q: u64) -> u64 {
    let q = q as u128;
    let mut b = base as u128 % q;
    let mut r = 1u128;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % q;
        }
        b = b * b % q;
        e >>= 1;
    }
    r as u64
}

fn all_vanish(polys: &[ModPoly], point: &[u64], q: u64) -> bool {
    polys.iter().all(|p| p.eval(point, q) == 0)
}

/// Looks for a point of `F_q^l` where every polynomial of one system vanishes
/// but some polynomial of the other does not. Such a point shows that the
/// two systems have different zero sets, hence different radicals.
///
/// Enumerates `F_q^l` in lexicographic order when it has at most
/// `cfg.exhaustive_limit` points, and otherwise samples `cfg.samples` points
/// from a generator seeded by `cfg.seed` and `q`.
pub fn finite_field_falsifier(
    gens_a: &[Poly],
    gens_b: &[Poly],
    q: u64,
    cfg: &FalsifierConfig,
) -> Result<Option<Vec<u64>>> {
    if !is_prime(q) {
        return Err(Error::Input(format!("{q} is not prime")));
    }
    if q > u32::MAX as u64 {
        return Err(Error::Input(format!("field size {q} is too large")));
    }
    let Some(l) = gens_a.iter().chain(gens_b).map(Poly::nvars).next() else {
        return Ok(None);
    };
    if gens_a.iter().chain(gens_b).any(|g| g.nvars() != l) {
        return Err(dim_err("generator systems live in different rings"));
    }
    if gens_a.iter().chain(gens_b).any(|g| !g.has_nonnegative_exponents()) {
        return Err(Error::Input("falsifier needs polynomials, not Laurent polynomials".into()));
    }
    let a: Vec<ModPoly> = gens_a.iter().map(|g| ModPoly::new(g, q)).collect();
    let b: Vec<ModPoly> = gens_b.iter().map(|g| ModPoly::new(g, q)).collect();
    let differs = |pt: &[u64]| all_vanish(&a, pt, q) != all_vanish(&b, pt, q);

    let total = (0..l).try_fold(1u64, |acc, _| acc.checked_mul(q));
    match total {
        Some(total) if total <= cfg.exhaustive_limit => {
            let mut point = vec![0u64; l];
            for _ in 0..total {
                if differs(&point) {
                    return Ok(Some(point));
                }
                // odometer increment, last coordinate fastest
                for digit in point.iter_mut().rev() {
                    *digit += 1;
                    if *digit < q {
                        break;
                    }
                    *digit = 0;
                }
            }
            Ok(None)
        }
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ q.wrapping_mul(0x9e37_79b9_7f4a_7c15));
            let mut point = vec![0u64; l];
            for _ in 0..cfg.samples {
                for x in point.iter_mut() {
                    *x = rng.gen_range(0..q);
                }
                if differs(&point) {
                    return Ok(Some(point));
                }
            }
            Ok(None)
        }
    }
}
