//! Explicit certificate families for monomial curves and their higher
//! dimensional relatives.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::{compute_w, PowerIdentity, StciCertificate};
use crate::error::{Error, Result};
use crate::linalg::{ExponentVector, IntMat};
use crate::poly::{Binomial, Poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// Base `N_d` (a rational normal curve block plus `d·e_j` columns) and
    /// target `M_{c₁,…,c_{m+1},d}`; `c` holds `c₁,…,c_{m+1}` with `m ≥ 1`.
    Scroll { d: u32, c: Vec<u64> },
    /// The monomial curve `(a, a+2b, 2a+3b, 2a+5b)` over the base
    /// `[[5,1,4,0],[0,2,3,5]]`.
    Quintic { a: u64, b: u64 },
    /// The monomial curve `(4, 6, a, a+2)` for odd `a ≥ 7` over the base
    /// `[[2,3,a+1,0],[2,3,0,a+1]]`.
    FourSix { a: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyOutcome {
    Certificate(Box<StciCertificate>),
    /// The target is a complete intersection for elementary reasons; no
    /// lifting polynomial is produced.
    Trivial { target: IntMat, note: String },
}

pub fn build_family(family: &Family) -> Result<FamilyOutcome> {
    match family {
        Family::Scroll { d, c } => scroll_certificate(*d, c).map(|c| FamilyOutcome::Certificate(Box::new(c))),
        Family::Quintic { a, b } => quintic_certificate(*a, *b),
        Family::FourSix { a } => four_six_certificate(*a).map(|c| FamilyOutcome::Certificate(Box::new(c))),
    }
}

fn binom(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn ev(coords: &[u64]) -> ExponentVector {
    coords.iter().map(|&x| BigInt::from(x)).collect()
}

fn row_matrix(row: &[u64]) -> IntMat {
    IntMat::from_rows(row.len(), vec![row.iter().map(|&x| BigInt::from(x)).collect()]).expect("one row")
}

fn signed(k: u64) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Decomposes `a = 2μ + 3ν` with the least `ν ≥ min_nu` of matching parity.
pub fn split_two_three(a: u64, min_nu: u64) -> Option<(u64, u64)> {
    (min_nu..=a / 3).find(|nu| (a - 3 * nu).is_multiple_of(2)).map(|nu| ((a - 3 * nu) / 2, nu))
}

/// Certificate over the base `N_d` for the target `M_{c,d}`. The parameters
/// are divided by their gcd first, which leaves the toric ideal unchanged.
/// `base_gens` is left empty: equations cutting out `I_{N_d}` are not
/// produced here, so only the lifting layer is certified.
pub fn scroll_certificate(d: u32, c: &[u64]) -> Result<StciCertificate> {
    if d < 2 {
        return Err(Error::Input(format!("d must exceed 1, got {d}")));
    }
    if c.len() < 2 {
        return Err(Error::Input("need c₁,…,c_{m+1} with m ≥ 1".into()));
    }
    if c[0] == 0 {
        return Err(Error::Input("c₁ must be positive".into()));
    }
    let d64 = u64::from(d);
    if c[0] < d64 * c[1] {
        return Err(Error::Input(format!("c₁ = {} is smaller than d·c₂ = {}", c[0], d64 * c[1])));
    }
    let e = c.iter().fold(0u64, |g, &x| g.gcd(&x));
    let c: Vec<u64> = c.iter().map(|&x| x / e).collect();
    let m = c.len() - 1;
    let d = d64 as usize;
    let nvars = m + d;
    let lead = c[0] - d64 * c[1];

    // N_d: (m+1) × (m+d)
    let mut base = vec![vec![BigInt::from(0); nvars]; m + 1];
    for k in 0..=d {
        base[0][k] = BigInt::from(d - k);
        base[1][k] = BigInt::from(k);
    }
    for j in 2..=m {
        base[j][d + j - 1] = BigInt::from(d);
    }
    let base = IntMat::from_rows(nvars, base)?;

    // M_{c,d}: m × (m+d)
    let mut target = vec![vec![BigInt::from(0); nvars]; m];
    for k in 0..=d {
        target[0][k] = BigInt::from(c[0] - k as u64 * c[1]);
        for r in 1..m {
            target[r][k] = BigInt::from(k as u64 * c[r + 1]);
        }
    }
    for r in 1..m {
        target[r][d + r] = BigInt::from(c[0]);
    }
    let target = IntMat::from_rows(nvars, target)?;

    let g = c[2..].iter().fold(c[0].gcd(&lead), |g, &x| g.gcd(&(d64 * x)));
    let mut a = vec![BigInt::from(lead / g), -BigInt::from(c[0] / g)];
    a.extend(c[2..].iter().map(|&x| BigInt::from(d64 * x / g)));
    let a = ExponentVector(a);
    let w = compute_w(&base, &a)?;

    // t₂^{c₁} − t₁^{c₁−dc₂} t₃^{dc₃} ⋯
    let mut plus = vec![0u64; m + 1];
    plus[1] = c[0];
    let mut minus = vec![0u64; m + 1];
    minus[0] = lead;
    for j in 2..=m {
        minus[j] = d64 * c[j];
    }
    let binomial = Binomial::new(ev(&plus), ev(&minus))?;

    let mut f = Poly::zero(nvars);
    for i in 0..=d {
        let mut exps = vec![0u64; nvars];
        exps[d - i] += lead;
        exps[d] += (d - i) as u64 * c[1];
        for j in 2..=m {
            exps[d + j - 1] += i as u64 * c[j];
        }
        let coef = signed(i as u64) * binom(d64, i as u64);
        f = &f + &Poly::monomial(ev(&exps), coef);
    }

    Ok(StciCertificate {
        label: format!("scroll d={d} c=({})", c.iter().map(u64::to_string).collect::<Vec<_>>().join(",")),
        base,
        target,
        base_gens: Vec::new(),
        deltas: vec![f],
        identities: vec![PowerIdentity { binomial, power: d as u32, delta: 0 }],
        s: 1,
        lattice_generator: Some(a),
        w: Some(w),
        transcript: None,
    })
}

pub const QUINTIC_BASE: [[i64; 4]; 2] = [[5, 1, 4, 0], [0, 2, 3, 5]];

/// Certificate for the curve `(a, a+2b, 2a+3b, 2a+5b)`; `a = 1` is reported
/// as trivial.
pub fn quintic_certificate(a: u64, b: u64) -> Result<FamilyOutcome> {
    if a == 0 || b == 0 {
        return Err(Error::Input("a and b must be positive".into()));
    }
    let curve = [a, a + 2 * b, 2 * a + 3 * b, 2 * a + 5 * b];
    let target = row_matrix(&curve);
    if a == 1 {
        return Ok(FamilyOutcome::Trivial {
            target,
            note: "a = 1: every other variable is a power of x1 modulo the ideal, so the curve is a \
                   complete intersection"
                .into(),
        });
    }
    let (mu, nu) = split_two_three(a, 0).expect("every a > 1 is 2μ+3ν");
    let base = IntMat::from_i64(&[&QUINTIC_BASE[0], &QUINTIC_BASE[1]]);
    let top = 2 * a + 5 * b;
    let h = a.gcd(&top);
    let lattice_generator = ExponentVector(vec![-BigInt::from(top / h), BigInt::from(a / h)]);
    let w = compute_w(&base, &lattice_generator)?;
    let terms: [(i64, [u64; 4]); 6] = [
        (1, [4 * mu + 6 * nu + 5 * b, 0, 0, 0]),
        (-5, [3 * mu + 4 * nu + 4 * b, mu, nu, 0]),
        (10, [2 * mu + 2 * nu + 3 * b, 2 * mu, 2 * nu, 0]),
        (-10, [mu + 2 * b, 3 * mu, 3 * nu, 0]),
        (5, [nu + b, nu, mu, mu + 2 * nu]),
        (-1, [0, 0, 0, 2 * mu + 3 * nu]),
    ];
    let f = Poly::from_terms(4, terms.iter().map(|(c, e)| (ev(e), BigInt::from(*c))))?;
    let base_gens = vec![
        Poly::parse("x3^2 - x1 x2^3", 4)?,
        Poly::parse("x2^5 - 2 x2 x3 x4 + x1 x4^2", 4)?,
    ];
    let binomial = Binomial::new(ev(&[top, 0]), ev(&[0, a]))?;
    Ok(FamilyOutcome::Certificate(Box::new(StciCertificate {
        label: format!("quintic a={a} b={b} mu={mu} nu={nu}"),
        base,
        target,
        base_gens,
        deltas: vec![f],
        identities: vec![PowerIdentity { binomial, power: 5, delta: 0 }],
        s: 1,
        lattice_generator: Some(lattice_generator),
        w: Some(w),
        transcript: None,
    })))
}

/// The base `[[2,3,a+1,0],[2,3,0,a+1]]` used for the curves `(4,6,a,a+2)`.
pub fn four_six_base(a: u64) -> IntMat {
    row_pair(&[2, 3, a + 1, 0], &[2, 3, 0, a + 1])
}

fn row_pair(r0: &[u64], r1: &[u64]) -> IntMat {
    IntMat::from_rows(
        r0.len(),
        vec![r0.iter().map(|&x| BigInt::from(x)).collect(), r1.iter().map(|&x| BigInt::from(x)).collect()],
    )
    .expect("equal rows")
}

/// Certificate for the curve `(4, 6, a, a+2)`, odd `a ≥ 7`. Even `a` and
/// larger gaps give symmetric semigroups, which are handled by other means
/// and are not generated here.
pub fn four_six_certificate(a: u64) -> Result<StciCertificate> {
    if a.is_multiple_of(2) || a < 7 {
        return Err(Error::Input(format!(
            "a = {a}: only odd a >= 7 is generated; other (4,6,a,b) curves have symmetric \
             semigroups and are complete intersections by a separate argument"
        )));
    }
    let (mu, nu) = split_two_three(a, 1).expect("odd a has a decomposition with ν ≥ 1");
    let base = four_six_base(a);
    let target = row_matrix(&[4, 6, a, a + 2]);
    let half = a.div_ceil(2);
    let base_gens = vec![
        Poly::from_terms(
            4,
            [(ev(&[half, 0, 0, 0]), BigInt::one()), (ev(&[0, 0, 1, 1]), -BigInt::one())],
        )?,
        Poly::parse("x1^3 - x2^2", 4)?,
    ];
    let mut f = Poly::zero(4);
    for i in 0..=a + 1 {
        let exps = if i <= half {
            [i * mu, i * nu, a + 2 - 2 * i, 0]
        } else {
            let j = a + 1 - i;
            [j * (mu + 1), nu * j, 0, 2 * i - a - 2]
        };
        f = &f + &Poly::monomial(ev(&exps), signed(i) * binom(a + 1, i));
    }
    let lattice_generator = ExponentVector(vec![BigInt::from(a + 2), -BigInt::from(a)]);
    let w = compute_w(&base, &lattice_generator)?;
    let binomial = Binomial::new(ev(&[a + 2, 0]), ev(&[0, a]))?;
    Ok(StciCertificate {
        label: format!("four-six a={a} mu={mu} nu={nu}"),
        base,
        target,
        base_gens,
        deltas: vec![f],
        identities: vec![PowerIdentity { binomial, power: (a + 1) as u32, delta: 0 }],
        s: 1,
        lattice_generator: Some(lattice_generator),
        w: Some(w),
        transcript: None,
    })
}
