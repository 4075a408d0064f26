//! Worked examples bundled as JSON fixtures. Every fixture is re-validated
//! when loaded; the generator lists are trusted only as far as the criterion
//! preconditions check them.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::linalg::{ExponentVector, IntMat};
use crate::poly::{Binomial, Poly};
use crate::stci::{PowerIdentity, StciCertificate};

/// Everything [`crate::toric::radical_criterion`] needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionInput {
    pub name: String,
    pub n: IntMat,
    pub m: IntMat,
    pub gens_im: Vec<Poly>,
    pub fs: Vec<Poly>,
}

/// Which base the curve `(4, 6, a, a+2)` is projected from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveBase {
    /// `[[a−2,a−4,2,0],[0,2,a−4,a−2]]`
    Diagonal,
    /// `[[2,3,a+1,0],[2,3,0,a+1]]`
    Paired,
}

#[derive(Deserialize)]
struct CurveFixture {
    a: u64,
    m: IntMat,
    gens_im: Vec<String>,
}

const CURVES: [(u64, &str); 5] = [
    (7, include_str!("../fixtures/four_six_a7.json")),
    (9, include_str!("../fixtures/four_six_a9.json")),
    (11, include_str!("../fixtures/four_six_a11.json")),
    (13, include_str!("../fixtures/four_six_a13.json")),
    (15, include_str!("../fixtures/four_six_a15.json")),
];

pub fn curve_parameters() -> Vec<u64> {
    CURVES.iter().map(|(a, _)| *a).collect()
}

fn parse_all(texts: &[String], nvars: usize) -> Result<Vec<Poly>> {
    texts.iter().map(|t| Poly::parse(t, nvars)).collect()
}

fn fixture<T: for<'de> Deserialize<'de>>(name: &str, text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("fixture {name}: {e}")))
}

fn mat(rows: &[Vec<u64>]) -> IntMat {
    let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    IntMat::from_i64(&refs)
}

/// The curve `(4, 6, a, a+2)` for odd `a` with a bundled generating set.
pub fn four_six_curve(a: u64, base: CurveBase) -> Result<CriterionInput> {
    let Some((_, text)) = CURVES.iter().find(|(x, _)| *x == a) else {
        return Err(Error::Input(format!("no bundled generators for a = {a}; available: {:?}", curve_parameters())));
    };
    let fx: CurveFixture = fixture("four-six", text)?;
    debug_assert_eq!(fx.a, a);
    let gens_im = parse_all(&fx.gens_im, 4)?;
    let (n, fs) = match base {
        CurveBase::Diagonal => (
            mat(&[vec![a - 2, a - 4, 2, 0], vec![0, 2, a - 4, a - 2]]),
            vec![format!("x1^{} - x4^4", a + 2), "x4^2 - x1 x3^2".to_string()],
        ),
        CurveBase::Paired => (
            mat(&[vec![2, 3, a + 1, 0], vec![2, 3, 0, a + 1]]),
            vec![format!("x3^{} - x4^{a}", a + 2), "x1 x4 - x2 x3".to_string()],
        ),
    };
    let suffix = match base {
        CurveBase::Diagonal => "D",
        CurveBase::Paired => "N",
    };
    Ok(CriterionInput { name: format!("four-six-{suffix} a={a}"), n, m: fx.m, gens_im, fs: parse_all(&fs, 4)? })
}

#[derive(Deserialize)]
struct NegativeFixture {
    n: IntMat,
    d: IntMat,
    m: IntMat,
    gens_im: Vec<String>,
    fs: Vec<String>,
}

/// A projection where the lattice condition holds but the radical equality
/// does not: the 6×6 base has a toric set strictly smaller than its variety.
pub fn negative_control() -> Result<CriterionInput> {
    let fx: NegativeFixture = fixture("negative-control", include_str!("../fixtures/negative_control.json"))?;
    Ok(CriterionInput {
        name: "negative-control".into(),
        n: fx.d,
        m: fx.m,
        gens_im: parse_all(&fx.gens_im, 6)?,
        fs: parse_all(&fx.fs, 6)?,
    })
}

/// The 3×6 parametrization of the same target.
pub fn negative_control_parametrization() -> Result<IntMat> {
    let fx: NegativeFixture = fixture("negative-control", include_str!("../fixtures/negative_control.json"))?;
    Ok(fx.n)
}

#[derive(Deserialize)]
struct IdentityFixture {
    binomial: String,
    power: u32,
    delta: usize,
}

#[derive(Deserialize)]
struct TwoDeltaFixture {
    n: IntMat,
    m: IntMat,
    base_gens: Vec<String>,
    deltas: Vec<String>,
    identities: Vec<IdentityFixture>,
    kernel_n: Vec<ExponentVector>,
    kernel_m: Vec<ExponentVector>,
    image: Vec<ExponentVector>,
}

/// The two-delta certificate over a 5×7 base, with the lattices listed
/// alongside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoDeltaExample {
    pub certificate: StciCertificate,
    pub kernel_n: Lattice,
    pub kernel_m: Lattice,
    pub image: Lattice,
}

pub fn two_delta_example() -> Result<TwoDeltaExample> {
    let fx: TwoDeltaFixture = fixture("two-delta", include_str!("../fixtures/two_delta.json"))?;
    let (l, n) = (fx.n.rows(), fx.n.cols());
    let identities = fx
        .identities
        .iter()
        .map(|i| {
            let binomial = Binomial::from_poly(&Poly::parse(&i.binomial, l)?)?;
            Ok(PowerIdentity { binomial, power: i.power, delta: i.delta })
        })
        .collect::<Result<Vec<_>>>()?;
    let certificate = StciCertificate {
        label: "two-delta".into(),
        base: fx.n,
        target: fx.m,
        base_gens: parse_all(&fx.base_gens, n)?,
        deltas: parse_all(&fx.deltas, n)?,
        identities,
        s: 2,
        lattice_generator: None,
        w: None,
        transcript: None,
    };
    Ok(TwoDeltaExample {
        certificate,
        kernel_n: Lattice::from_generators(n, fx.kernel_n)?,
        kernel_m: Lattice::from_generators(n, fx.kernel_m)?,
        image: Lattice::from_generators(l, fx.image)?,
    })
}
