//! Decides whether a toric ideal is generated up to radical by a toric ideal
//! it projects from plus a list of binomials.
//!
//! Two conditions are checked. Condition (a) compares the image of the target
//! kernel under the base matrix with the lattice generated by the images of
//! the binomial exponent vectors. Condition (b) compares, for every base
//! coordinate `t_i`, the zero sets of the substituted generators restricted to
//! `t_i = 0`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::falsifier::{finite_field_falsifier, FalsifierConfig, FieldWitness};
use super::zero_pattern::{zero_pattern_set, ZeroPattern};
use super::{diagonal_block_columns, is_projection, presentation};
use crate::error::{dim_err, Error, Result};
use crate::lattice::{image_lattice, is_prime, p_saturation_index, Lattice};
use crate::linalg::IntMat;
use crate::poly::{MonomialMap, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Characteristic {
    Zero,
    Prime(u64),
}

impl Characteristic {
    pub fn new(c: u64) -> Result<Self> {
        match c {
            0 => Ok(Characteristic::Zero),
            p if is_prime(p) => Ok(Characteristic::Prime(p)),
            other => Err(Error::Input(format!("characteristic {other} is neither 0 nor prime"))),
        }
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Characteristic::Zero => write!(f, "0"),
            Characteristic::Prime(p) => write!(f, "{p}"),
        }
    }
}

impl From<Characteristic> for String {
    fn from(c: Characteristic) -> String {
        c.to_string()
    }
}

impl TryFrom<String> for Characteristic {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        let c = s.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad characteristic {s:?}")))?;
        Characteristic::new(c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Holds,
    Fails,
    Indeterminate,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "HOLDS",
            Verdict::Fails => "FAILS",
            Verdict::Indeterminate => "INDETERMINATE",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionA {
    pub verdict: Verdict,
    /// Least `k` with `pᵏ·image ⊆ generated`; `0` on equality in
    /// characteristic zero.
    pub k: Option<u32>,
    pub image_lattice: Lattice,
    pub generated_lattice: Lattice,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariableCheck {
    /// 1-based index of the base coordinate `t_var`.
    pub var: usize,
    pub verdict: Verdict,
    pub method: String,
    pub witness: Option<FieldWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub characteristic: Characteristic,
    pub condition_a: ConditionA,
    pub condition_b: Vec<VariableCheck>,
    pub overall: Verdict,
    pub assumptions: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CriterionOptions {
    pub characteristic: Option<Characteristic>,
    pub falsifier: FalsifierConfig,
}

impl CriterionOptions {
    fn characteristic(&self) -> Characteristic {
        self.characteristic.unwrap_or(Characteristic::Zero)
    }
}

pub const ASSUMPTION_SHAPE_VERIFIED: &str =
    "base matrix has diagonal-block shape, so its toric set is the whole toric variety";
pub const ASSUMPTION_SHAPE_UNVERIFIED: &str =
    "toric set of the base matrix equals its toric variety: hypothesis assumed, not verified";
pub const ASSUMPTION_GENERATORS: &str =
    "supplied target generators generate the target toric ideal up to radical: trusted input \
     (membership and kernel span verified)";

/// Runs both conditions. Preconditions (projection, membership, binomial
/// shape, kernel span of the supplied target generators) are checked first
/// and reported as errors naming the offending input.
pub fn radical_criterion(
    n: &IntMat,
    m: &IntMat,
    gens_im: &[Poly],
    fs: &[Poly],
    opts: &CriterionOptions,
) -> Result<CriterionReport> {
    if n.cols() != m.cols() {
        return Err(dim_err(format!("base has {} columns, target has {}", n.cols(), m.cols())));
    }
    if let Some(g) = gens_im.iter().chain(fs).find(|g| g.nvars() != n.cols()) {
        return Err(dim_err(format!("{g} has {} variables, expected {}", g.nvars(), n.cols())));
    }
    if !n.is_nonnegative() {
        return Err(Error::Precondition("base matrix must have non-negative entries".into()));
    }
    let phi = MonomialMap::polynomial(n)?;
    if !is_projection(n, m)?.holds() {
        return Err(Error::Precondition(
            "the target toric ideal is not a projection of the base toric ideal".into(),
        ));
    }
    let target = presentation(m)?;
    for (name, list) in [("target generator", gens_im), ("binomial", fs)] {
        for (k, g) in list.iter().enumerate() {
            if g.as_pure_binomial().is_none() {
                return Err(Error::Precondition(format!("{name} #{} ({g}) is not a binomial x^u - x^v", k + 1)));
            }
            if !target.contains_polynomial(g)? {
                return Err(Error::Precondition(format!(
                    "{name} #{} ({g}) does not lie in the target toric ideal",
                    k + 1
                )));
            }
        }
    }
    let gen_span = Lattice::from_generators(
        m.cols(),
        gens_im.iter().map(|g| g.binomial_vector().expect("checked binomial").0),
    )?;
    if &gen_span != target.kernel() {
        return Err(Error::Precondition(
            "target generators do not span the kernel lattice of the target matrix".into(),
        ));
    }

    let mut assumptions = vec![
        if diagonal_block_columns(n).is_some() { ASSUMPTION_SHAPE_VERIFIED } else { ASSUMPTION_SHAPE_UNVERIFIED }
            .to_string(),
        ASSUMPTION_GENERATORS.to_string(),
    ];
    let characteristic = opts.characteristic();
    if let Characteristic::Prime(p) = characteristic {
        assumptions.push(format!("characteristic {p}: lattice condition uses the {p}-saturation"));
    }

    let condition_a = lattice_condition(n, m, fs, characteristic)?;

    let images = |list: &[Poly]| -> Result<Vec<Poly>> {
        Ok(list.iter().map(|g| phi.apply(g)).collect::<Result<Vec<_>>>()?.into_iter().filter(|g| !g.is_zero()).collect())
    };
    let im_gens = images(gens_im)?;
    let im_fs = images(fs)?;
    let l = n.rows();
    let condition_b = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..l)
            .map(|i| {
                let (im_gens, im_fs, cfg) = (&im_gens, &im_fs, &opts.falsifier);
                scope.spawn(move || variable_condition(im_gens, im_fs, l, i, cfg))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("variable check panicked")).collect::<Result<Vec<_>>>()
    })?;

    let overall = if condition_a.verdict == Verdict::Fails || condition_b.iter().any(|c| c.verdict == Verdict::Fails) {
        Verdict::Fails
    } else if condition_a.verdict == Verdict::Holds && condition_b.iter().all(|c| c.verdict == Verdict::Holds) {
        Verdict::Holds
    } else {
        Verdict::Indeterminate
    };
    Ok(CriterionReport { characteristic, condition_a, condition_b, overall, assumptions })
}

fn lattice_condition(n: &IntMat, m: &IntMat, fs: &[Poly], characteristic: Characteristic) -> Result<ConditionA> {
    let image = image_lattice(n, m)?;
    let generated = Lattice::from_generators(
        n.rows(),
        fs.iter()
            .map(|f| n.mul_vec(&f.binomial_vector().expect("checked binomial").0))
            .collect::<Result<Vec<_>>>()?,
    )?;
    let k = match characteristic {
        Characteristic::Zero => (generated == image).then_some(0),
        Characteristic::Prime(p) => p_saturation_index(&image, &generated, p)?,
    };
    let verdict = if k.is_some() { Verdict::Holds } else { Verdict::Fails };
    Ok(ConditionA { verdict, k, image_lattice: image, generated_lattice: generated })
}

fn same_up_to_sign(a: &Poly, b: &Poly) -> bool {
    a == b || *a == -b
}

fn variable_condition(
    im_gens: &[Poly],
    im_fs: &[Poly],
    l: usize,
    i: usize,
    cfg: &FalsifierConfig,
) -> Result<VariableCheck> {
    let check = |verdict, method: &str, witness| VariableCheck { var: i + 1, verdict, method: method.into(), witness };
    // The target images always vanish wherever the binomial images do, so
    // containment of generator sets already gives equal zero sets.
    if im_gens.iter().all(|g| im_fs.iter().any(|f| same_up_to_sign(g, f))) {
        return Ok(check(Verdict::Holds, "generator-containment", None));
    }
    let full = ZeroPattern::from_indices(0..l);
    let only_origin = |gens: &[Poly]| -> Option<bool> {
        zero_pattern_set(gens, l, i).ok().map(|pats| pats.is_empty() || pats == [full.clone()])
    };
    if let (Some(true), Some(true)) = (only_origin(im_gens), only_origin(im_fs)) {
        let gens_pats = zero_pattern_set(im_gens, l, i)?;
        let fs_pats = zero_pattern_set(im_fs, l, i)?;
        if gens_pats == fs_pats {
            return Ok(check(Verdict::Holds, "origin-only", None));
        }
    }
    let mut with_ti_a = im_gens.to_vec();
    let mut with_ti_b = im_fs.to_vec();
    with_ti_a.push(Poly::var(l, i));
    with_ti_b.push(Poly::var(l, i));
    for &q in &cfg.primes {
        if let Some(point) = finite_field_falsifier(&with_ti_a, &with_ti_b, q, cfg)? {
            return Ok(check(Verdict::Fails, "finite-field witness", Some(FieldWitness { prime: q, point })));
        }
    }
    Ok(check(Verdict::Indeterminate, "no witness found", None))
}
