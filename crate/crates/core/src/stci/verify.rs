//! Total re-verification of a certificate. Nothing here throws: every
//! failure becomes a failed check with a reason.

use serde::{Deserialize, Serialize};

use super::{compute_w, StciCertificate};
use crate::error::Result;
use crate::lattice::{image_lattice, Lattice};
use crate::linalg::kernel_basis;
use crate::poly::{a_degree_check, MonomialMap};
use crate::toric::{is_projection, presentation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: u32,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    pub checks: Vec<CheckResult>,
    pub verified: bool,
}

type Outcome = Result<(bool, String)>;

fn record(checks: &mut Vec<CheckResult>, id: u32, name: &str, outcome: Outcome) {
    let (passed, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
    checks.push(CheckResult { id, name: name.into(), passed, detail });
}

pub fn verify_certificate(cert: &StciCertificate) -> Transcript {
    let mut checks = Vec::with_capacity(6);
    record(&mut checks, 1, "projection", projection(cert));
    record(&mut checks, 2, "membership", membership(cert));
    record(&mut checks, 3, "height difference", heights(cert));
    record(&mut checks, 4, "image lattice", lattices(cert));
    record(&mut checks, 5, "power identities", identities(cert));
    record(&mut checks, 6, "homogeneity", homogeneity(cert));
    let verified = checks.iter().all(|c| c.passed);
    Transcript { checks, verified }
}

fn projection(cert: &StciCertificate) -> Outcome {
    let report = is_projection(&cert.base, &cert.target)?;
    if !report.consistent() {
        return Ok((false, "lattice test and rational factorisation disagree".into()));
    }
    Ok(match &report.witness {
        Some(d) => (report.holds(), format!("D = {d}")),
        None => (false, "target kernel does not contain base kernel".into()),
    })
}

fn membership(cert: &StciCertificate) -> Outcome {
    let base = presentation(&cert.base)?;
    let target = presentation(&cert.target)?;
    for (i, g) in cert.base_gens.iter().enumerate() {
        if !base.contains_polynomial(g)? {
            return Ok((false, format!("base generator {} ({g}) is not in the base ideal", i + 1)));
        }
    }
    for (i, f) in cert.deltas.iter().enumerate() {
        if !target.contains_polynomial(f)? {
            return Ok((false, format!("delta {} is not in the target ideal", i + 1)));
        }
    }
    Ok((true, format!("{} base generators, {} deltas", cert.base_gens.len(), cert.deltas.len())))
}

fn heights(cert: &StciCertificate) -> Outcome {
    let hn = kernel_basis(&cert.base).rank();
    let hm = kernel_basis(&cert.target).rank();
    let diff = hm.checked_sub(hn);
    let passed = diff == Some(cert.s) && cert.deltas.len() == cert.s;
    Ok((passed, format!("ht(target) = {hm}, ht(base) = {hn}, s = {}, deltas = {}", cert.s, cert.deltas.len())))
}

fn lattices(cert: &StciCertificate) -> Outcome {
    let image = image_lattice(&cert.base, &cert.target)?;
    let Some(d) = is_projection(&cert.base, &cert.target)?.witness else {
        return Ok((false, "no rational factor".into()));
    };
    let l = kernel_basis(&d.clear_denominators());
    let zb = Lattice::from_matrix_rows(&cert.base.transpose());
    if l.intersect(&zb)? != image {
        return Ok((false, "image lattice differs from L ∩ ZB".into()));
    }
    if image.rank() != cert.s {
        return Ok((false, format!("image lattice has rank {}, expected {}", image.rank(), cert.s)));
    }
    let mut detail = format!("image lattice basis {}", image.basis());
    if l.rank() == 1 {
        let a = l.basis_vectors().remove(0);
        let w = compute_w(&cert.base, &a)?;
        if Lattice::from_generators(a.len(), [a.scale(&w)])? != image {
            return Ok((false, format!("image lattice is not <w·a> with w = {w}")));
        }
        if let Some(given) = &cert.lattice_generator {
            if Lattice::from_generators(a.len(), [given.clone()])? != l {
                return Ok((false, format!("stated generator {given} does not span L")));
            }
        }
        if let Some(given) = &cert.w {
            if given != &w {
                return Ok((false, format!("stated w = {given}, computed {w}")));
            }
        }
        detail.push_str(&format!(", w = {w}"));
    }
    let ids = Lattice::from_generators(image.ambient_dim(), cert.identities.iter().map(|i| i.binomial.vector()))?;
    if ids != image {
        return Ok((false, "identity binomials do not generate the image lattice".into()));
    }
    Ok((true, detail))
}

fn identities(cert: &StciCertificate) -> Outcome {
    let phi = MonomialMap::laurent(&cert.base);
    let mut covered = vec![false; cert.deltas.len()];
    for (k, id) in cert.identities.iter().enumerate() {
        let Some(f) = cert.deltas.get(id.delta) else {
            return Ok((false, format!("identity {} names missing delta {}", k + 1, id.delta + 1)));
        };
        if id.binomial.to_poly().power(id.power) != phi.apply(f)? {
            return Ok((false, format!("({})^{} differs from φ(delta {})", id.binomial, id.power, id.delta + 1)));
        }
        covered[id.delta] = true;
    }
    if let Some(i) = covered.iter().position(|c| !c) {
        return Ok((false, format!("delta {} has no identity", i + 1)));
    }
    Ok((true, format!("{} identities expanded exactly", cert.identities.len())))
}

fn homogeneity(cert: &StciCertificate) -> Outcome {
    let mut degrees = Vec::new();
    for (i, f) in cert.deltas.iter().enumerate() {
        match a_degree_check(&cert.target, f)? {
            Some(d) => degrees.push(d.to_string()),
            None => return Ok((false, format!("delta {} is not homogeneous", i + 1))),
        }
    }
    Ok((true, format!("degrees {}", degrees.join(", "))))
}
