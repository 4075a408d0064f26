//! JSON encodings. Arbitrary-precision values travel as decimal strings;
//! plain JSON integers are accepted on input.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::lattice::Lattice;
use crate::linalg::{ExponentVector, IntMat, RatMat};
use crate::poly::{Binomial, Poly};
use crate::stci::{PowerIdentity, StciCertificate, Transcript};

/// A big integer on the wire.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dec(pub BigInt);

impl Serialize for Dec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawInt {
    Str(String),
    Signed(i64),
    Unsigned(u64),
}

impl<'de> Deserialize<'de> for Dec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match RawInt::deserialize(d)? {
            RawInt::Str(s) => s
                .trim()
                .parse::<BigInt>()
                .map(Dec)
                .map_err(|_| de::Error::custom(format!("{s:?} is not an integer"))),
            RawInt::Signed(x) => Ok(Dec(x.into())),
            RawInt::Unsigned(x) => Ok(Dec(x.into())),
        }
    }
}

fn decs(v: &[BigInt]) -> Vec<Dec> {
    v.iter().cloned().map(Dec).collect()
}

fn ints(v: Vec<Dec>) -> Vec<BigInt> {
    v.into_iter().map(|d| d.0).collect()
}

impl Serialize for ExponentVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        decs(&self.0).serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExponentVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(ExponentVector(ints(Vec::<Dec>::deserialize(d)?)))
    }
}

#[derive(Serialize, Deserialize)]
struct MatWire<T> {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<T>>,
}

impl Serialize for IntMat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatWire { rows: self.rows(), cols: self.cols(), entries: self.row_vectors().iter().map(|r| decs(r)).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = MatWire::<Dec>::deserialize(d)?;
        if w.entries.len() != w.rows {
            return Err(de::Error::custom(format!("matrix declares {} rows but lists {}", w.rows, w.entries.len())));
        }
        IntMat::from_rows(w.cols, w.entries.into_iter().map(ints).collect()).map_err(de::Error::custom)
    }
}

impl Serialize for RatMat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let entries = self
            .entries()
            .chunks(self.cols().max(1))
            .take(self.rows())
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        MatWire::<String> { rows: self.rows(), cols: self.cols(), entries }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatMat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = MatWire::<String>::deserialize(d)?;
        if w.entries.len() != w.rows || w.entries.iter().any(|r| r.len() != w.cols) {
            return Err(de::Error::custom("ragged rational matrix"));
        }
        let entries = w
            .entries
            .iter()
            .flatten()
            .map(|x| x.trim().parse::<BigRational>().map_err(|_| de::Error::custom(format!("bad rational {x:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        RatMat::new(w.rows, w.cols, entries).map_err(de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct LatticeWire {
    ambient: usize,
    basis: Vec<Vec<Dec>>,
}

impl Serialize for Lattice {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        LatticeWire { ambient: self.ambient_dim(), basis: self.basis().row_vectors().iter().map(|r| decs(r)).collect() }
            .serialize(s)
    }
}

/// Any generating set is accepted; the result is canonical.
impl<'de> Deserialize<'de> for Lattice {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = LatticeWire::deserialize(d)?;
        Lattice::from_generators(w.ambient, w.basis.into_iter().map(ints)).map_err(de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    c: Dec,
    e: ExponentVector,
}

#[derive(Serialize, Deserialize)]
struct PolyWire {
    vars: usize,
    terms: Vec<TermWire>,
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms =
            self.terms_glex().into_iter().map(|(e, c)| TermWire { c: Dec(c.clone()), e: e.clone() }).collect();
        PolyWire { vars: self.nvars(), terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = PolyWire::deserialize(d)?;
        Poly::from_terms(w.vars, w.terms.into_iter().map(|t| (t.e, t.c.0))).map_err(de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct BinomialWire {
    plus: ExponentVector,
    minus: ExponentVector,
}

impl Serialize for Binomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        BinomialWire { plus: self.plus().clone(), minus: self.minus().clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Binomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = BinomialWire::deserialize(d)?;
        Binomial::new(w.plus, w.minus).map_err(de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct IdentityWire {
    binomial: Binomial,
    power: u32,
    delta: usize,
    /// Copy of the delta polynomial, so the identity reads on its own.
    poly: Poly,
}

#[derive(Serialize, Deserialize)]
struct CertificateWire {
    label: String,
    base: IntMat,
    target: IntMat,
    base_gens: Vec<Poly>,
    deltas: Vec<Poly>,
    identities: Vec<IdentityWire>,
    s: usize,
    #[serde(default)]
    lattice_generator: Option<ExponentVector>,
    #[serde(default)]
    w: Option<Dec>,
    #[serde(default)]
    transcript: Option<Transcript>,
}

impl Serialize for StciCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let identities = self
            .identities
            .iter()
            .map(|i| {
                let poly = self.deltas.get(i.delta).cloned().ok_or_else(|| {
                    serde::ser::Error::custom(format!("identity names missing delta {}", i.delta))
                })?;
                Ok(IdentityWire { binomial: i.binomial.clone(), power: i.power, delta: i.delta, poly })
            })
            .collect::<Result<Vec<_>, S::Error>>()?;
        CertificateWire {
            label: self.label.clone(),
            base: self.base.clone(),
            target: self.target.clone(),
            base_gens: self.base_gens.clone(),
            deltas: self.deltas.clone(),
            identities,
            s: self.s,
            lattice_generator: self.lattice_generator.clone(),
            w: self.w.clone().map(Dec),
            transcript: self.transcript.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for StciCertificate {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = CertificateWire::deserialize(d)?;
        let mut identities = Vec::with_capacity(w.identities.len());
        for (k, i) in w.identities.into_iter().enumerate() {
            if w.deltas.get(i.delta) != Some(&i.poly) {
                return Err(de::Error::custom(format!(
                    "identity {} carries a polynomial different from delta {}",
                    k + 1,
                    i.delta + 1
                )));
            }
            identities.push(PowerIdentity { binomial: i.binomial, power: i.power, delta: i.delta });
        }
        Ok(StciCertificate {
            label: w.label,
            base: w.base,
            target: w.target,
            base_gens: w.base_gens,
            deltas: w.deltas,
            identities,
            s: w.s,
            lattice_generator: w.lattice_generator,
            w: w.w.map(|d| d.0),
            transcript: w.transcript,
        })
    }
}
