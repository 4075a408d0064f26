//! Sparse multivariate polynomials with integer coefficients, binomials, and
//! monomial substitution maps.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{dim_err, Error, Result};
use crate::linalg::{ExponentVector, IntMat};

/// Graded reverse order used for display and serialization: higher total
/// degree first, ties broken lexicographically (larger first).
pub fn glex_cmp(a: &ExponentVector, b: &ExponentVector) -> Ordering {
    b.total().cmp(&a.total()).then_with(|| b.cmp(a))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(ExponentVector::zeros(nvars), c.into());
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn monomial(exps: ExponentVector, coef: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, coef.into());
        p
    }

    /// The variable `x_{index+1}`.
    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = ExponentVector::zeros(nvars);
        e.0[index] = BigInt::one();
        Self::monomial(e, 1)
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, BigInt)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(dim_err(format!(
                    "exponent vector of length {} in a polynomial in {nvars} variables",
                    e.len()
                )));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: ExponentVector, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in display order (see [`glex_cmp`]).
    pub fn terms_glex(&self) -> Vec<(&ExponentVector, &BigInt)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| glex_cmp(a.0, b.0));
        t
    }

    pub fn coefficient(&self, e: &ExponentVector) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn has_nonnegative_exponents(&self) -> bool {
        self.terms.keys().all(ExponentVector::is_nonnegative)
    }

    /// Exact `e`-th power by square-and-multiply.
    pub fn power(&self, mut e: u32) -> Poly {
        let mut result = Poly::one(self.nvars);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Returns the two monomials `(u, v)` when `self = x^u − x^v` with
    /// coefficients exactly `+1` and `−1`. The supports of `u` and `v` may
    /// overlap.
    pub fn as_pure_binomial(&self) -> Option<(ExponentVector, ExponentVector)> {
        if self.terms.len() != 2 {
            return None;
        }
        let mut it = self.terms.iter();
        let (e1, c1) = it.next()?;
        let (e2, c2) = it.next()?;
        let one = BigInt::one();
        if *c1 == one && *c2 == -&one {
            Some((e1.clone(), e2.clone()))
        } else if *c2 == one && *c1 == -&one {
            Some((e2.clone(), e1.clone()))
        } else {
            None
        }
    }

    /// The exponent difference `u − v` of a pure binomial `x^u − x^v`.
    pub fn binomial_vector(&self) -> Option<ExponentVector> {
        self.as_pure_binomial().map(|(u, v)| u.sub(&v))
    }

    /// Human-readable form using `name` as the variable prefix (`x1`, `t2`, …).
    pub fn display_with(&self, name: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms_glex().into_iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            let factors: Vec<String> = e
                .0
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| {
                    if x.is_one() {
                        format!("{name}{}", i + 1)
                    } else {
                        format!("{name}{}^{x}", i + 1)
                    }
                })
                .collect();
            if factors.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push(' ');
                }
                out.push_str(&factors.join(" "));
            }
        }
        out
    }

    /// Parses text such as `x4^7 - 3 x1 x2 x4^4 x5^2 + x1^5`. Variables are a
    /// letter prefix followed by a 1-based index; `*` between factors is
    /// optional. Negative exponents are written `x1^-2`.
    pub fn parse(text: &str, nvars: usize) -> Result<Poly> {
        Parser { s: text.as_bytes(), pos: 0, nvars }.poly()
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_whitespace() || self.s[self.pos] == b'*') {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!(
            "{msg} at byte {} of {:?}",
            self.pos,
            String::from_utf8_lossy(self.s)
        ))
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn poly(&mut self) -> Result<Poly> {
        let mut p = Poly::zero(self.nvars);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                None if first => return Err(self.err("empty polynomial")),
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    BigInt::one()
                }
                Some(b'-') => {
                    self.pos += 1;
                    -BigInt::one()
                }
                Some(_) if first => BigInt::one(),
                Some(_) => return Err(self.err("expected '+' or '-'")),
            };
            first = false;
            let (e, c) = self.term()?;
            p.add_term(e, sign * c);
        }
        Ok(p)
    }

    fn term(&mut self) -> Result<(ExponentVector, BigInt)> {
        let mut coef = BigInt::one();
        let mut exps = ExponentVector::zeros(self.nvars);
        let mut seen = false;
        while let Some(ch) = self.peek() {
            if ch.is_ascii_digit() {
                let d: BigInt = self.digits().expect("digit").parse().expect("digits parse");
                coef *= d;
            } else if ch.is_ascii_alphabetic() {
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphabetic() {
                    self.pos += 1;
                }
                let idx = self.digits().ok_or_else(|| self.err("variable without index"))?;
                let idx: usize = idx.parse().map_err(|_| self.err("bad variable index"))?;
                if idx == 0 || idx > self.nvars {
                    return Err(self.err(&format!("variable index {idx} outside 1..={}", self.nvars)));
                }
                let mut power = BigInt::one();
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    let neg = self.peek() == Some(b'-');
                    if neg {
                        self.pos += 1;
                    }
                    self.skip_ws();
                    let digits = self.digits().ok_or_else(|| self.err("missing exponent"))?;
                    power = digits.parse().expect("digits");
                    if neg {
                        power = -power;
                    }
                }
                exps.0[idx - 1] += power;
            } else {
                break;
            }
            seen = true;
        }
        if !seen {
            return Err(self.err("expected a term"));
        }
        Ok((exps, coef))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "polynomials in different rings");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "polynomials in different rings");
        let mut acc: HashMap<ExponentVector, BigInt> = HashMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                *acc.entry(e1.add(e2)).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        Poly {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

/// A pure binomial `t^plus − t^minus` with disjoint supports.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Binomial {
    plus: ExponentVector,
    minus: ExponentVector,
}

impl Binomial {
    pub fn new(plus: ExponentVector, minus: ExponentVector) -> Result<Self> {
        if plus.len() != minus.len() {
            return Err(dim_err("binomial monomials of different lengths"));
        }
        if !plus.is_nonnegative() || !minus.is_nonnegative() {
            return Err(Error::Input("binomial exponents must be non-negative".into()));
        }
        if plus.0.iter().zip(&minus.0).any(|(a, b)| !a.is_zero() && !b.is_zero()) {
            return Err(Error::Input("binomial monomials must have disjoint support".into()));
        }
        Ok(Binomial { plus, minus })
    }

    /// `F(z) = t^{z₊} − t^{z₋}`.
    pub fn from_vector(z: &ExponentVector) -> Self {
        let (plus, minus) = z.split();
        Binomial { plus, minus }
    }

    /// Reads a pure binomial polynomial; the zero polynomial maps to the zero
    /// binomial.
    pub fn from_poly(p: &Poly) -> Result<Self> {
        if p.is_zero() {
            return Ok(Self::from_vector(&ExponentVector::zeros(p.nvars())));
        }
        let (u, v) = p
            .as_pure_binomial()
            .ok_or_else(|| Error::Input(format!("{p} is not of the form t^u - t^v")))?;
        Self::new(u, v)
    }

    pub fn plus(&self) -> &ExponentVector {
        &self.plus
    }

    pub fn minus(&self) -> &ExponentVector {
        &self.minus
    }

    pub fn nvars(&self) -> usize {
        self.plus.len()
    }

    pub fn vector(&self) -> ExponentVector {
        self.plus.sub(&self.minus)
    }

    pub fn to_poly(&self) -> Poly {
        let mut p = Poly::monomial(self.plus.clone(), 1);
        p.add_term(self.minus.clone(), -BigInt::one());
        p
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_poly().display_with("t"))
    }
}

/// `F(z)`: the binomial attached to an integer vector.
pub fn binomial_from_vector(z: &ExponentVector) -> Binomial {
    Binomial::from_vector(z)
}

/// The substitution `x_i ↦ t^{b_i}` given by the columns of a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMap {
    columns: Vec<ExponentVector>,
    target_vars: usize,
    laurent: bool,
}

impl MonomialMap {
    /// Polynomial-ring map: entries must be non-negative and every column
    /// nonzero.
    pub fn polynomial(m: &IntMat) -> Result<Self> {
        if !m.is_nonnegative() {
            return Err(Error::Input("substitution matrix has negative entries".into()));
        }
        if let Some(&j) = m.zero_columns().first() {
            return Err(Error::Input(format!("column {} of the substitution matrix is zero", j + 1)));
        }
        Ok(MonomialMap { columns: m.columns(), target_vars: m.rows(), laurent: false })
    }

    /// Laurent map: any integer entries.
    pub fn laurent(m: &IntMat) -> Self {
        MonomialMap { columns: m.columns(), target_vars: m.rows(), laurent: true }
    }

    pub fn is_laurent(&self) -> bool {
        self.laurent
    }

    pub fn source_vars(&self) -> usize {
        self.columns.len()
    }

    pub fn target_vars(&self) -> usize {
        self.target_vars
    }

    pub fn image_of_exponent(&self, e: &ExponentVector) -> ExponentVector {
        let mut out = ExponentVector::zeros(self.target_vars);
        for (k, col) in e.0.iter().zip(&self.columns) {
            if k.is_zero() {
                continue;
            }
            for (o, c) in out.0.iter_mut().zip(&col.0) {
                *o += k * c;
            }
        }
        out
    }

    pub fn apply(&self, p: &Poly) -> Result<Poly> {
        if p.nvars() != self.columns.len() {
            return Err(dim_err(format!(
                "polynomial in {} variables under a map from {} variables",
                p.nvars(),
                self.columns.len()
            )));
        }
        if !self.laurent && !p.has_nonnegative_exponents() {
            return Err(Error::Input("negative exponents need a Laurent map".into()));
        }
        let mut acc: HashMap<ExponentVector, BigInt> = HashMap::new();
        for (e, c) in p.terms() {
            *acc.entry(self.image_of_exponent(e)).or_insert_with(BigInt::zero) += c;
        }
        Poly::from_terms(self.target_vars, acc)
    }
}

pub fn apply_map(m: &MonomialMap, p: &Poly) -> Result<Poly> {
    m.apply(p)
}

/// The common A-degree `Σ u_i a_i` of all terms, or `None` when the terms
/// disagree. The zero polynomial has degree zero by convention.
pub fn a_degree_check(a: &IntMat, p: &Poly) -> Result<Option<ExponentVector>> {
    if a.cols() != p.nvars() {
        return Err(dim_err(format!(
            "grading matrix has {} columns, polynomial has {} variables",
            a.cols(),
            p.nvars()
        )));
    }
    let grading = MonomialMap::laurent(a);
    let mut degrees = p.terms().map(|(e, _)| grading.image_of_exponent(e));
    let Some(first) = degrees.next() else {
        return Ok(Some(ExponentVector::zeros(a.rows())));
    };
    Ok(degrees.all(|d| d == first).then_some(first))
}
