use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::series::{add_c, mul_c, Coeff, Series};
use crate::error::{invalid, Error, Result};

/// Exponents of `a^i b^j c^k d^l`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(pub [u32; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0, 0]);
    pub const A: Monomial = Monomial([1, 0, 0, 0]);
    pub const B: Monomial = Monomial([0, 1, 0, 0]);
    pub const C: Monomial = Monomial([0, 0, 1, 0]);
    pub const D: Monomial = Monomial([0, 0, 0, 1]);
    /// `Q = abcd`.
    pub const Q: Monomial = Monomial([1, 1, 1, 1]);

    pub fn degree(self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Monomial) -> Monomial {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0) {
            *x += y;
        }
        Monomial(e)
    }

    pub fn pow(self, n: u32) -> Monomial {
        Monomial(self.0.map(|e| e * n))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Monomial::ONE {
            return f.write_str("1");
        }
        for (v, &e) in ["a", "b", "c", "d"].iter().zip(&self.0) {
            match e {
                0 => {}
                1 => f.write_str(v)?,
                _ => write!(f, "{v}^{e}")?,
            }
        }
        Ok(())
    }
}

type Grade = BTreeMap<Monomial, Coeff>;

/// A power series in `a, b, c, d` truncated at total degree `order`.
///
/// Terms are kept bucketed by total degree; zero coefficients are pruned.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "RawMSeries", try_from = "RawMSeries")]
pub struct MSeries {
    order: usize,
    grades: Vec<Grade>,
}

#[derive(Serialize, Deserialize)]
struct RawMSeries {
    order: usize,
    terms: Vec<(Monomial, Coeff)>,
}

impl From<MSeries> for RawMSeries {
    fn from(m: MSeries) -> Self {
        RawMSeries { order: m.order, terms: m.terms().into_iter().collect() }
    }
}

impl TryFrom<RawMSeries> for MSeries {
    type Error = Error;

    fn try_from(raw: RawMSeries) -> Result<Self> {
        let mut m = MSeries::zero(raw.order);
        for (mono, c) in raw.terms {
            if mono.degree() > raw.order {
                return Err(invalid("multivariate series", format!("term {mono} exceeds order {}", raw.order)));
            }
            m.add_term(mono, c)?;
        }
        Ok(m)
    }
}

impl MSeries {
    pub fn zero(order: usize) -> Self {
        Self { order, grades: vec![Grade::new(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, Monomial::ONE, 1)
    }

    pub fn monomial(order: usize, mono: Monomial, coeff: Coeff) -> Self {
        let mut m = Self::zero(order);
        m.add_term(mono, coeff).expect("a single term cannot overflow");
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Adds `c·mono`; terms past the order are dropped.
    pub fn add_term(&mut self, mono: Monomial, c: Coeff) -> Result<()> {
        let deg = mono.degree();
        if deg > self.order || c == 0 {
            return Ok(());
        }
        add_into(&mut self.grades[deg], mono, c)
    }

    pub fn coeff(&self, mono: Monomial) -> Coeff {
        self.grades
            .get(mono.degree())
            .and_then(|g| g.get(&mono))
            .copied()
            .unwrap_or(0)
    }

    /// Nonzero terms sorted lexicographically by exponent.
    pub fn terms(&self) -> BTreeMap<Monomial, Coeff> {
        self.grades.iter().flat_map(|g| g.iter().map(|(&m, &c)| (m, c))).collect()
    }

    /// Nonzero terms ordered by total degree, then lexicographically.
    pub fn graded_terms(&self) -> impl Iterator<Item = (Monomial, Coeff)> + '_ {
        self.grades.iter().flat_map(|g| g.iter().map(|(&m, &c)| (m, c)))
    }

    pub fn len(&self) -> usize {
        self.grades.iter().map(BTreeMap::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Self { order, grades: self.grades[..=order].to_vec() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.truncate(other.order);
        for (mono, c) in other.graded_terms() {
            out.add_term(mono, c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: Coeff) -> Result<Self> {
        let mut out = Self::zero(self.order);
        for (mono, x) in self.graded_terms() {
            out.add_term(mono, mul_c(x, c)?)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Result<Self> {
        self.scale(-1)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg()?)
    }

    /// Product truncated at total degree `min(order)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let order = self.order.min(other.order);
        let mut out = Self::zero(order);
        for (da, ga) in self.grades.iter().enumerate().take(order + 1) {
            for (db, gb) in other.grades.iter().enumerate().take(order + 1 - da) {
                for (&ma, &ca) in ga {
                    for (&mb, &cb) in gb {
                        add_into(&mut out.grades[da + db], ma.mul(mb), mul_c(ca, cb)?)?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse; the constant term must be `±1`.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeff(Monomial::ONE);
        if c0 != 1 && c0 != -1 {
            return Err(Error::NonUnitConstant(c0));
        }
        let mut inv = Self::monomial(self.order, Monomial::ONE, c0);
        for d in 1..=self.order {
            let mut acc = Grade::new();
            for i in 1..=d {
                for (&mf, &cf) in &self.grades[i] {
                    for (&mg, &cg) in &inv.grades[d - i] {
                        add_into(&mut acc, mf.mul(mg), mul_c(cf, cg)?)?;
                    }
                }
            }
            for (mono, c) in acc {
                add_into(&mut inv.grades[d], mono, mul_c(-c, c0)?)?;
            }
        }
        Ok(inv)
    }

    /// Multiplies in place by `1 + c·x` for a monomial `x` of positive degree.
    pub fn mul_binomial(&mut self, c: Coeff, x: Monomial) -> Result<()> {
        let k = x.degree();
        if k == 0 {
            return Err(invalid("binomial factor", "degree-0 factor"));
        }
        for d in (k..=self.order).rev() {
            let src: Vec<_> = self.grades[d - k].iter().map(|(&m, &v)| (m, v)).collect();
            for (m, v) in src {
                add_into(&mut self.grades[d], m.mul(x), mul_c(c, v)?)?;
            }
        }
        Ok(())
    }

    /// Divides in place by `1 - c·x` with `c = ±1`.
    pub fn div_binomial(&mut self, c: Coeff, x: Monomial) -> Result<()> {
        let k = x.degree();
        if k == 0 {
            return Err(invalid("binomial factor", "degree-0 factor"));
        }
        for d in k..=self.order {
            let src: Vec<_> = self.grades[d - k].iter().map(|(&m, &v)| (m, v)).collect();
            for (m, v) in src {
                add_into(&mut self.grades[d], m.mul(x), mul_c(c, v)?)?;
            }
        }
        Ok(())
    }

    /// Highest q-order at which substituting `a -> q^{e_a}`, ... is exact.
    ///
    /// With every exponent positive a term of total degree above `order` maps
    /// past `q^order`. When some variable maps to `q^0`, exactness needs every
    /// monomial to satisfy `total degree <= 2 · q-degree` (true for the
    /// four-decorated generating functions under the substitutions
    /// `(q,q,1,1)` and `(q,1,q,1)`); the valid order is then `order / 2`.
    pub fn specialization_validity(&self, exps: [u32; 4]) -> usize {
        if exps.iter().all(|&e| e > 0) {
            self.order
        } else {
            self.order / 2
        }
    }

    /// Substitutes `a -> q^{exps[0]}`, `b -> q^{exps[1]}`, ... and truncates
    /// at q-order `order`.
    pub fn specialize(&self, exps: [u32; 4], order: usize) -> Result<Series> {
        let valid = self.specialization_validity(exps);
        if order > valid {
            return Err(Error::OrderBeyondValidity { requested: order, valid });
        }
        let gated = exps.contains(&0);
        let mut out = Series::zero(order);
        for (mono, c) in self.graded_terms() {
            let qdeg: usize = mono.0.iter().zip(exps).map(|(&i, e)| (i * e) as usize).sum();
            if gated && mono.degree() > 2 * qdeg {
                return Err(invalid(
                    "specialization",
                    format!("term {mono} breaks the degree bound needed for a unit substitution"),
                ));
            }
            out.add_at(qdeg, c)?;
        }
        Ok(out)
    }
}

fn add_into(grade: &mut Grade, mono: Monomial, c: Coeff) -> Result<()> {
    if c == 0 {
        return Ok(());
    }
    let slot = grade.entry(mono).or_insert(0);
    *slot = add_c(*slot, c)?;
    if *slot == 0 {
        grade.remove(&mono);
    }
    Ok(())
}
