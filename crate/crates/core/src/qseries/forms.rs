//! Named product sides, sum sides and the four-decorated generating
//! functions, each expanded directly from its q-series formula.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::multi::{MSeries, Monomial};
use super::pochhammer::{m_apply, pochhammer, pochhammer_inverse, Length, PochSpec};
use super::series::Series;
use crate::error::{invalid, unknown, Result};

/// `(M, k, m)` for the parts-count / smallest-part / gap family.
/// `parts = None` stands for `M = ∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilyParams {
    pub parts: Option<u32>,
    pub smallest: u32,
    pub gap: u32,
}

impl FamilyParams {
    pub fn new(parts: Option<u32>, smallest: u32, gap: u32) -> Self {
        Self { parts, smallest, gap }
    }

    /// `m·C(i,2) + k·i`.
    pub fn exponent(&self, i: u32) -> usize {
        let i = i as usize;
        self.gap as usize * (i * i.saturating_sub(1) / 2) + self.smallest as usize * i
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parts {
            Some(m) => write!(f, "M={m},k={},m={}", self.smallest, self.gap),
            None => write!(f, "M=inf,k={},m={}", self.smallest, self.gap),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ProductForm {
    /// `1/(q;q)_∞`
    EulerInverse,
    /// `1/(q;q^2)_∞`
    OddParts,
    /// `(-q;q)_∞`
    Distinct,
    /// `1/(q,q^4;q^5)_∞`
    Rr1Product,
    /// `1/(q^2,q^3;q^5)_∞`
    Rr2Product,
    /// `(-q;q)_∞^2`
    DistinctSq,
    /// `1/(q;q)_∞^2`
    UnrestrictedSq,
    /// `q^{m·C(M,2)+kM} / (q;q)_M^2`
    FiniteRhs { parts: u32, smallest: u32, gap: u32 },
}

impl ProductForm {
    pub fn name(&self) -> &'static str {
        match self {
            ProductForm::EulerInverse => "euler_inverse",
            ProductForm::OddParts => "odd_parts",
            ProductForm::Distinct => "distinct",
            ProductForm::Rr1Product => "rr1_product",
            ProductForm::Rr2Product => "rr2_product",
            ProductForm::DistinctSq => "distinct_sq",
            ProductForm::UnrestrictedSq => "unrestricted_sq",
            ProductForm::FiniteRhs { .. } => "finite_rhs",
        }
    }

    pub fn expand(&self, order: usize) -> Result<Series> {
        let inf = |sign, base, modulus| PochSpec::infinite(sign, base, modulus);
        match *self {
            ProductForm::EulerInverse => pochhammer_inverse(&inf(1, 1, 1), order),
            ProductForm::OddParts => pochhammer_inverse(&inf(1, 1, 2), order),
            ProductForm::Distinct => pochhammer(&inf(-1, 1, 1), order),
            ProductForm::Rr1Product => {
                pochhammer_inverse(&inf(1, 1, 5), order)?.mul(&pochhammer_inverse(&inf(1, 4, 5), order)?)
            }
            ProductForm::Rr2Product => {
                pochhammer_inverse(&inf(1, 2, 5), order)?.mul(&pochhammer_inverse(&inf(1, 3, 5), order)?)
            }
            ProductForm::DistinctSq => {
                let d = pochhammer(&inf(-1, 1, 1), order)?;
                d.mul(&d)
            }
            ProductForm::UnrestrictedSq => {
                let p = pochhammer_inverse(&inf(1, 1, 1), order)?;
                p.mul(&p)
            }
            ProductForm::FiniteRhs { parts, smallest, gap } => {
                let shift = FamilyParams::new(Some(parts), smallest, gap).exponent(parts);
                let inv = pochhammer_inverse(&PochSpec::new(1, 1, 1, Length::Finite(parts)), order)?;
                Ok(inv.mul(&inv)?.shift(shift))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SumForm {
    /// `Σ q^{n²}/(q)_n²`
    GaussSq,
    /// `Σ q^{n²}/(q)_n`
    Rr1Sum,
    /// `Σ q^{n²+n}/(q)_n`
    Rr2Sum,
    /// `Σ q^{n²+n}/(q)_n²`
    AuluckSum,
    /// `Σ (-1)^i q^{C(i+1,2)}`
    DysonAlternating,
    /// `Σ_{i=0}^{M} q^{m·C(i,2)+ki}/(q)_i²`
    Corollary(FamilyParams),
}

impl SumForm {
    pub fn name(&self) -> &'static str {
        match self {
            SumForm::GaussSq => "gauss_sq",
            SumForm::Rr1Sum => "rr1_sum",
            SumForm::Rr2Sum => "rr2_sum",
            SumForm::AuluckSum => "auluck_sum",
            SumForm::DysonAlternating => "dyson_alternating",
            SumForm::Corollary(_) => "corollary_sum",
        }
    }

    pub fn expand(&self, order: usize) -> Result<Series> {
        match *self {
            SumForm::GaussSq => q_hyper_sum(order, |n| n * n, 2, None),
            SumForm::Rr1Sum => q_hyper_sum(order, |n| n * n, 1, None),
            SumForm::Rr2Sum => q_hyper_sum(order, |n| n * n + n, 1, None),
            SumForm::AuluckSum => q_hyper_sum(order, |n| n * n + n, 2, None),
            SumForm::DysonAlternating => {
                let mut s = Series::zero(order);
                let mut i = 0usize;
                while i * (i + 1) / 2 <= order {
                    s.add_at(i * (i + 1) / 2, if i.is_multiple_of(2) { 1 } else { -1 })?;
                    i += 1;
                }
                Ok(s)
            }
            SumForm::Corollary(p) => {
                if p.parts.is_none() && p.smallest == 0 && p.gap == 0 {
                    return Err(invalid("corollary_sum", "k = m = 0 with M = ∞ has infinitely many q^0 terms"));
                }
                q_hyper_sum(order, |i| p.exponent(i as u32), 2, p.parts.map(|m| m as usize))
            }
        }
    }
}

/// `Σ_{n=0}^{last} q^{exponent(n)} / (q;q)_n^power`, stopping once the
/// (non-decreasing) exponent passes `order`.
fn q_hyper_sum(order: usize, exponent: impl Fn(usize) -> usize, power: u32, last: Option<usize>) -> Result<Series> {
    let mut total = Series::zero(order);
    // 1/(q;q)_n, updated by one factor per step
    let mut inv = Series::one(order);
    let mut n = 0usize;
    while last.is_none_or(|l| n <= l) {
        let e = exponent(n);
        if e > order {
            break;
        }
        if n > 0 {
            inv.div_binomial(1, n)?;
        }
        let mut term = inv.clone();
        for _ in 1..power {
            term = term.mul(&inv)?;
        }
        total = total.add(&term.shift(e))?;
        n += 1;
    }
    Ok(total)
}

/// The four-decorated Ferrers-diagram generating functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Boulet {
    /// All partitions: `(-a,-abc;Q)_∞ / (ab,ac,Q;Q)_∞`.
    Phi,
    /// Distinct parts: `(-a,-abc;Q)_∞ / (ab;Q)_∞`.
    Psi,
}

impl Boulet {
    pub fn name(&self) -> &'static str {
        match self {
            Boulet::Phi => "phi",
            Boulet::Psi => "psi",
        }
    }

    pub fn expand(&self, order: usize) -> Result<MSeries> {
        let q = Monomial::Q;
        let ab = Monomial::A.mul(Monomial::B);
        let ac = Monomial::A.mul(Monomial::C);
        let abc = ab.mul(Monomial::C);
        let mut s = MSeries::one(order);
        m_apply(&mut s, &PochSpec::infinite(-1, Monomial::A, q), false)?;
        m_apply(&mut s, &PochSpec::infinite(-1, abc, q), false)?;
        let mut denominators = vec![ab];
        if *self == Boulet::Phi {
            denominators.extend([ac, q]);
        }
        for base in denominators {
            m_apply(&mut s, &PochSpec::infinite(1, base, q), true)?;
        }
        Ok(s)
    }
}

/// A univariate series side with a closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum NamedSeries {
    Product(ProductForm),
    Sum(SumForm),
    /// A four-decorated generating function with `a -> q^{e_a}`, etc.
    Specialized { boulet: Boulet, exps: [u32; 4] },
}

impl NamedSeries {
    pub fn expand(&self, order: usize) -> Result<Series> {
        match self {
            NamedSeries::Product(p) => p.expand(order),
            NamedSeries::Sum(s) => s.expand(order),
            NamedSeries::Specialized { boulet, exps } => {
                let total = if exps.contains(&0) { 2 * order } else { order };
                boulet.expand(total)?.specialize(*exps, order)
            }
        }
    }

    /// Looks a form up by name. `params` feeds `finite_rhs` and `corollary_sum`.
    pub fn parse(name: &str, params: Option<FamilyParams>) -> Result<Self> {
        let need = || params.ok_or_else(|| invalid("form parameters", format!("`{name}` needs M, k, m")));
        Ok(match name {
            "euler_inverse" => NamedSeries::Product(ProductForm::EulerInverse),
            "odd_parts" => NamedSeries::Product(ProductForm::OddParts),
            "distinct" => NamedSeries::Product(ProductForm::Distinct),
            "rr1_product" => NamedSeries::Product(ProductForm::Rr1Product),
            "rr2_product" => NamedSeries::Product(ProductForm::Rr2Product),
            "distinct_sq" => NamedSeries::Product(ProductForm::DistinctSq),
            "unrestricted_sq" => NamedSeries::Product(ProductForm::UnrestrictedSq),
            "finite_rhs" => {
                let p = need()?;
                let parts = p.parts.ok_or_else(|| invalid("form parameters", "finite_rhs needs a finite M"))?;
                NamedSeries::Product(ProductForm::FiniteRhs { parts, smallest: p.smallest, gap: p.gap })
            }
            "gauss_sq" => NamedSeries::Sum(SumForm::GaussSq),
            "rr1_sum" => NamedSeries::Sum(SumForm::Rr1Sum),
            "rr2_sum" => NamedSeries::Sum(SumForm::Rr2Sum),
            "auluck_sum" => NamedSeries::Sum(SumForm::AuluckSum),
            "dyson_alternating" => NamedSeries::Sum(SumForm::DysonAlternating),
            "corollary_sum" => NamedSeries::Sum(SumForm::Corollary(need()?)),
            "psi_odd" => NamedSeries::Specialized { boulet: Boulet::Psi, exps: [1, 1, 0, 0] },
            "phi_odd" => NamedSeries::Specialized { boulet: Boulet::Phi, exps: [1, 1, 0, 0] },
            "psi_conj" => NamedSeries::Specialized { boulet: Boulet::Psi, exps: [1, 0, 1, 0] },
            _ => return Err(unknown("series form", name)),
        })
    }

    pub fn name(&self) -> String {
        match self {
            NamedSeries::Product(p) => p.name().to_string(),
            NamedSeries::Sum(s) => s.name().to_string(),
            NamedSeries::Specialized { boulet, exps } => {
                let vals: Vec<_> = exps.iter().map(|&e| if e == 0 { "1".to_string() } else if e == 1 { "q".into() } else { format!("q^{e}") }).collect();
                format!("{}({})", boulet.name(), vals.join(","))
            }
        }
    }
}

pub const FORM_NAMES: [&str; 17] = [
    "euler_inverse",
    "odd_parts",
    "distinct",
    "rr1_product",
    "rr2_product",
    "distinct_sq",
    "unrestricted_sq",
    "finite_rhs",
    "gauss_sq",
    "rr1_sum",
    "rr2_sum",
    "auluck_sum",
    "dyson_alternating",
    "corollary_sum",
    "psi_odd",
    "phi_odd",
    "psi_conj",
];
