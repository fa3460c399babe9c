//! Identities as checkable objects: two independently built sides compared
//! coefficient by coefficient.

mod registry;
mod report;

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

pub use registry::{registry, registry_with, weight_change_instances, Grid};
pub use report::{write_csv, Exponent, Mismatch, Status, VerificationReport};

use crate::census::{crank_class_series, decorated_series, weighted_series};
use crate::constraint::ConstraintSpec;
use crate::error::{invalid, Result};
use crate::qseries::{Boulet, Coeff, MSeries, Monomial, NamedSeries, Series};
use crate::statistics::{Relation, StatisticId};
use crate::weights::WeightId;

/// How one side of an identity is computed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Recipe {
    /// `Σ_{π ∈ spec} weight(π) q^{stat(π)}` summed over the set itself.
    Census { spec: ConstraintSpec, stat: StatisticId, weight: WeightId },
    /// Partitions counted by norm, restricted to a crank class.
    CrankClass { relation: Relation, bound: i64 },
    /// Product of closed-form series.
    Forms(Vec<NamedSeries>),
    /// Four-decorated diagrams of the set, by total degree.
    Decorated { spec: ConstraintSpec },
    /// Closed product for the four-decorated generating function.
    Boulet(Boulet),
}

impl Recipe {
    pub fn census(spec: ConstraintSpec, stat: StatisticId, weight: WeightId) -> Self {
        Recipe::Census { spec, stat, weight }
    }

    pub fn by_norm(spec: ConstraintSpec) -> Self {
        Recipe::census(spec, StatisticId::Norm, WeightId::Unit)
    }

    pub fn form(f: NamedSeries) -> Self {
        Recipe::Forms(vec![f])
    }

    fn is_closed_form(&self) -> bool {
        matches!(self, Recipe::Forms(_) | Recipe::Boulet(_))
    }
}

/// A recipe with an overall integer factor and a finite polynomial added.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Side {
    pub recipe: Recipe,
    pub scale: Coeff,
    pub correction: Vec<(usize, Coeff)>,
}

impl Side {
    pub fn new(recipe: Recipe) -> Self {
        Self { recipe, scale: 1, correction: Vec::new() }
    }

    pub fn scaled(mut self, c: Coeff) -> Self {
        self.scale = c;
        self
    }

    /// Adds `c·q^exp` on top of the recipe.
    pub fn plus(mut self, exp: usize, c: Coeff) -> Self {
        self.correction.push((exp, c));
        self
    }
}

impl From<Recipe> for Side {
    fn from(r: Recipe) -> Self {
        Side::new(r)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    Lhs,
    Rhs,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Identity {
    pub id: String,
    /// Human-readable statement of the equation.
    pub label: String,
    /// Named integer parameters; `None` means unbounded.
    pub params: Vec<(&'static str, Option<u32>)>,
    pub lhs: Side,
    pub rhs: Side,
    pub experimental: bool,
}

impl Identity {
    pub fn new(id: impl Into<String>, label: impl Into<String>, lhs: impl Into<Side>, rhs: impl Into<Side>) -> Self {
        Self {
            id: id.into(),
            label: label.into(),
            params: Vec::new(),
            lhs: lhs.into(),
            rhs: rhs.into(),
            experimental: false,
        }
    }

    pub fn with_params(mut self, params: Vec<(&'static str, Option<u32>)>) -> Self {
        self.params = params;
        self
    }

    pub fn experimental(mut self) -> Self {
        self.experimental = true;
        self
    }

    /// The sides share no builder: at least one is summed over a set, or
    /// both are closed forms with no named form in common.
    pub fn is_independent(&self) -> bool {
        let (l, r) = (&self.lhs.recipe, &self.rhs.recipe);
        if l == r {
            return false;
        }
        match (l, r) {
            (Recipe::Forms(a), Recipe::Forms(b)) => a.iter().all(|f| !b.contains(f)),
            _ => !(l.is_closed_form() && r.is_closed_form()) || l != r,
        }
    }

    fn side(&self, which: Which) -> &Side {
        match which {
            Which::Lhs => &self.lhs,
            Which::Rhs => &self.rhs,
        }
    }
}

/// The value of a built side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum SideValue {
    Uni(Series),
    Multi(MSeries),
}

impl SideValue {
    pub fn as_series(&self) -> Option<&Series> {
        match self {
            SideValue::Uni(s) => Some(s),
            SideValue::Multi(_) => None,
        }
    }
}

fn build_recipe(recipe: &Recipe, order: usize) -> Result<SideValue> {
    Ok(match recipe {
        Recipe::Census { spec, stat, weight } => SideValue::Uni(weighted_series(spec, *stat, *weight, order)?),
        Recipe::CrankClass { relation, bound } => SideValue::Uni(crank_class_series(*relation, *bound, order)?),
        Recipe::Forms(forms) => {
            let mut acc = Series::one(order);
            for f in forms {
                acc = acc.mul(&f.expand(order)?)?;
            }
            SideValue::Uni(acc)
        }
        Recipe::Decorated { spec } => SideValue::Multi(decorated_series(spec, order)?),
        Recipe::Boulet(b) => SideValue::Multi(b.expand(order)?),
    })
}

/// Builds one side of `ident` through order `order`.
pub fn build_side(ident: &Identity, which: Which, order: usize) -> Result<SideValue> {
    let side = ident.side(which);
    Ok(match build_recipe(&side.recipe, order)? {
        SideValue::Uni(s) => {
            let mut s = s.scale(side.scale)?;
            for &(e, c) in &side.correction {
                s.add_at(e, c)?;
            }
            SideValue::Uni(s)
        }
        SideValue::Multi(m) => {
            let mut m = m.scale(side.scale)?;
            for &(e, c) in &side.correction {
                if e != 0 {
                    return Err(invalid("correction", "multivariate sides only take constant corrections"));
                }
                m.add_term(Monomial::ONE, c)?;
            }
            SideValue::Multi(m)
        }
    })
}

/// First coefficient where the two sides differ, in order of exponent
/// (total degree first, then lexicographic, for multivariate sides).
pub fn first_mismatch(lhs: &SideValue, rhs: &SideValue) -> Result<Option<Mismatch>> {
    match (lhs, rhs) {
        (SideValue::Uni(a), SideValue::Uni(b)) => {
            let order = a.order().min(b.order());
            Ok((0..=order).find(|&n| a.coeff(n) != b.coeff(n)).map(|n| Mismatch {
                exponent: Exponent::Single(n),
                lhs: a.coeff(n),
                rhs: b.coeff(n),
            }))
        }
        (SideValue::Multi(a), SideValue::Multi(b)) => {
            let mut keys: Vec<Monomial> = a.graded_terms().chain(b.graded_terms()).map(|(m, _)| m).collect();
            keys.sort_by_key(|m| (m.degree(), *m));
            keys.dedup();
            Ok(keys.into_iter().find(|&m| a.coeff(m) != b.coeff(m)).map(|m| Mismatch {
                exponent: Exponent::Multi(m.0),
                lhs: a.coeff(m),
                rhs: b.coeff(m),
            }))
        }
        _ => Err(invalid("identity", "one side is univariate and the other multivariate")),
    }
}

/// Compares both sides over exponents `0..=order`. Build errors are
/// reported as failures, not raised.
pub fn verify(ident: &Identity, order: usize) -> VerificationReport {
    let start = Instant::now();
    let outcome = build_side(ident, Which::Lhs, order)
        .and_then(|l| build_side(ident, Which::Rhs, order).map(|r| (l, r)))
        .and_then(|(l, r)| first_mismatch(&l, &r));
    let ms = start.elapsed().as_millis() as u64;
    let (status, first_mismatch, error) = match outcome {
        Ok(None) => (Status::Verified, None, None),
        Ok(Some(m)) => (Status::Failed, Some(m), None),
        Err(e) => (Status::Failed, None, Some(e.to_string())),
    };
    VerificationReport { id: ident.id.clone(), order, status, first_mismatch, ms: Some(ms), error }
}

/// Verifies every identity, in parallel; reports come back sorted by id.
pub fn verify_many(idents: &[Identity], order: usize) -> Vec<VerificationReport> {
    let mut reports: Vec<_> = idents.par_iter().map(|i| verify(i, order)).collect();
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    reports
}

/// Verifies the default registry.
pub fn verify_all(order: usize) -> Vec<VerificationReport> {
    verify_many(&registry(), order)
}
