//! Generating series of a constrained partition set, summed directly over
//! its members: `Σ_{π ∈ S} w(π) q^{stat(π)}`.
//!
//! [`weighted_series`] walks part sequences from the largest part down and
//! shares suffixes between prefixes, so it never materializes the set.
//! It needs the statistic to be a sum of per-part charges and the weight to
//! factor over gaps (see [`crate::weights`]). [`weighted_series_by_listing`]
//! lists every member explicitly and evaluates the statistic and weight on
//! whole partitions; the two are cross-checked in tests.

use std::collections::HashMap;

use crate::constraint::ConstraintSpec;
use crate::enumerate::{for_each_by_norm, norm_bound};
use crate::error::Result;
use crate::partition::Partition;
use crate::qseries::{Coeff, MSeries, Monomial, Series};
use crate::statistics::{count_crank_class, Relation, StatisticId};
use crate::weights::{decoration, weight, WeightId};

/// `Σ_{π ∈ spec, stat(π) <= order} w(π) q^{stat(π)}` by suffix sharing.
pub fn weighted_series(spec: &ConstraintSpec, stat: StatisticId, w: WeightId, order: usize) -> Result<Series> {
    spec.validate()?;
    let order32 = u32::try_from(order).map_err(|_| crate::error::invalid("order", "too large"))?;
    let first_part_bound = norm_bound(spec, stat, order32)?;
    // Fails early for statistics without per-part charges.
    stat.part_charge(1, true)?;

    let mut walk = Walk { spec, stat, w, track_count: spec.exact_parts.is_some() || spec.max_parts.is_some(), memo: HashMap::new() };
    let mut out = Series::zero(order);
    if spec.admits_empty() {
        out.add_at(0, w.empty_value())?;
    }
    let top = if walk.may_extend(0) { first_part_bound } else { 0 };
    for x in spec.min_smallest.max(1)..=top {
        if !walk.part_allowed(x) {
            continue;
        }
        let c = stat.part_charge(x, true)? as usize;
        if c > order {
            continue;
        }
        for budget in 0..=order - c {
            let v = walk.suffix(x, 1, budget as u32)?;
            out.add_at(c + budget, v)?;
        }
    }
    Ok(out)
}

struct Walk<'a> {
    spec: &'a ConstraintSpec,
    stat: StatisticId,
    w: WeightId,
    track_count: bool,
    memo: HashMap<(u32, u32, u32), Coeff>,
}

impl Walk<'_> {
    fn part_allowed(&self, x: u32) -> bool {
        x >= self.spec.min_smallest && self.spec.residues.as_ref().is_none_or(|r| r.admits(x))
    }

    fn may_stop(&self, last: u32, count: u32) -> bool {
        if self.spec.exact_parts.is_some_and(|m| count != m) {
            return false;
        }
        if self.spec.parts_parity.is_some_and(|p| !p.matches(count as usize)) {
            return false;
        }
        self.spec.max_smallest.is_none_or(|s| last <= s)
    }

    fn may_extend(&self, count: u32) -> bool {
        !(self.spec.exact_parts.is_some_and(|m| count >= m) || self.spec.max_parts.is_some_and(|m| count >= m))
    }

    /// Weighted number of ways to finish a partition whose last placed part
    /// is `prev` (the `count`-th part) so that later parts charge exactly
    /// `budget`. Includes the tail factor of whichever part ends up last.
    fn suffix(&mut self, prev: u32, count: u32, budget: u32) -> Result<Coeff> {
        let key_count = if self.track_count { count } else { count % 2 };
        let key = (prev, key_count, budget);
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let mut total: Coeff = 0;
        if budget == 0 && self.may_stop(prev, count) {
            total = self.w.tail_factor(prev);
        }
        if self.may_extend(count) {
            if let Some(hi) = prev.checked_sub(self.spec.min_gap) {
                let lo = self.spec.max_gap.map_or(0, |g| prev.saturating_sub(g));
                let next_is_odd = count.is_multiple_of(2);
                for x in lo.max(self.spec.min_smallest)..=hi {
                    if !self.part_allowed(x) {
                        continue;
                    }
                    let c = self.stat.part_charge(x, next_is_odd)?;
                    if c > u64::from(budget) {
                        continue;
                    }
                    let g = self.w.gap_factor(prev - x);
                    if g == 0 {
                        continue;
                    }
                    let rest = self.suffix(x, count + 1, budget - c as u32)?;
                    if rest != 0 {
                        let term = g.checked_mul(rest).ok_or(crate::error::Error::Overflow)?;
                        total = total.checked_add(term).ok_or(crate::error::Error::Overflow)?;
                    }
                }
            }
        }
        self.memo.insert(key, total);
        Ok(total)
    }
}

/// Same sum as [`weighted_series`], by listing every member with norm up to
/// the finiteness bound and evaluating `stat` and `w` on each.
pub fn weighted_series_by_listing(spec: &ConstraintSpec, stat: StatisticId, w: WeightId, order: usize) -> Result<Series> {
    spec.validate()?;
    let bound = norm_bound(spec, stat, order as u32)?;
    let mut out = Series::zero(order);
    let mut err = None;
    for n in 0..=bound {
        for_each_by_norm(spec, n, |parts| {
            let p = Partition::from_parts_unchecked(parts.to_vec());
            let s = stat.value(&p);
            if s >= 0 && s as usize <= order {
                if let Err(e) = out.add_at(s as usize, weight(w, &p)) {
                    err.get_or_insert(e);
                }
            }
        });
    }
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// `Σ_{π ∈ spec, |π| <= order} a^{#a} b^{#b} c^{#c} d^{#d}` over four-decorated
/// Ferrers diagrams.
pub fn decorated_series(spec: &ConstraintSpec, order: usize) -> Result<MSeries> {
    let mut out = MSeries::zero(order);
    let mut err = None;
    for n in 0..=order as u32 {
        for_each_by_norm(spec, n, |parts| {
            let p = Partition::from_parts_unchecked(parts.to_vec());
            if let Err(e) = out.add_term(Monomial(decoration(&p).exponents()), 1) {
                err.get_or_insert(e);
            }
        });
    }
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// `Σ_n #{π ⊢ n : crank(π) relation bound} q^n`.
pub fn crank_class_series(relation: Relation, bound: i64, order: usize) -> Result<Series> {
    let mut out = Series::zero(order);
    for n in 0..=order {
        let count = count_crank_class(n as u32, relation, bound);
        out.add_at(n, Coeff::try_from(count).map_err(|_| crate::error::Error::Overflow)?)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn unrestricted_by_norm() {
        let s = weighted_series(&ConstraintSpec::unrestricted(), StatisticId::Norm, WeightId::Unit, 6).unwrap();
        assert_eq!(s.coeffs(), &[1, 1, 2, 3, 5, 7, 11]);
    }

    #[test]
    fn matches_listing_on_assorted_sets() {
        let specs = [
            ConstraintSpec::unrestricted(),
            ConstraintSpec::distinct(),
            ConstraintSpec::distinct_even(),
            ConstraintSpec::distinct_odd(),
            ConstraintSpec::rogers_ramanujan_1(),
            ConstraintSpec::rogers_ramanujan_2(),
            ConstraintSpec::small_gaps(),
            ConstraintSpec::parts_mod5_pm2(),
            ConstraintSpec::exact(3, 2, 1),
            ConstraintSpec::at_most(Some(2), 1, 0),
            ConstraintSpec::at_most(Some(0), 1, 0),
            ConstraintSpec::exact(0, 2, 2),
        ];
        let weights = [WeightId::Unit, WeightId::Omega { k: 1, m: 2 }, WeightId::Tilde1, WeightId::Tilde2, WeightId::Hat1, WeightId::Sign];
        for spec in &specs {
            for stat in [StatisticId::Norm, StatisticId::OddIndexSum, StatisticId::OddIndexSumOfConjugate] {
                for w in weights {
                    let fast = weighted_series(spec, stat, w, 12).unwrap();
                    let slow = weighted_series_by_listing(spec, stat, w, 12).unwrap();
                    assert_eq!(fast, slow, "{spec:?} {stat} {w}");
                }
            }
        }
        let d = ConstraintSpec::distinct();
        let fast = weighted_series(&d, StatisticId::EvenIndexSumOfConjugate, WeightId::Unit, 12).unwrap();
        let slow = weighted_series_by_listing(&d, StatisticId::EvenIndexSumOfConjugate, WeightId::Unit, 12).unwrap();
        assert_eq!(fast, slow);
    }

    #[test]
    fn uncertified_statistics_rejected() {
        let u = ConstraintSpec::unrestricted();
        assert!(matches!(
            weighted_series(&u, StatisticId::EvenIndexSum, WeightId::Unit, 5),
            Err(Error::NoFinitenessCertificate { .. })
        ));
        assert!(weighted_series(&u, StatisticId::Crank, WeightId::Unit, 5).is_err());
    }

    #[test]
    fn crank_series() {
        let s = crank_class_series(Relation::Ge, 0, 5).unwrap();
        assert_eq!(s.coeffs(), &[1, 0, 1, 2, 3, 4]);
    }

    #[test]
    fn decorated_low_degree() {
        let psi = decorated_series(&ConstraintSpec::distinct(), 2).unwrap();
        assert_eq!(psi.len(), 3);
        assert_eq!(psi.coeff(Monomial::A.mul(Monomial::B)), 1);
    }
}
