use std::ops::RangeInclusive;

use super::{Identity, Recipe, Side};
use crate::constraint::ConstraintSpec;
use crate::qseries::{Boulet, FamilyParams, NamedSeries, ProductForm, SumForm};
use crate::statistics::{Relation, StatisticId};
use crate::weights::WeightId;

/// Parameter ranges for the families of identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    /// `M` runs over `0..=max_parts`; the sum family also gets `M = ∞`.
    pub max_parts: u32,
    pub smallest: RangeInclusive<u32>,
    pub gaps: RangeInclusive<u32>,
    /// `l` runs over `0..=max_l`, with `v` in `{0, 1}`.
    pub max_l: u32,
}

impl Default for Grid {
    fn default() -> Self {
        Self { max_parts: 4, smallest: 1..=3, gaps: 0..=3, max_l: 3 }
    }
}

fn product(p: ProductForm) -> Recipe {
    Recipe::form(NamedSeries::Product(p))
}

fn sum(s: SumForm) -> Recipe {
    Recipe::form(NamedSeries::Sum(s))
}

fn by_stat(spec: ConstraintSpec, stat: StatisticId) -> Recipe {
    Recipe::census(spec, stat, WeightId::Unit)
}

fn crank(relation: Relation, bound: i64) -> Recipe {
    Recipe::CrankClass { relation, bound }
}

/// `D_{2l+v}` by `O` against `P_{l+v}(2-v, 2)` weighted by `ω_{2,2}` (v = 0)
/// or `ω̃_1` (v = 1).
fn weight_change(l: u32, v: u32) -> Identity {
    let (rhs_spec, w) = if v == 0 {
        (ConstraintSpec::exact(l, 2, 2), WeightId::Omega { k: 2, m: 2 })
    } else {
        (ConstraintSpec::exact(l + 1, 1, 2), WeightId::Tilde1)
    };
    Identity::new(
        format!("weight_change[l={l},v={v}]"),
        format!("Σ_{{D_{}}} q^O = Σ_{{P_{}({},2)}} {} q^|π|", 2 * l + v, l + v, 2 - v, w),
        by_stat(ConstraintSpec::distinct_count(2 * l + v), StatisticId::OddIndexSum),
        Recipe::census(rhs_spec, StatisticId::Norm, w),
    )
    .with_params(vec![("l", Some(l)), ("v", Some(v))])
}

/// The `weight_change` instances whose left side has a term of degree at
/// most `order`. The smallest `O` on `D_{2l}` is `l(l+1)`, on `D_{2l+1}` it
/// is `(l+1)^2`.
pub fn weight_change_instances(order: usize) -> Vec<Identity> {
    let mut out = Vec::new();
    for l in 0u32.. {
        let even = (l * (l + 1)) as usize;
        let odd = ((l + 1) * (l + 1)) as usize;
        if even > order {
            break;
        }
        out.push(weight_change(l, 0));
        if odd <= order {
            out.push(weight_change(l, 1));
        }
    }
    out
}

/// The default registry.
pub fn registry() -> Vec<Identity> {
    registry_with(&Grid::default())
}

/// Every identity, with parameter families instantiated over `grid`.
/// Sorted by id.
pub fn registry_with(grid: &Grid) -> Vec<Identity> {
    let d = ConstraintSpec::distinct;
    let u = ConstraintSpec::unrestricted;
    let rr1 = ConstraintSpec::rogers_ramanujan_1;
    let rr2 = ConstraintSpec::rogers_ramanujan_2;
    let o = StatisticId::OddIndexSum;
    let o_conj = StatisticId::OddIndexSumOfConjugate;

    let mut out = vec![
        Identity::new("euler", "distinct parts = odd parts", Recipe::by_norm(d()), Recipe::by_norm(ConstraintSpec::odd_parts())),
        Identity::new("euler_distinct_product", "Σ_D q^|π| = (-q;q)_∞", Recipe::by_norm(d()), product(ProductForm::Distinct)),
        Identity::new("euler_odd_product", "Σ_D q^|π| = 1/(q;q^2)_∞", Recipe::by_norm(d()), product(ProductForm::OddParts)),
        Identity::new("euler_products", "(-q;q)_∞ = 1/(q;q^2)_∞", product(ProductForm::Distinct), product(ProductForm::OddParts)),
        Identity::new("gauss_sq", "Σ q^{n²}/(q)_n² = 1/(q)_∞", sum(SumForm::GaussSq), product(ProductForm::EulerInverse)),
        Identity::new("gauss_sq_enumerated", "Σ_U q^|π| = Σ q^{n²}/(q)_n²", Recipe::by_norm(u()), sum(SumForm::GaussSq)),
        Identity::new("rr1_sum_product", "Σ q^{n²}/(q)_n = 1/(q,q^4;q^5)_∞", sum(SumForm::Rr1Sum), product(ProductForm::Rr1Product)),
        Identity::new("rr2_sum_product", "Σ q^{n²+n}/(q)_n = 1/(q^2,q^3;q^5)_∞", sum(SumForm::Rr2Sum), product(ProductForm::Rr2Product)),
        Identity::new("rr1_sum_enumerated", "Σ_{RR1} q^|π| = Σ q^{n²}/(q)_n", Recipe::by_norm(rr1()), sum(SumForm::Rr1Sum)),
        Identity::new("rr2_sum_enumerated", "Σ_{RR2} q^|π| = Σ q^{n²+n}/(q)_n", Recipe::by_norm(rr2()), sum(SumForm::Rr2Sum)),
        Identity::new("rr1_combinatorial", "RR1 = parts ≡ ±1 mod 5", Recipe::by_norm(rr1()), Recipe::by_norm(ConstraintSpec::parts_mod5_pm1())),
        Identity::new("rr2_combinatorial", "RR2 = parts ≡ ±2 mod 5", Recipe::by_norm(rr2()), Recipe::by_norm(ConstraintSpec::parts_mod5_pm2())),
        Identity::new(
            "alladi_weighted",
            "Σ_{RR1} ω_{1,2} q^|π| = Σ_U q^|π|",
            Recipe::census(rr1(), StatisticId::Norm, WeightId::Omega { k: 1, m: 2 }),
            Recipe::by_norm(u()),
        ),
        Identity::new("odd_index_distinct", "Σ_D q^O = Σ_U q^|π|", by_stat(d(), o), Recipe::by_norm(u())),
        Identity::new(
            "rr2_crank",
            "Σ_{RR2} ω_{2,2} q^|π| = Σ_{crank ≥ 0} q^|π|",
            Recipe::census(rr2(), StatisticId::Norm, WeightId::Omega { k: 2, m: 2 }),
            crank(Relation::Ge, 0),
        ),
        Identity::new(
            "even_distinct_weighted",
            "Σ_{D_e} q^O = Σ_{RR2} ω_{2,2} q^|π|",
            by_stat(ConstraintSpec::distinct_even(), o),
            Recipe::census(rr2(), StatisticId::Norm, WeightId::Omega { k: 2, m: 2 }),
        ),
        Identity::new(
            "auluck_dyson",
            "Σ q^{i²+i}/(q)_i² = (1/(q)_∞) Σ (-1)^i q^{C(i+1,2)}",
            sum(SumForm::AuluckSum),
            Recipe::Forms(vec![
                NamedSeries::Product(ProductForm::EulerInverse),
                NamedSeries::Sum(SumForm::DysonAlternating),
            ]),
        ),
        Identity::new(
            "tilde1_neg_crank",
            "Σ_{RR1} ω̃_1 q^|π| = Σ_{crank ≤ -1} q^|π|",
            Recipe::census(rr1(), StatisticId::Norm, WeightId::Tilde1),
            crank(Relation::Le, -1),
        ),
        Identity::new(
            "tilde1_pos_crank",
            "Σ_{RR1} ω̃_1 q^|π| = q + Σ_{crank ≥ 1} q^|π|",
            Recipe::census(rr1(), StatisticId::Norm, WeightId::Tilde1),
            Side::new(crank(Relation::Ge, 1)).plus(1, 1),
        ),
        Identity::new(
            "tilde2_zero_crank",
            "Σ_{RR1} ω̃_2 q^|π| = -q + Σ_{crank = 0} q^|π|",
            Recipe::census(rr1(), StatisticId::Norm, WeightId::Tilde2),
            Side::new(crank(Relation::Eq, 0)).plus(1, -1),
        ),
        Identity::new("even_distinct_crank", "Σ_{D_e} q^O = Σ_{crank ≥ 0} q^|π|", by_stat(ConstraintSpec::distinct_even(), o), crank(Relation::Ge, 0)),
        Identity::new("odd_distinct_crank", "Σ_{D_o} q^O = Σ_{crank ≤ -1} q^|π|", by_stat(ConstraintSpec::distinct_odd(), o), crank(Relation::Le, -1)),
        Identity::new(
            "signed_distinct_crank",
            "Σ_D (-1)^ν q^O = -q + Σ_{crank = 0} q^|π|",
            Recipe::census(d(), o, WeightId::Sign),
            Side::new(crank(Relation::Eq, 0)).plus(1, -1),
        ),
        Identity::new("boulet_psi", "four-decorated D = (-a,-abc;Q)_∞/(ab;Q)_∞", Recipe::Decorated { spec: d() }, Recipe::Boulet(Boulet::Psi)),
        Identity::new("boulet_phi", "four-decorated U = (-a,-abc;Q)_∞/(ab,ac,Q;Q)_∞", Recipe::Decorated { spec: u() }, Recipe::Boulet(Boulet::Phi)),
        Identity::new(
            "boulet_psi_odd",
            "Ψ(q,q,1,1) = 1/(q)_∞",
            Recipe::form(NamedSeries::Specialized { boulet: Boulet::Psi, exps: [1, 1, 0, 0] }),
            product(ProductForm::EulerInverse),
        ),
        Identity::new(
            "boulet_phi_odd",
            "Φ(q,q,1,1) = 1/(q)_∞²",
            Recipe::form(NamedSeries::Specialized { boulet: Boulet::Phi, exps: [1, 1, 0, 0] }),
            product(ProductForm::UnrestrictedSq),
        ),
        Identity::new(
            "boulet_psi_conj",
            "Ψ(q,1,q,1) = (-q;q)_∞²",
            Recipe::form(NamedSeries::Specialized { boulet: Boulet::Psi, exps: [1, 0, 1, 0] }),
            product(ProductForm::DistinctSq),
        ),
        Identity::new("odd_index_unrestricted", "Σ_U q^O = 1/(q)_∞²", by_stat(u(), o), product(ProductForm::UnrestrictedSq)),
        Identity::new("odd_conj_distinct", "Σ_D q^{O(π')} = (-q;q)_∞²", by_stat(d(), o_conj), product(ProductForm::DistinctSq)),
        Identity::new(
            "cor_omega00",
            "Σ_U q^O = Σ_U ω_{0,0} q^|π|",
            by_stat(u(), o),
            Recipe::census(u(), StatisticId::Norm, WeightId::Omega { k: 0, m: 0 }),
        ),
        Identity::new(
            "cor_hat",
            "Σ_D q^{O(π')} = Σ_K ω̂_1 q^|π|",
            by_stat(d(), o_conj),
            Recipe::census(ConstraintSpec::small_gaps(), StatisticId::Norm, WeightId::Hat1),
        ),
        Identity::new(
            "e_variant_distinct",
            "Σ_D q^{E(π')} = 2 (-q;q)_∞²",
            by_stat(d(), StatisticId::EvenIndexSumOfConjugate),
            Side::new(product(ProductForm::DistinctSq)).scaled(2),
        )
        .experimental(),
        Identity::new(
            "e_variant_hat",
            "Σ_D q^{E(π')} = 2 Σ_K ω̂_1 q^|π|",
            by_stat(d(), StatisticId::EvenIndexSumOfConjugate),
            Side::new(Recipe::census(ConstraintSpec::small_gaps(), StatisticId::Norm, WeightId::Hat1)).scaled(2),
        )
        .experimental(),
    ];

    for m_parts in 0..=grid.max_parts {
        for k in grid.smallest.clone() {
            for m in grid.gaps.clone() {
                let p = FamilyParams::new(Some(m_parts), k, m);
                out.push(
                    Identity::new(
                        format!("finite_weighted[{p}]"),
                        format!("Σ_{{P_{m_parts}({k},{m})}} ω_{{{k},{m}}} q^|π| = q^{{{}}}/(q)_{m_parts}²", p.exponent(m_parts)),
                        Recipe::census(ConstraintSpec::exact(m_parts, k, m), StatisticId::Norm, WeightId::Omega { k, m }),
                        product(ProductForm::FiniteRhs { parts: m_parts, smallest: k, gap: m }),
                    )
                    .with_params(vec![("M", Some(m_parts)), ("k", Some(k)), ("m", Some(m))]),
                );
            }
        }
    }
    for m_parts in (0..=grid.max_parts).map(Some).chain([None]) {
        for k in grid.smallest.clone() {
            for m in grid.gaps.clone() {
                let p = FamilyParams::new(m_parts, k, m);
                out.push(
                    Identity::new(
                        format!("corollary_sum[{p}]"),
                        format!("Σ_{{P_≤M({k},{m})}} ω_{{{k},{m}}} q^|π| = Σ_{{i≤M}} q^{{m·C(i,2)+ki}}/(q)_i² with {p}"),
                        Recipe::census(ConstraintSpec::at_most(m_parts, k, m), StatisticId::Norm, WeightId::Omega { k, m }),
                        sum(SumForm::Corollary(p)),
                    )
                    .with_params(vec![("M", m_parts), ("k", Some(k)), ("m", Some(m))]),
                );
            }
        }
    }
    for l in 0..=grid.max_l {
        for v in 0..=1 {
            out.push(weight_change(l, v));
        }
    }
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid_sizes() {
        let reg = registry();
        assert!(reg.len() >= 20);
        let count = |prefix: &str| reg.iter().filter(|i| i.id.starts_with(prefix)).count();
        assert_eq!(count("finite_weighted["), 5 * 3 * 4);
        assert_eq!(count("corollary_sum["), 6 * 3 * 4);
        assert_eq!(count("weight_change["), 8);
    }

    #[test]
    fn ids_unique_and_sides_independent() {
        let reg = registry();
        for w in reg.windows(2) {
            assert!(w[0].id < w[1].id, "{} / {}", w[0].id, w[1].id);
        }
        for i in &reg {
            assert!(i.is_independent(), "{}", i.id);
        }
    }

    #[test]
    fn weight_change_instances_by_order() {
        let ids: Vec<_> = weight_change_instances(6).into_iter().map(|i| i.id).collect();
        assert_eq!(ids, ["weight_change[l=0,v=0]", "weight_change[l=0,v=1]", "weight_change[l=1,v=0]", "weight_change[l=1,v=1]", "weight_change[l=2,v=0]"]);
    }

    #[test]
    fn larger_grid() {
        let g = Grid { max_parts: 6, smallest: 1..=1, gaps: 2..=2, max_l: 5 };
        let reg = registry_with(&g);
        assert!(reg.iter().any(|i| i.id == "finite_weighted[M=6,k=1,m=2]"));
        assert!(reg.iter().any(|i| i.id == "weight_change[l=5,v=1]"));
    }
}
