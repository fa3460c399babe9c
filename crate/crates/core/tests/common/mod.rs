//! Brute-force oracles written from the definitions, with no reuse of the
//! library's enumeration, statistics or weight code, plus the exhaustive
//! property checks shared by the property tests and the acceptance run.

#![allow(dead_code)]

use qpart::census::weighted_series;
use qpart::enumerate::{enumerate_by_norm, for_each_by_norm};
use qpart::partition::min_partition;
use qpart::qseries::{NamedSeries, ProductForm};
use qpart::statistics::{count_crank_class, Relation};
use qpart::weights::{decoration, weight};
use qpart::{ConstraintSpec, Partition, StatisticId, WeightId};

pub type Check = Result<(), String>;

/// Every partition of `n` as a weakly decreasing vector.
pub fn partitions_of(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for x in (1..=max.min(rest)).rev() {
            cur.push(x);
            go(rest - x, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `p(n)` for `n <= max` from the pentagonal-number recurrence.
pub fn partition_numbers(max: usize) -> Vec<i64> {
    let mut p = vec![0i64; max + 1];
    p[0] = 1;
    for n in 1..=max {
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            p[n] += sign * p[n - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= n {
                p[n] += sign * p[n - g2];
            }
            k += 1;
        }
    }
    p
}

pub fn is_distinct(p: &[u32]) -> bool {
    p.windows(2).all(|w| w[0] > w[1])
}

pub fn min_gap(p: &[u32]) -> u32 {
    p.windows(2).map(|w| w[0] - w[1]).min().unwrap_or(u32::MAX)
}

pub fn odd_sum(p: &[u32]) -> u32 {
    p.iter().step_by(2).sum()
}

pub fn even_sum(p: &[u32]) -> u32 {
    p.iter().skip(1).step_by(2).sum()
}

pub fn conj(p: &[u32]) -> Vec<u32> {
    let largest = p.first().copied().unwrap_or(0);
    (1..=largest).map(|j| p.iter().filter(|&&x| x >= j).count() as u32).collect()
}

pub fn crank_of(p: &[u32]) -> i64 {
    let ones = p.iter().filter(|&&x| x == 1).count() as i64;
    if ones == 0 {
        p.first().copied().unwrap_or(0) as i64
    } else {
        p.iter().filter(|&&x| i64::from(x) > ones).count() as i64 - ones
    }
}

/// The weights, from their product formulas.
pub fn oracle_weight(w: WeightId, p: &[u32]) -> i64 {
    let gaps: Vec<i64> = p.windows(2).map(|w| i64::from(w[0]) - i64::from(w[1])).collect();
    let last = p.last().map(|&x| i64::from(x));
    match w {
        WeightId::Unit => 1,
        WeightId::Omega { k, m } => match last {
            None => 1,
            Some(l) => (l + 1 - i64::from(k)) * gaps.iter().map(|g| g + 1 - i64::from(m)).product::<i64>(),
        },
        WeightId::Tilde1 => match last {
            None => 0,
            Some(_) => gaps.iter().map(|g| g - 1).product(),
        },
        WeightId::Tilde2 => match last {
            None => 1,
            Some(l) => (l - 2) * gaps.iter().map(|g| g - 1).product::<i64>(),
        },
        WeightId::Hat1 => match last {
            None => 1,
            Some(l) => (1 << (l % 2)) * gaps.iter().map(|g| 1i64 << (g % 2)).product::<i64>(),
        },
        WeightId::Sign => {
            if p.len().is_multiple_of(2) {
                1
            } else {
                -1
            }
        }
    }
}

pub fn oracle_stat(s: StatisticId, p: &[u32]) -> i64 {
    match s {
        StatisticId::Norm => p.iter().sum::<u32>() as i64,
        StatisticId::NumParts => p.len() as i64,
        StatisticId::OddIndexSum => odd_sum(p) as i64,
        StatisticId::EvenIndexSum => even_sum(p) as i64,
        StatisticId::OddIndexSumOfConjugate => odd_sum(&conj(p)) as i64,
        StatisticId::EvenIndexSumOfConjugate => even_sum(&conj(p)) as i64,
        StatisticId::Crank => crank_of(p),
        StatisticId::Durfee => p.iter().enumerate().filter(|(i, &x)| x as usize > *i).count() as i64,
    }
}

/// `Σ w(π) q^{stat(π)}` through `order` over members of `spec` with norm
/// at most `max_norm`, membership tested with `spec.member`.
pub fn oracle_series(spec: &ConstraintSpec, stat: StatisticId, w: WeightId, order: usize, max_norm: u32) -> Vec<i64> {
    let mut out = vec![0i64; order + 1];
    for n in 0..=max_norm {
        for p in partitions_of(n) {
            let part = Partition::new(&p.iter().map(|&x| i64::from(x)).collect::<Vec<_>>()).unwrap();
            if !spec.member(&part) {
                continue;
            }
            let s = oracle_stat(stat, &p);
            if s >= 0 && (s as usize) <= order {
                out[s as usize] += oracle_weight(w, &p);
            }
        }
    }
    out
}

pub fn oracle_crank_counts(relation: Relation, bound: i64, order: usize) -> Vec<i64> {
    (0..=order as u32)
        .map(|n| partitions_of(n).iter().filter(|p| relation.holds(crank_of(p), bound)).count() as i64)
        .collect()
}

fn part(p: &[u32]) -> Partition {
    Partition::new(&p.iter().map(|&x| i64::from(x)).collect::<Vec<_>>()).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn check_o_plus_e(max: u32) -> Check {
    for n in 0..=max {
        for p in partitions_of(n) {
            let q = part(&p);
            let (o, e) = (StatisticId::OddIndexSum.value(&q), StatisticId::EvenIndexSum.value(&q));
            ensure(o + e == i64::from(n) && o >= e, || format!("O/E fail on {q}"))?;
        }
    }
    Ok(())
}

pub fn check_crank_symmetry(max: u32) -> Check {
    for n in 2..=max {
        let pos = count_crank_class(n, Relation::Ge, 1);
        let neg = count_crank_class(n, Relation::Le, -1);
        ensure(pos == neg, || format!("crank symmetry fails at n={n}: {pos} vs {neg}"))?;
    }
    let (pos, neg) = (count_crank_class(1, Relation::Ge, 1), count_crank_class(1, Relation::Le, -1));
    ensure(pos == 0 && neg == 1, || format!("n=1 should be the exception, got {pos} vs {neg}"))
}

pub fn check_crank_classes_partition(max: u32) -> Check {
    let p = partition_numbers(max as usize);
    for n in 0..=max {
        let total: u64 = (-(n as i64) - 1..=n as i64 + 1).map(|c| count_crank_class(n, Relation::Eq, c)).sum();
        ensure(total as i64 == p[n as usize], || format!("crank classes at n={n} sum to {total}"))?;
    }
    Ok(())
}

pub fn check_conjugation(max: u32) -> Check {
    for n in 0..=max {
        for p in partitions_of(n) {
            let q = part(&p);
            let c = q.conjugate();
            ensure(c.norm() == q.norm() && c.conjugate() == q && c.parts() == conj(&p).as_slice(), || {
                format!("conjugation fails on {q}")
            })?;
            let o_conj: u32 = p.iter().map(|x| x.div_ceil(2)).sum();
            ensure(StatisticId::OddIndexSumOfConjugate.value(&q) == i64::from(o_conj), || format!("O(π') fails on {q}"))?;
        }
    }
    Ok(())
}

pub fn check_weight_decomposition(max: u32) -> Check {
    let rr1 = ConstraintSpec::rogers_ramanujan_1();
    for n in 0..=max {
        for q in enumerate_by_norm(&rr1, n) {
            let w12 = weight(WeightId::Omega { k: 1, m: 2 }, &q);
            let w22 = weight(WeightId::Omega { k: 2, m: 2 }, &q);
            let t1 = weight(WeightId::Tilde1, &q);
            let t2 = weight(WeightId::Tilde2, &q);
            ensure(w12 == w22 + t1 && t2 == w22 - t1, || format!("decomposition fails on {q}"))?;
        }
    }
    Ok(())
}

pub fn check_nesting(max: u32) -> Check {
    let chain = [
        ConstraintSpec::rogers_ramanujan_2(),
        ConstraintSpec::rogers_ramanujan_1(),
        ConstraintSpec::distinct(),
        ConstraintSpec::unrestricted(),
    ];
    for n in 0..=max {
        let lists: Vec<Vec<Partition>> = chain.iter().map(|s| enumerate_by_norm(s, n)).collect();
        for pair in lists.windows(2) {
            ensure(pair[0].iter().all(|p| pair[1].contains(p)), || format!("nesting fails at n={n}"))?;
        }
    }
    Ok(())
}

pub fn check_omega_positivity(max_parts: u32, max_norm: u32) -> Check {
    for m_parts in 0..=max_parts {
        for k in 1..=3 {
            for m in 0..=3 {
                let spec = ConstraintSpec::exact(m_parts, k, m);
                for n in 0..=max_norm {
                    for q in enumerate_by_norm(&spec, n) {
                        let w = weight(WeightId::Omega { k, m }, &q);
                        ensure(w >= 1, || format!("ω_{{{k},{m}}}({q}) = {w}"))?;
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn check_membership(max: u32) -> Check {
    let specs = [
        ConstraintSpec::unrestricted(),
        ConstraintSpec::distinct(),
        ConstraintSpec::distinct_even(),
        ConstraintSpec::distinct_odd(),
        ConstraintSpec::rogers_ramanujan_1(),
        ConstraintSpec::rogers_ramanujan_2(),
        ConstraintSpec::small_gaps(),
        ConstraintSpec::parts_mod5_pm1(),
        ConstraintSpec::parts_mod5_pm2(),
        ConstraintSpec::odd_parts(),
        ConstraintSpec::exact(3, 2, 1),
        ConstraintSpec::at_most(Some(2), 1, 2),
    ];
    for n in 0..=max {
        let all = partitions_of(n);
        for spec in &specs {
            let listed = enumerate_by_norm(spec, n);
            let filtered: Vec<Partition> = all.iter().map(|p| part(p)).filter(|p| spec.member(p)).collect();
            ensure(listed == filtered, || format!("{spec:?} at n={n}: {} listed vs {} members", listed.len(), filtered.len()))?;
        }
    }
    Ok(())
}

pub fn check_min_partition() -> Check {
    for m_parts in 1..=4 {
        for k in 1..=3 {
            for m in 0..=3 {
                let mp = min_partition(m_parts, k, m);
                let spec = ConstraintSpec::exact(m_parts, k, m);
                ensure(spec.member(&mp), || format!("{mp} not in P_{m_parts}({k},{m})"))?;
                let n = mp.norm() as u32;
                ensure(enumerate_by_norm(&spec, n) == [mp.clone()], || format!("{mp} is not the unique minimum"))?;
                for smaller in 0..n {
                    ensure(enumerate_by_norm(&spec, smaller).is_empty(), || format!("P_{m_parts}({k},{m}) has norm {smaller}"))?;
                }
            }
        }
    }
    Ok(())
}

pub fn check_decoration(max: u32) -> Check {
    for n in 0..=max {
        for p in partitions_of(n) {
            let q = part(&p);
            let [a, b, c, d] = decoration(&q).exponents();
            ensure(a + b + c + d == n && a + b == odd_sum(&p) && c + d == even_sum(&p), || format!("decoration fails on {q}"))?;
            let h = weight(WeightId::Hat1, &q);
            ensure(h > 0 && h & (h - 1) == 0, || format!("ω̂_1({q}) = {h}"))?;
        }
    }
    Ok(())
}

pub fn check_unrestricted_count(max: u32) -> Check {
    let inv = NamedSeries::Product(ProductForm::EulerInverse).expand(max as usize).map_err(|e| e.to_string())?;
    let u = ConstraintSpec::unrestricted();
    let dp = weighted_series(&u, StatisticId::Norm, WeightId::Unit, max as usize).map_err(|e| e.to_string())?;
    let pent = partition_numbers(max as usize);
    for (n, &expected) in pent.iter().enumerate() {
        let mut listed = 0i64;
        for_each_by_norm(&u, n as u32, |_| listed += 1);
        ensure(inv.coeff(n) == expected && dp.coeff(n) == expected && listed == expected, || {
            format!("p({n}): series {} dp {} listed {} recurrence {}", inv.coeff(n), dp.coeff(n), listed, pent[n])
        })?;
    }
    Ok(())
}
